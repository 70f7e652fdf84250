#pragma once

// A small expression language for sheaves on a threefold:
//
//   expr := term ("+" term)*
//   term := atom | "(" expr ")"
//         | "twist(" expr "," int ")" | "dual(" expr ")" | "rdual(" expr ")"
//         | "coker(" expr "->" expr ")" | "ker(" expr "->" expr ")"
//   atom := "O(" int ")" | "TX" ["(" int ")"] | "Omega1" ["(" int ")"] | ident
//
// coker(A -> B) is C in a declared sequence 0 → A → B → C → 0 and
// ker(B -> C) is A. The maps are never represented.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "sheafcalc/chow.hpp"
#include "sheafcalc/cohomology.hpp"

namespace sheafcalc::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct LineAtom {
  std::int64_t t = 0;
};
struct TangentAtom {};
struct CotangentAtom {};
struct NamedAtom {
  std::string id;
};
struct Twist {
  ExprPtr inner;
  std::int64_t t = 0;
};
struct Dual {
  ExprPtr inner;
  bool reflexive_rank2 = false;
};
struct Sum {
  ExprPtr left, right;
};
struct Coker {
  ExprPtr sub, ambient;
};
struct Ker {
  ExprPtr ambient, quotient;
};

struct Expr {
  std::variant<LineAtom, TangentAtom, CotangentAtom, NamedAtom, Twist, Dual, Sum, Coker, Ker> node;
};

bool operator==(const Expr& a, const Expr& b);

ExprPtr line(std::int64_t t);
ExprPtr tangent();
ExprPtr cotangent();
ExprPtr named(std::string id);
ExprPtr twist(ExprPtr e, std::int64_t t);
ExprPtr dual(ExprPtr e);
ExprPtr rdual(ExprPtr e);
ExprPtr sum(ExprPtr a, ExprPtr b);
ExprPtr coker(ExprPtr sub, ExprPtr ambient);
ExprPtr ker(ExprPtr ambient, ExprPtr quotient);

ExprPtr parse(std::string_view src);
// Inverse of parse up to whitespace.
std::string print(const Expr& e);

struct NamedDecl {
  std::string id;
  ChernData chern;
  bool locally_free = false;
  std::optional<cohomology::CohomTable> hints;  // table of the sheaf itself
};

// Immutable snapshot of declarations; copy to extend.
class Environment {
 public:
  Environment() = default;
  Environment with(NamedDecl decl) const;
  const NamedDecl* find(std::string_view id) const;

 private:
  std::map<std::string, NamedDecl, std::less<>> decls_;
};

ChernData chern_of(const Expr& e, const ThreefoldData& X, const Environment& env = {});

// Cohomology over [lo, hi] on P³; atoms come from Bott's formula and
// kernels/cokernels from the long exact sequence.
cohomology::CohomTable cohom_of(const Expr& e, std::int64_t lo, std::int64_t hi,
                                const ThreefoldData& X, const Environment& env = {});

}  // namespace sheafcalc::dsl
