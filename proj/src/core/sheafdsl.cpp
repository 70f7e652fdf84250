#include "sheafcalc/sheafdsl.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace sheafcalc::dsl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse_all() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError(pos_, "empty expression");
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (src_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) throw SyntaxError(pos_, "expected '" + std::string(tok) + "'");
  }

  std::int64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < src_.size() && src_[end] == '-') ++end;
    while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + end, v);
    if (ec != std::errc() || ptr != src_.data() + end || end == start) {
      throw SyntaxError(start, "expected an integer");
    }
    pos_ = end;
    return v;
  }

  std::string parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= src_.size() || !is_ident_start(src_[pos_])) {
      throw SyntaxError(pos_, "expected a sheaf expression");
    }
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (accept("+")) e = sum(e, parse_term());
    return e;
  }

  ExprPtr parse_arrow_pair(bool is_coker) {
    expect("(");
    ExprPtr a = parse_expr();
    expect("->");
    ExprPtr b = parse_expr();
    expect(")");
    return is_coker ? coker(a, b) : ker(a, b);
  }

  ExprPtr parse_term() {
    if (accept("(")) {
      ExprPtr e = parse_expr();
      expect(")");
      return e;
    }
    skip_ws();
    const std::size_t at = pos_;
    const std::string id = parse_ident();
    if (id == "O") {
      expect("(");
      const std::int64_t t = parse_int();
      expect(")");
      return line(t);
    }
    if (id == "TX" || id == "Omega1") {
      ExprPtr base = id == "TX" ? tangent() : cotangent();
      if (accept("(")) {
        const std::int64_t t = parse_int();
        expect(")");
        return twist(base, t);
      }
      return base;
    }
    if (id == "twist") {
      expect("(");
      ExprPtr e = parse_expr();
      expect(",");
      const std::int64_t t = parse_int();
      expect(")");
      return twist(e, t);
    }
    if (id == "dual" || id == "rdual") {
      expect("(");
      ExprPtr e = parse_expr();
      expect(")");
      return id == "dual" ? dual(e) : rdual(e);
    }
    if (id == "coker") return parse_arrow_pair(true);
    if (id == "ker") return parse_arrow_pair(false);
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '(') {
      throw SyntaxError(at, "unknown function '" + id + "'");
    }
    return named(id);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void print_to(std::ostream& os, const Expr& e) {
  std::visit(overloaded{
                 [&](const LineAtom& a) { os << "O(" << a.t << ')'; },
                 [&](const TangentAtom&) { os << "TX"; },
                 [&](const CotangentAtom&) { os << "Omega1"; },
                 [&](const NamedAtom& a) { os << a.id; },
                 [&](const Twist& t) {
                   if (std::holds_alternative<TangentAtom>(t.inner->node) ||
                       std::holds_alternative<CotangentAtom>(t.inner->node)) {
                     print_to(os, *t.inner);
                     os << '(' << t.t << ')';
                   } else {
                     os << "twist(";
                     print_to(os, *t.inner);
                     os << ", " << t.t << ')';
                   }
                 },
                 [&](const Dual& d) {
                   os << (d.reflexive_rank2 ? "rdual(" : "dual(");
                   print_to(os, *d.inner);
                   os << ')';
                 },
                 [&](const Sum& s) {
                   print_to(os, *s.left);
                   os << " + ";
                   const bool nested = std::holds_alternative<Sum>(s.right->node);
                   if (nested) os << '(';
                   print_to(os, *s.right);
                   if (nested) os << ')';
                 },
                 [&](const Coker& c) {
                   os << "coker(";
                   print_to(os, *c.sub);
                   os << " -> ";
                   print_to(os, *c.ambient);
                   os << ')';
                 },
                 [&](const Ker& k) {
                   os << "ker(";
                   print_to(os, *k.ambient);
                   os << " -> ";
                   print_to(os, *k.quotient);
                   os << ')';
                 },
             },
             e.node);
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const LineAtom& x) { return x.t == std::get<LineAtom>(b.node).t; },
          [&](const TangentAtom&) { return true; },
          [&](const CotangentAtom&) { return true; },
          [&](const NamedAtom& x) { return x.id == std::get<NamedAtom>(b.node).id; },
          [&](const Twist& x) {
            const auto& y = std::get<Twist>(b.node);
            return x.t == y.t && *x.inner == *y.inner;
          },
          [&](const Dual& x) {
            const auto& y = std::get<Dual>(b.node);
            return x.reflexive_rank2 == y.reflexive_rank2 && *x.inner == *y.inner;
          },
          [&](const Sum& x) {
            const auto& y = std::get<Sum>(b.node);
            return *x.left == *y.left && *x.right == *y.right;
          },
          [&](const Coker& x) {
            const auto& y = std::get<Coker>(b.node);
            return *x.sub == *y.sub && *x.ambient == *y.ambient;
          },
          [&](const Ker& x) {
            const auto& y = std::get<Ker>(b.node);
            return *x.ambient == *y.ambient && *x.quotient == *y.quotient;
          },
      },
      a.node);
}

ExprPtr line(std::int64_t t) { return make(LineAtom{t}); }
ExprPtr tangent() { return make(TangentAtom{}); }
ExprPtr cotangent() { return make(CotangentAtom{}); }
ExprPtr named(std::string id) { return make(NamedAtom{std::move(id)}); }
ExprPtr twist(ExprPtr e, std::int64_t t) { return make(Twist{std::move(e), t}); }
ExprPtr dual(ExprPtr e) { return make(Dual{std::move(e), false}); }
ExprPtr rdual(ExprPtr e) { return make(Dual{std::move(e), true}); }
ExprPtr sum(ExprPtr a, ExprPtr b) { return make(Sum{std::move(a), std::move(b)}); }
ExprPtr coker(ExprPtr sub, ExprPtr ambient) { return make(Coker{std::move(sub), std::move(ambient)}); }
ExprPtr ker(ExprPtr ambient, ExprPtr quotient) { return make(Ker{std::move(ambient), std::move(quotient)}); }

ExprPtr parse(std::string_view src) { return Parser(src).parse_all(); }

std::string print(const Expr& e) {
  std::ostringstream os;
  print_to(os, e);
  return os.str();
}

Environment Environment::with(NamedDecl decl) const {
  if (decl.chern.rank < 0 || decl.chern.rank > 3) {
    throw Error(ErrorKind::UnsupportedRank, "declared sheaves have rank at most 3");
  }
  Environment out = *this;
  std::string key = decl.id;
  out.decls_[key] = std::move(decl);
  return out;
}

const NamedDecl* Environment::find(std::string_view id) const {
  auto it = decls_.find(id);
  return it == decls_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------

namespace {

const NamedDecl& lookup(const Environment& env, const std::string& id) {
  const NamedDecl* d = env.find(id);
  if (!d) throw Error(ErrorKind::UnknownIdentifier, "undeclared sheaf '" + id + "'");
  return *d;
}

void check_rank(std::int64_t big, std::int64_t small, std::string_view op) {
  if (big - small < 0) {
    throw Error(ErrorKind::RankError, std::string(op) + " has negative rank " +
                                          std::to_string(big - small));
  }
}

}  // namespace

ChernData chern_of(const Expr& e, const ThreefoldData& X, const Environment& env) {
  return std::visit(
      overloaded{
          [&](const LineAtom& a) { return line_bundle(a.t); },
          [&](const TangentAtom&) { return tangent_bundle(X); },
          [&](const CotangentAtom&) { return cotangent_bundle(X); },
          [&](const NamedAtom& a) { return lookup(env, a.id).chern; },
          [&](const Twist& t) { return twist_any_rank(chern_of(*t.inner, X, env), t.t, X); },
          [&](const Dual& d) {
            const ChernData c = chern_of(*d.inner, X, env);
            return d.reflexive_rank2 ? reflexive_dual_rank2(c, X) : dual_any_rank(c, X);
          },
          [&](const Sum& s) {
            return direct_sum(chern_of(*s.left, X, env), chern_of(*s.right, X, env), X);
          },
          [&](const Coker& c) {
            const ChernData a = chern_of(*c.sub, X, env);
            const ChernData b = chern_of(*c.ambient, X, env);
            check_rank(b.rank, a.rank, "coker");
            return ses_third(a, b, std::nullopt, X);
          },
          [&](const Ker& k) {
            const ChernData b = chern_of(*k.ambient, X, env);
            const ChernData c = chern_of(*k.quotient, X, env);
            check_rank(b.rank, c.rank, "ker");
            return ses_third(std::nullopt, b, c, X);
          },
      },
      e.node);
}

namespace {

using cohomology::CohomTable;
using cohomology::DimEntry;

struct Evaluated {
  CohomTable table;
  bool locally_free = false;
};

Evaluated evaluate(const Expr& e, std::int64_t lo, std::int64_t hi, const ThreefoldData& X,
                   const Environment& env) {
  return std::visit(
      overloaded{
          [&](const LineAtom& a) { return Evaluated{cohomology::line_table(a.t, lo, hi), true}; },
          [&](const TangentAtom&) { return Evaluated{cohomology::tangent_table(0, lo, hi), true}; },
          [&](const CotangentAtom&) {
            return Evaluated{cohomology::omega_table(1, 0, lo, hi), true};
          },
          [&](const NamedAtom& a) {
            const NamedDecl& d = lookup(env, a.id);
            CohomTable tab(lo, hi, d.chern);
            if (d.hints) {
              for (std::int64_t t = std::max(lo, d.hints->lo()); t <= std::min(hi, d.hints->hi()); ++t)
                tab.set_column(t, d.hints->column(t));
            }
            return Evaluated{tab, d.locally_free};
          },
          [&](const Twist& t) {
            Evaluated in = evaluate(*t.inner, lo + t.t, hi + t.t, X, env);
            return Evaluated{in.table.shifted(t.t, X), in.locally_free};
          },
          [&](const Dual& d) {
            const ChernData c = chern_of(e, X, env);
            if (d.reflexive_rank2) {
              // F^∨ ≅ F(−c1(F)).
              const std::int64_t s = -chern_of(*d.inner, X, env).c1;
              Evaluated in = evaluate(*d.inner, lo + s, hi + s, X, env);
              return Evaluated{in.table.shifted(s, X), in.locally_free};
            }
            Evaluated in = evaluate(*d.inner, -hi - 4, -lo - 4, X, env);
            CohomTable tab(lo, hi, c);
            if (in.locally_free) {
              // Serre duality with ω = O(−4).
              for (std::int64_t t = lo; t <= hi; ++t)
                for (int i = 0; i < 4; ++i) tab.set(i, t, in.table.at(3 - i, -t - 4));
            }
            return Evaluated{tab, in.locally_free};
          },
          [&](const Sum& s) {
            Evaluated a = evaluate(*s.left, lo, hi, X, env);
            Evaluated b = evaluate(*s.right, lo, hi, X, env);
            CohomTable tab(lo, hi, chern_of(e, X, env));
            for (std::int64_t t = lo; t <= hi; ++t)
              for (int i = 0; i < 4; ++i) tab.set(i, t, a.table.at(i, t) + b.table.at(i, t));
            return Evaluated{tab, a.locally_free && b.locally_free};
          },
          [&](const Coker& c) {
            const ChernData quotient = chern_of(e, X, env);
            Evaluated a = evaluate(*c.sub, lo, hi, X, env);
            Evaluated b = evaluate(*c.ambient, lo, hi, X, env);
            auto out = cohomology::les_chase({a.table, b.table, CohomTable(lo, hi, quotient)}, X);
            return Evaluated{out.quotient, false};
          },
          [&](const Ker& k) {
            const ChernData sub = chern_of(e, X, env);
            Evaluated b = evaluate(*k.ambient, lo, hi, X, env);
            Evaluated c = evaluate(*k.quotient, lo, hi, X, env);
            auto out = cohomology::les_chase({CohomTable(lo, hi, sub), b.table, c.table}, X);
            return Evaluated{out.sub, b.locally_free && c.locally_free};
          },
      },
      e.node);
}

}  // namespace

cohomology::CohomTable cohom_of(const Expr& e, std::int64_t lo, std::int64_t hi,
                                const ThreefoldData& X, const Environment& env) {
  if (!is_projective_space(X)) {
    throw Error(ErrorKind::NotComputable, "cohomology tables are only available on P3");
  }
  if (hi < lo) throw Error(ErrorKind::DomainError, "empty twist range");
  chern_of(e, X, env);  // surfaces rank and identifier errors first
  return evaluate(e, lo, hi, X, env).table;
}

}  // namespace sheafcalc::dsl
