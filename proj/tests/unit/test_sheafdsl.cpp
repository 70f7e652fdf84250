#include <random>

#include "doctest.h"
#include "sheafcalc/sheafdsl.hpp"

using namespace sheafcalc;
using namespace sheafcalc::dsl;
using cohomology::DimEntry;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an engine error");
  return ErrorKind::Overflow;
}

std::size_t syntax_offset(std::string_view src) {
  try {
    parse(src);
  } catch (const SyntaxError& e) {
    return e.offset();
  }
  FAIL("expected a syntax error");
  return 0;
}

struct Gen {
  std::mt19937_64 rng;
  bool with_sequences = true;

  std::int64_t small() { return std::uniform_int_distribution<std::int64_t>(-9, 9)(rng); }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  ExprPtr atom() {
    static const char* names[] = {"F", "G", "E_1", "sheaf2"};
    switch (pick(4)) {
      case 0: return line(small());
      case 1: return tangent();
      case 2: return cotangent();
      default: return named(names[pick(4)]);
    }
  }

  ExprPtr expr(int depth) {
    if (depth == 0) return atom();
    const int n = with_sequences ? 7 : 5;
    switch (pick(n)) {
      case 0: return atom();
      case 1: return twist(expr(depth - 1), small());
      case 2: return dual(expr(depth - 1));
      case 3: return rdual(expr(depth - 1));
      case 4: return sum(expr(depth - 1), expr(depth - 1));
      case 5: return coker(expr(depth - 1), expr(depth - 1));
      default: return ker(expr(depth - 1), expr(depth - 1));
    }
  }
};

// Expressions whose Chern data are always defined: line bundles, TX, Ω¹,
// twists, duals and sums.
ExprPtr bundle_expr(Gen& g, int depth) {
  if (depth == 0 || g.pick(3) == 0) {
    switch (g.pick(3)) {
      case 0: return line(g.small());
      case 1: return tangent();
      default: return cotangent();
    }
  }
  switch (g.pick(3)) {
    case 0: return twist(bundle_expr(g, depth - 1), g.small());
    case 1: return dual(bundle_expr(g, depth - 1));
    default: return sum(bundle_expr(g, depth - 1), bundle_expr(g, depth - 1));
  }
}

ExprPtr sqcf(std::int64_t d) {
  return coker(line(-2 * d), twist(cotangent(), 2 - d));
}

}  // namespace

TEST_SUITE("sheafdsl") {

TEST_CASE("parse examples") {
  CHECK(*parse("coker(O(-2) -> Omega1(1))") == *coker(line(-2), twist(cotangent(), 1)));
  CHECK(*parse("O(3)") == *line(3));
  CHECK(*parse("  TX ") == *tangent());
  CHECK(*parse("TX(-2)") == *twist(tangent(), -2));
  CHECK(*parse("twist(TX, -2)") == *twist(tangent(), -2));
  CHECK(*parse("rdual(F)") == *rdual(named("F")));
  CHECK(*parse("O(1)+O(2)+O(3)") == *sum(sum(line(1), line(2)), line(3)));
  CHECK(*parse("O(1)+(O(2)+O(3))") == *sum(line(1), sum(line(2), line(3))));
  CHECK(*parse("ker(TX->O(4))") == *ker(tangent(), line(4)));
  CHECK(print(*parse("coker( O(-2)->Omega1( 1 ) )")) == "coker(O(-2) -> Omega1(1))");
}

TEST_CASE("syntax errors carry offsets") {
  CHECK(syntax_offset("") == 0);
  CHECK(syntax_offset("O(") == 2);
  CHECK(syntax_offset("O(3") == 3);
  CHECK(syntax_offset("O(3) +") == 6);
  CHECK(syntax_offset("twist(TX 3)") == 9);
  CHECK(syntax_offset("coker(O(1), O(2))") == 10);
  CHECK(syntax_offset("O(1) O(2)") == 5);
  CHECK(syntax_offset("  foo(O(1))") == 2);
  CHECK(syntax_offset("O(x)") == 2);
  try {
    parse("O(3");
  } catch (const SyntaxError& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
  }
}

TEST_CASE("print and parse round trip on random trees") {
  Gen g{std::mt19937_64(31337)};
  for (int i = 0; i < 300; ++i) {
    const ExprPtr e = g.expr(4);
    const std::string text = print(*e);
    INFO(text);
    const ExprPtr back = parse(text);
    CHECK(*back == *e);
    CHECK(print(*back) == text);
  }
}

TEST_CASE("chern_of examples") {
  const auto X = presets::p3();
  CHECK(chern_of(*parse("coker(O(-2) -> Omega1(1))"), X) == ChernData{2, 1, 3, 5});
  CHECK(chern_of(*parse("rdual(coker(O(-2) -> Omega1(1)))"), X) == ChernData{2, -1, 3, 5});
  CHECK(chern_of(*parse("TX + O(0)"), X) == ChernData{4, 4, 6, 4});
  CHECK(chern_of(*parse("coker(O(0) -> O(1)+O(1)+O(1)+O(1))"), X) == tangent_bundle(X));
  CHECK(chern_of(*parse("dual(Omega1)"), X) == tangent_bundle(X));
  for (std::int64_t d = 0; d <= 20; ++d) {
    CHECK(chern_of(*sqcf(d), X) ==
          ChernData{2, 2 - d, d * d + 2, d * d * d + 2 * d * d + 2 * d});
  }
}

TEST_CASE("evaluation errors") {
  const auto X = presets::p3();
  CHECK(kind_of([&] { chern_of(*parse("coker(Omega1(1) -> O(-2))"), X); }) == ErrorKind::RankError);
  CHECK(kind_of([&] { chern_of(*parse("ker(O(1) -> TX)"), X); }) == ErrorKind::RankError);
  CHECK(kind_of([&] { chern_of(*parse("F + O(1)"), X); }) == ErrorKind::UnknownIdentifier);
  CHECK(kind_of([&] { chern_of(*parse("rdual(TX)"), X); }) == ErrorKind::UnsupportedRank);
  CHECK(kind_of([&] { cohom_of(*parse("O(1)"), 0, 1, presets::quintic()); }) ==
        ErrorKind::NotComputable);
}

TEST_CASE("environment") {
  const auto X = presets::p3();
  const Environment empty;
  const Environment env = empty.with({"F", {2, 0, 6, 20}, false, std::nullopt});
  CHECK(empty.find("F") == nullptr);
  REQUIRE(env.find("F") != nullptr);
  CHECK(chern_of(*parse("twist(F, 2)"), X, env) == ChernData{2, 4, 10, 20});
  CHECK(kind_of([&] { empty.with({"B", {4, 0, 0, 0}, true, std::nullopt}); }) ==
        ErrorKind::UnsupportedRank);

  cohomology::CohomTable hints(0, 0);
  hints.set(2, 0, DimEntry::known(1));
  const Environment hinted = empty.with({"F", {2, 0, 6, 20}, false, hints});
  const auto tab = cohom_of(*parse("F"), -1, 1, X, hinted);
  CHECK(tab.at(2, 0) == DimEntry::known(1));
  CHECK(tab.at(0, 0).is_unknown());
  const auto shifted = cohom_of(*parse("twist(F, 1)"), -1, 1, X, hinted);
  CHECK(shifted.at(2, -1) == DimEntry::known(1));
}

TEST_CASE("Whitney additivity") {
  Gen g{std::mt19937_64(2718)};
  for (const auto& X : presets::builtin()) {
    for (int i = 0; i < 100; ++i) {
      const ExprPtr a = bundle_expr(g, 3), b = bundle_expr(g, 3);
      const ChowClass lhs = chern_to_ch(chern_of(*sum(a, b), X), X);
      const ChowClass rhs = chern_to_ch(chern_of(*a, X), X) + chern_to_ch(chern_of(*b, X), X);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("rdual is an involution on rank 2") {
  const auto X = presets::p3();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> d(0, 12), t(-10, 10);
  for (int i = 0; i < 150; ++i) {
    const ExprPtr e = twist(sqcf(d(rng)), t(rng));
    CHECK(chern_of(*rdual(rdual(e)), X) == chern_of(*e, X));
  }
}

TEST_CASE("cohomology of expressions") {
  const auto X = presets::p3();
  CHECK(cohom_of(*parse("O(-4)"), 0, 0, X).at(3, 0) == DimEntry::known(1));

  const auto f1 = cohom_of(*parse("coker(O(-2) -> Omega1(1))"), -1, 3, X);
  for (std::int64_t p = -1; p <= 3; ++p) {
    const auto expected = cohomology::generic_dist_cohom(1, p);
    for (int i = 0; i < 4; ++i) CHECK(f1.at(i, p) == expected[i]);
  }
  CHECK(f1.at(1, -1) == DimEntry::known(1));

  // The locally free shadow of the degree-2 tangent sheaf ignores Z.
  const auto shadow = cohom_of(*parse("ker(TX -> O(4))"), 0, 0, X);
  CHECK(shadow.at(0, 0) == DimEntry::bounded(0, 15));
  CHECK(shadow.at(1, 0) == DimEntry::bounded(20, 35));
  CHECK(cohomology::generic_dist_cohom(2, 0)[1] == DimEntry::known(1));
  CHECK_FALSE(shadow.at(1, 0).contains(1));

  // Serre duality through dual() on a bundle.
  const auto dtx = cohom_of(*parse("dual(TX)"), -6, 6, X);
  const auto om = cohom_of(*parse("Omega1"), -6, 6, X);
  for (std::int64_t t = -6; t <= 6; ++t)
    for (int i = 0; i < 4; ++i) CHECK(dtx.at(i, t) == om.at(i, t));
}

TEST_CASE("known columns satisfy Riemann-Roch") {
  const auto X = presets::p3();
  Gen g{std::mt19937_64(4096)};
  const Environment env = Environment{}
                              .with({"F", {2, 0, 6, 20}, false, std::nullopt})
                              .with({"G", {1, 0, 0, 0}, true, std::nullopt})
                              .with({"E_1", {3, 4, 6, 4}, true, std::nullopt})
                              .with({"sheaf2", {2, 2, 2, 0}, true, std::nullopt});
  int evaluated = 0;
  for (int i = 0; i < 400 && evaluated < 150; ++i) {
    const ExprPtr e = g.expr(3);
    ChernData c;
    try {
      c = chern_of(*e, X, env);
    } catch (const Error&) {
      continue;  // rank errors and rdual of the wrong rank
    }
    cohomology::CohomTable tab;
    try {
      tab = cohom_of(*e, -3, 3, X, env);
    } catch (const Error& err) {
      // Random sequences may be impossible; the chaser must say so.
      CHECK(err.kind() == ErrorKind::Inconsistent);
      continue;
    }
    ++evaluated;
    for (std::int64_t t = -3; t <= 3; ++t) {
      const auto col = tab.column(t);
      if (!(col[0].is_known() && col[1].is_known() && col[2].is_known() && col[3].is_known()))
        continue;
      const std::int64_t alt = col[0].value() - col[1].value() + col[2].value() - col[3].value();
      CHECK(alt == hrr_chi(twist_any_rank(c, t, X), X));
    }
  }
  CHECK(evaluated >= 100);
}

}  // TEST_SUITE
