#include <random>

#include "doctest.h"
#include "sheafcalc/cohomology.hpp"
#include "sheafcalc/dist.hpp"
#include "sheafcalc/modulispec.hpp"

using namespace sheafcalc;
using namespace sheafcalc::modulispec;

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

}  // namespace

TEST_SUITE("modulispec") {

TEST_CASE("moduli report examples") {
  const auto r1 = moduli_report(1);
  CHECK(r1.dim_component == 19);
  CHECK(r1.chern == ChernData{2, 1, 3, 5});
  CHECK(r1.normalized == ChernData{2, -1, 3, 5});
  CHECK(r1.rational == std::optional<bool>(true));
  CHECK(r1.smooth_point);

  const auto r0 = moduli_report(0);
  CHECK(r0.ext1 == 5);
  CHECK(r0.chern == ChernData{2, 2, 2, 0});
  CHECK(r0.normalized == ChernData{2, 0, 1, 0});

  const auto r2 = moduli_report(2);
  CHECK(r2.dim_component == 45);
  CHECK(r2.family_dim == 44);
  CHECK(r2.ext2 == 0);
  CHECK(r2.smooth_point);
  CHECK_FALSE(r2.rational.has_value());

  CHECK(moduli_report(4).ext2 == 6);
  CHECK(kind_of([] { moduli_report(-1); }) == ErrorKind::DomainError);
}

TEST_CASE("component dimension identity") {
  for (std::int64_t d = 0; d <= 50; ++d) {
    const auto r = moduli_report(d);
    CHECK(r.ext1 - r.ext2 == 6 * d * d + 8 * d + 5);
    if (d == 2) continue;
    const std::int64_t lhs = (d + 1) * (d + 3) * (d + 4) / 2 - 1;
    CHECK(cohomology::bott_h(1, 0, d + 2) - 1 == lhs);
    CHECK(lhs == 6 * d * d + 8 * d + 5 + ext2_dimension(d));
    CHECK(r.dim_component == lhs);
    CHECK(r.family_dim == lhs);
  }
}

TEST_CASE("ext2 from cohomology") {
  CHECK(ext2_dimension(0) == 0);
  CHECK(ext2_dimension(1) == 0);
  CHECK(ext2_dimension(2) == 0);
  for (std::int64_t d = 3; d <= 50; ++d) {
    CHECK(ext2_from_cohomology(d) == d * (d - 1) * (d - 3) / 2);
    CHECK(ext2_dimension(d) == ext2_from_cohomology(d));
    CHECK(ext2_from_cohomology(d) == 4 * binomial(d, 3) - binomial(d + 1, 3));
  }
}

TEST_CASE("global generation resolution") {
  const auto r1 = global_gen_resolution(1);
  CHECK(r1.h0_Fd == 6);
  CHECK(r1.middle_rank == 6);
  CHECK(r1.kernel_has_line);
  CHECK(r1.kernel_line_twist == -1);

  const auto r0 = global_gen_resolution(0);
  CHECK(r0.h0_Fd == 5);
  CHECK_FALSE(r0.kernel_has_line);
  CHECK(r0.kernel == ChernData{3, -2, 2, 0});

  // F(2) for F = (2, 0, 6, 20): c2 = 6 + 0 + 4 = 10.
  CHECK(global_gen_resolution(2).cokernel == ChernData{2, 4, 10, 20});

  for (std::int64_t d = 0; d <= 50; ++d) {
    const auto r = global_gen_resolution(d);
    CHECK(r.cokernel == twist_chern(dist::dist_chern(dist::p3_profile(d)), d, presets::p3()));
  }
  CHECK(kind_of([] { global_gen_resolution(-3); }) == ErrorKind::DomainError);
}

TEST_CASE("curve family") {
  const auto c1 = curve_family(1);
  CHECK(c1.degree == 5);
  CHECK(c1.genus == 1);
  CHECK(c1.points == 5);
  CHECK(c1.family_dim == 5);
  const auto c2 = curve_family(2);
  CHECK(c2.degree == 10);
  CHECK(c2.genus == 11);
  CHECK(c2.points == 20);
  const auto c3 = curve_family(3);
  CHECK(c3.c3_twisted == 51);
  CHECK(c3.c3_from_genus == 51);
  for (std::int64_t d = 1; d <= 50; ++d) {
    const auto c = curve_family(d);
    CHECK(c.points == d * c.degree);
    CHECK(c.genus - 1 == (d - 1) * c.degree);
    CHECK(c.c3_twisted == c.c3_from_genus);
    CHECK(c.c3_twisted == c.points);
    CHECK(c.family_dim == 5);
  }
  CHECK(kind_of([] { curve_family(0); }) == ErrorKind::DomainError);
}

TEST_CASE("spectrum points") {
  CHECK(spectrum_point(presets::p3(), 3).triple == ChernData{2, 1, 3, 5});
  CHECK(spectrum_point(presets::quintic(), 2).triple == ChernData{2, -2, 70, 340});
  CHECK(kind_of([] { spectrum_point(presets::p3(), 1); }) == ErrorKind::HypothesisError);
  CHECK(kind_of([] { spectrum_point(presets::quadric(), 3); }) == ErrorKind::MissingInvariant);
  ThreefoldData big = presets::p3();
  big.rhoX = 1;
  big.gammaX = 1;
  big.tx_stable = TangentStability::Unknown;
  CHECK(kind_of([&] { spectrum_point(big, 3); }) == ErrorKind::HypothesisError);

  for (std::int64_t r = 2; r <= 10; ++r) {
    CHECK(spectrum_point(presets::quintic(), r).triple.n3 == 200 + 50 * r + 5 * r * r * r);
  }
  for (std::int64_t r = 2; r <= 20; ++r) {
    CHECK(spectrum_point(presets::p3(), r).triple ==
          dist::dist_chern({presets::p3(), presets::p3().cX - r, true}));
  }
}

TEST_CASE("Picard action and normalization") {
  const auto X = presets::p3();
  CHECK(normalize_rank2({2, 1, 3, 5}, X) == ChernData{2, -1, 3, 5});
  CHECK(normalize(spectrum_point(presets::quintic(), 2)).triple == ChernData{2, 0, 65, 340});
  CHECK(kind_of([&] { normalize_rank2({3, 4, 6, 4}, X); }) == ErrorKind::UnsupportedRank);

  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int64_t> r(2, 30), t(-15, 15);
  for (int i = 0; i < 200; ++i) {
    const auto& Y = i % 2 == 0 ? presets::p3() : presets::quintic();
    const SpectrumPoint p = spectrum_point(Y, r(rng));
    const std::int64_t s = t(rng);
    const SpectrumPoint moved = pic_act(p, s);
    CHECK(pic_act(moved, -s).triple == p.triple);
    CHECK(moved.triple.n3 == p.triple.n3);
    CHECK(moved.triple.c1 == p.triple.c1 + 2 * s);
    const SpectrumPoint n = normalize(moved);
    CHECK((n.triple.c1 == 0 || n.triple.c1 == -1));
    CHECK(normalize(n).triple == n.triple);
    CHECK(n.triple == normalize(p).triple);
  }
}

}  // TEST_SUITE
