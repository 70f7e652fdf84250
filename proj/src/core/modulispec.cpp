#include "sheafcalc/modulispec.hpp"

#include "sheafcalc/cohomology.hpp"
#include "sheafcalc/dist.hpp"

namespace sheafcalc::modulispec {

namespace {

void require_degree_at_least(std::int64_t d, std::int64_t min) {
  if (d < min) {
    throw Error(ErrorKind::DomainError,
                "degree must be at least " + std::to_string(min) + ", got " + std::to_string(d));
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::int64_t ext2_dimension(std::int64_t d) {
  require_degree_at_least(d, 0);
  if (d <= 2) return 0;
  return narrow(BigInt(d) * (d - 1) * (d - 3) / 2);
}

std::int64_t ext2_from_cohomology(std::int64_t d) {
  require_degree_at_least(d, 3);
  return 4 * cohomology::bott_h(0, 0, d - 3) - cohomology::bott_h(0, 0, d - 2);
}

ModuliReport moduli_report(std::int64_t d) {
  require_degree_at_least(d, 0);
  const ThreefoldData X = presets::p3();
  ModuliReport rep;
  rep.d = d;
  rep.chern = dist::dist_chern(dist::p3_profile(d));
  rep.normalized = normalize_rank2(rep.chern, X);
  rep.ext2 = ext2_dimension(d);
  // dim Ext¹ − dim Ext² = 8c2 − 2c1² − 3 for a stable rank-2 reflexive sheaf on P³.
  rep.ext1 = narrow(8 * BigInt(rep.chern.n2) - 2 * BigInt(rep.chern.c1) * rep.chern.c1 - 3) +
             rep.ext2;
  rep.smooth_point = rep.ext2 == 0 || d != 2;

  // Each sheaf is a section of Ω¹(d+2) up to scale.
  const std::int64_t family = cohomology::bott_h(1, 0, d + 2) - 1;
  if (d == 2) {
    rep.dim_component = rep.ext1;
    rep.family_dim = family;
    rep.rational = std::nullopt;
  } else {
    if (family != rep.ext1) {
      throw Error(ErrorKind::Inconsistent, "component dimension " + std::to_string(family) +
                                               " differs from dim Ext1 " +
                                               std::to_string(rep.ext1));
    }
    rep.dim_component = family;
    rep.family_dim = family;
    rep.rational = true;
  }
  return rep;
}

GlobalGenResolution global_gen_resolution(std::int64_t d) {
  require_degree_at_least(d, 0);
  const ThreefoldData X = presets::p3();
  GlobalGenResolution res;
  res.d = d;
  const ChernData t_minus_2 = twist_chern(tangent_bundle(X), -2, X);
  if (d >= 1) {
    res.middle_rank = cohomology::bott_h(1, 0, 2);
    res.kernel_has_line = true;
    res.kernel_line_twist = -d;
    res.kernel = direct_sum(t_minus_2, line_bundle(-d), X);
  } else {
    res.middle_rank = cohomology::generic_dist_cohom(0, 0)[0].value();
    res.kernel = t_minus_2;
  }
  res.h0_Fd = res.middle_rank;
  res.cokernel = ses_third(res.kernel, ChernData{res.middle_rank, 0, 0, 0}, std::nullopt, X);

  const ChernData expected = twist_chern(dist::dist_chern(dist::p3_profile(d)), d, X);
  if (res.cokernel != expected) {
    throw Error(ErrorKind::Inconsistent, "resolution cokernel " + to_string(res.cokernel) +
                                             " differs from F(d) " + to_string(expected));
  }
  return res;
}

CurveFamilyReport curve_family(std::int64_t d) {
  require_degree_at_least(d, 1);
  const ThreefoldData X = presets::p3();
  CurveFamilyReport rep;
  rep.d = d;
  const BigInt b = d;
  rep.degree = narrow(b * b + 2 * b + 2);
  rep.genus = narrow((b - 1) * rep.degree + 1);
  rep.points = narrow(b * rep.degree);
  rep.family_dim = cohomology::bott_h(1, 0, 2) - 1;

  const ChernData fd = twist_chern(dist::dist_chern(dist::p3_profile(d)), d, X);
  if (fd.n2 != rep.degree) {
    throw Error(ErrorKind::Inconsistent, "c2(F(d)) " + std::to_string(fd.n2) +
                                             " differs from the curve degree");
  }
  rep.c3_twisted = fd.n3;
  rep.c3_from_genus = narrow(2 * BigInt(rep.genus) - 2 + BigInt(fd.n2) * (4 - fd.c1));
  return rep;
}

SpectrumPoint spectrum_point(const ThreefoldData& X, std::int64_t r) {
  const std::int64_t rho = X.rho();
  const std::int64_t gamma = X.gamma();
  if (r < gamma) {
    throw Error(ErrorKind::HypothesisError,
                "r = " + std::to_string(r) + " is below gammaX = " + std::to_string(gamma));
  }
  if (!(X.cX < 3 * rho)) {
    throw Error(ErrorKind::HypothesisError, "cX < 3 rhoX fails for " + X.name);
  }
  return {X, r, dist::dist_chern({X, X.cX - r, true})};
}

SpectrumPoint pic_act(const SpectrumPoint& point, std::int64_t t) {
  if (point.triple.rank != 2) {
    throw Error(ErrorKind::UnsupportedRank, "the spectrum action is defined for rank 2");
  }
  SpectrumPoint out = point;
  out.triple = twist_chern(point.triple, t, point.X);
  return out;
}

ChernData normalize_rank2(const ChernData& c, const ThreefoldData& X) {
  if (c.rank != 2) throw Error(ErrorKind::UnsupportedRank, "normalization is defined for rank 2");
  return twist_chern(c, -floor_div(c.c1 + 1, 2), X);
}

SpectrumPoint normalize(const SpectrumPoint& point) {
  SpectrumPoint out = point;
  out.triple = normalize_rank2(point.triple, point.X);
  return out;
}

}  // namespace sheafcalc::modulispec
