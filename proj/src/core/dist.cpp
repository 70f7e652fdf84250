#include "sheafcalc/dist.hpp"

#include <algorithm>

namespace sheafcalc::dist {

namespace {

void require_generic(const DistributionProfile& p, std::string_view op) {
  if (!p.generic) {
    throw Error(ErrorKind::HypothesisError,
                std::string(op) + " needs a generic distribution (isolated singularities)");
  }
}

int strength(Stability s) {
  switch (s) {
    case Stability::Stable: return 2;
    case Stability::Semistable: return 1;
    case Stability::Inconclusive: return 0;
  }
  return 0;
}

}  // namespace

DistributionProfile p3_profile(std::int64_t d) { return {presets::p3(), 2 - d, true}; }

std::string_view to_string(Stability s) noexcept {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::Semistable: return "Semistable";
    case Stability::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(StabilityReason r) noexcept {
  switch (r) {
    case StabilityReason::RhoBound: return "RhoBound";
    case StabilityReason::TXStable: return "TXStable";
    case StabilityReason::TXSemistable: return "TXSemistable";
    case StabilityReason::HypothesisFails: return "HypothesisFails";
  }
  return "HypothesisFails";
}

std::string_view to_string(Sing1F s) noexcept {
  switch (s) {
    case Sing1F::Empty: return "empty";
    case Sing1F::IrreducibleReduced: return "irred";
    case Sing1F::Other: return "other";
  }
  return "other";
}

std::string_view to_string(Split s) noexcept {
  return s == Split::Splits ? "Splits" : "Unknown";
}

std::string_view to_string(SingStructure s) noexcept {
  switch (s) {
    case SingStructure::YEqualsSing1G: return "YEqualsSing1G";
    case SingStructure::UnionWithSing1F: return "UnionWithSing1F";
    case SingStructure::CaseSplit: return "CaseSplit";
  }
  return "CaseSplit";
}

// Two independent sufficient conditions: c1(T_F) against 2ρ_X, and the
// stability of TX. The stronger conclusion wins.
StabilityVerdict stability_classify(const DistributionProfile& p) {
  require_generic(p, "stability_classify");
  const std::int64_t rho = p.X.rho();
  if (!p.X.h1_line_vanishing) return {Stability::Inconclusive, StabilityReason::HypothesisFails};

  StabilityVerdict by_rho{Stability::Inconclusive, StabilityReason::HypothesisFails};
  if (p.f < 2 * rho) {
    by_rho = {Stability::Stable, StabilityReason::RhoBound};
  } else if (p.f == 2 * rho) {
    by_rho = {Stability::Semistable, StabilityReason::RhoBound};
  }

  StabilityVerdict by_tx{Stability::Inconclusive, StabilityReason::HypothesisFails};
  if (p.X.tx_stable == TangentStability::Stable) {
    by_tx = {Stability::Stable, StabilityReason::TXStable};
  } else if (p.X.tx_stable == TangentStability::Semistable) {
    by_tx = {Stability::Semistable, StabilityReason::TXSemistable};
  }

  return strength(by_tx.status) > strength(by_rho.status) ? by_tx : by_rho;
}

ChernData dist_chern(const DistributionProfile& p) {
  require_generic(p, "dist_chern");
  const ThreefoldData& X = p.X;
  const BigInt kappa = p.kappa();
  ChernData c;
  c.rank = 2;
  c.c1 = p.f;
  c.n2 = narrow(BigInt(X.c2TX_H) - kappa * X.cX * X.h3 + kappa * kappa * X.h3);
  c.n3 = narrow(-BigInt(twist_chern(tangent_bundle(X), -p.kappa(), X).n3));
  return c;
}

ChernData dist_chern_from_sequence(const DistributionProfile& p) {
  require_generic(p, "dist_chern_from_sequence");
  const ThreefoldData& X = p.X;
  // Z is the zero scheme of the twisted 1-form, a section of Ω¹(κ).
  const std::int64_t length = twist_chern(cotangent_bundle(X), p.kappa(), X).n3;
  const ChernData ideal = ses_third(std::nullopt, line_bundle(p.kappa()), skyscraper(length), X);
  return ses_third(std::nullopt, tangent_bundle(X), ideal, X);
}

std::int64_t singular_length(const DistributionProfile& p) {
  const std::int64_t n3 = dist_chern(p).n3;
  if (n3 < 0) {
    throw Error(ErrorKind::NegativeLength,
                "singular scheme length " + std::to_string(n3) + " is negative");
  }
  return n3;
}

SubfoliationReport subfoliation_analyze(const DistributionProfile& p, std::int64_t tG,
                                        Sing1F sing1F) {
  if (p.generic && sing1F != Sing1F::Empty) {
    throw Error(ErrorKind::HypothesisError,
                "a generic distribution has no 1-dimensional singular part");
  }
  const ThreefoldData& X = p.X;
  SubfoliationReport r;
  r.tG = tG;
  r.lfg_degree = p.f - tG;
  r.split_degree = r.lfg_degree - p.lf_degree();
  r.statement_degree = tG - X.cX + 2 * p.f;

  if (p.generic) {
    const ChernData tf = dist_chern(p);
    const std::int64_t y = narrow(BigInt(tf.n2) - BigInt(tG) * p.f * X.h3 + BigInt(tG) * tG * X.h3);
    if (y < 0) {
      throw Error(ErrorKind::NegativeCurveClass,
                  "c2(T_F(-tG)).H = " + std::to_string(y) + " is negative");
    }
    r.y_class = y;
    try {
      if (cohomology::line_h(X, 1, r.split_degree) == 0) r.split = Split::Splits;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotComputable) throw;
    }
  }

  switch (sing1F) {
    case Sing1F::Empty:
      r.sing_structure = SingStructure::YEqualsSing1G;
      r.branches = {"Y = sing_1(G)", "sing_0(G) empty"};
      break;
    case Sing1F::IrreducibleReduced:
      r.sing_structure = SingStructure::CaseSplit;
      r.branches = {"Y = sing_1(G)", "sing(G) = Y u sing_1(F)"};
      break;
    case Sing1F::Other:
      r.sing_structure = SingStructure::CaseSplit;
      r.branches = {"Y contained in sing_1(G)"};
      break;
  }
  return r;
}

ConnReport conn_components(const DistributionProfile& p, const cohomology::DimEntry& h2_tf_lf,
                           std::int64_t c3_tf, const ConnHypotheses& supplied) {
  if (h2_tf_lf.is_unknown()) {
    throw Error(ErrorKind::MissingInvariant, "h2(T_F x L_F^v) is required");
  }
  if (c3_tf < 0) throw Error(ErrorKind::NegativeLength, "c3(T_F) must be nonnegative");

  const ThreefoldData& X = p.X;
  ConnReport rep;
  if (is_projective_space(X)) {
    const std::int64_t twist = -p.lf_degree();
    rep.hypotheses.h1_tx_lf_vanishes = cohomology::serre_tangent_h(X, 1, twist) == 0;
    rep.hypotheses.h2_tx_lf_vanishes = cohomology::serre_tangent_h(X, 2, twist) == 0;
    rep.hypotheses.h1_ox_vanishes = true;
  } else {
    rep.hypotheses = supplied;
    if (X.h1_line_vanishing) rep.hypotheses.h1_ox_vanishes = true;
  }
  if (!rep.hypotheses.h1_ox_vanishes) {
    throw Error(ErrorKind::HypothesisError, "h1(O_X) = 0 is required");
  }

  // An empty singular scheme has no components; the count below assumes Z ≠ ∅.
  if (p.generic && c3_tf == 0) {
    rep.count = {0, 0};
    rep.source = "emptySingularScheme";
    return rep;
  }

  const bool unbounded = !h2_tf_lf.has_upper();
  auto upper = [&](std::int64_t offset) {
    return unbounded ? cohomology::DimEntry::kUnbounded : h2_tf_lf.hi() - c3_tf + offset;
  };

  if (rep.hypotheses.h1_tx_lf_vanishes && rep.hypotheses.h2_tx_lf_vanishes) {
    rep.count = {h2_tf_lf.lo() - c3_tf + 1, upper(1)};
    rep.source = "thmE";
  } else if (is_projective_space(X) && rep.hypotheses.h1_tx_lf_vanishes) {
    // d = 2: h²(T(−4)) = 1 leaves one connecting map undetermined.
    rep.count = {h2_tf_lf.lo() - c3_tf, upper(1)};
    rep.source = "corP3d2";
  } else {
    throw Error(ErrorKind::HypothesisError,
                "h1(TX x L_F^v) = h2(TX x L_F^v) = 0 is required");
  }

  if (rep.count.hi < 0) {
    throw Error(ErrorKind::NegativeCount, "component count " + std::to_string(rep.count.hi) +
                                              " is negative");
  }
  rep.count.lo = std::max<std::int64_t>(rep.count.lo, 0);
  return rep;
}

cohomology::DimEntry generic_h2_tf_lf(std::int64_t d) {
  return cohomology::generic_dist_cohom(d, -d - 2)[2];
}

}  // namespace sheafcalc::dist
