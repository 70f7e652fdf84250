#pragma once

// Numerical invariants of codimension-one distributions
//   0 → T_F → TX → I_Z ⊗ L_F → 0
// on a Picard-rank-one threefold.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sheafcalc/chow.hpp"
#include "sheafcalc/cohomology.hpp"

namespace sheafcalc::dist {

struct DistributionProfile {
  ThreefoldData X;
  std::int64_t f = 0;    // c1(T_F)
  bool generic = false;  // sing(F) empty or 0-dimensional

  std::int64_t kappa() const noexcept { return X.cX - f; }
  std::int64_t lf_degree() const noexcept { return X.cX - f; }  // deg L_F
  // Degree of the distribution; meaningful on P³ only.
  std::int64_t degree() const noexcept { return 2 - f; }
};

// Generic distribution of degree d on P³.
DistributionProfile p3_profile(std::int64_t d);

enum class Stability { Stable, Semistable, Inconclusive };
enum class StabilityReason { RhoBound, TXStable, TXSemistable, HypothesisFails };

std::string_view to_string(Stability s) noexcept;
std::string_view to_string(StabilityReason r) noexcept;

struct StabilityVerdict {
  Stability status = Stability::Inconclusive;
  StabilityReason reason = StabilityReason::HypothesisFails;

  bool operator==(const StabilityVerdict&) const = default;
};

StabilityVerdict stability_classify(const DistributionProfile& p);

// Chern data of T_F for a generic distribution, via the twist formulas
// c2 = c2(TX) − κ·c1(TX)·H + κ²H², c3 = −c3(TX(−κ)).
ChernData dist_chern(const DistributionProfile& p);
// The same data from ch(T_F) = ch(TX) − ch(O(κ)) + ch(O_Z), with the length of
// Z counted as c3(Ω¹(κ)).
ChernData dist_chern_from_sequence(const DistributionProfile& p);

// h^0(O_Z) for a generic distribution.
std::int64_t singular_length(const DistributionProfile& p);

enum class Sing1F { Empty, IrreducibleReduced, Other };
enum class Split { Splits, Unknown };
enum class SingStructure { YEqualsSing1G, UnionWithSing1F, CaseSplit };

std::string_view to_string(Sing1F s) noexcept;
std::string_view to_string(Split s) noexcept;
std::string_view to_string(SingStructure s) noexcept;

struct SubfoliationReport {
  std::int64_t tG = 0;           // c1(T_G)
  std::int64_t lfg_degree = 0;   // deg L_{F/G} = f − tG
  std::optional<std::int64_t> y_class;  // c2(T_F(−tG))·H, generic F only
  // Degree of the line bundle whose H¹ decides the splitting: the one used in
  // the splitting argument, L_{F/G} ⊗ L_F^∨, and the one in the statement,
  // L ⊗ det Ω¹ ⊗ det(T_F)².
  std::int64_t split_degree = 0;
  std::int64_t statement_degree = 0;
  Split split = Split::Unknown;
  SingStructure sing_structure = SingStructure::CaseSplit;
  std::vector<std::string> branches;  // descriptions of the possible sing(G)
};

SubfoliationReport subfoliation_analyze(const DistributionProfile& p, std::int64_t tG,
                                        Sing1F sing1F);

struct ConnCount {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool exact() const noexcept { return lo == hi; }

  bool operator==(const ConnCount&) const = default;
};

struct ConnHypotheses {
  bool h1_tx_lf_vanishes = false;  // h¹(TX ⊗ L_F^∨) = 0
  bool h2_tx_lf_vanishes = false;  // h²(TX ⊗ L_F^∨) = 0
  bool h1_ox_vanishes = false;     // h¹(O_X) = 0
};

struct ConnReport {
  ConnCount count;
  ConnHypotheses hypotheses;
  // Route that produced the count: "thmE", "corP3d2" or "emptySingularScheme".
  std::string source;
};

// h⁰(O_C) for C = sing₁(F) from h²(T_F ⊗ L_F^∨) and c3(T_F). On P³ the TX
// hypotheses are computed; elsewhere `supplied` is used. A Bounded h² yields
// an interval.
ConnReport conn_components(const DistributionProfile& p, const cohomology::DimEntry& h2_tf_lf,
                           std::int64_t c3_tf, const ConnHypotheses& supplied = {});

// The generic-case value of h²(T_F(−d−2)) on P³.
cohomology::DimEntry generic_h2_tf_lf(std::int64_t d);

}  // namespace sheafcalc::dist
