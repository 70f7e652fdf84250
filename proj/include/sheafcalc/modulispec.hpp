#pragma once

// Moduli numerology of tangent sheaves of generic distributions on P³, and
// points of the rank-2 stable spectrum of a threefold.

#include <cstdint>
#include <optional>
#include <string>

#include "sheafcalc/chow.hpp"

namespace sheafcalc::modulispec {

struct ModuliReport {
  std::int64_t d = 0;
  ChernData chern;       // (2, 2−d, d²+2, d³+2d²+2d)
  ChernData normalized;  // c1 ∈ {−1, 0}
  std::int64_t dim_component = 0;
  std::int64_t ext1 = 0;
  std::int64_t ext2 = 0;
  bool smooth_point = false;
  std::optional<bool> rational;  // not asserted for d = 2
  std::int64_t family_dim = 0;
};

ModuliReport moduli_report(std::int64_t d);

// dim Ext²(F, F): 0 for d ≤ 2, d(d−1)(d−3)/2 otherwise.
std::int64_t ext2_dimension(std::int64_t d);
// 4·h⁰(O(d−3)) − h⁰(O(d−2)), the cohomological expression for d ≥ 3.
std::int64_t ext2_from_cohomology(std::int64_t d);

struct GlobalGenResolution {
  std::int64_t d = 0;
  std::int64_t middle_rank = 0;  // O^middle_rank
  bool kernel_has_line = false;  // kernel is T(−2) ⊕ O(−d) when true, T(−2) otherwise
  std::int64_t kernel_line_twist = 0;
  std::int64_t h0_Fd = 0;
  ChernData kernel;
  ChernData cokernel;  // equals the Chern data of F(d)
};

// 0 → T(−2) ⊕ O(−d) → O⁶ → F(d) → 0 for d ≥ 1, 0 → T(−2) → O⁵ → F → 0 for d = 0.
GlobalGenResolution global_gen_resolution(std::int64_t d);

struct CurveFamilyReport {
  std::int64_t d = 0;
  std::int64_t degree = 0;  // d²+2d+2
  std::int64_t genus = 0;   // (d−1)(d²+2d+2)+1
  std::int64_t points = 0;  // d(d²+2d+2)
  std::int64_t family_dim = 0;
  // c3(F(d)) against 2g − 2 + c2(F(d))(4 − c1(F(d))), both from the engine.
  std::int64_t c3_twisted = 0;
  std::int64_t c3_from_genus = 0;
};

CurveFamilyReport curve_family(std::int64_t d);

struct SpectrumPoint {
  ThreefoldData X;
  std::int64_t r = 0;
  ChernData triple;
};

SpectrumPoint spectrum_point(const ThreefoldData& X, std::int64_t r);
// Twisting by O(t). The action written out for the spectrum adds c1(L) once
// to c1; twisting a rank-2 sheaf adds 2c1(L), which is what is applied here.
SpectrumPoint pic_act(const SpectrumPoint& point, std::int64_t t);
// Orbit representative with c1 ∈ {−1, 0}.
SpectrumPoint normalize(const SpectrumPoint& point);
ChernData normalize_rank2(const ChernData& c, const ThreefoldData& X);

}  // namespace sheafcalc::modulispec
