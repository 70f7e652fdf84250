#pragma once

// Numerical intersection theory on a smooth projective threefold X with
// Pic(X) = Z·H. Every class is recorded by the numbers the engine needs:
// c1 as a multiple of H, c2 through its degree against H, c3 as a degree.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sheafcalc/error.hpp"

namespace sheafcalc {

// Expression templates are off so that `auto` never captures a dangling
// temporary.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

enum class TangentStability { Stable, Semistable, Unknown };

std::string_view to_string(TangentStability s) noexcept;

struct ThreefoldData {
  std::string name;
  std::int64_t h3 = 1;        // H^3
  std::int64_t cX = 0;        // c1(TX) = cX·H
  std::int64_t c2TX_H = 0;    // c2(TX)·H
  std::int64_t c3TX = 0;      // deg c3(TX)
  std::optional<std::int64_t> rhoX;    // min t with H^0(Ω¹(t)) ≠ 0
  std::optional<std::int64_t> gammaX;  // min t with Ω¹(t) globally generated
  TangentStability tx_stable = TangentStability::Unknown;
  bool h1_line_vanishing = false;  // H^1(O_X(t)) = 0 for all t

  bool operator==(const ThreefoldData&) const = default;

  // Throws InvalidThreefold when an invariant is violated.
  void validate() const;
  std::int64_t rho() const;    // MissingInvariant when absent
  std::int64_t gamma() const;  // MissingInvariant when absent
};

// True when the numerical profile is that of P³. Exact cohomology is only
// available there.
bool is_projective_space(const ThreefoldData& X) noexcept;

namespace presets {
ThreefoldData p3();
ThreefoldData quintic();
ThreefoldData quadric();
const std::vector<ThreefoldData>& builtin();
std::optional<ThreefoldData> find(std::string_view name);
}  // namespace presets

// JSON schema:
// {"name", "h3", "cX", "c2TX_H", "c3TX", "rhoX"|null, "gammaX"|null,
//  "tx_stable": "stable"|"semistable"|"unknown", "h1_line_vanishing"}
ThreefoldData threefold_from_json(std::string_view text);
ThreefoldData threefold_from_file(const std::string& path);
std::string threefold_to_json(const ThreefoldData& X);

// Preset name, path to a JSON file, or <name>.json inside the directory named
// by $SHEAFCALC_PRESETS.
ThreefoldData resolve_threefold(const std::string& name_or_path);
// Built-in presets followed by the extra ones from $SHEAFCALC_PRESETS, sorted
// by file name.
std::vector<ThreefoldData> list_threefolds();

struct ChernData {
  std::int64_t rank = 0;
  std::int64_t c1 = 0;
  std::int64_t n2 = 0;  // c2·H
  std::int64_t n3 = 0;  // deg c3

  bool operator==(const ChernData&) const = default;
};

std::string to_string(const ChernData& c);

// a0 + a1·H + a2·H² + a3·H³ with exact rational coefficients.
struct ChowClass {
  Rational a0, a1, a2, a3;

  bool operator==(const ChowClass&) const = default;

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  // Truncated above degree 3.
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);

  // deg of the H²-piece paired with H, and of the H³-piece.
  Rational degree2(const ThreefoldData& X) const { return a2 * X.h3; }
  Rational degree3(const ThreefoldData& X) const { return a3 * X.h3; }
};

ChernData line_bundle(std::int64_t t);
ChernData tangent_bundle(const ThreefoldData& X);
ChernData cotangent_bundle(const ThreefoldData& X);
// Structure sheaf of a 0-dimensional subscheme of the given length.
ChernData skyscraper(std::int64_t length);

ChowClass chern_to_ch(const ChernData& c, const ThreefoldData& X);
ChernData ch_to_chern(const ChowClass& ch, const ThreefoldData& X);
// ch(O(t)) = exp(tH).
ChowClass ch_line(std::int64_t t);
ChowClass todd(const ThreefoldData& X);
// deg(ch·td) in degree 3.
Rational hrr_degree(const ChowClass& ch, const ThreefoldData& X);
std::int64_t hrr_chi(const ChernData& c, const ThreefoldData& X);

// Closed-form twist by O(t); ranks 1–3.
ChernData twist_chern(const ChernData& c, std::int64_t t, const ThreefoldData& X);
// Formal dual (−c1, n2, −n3); ranks 0–3.
ChernData dual_chern(const ChernData& c);
// F^∨ ≅ F(−c1) for a rank-2 reflexive sheaf.
ChernData reflexive_dual_rank2(const ChernData& c, const ThreefoldData& X);

// Twist and dual through the Chern character; no rank restriction.
ChernData twist_any_rank(const ChernData& c, std::int64_t t, const ThreefoldData& X);
ChernData dual_any_rank(const ChernData& c, const ThreefoldData& X);
ChernData direct_sum(const ChernData& a, const ChernData& b, const ThreefoldData& X);

// For 0 → A → B → C → 0, the missing term from the other two; exactly two
// arguments must be present.
ChernData ses_third(const std::optional<ChernData>& a,
                    const std::optional<ChernData>& b,
                    const std::optional<ChernData>& c, const ThreefoldData& X);

// Binomial coefficient C(n, k) as a polynomial in n (valid for negative n).
BigInt binomial_poly(std::int64_t n, int k);
// C(n, k) clamped to 0 for n < k (negative n included).
std::int64_t binomial(std::int64_t n, int k);

// Checked narrowing to int64; Overflow otherwise.
std::int64_t narrow(const BigInt& v);
// Exact integer value of `v`, raising `on_fraction` when it is not integral.
std::int64_t narrow_integral(const Rational& v, ErrorKind on_fraction);

}  // namespace sheafcalc
