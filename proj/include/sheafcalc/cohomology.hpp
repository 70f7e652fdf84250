#pragma once

// Cohomology dimensions on P³: Bott formula, Serre duality and a
// long-exact-sequence dimension chaser. Other threefolds only answer what
// the standing hypothesis H¹(O_X(t)) = 0 and Riemann–Roch give.

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sheafcalc/chow.hpp"

namespace sheafcalc::cohomology {

// Known(n) is Bounded(n, n); Unknown is Bounded(0, ∞).
class DimEntry {
 public:
  static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

  DimEntry() = default;  // Unknown
  static DimEntry known(std::int64_t n);
  static DimEntry bounded(std::int64_t lo, std::int64_t hi);
  static DimEntry unknown() { return {}; }

  bool is_known() const noexcept { return hi_ == lo_; }
  bool is_unknown() const noexcept { return lo_ == 0 && hi_ == kUnbounded; }
  bool has_upper() const noexcept { return hi_ != kUnbounded; }
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  // Throws NotComputable unless known.
  std::int64_t value() const;
  bool contains(std::int64_t n) const noexcept { return lo_ <= n && n <= hi_; }
  // True when `other` is at least as tight as this.
  bool encloses(const DimEntry& other) const noexcept {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  bool operator==(const DimEntry&) const = default;

 private:
  DimEntry(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {}
  std::int64_t lo_ = 0;
  std::int64_t hi_ = kUnbounded;
};

std::string to_string(const DimEntry& e);
DimEntry operator+(const DimEntry& a, const DimEntry& b);

// h^i(E(t)) for i = 0..3 over an inclusive range of twists. Entries never
// set read as Unknown. When `chern` is present it describes E itself (twist
// 0) and supplies χ(E(t)) for consistency checks.
class CohomTable {
 public:
  CohomTable() = default;
  CohomTable(std::int64_t lo, std::int64_t hi, std::optional<ChernData> chern = std::nullopt);

  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  const std::optional<ChernData>& chern() const noexcept { return chern_; }

  DimEntry at(int i, std::int64_t t) const;
  void set(int i, std::int64_t t, const DimEntry& e);
  std::array<DimEntry, 4> column(std::int64_t t) const;
  void set_column(std::int64_t t, const std::array<DimEntry, 4>& col);

  // χ(E(t)) from Riemann–Roch, when Chern data are attached.
  std::optional<std::int64_t> chi(std::int64_t t, const ThreefoldData& X) const;

  // The table of E(s): entry (i, t) here becomes (i, t - s).
  CohomTable shifted(std::int64_t s, const ThreefoldData& X) const;

  bool operator==(const CohomTable&) const = default;

 private:
  std::int64_t lo_ = 0;
  std::int64_t hi_ = -1;
  std::optional<ChernData> chern_;
  std::map<std::pair<int, std::int64_t>, DimEntry> entries_;
};

// h^q(P³, Ω^p(t)).
std::int64_t bott_h(int p, int q, std::int64_t t);

// h^i(O_X(t)). Off P³ only i = 1 under the vanishing hypothesis.
std::int64_t line_h(const ThreefoldData& X, int i, std::int64_t t);

// h^q(T_{P³}(t)) = h^{3-q}(Ω¹(−t−4)).
std::int64_t serre_tangent_h(const ThreefoldData& X, int q, std::int64_t t);

// Tables of P³ atoms over a twist range.
CohomTable line_table(std::int64_t shift, std::int64_t lo, std::int64_t hi);
CohomTable omega_table(int p, std::int64_t shift, std::int64_t lo, std::int64_t hi);
CohomTable tangent_table(std::int64_t shift, std::int64_t lo, std::int64_t hi);

struct SesTables {
  CohomTable sub;       // A in 0 → A → B → C → 0
  CohomTable middle;    // B
  CohomTable quotient;  // C
};

// Propagates the long exact sequence of 0 → A → B → C → 0 at every twist in
// the common range until nothing narrows further. Connecting-map ranks are
// never guessed; undetermined entries stay Bounded. Throws Inconsistent when
// an entry's interval becomes empty.
SesTables les_chase(SesTables ses, const ThreefoldData& X);

// Cohomology of F(p) for F in 0 → O(−2d) → Ω¹(2−d) → F → 0 on P³.
// Closed form for p ≥ d − 4, long exact sequence below that.
std::array<DimEntry, 4> generic_dist_cohom(std::int64_t d, std::int64_t p);
// The same numbers obtained only from the long exact sequence.
std::array<DimEntry, 4> generic_dist_cohom_chase(std::int64_t d, std::int64_t p);

}  // namespace sheafcalc::cohomology
