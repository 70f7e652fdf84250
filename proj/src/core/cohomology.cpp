#include "sheafcalc/cohomology.hpp"

#include <algorithm>
#include <vector>

namespace sheafcalc::cohomology {

DimEntry DimEntry::known(std::int64_t n) { return bounded(n, n); }

DimEntry DimEntry::bounded(std::int64_t lo, std::int64_t hi) {
  if (lo < 0 || hi < lo) {
    throw Error(ErrorKind::Inconsistent, "empty dimension interval [" + std::to_string(lo) +
                                             ", " + std::to_string(hi) + "]");
  }
  return DimEntry(lo, hi);
}

std::int64_t DimEntry::value() const {
  if (!is_known()) throw Error(ErrorKind::NotComputable, "dimension is " + to_string(*this));
  return lo_;
}

std::string to_string(const DimEntry& e) {
  if (e.is_known()) return std::to_string(e.lo());
  if (e.is_unknown()) return "?";
  return "[" + std::to_string(e.lo()) + "," +
         (e.has_upper() ? std::to_string(e.hi()) : std::string("inf")) + "]";
}

DimEntry operator+(const DimEntry& a, const DimEntry& b) {
  const std::int64_t lo = a.lo() + b.lo();
  if (!a.has_upper() || !b.has_upper()) {
    return DimEntry::bounded(lo, DimEntry::kUnbounded);
  }
  return DimEntry::bounded(lo, a.hi() + b.hi());
}

// ---------------------------------------------------------------------------

CohomTable::CohomTable(std::int64_t lo, std::int64_t hi, std::optional<ChernData> chern)
    : lo_(lo), hi_(hi), chern_(std::move(chern)) {
  if (hi < lo) throw Error(ErrorKind::DomainError, "empty twist range");
}

DimEntry CohomTable::at(int i, std::int64_t t) const {
  auto it = entries_.find({i, t});
  return it == entries_.end() ? DimEntry::unknown() : it->second;
}

void CohomTable::set(int i, std::int64_t t, const DimEntry& e) {
  if (i < 0 || i > 3 || t < lo_ || t > hi_) {
    throw Error(ErrorKind::DomainError, "cohomology index out of range");
  }
  if (e.is_unknown()) {
    entries_.erase({i, t});
  } else {
    entries_[{i, t}] = e;
  }
}

std::array<DimEntry, 4> CohomTable::column(std::int64_t t) const {
  return {at(0, t), at(1, t), at(2, t), at(3, t)};
}

void CohomTable::set_column(std::int64_t t, const std::array<DimEntry, 4>& col) {
  for (int i = 0; i < 4; ++i) set(i, t, col[i]);
}

std::optional<std::int64_t> CohomTable::chi(std::int64_t t, const ThreefoldData& X) const {
  if (!chern_) return std::nullopt;
  return narrow_integral(hrr_degree(chern_to_ch(*chern_, X) * ch_line(t), X),
                         ErrorKind::NonIntegralChi);
}

CohomTable CohomTable::shifted(std::int64_t s, const ThreefoldData& X) const {
  std::optional<ChernData> c;
  if (chern_) c = twist_any_rank(*chern_, s, X);
  CohomTable out(lo_ - s, hi_ - s, c);
  for (const auto& [key, e] : entries_) out.entries_[{key.first, key.second - s}] = e;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_index(int v, const char* what) {
  if (v < 0 || v > 3) {
    throw Error(ErrorKind::DomainError, std::string(what) + " must lie in 0..3");
  }
}

}  // namespace

std::int64_t bott_h(int p, int q, std::int64_t t) {
  check_index(p, "p");
  check_index(q, "q");
  if (q == p && t == 0) return 1;
  if (q == 0 && t > p) return narrow(BigInt(binomial(t + 3 - p, 3 - p)) * binomial(t - 1, p));
  if (q == 3 && t < p - 3) return bott_h(3 - p, 0, -t);
  return 0;
}

std::int64_t line_h(const ThreefoldData& X, int i, std::int64_t t) {
  check_index(i, "i");
  if (is_projective_space(X)) return bott_h(0, i, t);
  if (i == 1 && X.h1_line_vanishing) return 0;
  throw Error(ErrorKind::NotComputable,
              "h^" + std::to_string(i) + "(O(t)) is only available on P3 for " + X.name);
}

std::int64_t serre_tangent_h(const ThreefoldData& X, int q, std::int64_t t) {
  check_index(q, "q");
  if (!is_projective_space(X)) {
    throw Error(ErrorKind::NotComputable, "tangent cohomology is only available on P3");
  }
  return bott_h(1, 3 - q, -t - 4);
}

CohomTable line_table(std::int64_t shift, std::int64_t lo, std::int64_t hi) {
  CohomTable tab(lo, hi, line_bundle(shift));
  for (std::int64_t t = lo; t <= hi; ++t)
    for (int i = 0; i < 4; ++i) tab.set(i, t, DimEntry::known(bott_h(0, i, t + shift)));
  return tab;
}

CohomTable omega_table(int p, std::int64_t shift, std::int64_t lo, std::int64_t hi) {
  check_index(p, "p");
  const ThreefoldData X = presets::p3();
  ChernData base;
  switch (p) {
    case 0: base = line_bundle(0); break;
    case 1: base = cotangent_bundle(X); break;
    case 2: base = twist_chern(tangent_bundle(X), -4, X); break;  // Ω² ≅ T(−4)
    default: base = line_bundle(-4); break;
  }
  CohomTable tab(lo, hi, twist_any_rank(base, shift, X));
  for (std::int64_t t = lo; t <= hi; ++t)
    for (int i = 0; i < 4; ++i) tab.set(i, t, DimEntry::known(bott_h(p, i, t + shift)));
  return tab;
}

CohomTable tangent_table(std::int64_t shift, std::int64_t lo, std::int64_t hi) {
  const ThreefoldData X = presets::p3();
  CohomTable tab(lo, hi, twist_chern(tangent_bundle(X), shift, X));
  for (std::int64_t t = lo; t <= hi; ++t)
    for (int i = 0; i < 4; ++i) tab.set(i, t, DimEntry::known(serre_tangent_h(X, i, t + shift)));
  return tab;
}

// ---------------------------------------------------------------------------
// Long exact sequence propagation.
//
// At a fixed twist the sequence reads
//   0 → H⁰A → H⁰B → H⁰C → H¹A → ... → H³C → 0,
// twelve spaces V[0..11] with V[3i + j] = H^i of term j. With R[k] the rank
// of V[k] → V[k+1], exactness says dim V[k] = R[k−1] + R[k], R[−1] = R[11] = 0.
// Each term with known Chern data also satisfies Σ(−1)^i h^i = χ.
// Interval bounds are propagated through these linear equalities to a fixed
// point.

namespace {

using Wide = __int128;

struct Interval {
  Wide lo = 0;
  bool bounded = false;
  Wide hi = 0;
};

struct Term {
  int coef;  // ±1
  int var;
};

struct Equation {
  std::vector<Term> terms;
  Wide rhs = 0;
};

// Returns true when something narrowed.
bool tighten(std::vector<Interval>& vars, const Equation& eq) {
  Wide min_finite = 0, max_finite = 0;
  int min_inf = 0, max_inf = 0;
  auto term_min = [&](const Term& t, bool& inf) -> Wide {
    const Interval& v = vars[t.var];
    if (t.coef > 0) {
      inf = false;
      return v.lo;
    }
    inf = !v.bounded;
    return inf ? 0 : -v.hi;
  };
  auto term_max = [&](const Term& t, bool& inf) -> Wide {
    const Interval& v = vars[t.var];
    if (t.coef > 0) {
      inf = !v.bounded;
      return inf ? 0 : v.hi;
    }
    inf = false;
    return -v.lo;
  };
  for (const auto& t : eq.terms) {
    bool inf = false;
    const Wide mn = term_min(t, inf);
    if (inf) ++min_inf; else min_finite += mn;
    const Wide mx = term_max(t, inf);
    if (inf) ++max_inf; else max_finite += mx;
  }

  bool changed = false;
  for (const auto& t : eq.terms) {
    bool own_min_inf = false, own_max_inf = false;
    const Wide own_min = term_min(t, own_min_inf);
    const Wide own_max = term_max(t, own_max_inf);
    // Bounds on coef·x from the remaining terms.
    const bool has_upper = (min_inf - int(own_min_inf)) == 0;
    const Wide upper = eq.rhs - (min_finite - (own_min_inf ? 0 : own_min));
    const bool has_lower = (max_inf - int(own_max_inf)) == 0;
    const Wide lower = eq.rhs - (max_finite - (own_max_inf ? 0 : own_max));

    Interval& v = vars[t.var];
    bool new_hi = false;
    Wide hi_cand = 0;
    bool new_lo = false;
    Wide lo_cand = 0;
    if (t.coef > 0) {
      if (has_upper) { new_hi = true; hi_cand = upper; }
      if (has_lower) { new_lo = true; lo_cand = lower; }
    } else {
      if (has_upper) { new_lo = true; lo_cand = -upper; }
      if (has_lower) { new_hi = true; hi_cand = -lower; }
    }
    if (new_lo && lo_cand > v.lo) {
      v.lo = lo_cand;
      changed = true;
    }
    if (new_hi && (!v.bounded || hi_cand < v.hi)) {
      v.bounded = true;
      v.hi = hi_cand;
      changed = true;
    }
    if (v.bounded && v.hi < v.lo) {
      throw Error(ErrorKind::Inconsistent,
                  "long exact sequence forces an empty dimension interval");
    }
  }
  return changed;
}

Interval from_entry(const DimEntry& e) {
  Interval iv;
  iv.lo = e.lo();
  iv.bounded = e.has_upper();
  iv.hi = e.has_upper() ? Wide(e.hi()) : 0;
  return iv;
}

DimEntry to_entry(const Interval& iv) {
  const auto lo = static_cast<std::int64_t>(iv.lo);
  if (!iv.bounded) return DimEntry::bounded(lo, DimEntry::kUnbounded);
  if (iv.hi >= Wide(DimEntry::kUnbounded)) throw Error(ErrorKind::Overflow, "dimension too large");
  return DimEntry::bounded(lo, static_cast<std::int64_t>(iv.hi));
}

constexpr int kSpaces = 12;
constexpr int kRanks = 11;
constexpr int kMaxRounds = 10000;

}  // namespace

SesTables les_chase(SesTables ses, const ThreefoldData& X) {
  CohomTable* terms[3] = {&ses.sub, &ses.middle, &ses.quotient};
  if (ses.sub.lo() != ses.middle.lo() || ses.sub.lo() != ses.quotient.lo() ||
      ses.sub.hi() != ses.middle.hi() || ses.sub.hi() != ses.quotient.hi()) {
    throw Error(ErrorKind::DomainError, "tables of a sequence must share a twist range");
  }

  std::vector<Equation> equations;
  for (int k = 0; k < kSpaces; ++k) {
    Equation eq;
    eq.terms.push_back({1, k});
    if (k > 0) eq.terms.push_back({-1, kSpaces + k - 1});
    if (k < kRanks) eq.terms.push_back({-1, kSpaces + k});
    equations.push_back(eq);
  }
  const std::size_t exactness_count = equations.size();

  for (std::int64_t t = ses.sub.lo(); t <= ses.sub.hi(); ++t) {
    equations.resize(exactness_count);
    std::vector<Interval> vars(kSpaces + kRanks);
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i < 4; ++i) vars[3 * i + j] = from_entry(terms[j]->at(i, t));
      if (auto chi = terms[j]->chi(t, X)) {
        Equation eq;
        for (int i = 0; i < 4; ++i) eq.terms.push_back({i % 2 == 0 ? 1 : -1, 3 * i + j});
        eq.rhs = *chi;
        equations.push_back(eq);
      }
    }

    int rounds = 0;
    bool changed = true;
    while (changed) {
      if (++rounds > kMaxRounds) {
        throw Error(ErrorKind::Inconsistent, "dimension propagation does not settle");
      }
      changed = false;
      for (const auto& eq : equations) changed = tighten(vars, eq) || changed;
    }

    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 4; ++i) terms[j]->set(i, t, to_entry(vars[3 * i + j]));
  }
  return ses;
}

// ---------------------------------------------------------------------------

namespace {

void check_degree(std::int64_t d) {
  if (d < 0) throw Error(ErrorKind::DomainError, "degree must be nonnegative");
}

}  // namespace

std::array<DimEntry, 4> generic_dist_cohom_chase(std::int64_t d, std::int64_t p) {
  check_degree(d);
  const ThreefoldData X = presets::p3();
  CohomTable sub = line_table(-2 * d, p, p);
  CohomTable middle = omega_table(1, 2 - d, p, p);
  // Chern data of F itself (twist 0).
  const ChernData f = ses_third(line_bundle(-2 * d),
                                twist_chern(cotangent_bundle(X), 2 - d, X), std::nullopt, X);
  CohomTable quotient(p, p, f);
  const SesTables out = les_chase({sub, middle, quotient}, X);
  return out.quotient.column(p);
}

std::array<DimEntry, 4> generic_dist_cohom(std::int64_t d, std::int64_t p) {
  check_degree(d);
  if (p < d - 4) return generic_dist_cohom_chase(d, p);
  const std::int64_t h0 = std::max<std::int64_t>(0, bott_h(1, 0, p + 2 - d) - binomial(p - 2 * d + 3, 3));
  const std::int64_t h1 = p == d - 2 ? 1 : 0;
  const std::int64_t h2 = binomial(2 * d - p - 1, 3);
  return {DimEntry::known(h0), DimEntry::known(h1), DimEntry::known(h2), DimEntry::known(0)};
}

}  // namespace sheafcalc::cohomology
