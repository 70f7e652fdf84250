#include "sheafcalc/chow.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace sheafcalc {

namespace {

Rational q(std::int64_t v) { return Rational(v); }

BigInt big(std::int64_t v) { return BigInt(v); }

void require_rank_at_most_3(const ChernData& c, std::string_view op) {
  if (c.rank < 0 || c.rank > 3) {
    throw Error(ErrorKind::UnsupportedRank,
                std::string(op) + " supports ranks 0-3, got " +
                    std::to_string(c.rank));
  }
}

}  // namespace

std::string_view to_string(TangentStability s) noexcept {
  switch (s) {
    case TangentStability::Stable: return "stable";
    case TangentStability::Semistable: return "semistable";
    case TangentStability::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(const ChernData& c) {
  std::ostringstream os;
  os << '(' << c.rank << ", " << c.c1 << ", " << c.n2 << ", " << c.n3 << ')';
  return os.str();
}

std::int64_t narrow(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::Overflow, "value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t narrow_integral(const Rational& v, ErrorKind on_fraction) {
  if (boost::multiprecision::denominator(v) != 1) {
    std::ostringstream os;
    os << "expected an integer, got " << v;
    throw Error(on_fraction, os.str());
  }
  return narrow(boost::multiprecision::numerator(v));
}

BigInt binomial_poly(std::int64_t n, int k) {
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= big(n) - i;
    den *= i + 1;
  }
  return num / den;
}

std::int64_t binomial(std::int64_t n, int k) {
  if (n < k) return 0;
  return narrow(binomial_poly(n, k));
}

// ---------------------------------------------------------------------------
// ThreefoldData

void ThreefoldData::validate() const {
  auto fail = [this](const std::string& why) {
    throw Error(ErrorKind::InvalidThreefold, "threefold '" + name + "': " + why);
  };
  if (h3 < 1) fail("h3 must be positive");
  if (rhoX && *rhoX < 1) fail("rhoX must be at least 1");
  if (rhoX && gammaX && *gammaX < *rhoX) fail("gammaX must be at least rhoX");
  if (rhoX) {
    if (tx_stable == TangentStability::Stable && !(cX < 3 * *rhoX))
      fail("stable TX forces cX < 3 rhoX");
    if (tx_stable == TangentStability::Semistable && !(cX <= 3 * *rhoX))
      fail("semistable TX forces cX <= 3 rhoX");
  }
  // chi(O_X) = c1 c2 / 24 must be an integer.
  if ((big(cX) * c2TX_H) % 24 != 0) fail("c1*c2 is not divisible by 24");
}

std::int64_t ThreefoldData::rho() const {
  if (!rhoX) throw Error(ErrorKind::MissingInvariant, "rhoX is unknown for " + name);
  return *rhoX;
}

std::int64_t ThreefoldData::gamma() const {
  if (!gammaX) throw Error(ErrorKind::MissingInvariant, "gammaX is unknown for " + name);
  return *gammaX;
}

bool is_projective_space(const ThreefoldData& X) noexcept {
  return X.h3 == 1 && X.cX == 4 && X.c2TX_H == 6 && X.c3TX == 4;
}

namespace presets {

ThreefoldData p3() {
  return {"p3", 1, 4, 6, 4, 2, 2, TangentStability::Stable, true};
}

// Smooth quintic in P⁴: c(TX) = (1+H)^5 / (1+5H).
ThreefoldData quintic() {
  return {"quintic", 5, 0, 50, -200, 2, 2, TangentStability::Stable, true};
}

// Smooth quadric in P⁴: c(TX) = (1+H)^5 / (1+2H).
ThreefoldData quadric() {
  return {"quadric", 2, 3, 8, 4, std::nullopt, std::nullopt,
          TangentStability::Unknown, true};
}

const std::vector<ThreefoldData>& builtin() {
  static const std::vector<ThreefoldData> all{p3(), quintic(), quadric()};
  return all;
}

std::optional<ThreefoldData> find(std::string_view name) {
  for (const auto& X : builtin()) {
    if (X.name == name) return X;
  }
  return std::nullopt;
}

}  // namespace presets

ThreefoldData threefold_from_json(std::string_view text) {
  using nlohmann::json;
  ThreefoldData X;
  try {
    const json j = json::parse(text);
    X.name = j.at("name").get<std::string>();
    X.h3 = j.at("h3").get<std::int64_t>();
    X.cX = j.at("cX").get<std::int64_t>();
    X.c2TX_H = j.at("c2TX_H").get<std::int64_t>();
    X.c3TX = j.at("c3TX").get<std::int64_t>();
    if (j.contains("rhoX") && !j["rhoX"].is_null()) X.rhoX = j["rhoX"].get<std::int64_t>();
    if (j.contains("gammaX") && !j["gammaX"].is_null())
      X.gammaX = j["gammaX"].get<std::int64_t>();
    const auto st = j.at("tx_stable").get<std::string>();
    if (st == "stable") {
      X.tx_stable = TangentStability::Stable;
    } else if (st == "semistable") {
      X.tx_stable = TangentStability::Semistable;
    } else if (st == "unknown") {
      X.tx_stable = TangentStability::Unknown;
    } else {
      throw Error(ErrorKind::InvalidThreefold, "bad tx_stable value '" + st + "'");
    }
    X.h1_line_vanishing = j.at("h1_line_vanishing").get<bool>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidThreefold, std::string("malformed threefold JSON: ") + e.what());
  }
  X.validate();
  return X;
}

ThreefoldData threefold_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidThreefold, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return threefold_from_json(buf.str());
}

std::string threefold_to_json(const ThreefoldData& X) {
  nlohmann::ordered_json j;
  j["name"] = X.name;
  j["h3"] = X.h3;
  j["cX"] = X.cX;
  j["c2TX_H"] = X.c2TX_H;
  j["c3TX"] = X.c3TX;
  j["rhoX"] = X.rhoX ? nlohmann::ordered_json(*X.rhoX) : nlohmann::ordered_json(nullptr);
  j["gammaX"] = X.gammaX ? nlohmann::ordered_json(*X.gammaX) : nlohmann::ordered_json(nullptr);
  j["tx_stable"] = std::string(to_string(X.tx_stable));
  j["h1_line_vanishing"] = X.h1_line_vanishing;
  return j.dump();
}

ThreefoldData resolve_threefold(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  if (auto X = presets::find(name_or_path)) return *X;
  std::error_code ec;
  if (fs::is_regular_file(name_or_path, ec)) return threefold_from_file(name_or_path);
  if (const char* dir = std::getenv("SHEAFCALC_PRESETS")) {
    const fs::path candidate = fs::path(dir) / (name_or_path + ".json");
    if (fs::is_regular_file(candidate, ec)) return threefold_from_file(candidate.string());
  }
  throw Error(ErrorKind::InvalidThreefold, "unknown threefold '" + name_or_path + "'");
}

std::vector<ThreefoldData> list_threefolds() {
  namespace fs = std::filesystem;
  std::vector<ThreefoldData> out = presets::builtin();
  const char* dir = std::getenv("SHEAFCALC_PRESETS");
  if (!dir) return out;
  std::error_code ec;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) out.push_back(threefold_from_file(f.string()));
  return out;
}

// ---------------------------------------------------------------------------
// Chow arithmetic

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  a0 += o.a0;
  a1 += o.a1;
  a2 += o.a2;
  a3 += o.a3;
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  a0 -= o.a0;
  a1 -= o.a1;
  a2 -= o.a2;
  a3 -= o.a3;
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  ChowClass r;
  r.a0 = a.a0 * b.a0;
  r.a1 = a.a0 * b.a1 + a.a1 * b.a0;
  r.a2 = a.a0 * b.a2 + a.a1 * b.a1 + a.a2 * b.a0;
  r.a3 = a.a0 * b.a3 + a.a1 * b.a2 + a.a2 * b.a1 + a.a3 * b.a0;
  return r;
}

ChernData line_bundle(std::int64_t t) { return {1, t, 0, 0}; }

ChernData tangent_bundle(const ThreefoldData& X) { return {3, X.cX, X.c2TX_H, X.c3TX}; }

ChernData cotangent_bundle(const ThreefoldData& X) { return dual_chern(tangent_bundle(X)); }

// ch3 of O_Z is the length; c3 = 2·ch3 for a sheaf with c1 = c2 = 0.
ChernData skyscraper(std::int64_t length) { return {0, 0, 0, 2 * length}; }

ChowClass chern_to_ch(const ChernData& c, const ThreefoldData& X) {
  const Rational h3 = q(X.h3);
  const Rational c1 = q(c.c1);
  ChowClass ch;
  ch.a0 = q(c.rank);
  ch.a1 = c1;
  ch.a2 = (c1 * c1 * h3 - 2 * q(c.n2)) / (2 * h3);
  ch.a3 = (c1 * c1 * c1 * h3 - 3 * c1 * q(c.n2) + 3 * q(c.n3)) / (6 * h3);
  return ch;
}

ChernData ch_to_chern(const ChowClass& ch, const ThreefoldData& X) {
  const Rational h3 = q(X.h3);
  ChernData c;
  c.rank = narrow_integral(ch.a0, ErrorKind::NonIntegralChernClass);
  if (c.rank < 0) {
    throw Error(ErrorKind::RankError, "negative rank " + std::to_string(c.rank));
  }
  c.c1 = narrow_integral(ch.a1, ErrorKind::NonIntegralChernClass);
  const Rational c1 = q(c.c1);
  const Rational n2 = c1 * c1 * h3 / 2 - ch.a2 * h3;
  c.n2 = narrow_integral(n2, ErrorKind::NonIntegralChernClass);
  const Rational n3 = (6 * ch.a3 * h3 - c1 * c1 * c1 * h3 + 3 * c1 * n2) / 3;
  c.n3 = narrow_integral(n3, ErrorKind::NonIntegralChernClass);
  return c;
}

ChowClass ch_line(std::int64_t t) {
  const Rational s = q(t);
  return {1, s, s * s / 2, s * s * s / 6};
}

ChowClass todd(const ThreefoldData& X) {
  const Rational c1 = q(X.cX);
  const Rational c2 = Rational(X.c2TX_H, X.h3);  // c2 as a multiple of H²
  return {1, c1 / 2, (c1 * c1 + c2) / 12, c1 * c2 / 24};
}

Rational hrr_degree(const ChowClass& ch, const ThreefoldData& X) {
  return (ch * todd(X)).a3 * X.h3;
}

std::int64_t hrr_chi(const ChernData& c, const ThreefoldData& X) {
  return narrow_integral(hrr_degree(chern_to_ch(c, X), X), ErrorKind::NonIntegralChi);
}

ChernData twist_chern(const ChernData& c, std::int64_t t, const ThreefoldData& X) {
  require_rank_at_most_3(c, "twist_chern");
  const BigInt r = c.rank;
  const BigInt s = t;
  const BigInt h3 = X.h3;
  const BigInt c1 = c.c1;
  const BigInt n2 = c.n2;
  auto choose = [](const BigInt& n, int k) -> BigInt {
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      num *= n - i;
      den *= i + 1;
    }
    return num / den;
  };
  ChernData out;
  out.rank = c.rank;
  out.c1 = narrow(c1 + r * s);
  out.n2 = narrow(n2 + (r - 1) * s * c1 * h3 + choose(r, 2) * s * s * h3);
  out.n3 = narrow(BigInt(c.n3) + (r - 2) * s * n2 + choose(r - 1, 2) * s * s * c1 * h3 +
                  choose(r, 3) * s * s * s * h3);
  return out;
}

ChernData dual_chern(const ChernData& c) {
  require_rank_at_most_3(c, "dual_chern");
  return {c.rank, -c.c1, c.n2, -c.n3};
}

ChernData reflexive_dual_rank2(const ChernData& c, const ThreefoldData& X) {
  if (c.rank != 2) {
    throw Error(ErrorKind::UnsupportedRank,
                "reflexive dual needs rank 2, got " + std::to_string(c.rank));
  }
  return twist_chern(c, -c.c1, X);
}

ChernData twist_any_rank(const ChernData& c, std::int64_t t, const ThreefoldData& X) {
  return ch_to_chern(chern_to_ch(c, X) * ch_line(t), X);
}

ChernData dual_any_rank(const ChernData& c, const ThreefoldData& X) {
  ChowClass ch = chern_to_ch(c, X);
  ch.a1 = -ch.a1;
  ch.a3 = -ch.a3;
  return ch_to_chern(ch, X);
}

ChernData direct_sum(const ChernData& a, const ChernData& b, const ThreefoldData& X) {
  return ch_to_chern(chern_to_ch(a, X) + chern_to_ch(b, X), X);
}

ChernData ses_third(const std::optional<ChernData>& a, const std::optional<ChernData>& b,
                    const std::optional<ChernData>& c, const ThreefoldData& X) {
  const int present = int(a.has_value()) + int(b.has_value()) + int(c.has_value());
  if (present != 2) {
    throw Error(ErrorKind::ArityError,
                "ses_third needs exactly two known terms, got " + std::to_string(present));
  }
  if (!a) return ch_to_chern(chern_to_ch(*b, X) - chern_to_ch(*c, X), X);
  if (!b) return ch_to_chern(chern_to_ch(*a, X) + chern_to_ch(*c, X), X);
  return ch_to_chern(chern_to_ch(*b, X) - chern_to_ch(*a, X), X);
}

}  // namespace sheafcalc
