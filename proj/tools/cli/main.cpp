// sheafcalc command line. Links only the C interface.

#include <charconv>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "engine.hpp"
#include "output.hpp"

namespace cli {
namespace {

constexpr std::int64_t kMaxTwistWidth = 200;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json triple(const sc_chern& c) { return Json::array({c.c1, c.n2, c.n3}); }
Json quad(const sc_chern& c) { return Json::array({c.rank, c.c1, c.n2, c.n3}); }

Json dim_json(const sc_dim& d) {
  if (d.lo == d.hi) return d.lo;
  Json r;
  r["lo"] = d.lo;
  r["hi"] = d.hi == SC_DIM_UNBOUNDED ? Json(nullptr) : Json(d.hi);
  return r;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) return std::nullopt;
  return v;
}

// "lo..hi" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& flag, const std::string& s) {
  const auto dots = s.find("..");
  const auto lo = to_int(s.substr(0, dots));
  const auto hi = dots == std::string::npos ? lo : to_int(s.substr(dots + 2));
  if (!lo || !hi) throw UsageError(flag + ": expected lo..hi, got '" + s + "'");
  if (*lo > *hi) throw UsageError(flag + ": empty range '" + s + "'");
  return {*lo, *hi};
}

const char* tx_name(sc_tx_stability s) {
  switch (s) {
    case SC_TX_STABLE: return "stable";
    case SC_TX_SEMISTABLE: return "semistable";
    default: return "unknown";
  }
}

Json threefold_json(const sc_threefold* X) {
  const sc_threefold_info i = info_of(X);
  Json j;
  j["name"] = i.name;
  j["h3"] = i.h3;
  j["cX"] = i.cX;
  j["c2TX_H"] = i.c2TX_H;
  j["c3TX"] = i.c3TX;
  j["rhoX"] = i.has_rho ? Json(i.rho) : Json(nullptr);
  j["gammaX"] = i.has_gamma ? Json(i.gamma) : Json(nullptr);
  j["tx_stable"] = tx_name(i.tx_stable);
  j["h1_line_vanishing"] = static_cast<bool>(i.h1_line_vanishing);
  j["origin"] = sc_threefold_is_builtin(X) ? "preset" : "file";
  return j;
}

struct Loaded {
  Threefold X;
  std::string name;
  std::string origin;
};

Loaded load(const std::string& arg) {
  Loaded l{resolve_threefold(arg), {}, {}};
  l.name = info_of(l.X.get()).name;
  l.origin = sc_threefold_is_builtin(l.X.get()) ? "preset" : "file";
  return l;
}

// ---------------------------------------------------------------------------

struct InvariantsArgs {
  std::string threefold;
  std::optional<std::int64_t> degree, c1;
  bool generic = false;
};

Json run_invariants(const InvariantsArgs& a) {
  const Loaded L = load(a.threefold);
  const sc_threefold* X = L.X.get();
  const sc_threefold_info info = info_of(X);
  const bool p3 = sc_threefold_is_p3(X);
  if (a.degree && !p3) throw UsageError("--degree: only defined on p3; use --c1");
  const std::int64_t f = a.degree ? 2 - *a.degree : *a.c1;
  const int g = a.generic ? 1 : 0;

  Json out, src;
  out["threefold"] = L.name;
  src["threefold"] = L.origin;
  out["f"] = f;
  src["f"] = a.degree ? "derived" : "input";
  out["degree"] = p3 ? Json(2 - f) : Json(nullptr);
  src["degree"] = a.degree ? "input" : "derived";
  out["kappa"] = info.cX - f;
  src["kappa"] = "derived";
  out["lf_degree"] = info.cX - f;
  src["lf_degree"] = "derived";
  out["hypotheses"] = {{"generic", a.generic},
                       {"h1_line_vanishing", static_cast<bool>(info.h1_line_vanishing)}};
  src["hypotheses.generic"] = "flag";
  src["hypotheses.h1_line_vanishing"] = L.origin;

  if (!a.generic) {
    out["chern"] = nullptr;
    out["singular_length"] = nullptr;
    out["stability"] = nullptr;
    out["gated"] = "chern, singular_length and stability need --generic";
    src["gated"] = "profile";
    out["source"] = src;
    return out;
  }

  sc_chern twist_route{}, seq_route{};
  check(sc_dist_chern(X, f, g, &twist_route));
  check(sc_dist_chern_from_sequence(X, f, g, &seq_route));
  if (std::memcmp(&twist_route, &seq_route, sizeof twist_route) != 0) {
    throw EngineFailure(SC_INTERNAL, "Chern routes disagree");
  }
  std::int64_t len = 0;
  check(sc_singular_length(X, f, g, &len));

  out["rank"] = twist_route.rank;
  src["rank"] = "thmD";
  out["chern"] = triple(twist_route);
  src["chern"] = "thmD";
  out["chern_check"] = triple(seq_route);
  src["chern_check"] = "sesThird";
  out["singular_length"] = len;
  src["singular_length"] = "c3Length";

  sc_stability_verdict v{};
  const sc_status st = sc_stability_classify(X, f, g, &v);
  if (st == SC_OK) {
    out["stability"] = {{"status", sc_stability_name(v.status)},
                        {"reason", sc_stability_reason_name(v.reason)}};
  } else {
    out["stability"] = {{"status", nullptr}, {"error", sc_status_name(st)}};
  }
  src["stability"] = "thmA";
  out["source"] = src;
  return out;
}

// ---------------------------------------------------------------------------

Json run_moduli(std::int64_t d) {
  sc_moduli_report m{};
  check(sc_moduli_report_get(d, &m));
  sc_resolution res{};
  check(sc_global_gen_resolution(d, &res));

  Json out, src;
  out["dim_component"] = m.dim_component;
  src["dim_component"] = "thmC";
  out["chern"] = triple(m.chern);
  src["chern"] = "thmD";
  out["ext2"] = m.ext2;
  src["ext2"] = "eqKey";
  out["degree"] = d;
  src["degree"] = "input";
  out["rank"] = m.chern.rank;
  src["rank"] = "thmD";
  out["normalized"] = triple(m.normalized);
  src["normalized"] = "picAction";
  out["ext1"] = m.ext1;
  src["ext1"] = "eqKey";
  out["family_dim"] = m.family_dim;
  src["family_dim"] = d == 2 ? "remarkD2" : "thmC";
  out["smooth_point"] = static_cast<bool>(m.smooth_point);
  src["smooth_point"] = "thmC";
  out["rational"] = m.rational < 0 ? Json(nullptr) : Json(m.rational == 1);
  src["rational"] = "thmC";

  if (d >= 1) {
    sc_curve_family c{};
    check(sc_curve_family_get(d, &c));
    out["curve_family"] = {{"degree", c.degree},           {"genus", c.genus},
                           {"points", c.points},           {"family_dim", c.family_dim},
                           {"c3_twisted", c.c3_twisted}, {"c3_from_genus", c.c3_from_genus}};
  } else {
    out["curve_family"] = nullptr;
  }
  src["curve_family"] = "propCurve";

  Json r;
  r["middle_rank"] = res.middle_rank;
  r["h0_Fd"] = res.h0_Fd;
  r["kernel_line_twist"] = res.kernel_has_line ? Json(res.kernel_line_twist) : Json(nullptr);
  r["kernel"] = quad(res.kernel);
  r["cokernel"] = quad(res.cokernel);
  out["resolution"] = r;
  src["resolution"] = "lemmaGlobalGen";
  out["source"] = src;
  return out;
}

// ---------------------------------------------------------------------------

struct CohomArgs {
  std::string threefold = "p3";
  std::string sheaf;
  std::string batch;
  std::string twists;
  std::vector<std::string> declares;
  std::vector<std::string> hints;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

// NAME=rank,c1,n2,n3[,lf]
void apply_declare(sc_env* env, const std::string& spec) {
  const auto eq = spec.find('=');
  const auto parts = eq == std::string::npos ? std::vector<std::string>{} : split(spec.substr(eq + 1), ',');
  std::vector<std::int64_t> v;
  bool lf = false;
  for (const auto& p : parts) {
    if (p == "lf") {
      lf = true;
    } else if (auto n = to_int(p)) {
      v.push_back(*n);
    } else {
      v.clear();
      break;
    }
  }
  if (v.size() != 4) throw UsageError("--declare: expected NAME=rank,c1,n2,n3[,lf], got '" + spec + "'");
  const sc_chern c{v[0], v[1], v[2], v[3]};
  check(sc_env_declare(env, spec.substr(0, eq).c_str(), &c, lf ? 1 : 0));
}

// NAME:i:t=n or NAME:i:t=lo..hi
void apply_hint(sc_env* env, const std::string& spec) {
  const auto eq = spec.find('=');
  const auto head = split(spec.substr(0, eq), ':');
  std::optional<std::int64_t> i, t;
  if (head.size() == 3) {
    i = to_int(head[1]);
    t = to_int(head[2]);
  }
  if (eq == std::string::npos || !i || !t || *i < 0 || *i > 3) {
    throw UsageError("--hint: expected NAME:i:t=n or NAME:i:t=lo..hi, got '" + spec + "'");
  }
  const auto [lo, hi] = parse_range("--hint", spec.substr(eq + 1));
  check(sc_env_hint(env, head[0].c_str(), static_cast<int>(*i), *t, sc_dim{lo, hi}));
}

Json cohom_doc(const std::string& text, const sc_threefold* X, const std::string& xname,
               const sc_env* env, std::int64_t lo, std::int64_t hi) {
  sc_expr* raw = nullptr;
  std::size_t offset = 0;
  const sc_status ps = sc_expr_parse(text.c_str(), &raw, &offset);
  if (ps != SC_OK) throw EngineFailure(ps, sc_last_error());
  const Expr e(raw);
  const std::string printed = take_string([&] {
    char* s = nullptr;
    check(sc_expr_print(e.get(), &s));
    return s;
  }());

  sc_table* traw = nullptr;
  check(sc_expr_cohom(e.get(), X, env, lo, hi, &traw));
  const Table tab(traw);
  sc_chern c{};
  const bool has_chern = sc_table_chern(tab.get(), &c) != 0;

  Json out, src;
  out["sheaf"] = printed;
  out["threefold"] = xname;
  out["rank"] = has_chern ? Json(c.rank) : Json(nullptr);
  src["rank"] = "chernOf";
  out["chern"] = has_chern ? triple(c) : Json(nullptr);
  src["chern"] = "chernOf";
  out["twists"] = Json::array({lo, hi});
  src["twists"] = "input";
  Json rows = Json::array();
  for (std::int64_t t = lo; t <= hi; ++t) {
    Json row;
    row["t"] = t;
    for (int i = 0; i < 4; ++i) {
      sc_dim d{};
      check(sc_table_get(tab.get(), i, t, &d));
      row["h" + std::to_string(i)] = dim_json(d);
    }
    Json chi = nullptr;
    if (has_chern) {
      sc_chern ct{};
      std::int64_t v = 0;
      if (sc_twist(X, &c, t, &ct) == SC_OK && sc_hrr_chi(X, &ct, &v) == SC_OK) chi = v;
    }
    row["chi"] = chi;
    rows.push_back(row);
  }
  out["rows"] = rows;
  src["rows"] = "lesChase";
  src["rows.chi"] = "hrr";
  out["source"] = src;
  return out;
}

struct BatchResult {
  Json docs = Json::array();
  std::optional<EngineFailure> first_error;
};

Json run_cohomology(const CohomArgs& a, BatchResult& batch) {
  const Loaded L = load(a.threefold);
  const auto [lo, hi] = parse_range("--twists", a.twists);
  const bool batch_mode = !a.batch.empty();
  if (!batch_mode && hi - lo + 1 > kMaxTwistWidth) {
    throw UsageError("--twists: width " + std::to_string(hi - lo + 1) + " exceeds " +
                     std::to_string(kMaxTwistWidth) + " (use --batch to lift the cap)");
  }

  sc_env* eraw = nullptr;
  check(sc_env_new(&eraw));
  const Env env(eraw);
  for (const auto& d : a.declares) apply_declare(env.get(), d);
  for (const auto& h : a.hints) apply_hint(env.get(), h);

  if (!batch_mode) return cohom_doc(a.sheaf, L.X.get(), L.name, env.get(), lo, hi);

  std::ifstream in(a.batch);
  if (!in) throw UsageError("--batch: cannot read '" + a.batch + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Json doc;
      doc["line"] = lineno;
      const Json body = cohom_doc(line, L.X.get(), L.name, env.get(), lo, hi);
      for (const auto& [k, v] : body.items()) doc[k] = v;
      batch.docs.push_back(std::move(doc));
    } catch (const EngineFailure& e) {
      Json doc;
      doc["line"] = lineno;
      doc["sheaf"] = line;
      doc["error"] = e.name();
      doc["message"] = e.what();
      batch.docs.push_back(std::move(doc));
      if (!batch.first_error) batch.first_error = e;
    }
  }
  return nullptr;
}

// ---------------------------------------------------------------------------

Json run_spectrum(const std::string& threefold, std::int64_t r, bool normalize) {
  const Loaded L = load(threefold);
  sc_spectrum_point p{};
  check(sc_spectrum_point_get(L.X.get(), r, &p));
  Json out, src;
  out["threefold"] = L.name;
  src["threefold"] = L.origin;
  out["r"] = r;
  src["r"] = "input";
  out["rank"] = p.triple.rank;
  src["rank"] = "thmD";
  out["chern"] = triple(p.triple);
  src["chern"] = "thmD";
  const sc_threefold_info info = info_of(L.X.get());
  out["hypotheses"] = {{"gammaX", info.gamma}, {"tx_stable", tx_name(info.tx_stable)}};
  src["hypotheses"] = L.origin;
  if (normalize) {
    sc_spectrum_point n{};
    check(sc_normalize(L.X.get(), &p, &n));
    out["normalized"] = triple(n.triple);
    src["normalized"] = "picAction";
    out["normalizing_twist"] = (n.triple.c1 - p.triple.c1) / 2;
    src["normalizing_twist"] = "picAction";
  }
  out["source"] = src;
  return out;
}

// ---------------------------------------------------------------------------

struct SubArgs {
  std::string threefold = "p3";
  std::int64_t f = 0, tg = 0;
  std::string sing1f;
  bool generic = false;
};

Json run_subfoliation(const SubArgs& a) {
  static const std::map<std::string, sc_sing1f> kinds = {
      {"empty", SC_SING1F_EMPTY}, {"irred", SC_SING1F_IRRED}, {"other", SC_SING1F_OTHER}};
  const Loaded L = load(a.threefold);
  sc_subfoliation_report r{};
  check(sc_subfoliation_analyze(L.X.get(), a.f, a.generic ? 1 : 0, a.tg, kinds.at(a.sing1f), &r));

  const char* route = r.sing_structure == SC_Y_EQUALS_SING1G ? "thmB" : "propSub";
  Json out, src;
  out["threefold"] = L.name;
  src["threefold"] = L.origin;
  out["f"] = a.f;
  src["f"] = "input";
  out["tG"] = r.tG;
  src["tG"] = "input";
  out["sing1f"] = a.sing1f;
  out["hypotheses"] = {{"generic", a.generic}};
  src["hypotheses.generic"] = "flag";
  out["lfg_degree"] = r.lfg_degree;
  src["lfg_degree"] = "derived";
  out["y_class"] = r.has_y_class ? Json(r.y_class) : Json(nullptr);
  src["y_class"] = "thmB";
  out["split_degree"] = r.split_degree;
  src["split_degree"] = "thmBProof";
  out["statement_degree"] = r.statement_degree;
  src["statement_degree"] = "thmB";
  out["split"] = sc_split_name(r.split);
  src["split"] = "thmB";
  out["sing_structure"] = sc_sing_structure_name(r.sing_structure);
  src["sing_structure"] = route;
  Json branches = Json::array();
  for (std::size_t i = 0; i < r.branch_count; ++i) branches.push_back(r.branches[i]);
  out["branches"] = branches;
  src["branches"] = route;
  out["source"] = src;
  return out;
}

// ---------------------------------------------------------------------------

struct ConnArgs {
  std::string threefold = "p3";
  std::int64_t f = 0;
  std::optional<std::string> h2;
  bool generic = false;
  std::int64_t c3 = 0;
  bool assume_h1_tx = false, assume_h2_tx = false, assume_h1_ox = false;
};

Json run_conncomp(const ConnArgs& a) {
  const Loaded L = load(a.threefold);
  const bool p3 = sc_threefold_is_p3(L.X.get());
  sc_dim h2{};
  if (a.h2) {
    const auto [lo, hi] = parse_range("--h2", *a.h2);
    if (lo < 0) throw UsageError("--h2: must be nonnegative");
    h2 = {lo, hi};
  } else {
    if (!p3) throw UsageError("--generic: the generic-case h2 is only known on p3");
    check(sc_generic_h2_tf_lf(2 - a.f, &h2));
  }

  const sc_conn_hypotheses supplied{a.assume_h1_tx, a.assume_h2_tx, a.assume_h1_ox};
  sc_conn_report r{};
  check(sc_conn_components(L.X.get(), a.f, 0, h2, a.c3, &supplied, &r));

  Json out, src;
  out["threefold"] = L.name;
  src["threefold"] = L.origin;
  out["f"] = a.f;
  src["f"] = "input";
  out["c3"] = a.c3;
  src["c3"] = "input";
  out["h2"] = dim_json(h2);
  src["h2"] = a.h2 ? "input" : "lemmaCohomology";
  if (!a.h2) out["label"] = "generic-case";
  sc_dim count{r.lo, r.hi};
  out["components"] = dim_json(count);
  src["components"] = r.source;
  out["exact"] = static_cast<bool>(r.exact);
  out["hypotheses"] = {{"h1_tx_lf_vanishes", static_cast<bool>(r.hypotheses.h1_tx_lf_vanishes)},
                       {"h2_tx_lf_vanishes", static_cast<bool>(r.hypotheses.h2_tx_lf_vanishes)},
                       {"h1_ox_vanishes", static_cast<bool>(r.hypotheses.h1_ox_vanishes)}};
  src["hypotheses"] = p3 ? "bott" : "flag";
  out["source"] = src;
  return out;
}

// ---------------------------------------------------------------------------

Json run_presets() {
  sc_preset_list* raw = nullptr;
  check(sc_preset_list_open(&raw));
  const PresetList list(raw);
  Json rows = Json::array();
  for (std::size_t i = 0; i < sc_preset_list_size(list.get()); ++i) {
    sc_threefold* x = nullptr;
    check(sc_preset_list_get(list.get(), i, &x));
    const Threefold X(x);
    rows.push_back(threefold_json(X.get()));
  }
  Json out;
  out["rows"] = rows;
  out["source"] = {{"rows", "preset"}};
  return out;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Invariants of codimension-one distributions and reflexive sheaves on threefolds",
               "sheafcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  app.add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  InvariantsArgs inv;
  auto* c_inv = app.add_subcommand("invariants", "Chern data, singular length and stability");
  c_inv->add_option("--threefold", inv.threefold, "preset name or JSON file")->required();
  auto* deg = c_inv->add_option("--degree", inv.degree, "distribution degree on p3");
  auto* c1o = c_inv->add_option("--c1", inv.c1, "c1(T_F)");
  deg->excludes(c1o);
  c_inv->add_flag("--generic", inv.generic, "singular scheme empty or 0-dimensional");

  std::int64_t moduli_d = 0;
  auto* c_mod = app.add_subcommand("moduli", "moduli component of the tangent sheaf");
  c_mod->add_option("--degree", moduli_d)->required();

  CohomArgs coh;
  auto* c_coh = app.add_subcommand("cohomology", "cohomology table of a sheaf expression");
  auto* sheaf = c_coh->add_option("--sheaf", coh.sheaf, "sheaf expression");
  auto* batch = c_coh->add_option("--batch", coh.batch, "file with one expression per line");
  sheaf->excludes(batch);
  c_coh->add_option("--twists", coh.twists, "lo..hi")->required();
  c_coh->add_option("--threefold", coh.threefold, "preset name or JSON file");
  c_coh->add_option("--declare", coh.declares, "NAME=rank,c1,n2,n3[,lf]");
  c_coh->add_option("--hint", coh.hints, "NAME:i:t=n or NAME:i:t=lo..hi");

  std::string spec_x;
  std::int64_t spec_r = 0;
  bool spec_norm = false;
  auto* c_spec = app.add_subcommand("spectrum", "spectrum point of twisted cotangent bundles");
  c_spec->add_option("--threefold", spec_x)->required();
  c_spec->add_option("--r", spec_r)->required();
  c_spec->add_flag("--normalize", spec_norm);

  SubArgs sub;
  auto* c_sub = app.add_subcommand("subfoliation", "subfoliation splitting and singular set");
  c_sub->add_option("--threefold", sub.threefold);
  c_sub->add_option("--c1", sub.f)->required();
  c_sub->add_option("--tg", sub.tg, "c1(T_G)")->required();
  c_sub->add_option("--sing1f", sub.sing1f)->required()->check(
      CLI::IsMember({"empty", "irred", "other"}));
  c_sub->add_flag("--generic", sub.generic);

  ConnArgs conn;
  auto* c_conn = app.add_subcommand("conncomp", "connected components of sing_1");
  c_conn->add_option("--threefold", conn.threefold);
  c_conn->add_option("--c1", conn.f)->required();
  auto* h2o = c_conn->add_option("--h2", conn.h2, "n or lo..hi");
  auto* gen = c_conn->add_flag("--generic", conn.generic, "use the generic-case h2 on p3");
  h2o->excludes(gen);
  c_conn->add_option("--c3", conn.c3)->required();
  c_conn->add_flag("--assume-h1-tx-lf", conn.assume_h1_tx, "h1(TX x L_F^v) = 0 off p3");
  c_conn->add_flag("--assume-h2-tx-lf", conn.assume_h2_tx, "h2(TX x L_F^v) = 0 off p3");
  c_conn->add_flag("--assume-h1-ox", conn.assume_h1_ox, "h1(O_X) = 0 off p3");

  auto* c_pre = app.add_subcommand("presets", "threefold presets");
  c_pre->require_subcommand(1);
  c_pre->add_subcommand("list", "list built-in and $SHEAFCALC_PRESETS presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    // Requirement checks run before unknown flags are reported; a misspelt
    // flag is the more useful thing to echo.
    for (int i = 1; i < argc; ++i) {
      std::string arg = argv[i];
      if (arg.rfind("--", 0) != 0) continue;
      arg = arg.substr(0, arg.find('='));
      bool known = app.get_option_no_throw(arg) != nullptr;
      for (const auto* sub : app.get_subcommands()) known = known || sub->get_option_no_throw(arg);
      if (!known) {
        std::cerr << "usage error: unexpected argument: " << arg << '\n';
        return 2;
      }
    }
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  try {
    Json doc;
    BatchResult br;
    if (c_inv->parsed()) {
      if (!inv.degree && !inv.c1) throw UsageError("--degree or --c1 is required");
      doc = run_invariants(inv);
    } else if (c_mod->parsed()) {
      doc = run_moduli(moduli_d);
    } else if (c_coh->parsed()) {
      if (coh.sheaf.empty() && coh.batch.empty()) throw UsageError("--sheaf or --batch is required");
      doc = run_cohomology(coh, br);
      if (!coh.batch.empty()) {
        emit_many(std::cout, br.docs, fmt);
        if (br.first_error) {
          std::cerr << br.first_error->name() << ": " << br.first_error->what() << '\n';
          return 3;
        }
        return 0;
      }
    } else if (c_spec->parsed()) {
      doc = run_spectrum(spec_x, spec_r, spec_norm);
    } else if (c_sub->parsed()) {
      doc = run_subfoliation(sub);
    } else if (c_conn->parsed()) {
      if (!conn.h2 && !conn.generic) throw UsageError("--h2 or --generic is required");
      doc = run_conncomp(conn);
    } else {
      doc = run_presets();
    }
    emit(std::cout, doc, fmt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const EngineFailure& e) {
    std::cerr << e.name() << ": " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace
}  // namespace cli

int main(int argc, char** argv) { return cli::run(argc, argv); }
