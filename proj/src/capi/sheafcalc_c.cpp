#include "sheafcalc/sheafcalc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "sheafcalc/chow.hpp"
#include "sheafcalc/cohomology.hpp"
#include "sheafcalc/dist.hpp"
#include "sheafcalc/modulispec.hpp"
#include "sheafcalc/sheafdsl.hpp"

using namespace sheafcalc;

struct sc_threefold {
  ThreefoldData data;
};

struct sc_preset_list {
  std::vector<ThreefoldData> items;
};

struct sc_table {
  cohomology::CohomTable table;
};

struct sc_env {
  dsl::Environment env;
};

struct sc_expr {
  dsl::ExprPtr expr;
};

namespace {

thread_local std::string g_last_error;

sc_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonIntegralChernClass: return SC_NON_INTEGRAL_CHERN_CLASS;
    case ErrorKind::NonIntegralChi: return SC_NON_INTEGRAL_CHI;
    case ErrorKind::UnsupportedRank: return SC_UNSUPPORTED_RANK;
    case ErrorKind::ArityError: return SC_ARITY_ERROR;
    case ErrorKind::NotComputable: return SC_NOT_COMPUTABLE;
    case ErrorKind::Inconsistent: return SC_INCONSISTENT;
    case ErrorKind::SyntaxError: return SC_SYNTAX_ERROR;
    case ErrorKind::RankError: return SC_RANK_ERROR;
    case ErrorKind::UnknownIdentifier: return SC_UNKNOWN_IDENTIFIER;
    case ErrorKind::MissingInvariant: return SC_MISSING_INVARIANT;
    case ErrorKind::HypothesisError: return SC_HYPOTHESIS_ERROR;
    case ErrorKind::NegativeLength: return SC_NEGATIVE_LENGTH;
    case ErrorKind::NegativeCount: return SC_NEGATIVE_COUNT;
    case ErrorKind::NegativeCurveClass: return SC_NEGATIVE_CURVE_CLASS;
    case ErrorKind::DomainError: return SC_DOMAIN_ERROR;
    case ErrorKind::InvalidThreefold: return SC_INVALID_THREEFOLD;
    case ErrorKind::Overflow: return SC_OVERFLOW;
  }
  return SC_INTERNAL;
}

sc_status fail(sc_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
sc_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SC_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SC_INTERNAL, e.what());
  }
}

#define SC_REQUIRE(cond)                                          \
  do {                                                            \
    if (!(cond)) return fail(SC_INVALID_ARGUMENT, "null argument"); \
  } while (0)

ChernData from_c(const sc_chern& c) { return {c.rank, c.c1, c.n2, c.n3}; }
sc_chern to_c(const ChernData& c) { return {c.rank, c.c1, c.n2, c.n3}; }

sc_dim to_c(const cohomology::DimEntry& e) { return {e.lo(), e.hi()}; }
cohomology::DimEntry from_c(const sc_dim& d) {
  if (d.lo == 0 && d.hi == SC_DIM_UNBOUNDED) return cohomology::DimEntry::unknown();
  return cohomology::DimEntry::bounded(d.lo, d.hi);
}

sc_rational to_c(const Rational& q) {
  return {narrow(boost::multiprecision::numerator(q)),
          narrow(boost::multiprecision::denominator(q))};
}

Rational from_c(const sc_rational& q) {
  if (q.den <= 0) throw Error(ErrorKind::DomainError, "denominator must be positive");
  return Rational(BigInt(q.num), BigInt(q.den));
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dist::DistributionProfile profile(const sc_threefold* X, int64_t f, int generic) {
  return {X->data, f, generic != 0};
}

const char* static_branch(const std::string& s) {
  static const char* known[] = {"Y = sing_1(G)", "sing_0(G) empty", "sing(G) = Y u sing_1(F)",
                                "Y contained in sing_1(G)"};
  for (const char* k : known)
    if (s == k) return k;
  return "unrecognized branch";
}

const char* static_source(const std::string& s) {
  static const char* known[] = {"thmE", "corP3d2", "emptySingularScheme"};
  for (const char* k : known)
    if (s == k) return k;
  return "unknown";
}

modulispec::SpectrumPoint point_from_c(const sc_threefold* X, const sc_spectrum_point& p) {
  return {X->data, p.r, from_c(p.triple)};
}

sc_spectrum_point point_to_c(const modulispec::SpectrumPoint& p) {
  return {p.r, to_c(p.triple)};
}

}  // namespace

extern "C" {

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "OK";
    case SC_NON_INTEGRAL_CHERN_CLASS: return "NonIntegralChernClass";
    case SC_NON_INTEGRAL_CHI: return "NonIntegralChi";
    case SC_UNSUPPORTED_RANK: return "UnsupportedRank";
    case SC_ARITY_ERROR: return "ArityError";
    case SC_NOT_COMPUTABLE: return "NotComputable";
    case SC_INCONSISTENT: return "Inconsistent";
    case SC_SYNTAX_ERROR: return "SyntaxError";
    case SC_RANK_ERROR: return "RankError";
    case SC_UNKNOWN_IDENTIFIER: return "UnknownIdentifier";
    case SC_MISSING_INVARIANT: return "MissingInvariant";
    case SC_HYPOTHESIS_ERROR: return "HypothesisError";
    case SC_NEGATIVE_LENGTH: return "NegativeLength";
    case SC_NEGATIVE_COUNT: return "NegativeCount";
    case SC_NEGATIVE_CURVE_CLASS: return "NegativeCurveClass";
    case SC_DOMAIN_ERROR: return "DomainError";
    case SC_INVALID_THREEFOLD: return "InvalidThreefold";
    case SC_OVERFLOW: return "Overflow";
    case SC_INVALID_ARGUMENT: return "InvalidArgument";
    case SC_INTERNAL: return "InternalError";
  }
  return "InternalError";
}

const char* sc_last_error(void) { return g_last_error.c_str(); }

const char* sc_version(void) { return "0.1.0"; }

void sc_string_free(char* s) { std::free(s); }

// ---------------------------------------------------------------------------

sc_status sc_threefold_resolve(const char* name_or_path, sc_threefold** out) {
  SC_REQUIRE(name_or_path && out);
  return guard([&] { *out = new sc_threefold{resolve_threefold(name_or_path)}; });
}

sc_status sc_threefold_from_json(const char* json, sc_threefold** out) {
  SC_REQUIRE(json && out);
  return guard([&] { *out = new sc_threefold{threefold_from_json(json)}; });
}

sc_status sc_threefold_info_get(const sc_threefold* X, sc_threefold_info* out) {
  SC_REQUIRE(X && out);
  const ThreefoldData& d = X->data;
  sc_threefold_info info{};
  info.name = d.name.c_str();
  info.h3 = d.h3;
  info.cX = d.cX;
  info.c2TX_H = d.c2TX_H;
  info.c3TX = d.c3TX;
  info.has_rho = d.rhoX.has_value();
  info.rho = d.rhoX.value_or(0);
  info.has_gamma = d.gammaX.has_value();
  info.gamma = d.gammaX.value_or(0);
  info.tx_stable = d.tx_stable == TangentStability::Stable       ? SC_TX_STABLE
                   : d.tx_stable == TangentStability::Semistable ? SC_TX_SEMISTABLE
                                                                 : SC_TX_UNKNOWN;
  info.h1_line_vanishing = d.h1_line_vanishing;
  *out = info;
  g_last_error.clear();
  return SC_OK;
}

sc_status sc_threefold_to_json(const sc_threefold* X, char** out) {
  SC_REQUIRE(X && out);
  return guard([&] { *out = dup_string(threefold_to_json(X->data)); });
}

int sc_threefold_is_p3(const sc_threefold* X) { return X && is_projective_space(X->data); }

void sc_threefold_free(sc_threefold* X) { delete X; }

sc_status sc_preset_list_open(sc_preset_list** out) {
  SC_REQUIRE(out);
  return guard([&] { *out = new sc_preset_list{list_threefolds()}; });
}

int sc_threefold_is_builtin(const sc_threefold* X) {
  if (!X) return 0;
  const auto found = presets::find(X->data.name);
  return found && *found == X->data;
}

size_t sc_preset_list_size(const sc_preset_list* list) { return list ? list->items.size() : 0; }

sc_status sc_preset_list_get(const sc_preset_list* list, size_t i, sc_threefold** out) {
  SC_REQUIRE(list && out);
  if (i >= list->items.size()) return fail(SC_INVALID_ARGUMENT, "preset index out of range");
  return guard([&] { *out = new sc_threefold{list->items[i]}; });
}

void sc_preset_list_free(sc_preset_list* list) { delete list; }

// ---------------------------------------------------------------------------

sc_status sc_line_bundle(int64_t t, sc_chern* out) {
  SC_REQUIRE(out);
  return guard([&] { *out = to_c(line_bundle(t)); });
}

sc_status sc_tangent_bundle(const sc_threefold* X, sc_chern* out) {
  SC_REQUIRE(X && out);
  return guard([&] { *out = to_c(tangent_bundle(X->data)); });
}

sc_status sc_cotangent_bundle(const sc_threefold* X, sc_chern* out) {
  SC_REQUIRE(X && out);
  return guard([&] { *out = to_c(cotangent_bundle(X->data)); });
}

sc_status sc_chern_to_ch(const sc_threefold* X, const sc_chern* c, sc_chow* out) {
  SC_REQUIRE(X && c && out);
  return guard([&] {
    const ChowClass ch = chern_to_ch(from_c(*c), X->data);
    sc_chow r{};
    r.a[0] = to_c(ch.a0);
    r.a[1] = to_c(ch.a1);
    r.a[2] = to_c(ch.a2);
    r.a[3] = to_c(ch.a3);
    *out = r;
  });
}

sc_status sc_ch_to_chern(const sc_threefold* X, const sc_chow* ch, sc_chern* out) {
  SC_REQUIRE(X && ch && out);
  return guard([&] {
    const ChowClass k{from_c(ch->a[0]), from_c(ch->a[1]), from_c(ch->a[2]), from_c(ch->a[3])};
    *out = to_c(ch_to_chern(k, X->data));
  });
}

sc_status sc_hrr_chi(const sc_threefold* X, const sc_chern* c, int64_t* out) {
  SC_REQUIRE(X && c && out);
  return guard([&] { *out = hrr_chi(from_c(*c), X->data); });
}

sc_status sc_twist(const sc_threefold* X, const sc_chern* c, int64_t t, sc_chern* out) {
  SC_REQUIRE(X && c && out);
  return guard([&] {
    const ChernData in = from_c(*c);
    *out = to_c(in.rank >= 1 && in.rank <= 3 ? twist_chern(in, t, X->data)
                                             : twist_any_rank(in, t, X->data));
  });
}

sc_status sc_dual(const sc_chern* c, sc_chern* out) {
  SC_REQUIRE(c && out);
  return guard([&] { *out = to_c(dual_chern(from_c(*c))); });
}

sc_status sc_rdual(const sc_threefold* X, const sc_chern* c, sc_chern* out) {
  SC_REQUIRE(X && c && out);
  return guard([&] { *out = to_c(reflexive_dual_rank2(from_c(*c), X->data)); });
}

sc_status sc_ses_third(const sc_threefold* X, const sc_chern* a, const sc_chern* b,
                       const sc_chern* c, sc_chern* out) {
  SC_REQUIRE(X && out);
  auto opt = [](const sc_chern* p) -> std::optional<ChernData> {
    if (!p) return std::nullopt;
    return from_c(*p);
  };
  return guard([&] { *out = to_c(ses_third(opt(a), opt(b), opt(c), X->data)); });
}

// ---------------------------------------------------------------------------

sc_status sc_bott_h(int p, int q, int64_t t, int64_t* out) {
  SC_REQUIRE(out);
  return guard([&] { *out = cohomology::bott_h(p, q, t); });
}

sc_status sc_line_h(const sc_threefold* X, int i, int64_t t, int64_t* out) {
  SC_REQUIRE(X && out);
  return guard([&] { *out = cohomology::line_h(X->data, i, t); });
}

sc_status sc_serre_tangent_h(const sc_threefold* X, int q, int64_t t, int64_t* out) {
  SC_REQUIRE(X && out);
  return guard([&] { *out = cohomology::serre_tangent_h(X->data, q, t); });
}

sc_status sc_generic_dist_cohom(int64_t d, int64_t p, sc_dim out[4]) {
  SC_REQUIRE(out);
  return guard([&] {
    const auto col = cohomology::generic_dist_cohom(d, p);
    for (int i = 0; i < 4; ++i) out[i] = to_c(col[i]);
  });
}

sc_status sc_generic_dist_cohom_chase(int64_t d, int64_t p, sc_dim out[4]) {
  SC_REQUIRE(out);
  return guard([&] {
    const auto col = cohomology::generic_dist_cohom_chase(d, p);
    for (int i = 0; i < 4; ++i) out[i] = to_c(col[i]);
  });
}

sc_status sc_table_range(const sc_table* tab, int64_t* lo, int64_t* hi) {
  SC_REQUIRE(tab && lo && hi);
  *lo = tab->table.lo();
  *hi = tab->table.hi();
  g_last_error.clear();
  return SC_OK;
}

sc_status sc_table_get(const sc_table* tab, int i, int64_t t, sc_dim* out) {
  SC_REQUIRE(tab && out);
  if (i < 0 || i > 3 || t < tab->table.lo() || t > tab->table.hi()) {
    return fail(SC_DOMAIN_ERROR, "cohomology index out of range");
  }
  *out = to_c(tab->table.at(i, t));
  g_last_error.clear();
  return SC_OK;
}

int sc_table_chern(const sc_table* tab, sc_chern* out) {
  if (!tab || !out || !tab->table.chern()) return 0;
  *out = to_c(*tab->table.chern());
  return 1;
}

void sc_table_free(sc_table* tab) { delete tab; }

// ---------------------------------------------------------------------------

sc_status sc_env_new(sc_env** out) {
  SC_REQUIRE(out);
  return guard([&] { *out = new sc_env{}; });
}

sc_status sc_env_declare(sc_env* env, const char* id, const sc_chern* chern, int locally_free) {
  SC_REQUIRE(env && id && chern);
  return guard([&] {
    env->env = env->env.with({id, from_c(*chern), locally_free != 0, std::nullopt});
  });
}

sc_status sc_env_hint(sc_env* env, const char* id, int i, int64_t t, sc_dim value) {
  SC_REQUIRE(env && id);
  return guard([&] {
    const dsl::NamedDecl* found = env->env.find(id);
    if (!found) throw Error(ErrorKind::UnknownIdentifier, std::string("undeclared sheaf '") + id + "'");
    dsl::NamedDecl decl = *found;
    std::int64_t lo = t, hi = t;
    if (decl.hints) {
      lo = std::min(lo, decl.hints->lo());
      hi = std::max(hi, decl.hints->hi());
    }
    cohomology::CohomTable tab(lo, hi, decl.chern);
    if (decl.hints) {
      for (std::int64_t u = decl.hints->lo(); u <= decl.hints->hi(); ++u)
        tab.set_column(u, decl.hints->column(u));
    }
    tab.set(i, t, from_c(value));
    decl.hints = std::move(tab);
    env->env = env->env.with(std::move(decl));
  });
}

void sc_env_free(sc_env* env) { delete env; }

sc_status sc_expr_parse(const char* text, sc_expr** out, size_t* error_offset) {
  SC_REQUIRE(text && out);
  try {
    *out = new sc_expr{dsl::parse(text)};
    g_last_error.clear();
    return SC_OK;
  } catch (const SyntaxError& e) {
    if (error_offset) *error_offset = e.offset();
    return fail(SC_SYNTAX_ERROR, e.what());
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::exception& e) {
    return fail(SC_INTERNAL, e.what());
  }
}

sc_status sc_expr_print(const sc_expr* e, char** out) {
  SC_REQUIRE(e && out);
  return guard([&] { *out = dup_string(dsl::print(*e->expr)); });
}

sc_status sc_expr_chern(const sc_expr* e, const sc_threefold* X, const sc_env* env,
                        sc_chern* out) {
  SC_REQUIRE(e && X && out);
  return guard([&] {
    *out = to_c(dsl::chern_of(*e->expr, X->data, env ? env->env : dsl::Environment{}));
  });
}

sc_status sc_expr_cohom(const sc_expr* e, const sc_threefold* X, const sc_env* env, int64_t lo,
                        int64_t hi, sc_table** out) {
  SC_REQUIRE(e && X && out);
  return guard([&] {
    *out = new sc_table{
        dsl::cohom_of(*e->expr, lo, hi, X->data, env ? env->env : dsl::Environment{})};
  });
}

void sc_expr_free(sc_expr* e) { delete e; }

// ---------------------------------------------------------------------------

const char* sc_stability_name(sc_stability s) {
  switch (s) {
    case SC_STABLE: return "Stable";
    case SC_SEMISTABLE: return "Semistable";
    case SC_INCONCLUSIVE: return "Inconclusive";
  }
  return "Inconclusive";
}

const char* sc_stability_reason_name(sc_stability_reason r) {
  switch (r) {
    case SC_REASON_RHO_BOUND: return "RhoBound";
    case SC_REASON_TX_STABLE: return "TXStable";
    case SC_REASON_TX_SEMISTABLE: return "TXSemistable";
    case SC_REASON_HYPOTHESIS_FAILS: return "HypothesisFails";
  }
  return "HypothesisFails";
}

sc_status sc_stability_classify(const sc_threefold* X, int64_t f, int generic,
                                sc_stability_verdict* out) {
  SC_REQUIRE(X && out);
  return guard([&] {
    const auto v = dist::stability_classify(profile(X, f, generic));
    sc_stability_verdict r{};
    r.status = v.status == dist::Stability::Stable       ? SC_STABLE
               : v.status == dist::Stability::Semistable ? SC_SEMISTABLE
                                                         : SC_INCONCLUSIVE;
    switch (v.reason) {
      case dist::StabilityReason::RhoBound: r.reason = SC_REASON_RHO_BOUND; break;
      case dist::StabilityReason::TXStable: r.reason = SC_REASON_TX_STABLE; break;
      case dist::StabilityReason::TXSemistable: r.reason = SC_REASON_TX_SEMISTABLE; break;
      case dist::StabilityReason::HypothesisFails: r.reason = SC_REASON_HYPOTHESIS_FAILS; break;
    }
    *out = r;
  });
}

sc_status sc_dist_chern(const sc_threefold* X, int64_t f, int generic, sc_chern* out) {
  SC_REQUIRE(X && out);
  return guard([&] { *out = to_c(dist::dist_chern(profile(X, f, generic))); });
}

sc_status sc_dist_chern_from_sequence(const sc_threefold* X, int64_t f, int generic,
                                      sc_chern* out) {
  SC_REQUIRE(X && out);
  return guard([&] { *out = to_c(dist::dist_chern_from_sequence(profile(X, f, generic))); });
}

sc_status sc_singular_length(const sc_threefold* X, int64_t f, int generic, int64_t* out) {
  SC_REQUIRE(X && out);
  return guard([&] { *out = dist::singular_length(profile(X, f, generic)); });
}

const char* sc_split_name(sc_split s) { return s == SC_SPLITS ? "Splits" : "Unknown"; }

const char* sc_sing_structure_name(sc_sing_structure s) {
  switch (s) {
    case SC_Y_EQUALS_SING1G: return "YEqualsSing1G";
    case SC_UNION_WITH_SING1F: return "UnionWithSing1F";
    case SC_CASE_SPLIT: return "CaseSplit";
  }
  return "CaseSplit";
}

sc_status sc_subfoliation_analyze(const sc_threefold* X, int64_t f, int generic, int64_t tG,
                                  sc_sing1f sing1f, sc_subfoliation_report* out) {
  SC_REQUIRE(X && out);
  dist::Sing1F s;
  switch (sing1f) {
    case SC_SING1F_EMPTY: s = dist::Sing1F::Empty; break;
    case SC_SING1F_IRRED: s = dist::Sing1F::IrreducibleReduced; break;
    case SC_SING1F_OTHER: s = dist::Sing1F::Other; break;
    default: return fail(SC_INVALID_ARGUMENT, "unknown sing1f value");
  }
  return guard([&] {
    const auto rep = dist::subfoliation_analyze(profile(X, f, generic), tG, s);
    sc_subfoliation_report r{};
    r.tG = rep.tG;
    r.lfg_degree = rep.lfg_degree;
    r.has_y_class = rep.y_class.has_value();
    r.y_class = rep.y_class.value_or(0);
    r.split_degree = rep.split_degree;
    r.statement_degree = rep.statement_degree;
    r.split = rep.split == dist::Split::Splits ? SC_SPLITS : SC_SPLIT_UNKNOWN;
    switch (rep.sing_structure) {
      case dist::SingStructure::YEqualsSing1G: r.sing_structure = SC_Y_EQUALS_SING1G; break;
      case dist::SingStructure::UnionWithSing1F: r.sing_structure = SC_UNION_WITH_SING1F; break;
      case dist::SingStructure::CaseSplit: r.sing_structure = SC_CASE_SPLIT; break;
    }
    r.branch_count = std::min<size_t>(rep.branches.size(), SC_MAX_BRANCHES);
    for (size_t k = 0; k < r.branch_count; ++k) r.branches[k] = static_branch(rep.branches[k]);
    *out = r;
  });
}

sc_status sc_conn_components(const sc_threefold* X, int64_t f, int generic, sc_dim h2_tf_lf,
                             int64_t c3_tf, const sc_conn_hypotheses* supplied,
                             sc_conn_report* out) {
  SC_REQUIRE(X && out);
  return guard([&] {
    dist::ConnHypotheses hyp;
    if (supplied) {
      hyp.h1_tx_lf_vanishes = supplied->h1_tx_lf_vanishes != 0;
      hyp.h2_tx_lf_vanishes = supplied->h2_tx_lf_vanishes != 0;
      hyp.h1_ox_vanishes = supplied->h1_ox_vanishes != 0;
    }
    const auto rep = dist::conn_components(profile(X, f, generic), from_c(h2_tf_lf), c3_tf, hyp);
    sc_conn_report r{};
    r.lo = rep.count.lo;
    r.hi = rep.count.hi;
    r.exact = rep.count.exact();
    r.hypotheses = {rep.hypotheses.h1_tx_lf_vanishes, rep.hypotheses.h2_tx_lf_vanishes,
                    rep.hypotheses.h1_ox_vanishes};
    r.source = static_source(rep.source);
    *out = r;
  });
}

sc_status sc_generic_h2_tf_lf(int64_t d, sc_dim* out) {
  SC_REQUIRE(out);
  return guard([&] { *out = to_c(dist::generic_h2_tf_lf(d)); });
}

// ---------------------------------------------------------------------------

sc_status sc_moduli_report_get(int64_t d, sc_moduli_report* out) {
  SC_REQUIRE(out);
  return guard([&] {
    const auto rep = modulispec::moduli_report(d);
    sc_moduli_report r{};
    r.d = rep.d;
    r.chern = to_c(rep.chern);
    r.normalized = to_c(rep.normalized);
    r.dim_component = rep.dim_component;
    r.ext1 = rep.ext1;
    r.ext2 = rep.ext2;
    r.smooth_point = rep.smooth_point;
    r.rational = rep.rational ? (*rep.rational ? 1 : 0) : -1;
    r.family_dim = rep.family_dim;
    *out = r;
  });
}

sc_status sc_ext2_dimension(int64_t d, int64_t* out) {
  SC_REQUIRE(out);
  return guard([&] { *out = modulispec::ext2_dimension(d); });
}

sc_status sc_ext2_from_cohomology(int64_t d, int64_t* out) {
  SC_REQUIRE(out);
  return guard([&] { *out = modulispec::ext2_from_cohomology(d); });
}

sc_status sc_global_gen_resolution(int64_t d, sc_resolution* out) {
  SC_REQUIRE(out);
  return guard([&] {
    const auto res = modulispec::global_gen_resolution(d);
    *out = {res.d,     res.middle_rank, res.kernel_has_line, res.kernel_line_twist,
            res.h0_Fd, to_c(res.kernel), to_c(res.cokernel)};
  });
}

sc_status sc_curve_family_get(int64_t d, sc_curve_family* out) {
  SC_REQUIRE(out);
  return guard([&] {
    const auto c = modulispec::curve_family(d);
    *out = {c.d, c.degree, c.genus, c.points, c.family_dim, c.c3_twisted, c.c3_from_genus};
  });
}

sc_status sc_spectrum_point_get(const sc_threefold* X, int64_t r, sc_spectrum_point* out) {
  SC_REQUIRE(X && out);
  return guard([&] { *out = point_to_c(modulispec::spectrum_point(X->data, r)); });
}

sc_status sc_pic_act(const sc_threefold* X, const sc_spectrum_point* p, int64_t t,
                     sc_spectrum_point* out) {
  SC_REQUIRE(X && p && out);
  return guard([&] { *out = point_to_c(modulispec::pic_act(point_from_c(X, *p), t)); });
}

sc_status sc_normalize(const sc_threefold* X, const sc_spectrum_point* p,
                       sc_spectrum_point* out) {
  SC_REQUIRE(X && p && out);
  return guard([&] { *out = point_to_c(modulispec::normalize(point_from_c(X, *p))); });
}

}  // extern "C"
