/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "sheafcalc/sheafcalc.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int chern_eq(sc_chern c, int64_t r, int64_t c1, int64_t n2, int64_t n3) {
  return c.rank == r && c.c1 == c1 && c.n2 == n2 && c.n3 == n3;
}

static void test_status_names(void) {
  EXPECT(strcmp(sc_status_name(SC_OK), "OK") == 0);
  EXPECT(strcmp(sc_status_name(SC_HYPOTHESIS_ERROR), "HypothesisError") == 0);
  EXPECT(strcmp(sc_status_name(SC_NON_INTEGRAL_CHERN_CLASS), "NonIntegralChernClass") == 0);
  EXPECT(strcmp(sc_version(), "0.1.0") == 0);
}

static void test_threefolds(void) {
  sc_threefold* p3 = NULL;
  sc_threefold* bad = NULL;
  sc_threefold_info info;
  sc_preset_list* list = NULL;
  char* json = NULL;
  sc_threefold* again = NULL;

  EXPECT(sc_threefold_resolve("p3", &p3) == SC_OK);
  EXPECT(sc_threefold_info_get(p3, &info) == SC_OK);
  EXPECT(strcmp(info.name, "p3") == 0);
  EXPECT(info.h3 == 1 && info.cX == 4 && info.c2TX_H == 6 && info.c3TX == 4);
  EXPECT(info.has_rho && info.rho == 2);
  EXPECT(info.tx_stable == SC_TX_STABLE);
  EXPECT(sc_threefold_is_p3(p3));

  EXPECT(sc_threefold_resolve("no-such-threefold", &bad) == SC_INVALID_THREEFOLD);
  EXPECT(bad == NULL);
  EXPECT(strlen(sc_last_error()) > 0);
  EXPECT(sc_threefold_resolve(NULL, &bad) == SC_INVALID_ARGUMENT);

  EXPECT(sc_threefold_to_json(p3, &json) == SC_OK);
  EXPECT(sc_threefold_from_json(json, &again) == SC_OK);
  EXPECT(sc_threefold_is_p3(again));
  sc_string_free(json);
  sc_threefold_free(again);

  EXPECT(sc_preset_list_open(&list) == SC_OK);
  EXPECT(sc_preset_list_size(list) >= 3);
  EXPECT(sc_preset_list_get(list, 1000, &again) == SC_INVALID_ARGUMENT);
  sc_preset_list_free(list);
  sc_threefold_free(p3);
}

static void test_chern(void) {
  sc_threefold* p3 = NULL;
  sc_chern tx, out, a, b;
  sc_chow ch;
  int64_t chi = 0;

  sc_threefold_resolve("p3", &p3);
  EXPECT(sc_tangent_bundle(p3, &tx) == SC_OK);
  EXPECT(chern_eq(tx, 3, 4, 6, 4));
  EXPECT(sc_hrr_chi(p3, &tx, &chi) == SC_OK && chi == 15);
  EXPECT(sc_twist(p3, &tx, -2, &out) == SC_OK && chern_eq(out, 3, -2, 2, 0));

  EXPECT(sc_chern_to_ch(p3, &tx, &ch) == SC_OK);
  EXPECT(ch.a[3].num == 2 && ch.a[3].den == 3);
  EXPECT(sc_ch_to_chern(p3, &ch, &out) == SC_OK && chern_eq(out, 3, 4, 6, 4));
  ch.a[0].num = 3;
  ch.a[0].den = 2;
  EXPECT(sc_ch_to_chern(p3, &ch, &out) == SC_NON_INTEGRAL_CHERN_CLASS);

  a.rank = 2; a.c1 = 1; a.n2 = 3; a.n3 = 5;
  EXPECT(sc_dual(&a, &out) == SC_OK && chern_eq(out, 2, -1, 3, -5));
  EXPECT(sc_rdual(p3, &a, &out) == SC_OK && chern_eq(out, 2, -1, 3, 5));
  EXPECT(sc_rdual(p3, &tx, &out) == SC_UNSUPPORTED_RANK);

  sc_line_bundle(-4, &a);
  sc_cotangent_bundle(p3, &b);
  EXPECT(sc_ses_third(p3, &a, &b, NULL, &out) == SC_OK && chern_eq(out, 2, 0, 6, 20));
  EXPECT(sc_ses_third(p3, &a, NULL, NULL, &out) == SC_ARITY_ERROR);
  sc_threefold_free(p3);
}

static void test_cohomology(void) {
  sc_threefold* p3 = NULL;
  sc_threefold* quintic = NULL;
  int64_t h = -1;
  sc_dim col[4];

  sc_threefold_resolve("p3", &p3);
  sc_threefold_resolve("quintic", &quintic);
  EXPECT(sc_bott_h(1, 0, 2, &h) == SC_OK && h == 6);
  EXPECT(sc_bott_h(5, 0, 2, &h) == SC_DOMAIN_ERROR);
  EXPECT(sc_line_h(p3, 0, 3, &h) == SC_OK && h == 20);
  EXPECT(sc_line_h(quintic, 2, -1, &h) == SC_NOT_COMPUTABLE);
  EXPECT(sc_serre_tangent_h(p3, 2, -4, &h) == SC_OK && h == 1);
  EXPECT(sc_generic_dist_cohom(2, 0, col) == SC_OK);
  EXPECT(col[1].lo == 1 && col[1].hi == 1);
  EXPECT(sc_generic_dist_cohom(3, -5, col) == SC_OK);
  EXPECT(col[2].lo == 50 && col[2].hi == 120);
  EXPECT(sc_generic_dist_cohom_chase(3, 0, col) == SC_OK);
  EXPECT(col[2].lo == 10 && col[2].hi == 10);
  sc_threefold_free(p3);
  sc_threefold_free(quintic);
}

static void test_expressions(void) {
  sc_threefold* p3 = NULL;
  sc_threefold* quintic = NULL;
  sc_expr* e = NULL;
  sc_expr* bad = NULL;
  sc_env* env = NULL;
  sc_table* tab = NULL;
  sc_chern c;
  sc_dim v;
  size_t offset = 0;
  char* text = NULL;
  int64_t lo = 0, hi = 0;

  sc_threefold_resolve("p3", &p3);
  sc_threefold_resolve("quintic", &quintic);
  EXPECT(sc_expr_parse("coker( O(-2)->Omega1(1) )", &e, &offset) == SC_OK);
  EXPECT(sc_expr_print(e, &text) == SC_OK);
  EXPECT(strcmp(text, "coker(O(-2) -> Omega1(1))") == 0);
  sc_string_free(text);
  EXPECT(sc_expr_chern(e, p3, NULL, &c) == SC_OK && chern_eq(c, 2, 1, 3, 5));
  EXPECT(sc_expr_cohom(e, p3, NULL, -1, 1, &tab) == SC_OK);
  EXPECT(sc_table_range(tab, &lo, &hi) == SC_OK && lo == -1 && hi == 1);
  EXPECT(sc_table_get(tab, 1, -1, &v) == SC_OK && v.lo == 1 && v.hi == 1);
  EXPECT(sc_table_get(tab, 1, 5, &v) == SC_DOMAIN_ERROR);
  EXPECT(sc_table_chern(tab, &c) && chern_eq(c, 2, 1, 3, 5));
  sc_table_free(tab);
  tab = NULL;
  EXPECT(sc_expr_cohom(e, quintic, NULL, 0, 0, &tab) == SC_NOT_COMPUTABLE);
  EXPECT(tab == NULL);
  sc_expr_free(e);

  EXPECT(sc_expr_parse("O(3", &bad, &offset) == SC_SYNTAX_ERROR);
  EXPECT(offset == 3);
  EXPECT(bad == NULL);

  EXPECT(sc_env_new(&env) == SC_OK);
  c.rank = 2; c.c1 = 0; c.n2 = 6; c.n3 = 20;
  EXPECT(sc_env_declare(env, "F", &c, 0) == SC_OK);
  v.lo = 1; v.hi = 1;
  EXPECT(sc_env_hint(env, "F", 2, 0, v) == SC_OK);
  EXPECT(sc_env_hint(env, "G", 2, 0, v) == SC_UNKNOWN_IDENTIFIER);
  c.rank = 4;
  EXPECT(sc_env_declare(env, "B", &c, 1) == SC_UNSUPPORTED_RANK);
  EXPECT(sc_expr_parse("twist(F, 1)", &e, NULL) == SC_OK);
  EXPECT(sc_expr_chern(e, p3, env, &c) == SC_OK && chern_eq(c, 2, 2, 7, 20));
  EXPECT(sc_expr_chern(e, p3, NULL, &c) == SC_UNKNOWN_IDENTIFIER);
  EXPECT(sc_expr_cohom(e, p3, env, -1, 0, &tab) == SC_OK);
  EXPECT(sc_table_get(tab, 2, -1, &v) == SC_OK && v.lo == 1 && v.hi == 1);
  EXPECT(sc_table_get(tab, 0, -1, &v) == SC_OK && v.lo == 0 && v.hi == SC_DIM_UNBOUNDED);
  sc_table_free(tab);
  sc_expr_free(e);
  sc_env_free(env);
  sc_threefold_free(p3);
  sc_threefold_free(quintic);
}

static void test_distributions(void) {
  sc_threefold* p3 = NULL;
  sc_threefold* quintic = NULL;
  sc_stability_verdict v;
  sc_chern c;
  int64_t len = 0;
  sc_subfoliation_report sub;
  sc_conn_report conn;
  sc_dim h2;
  sc_conn_hypotheses supplied = {1, 1, 0};

  sc_threefold_resolve("p3", &p3);
  sc_threefold_resolve("quintic", &quintic);
  EXPECT(sc_stability_classify(p3, 2, 1, &v) == SC_OK);
  EXPECT(v.status == SC_STABLE && v.reason == SC_REASON_RHO_BOUND);
  EXPECT(strcmp(sc_stability_name(v.status), "Stable") == 0);
  EXPECT(sc_stability_classify(p3, 2, 0, &v) == SC_HYPOTHESIS_ERROR);

  EXPECT(sc_dist_chern(p3, 1, 1, &c) == SC_OK && chern_eq(c, 2, 1, 3, 5));
  EXPECT(sc_dist_chern_from_sequence(p3, 0, 1, &c) == SC_OK && chern_eq(c, 2, 0, 6, 20));
  EXPECT(sc_dist_chern(quintic, -2, 1, &c) == SC_OK && chern_eq(c, 2, -2, 70, 340));
  EXPECT(sc_singular_length(p3, -1, 1, &len) == SC_OK && len == 51);
  EXPECT(sc_singular_length(p3, 3, 1, &len) == SC_NEGATIVE_LENGTH);

  EXPECT(sc_subfoliation_analyze(p3, 1, 1, -1, SC_SING1F_EMPTY, &sub) == SC_OK);
  EXPECT(sub.lfg_degree == 2 && sub.has_y_class && sub.y_class == 5);
  EXPECT(sub.split == SC_SPLITS && sub.sing_structure == SC_Y_EQUALS_SING1G);
  EXPECT(sub.branch_count == 2 && strcmp(sub.branches[0], "Y = sing_1(G)") == 0);
  EXPECT(sc_subfoliation_analyze(p3, 1, 0, 0, SC_SING1F_IRRED, &sub) == SC_OK);
  EXPECT(sub.sing_structure == SC_CASE_SPLIT && !sub.has_y_class);
  EXPECT(sc_subfoliation_analyze(p3, 1, 0, 0, (sc_sing1f)9, &sub) == SC_INVALID_ARGUMENT);

  h2.lo = 7; h2.hi = 7;
  EXPECT(sc_conn_components(p3, 1, 0, h2, 7, NULL, &conn) == SC_OK);
  EXPECT(conn.exact && conn.lo == 1 && strcmp(conn.source, "thmE") == 0);
  h2.lo = 8; h2.hi = 8;
  EXPECT(sc_conn_components(p3, 0, 0, h2, 7, NULL, &conn) == SC_OK);
  EXPECT(!conn.exact && conn.lo == 1 && conn.hi == 2 && strcmp(conn.source, "corP3d2") == 0);
  h2.lo = 0; h2.hi = SC_DIM_UNBOUNDED;
  EXPECT(sc_conn_components(p3, 1, 0, h2, 7, NULL, &conn) == SC_MISSING_INVARIANT);
  h2.lo = 2; h2.hi = 2;
  EXPECT(sc_conn_components(quintic, -1, 0, h2, 2, NULL, &conn) == SC_HYPOTHESIS_ERROR);
  EXPECT(sc_conn_components(quintic, -1, 0, h2, 2, &supplied, &conn) == SC_OK);
  EXPECT(conn.exact && conn.lo == 1);
  EXPECT(sc_generic_h2_tf_lf(3, &h2) == SC_OK && h2.lo == 50 && h2.hi == 120);
  sc_threefold_free(p3);
  sc_threefold_free(quintic);
}

static void test_moduli(void) {
  sc_threefold* p3 = NULL;
  sc_threefold* quintic = NULL;
  sc_moduli_report m;
  sc_resolution res;
  sc_curve_family cf;
  sc_spectrum_point pt, moved, back;
  int64_t e2 = 0;

  sc_threefold_resolve("p3", &p3);
  sc_threefold_resolve("quintic", &quintic);
  EXPECT(sc_moduli_report_get(1, &m) == SC_OK);
  EXPECT(m.dim_component == 19 && chern_eq(m.normalized, 2, -1, 3, 5) && m.rational == 1);
  EXPECT(sc_moduli_report_get(2, &m) == SC_OK);
  EXPECT(m.dim_component == 45 && m.family_dim == 44 && m.rational == -1);
  EXPECT(sc_moduli_report_get(-1, &m) == SC_DOMAIN_ERROR);
  EXPECT(sc_ext2_dimension(4, &e2) == SC_OK && e2 == 6);
  EXPECT(sc_ext2_from_cohomology(4, &e2) == SC_OK && e2 == 6);

  EXPECT(sc_global_gen_resolution(0, &res) == SC_OK);
  EXPECT(res.h0_Fd == 5 && !res.kernel_has_line);
  EXPECT(sc_global_gen_resolution(2, &res) == SC_OK);
  EXPECT(res.h0_Fd == 6 && chern_eq(res.cokernel, 2, 4, 10, 20));

  EXPECT(sc_curve_family_get(3, &cf) == SC_OK);
  EXPECT(cf.degree == 17 && cf.genus == 35 && cf.points == 51 && cf.family_dim == 5);
  EXPECT(cf.c3_twisted == cf.c3_from_genus);

  EXPECT(sc_spectrum_point_get(quintic, 2, &pt) == SC_OK && chern_eq(pt.triple, 2, -2, 70, 340));
  EXPECT(sc_normalize(quintic, &pt, &moved) == SC_OK && chern_eq(moved.triple, 2, 0, 65, 340));
  EXPECT(sc_pic_act(quintic, &pt, 3, &moved) == SC_OK);
  EXPECT(sc_pic_act(quintic, &moved, -3, &back) == SC_OK && chern_eq(back.triple, 2, -2, 70, 340));
  EXPECT(sc_spectrum_point_get(quintic, 1, &pt) == SC_HYPOTHESIS_ERROR);
  EXPECT(strcmp(sc_status_name(SC_HYPOTHESIS_ERROR), "HypothesisError") == 0);
  sc_threefold_free(p3);
  sc_threefold_free(quintic);
}

int main(void) {
  test_status_names();
  test_threefolds();
  test_chern();
  test_cohomology();
  test_expressions();
  test_distributions();
  test_moduli();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
