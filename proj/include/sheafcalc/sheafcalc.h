#ifndef SHEAFCALC_H
#define SHEAFCALC_H

/*
 * C interface to the sheafcalc engine.
 *
 * Every function returns an sc_status. On failure the outputs are left
 * untouched and sc_last_error() holds a message for the calling thread.
 * Handles are opaque; each *_free accepts NULL.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SHEAFCALC_BUILDING)
#define SC_API __attribute__((visibility("default")))
#else
#define SC_API
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_NON_INTEGRAL_CHERN_CLASS,
  SC_NON_INTEGRAL_CHI,
  SC_UNSUPPORTED_RANK,
  SC_ARITY_ERROR,
  SC_NOT_COMPUTABLE,
  SC_INCONSISTENT,
  SC_SYNTAX_ERROR,
  SC_RANK_ERROR,
  SC_UNKNOWN_IDENTIFIER,
  SC_MISSING_INVARIANT,
  SC_HYPOTHESIS_ERROR,
  SC_NEGATIVE_LENGTH,
  SC_NEGATIVE_COUNT,
  SC_NEGATIVE_CURVE_CLASS,
  SC_DOMAIN_ERROR,
  SC_INVALID_THREEFOLD,
  SC_OVERFLOW,
  SC_INVALID_ARGUMENT, /* NULL pointer or out-of-range enum */
  SC_INTERNAL
} sc_status;

/* "NonIntegralChernClass", "HypothesisError", ...; "OK" for SC_OK. */
SC_API const char* sc_status_name(sc_status status);
/* Message of the last failure on this thread; "" if none. */
SC_API const char* sc_last_error(void);
SC_API const char* sc_version(void);

/* Frees strings returned through char** outputs. */
SC_API void sc_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Plain data */

typedef struct sc_chern {
  int64_t rank;
  int64_t c1; /* multiple of H */
  int64_t n2; /* c2.H */
  int64_t n3; /* deg c3 */
} sc_chern;

#define SC_DIM_UNBOUNDED INT64_MAX

/* Known(n) is {n, n}; Unknown is {0, SC_DIM_UNBOUNDED}. */
typedef struct sc_dim {
  int64_t lo;
  int64_t hi;
} sc_dim;

typedef struct sc_rational {
  int64_t num;
  int64_t den; /* > 0 */
} sc_rational;

/* a[k] is the coefficient of H^k. */
typedef struct sc_chow {
  sc_rational a[4];
} sc_chow;

typedef enum sc_tx_stability {
  SC_TX_STABLE = 0,
  SC_TX_SEMISTABLE = 1,
  SC_TX_UNKNOWN = 2
} sc_tx_stability;

/* ------------------------------------------------------------------ */
/* Threefolds */

typedef struct sc_threefold sc_threefold;

typedef struct sc_threefold_info {
  const char* name; /* owned by the handle */
  int64_t h3;
  int64_t cX;
  int64_t c2TX_H;
  int64_t c3TX;
  int has_rho;
  int64_t rho;
  int has_gamma;
  int64_t gamma;
  sc_tx_stability tx_stable;
  int h1_line_vanishing;
} sc_threefold_info;

/* Preset name, JSON file path, or <name>.json under $SHEAFCALC_PRESETS. */
SC_API sc_status sc_threefold_resolve(const char* name_or_path, sc_threefold** out);
SC_API sc_status sc_threefold_from_json(const char* json, sc_threefold** out);
SC_API sc_status sc_threefold_info_get(const sc_threefold* X, sc_threefold_info* out);
SC_API sc_status sc_threefold_to_json(const sc_threefold* X, char** out);
SC_API int sc_threefold_is_p3(const sc_threefold* X);
/* True for an unmodified built-in preset. */
SC_API int sc_threefold_is_builtin(const sc_threefold* X);
SC_API void sc_threefold_free(sc_threefold* X);

/* Built-in presets followed by those found in $SHEAFCALC_PRESETS. */
typedef struct sc_preset_list sc_preset_list;
SC_API sc_status sc_preset_list_open(sc_preset_list** out);
SC_API size_t sc_preset_list_size(const sc_preset_list* list);
SC_API sc_status sc_preset_list_get(const sc_preset_list* list, size_t i, sc_threefold** out);
SC_API void sc_preset_list_free(sc_preset_list* list);

/* ------------------------------------------------------------------ */
/* Chern calculus */

SC_API sc_status sc_line_bundle(int64_t t, sc_chern* out);
SC_API sc_status sc_tangent_bundle(const sc_threefold* X, sc_chern* out);
SC_API sc_status sc_cotangent_bundle(const sc_threefold* X, sc_chern* out);
SC_API sc_status sc_chern_to_ch(const sc_threefold* X, const sc_chern* c, sc_chow* out);
SC_API sc_status sc_ch_to_chern(const sc_threefold* X, const sc_chow* ch, sc_chern* out);
SC_API sc_status sc_hrr_chi(const sc_threefold* X, const sc_chern* c, int64_t* out);
/* Closed form for ranks 1-3, through the Chern character otherwise. */
SC_API sc_status sc_twist(const sc_threefold* X, const sc_chern* c, int64_t t, sc_chern* out);
SC_API sc_status sc_dual(const sc_chern* c, sc_chern* out);
SC_API sc_status sc_rdual(const sc_threefold* X, const sc_chern* c, sc_chern* out);
/* For 0 -> A -> B -> C -> 0; pass NULL for the unknown term. */
SC_API sc_status sc_ses_third(const sc_threefold* X, const sc_chern* a, const sc_chern* b,
                              const sc_chern* c, sc_chern* out);

/* ------------------------------------------------------------------ */
/* Cohomology */

SC_API sc_status sc_bott_h(int p, int q, int64_t t, int64_t* out);
SC_API sc_status sc_line_h(const sc_threefold* X, int i, int64_t t, int64_t* out);
SC_API sc_status sc_serre_tangent_h(const sc_threefold* X, int q, int64_t t, int64_t* out);
/* h^i(F(p)), i = 0..3, for F = coker(O(-2d) -> Omega1(2-d)) on P3. */
SC_API sc_status sc_generic_dist_cohom(int64_t d, int64_t p, sc_dim out[4]);
SC_API sc_status sc_generic_dist_cohom_chase(int64_t d, int64_t p, sc_dim out[4]);

typedef struct sc_table sc_table;
SC_API sc_status sc_table_range(const sc_table* tab, int64_t* lo, int64_t* hi);
SC_API sc_status sc_table_get(const sc_table* tab, int i, int64_t t, sc_dim* out);
/* Returns 0 when the table carries no Chern data. */
SC_API int sc_table_chern(const sc_table* tab, sc_chern* out);
SC_API void sc_table_free(sc_table* tab);

/* ------------------------------------------------------------------ */
/* Sheaf expressions */

typedef struct sc_env sc_env;
typedef struct sc_expr sc_expr;

SC_API sc_status sc_env_new(sc_env** out);
SC_API sc_status sc_env_declare(sc_env* env, const char* id, const sc_chern* chern,
                                int locally_free);
/* Records h^i(id(t)); the name must already be declared. */
SC_API sc_status sc_env_hint(sc_env* env, const char* id, int i, int64_t t, sc_dim value);
SC_API void sc_env_free(sc_env* env);

/* On SC_SYNTAX_ERROR, *error_offset (if non-NULL) is the byte offset. */
SC_API sc_status sc_expr_parse(const char* text, sc_expr** out, size_t* error_offset);
SC_API sc_status sc_expr_print(const sc_expr* e, char** out);
/* env may be NULL. */
SC_API sc_status sc_expr_chern(const sc_expr* e, const sc_threefold* X, const sc_env* env,
                               sc_chern* out);
SC_API sc_status sc_expr_cohom(const sc_expr* e, const sc_threefold* X, const sc_env* env,
                               int64_t lo, int64_t hi, sc_table** out);
SC_API void sc_expr_free(sc_expr* e);

/* ------------------------------------------------------------------ */
/* Distributions. A profile is (X, f = c1(T_F), generic). */

typedef enum sc_stability { SC_STABLE = 0, SC_SEMISTABLE = 1, SC_INCONCLUSIVE = 2 } sc_stability;
typedef enum sc_stability_reason {
  SC_REASON_RHO_BOUND = 0,
  SC_REASON_TX_STABLE = 1,
  SC_REASON_TX_SEMISTABLE = 2,
  SC_REASON_HYPOTHESIS_FAILS = 3
} sc_stability_reason;

typedef struct sc_stability_verdict {
  sc_stability status;
  sc_stability_reason reason;
} sc_stability_verdict;

SC_API const char* sc_stability_name(sc_stability s);
SC_API const char* sc_stability_reason_name(sc_stability_reason r);

SC_API sc_status sc_stability_classify(const sc_threefold* X, int64_t f, int generic,
                                       sc_stability_verdict* out);
SC_API sc_status sc_dist_chern(const sc_threefold* X, int64_t f, int generic, sc_chern* out);
SC_API sc_status sc_dist_chern_from_sequence(const sc_threefold* X, int64_t f, int generic,
                                             sc_chern* out);
SC_API sc_status sc_singular_length(const sc_threefold* X, int64_t f, int generic, int64_t* out);

typedef enum sc_sing1f { SC_SING1F_EMPTY = 0, SC_SING1F_IRRED = 1, SC_SING1F_OTHER = 2 } sc_sing1f;
typedef enum sc_split { SC_SPLITS = 0, SC_SPLIT_UNKNOWN = 1 } sc_split;
typedef enum sc_sing_structure {
  SC_Y_EQUALS_SING1G = 0,
  SC_UNION_WITH_SING1F = 1,
  SC_CASE_SPLIT = 2
} sc_sing_structure;

#define SC_MAX_BRANCHES 4

typedef struct sc_subfoliation_report {
  int64_t tG;
  int64_t lfg_degree;
  int has_y_class;
  int64_t y_class;
  int64_t split_degree;
  int64_t statement_degree;
  sc_split split;
  sc_sing_structure sing_structure;
  size_t branch_count;
  const char* branches[SC_MAX_BRANCHES]; /* static strings */
} sc_subfoliation_report;

SC_API const char* sc_split_name(sc_split s);
SC_API const char* sc_sing_structure_name(sc_sing_structure s);

SC_API sc_status sc_subfoliation_analyze(const sc_threefold* X, int64_t f, int generic,
                                         int64_t tG, sc_sing1f sing1f,
                                         sc_subfoliation_report* out);

typedef struct sc_conn_hypotheses {
  int h1_tx_lf_vanishes;
  int h2_tx_lf_vanishes;
  int h1_ox_vanishes;
} sc_conn_hypotheses;

typedef struct sc_conn_report {
  int64_t lo;
  int64_t hi; /* SC_DIM_UNBOUNDED when h2 has no upper bound */
  int exact;
  sc_conn_hypotheses hypotheses;
  const char* source; /* static: "thmE", "corP3d2" or "emptySingularScheme" */
} sc_conn_report;

/* supplied may be NULL; it is only consulted off P3. */
SC_API sc_status sc_conn_components(const sc_threefold* X, int64_t f, int generic,
                                    sc_dim h2_tf_lf, int64_t c3_tf,
                                    const sc_conn_hypotheses* supplied, sc_conn_report* out);
SC_API sc_status sc_generic_h2_tf_lf(int64_t d, sc_dim* out);

/* ------------------------------------------------------------------ */
/* Moduli and spectrum */

typedef struct sc_moduli_report {
  int64_t d;
  sc_chern chern;
  sc_chern normalized;
  int64_t dim_component;
  int64_t ext1;
  int64_t ext2;
  int smooth_point;
  int rational; /* 1, 0, or -1 when not asserted */
  int64_t family_dim;
} sc_moduli_report;

SC_API sc_status sc_moduli_report_get(int64_t d, sc_moduli_report* out);
SC_API sc_status sc_ext2_dimension(int64_t d, int64_t* out);
SC_API sc_status sc_ext2_from_cohomology(int64_t d, int64_t* out);

typedef struct sc_resolution {
  int64_t d;
  int64_t middle_rank;
  int kernel_has_line;
  int64_t kernel_line_twist;
  int64_t h0_Fd;
  sc_chern kernel;
  sc_chern cokernel;
} sc_resolution;

SC_API sc_status sc_global_gen_resolution(int64_t d, sc_resolution* out);

typedef struct sc_curve_family {
  int64_t d;
  int64_t degree;
  int64_t genus;
  int64_t points;
  int64_t family_dim;
  int64_t c3_twisted;
  int64_t c3_from_genus;
} sc_curve_family;

SC_API sc_status sc_curve_family_get(int64_t d, sc_curve_family* out);

typedef struct sc_spectrum_point {
  int64_t r;
  sc_chern triple;
} sc_spectrum_point;

SC_API sc_status sc_spectrum_point_get(const sc_threefold* X, int64_t r, sc_spectrum_point* out);
SC_API sc_status sc_pic_act(const sc_threefold* X, const sc_spectrum_point* p, int64_t t,
                            sc_spectrum_point* out);
SC_API sc_status sc_normalize(const sc_threefold* X, const sc_spectrum_point* p,
                              sc_spectrum_point* out);

#ifdef __cplusplus
}
#endif

#endif /* SHEAFCALC_H */
