/* lcz — exact-arithmetic checkers for Lambek–Carlitz type characterizations
 * of formal power series and arithmetical functions.
 *
 * C API over the C++ core. Conventions:
 *   - every fallible function returns an lcz_status; LCZ_OK is 0
 *   - on failure, lcz_last_error() returns a thread-local message that stays
 *     valid until the next failing call on the same thread
 *   - scalars cross the boundary as canonical rational strings "p" / "p/q"
 *   - bulk data crosses as JSON documents in the formats described in the
 *     project README; reports and suite verdicts are returned as JSON text
 *   - strings returned through char** are heap-allocated; release them with
 *     lcz_string_free
 *   - handles are opaque; release them with the matching *_free function;
 *     every function tolerates NULL inputs by returning an error (never
 *     crashing), and *_free(NULL) is a no-op
 */

#ifndef LCZ_H
#define LCZ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcz_status {
  LCZ_OK = 0,
  LCZ_ERR_INVALID_ARGUMENT = 1, /* contract misuse: bad bounds, null handles */
  LCZ_ERR_PARSE = 2,            /* malformed rational strings or JSON */
  LCZ_ERR_DOMAIN = 3,           /* math domain: zero division, degenerate q, range */
  LCZ_ERR_LIMIT = 4,            /* feasibility caps of the enumeration oracles */
  LCZ_ERR_INTERNAL = 5
} lcz_status;

typedef enum lcz_variant {
  LCZ_VARIANT_MULTIPLICATIVE = 0,
  LCZ_VARIANT_ADDITIVE = 1
} lcz_variant;

typedef enum lcz_embedding {
  LCZ_EMBEDDING_AUTO = 0,      /* classical for the factorial family, else binomial */
  LCZ_EMBEDDING_CLASSICAL = 1, /* eta into the unitary ring (factorial family only) */
  LCZ_EMBEDDING_BINOMIAL = 2   /* eta_M into the M-convolution algebra */
} lcz_embedding;

const char* lcz_version(void);
const char* lcz_last_error(void);
void lcz_string_free(char* s);

/* ---- opaque handles ---------------------------------------------------- */

typedef struct lcz_series lcz_series;     /* truncated power series */
typedef struct lcz_arithfun lcz_arithfun; /* arithmetical function on 1..M */
typedef struct lcz_binfun lcz_binfun;     /* arithmetical function on 0..N */
typedef struct lcz_bintype lcz_bintype;   /* binomial type B(0..N) */

void lcz_series_free(lcz_series* s);
void lcz_arithfun_free(lcz_arithfun* f);
void lcz_binfun_free(lcz_binfun* f);
void lcz_bintype_free(lcz_bintype* b);

/* ---- exact scalar kernel ------------------------------------------------ */

/* Parse and re-emit a rational in canonical form (validation helper). */
lcz_status lcz_rational_normalize(const char* text, char** out);

lcz_status lcz_factorial(uint32_t n, char** out);
lcz_status lcz_q_integer(uint32_t i, const char* q, char** out);
lcz_status lcz_q_factorial(uint32_t n, const char* q, char** out);
lcz_status lcz_gaussian_binomial(uint32_t n, uint32_t k, const char* q, char** out);
lcz_status lcz_galois_number(uint32_t n, const char* q, char** out);

/* ---- truncated series --------------------------------------------------- */

lcz_status lcz_series_from_json(const char* json_text, lcz_series** out);
lcz_status lcz_series_to_json(const lcz_series* s, char** out);
lcz_status lcz_series_order(const lcz_series* s, uint32_t* out);
lcz_status lcz_series_coeff(const lcz_series* s, uint32_t n, char** out);

lcz_status lcz_series_add(const lcz_series* f, const lcz_series* g, lcz_series** out);
lcz_status lcz_series_scale(const char* c, const lcz_series* f, lcz_series** out);
lcz_status lcz_series_cauchy_mul(const lcz_series* f, const lcz_series* g, lcz_series** out);
lcz_status lcz_series_odot(const lcz_bintype* b, const lcz_series* f, const lcz_series* g,
                           lcz_series** out);
/* equal: 1/0; first_mismatch set only when unequal */
lcz_status lcz_series_equals_to_order(const lcz_series* f, const lcz_series* g, uint32_t up_to,
                                      int* equal, uint32_t* first_mismatch);

/* Canonical condition-(1) series for a type and variant; a1 must be nonzero. */
lcz_status lcz_series_closed_form(const lcz_bintype* b, lcz_variant variant, const char* a1,
                                  uint32_t order, lcz_series** out);

/* ---- arithmetical functions on 1..M ------------------------------------- */

lcz_status lcz_arithfun_from_json(const char* json_text, lcz_arithfun** out);
lcz_status lcz_arithfun_to_json(const lcz_arithfun* f, char** out);
lcz_status lcz_arithfun_bound(const lcz_arithfun* f, uint64_t* out);
lcz_status lcz_arithfun_value(const lcz_arithfun* f, uint64_t n, char** out);

/* name: zeta | tau | eps | power:<k> | big_omega | small_omega */
lcz_status lcz_arithfun_builtin(const char* name, uint64_t bound, lcz_arithfun** out);

lcz_status lcz_arithfun_dirichlet(const lcz_arithfun* f, const lcz_arithfun* g,
                                  lcz_arithfun** out);
lcz_status lcz_arithfun_unitary(const lcz_arithfun* f, const lcz_arithfun* g, lcz_arithfun** out);
lcz_status lcz_arithfun_pointwise_mul(const lcz_arithfun* f, const lcz_arithfun* g,
                                      lcz_arithfun** out);
lcz_status lcz_arithfun_pointwise_add(const lcz_arithfun* f, const lcz_arithfun* g,
                                      lcz_arithfun** out);

/* kind: completely_multiplicative | multiplicative | completely_additive |
 * additive. Returns a JSON report {"kind", "holds", "vacuous"?, "witness"?}. */
lcz_status lcz_arithfun_classify(const lcz_arithfun* f, const char* kind, char** report_json);

/* JSON array [[p, e], ...] of the canonical factorization. */
lcz_status lcz_factorize(uint64_t m, char** json_out);
lcz_status lcz_omega(uint64_t m, uint32_t* out);

/* ---- arithmetical functions on 0..N and binomial types ------------------ */

lcz_status lcz_binfun_from_json(const char* json_text, lcz_binfun** out);
lcz_status lcz_binfun_to_json(const lcz_binfun* f, char** out);
lcz_status lcz_binfun_bound(const lcz_binfun* f, uint32_t* out);
lcz_status lcz_binfun_value(const lcz_binfun* f, uint32_t m, char** out);
lcz_status lcz_binfun_m_convolution(const lcz_bintype* b, const lcz_binfun* f,
                                    const lcz_binfun* g, lcz_binfun** out);
lcz_status lcz_binfun_pointwise_mul(const lcz_binfun* f, const lcz_binfun* g, lcz_binfun** out);
/* kind: binomial_multiplicative | binomial_additive */
lcz_status lcz_binfun_classify(const lcz_binfun* f, const char* kind, char** report_json);

/* family: factorial | ones | q_factorial (q required) | custom (via JSON) */
lcz_status lcz_bintype_make(const char* family, const char* q, uint32_t n, lcz_bintype** out);
lcz_status lcz_bintype_from_json(const char* json_text, lcz_bintype** out);
lcz_status lcz_bintype_to_json(const lcz_bintype* b, char** out);
lcz_status lcz_bintype_order(const lcz_bintype* b, uint32_t* out);
lcz_status lcz_bintype_b(const lcz_bintype* b, uint32_t n, char** out);
lcz_status lcz_bintype_ell_binomial(const lcz_bintype* b, uint32_t m, uint32_t k, char** out);
lcz_status lcz_bintype_t_number(const lcz_bintype* b, uint32_t n, char** out);

/* ---- embeddings ---------------------------------------------------------- */

lcz_status lcz_eta_m(const lcz_bintype* b, const lcz_series* f, lcz_binfun** out);
lcz_status lcz_eta_m_inv(const lcz_bintype* b, const lcz_binfun* f, lcz_series** out);
lcz_status lcz_eta(const lcz_series* f, uint64_t bound, lcz_arithfun** out);

/* ---- characterization suites --------------------------------------------- */

/* Single condition 1..5 of the series suite selected by (type, variant,
 * embedding); returns the condition report as JSON. */
lcz_status lcz_check_series(const lcz_series* f, const lcz_bintype* b, lcz_variant variant,
                            lcz_embedding embedding, uint32_t condition, uint32_t trials,
                            uint64_t seed, uint32_t order, char** report_json);

/* All five conditions; verdict JSON {"theorem", "conditions", "consistent"}.
 * consistent (when non-NULL) receives 1/0. */
lcz_status lcz_run_suite(const lcz_series* f, const lcz_bintype* b, lcz_variant variant,
                         lcz_embedding embedding, uint32_t trials, uint64_t seed, uint32_t order,
                         char** verdict_json, int* consistent);

/* Dirichlet-convolution suite (four conditions) for a tabulated function. */
lcz_status lcz_check_dirichlet(const lcz_arithfun* f, lcz_variant variant, uint32_t trials,
                               uint64_t seed, char** verdict_json, int* consistent);
lcz_status lcz_check_dirichlet_condition(const lcz_arithfun* f, lcz_variant variant,
                                         uint32_t condition, uint32_t trials, uint64_t seed,
                                         char** report_json);

/* ---- enumeration oracles -------------------------------------------------- */

/* Counts are returned as decimal strings. */
lcz_status lcz_count_subset_chains(uint32_t n, char** count_out);
lcz_status lcz_count_subspaces(uint32_t n, uint32_t k, uint32_t q, char** count_out);
lcz_status lcz_count_complete_flags(uint32_t n, uint32_t q, char** count_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LCZ_H */
