/*
 * blowup — exact blow ups of affine schemes over Q.
 *
 * C interface to the engine: opaque handles, status codes, canonical text
 * for polynomials and JSON for structured results. Every function returning
 * bu_status leaves its outputs untouched on failure; bu_last_error() then
 * describes the problem for the calling thread.
 */
#ifndef BLOWUP_H
#define BLOWUP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define BU_API __declspec(dllexport)
#else
#define BU_API __attribute__((visibility("default")))
#endif

typedef enum bu_status {
    BU_OK = 0,
    BU_ERROR_ARGUMENT = 1, /* violated precondition or contract */
    BU_ERROR_SYNTAX = 2,   /* malformed text input */
    BU_ERROR_RESOURCE = 3  /* a configured cap was exhausted */
} bu_status;

typedef struct bu_ring bu_ring;
typedef struct bu_poly bu_poly;
typedef struct bu_ideal bu_ideal;
typedef struct bu_step bu_step;       /* one blow up: all charts */
typedef struct bu_divisor bu_divisor; /* factored divisor on a presentation */

/* thread-local message for the most recent failure */
BU_API const char* bu_last_error(void);
BU_API void bu_string_free(char* s);

/* resource caps (defaults: 64, 200000, 64) */
BU_API void bu_set_limits(unsigned saturation_cap, size_t gb_pair_cap, unsigned gb_degree_cap);

/* ---- rings ---------------------------------------------------------- */
/* order: "lex", "grevlex" or "block:<k>" */
BU_API bu_status bu_ring_create(const char* const* vars, size_t nvars, const char* order,
                                bu_ring** out);
BU_API void bu_ring_free(bu_ring*);
BU_API size_t bu_ring_arity(const bu_ring*);
BU_API bu_status bu_ring_var(const bu_ring*, size_t index, char** out);

/* ---- polynomials ----------------------------------------------------- */
BU_API bu_status bu_poly_parse(const bu_ring*, const char* text, bu_poly** out);
BU_API bu_status bu_poly_format(const bu_poly*, char** out);
BU_API void bu_poly_free(bu_poly*);
BU_API int bu_poly_is_zero(const bu_poly*);

/* ---- ideals ---------------------------------------------------------- */
BU_API bu_status bu_ideal_create(const bu_ring*, const bu_poly* const* gens, size_t ngens,
                                 bu_ideal** out);
BU_API void bu_ideal_free(bu_ideal*);
BU_API size_t bu_ideal_size(const bu_ideal*);
BU_API bu_status bu_ideal_generator(const bu_ideal*, size_t index, bu_poly** out);

/* ---- ideal engine ----------------------------------------------------- */
BU_API bu_status bu_groebner_basis(const bu_ideal*, const char* order_or_null, bu_ideal** out);
BU_API bu_status bu_normal_form(const bu_poly*, const bu_ideal*, const char* order_or_null,
                                bu_poly** out);
BU_API bu_status bu_contains_one(const bu_ideal*, int* out);
BU_API bu_status bu_ideal_sum(const bu_ideal*, const bu_ideal*, bu_ideal** out);
BU_API bu_status bu_ideal_product(const bu_ideal*, const bu_ideal*, bu_ideal** out);
BU_API bu_status bu_ideal_power(const bu_ideal*, unsigned n, bu_ideal** out);
BU_API bu_status bu_ideal_intersection(const bu_ideal*, const bu_ideal*, bu_ideal** out);
BU_API bu_status bu_ideal_quotient(const bu_ideal*, const bu_ideal*, bu_ideal** out);
BU_API bu_status bu_ideal_saturation(const bu_ideal*, const bu_ideal*, bu_ideal** out,
                                     unsigned* exponent);
BU_API bu_status bu_ideal_eliminate(const bu_ideal*, const size_t* drop, size_t ndrop,
                                    bu_ideal** out);
BU_API bu_status bu_radical_membership(const bu_poly*, const bu_ideal*, int* out);
BU_API bu_status bu_ideal_dimension(const bu_ideal*, int* out);
BU_API bu_status bu_radical_zero_dim(const bu_ideal*, bu_ideal** out);

/* ---- smoothness -------------------------------------------------------
 * Presentations are passed as their relation ideal; the zero ideal (or a
 * NULL bu_ideal together with a ring) presents the polynomial ring itself.
 */
BU_API bu_status bu_jacobian_ideal(const bu_ideal* relations, bu_ideal** out);
BU_API bu_status bu_is_smooth(const bu_ideal* relations, int* smooth, char** witness_json);
BU_API bu_status bu_singular_locus(const bu_ideal* relations, bu_ideal** out);
BU_API bu_status bu_max_order_locus(const bu_poly* f, unsigned* mu, bu_ideal** locus);

/* ---- blow ups ---------------------------------------------------------- */
BU_API bu_status bu_blowup(const bu_ideal* relations, const bu_ideal* center, bu_step** out);
BU_API void bu_step_free(bu_step*);
BU_API size_t bu_step_chart_count(const bu_step*);
BU_API bu_status bu_step_chart_ring(const bu_step*, size_t chart, bu_ring** out);
BU_API bu_status bu_step_chart_relations(const bu_step*, size_t chart, bu_ideal** out);
BU_API bu_status bu_step_chart_exceptional(const bu_step*, size_t chart, bu_poly** out);
BU_API bu_status bu_step_to_json(const bu_step*, char** out);
BU_API bu_status bu_total_transform(const bu_step*, size_t chart, const bu_ideal*, bu_ideal** out);
BU_API bu_status bu_strict_transform(const bu_step*, size_t chart, const bu_ideal*,
                                     bu_ideal** out);
BU_API bu_status bu_controlled_transform(const bu_step*, size_t chart, const bu_ideal*,
                                         unsigned control, bu_ideal** out);
BU_API bu_status bu_verify_principal_on_chart(const bu_step*, size_t chart, const bu_ideal*,
                                              int* out);

/* ---- divisors ----------------------------------------------------------- */
BU_API bu_status bu_divisor_create(const bu_ideal* relations, const bu_poly* const* factors,
                                   const unsigned* multiplicities, size_t nfactors,
                                   bu_divisor** out);
BU_API void bu_divisor_free(bu_divisor*);
BU_API bu_status bu_snc_check(const bu_divisor*, char** verdict_json);
/* coordinates are rational literals like "2/3" */
BU_API bu_status bu_snc_check_at_point(const bu_divisor*, const char* const* coords,
                                       size_t ncoords, char** verdict_json);
BU_API bu_status bu_monomial_check(const bu_divisor*, int* out);
BU_API bu_status bu_separate_components(const bu_ideal* relations, const bu_ideal* left,
                                        const bu_ideal* right, int* separated, bu_step** out);
BU_API bu_status bu_strnorm_surface(const bu_divisor*, unsigned max_steps, char** result_json);

/* ---- resolution ---------------------------------------------------------- */
BU_API bu_status bu_principalize(const bu_ideal* relations, const bu_ideal* ideal,
                                 const bu_ideal* inside, unsigned n_max, char** result_json);
BU_API bu_status bu_separate_principalize(const bu_ideal* relations, const bu_ideal* left,
                                          const bu_ideal* right, unsigned n_max,
                                          char** result_json);
BU_API bu_status bu_resolve_plane_curve(const bu_poly* curve, unsigned max_steps,
                                        char** trace_json);
BU_API bu_status bu_trace_summary(const char* trace_json, char** summary_text);
BU_API bu_status bu_verify_trace(const char* trace_json, int* ok, char** report);

#ifdef __cplusplus
}
#endif

#endif /* BLOWUP_H */
