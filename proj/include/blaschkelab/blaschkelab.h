/* blaschkelab C API
 *
 * Opaque-handle interface to the blaschkelab core: function parsing and
 * evaluation, argument-principle zero location, Green's functions of
 * disk-like domains, Riesz measures, and the Blaschke-type condition checks.
 *
 * Conventions:
 *   - Every fallible call returns a blab_status (BLAB_OK on success) and
 *     writes results through out-parameters. On failure the thread-local
 *     message from blab_last_error() describes what went wrong.
 *   - Strings returned through char** out-parameters are heap-allocated and
 *     must be released with blab_string_free().
 *   - Handles are freed with their matching *_free function; passing NULL to
 *     a *_free function is a no-op.
 */
#ifndef BLASCHKELAB_H_
#define BLASCHKELAB_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum blab_status {
  BLAB_OK = 0,
  BLAB_ERR_PARSE = 1,
  BLAB_ERR_DOMAIN = 2,
  BLAB_ERR_EVAL = 3,
  BLAB_ERR_PRECONDITION = 4,
  BLAB_ERR_VALIDATION = 5,
  BLAB_ERR_NUMERIC = 6,
  BLAB_ERR_IO = 7,
  BLAB_ERR_INVALID_ARGUMENT = 8
} blab_status;

/* Verdict values reported by condition checks. */
typedef enum blab_verdict {
  BLAB_VERDICT_HOLDS = 0,
  BLAB_VERDICT_FAILS = 1,
  BLAB_VERDICT_INCONCLUSIVE = 2
} blab_verdict;

typedef struct blab_function blab_function;
typedef struct blab_domain blab_domain;
typedef struct blab_grid blab_grid;
typedef struct blab_zeroseq blab_zeroseq;
typedef struct blab_measure blab_measure;
typedef struct blab_testfn blab_testfn;
typedef struct blab_report blab_report;

const char* blab_version(void);
/* Thread-local message for the most recent failure on this thread. */
const char* blab_last_error(void);
void blab_string_free(char* s);
/* Caps the data-parallel width (overrides BLASCHKE_LAB_THREADS). */
blab_status blab_set_threads(int n);
/* Parses a complex literal such as "0.5", "0.5i" or "0.3+0.4i". */
blab_status blab_parse_complex(const char* text, double* out_re, double* out_im);

/* ---- functions ---------------------------------------------------- */

blab_status blab_function_parse(const char* text, blab_function** out);
blab_status blab_function_print(const blab_function* f, char** out);
blab_status blab_function_eval(const blab_function* f, double re, double im,
                               double* out_re, double* out_im);
/* log|f|; -HUGE_VAL marks a zero. */
blab_status blab_function_log_modulus(const blab_function* f, double re, double im,
                                      double* out);
/* Returns a copy of f declaring the given domain of validity. */
blab_status blab_function_with_domain(const blab_function* f, const blab_domain* d,
                                      blab_function** out);
void blab_function_free(blab_function* f);

/* ---- domains ------------------------------------------------------ */

/* "unitdisk", "disk:c,r", "moebius:a,b,c,d", or a bare positive radius. */
blab_status blab_domain_parse(const char* text, blab_domain** out);
blab_status blab_domain_unit_disk(blab_domain** out);
blab_status blab_domain_disk(double center_re, double center_im, double radius,
                             blab_domain** out);
/* Returns a copy of d carrying d0 as its inner sub-domain; verifies that d0
 * is compactly contained. */
blab_status blab_domain_with_inner(const blab_domain* d, const blab_domain* d0,
                                   blab_domain** out);
blab_status blab_domain_contains(const blab_domain* d, double re, double im,
                                 int* out);
blab_status blab_domain_boundary_distance(const blab_domain* d, double re, double im,
                                          double* out);
/* Axis-aligned box enclosing the domain; fails for unbounded domains. */
blab_status blab_domain_bounding_box(const blab_domain* d, double* lo_re, double* lo_im,
                                     double* hi_re, double* hi_im);
void blab_domain_free(blab_domain* d);

/* ---- grids --------------------------------------------------------- */

/* sample_kind: 0 auto (real expressions by value, holomorphic by
 * log-modulus), 1 log-modulus, 2 real value. mask may be NULL. */
blab_status blab_sample_grid(const blab_function* f, double lo_re, double lo_im,
                             double hi_re, double hi_im, double h, int sample_kind,
                             const blab_domain* mask, blab_grid** out);
/* Green's function of the domain with pole p over the rectangle. */
blab_status blab_green_grid(const blab_domain* d, double pole_re, double pole_im,
                            double lo_re, double lo_im, double hi_re, double hi_im,
                            double h, blab_grid** out);
blab_status blab_grid_to_csv(const blab_grid* g, char** out);
blab_status blab_grid_meta_json(const blab_grid* g, char** out);
blab_status blab_grid_value_at(const blab_grid* g, double re, double im, double* out);
blab_status blab_riesz_measure_grid(const blab_grid* g, blab_measure** out);
void blab_grid_free(blab_grid* g);

/* ---- zeros ---------------------------------------------------------- */

blab_status blab_winding_number_circle(const blab_function* f, double center_re,
                                       double center_im, double radius, int nodes,
                                       double tol, int* out);
blab_status blab_winding_number_rect(const blab_function* f, double lo_re,
                                     double lo_im, double hi_re, double hi_im,
                                     int nodes, double tol, int* out);
blab_status blab_locate_zeros(const blab_function* f, const blab_domain* region,
                              double h_min, double refine_tol, blab_zeroseq** out);
blab_status blab_zeroseq_from_json(const char* json, const blab_domain* region,
                                   blab_zeroseq** out);
blab_status blab_zeroseq_to_json(const blab_zeroseq* z, char** out);
blab_status blab_zeroseq_to_csv(const blab_zeroseq* z, char** out);
blab_status blab_zeroseq_count(const blab_zeroseq* z, size_t* out);
blab_status blab_zeroseq_entry(const blab_zeroseq* z, size_t index, double* re,
                               double* im, int* multiplicity, double* error);
blab_status blab_zero_counting_measure(const blab_zeroseq* z, blab_measure** out);
void blab_zeroseq_free(blab_zeroseq* z);

/* ---- potential theory ------------------------------------------------ */

blab_status blab_green_eval(const blab_domain* d, double z_re, double z_im,
                            double pole_re, double pole_im, double* out);
blab_status blab_circular_mean(const blab_function* m, double z_re, double z_im,
                               double r, int nodes, double* out);
blab_status blab_disk_mean(const blab_function* m, double z_re, double z_im,
                           double r, double* out);
/* route: 0 auto, 1 atomic (zero counting), 2 grid Laplacian. */
blab_status blab_riesz_measure(const blab_function* m, const blab_domain* domain,
                               double h, int route, blab_measure** out);
blab_status blab_hahn_jordan_split(const blab_measure* nu, blab_measure** positive,
                                   blab_measure** negative);
/* filter may be NULL (whole plane) or a domain; when the domain carries an
 * inner sub-domain the filter is D minus D0. */
blab_status blab_integrate_measure(const blab_function* v, const blab_measure* nu,
                                   const blab_domain* filter, double* out);
blab_status blab_integrate_measure_testfn(const blab_testfn* v, const blab_measure* nu,
                                          const blab_domain* filter, double* out);
blab_status blab_log_potential_at(const blab_measure* nu, double z_re, double z_im,
                                  double r, double* out);
blab_status blab_measure_total_mass(const blab_measure* nu, double* out);
blab_status blab_measure_total_variation(const blab_measure* nu, double* out);
blab_status blab_measure_to_json(const blab_measure* nu, char** out);
blab_status blab_measure_from_json(const char* json, blab_measure** out);
blab_status blab_measure_to_csv(const blab_measure* nu, char** out);
void blab_measure_free(blab_measure* nu);

/* ---- test functions and condition checks ----------------------------- */

/* kind_text: "loginv", "greenpole:<complex>", "power:<q>". The domain must
 * carry an inner sub-domain. validate != 0 runs the class membership checks
 * and fails on violation. */
blab_status blab_testfn_make(const char* kind_text, const blab_domain* domain,
                             double scale, int validate, blab_testfn** out);
blab_status blab_testfn_make_custom(const blab_function* spec,
                                    const blab_domain* domain, double scale,
                                    int validate, blab_testfn** out);
blab_status blab_testfn_eval(const blab_testfn* v, double re, double im, double* out);
blab_status blab_testfn_info_json(const blab_testfn* v, char** out);
blab_status blab_testfn_scaled(const blab_testfn* v, double factor, blab_testfn** out);
blab_status blab_testfn_validate(const blab_testfn* v, double h, blab_report** out);
void blab_testfn_free(blab_testfn* v);

blab_status blab_check_o_condition(const blab_testfn* v, const double* epsilons,
                                   size_t count, blab_report** out);
blab_status blab_blaschke_functional(const blab_testfn* v, const blab_zeroseq* z,
                                     blab_report** out);
blab_status blab_verify_majorant(const blab_function* f, const blab_function* m,
                                 const blab_domain* domain, double h,
                                 blab_report** out);
/* Either f or zeros may be NULL (not both). route as in blab_riesz_measure;
 * trace_bound may be NULL (no divergence bound). */
blab_status blab_check_implication(const blab_function* f, const blab_zeroseq* zeros,
                                   const blab_function* m, const blab_testfn* v,
                                   const blab_domain* domain, double h, int route,
                                   const double* trace_bound, blab_report** out);
/* dtilde may be NULL for the default concentric intermediate domain. */
blab_status blab_inequality_c(const blab_function* u, const blab_function* m,
                              const blab_testfn* v, double z0_re, double z0_im,
                              double b, const blab_domain* domain,
                              const blab_domain* dtilde, double h, blab_report** out);
blab_status blab_estimate_c_prime(const blab_measure* nu, const blab_function* m,
                                  const blab_domain* domain, double b,
                                  const blab_testfn* const* family, size_t count,
                                  double h, double* out_value, blab_report** out);
blab_status blab_green_identity_residual(const blab_function* m, const blab_testfn* v,
                                         const blab_domain* domain, double h,
                                         double* out_residual, blab_report** out);
blab_status blab_check_l_bound(const blab_function* u0, const blab_function* f,
                               const blab_function* m, double z_re, double z_im,
                               double r, double epsilon, const blab_domain* domain,
                               blab_report** out);

/* ---- reports ---------------------------------------------------------- */

blab_status blab_report_to_json(const blab_report* r, char** out);
blab_status blab_report_to_csv(const blab_report* r, char** out);
blab_status blab_report_verdict(const blab_report* r, blab_verdict* out);
void blab_report_free(blab_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BLASCHKELAB_H_ */
