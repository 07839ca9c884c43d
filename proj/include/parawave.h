/* parawave - compact wavelet matrix construction via Wiener-Hopf
 * coordinates, plus the primitive-factor parametrization, discrete
 * subband transforms and scaling/wavelet function synthesis.
 *
 * C interface of the shared library. Objects cross the boundary as opaque
 * handles created/destroyed here; every fallible call returns a pw_status
 * and leaves a thread-local message readable via pw_last_error(). Complex
 * data is passed as interleaved doubles: re0, im0, re1, im1, ...
 */

#ifndef PARAWAVE_H
#define PARAWAVE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PW_API __declspec(dllexport)
#else
#define PW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pw_status {
  PW_OK = 0,
  PW_ERR_INVALID_ARGUMENT = 1,
  PW_ERR_DIMENSION_MISMATCH = 2,
  PW_ERR_GRID_TOO_SMALL = 3,
  PW_ERR_NOT_MONOMIAL = 4,
  PW_ERR_SINGULAR = 5,
  PW_ERR_NOT_PARAUNITARY = 6,
  PW_ERR_NOT_UNITARY = 7,
  PW_ERR_NOT_UNIT = 8,
  PW_ERR_NO_CONVERGENCE = 9,
  PW_ERR_STRUCTURE_VIOLATION = 10,
  PW_ERR_DEGENERATE_DEGREE = 11,
  PW_ERR_INCONSISTENT = 12,
  PW_ERR_DEGREE_STUCK = 13,
  PW_ERR_NEGATIVE_POWERS = 14,
  PW_ERR_INTERNAL = 15
} pw_status;

PW_API const char *pw_status_name(pw_status s);
PW_API const char *pw_last_error(void);

/* ---- opaque handles ---------------------------------------------------- */

typedef struct pw_phi pw_phi;                     /* Wiener-Hopf coordinates */
typedef struct pw_wavelet pw_wavelet;             /* wavelet matrix          */
typedef struct pw_factorization pw_factorization; /* primitive factors       */
typedef struct pw_subbands pw_subbands;           /* expansion coefficients  */
typedef struct pw_samples pw_samples;             /* m-adic grid samples     */

/* ---- coordinates (m-1)*g complex values; phi[j][k] scales z^{-(k+1)} --- */

PW_API pw_status pw_phi_create(int m, int g, const double *coeffs, pw_phi **out);
PW_API pw_status pw_phi_random(int m, int g, uint64_t seed, double scale,
                               pw_phi **out);
PW_API void pw_phi_destroy(pw_phi *p);
PW_API int pw_phi_rank(const pw_phi *p);
PW_API int pw_phi_order(const pw_phi *p);
PW_API void pw_phi_coeffs(const pw_phi *p, double *out); /* (m-1)*g*2 */

/* ---- wavelet matrices: m rows of m*genus taps, row-major ---------------- */

PW_API pw_status pw_wavelet_create(int m, int genus, const double *coeffs,
                                   pw_wavelet **out);
PW_API void pw_wavelet_destroy(pw_wavelet *w);
PW_API int pw_wavelet_rank(const pw_wavelet *w);
PW_API int pw_wavelet_genus(const pw_wavelet *w);
PW_API void pw_wavelet_coeffs(const pw_wavelet *w, double *out); /* m*m*genus*2 */

typedef struct pw_validation {
  double quad_residual;   /* worst shifted-orthogonality violation   */
  double linear_residual; /* worst row-sum violation                 */
  int degree;             /* d in det A(z) = c z^d                   */
  double det_const_re;
  double det_const_im;
  double det_residual;    /* largest non-dominant |det coeff| / |c|  */
} pw_validation;

PW_API pw_status pw_wavelet_validate(const pw_wavelet *w, pw_validation *out);
PW_API pw_status pw_wavelet_degree(const pw_wavelet *w, int *out);

/* ---- the parametrization, both directions ------------------------------ */

/* Build the rank-m, genus g+1, degree-g wavelet matrix of the coordinates.
 * tol <= 0 selects the default construction tolerance (1e-10). */
PW_API pw_status pw_construct(const pw_phi *p, double tol, pw_wavelet **out);

/* Recover the coordinates of a wavelet matrix (degree read from the
 * determinant; genus trimmed accordingly). undo_prefix should be nonzero
 * for matrices produced by pw_construct. tol <= 0 uses 1e-8. */
PW_API pw_status pw_coordinates(const pw_wavelet *w, int undo_prefix, double tol,
                                pw_phi **out);

/* ---- primitive-factor cross parametrization ---------------------------- */

/* Factor polyphase(w)/sqrt(m) into degree-1 primitive factors and a
 * terminal constant unitary. tol <= 0 uses 1e-9. */
PW_API pw_status pw_factor(const pw_wavelet *w, double tol,
                           pw_factorization **out);
PW_API void pw_factorization_destroy(pw_factorization *f);
PW_API int pw_factorization_count(const pw_factorization *f);
PW_API int pw_factorization_rank(const pw_factorization *f);
PW_API void pw_factorization_vector(const pw_factorization *f, int i,
                                    double *out);              /* m*2    */
PW_API void pw_factorization_tail(const pw_factorization *f,
                                  double *out);                /* m*m*2  */
PW_API double pw_factorization_residual(const pw_factorization *f);

/* ---- discrete wavelet matrix expansion --------------------------------- */

PW_API pw_status pw_analyze(const pw_wavelet *w, int64_t offset,
                            const double *samples, size_t count,
                            pw_subbands **out);
PW_API void pw_subbands_destroy(pw_subbands *s);
PW_API int pw_subbands_count(const pw_subbands *s); /* = m */
PW_API int64_t pw_subbands_offset(const pw_subbands *s, int r);
PW_API size_t pw_subbands_length(const pw_subbands *s, int r);
PW_API void pw_subbands_coeffs(const pw_subbands *s, int r, double *out);

/* Assemble subband coefficients for synthesis. */
PW_API pw_status pw_subbands_create(int m, pw_subbands **out);
PW_API pw_status pw_subbands_set(pw_subbands *s, int r, int64_t offset,
                                 const double *coeffs, size_t count);

/* Two-call pattern: pass samples = NULL to query offset/count, then call
 * again with a buffer of 2*count doubles. */
PW_API pw_status pw_synthesize(const pw_subbands *s, const pw_wavelet *w,
                               int64_t *offset, size_t *count, double *samples);

/* ---- scaling equation / wavelet functions ------------------------------ */

/* Cascade iteration on the m-adic grid of step m^-level. level <= 0 picks
 * the default; maxiter <= 0 runs `level` iterations; tol <= 0 uses 1e-7.
 * Returns one series of samples plus convergence metadata. */
PW_API pw_status pw_scaling_function(const pw_wavelet *w, int level, int maxiter,
                                     double tol, pw_samples **out);
/* The m-1 wavelet functions on phi's grid, one series each. */
PW_API pw_status pw_wavelet_functions(const pw_wavelet *w, const pw_samples *phi,
                                      pw_samples **out);
PW_API void pw_samples_destroy(pw_samples *s);
PW_API int pw_samples_series(const pw_samples *s);
PW_API int pw_samples_level(const pw_samples *s);
PW_API int64_t pw_samples_start(const pw_samples *s);
PW_API size_t pw_samples_length(const pw_samples *s);
PW_API void pw_samples_values(const pw_samples *s, int series, double *out);
PW_API int pw_samples_iterations(const pw_samples *s);
PW_API double pw_samples_residual(const pw_samples *s);
PW_API int pw_samples_converged(const pw_samples *s);

#ifdef __cplusplus
}
#endif

#endif /* PARAWAVE_H */
