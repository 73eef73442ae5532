/* halfrad: numerical radius / half-radiality analysis of complex matrices.
 *
 * C interface of the shared library. All objects are opaque handles; every
 * fallible call returns an hr_status and reports details through
 * hr_last_error() (thread-local). Strings returned through char** are
 * allocated by the library and must be released with hr_string_free().
 */
#ifndef HALFRAD_H
#define HALFRAD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hr_status {
  HR_OK = 0,
  HR_ERR_INVALID_ARGUMENT = 1,
  HR_ERR_PARSE = 2,
  HR_ERR_DEGENERATE_INPUT = 3, /* zero matrix or n < 2 */
  HR_ERR_PRECONDITION = 4,     /* input lacks the structure the op needs */
  HR_ERR_NUMERICAL = 5,        /* residual blow-up or solver failure */
  HR_ERR_IO = 6,
} hr_status;

/* Dense n x n complex matrix, plus optional metadata carried to files. */
typedef struct hr_matrix hr_matrix;

typedef struct hr_options {
  double tau;          /* half-radiality gap tolerance (relative) */
  double eps;          /* singular value clustering tolerance (relative) */
  double rank_tol;     /* rank cutoff sigma_i > rank_tol * sigma_max */
  int grid_size;       /* theta grid for the radius sweep (>= 64) */
  double refine_tol;   /* golden-section theta-width target */
  int boundary_count;  /* boundary samples for W(A) (>= 8) */
  uint64_t seed;       /* randomized routines are reproducible from this */
} hr_options;

const char* hr_version(void);
/* Message for the most recent failing call on this thread ("" if none). */
const char* hr_last_error(void);
void hr_options_init(hr_options* opt);
void hr_string_free(char* s);

/* --- matrices ---------------------------------------------------------- */

/* entries: row-major, 2*n*n doubles interleaved re,im. */
hr_status hr_matrix_create(int n, const double* entries, hr_matrix** out);
hr_status hr_matrix_parse(const char* text, hr_matrix** out);
hr_status hr_matrix_read_file(const char* path, hr_matrix** out);
hr_status hr_matrix_write_file(const hr_matrix* m, const char* path);
hr_status hr_matrix_to_json(const hr_matrix* m, char** out_json);
hr_status hr_matrix_copy_entries(const hr_matrix* m, double* entries_out);
hr_status hr_matrix_set_metadata(hr_matrix* m, const char* key,
                                 const char* value);
int hr_matrix_dim(const hr_matrix* m);
void hr_matrix_free(hr_matrix* m);

/* --- computations ------------------------------------------------------ */

hr_status hr_spectral_norm(const hr_matrix* m, double* out);
hr_status hr_numerical_radius(const hr_matrix* m, const hr_options* opt,
                              double* radius, double* theta_star);
/* CSV with header "theta,support,re,im", 17 significant digits. */
hr_status hr_fov_boundary_csv(const hr_matrix* m, int count, char** out_csv);
hr_status hr_is_half_radial(const hr_matrix* m, const hr_options* opt,
                            int* verdict);

/* JSON reports (schema halfrad-report/1). */
hr_status hr_analyze_json(const hr_matrix* m, const hr_options* opt,
                          int crouzeix_kmax, int with_decomposition,
                          char** out_json);
hr_status hr_radius_json(const hr_matrix* m, const hr_options* opt,
                         char** out_json);
hr_status hr_crouzeix_json(const hr_matrix* m, const hr_options* opt,
                           int k_max, char** out_json);
hr_status hr_crabb_json(const hr_matrix* m, const hr_options* opt, int k,
                        char** out_json);
hr_status hr_certify_decomposition_json(const hr_matrix* m,
                                        const hr_options* opt,
                                        char** out_json);

/* --- generators (result carries provenance metadata) ------------------- */

hr_status hr_generate_ccc(int n, hr_matrix** out);
hr_status hr_generate_half_radial(int n, int m, double sigma,
                                  double b_radius_frac, uint64_t seed,
                                  hr_matrix** out);
hr_status hr_generate_haar(int n, uint64_t seed, hr_matrix** out);

#ifdef __cplusplus
}
#endif

#endif /* HALFRAD_H */
