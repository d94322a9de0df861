/* C interface to the horizontal Whitney extension library. All functions return an
 * hwext_status; on failure hwext_last_error() describes the problem for the calling thread.
 * Strings returned through char** outputs are owned by the caller and released with
 * hwext_string_free. */
#ifndef HWEXT_HWEXT_H
#define HWEXT_HWEXT_H

#include <stddef.h>

#if defined(HWEXT_BUILDING_LIBRARY)
#define HWEXT_API __attribute__((visibility("default")))
#else
#define HWEXT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hwext_status {
  HWEXT_OK = 0,
  HWEXT_E_INVALID_ARGUMENT = 1,
  HWEXT_E_DIMENSION = 2,
  HWEXT_E_DOMAIN = 3,
  HWEXT_E_NON_FINITE = 4,
  HWEXT_E_QUADRATURE = 5,
  HWEXT_E_INVALID_JET = 6,
  HWEXT_E_LEMMA_BOUND = 7,
  HWEXT_E_VALIDATION_REJECTED = 8,
  HWEXT_E_MEASURE_BUDGET = 9,
  HWEXT_E_PARSE = 10,
  HWEXT_E_IO = 11,
  HWEXT_E_INTERNAL = 12
} hwext_status;

typedef struct hwext_jet hwext_jet;
typedef struct hwext_extension hwext_extension;

typedef struct hwext_tolerances {
  double whitney;
  double area;
  double horizontality;
  int levels;
  int samples_per_interval;
  double t_min; /* 0: resolution-based default */
  int check_height_whitney;
} hwext_tolerances;

typedef struct hwext_extend_options {
  double c_prime; /* 0: default constant from M */
  int force;
  int has_window;
  double window_lo;
  double window_hi;
  unsigned long long seed;
  hwext_tolerances validation;
} hwext_extend_options;

HWEXT_API const char* hwext_last_error(void);
HWEXT_API const char* hwext_status_name(hwext_status status);
HWEXT_API const char* hwext_version(void);
HWEXT_API void hwext_string_free(char* s);

HWEXT_API void hwext_tolerances_default(hwext_tolerances* out);
HWEXT_API void hwext_extend_options_default(hwext_extend_options* out);

/* Jets */
HWEXT_API hwext_status hwext_jet_from_json(const char* text, hwext_jet** out);
HWEXT_API hwext_status hwext_jet_from_file(const char* path, hwext_jet** out);
HWEXT_API void hwext_jet_free(hwext_jet* jet);
HWEXT_API hwext_status hwext_jet_to_json(const hwext_jet* jet, char** out);
HWEXT_API hwext_status hwext_jet_dimension(const hwext_jet* jet, int* n);

/* Validation: *extendable is set to 0/1, *report_json receives the verdict. */
HWEXT_API hwext_status hwext_validate(const hwext_jet* jet, const hwext_tolerances* tol,
                                      int* extendable, char** report_json);

/* Extension */
HWEXT_API hwext_status hwext_extend(const hwext_jet* jet, const hwext_extend_options* opt,
                                    hwext_extension** out);
HWEXT_API void hwext_extension_free(hwext_extension* ext);
/* *passed is set to 0/1 and *report_json receives the verification report. */
HWEXT_API hwext_status hwext_extension_verify(const hwext_extension* ext, int samples_per_segment,
                                              int* passed, char** report_json);
/* Manifest with the verification report embedded when samples_per_segment > 0. */
HWEXT_API hwext_status hwext_extension_manifest(const hwext_extension* ext,
                                                int samples_per_segment, char** out);
HWEXT_API hwext_status hwext_extension_from_manifest(const char* text, hwext_extension** out);
HWEXT_API hwext_status hwext_extension_window(const hwext_extension* ext, double* lo, double* hi);
HWEXT_API hwext_status hwext_extension_dimension(const hwext_extension* ext, int* n);
/* value and deriv each receive 2n+1 doubles (either may be NULL). */
HWEXT_API hwext_status hwext_extension_eval(const hwext_extension* ext, double s, double* value,
                                            double* deriv);
/* CSV (header s,x1,y1,...,t,dx1,...,dt) on `count` >= 2 uniform points of the window. */
HWEXT_API hwext_status hwext_extension_sample_csv(const hwext_extension* ext, int count, char** out);
/* Same on an explicit increasing grid inside the window. */
HWEXT_API hwext_status hwext_extension_sample_grid_csv(const hwext_extension* ext,
                                                       const double* grid, size_t count,
                                                       char** out);

/* Counterexample: CSV table for n = 0..levels-1, and the truncated jet. */
HWEXT_API hwext_status hwext_counterexample_table(int levels, char** csv);
HWEXT_API hwext_status hwext_counterexample_jet(int levels, hwext_jet** out);

/* Luzin approximation of a piecewise-polynomial curve given as JSON. Receives the result
 * JSON (E, removed measure, profiles, extension manifest with report) and the extension. */
HWEXT_API hwext_status hwext_luzin(const char* curve_json, double eps, int cells,
                                   int samples_per_segment, int* passed, char** result_json,
                                   hwext_extension** out);

/* Heisenberg primitives on arrays of 2n+1 doubles. */
HWEXT_API hwext_status hwext_group_mul(int n, const double* p, const double* q, double* out);
HWEXT_API hwext_status hwext_group_inv(int n, const double* p, double* out);
HWEXT_API hwext_status hwext_dilate(int n, double r, const double* p, double* out);
HWEXT_API hwext_status hwext_pansu_quotient(int n, const double* pa, const double* pb,
                                            double step, double* out);
HWEXT_API hwext_status hwext_contact_residual(int n, const double* value, const double* velocity,
                                              double* out);

#ifdef __cplusplus
}
#endif

#endif /* HWEXT_HWEXT_H */
