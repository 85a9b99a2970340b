/* C interface to the qaoa1 library: exact single-layer QAOA expectations for
 * Ising instances, landscape scans and optimization, ensemble closed forms,
 * optimum estimators and a state-vector reference.
 *
 * Every fallible function returns a qaoa1_status. On failure the message for
 * the calling thread is available from qaoa1_last_error() until the next call
 * on that thread. Output parameters are left untouched on failure.
 *
 * Buffers returned through char** / unsigned char** are owned by the caller
 * and released with qaoa1_free_buffer. Handles are released with their
 * matching _free function; passing NULL to any _free function is a no-op.
 *
 * Angles are in radians. Basis states map bit b = 0 to spin s = +1.
 */
#ifndef QAOA1_QAOA1_H
#define QAOA1_QAOA1_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QAOA1_BUILDING_LIBRARY)
#    define QAOA1_API __declspec(dllexport)
#  else
#    define QAOA1_API __declspec(dllimport)
#  endif
#else
#  define QAOA1_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qaoa1_status {
  QAOA1_OK = 0,
  QAOA1_ERR_PARSE = 1,
  QAOA1_ERR_DUPLICATE_EDGE = 2,
  QAOA1_ERR_RANGE = 3,
  QAOA1_ERR_PARAMETER = 4,
  QAOA1_ERR_GENERATION = 5,
  QAOA1_ERR_PRECONDITION = 6,
  QAOA1_ERR_CAPACITY = 7,
  QAOA1_ERR_RESOURCE = 8,
  QAOA1_ERR_UNSUPPORTED = 9,
  QAOA1_ERR_IO = 10,
  QAOA1_ERR_NULL_ARGUMENT = 11,
  QAOA1_ERR_INTERNAL = 12
} qaoa1_status;

typedef struct qaoa1_instance qaoa1_instance;
typedef struct qaoa1_landscape qaoa1_landscape;

QAOA1_API const char* qaoa1_version(void);
QAOA1_API const char* qaoa1_last_error(void);
QAOA1_API const char* qaoa1_status_name(qaoa1_status status);
QAOA1_API void qaoa1_free_buffer(void* buffer);

/* Worker count used when a threads argument is 0: $QAOA1_THREADS if set,
 * else the hardware concurrency. */
QAOA1_API size_t qaoa1_default_threads(void);

/* ------------------------------------------------------------------------
 * Instances */

typedef struct qaoa1_edge {
  uint32_t u;
  uint32_t v;
  double coupling;
} qaoa1_edge;

/* fields may be NULL (all zero); otherwise it holds n values. */
QAOA1_API qaoa1_status qaoa1_instance_create(size_t n, const qaoa1_edge* edges,
                                             size_t num_edges, const double* fields,
                                             qaoa1_instance** out);
/* G-set text; i == j lines set fields. */
QAOA1_API qaoa1_status qaoa1_instance_parse(const char* text, size_t length,
                                            qaoa1_instance** out);
QAOA1_API qaoa1_status qaoa1_instance_load(const char* path, qaoa1_instance** out);
QAOA1_API void qaoa1_instance_free(qaoa1_instance* instance);

/* Canonical G-set text, NUL terminated; *length excludes the terminator. */
QAOA1_API qaoa1_status qaoa1_instance_serialize(const qaoa1_instance* instance,
                                                char** text, size_t* length);

QAOA1_API size_t qaoa1_instance_num_vertices(const qaoa1_instance* instance);
QAOA1_API size_t qaoa1_instance_num_edges(const qaoa1_instance* instance);
QAOA1_API int qaoa1_instance_has_fields(const qaoa1_instance* instance);
QAOA1_API qaoa1_status qaoa1_instance_edge(const qaoa1_instance* instance, size_t e,
                                           qaoa1_edge* out);
QAOA1_API qaoa1_status qaoa1_instance_field(const qaoa1_instance* instance, uint32_t i,
                                            double* out);
QAOA1_API qaoa1_status qaoa1_instance_degree(const qaoa1_instance* instance, uint32_t i,
                                             size_t* out);
QAOA1_API double qaoa1_sum_of_weights(const qaoa1_instance* instance);
QAOA1_API double qaoa1_sum_of_squares(const qaoa1_instance* instance);

/* Writes up to capacity vertices to out and the full count to *count. */
QAOA1_API qaoa1_status qaoa1_common_neighbors(const qaoa1_instance* instance, uint32_t u,
                                              uint32_t v, uint32_t* out, size_t capacity,
                                              size_t* count);

typedef enum qaoa1_structure {
  QAOA1_STRUCTURE_COMPLETE = 0,
  QAOA1_STRUCTURE_REGULAR = 1,
  QAOA1_STRUCTURE_ERDOS = 2
} qaoa1_structure;

typedef enum qaoa1_coupling_law {
  QAOA1_COUPLINGS_FROM_SET = 0,
  QAOA1_COUPLINGS_GAUSSIAN = 1
} qaoa1_coupling_law;

typedef enum qaoa1_field_law {
  QAOA1_FIELDS_NONE = 0,
  QAOA1_FIELDS_FROM_SET = 1,
  QAOA1_FIELDS_CONSTANT = 2,
  QAOA1_FIELDS_GAUSSIAN = 3
} qaoa1_field_law;

typedef struct qaoa1_generator_spec {
  qaoa1_structure structure;
  size_t degree;      /* regular */
  size_t edge_count;  /* erdos */
  qaoa1_coupling_law couplings;
  const double* coupling_values;  /* from-set */
  size_t num_coupling_values;
  double coupling_sigma;          /* gaussian */
  qaoa1_field_law fields;
  const double* field_values;     /* from-set */
  size_t num_field_values;
  double field_value;             /* constant, or sigma for gaussian */
  uint64_t seed;
} qaoa1_generator_spec;

/* Complete graph, couplings from {-1, +1}, no fields, seed 0. */
QAOA1_API void qaoa1_generator_spec_init(qaoa1_generator_spec* spec);
QAOA1_API qaoa1_status qaoa1_generate(const qaoa1_generator_spec* spec, size_t n,
                                      qaoa1_instance** out);

/* ------------------------------------------------------------------------
 * Expectation values */

typedef enum qaoa1_edge_path {
  QAOA1_PATH_GENERAL = 0,
  QAOA1_PATH_MAXCUT = 1,
  QAOA1_PATH_TRIANGLE_FREE = 2,
  QAOA1_PATH_COMPLETE = 3
} qaoa1_edge_path;

QAOA1_API qaoa1_status qaoa1_expect_vertex(const qaoa1_instance* instance, uint32_t i,
                                           double beta, double gamma, double* out);
QAOA1_API qaoa1_status qaoa1_expect_edge(const qaoa1_instance* instance, size_t e,
                                         double beta, double gamma, double* out);
/* vertex_terms (n values) and edge_terms (|E| values) may be NULL. */
QAOA1_API qaoa1_status qaoa1_expect_total(const qaoa1_instance* instance, double beta,
                                          double gamma, double* total,
                                          double* vertex_terms, double* edge_terms);
QAOA1_API qaoa1_status qaoa1_expect_total_via(const qaoa1_instance* instance,
                                              qaoa1_edge_path path, double beta,
                                              double gamma, double* total);
QAOA1_API qaoa1_status qaoa1_expect_p5(const qaoa1_instance* instance, double beta,
                                       double gamma, double* total);
QAOA1_API qaoa1_status qaoa1_expect_field_only(const qaoa1_instance* instance,
                                               double beta, double gamma, double* total);

/* ------------------------------------------------------------------------
 * Landscapes and optimization */

typedef struct qaoa1_grid {
  double beta_min;
  double beta_max;
  double gamma_min;
  double gamma_max;
  size_t beta_steps;
  size_t gamma_steps;
} qaoa1_grid;

QAOA1_API qaoa1_status qaoa1_default_grid(const qaoa1_instance* instance, qaoa1_grid* out);

typedef struct qaoa1_scan_options {
  size_t threads;  /* 0 = qaoa1_default_threads() */
  int negate;      /* store -F */
  double normalizer;  /* divide by this when nonzero */
} qaoa1_scan_options;

/* options may be NULL: one thread, no negation, no normalization. */
QAOA1_API qaoa1_status qaoa1_scan(const qaoa1_instance* instance, const qaoa1_grid* grid,
                                  const qaoa1_scan_options* options,
                                  qaoa1_landscape** out);
QAOA1_API void qaoa1_landscape_free(qaoa1_landscape* landscape);
QAOA1_API qaoa1_status qaoa1_landscape_grid(const qaoa1_landscape* landscape,
                                            qaoa1_grid* out);
/* Row-major values, row = beta index; valid until the landscape is freed. */
QAOA1_API const double* qaoa1_landscape_values(const qaoa1_landscape* landscape);
QAOA1_API qaoa1_status qaoa1_landscape_csv(const qaoa1_landscape* landscape, char** text,
                                           size_t* length);
QAOA1_API qaoa1_status qaoa1_landscape_pgm(const qaoa1_landscape* landscape,
                                           unsigned char** bytes, size_t* length);

typedef struct qaoa1_optimize_options {
  const qaoa1_grid* grid;  /* NULL = default grid */
  size_t starts;
  double tolerance;
  size_t max_iterations;
  size_t threads;          /* 0 = qaoa1_default_threads() */
} qaoa1_optimize_options;

/* 8 starts, tolerance 1e-9, 500 iterations, default grid, one thread. */
QAOA1_API void qaoa1_optimize_options_init(qaoa1_optimize_options* options);

typedef struct qaoa1_opt_result {
  double beta_min;
  double gamma_min;
  double f_min;
  double qaoa_expectation;
  int has_cut;
  double cut_value;
  size_t iterations;
} qaoa1_opt_result;

/* options may be NULL. */
QAOA1_API qaoa1_status qaoa1_optimize(const qaoa1_instance* instance,
                                      const qaoa1_optimize_options* options,
                                      qaoa1_opt_result* out);
QAOA1_API double qaoa1_cut_from_energy(double sum_of_weights, double f_min);

/* ------------------------------------------------------------------------
 * Estimators */

typedef enum qaoa1_estimate_method {
  QAOA1_ESTIMATE_INFORMAL = 0,
  QAOA1_ESTIMATE_MONTANARI = 1,
  QAOA1_ESTIMATE_PARISI = 2
} qaoa1_estimate_method;

QAOA1_API qaoa1_status qaoa1_estimate_informal(size_t n, double sum_of_squares, double* out);
QAOA1_API qaoa1_status qaoa1_estimate_montanari(size_t v, size_t e, double* out);
QAOA1_API qaoa1_status qaoa1_estimate_parisi(size_t v, size_t e, double* out);
QAOA1_API qaoa1_status qaoa1_estimate(const qaoa1_instance* instance,
                                      qaoa1_estimate_method method, double* out);

/* Undefined ratios (missing or zero denominators, cut of an instance with
 * fields) are NaN. Pass NaN for an unknown best value. */
typedef struct qaoa1_ratio_report {
  double qaoa_expectation;
  double estimate;
  double ratio_exp;
  double ratio_ising;
  double cut;
  double ratio_cut;
} qaoa1_ratio_report;

QAOA1_API qaoa1_status qaoa1_ratio_report_compute(const qaoa1_instance* instance,
                                                  const qaoa1_opt_result* result,
                                                  double best_known, double best_known_cut,
                                                  qaoa1_ratio_report* out);

/* ------------------------------------------------------------------------
 * Ensembles */

typedef enum qaoa1_model_kind {
  QAOA1_MODEL_SK_GAUSSIAN = 0,
  QAOA1_MODEL_SK_BIMODAL = 1,
  QAOA1_MODEL_SK_TRIMODAL = 2,
  QAOA1_MODEL_SK_TRIMODAL_LIMIT = 3,
  QAOA1_MODEL_SK_CONSTANT_FIELD = 4,
  QAOA1_MODEL_SK_NORMAL_FIELD = 5,
  QAOA1_MODEL_REGULAR_GAUSSIAN = 6,
  QAOA1_MODEL_REGULAR_GAUSSIAN_FIELD = 7
} qaoa1_model_kind;

/* Unused parameters are ignored. */
typedef struct qaoa1_ensemble_model {
  qaoa1_model_kind kind;
  double sigma;
  double h;
  double d;
  uint64_t n;
} qaoa1_ensemble_model;

typedef struct qaoa1_optimum {
  double beta_min;
  double gamma_min;
  double value;
} qaoa1_optimum;

QAOA1_API qaoa1_status qaoa1_ensemble_energy(const qaoa1_ensemble_model* model,
                                             double beta, double gamma, double* out);
QAOA1_API qaoa1_status qaoa1_ensemble_optimal(const qaoa1_ensemble_model* model,
                                              qaoa1_optimum* out);
QAOA1_API qaoa1_status qaoa1_regular_optimal(double sigma, double d, uint64_t n,
                                             qaoa1_optimum* out);

typedef enum qaoa1_heuristic_kind {
  QAOA1_HEURISTIC_EQUAL_SCALE = 0,
  QAOA1_HEURISTIC_FIELD_DOMINANT = 1,
  QAOA1_HEURISTIC_COUPLING_DOMINANT = 2
} qaoa1_heuristic_kind;

/* equal-scale uses (scale = h, d); field-dominant (r, scale = J, d);
 * coupling-dominant (r, scale = h, d). */
typedef struct qaoa1_heuristic_case {
  qaoa1_heuristic_kind kind;
  double scale;
  unsigned r;
  unsigned d;
} qaoa1_heuristic_case;

QAOA1_API qaoa1_status qaoa1_gamma_min_heuristic(const qaoa1_heuristic_case* c,
                                                 double* out, size_t capacity,
                                                 size_t* count);
QAOA1_API qaoa1_status qaoa1_ci_at_heuristic_optimum(const qaoa1_heuristic_case* c,
                                                     double* out);

/* E[n J^order] at system size n. */
typedef double (*qaoa1_moment_fn)(int order, double n, void* user);

/* sizes ascending; max_order 0 and tolerance 0 select the defaults (6, 1e-3). */
QAOA1_API qaoa1_status qaoa1_moment_condition_check(qaoa1_moment_fn moments, void* user,
                                                    const double* sizes, size_t num_sizes,
                                                    int max_order, double tolerance,
                                                    int* holds);

/* ------------------------------------------------------------------------
 * State-vector reference */

/* cap 0 selects the default of 20 qubits; the hard limit is 24. */
QAOA1_API qaoa1_status qaoa1_simulate(const qaoa1_instance* instance, double beta,
                                      double gamma, size_t cap, double* out);
/* spins (n values of +1/-1) may be NULL. */
QAOA1_API qaoa1_status qaoa1_ground_state(const qaoa1_instance* instance, double* energy,
                                          int* spins);

typedef struct qaoa1_histogram {
  double lower;
  double upper;
  double mean;
} qaoa1_histogram;

/* mass receives `bins` values. */
QAOA1_API qaoa1_status qaoa1_energy_histogram(const qaoa1_instance* instance, double beta,
                                              double gamma, size_t bins, size_t cap,
                                              double* mass, qaoa1_histogram* out);

typedef struct qaoa1_verify_options {
  size_t n_max;
  size_t cases;
  uint64_t seed;
  size_t angles_per_case;
  int max_weight;
  double tolerance;
} qaoa1_verify_options;

typedef struct qaoa1_verify_report {
  size_t cases;
  size_t passed;
  double max_error;
} qaoa1_verify_report;

/* n_max 10, 50 cases, seed 0, 4 angle pairs, weights in [-3, 3], 1e-9. */
QAOA1_API void qaoa1_verify_options_init(qaoa1_verify_options* options);
QAOA1_API qaoa1_status qaoa1_verify(const qaoa1_verify_options* options,
                                    qaoa1_verify_report* out);

#ifdef __cplusplus
}
#endif

#endif /* QAOA1_QAOA1_H */
