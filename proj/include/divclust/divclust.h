/*
 * divclust C interface.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Fallible calls return a dc_status; on failure,
 * dc_last_error() describes the problem for the calling thread.
 */
#ifndef DIVCLUST_H
#define DIVCLUST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DIVCLUST_BUILDING)
#    define DIVCLUST_API __declspec(dllexport)
#  else
#    define DIVCLUST_API __declspec(dllimport)
#  endif
#else
#  define DIVCLUST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
  DC_OK = 0,
  DC_ERR_NOT_SQUARE = 1,
  DC_ERR_ASYMMETRIC = 2,
  DC_ERR_NEGATIVE_ENTRY = 3,
  DC_ERR_NON_FINITE_ENTRY = 4,
  DC_ERR_NON_ZERO_DIAGONAL = 5,
  DC_ERR_TOO_SMALL = 6,
  DC_ERR_INVALID_OBJECT_SET = 7,
  DC_ERR_OVERLAPPING_SETS = 8,
  DC_ERR_INDEX_OUT_OF_RANGE = 9,
  DC_ERR_EMPTY_SIDE = 10,
  DC_ERR_OVERLAPPING_SIDES = 11,
  DC_ERR_OBJECT_NOT_IN_BIPARTITION = 12,
  DC_ERR_CLUSTER_TOO_SMALL = 13,
  DC_ERR_NO_POSITIVE_EIGENVALUE = 14,
  DC_ERR_SIZE_MISMATCH = 15,
  DC_ERR_DEGENERATE = 16,
  DC_ERR_ZERO_VARIANCE = 17,
  DC_ERR_CONFIG_INVALID = 18,
  DC_ERR_ALL_CELLS_MISSING = 19,
  DC_ERR_UNKNOWN_NAME = 20,
  DC_ERR_PARSE = 21,
  DC_ERR_IO = 22,
  DC_ERR_MALFORMED_TREE = 23,
  DC_ERR_INVALID_ARGUMENT = 24,
  DC_ERR_INTERNAL = 99
} dc_status;

typedef enum dc_input_format {
  DC_FORMAT_DIST = 0, /* n x n dissimilarity CSV, no header */
  DC_FORMAT_DATA = 1  /* objects x variables CSV, Euclidean distances */
} dc_input_format;

typedef struct dc_matrix dc_matrix;
typedef struct dc_tree dc_tree;
typedef struct dc_bench_result dc_bench_result;

typedef struct dc_bench_config {
  size_t datasets;
  size_t objects;
  size_t variables;
  uint64_t seed;
  unsigned threads;               /* 0 = one per hardware thread */
  const char* const* algorithms;  /* NULL = the default roster of 11 */
  size_t algorithm_count;
} dc_bench_config;

/* Message for the last failed call on this thread; "" if none. */
DIVCLUST_API const char* dc_last_error(void);
DIVCLUST_API const char* dc_status_name(dc_status status);

/* Dissimilarity matrices */
DIVCLUST_API dc_status dc_matrix_from_square(const double* values, size_t n, dc_matrix** out);
DIVCLUST_API dc_status dc_matrix_from_data(const double* values, size_t rows, size_t cols,
                                           dc_matrix** out);
DIVCLUST_API dc_status dc_matrix_load_csv(const char* path, dc_input_format format, int has_header,
                                          dc_matrix** out);
DIVCLUST_API size_t dc_matrix_size(const dc_matrix* m);
DIVCLUST_API dc_status dc_matrix_get(const dc_matrix* m, size_t i, size_t j, double* value);
DIVCLUST_API void dc_matrix_free(dc_matrix* m);

/* Criterion tokens: single, complete, average, ward1, ward2, dunn,
 * dunn-variant, silhouette. */
DIVCLUST_API dc_status dc_score_bipartition(const dc_matrix* m, const char* criterion,
                                            const size_t* left, size_t left_count,
                                            const size_t* right, size_t right_count,
                                            double* score);

/* Dendrograms. Algorithm tokens: two-seeds:<criterion>, macnaughton-smith,
 * pddp, average-agglomerative. */
DIVCLUST_API dc_status dc_cluster(const dc_matrix* m, const char* algorithm, dc_tree** out);
DIVCLUST_API dc_status dc_tree_load_json(const char* path, dc_tree** out);
DIVCLUST_API dc_status dc_tree_save_json(const dc_tree* t, const char* path);
DIVCLUST_API dc_status dc_tree_save_newick(const dc_tree* t, const char* path);
DIVCLUST_API dc_status dc_tree_save_svg(const dc_tree* t, const char* path);
DIVCLUST_API size_t dc_tree_object_count(const dc_tree* t);
DIVCLUST_API size_t dc_tree_root(const dc_tree* t);
/* children[0..1] are set for internal nodes; *is_leaf tells which. */
DIVCLUST_API dc_status dc_tree_node(const dc_tree* t, size_t id, double* level, int* is_leaf,
                                    size_t children[2]);
DIVCLUST_API dc_status dc_tree_cophenetic(const dc_tree* t, dc_matrix** out);
DIVCLUST_API void dc_tree_free(dc_tree* t);

/* Goodness of fit. Metric tokens: gk, tau, cpcc. */
DIVCLUST_API dc_status dc_evaluate(const dc_matrix* d, const dc_tree* t, const char* metric,
                                   double* value);
DIVCLUST_API dc_status dc_concordance(const dc_matrix* d, const dc_matrix* u, uint64_t* s_plus,
                                      uint64_t* s_minus, uint64_t* n_pairs);

/* Random-data benchmark */
DIVCLUST_API void dc_bench_config_init(dc_bench_config* cfg);
DIVCLUST_API dc_status dc_bench_run(const dc_bench_config* cfg, dc_bench_result** out);
/* Rows are sorted by mean Goodman-Kruskal value, best first. */
DIVCLUST_API size_t dc_bench_row_count(const dc_bench_result* r);
DIVCLUST_API dc_status dc_bench_row(const dc_bench_result* r, size_t rank, const char** algorithm,
                                    double* mean, double* std_dev, size_t* valid_count);
DIVCLUST_API dc_status dc_bench_save_summary(const dc_bench_result* r, const char* path);
DIVCLUST_API dc_status dc_bench_save_cells(const dc_bench_result* r, const char* path);
DIVCLUST_API void dc_bench_free(dc_bench_result* r);

#ifdef __cplusplus
}
#endif

#endif /* DIVCLUST_H */
