#ifndef DMCS_H
#define DMCS_H

/*
 * C interface to the density-modularity community search library.
 *
 * Every object is an opaque handle owned by the caller and released with the
 * matching *_free function. Fallible calls return a dmcs_status; on failure
 * dmcs_last_error() describes the most recent error on the calling thread.
 * Node ids crossing this interface are always external ids, as they appear
 * in edge-list and community files.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DMCS_BUILDING)
#    define DMCS_API __declspec(dllexport)
#  else
#    define DMCS_API __declspec(dllimport)
#  endif
#else
#  define DMCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dmcs_graph dmcs_graph;
typedef struct dmcs_result dmcs_result;
typedef struct dmcs_communities dmcs_communities;

typedef enum {
  DMCS_OK = 0,
  DMCS_ERROR_INVALID_ARGUMENT = 1,
  DMCS_ERROR_PARSE = 2,
  DMCS_ERROR_IO = 3,
  DMCS_ERROR_SELF_LOOP = 4,
  DMCS_ERROR_NEGATIVE_WEIGHT = 5,
  DMCS_ERROR_UNKNOWN_NODE = 6,
  DMCS_ERROR_QUERIES_DISCONNECTED = 7,
  DMCS_ERROR_NOT_CONNECTED = 8,
  DMCS_ERROR_EMPTY_GRAPH = 9,
  DMCS_ERROR_DANGLING_NODE = 10,
  DMCS_ERROR_CONTRACT_VIOLATION = 11,
  DMCS_ERROR_NO_K_CORE = 12,
  DMCS_ERROR_SIZE_REFUSAL = 13,
  DMCS_ERROR_NOT_APPLICABLE = 14,
  DMCS_ERROR_INTERNAL = 99
} dmcs_status;

typedef enum {
  DMCS_ALGO_FPA = 0,
  DMCS_ALGO_NCA = 1,
  DMCS_ALGO_KCORE = 2,
  DMCS_ALGO_HIGHCORE = 3,
  DMCS_ALGO_EXACT = 4
} dmcs_algorithm;

typedef struct {
  dmcs_algorithm algorithm;
  int pruning;       /* FPA layer pruning, nonzero = on */
  uint32_t k;        /* required for DMCS_ALGO_KCORE */
  size_t node_limit; /* component size cap for DMCS_ALGO_EXACT */
} dmcs_search_options;

typedef struct {
  size_t nodes;
  size_t edges;
  size_t components;
  size_t largest_component;
  uint32_t max_degree;
  uint32_t diameter_estimate;
} dmcs_graph_stats;

typedef struct {
  double nmi;
  double ari;
  double fscore;
  size_t matched_truth;
} dmcs_eval_report;

DMCS_API const char* dmcs_version(void);
DMCS_API const char* dmcs_last_error(void);
/* Stable lowercase identifier such as "queries-disconnected". */
DMCS_API const char* dmcs_status_name(dmcs_status status);

/* ---- graphs ---- */

DMCS_API dmcs_status dmcs_graph_load(const char* path, int weighted, dmcs_graph** out);
DMCS_API dmcs_status dmcs_graph_parse(const char* text, size_t length, int weighted, dmcs_graph** out);
DMCS_API dmcs_status dmcs_graph_save(const dmcs_graph* graph, const char* path);
DMCS_API void dmcs_graph_free(dmcs_graph* graph);

DMCS_API size_t dmcs_graph_node_count(const dmcs_graph* graph);
DMCS_API size_t dmcs_graph_edge_count(const dmcs_graph* graph);
DMCS_API int dmcs_graph_has_node(const dmcs_graph* graph, int64_t id);

DMCS_API dmcs_status dmcs_graph_stats_compute(const dmcs_graph* graph, dmcs_graph_stats* out);
/* Writes counts for degrees 0..max_degree; *written receives max_degree + 1
 * (which may exceed capacity, in which case only capacity entries are set). */
DMCS_API dmcs_status dmcs_graph_degree_histogram(const dmcs_graph* graph, uint64_t* counts, size_t capacity,
                                                 size_t* written);

/* ---- synthetic generators ---- */

DMCS_API dmcs_status dmcs_generate_ring_of_cliques(uint32_t num_cliques, uint32_t clique_size,
                                                   dmcs_graph** graph, dmcs_communities** truth);
DMCS_API dmcs_status dmcs_generate_planted_partition(uint32_t n, uint32_t num_communities, double p_in,
                                                     double p_out, uint64_t seed, dmcs_graph** graph,
                                                     dmcs_communities** truth);

/* ---- community lists ---- */

DMCS_API dmcs_status dmcs_communities_load(const char* path, dmcs_communities** out);
DMCS_API dmcs_status dmcs_communities_save(const dmcs_communities* communities, const char* path);
DMCS_API void dmcs_communities_free(dmcs_communities* communities);
DMCS_API size_t dmcs_communities_count(const dmcs_communities* communities);
DMCS_API size_t dmcs_communities_size(const dmcs_communities* communities, size_t index);
DMCS_API const int64_t* dmcs_communities_members(const dmcs_communities* communities, size_t index);

/* ---- search ---- */

DMCS_API void dmcs_search_options_init(dmcs_search_options* options);
DMCS_API dmcs_status dmcs_search(const dmcs_graph* graph, const int64_t* queries, size_t query_count,
                                 const dmcs_search_options* options, dmcs_result** out);
DMCS_API void dmcs_result_free(dmcs_result* result);

DMCS_API size_t dmcs_result_size(const dmcs_result* result);
/* Ascending external ids, valid until the result is freed. */
DMCS_API const int64_t* dmcs_result_members(const dmcs_result* result);
DMCS_API double dmcs_result_density_modularity(const dmcs_result* result);
DMCS_API double dmcs_result_classic_modularity(const dmcs_result* result);
DMCS_API size_t dmcs_result_best_iteration(const dmcs_result* result);
DMCS_API size_t dmcs_result_removals(const dmcs_result* result);
DMCS_API uint32_t dmcs_result_core_level(const dmcs_result* result);
DMCS_API const char* dmcs_result_algorithm(const dmcs_result* result);

/* ---- scores from raw counts ---- */

DMCS_API dmcs_status dmcs_classic_modularity(size_t size, double internal_edges, double degree_sum,
                                             double graph_edges, double* out);
DMCS_API dmcs_status dmcs_density_modularity(size_t size, double internal_edges, double degree_sum,
                                             double graph_edges, double* out);

/* ---- evaluation ----
 * With a graph, ids are external ids of that graph and the universe is its
 * node set; truth members absent from the graph are ignored. Without one,
 * ids must lie in [0, universe). */
DMCS_API dmcs_status dmcs_evaluate(const int64_t* community, size_t community_size,
                                   const dmcs_communities* truths, const int64_t* queries, size_t query_count,
                                   const dmcs_graph* graph, size_t universe, dmcs_eval_report* out);

#ifdef __cplusplus
}
#endif

#endif /* DMCS_H */
