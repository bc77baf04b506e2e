#include "dmcs/dmcs.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dmcs/baselines.hpp"
#include "dmcs/error.hpp"
#include "dmcs/graph.hpp"
#include "dmcs/graph_io.hpp"
#include "dmcs/metrics.hpp"
#include "dmcs/modularity.hpp"
#include "dmcs/search.hpp"
#include "dmcs/synth.hpp"

struct dmcs_graph {
  dmcs::Graph graph;
};

struct dmcs_communities {
  dmcs::CommunityList list;
};

struct dmcs_result {
  dmcs::SearchResult result;
  std::vector<int64_t> members;
};

namespace {

thread_local std::string last_error;

dmcs_status to_status(dmcs::ErrorCode code) {
  using dmcs::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return DMCS_ERROR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return DMCS_ERROR_PARSE;
    case ErrorCode::Io: return DMCS_ERROR_IO;
    case ErrorCode::SelfLoop: return DMCS_ERROR_SELF_LOOP;
    case ErrorCode::NegativeWeight: return DMCS_ERROR_NEGATIVE_WEIGHT;
    case ErrorCode::UnknownNode: return DMCS_ERROR_UNKNOWN_NODE;
    case ErrorCode::QueriesDisconnected: return DMCS_ERROR_QUERIES_DISCONNECTED;
    case ErrorCode::NotConnected: return DMCS_ERROR_NOT_CONNECTED;
    case ErrorCode::EmptyGraph: return DMCS_ERROR_EMPTY_GRAPH;
    case ErrorCode::DanglingNode: return DMCS_ERROR_DANGLING_NODE;
    case ErrorCode::ContractViolation: return DMCS_ERROR_CONTRACT_VIOLATION;
    case ErrorCode::NoKCoreCommunity: return DMCS_ERROR_NO_K_CORE;
    case ErrorCode::SizeRefusal: return DMCS_ERROR_SIZE_REFUSAL;
    case ErrorCode::NotApplicable: return DMCS_ERROR_NOT_APPLICABLE;
  }
  return DMCS_ERROR_INTERNAL;
}

dmcs_status fail(dmcs_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
dmcs_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return DMCS_OK;
  } catch (const dmcs::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DMCS_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DMCS_ERROR_INTERNAL, e.what());
  }
}

dmcs::NodeSet map_ids(const dmcs::Graph& g, const int64_t* ids, size_t count, const char* what) {
  std::vector<dmcs::NodeId> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    auto v = g.internal_id(ids[i]);
    if (!v) throw dmcs::Error(dmcs::ErrorCode::UnknownNode, std::string("unknown ") + what + " id " + std::to_string(ids[i]));
    out.push_back(*v);
  }
  return dmcs::NodeSet(std::move(out));
}

dmcs::NodeSet range_ids(const int64_t* ids, size_t count, size_t universe, const char* what) {
  std::vector<dmcs::NodeId> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (ids[i] < 0 || static_cast<uint64_t>(ids[i]) >= universe)
      throw dmcs::Error(dmcs::ErrorCode::UnknownNode, std::string(what) + " id " + std::to_string(ids[i]) +
                                                          " outside [0, " + std::to_string(universe) + ")");
    out.push_back(static_cast<dmcs::NodeId>(ids[i]));
  }
  return dmcs::NodeSet(std::move(out));
}

dmcs::CommunityList to_external(const std::vector<dmcs::NodeSet>& sets, const dmcs::Graph& g) {
  dmcs::CommunityList out;
  for (const auto& s : sets) {
    std::vector<dmcs::ExternalId> ids;
    for (auto v : s) ids.push_back(g.external_id(v));
    out.push_back(std::move(ids));
  }
  return out;
}

bool null_arg(const void* p, const char* name, dmcs_status& status) {
  if (p) return false;
  status = fail(DMCS_ERROR_INVALID_ARGUMENT, std::string(name) + " is null");
  return true;
}

}  // namespace

extern "C" {

const char* dmcs_version(void) { return "1.0.0"; }

const char* dmcs_last_error(void) { return last_error.c_str(); }

const char* dmcs_status_name(dmcs_status status) {
  switch (status) {
    case DMCS_OK: return "ok";
    case DMCS_ERROR_INVALID_ARGUMENT: return dmcs::error_code_name(dmcs::ErrorCode::InvalidArgument);
    case DMCS_ERROR_PARSE: return dmcs::error_code_name(dmcs::ErrorCode::Parse);
    case DMCS_ERROR_IO: return dmcs::error_code_name(dmcs::ErrorCode::Io);
    case DMCS_ERROR_SELF_LOOP: return dmcs::error_code_name(dmcs::ErrorCode::SelfLoop);
    case DMCS_ERROR_NEGATIVE_WEIGHT: return dmcs::error_code_name(dmcs::ErrorCode::NegativeWeight);
    case DMCS_ERROR_UNKNOWN_NODE: return dmcs::error_code_name(dmcs::ErrorCode::UnknownNode);
    case DMCS_ERROR_QUERIES_DISCONNECTED: return dmcs::error_code_name(dmcs::ErrorCode::QueriesDisconnected);
    case DMCS_ERROR_NOT_CONNECTED: return dmcs::error_code_name(dmcs::ErrorCode::NotConnected);
    case DMCS_ERROR_EMPTY_GRAPH: return dmcs::error_code_name(dmcs::ErrorCode::EmptyGraph);
    case DMCS_ERROR_DANGLING_NODE: return dmcs::error_code_name(dmcs::ErrorCode::DanglingNode);
    case DMCS_ERROR_CONTRACT_VIOLATION: return dmcs::error_code_name(dmcs::ErrorCode::ContractViolation);
    case DMCS_ERROR_NO_K_CORE: return dmcs::error_code_name(dmcs::ErrorCode::NoKCoreCommunity);
    case DMCS_ERROR_SIZE_REFUSAL: return dmcs::error_code_name(dmcs::ErrorCode::SizeRefusal);
    case DMCS_ERROR_NOT_APPLICABLE: return dmcs::error_code_name(dmcs::ErrorCode::NotApplicable);
    case DMCS_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

dmcs_status dmcs_graph_load(const char* path, int weighted, dmcs_graph** out) {
  dmcs_status st;
  if (null_arg(path, "path", st) || null_arg(out, "out", st)) return st;
  return guarded([&] { *out = new dmcs_graph{dmcs::load_edge_list_file(path, weighted != 0)}; });
}

dmcs_status dmcs_graph_parse(const char* text, size_t length, int weighted, dmcs_graph** out) {
  dmcs_status st;
  if ((length > 0 && null_arg(text, "text", st)) || null_arg(out, "out", st)) return st;
  return guarded([&] {
    std::istringstream in(std::string(text ? text : "", length));
    *out = new dmcs_graph{dmcs::load_edge_list(in, weighted != 0)};
  });
}

dmcs_status dmcs_graph_save(const dmcs_graph* graph, const char* path) {
  dmcs_status st;
  if (null_arg(graph, "graph", st) || null_arg(path, "path", st)) return st;
  return guarded([&] {
    std::ofstream os(path);
    if (!os) throw dmcs::Error(dmcs::ErrorCode::Io, std::string("cannot write ") + path);
    dmcs::write_edge_list(os, graph->graph);
    if (!os) throw dmcs::Error(dmcs::ErrorCode::Io, std::string("write failed: ") + path);
  });
}

void dmcs_graph_free(dmcs_graph* graph) { delete graph; }

size_t dmcs_graph_node_count(const dmcs_graph* graph) { return graph ? graph->graph.node_count() : 0; }

size_t dmcs_graph_edge_count(const dmcs_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

int dmcs_graph_has_node(const dmcs_graph* graph, int64_t id) {
  return graph && graph->graph.internal_id(id).has_value() ? 1 : 0;
}

dmcs_status dmcs_graph_stats_compute(const dmcs_graph* graph, dmcs_graph_stats* out) {
  dmcs_status st;
  if (null_arg(graph, "graph", st) || null_arg(out, "out", st)) return st;
  return guarded([&] {
    const auto s = dmcs::graph_stats(graph->graph);
    *out = {s.nodes,
            s.edges,
            s.components,
            s.largest_component,
            s.degree_histogram.empty() ? 0u : static_cast<uint32_t>(s.degree_histogram.size() - 1),
            s.diameter_estimate};
  });
}

dmcs_status dmcs_graph_degree_histogram(const dmcs_graph* graph, uint64_t* counts, size_t capacity,
                                        size_t* written) {
  dmcs_status st;
  if (null_arg(graph, "graph", st) || null_arg(written, "written", st)) return st;
  if (capacity > 0 && null_arg(counts, "counts", st)) return st;
  return guarded([&] {
    const auto s = dmcs::graph_stats(graph->graph);
    *written = s.degree_histogram.size();
    std::copy_n(s.degree_histogram.begin(), std::min(capacity, s.degree_histogram.size()), counts);
  });
}

dmcs_status dmcs_generate_ring_of_cliques(uint32_t num_cliques, uint32_t clique_size, dmcs_graph** graph,
                                          dmcs_communities** truth) {
  dmcs_status st;
  if (null_arg(graph, "graph", st)) return st;
  return guarded([&] {
    auto gen = dmcs::ring_of_cliques(num_cliques, clique_size);
    auto list = to_external(gen.truth, gen.graph);
    *graph = new dmcs_graph{std::move(gen.graph)};
    if (truth) *truth = new dmcs_communities{std::move(list)};
  });
}

dmcs_status dmcs_generate_planted_partition(uint32_t n, uint32_t num_communities, double p_in, double p_out,
                                            uint64_t seed, dmcs_graph** graph, dmcs_communities** truth) {
  dmcs_status st;
  if (null_arg(graph, "graph", st)) return st;
  return guarded([&] {
    auto gen = dmcs::planted_partition(n, num_communities, p_in, p_out, seed);
    auto list = to_external(gen.truth, gen.graph);
    *graph = new dmcs_graph{std::move(gen.graph)};
    if (truth) *truth = new dmcs_communities{std::move(list)};
  });
}

dmcs_status dmcs_communities_load(const char* path, dmcs_communities** out) {
  dmcs_status st;
  if (null_arg(path, "path", st) || null_arg(out, "out", st)) return st;
  return guarded([&] { *out = new dmcs_communities{dmcs::load_communities_file(path)}; });
}

dmcs_status dmcs_communities_save(const dmcs_communities* communities, const char* path) {
  dmcs_status st;
  if (null_arg(communities, "communities", st) || null_arg(path, "path", st)) return st;
  return guarded([&] {
    std::ofstream os(path);
    if (!os) throw dmcs::Error(dmcs::ErrorCode::Io, std::string("cannot write ") + path);
    dmcs::write_communities(os, communities->list);
    if (!os) throw dmcs::Error(dmcs::ErrorCode::Io, std::string("write failed: ") + path);
  });
}

void dmcs_communities_free(dmcs_communities* communities) { delete communities; }

size_t dmcs_communities_count(const dmcs_communities* communities) {
  return communities ? communities->list.size() : 0;
}

size_t dmcs_communities_size(const dmcs_communities* communities, size_t index) {
  return communities && index < communities->list.size() ? communities->list[index].size() : 0;
}

const int64_t* dmcs_communities_members(const dmcs_communities* communities, size_t index) {
  return communities && index < communities->list.size() ? communities->list[index].data() : nullptr;
}

void dmcs_search_options_init(dmcs_search_options* options) {
  if (!options) return;
  options->algorithm = DMCS_ALGO_FPA;
  options->pruning = 1;
  options->k = 0;
  options->node_limit = dmcs::kDefaultOracleLimit;
}

dmcs_status dmcs_search(const dmcs_graph* graph, const int64_t* queries, size_t query_count,
                        const dmcs_search_options* options, dmcs_result** out) {
  dmcs_status st;
  if (null_arg(graph, "graph", st) || null_arg(out, "out", st)) return st;
  if (query_count == 0 || !queries) return fail(DMCS_ERROR_INVALID_ARGUMENT, "at least one query node is required");
  dmcs_search_options defaults;
  dmcs_search_options_init(&defaults);
  const dmcs_search_options& opt = options ? *options : defaults;
  return guarded([&] {
    const auto& g = graph->graph;
    const auto q = map_ids(g, queries, query_count, "query");
    dmcs::SearchResult r;
    switch (opt.algorithm) {
      case DMCS_ALGO_FPA: r = dmcs::fpa(g, q, opt.pruning != 0); break;
      case DMCS_ALGO_NCA: r = dmcs::nca(g, q); break;
      case DMCS_ALGO_KCORE:
        if (opt.k == 0) throw dmcs::Error(dmcs::ErrorCode::InvalidArgument, "k-core search needs k >= 1");
        r = dmcs::kcore_search(g, q, opt.k);
        break;
      case DMCS_ALGO_HIGHCORE: r = dmcs::highest_core_search(g, q); break;
      case DMCS_ALGO_EXACT: r = dmcs::exact_dmcs(g, q, opt.node_limit); break;
      default: throw dmcs::Error(dmcs::ErrorCode::InvalidArgument, "unknown algorithm");
    }
    std::vector<int64_t> members;
    members.reserve(r.community.size());
    for (auto v : r.community) members.push_back(g.external_id(v));
    std::sort(members.begin(), members.end());
    *out = new dmcs_result{std::move(r), std::move(members)};
  });
}

void dmcs_result_free(dmcs_result* result) { delete result; }

size_t dmcs_result_size(const dmcs_result* result) { return result ? result->members.size() : 0; }

const int64_t* dmcs_result_members(const dmcs_result* result) { return result ? result->members.data() : nullptr; }

double dmcs_result_density_modularity(const dmcs_result* result) { return result ? result->result.dm : 0.0; }

double dmcs_result_classic_modularity(const dmcs_result* result) { return result ? result->result.cm : 0.0; }

size_t dmcs_result_best_iteration(const dmcs_result* result) { return result ? result->result.best_iteration : 0; }

size_t dmcs_result_removals(const dmcs_result* result) { return result ? result->result.removals : 0; }

uint32_t dmcs_result_core_level(const dmcs_result* result) { return result ? result->result.core_level : 0; }

const char* dmcs_result_algorithm(const dmcs_result* result) {
  return result ? dmcs::algorithm_name(result->result.algorithm) : "";
}

dmcs_status dmcs_classic_modularity(size_t size, double internal_edges, double degree_sum, double graph_edges,
                                    double* out) {
  dmcs_status st;
  if (null_arg(out, "out", st)) return st;
  return guarded([&] { *out = dmcs::classic_modularity({size, internal_edges, degree_sum, graph_edges}); });
}

dmcs_status dmcs_density_modularity(size_t size, double internal_edges, double degree_sum, double graph_edges,
                                    double* out) {
  dmcs_status st;
  if (null_arg(out, "out", st)) return st;
  return guarded([&] { *out = dmcs::density_modularity({size, internal_edges, degree_sum, graph_edges}); });
}

dmcs_status dmcs_evaluate(const int64_t* community, size_t community_size, const dmcs_communities* truths,
                          const int64_t* queries, size_t query_count, const dmcs_graph* graph, size_t universe,
                          dmcs_eval_report* out) {
  dmcs_status st;
  if (null_arg(truths, "truths", st) || null_arg(out, "out", st)) return st;
  if (community_size > 0 && null_arg(community, "community", st)) return st;
  if (query_count == 0 || !queries) return fail(DMCS_ERROR_INVALID_ARGUMENT, "at least one query node is required");
  return guarded([&] {
    std::vector<dmcs::NodeSet> sets;
    dmcs::NodeSet pred, q;
    std::size_t n = universe;
    if (graph) {
      const auto& g = graph->graph;
      n = g.node_count();
      pred = map_ids(g, community, community_size, "community");
      q = map_ids(g, queries, query_count, "query");
      for (const auto& members : truths->list) {
        std::vector<dmcs::NodeId> ids;
        for (auto ext : members)
          if (auto v = g.internal_id(ext)) ids.push_back(*v);
        sets.emplace_back(std::move(ids));
      }
    } else {
      pred = range_ids(community, community_size, universe, "community");
      q = range_ids(queries, query_count, universe, "query");
      for (const auto& members : truths->list) sets.push_back(range_ids(members.data(), members.size(), universe, "truth"));
    }
    const auto report = dmcs::best_against_overlapping(pred, sets, q, n);
    *out = {report.nmi, report.ari, report.fscore, report.matched_truth};
  });
}

}  // extern "C"
