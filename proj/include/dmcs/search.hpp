#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dmcs/graph.hpp"
#include "dmcs/modularity.hpp"

namespace dmcs {

enum class Algorithm { Fpa, Nca, KCore, HighestCore, Exact };

const char* algorithm_name(Algorithm a) noexcept;

/// Working node set of a peeling search.
///
/// Keeps the internal edge count, the full-graph degree sum and every
/// member's internal degree current under single-node removals. Protected
/// members (queries and their connectors) can never be removed.
class CommunityState {
 public:
  CommunityState(const Graph& g, const NodeSet& members, const NodeSet& protected_nodes);

  /// Removes `v` in O(degree(v)). Throws ContractViolation when `v` is not a
  /// member or is protected.
  void remove(NodeId v);

  bool contains(NodeId v) const { return in_set_[v] != 0; }
  bool is_protected(NodeId v) const { return protected_[v] != 0; }
  std::size_t size() const noexcept { return size_; }
  std::uint64_t internal_edges() const noexcept { return internal_edges_; }
  std::uint64_t degree_sum() const noexcept { return degree_sum_; }
  std::uint32_t internal_degree(NodeId v) const { return internal_degree_[v]; }

  CommunityCounts counts() const;
  double density_modularity() const;
  NodeSet members() const;
  NodeSet protected_nodes() const { return NodeSet::from_mask(protected_); }
  std::span<const unsigned char> membership() const noexcept { return in_set_; }
  const Graph& graph() const noexcept { return *graph_; }

 private:
  const Graph* graph_;
  std::vector<unsigned char> in_set_;
  std::vector<unsigned char> protected_;
  std::vector<std::uint32_t> internal_degree_;
  std::size_t size_ = 0;
  std::uint64_t internal_edges_ = 0;
  std::uint64_t degree_sum_ = 0;
};

struct SearchResult {
  NodeSet community;
  double dm = 0.0;
  double cm = 0.0;
  Algorithm algorithm = Algorithm::Fpa;
  /// Number of greedy removals applied before the returned intermediate.
  std::size_t best_iteration = 0;
  /// Nodes of the query's component not in the community.
  std::size_t removals = 0;
  /// Greedy removal sequence (fine-grained steps only for FPA).
  std::vector<NodeId> removal_order;
  /// k of the returned core for the core baselines, 0 otherwise.
  std::uint32_t core_level = 0;
};

/// Protected set for multiple queries: union of shortest paths from the
/// lowest-id query to every other query. Each node on a path steps to its
/// lowest-id neighbor one hop closer to the pivot.
NodeSet connect_queries(const Graph& g, const NodeSet& q);

/// Per-node articulation flags of the current G[S], indexed by node id.
using ArticulationFn = std::function<std::vector<unsigned char>(const CommunityState&)>;

/// Non-articulation cancellation: repeatedly drops the removable node with
/// the largest removal gain. Ties prefer the node farther from the queries,
/// then the lower id. Returns the best intermediate, earliest on ties.
/// `articulation` replaces the DFS low-link computation when given.
SearchResult nca(const Graph& g, const NodeSet& q, const ArticulationFn& articulation = {});

/// Fast peeling: removes nodes outermost-layer first by largest density
/// ratio. Returns the best intermediate, latest on ties.
SearchResult fpa(const Graph& g, const NodeSet& q, bool pruning = true);

/// Strips whole outermost distance layers and keeps the nested subgraph with
/// the largest density modularity (largest subgraph on ties).
CommunityState layer_prune(const Graph& g, CommunityState state, const DistanceIndex& dindex);

}  // namespace dmcs
