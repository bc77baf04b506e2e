#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dmcs {

using NodeId = std::uint32_t;
using ExternalId = std::int64_t;

/// Sorted, duplicate-free set of internal node ids. Iteration is ascending.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> ids);
  NodeSet(std::initializer_list<NodeId> ids) : NodeSet(std::vector<NodeId>(ids)) {}

  /// Builds the set of positions where `mask` is nonzero.
  static NodeSet from_mask(std::span<const unsigned char> mask);

  bool contains(NodeId v) const;
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  NodeId front() const { return ids_.front(); }

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<NodeId>& ids() const noexcept { return ids_; }

  /// Membership mask of length `n`.
  std::vector<unsigned char> mask(std::size_t n) const;

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_difference(const NodeSet& a, const NodeSet& b);

struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

/// Immutable undirected simple graph in CSR layout.
///
/// Neighbor lists are sorted ascending. Every node carries an external id;
/// graphs built directly from internal ids use the identity mapping.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over nodes 0..n-1. Duplicate edges are merged (weights
  /// summed when `weighted`, otherwise kept at 1). Self-loops and negative
  /// weights throw. `external_ids`, when non-empty, must have length n.
  static Graph from_edges(std::size_t n, std::span<const WeightedEdge> edges,
                          bool weighted = false,
                          std::vector<ExternalId> external_ids = {});

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  /// Sum of edge weights; equals edge_count() for unweighted graphs.
  double total_weight() const noexcept { return total_weight_; }
  bool is_weighted() const noexcept { return weighted_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::span<const double> neighbor_weights(NodeId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(NodeId v) const { return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]); }
  double weighted_degree(NodeId v) const { return weighted_degree_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

  ExternalId external_id(NodeId v) const { return external_ids_[v]; }
  std::optional<NodeId> internal_id(ExternalId id) const;

  /// All edges (u < v), ascending by (u, v).
  std::vector<WeightedEdge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<double> weights_;
  std::vector<double> weighted_degree_;
  std::vector<ExternalId> external_ids_;
  std::unordered_map<ExternalId, NodeId> internal_ids_;
  std::size_t edge_count_ = 0;
  double total_weight_ = 0.0;
  bool weighted_ = false;
};

/// Hop distances from a source set and the induced layer partition.
struct DistanceIndex {
  static constexpr std::int32_t kUnreachable = -1;

  std::vector<std::int32_t> dist;
  /// layers[i] holds the nodes at distance i, ascending; layers[0] = sources.
  std::vector<std::vector<NodeId>> layers;

  bool reachable(NodeId v) const { return dist[v] != kUnreachable; }
  /// Largest finite distance.
  std::int32_t max_distance() const { return static_cast<std::int32_t>(layers.size()) - 1; }
};

/// Per-set counts over the induced subgraph; degrees are taken in the full graph.
struct InducedCounts {
  std::size_t size = 0;
  std::uint64_t edges = 0;
  double weight = 0.0;
  std::uint64_t degree_sum = 0;
  double weighted_degree_sum = 0.0;
};

/// Nodes reachable from `q`. Throws QueriesDisconnected when q spans components.
NodeSet connected_component_containing(const Graph& g, const NodeSet& q);

DistanceIndex bfs_distances(const Graph& g, const NodeSet& sources);

/// Nodes whose removal disconnects G[s]; one iterative low-link DFS.
/// Throws NotConnected when G[s] is not connected.
NodeSet articulation_nodes(const Graph& g, const NodeSet& s);

InducedCounts induced_counts(const Graph& g, const NodeSet& s);

/// True when G[s] is connected (the empty set counts as connected).
bool is_connected(const Graph& g, const NodeSet& s);

/// Connected component labels over the whole graph, numbered in order of
/// lowest member id. Returns the label vector and the component count.
std::pair<std::vector<std::uint32_t>, std::uint32_t> component_labels(const Graph& g);

struct GraphStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t largest_component = 0;
  /// histogram[d] = number of nodes of degree d
  std::vector<std::uint64_t> degree_histogram;
  /// Double-sweep BFS lower bound on the largest component's diameter.
  std::uint32_t diameter_estimate = 0;
};

GraphStats graph_stats(const Graph& g);

namespace detail {

/// Articulation flags for the subgraph induced by `in_set`, searched from
/// `root`. Returns the number of nodes reached alongside the flags.
std::size_t articulation_flags(const Graph& g, std::span<const unsigned char> in_set, NodeId root,
                               std::vector<unsigned char>& is_articulation);

}  // namespace detail

}  // namespace dmcs
