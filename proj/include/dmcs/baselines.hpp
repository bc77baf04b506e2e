#pragma once

#include <cstdint>
#include <vector>

#include "dmcs/graph.hpp"
#include "dmcs/search.hpp"

namespace dmcs {

struct CoreDecomposition {
  std::vector<std::uint32_t> coreness;
  /// Nodes in the order the bucket peeling removed them.
  std::vector<NodeId> order;
};

/// Linear-time bucket peeling (Batagelj-Zaversnik).
CoreDecomposition core_decomposition(const Graph& g);

/// Connected k-core containing every query. Throws NoKCoreCommunity when a
/// query node is peeled or the queries end up in different cores.
SearchResult kcore_search(const Graph& g, const NodeSet& q, std::uint32_t k);

/// kcore_search at the largest feasible k.
SearchResult highest_core_search(const Graph& g, const NodeSet& q);

inline constexpr std::size_t kDefaultOracleLimit = 16;
inline constexpr std::size_t kMaxOracleLimit = 64;

/// Exhaustive search over connected supersets of the queries inside their
/// component. Ties prefer the smaller set, then the lexicographically smaller
/// one. Throws SizeRefusal when the component exceeds `node_limit`.
SearchResult exact_dmcs(const Graph& g, const NodeSet& q, std::size_t node_limit = kDefaultOracleLimit);

/// Number of connected node subsets of G[component] containing `root`;
/// exposes the enumerator for cross-checks.
std::uint64_t count_connected_subsets(const Graph& g, const NodeSet& component, NodeId root);

}  // namespace dmcs
