#pragma once

#include <cstdint>
#include <vector>

#include "dmcs/graph.hpp"

namespace dmcs {

/// Generated graph plus its disjoint ground-truth communities.
struct GeneratedGraph {
  Graph graph;
  std::vector<NodeSet> truth;
};

/// `num_cliques` cliques of `clique_size` nodes; clique i occupies ids
/// [i*s, (i+1)*s) and its first node links to the second node of clique
/// (i+1) mod num_cliques.
GeneratedGraph ring_of_cliques(std::uint32_t num_cliques, std::uint32_t clique_size);

/// Planted partition over n nodes split into contiguous blocks whose sizes
/// differ by at most one (the first n mod g blocks take the extra node).
///
/// Pairs u < v are visited in lexicographic order and each consumes one
/// draw from std::mt19937_64(seed); the draw's top 53 bits scaled by 2^-53
/// give a uniform double in [0, 1), and the edge exists when it falls below
/// p_in (same block) or p_out.
GeneratedGraph planted_partition(std::uint32_t n, std::uint32_t num_communities, double p_in, double p_out,
                                 std::uint64_t seed);

/// Expected fraction of a node's edges that leave its block, for equal blocks.
double expected_mixing(std::uint32_t n, std::uint32_t num_communities, double p_in, double p_out);

}  // namespace dmcs
