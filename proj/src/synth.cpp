#include "dmcs/synth.hpp"

#include <random>
#include <string>

#include "dmcs/error.hpp"

namespace dmcs {

GeneratedGraph ring_of_cliques(std::uint32_t num_cliques, std::uint32_t clique_size) {
  if (num_cliques < 3) throw Error(ErrorCode::InvalidArgument, "ring needs at least 3 cliques");
  if (clique_size < 3) throw Error(ErrorCode::InvalidArgument, "cliques need at least 3 nodes");

  const std::uint64_t n = std::uint64_t{num_cliques} * clique_size;
  std::vector<WeightedEdge> edges;
  GeneratedGraph out;
  for (std::uint32_t c = 0; c < num_cliques; ++c) {
    const NodeId base = c * clique_size;
    std::vector<NodeId> members;
    for (NodeId i = 0; i < clique_size; ++i) {
      members.push_back(base + i);
      for (NodeId j = i + 1; j < clique_size; ++j) edges.push_back({base + i, base + j, 1.0});
    }
    const NodeId next = ((c + 1) % num_cliques) * clique_size;
    edges.push_back({base, next + 1, 1.0});
    out.truth.emplace_back(std::move(members));
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

GeneratedGraph planted_partition(std::uint32_t n, std::uint32_t num_communities, double p_in, double p_out,
                                 std::uint64_t seed) {
  if (num_communities < 1 || num_communities > n)
    throw Error(ErrorCode::InvalidArgument, "community count must lie in [1, n]");
  if (!(p_in >= 0.0 && p_in <= 1.0) || !(p_out >= 0.0 && p_out <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "probabilities must lie in [0, 1]");

  std::vector<std::uint32_t> block(n);
  GeneratedGraph out;
  const std::uint32_t base = n / num_communities, extra = n % num_communities;
  NodeId next = 0;
  for (std::uint32_t b = 0; b < num_communities; ++b) {
    std::vector<NodeId> members;
    const std::uint32_t size = base + (b < extra ? 1 : 0);
    for (std::uint32_t i = 0; i < size; ++i) {
      block[next] = b;
      members.push_back(next++);
    }
    out.truth.emplace_back(std::move(members));
  }

  std::mt19937_64 rng(seed);
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  std::vector<WeightedEdge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double r = static_cast<double>(rng() >> 11) * kScale;
      if (r < (block[u] == block[v] ? p_in : p_out)) edges.push_back({u, v, 1.0});
    }
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

double expected_mixing(std::uint32_t n, std::uint32_t num_communities, double p_in, double p_out) {
  const double block = static_cast<double>(n) / num_communities;
  const double inside = p_in * (block - 1.0);
  const double outside = p_out * (static_cast<double>(n) - block);
  return inside + outside > 0.0 ? outside / (inside + outside) : 0.0;
}

}  // namespace dmcs
