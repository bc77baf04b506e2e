#include "dmcs/baselines.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dmcs/error.hpp"

namespace dmcs {

CoreDecomposition core_decomposition(const Graph& g) {
  const std::size_t n = g.node_count();
  CoreDecomposition out;
  out.coreness.assign(n, 0);
  if (n == 0) return out;

  std::uint32_t max_degree = 0;
  for (NodeId v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));

  std::vector<std::uint32_t> degree(n), bin(max_degree + 1, 0), pos(n);
  std::vector<NodeId> vert(n);
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    ++bin[degree[v]];
  }
  std::uint32_t start = 0;
  for (auto& b : bin) {
    const auto count = b;
    b = start;
    start += count;
  }
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[degree[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_degree; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = vert[i];
    for (NodeId u : g.neighbors(v)) {
      if (degree[u] > degree[v]) {
        const auto du = degree[u];
        const auto pu = pos[u];
        const auto pw = bin[du];
        const NodeId w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --degree[u];
      }
    }
  }
  out.coreness = std::move(degree);
  out.order = std::move(vert);
  return out;
}

namespace {

SearchResult baseline_result(const Graph& g, Algorithm algo, NodeSet community, std::size_t component_size,
                             std::uint32_t k) {
  SearchResult r;
  const auto counts = unweighted_counts(g, community);
  r.dm = density_modularity(counts);
  r.cm = classic_modularity(counts);
  r.algorithm = algo;
  r.removals = component_size - community.size();
  r.community = std::move(community);
  r.core_level = k;
  return r;
}

}  // namespace

SearchResult kcore_search(const Graph& g, const NodeSet& q, std::uint32_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (g.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
  const NodeSet component = connected_component_containing(g, q);

  auto alive = component.mask(g.node_count());
  std::vector<std::uint32_t> degree(g.node_count(), 0);
  std::vector<NodeId> queue;
  for (NodeId v : component) {
    degree[v] = g.degree(v);
    if (degree[v] < k) {
      alive[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const NodeId v = queue.back();
    queue.pop_back();
    for (NodeId u : g.neighbors(v)) {
      if (alive[u] && --degree[u] < k) {
        alive[u] = 0;
        queue.push_back(u);
      }
    }
  }
  for (NodeId v : q)
    if (!alive[v])
      throw Error(ErrorCode::NoKCoreCommunity,
                  "query node " + std::to_string(g.external_id(v)) + " is not in the " + std::to_string(k) + "-core");

  std::vector<unsigned char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{q.front()}, members;
  seen[q.front()] = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    members.push_back(v);
    for (NodeId u : g.neighbors(v)) {
      if (alive[u] && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  for (NodeId v : q)
    if (!seen[v])
      throw Error(ErrorCode::NoKCoreCommunity, "query nodes fall in different " + std::to_string(k) + "-cores");
  return baseline_result(g, Algorithm::KCore, NodeSet(std::move(members)), component.size(), k);
}

SearchResult highest_core_search(const Graph& g, const NodeSet& q) {
  const NodeSet component = connected_component_containing(g, q);
  const auto cores = core_decomposition(g);
  std::uint32_t k = cores.coreness[q.front()];
  for (NodeId v : q) k = std::min(k, cores.coreness[v]);
  for (; k >= 1; --k) {
    try {
      auto r = kcore_search(g, q, k);
      r.algorithm = Algorithm::HighestCore;
      return r;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoKCoreCommunity) throw;
    }
  }
  return baseline_result(g, Algorithm::HighestCore, component, component.size(), 0);
}

namespace {

// Enumerates every connected subset of a small graph that contains local
// node 0, each exactly once: a branch adds the lowest frontier node, and
// siblings processed later never re-add it.
class ConnectedSubsetEnumerator {
 public:
  ConnectedSubsetEnumerator(std::vector<std::uint64_t> adjacency, std::vector<std::uint64_t> degree)
      : adjacency_(std::move(adjacency)), degree_(std::move(degree)) {}

  template <typename Visit>
  void run(Visit&& visit) {
    expand(1, adjacency_[0] & ~std::uint64_t{1}, 0, 0, degree_[0], visit);
  }

 private:
  template <typename Visit>
  void expand(std::uint64_t set, std::uint64_t frontier, std::uint64_t banned, std::uint64_t edges,
              std::uint64_t degree_sum, Visit& visit) {
    visit(set, edges, degree_sum);
    while (frontier) {
      const std::uint64_t bit = frontier & (~frontier + 1);
      frontier &= ~bit;
      const int v = std::countr_zero(bit);
      const std::uint64_t grown = set | bit;
      const std::uint64_t next_frontier = (frontier | adjacency_[v]) & ~grown & ~banned;
      expand(grown, next_frontier, banned, edges + std::popcount(adjacency_[v] & set), degree_sum + degree_[v],
             visit);
      banned |= bit;
    }
  }

  std::vector<std::uint64_t> adjacency_;
  std::vector<std::uint64_t> degree_;
};

// Local indexing with `root` at position 0, the rest ascending by id.
struct LocalGraph {
  std::vector<NodeId> nodes;
  std::vector<std::uint64_t> adjacency;
  std::vector<std::uint64_t> degree;
};

LocalGraph localize(const Graph& g, const NodeSet& component, NodeId root) {
  if (component.size() > kMaxOracleLimit)
    throw Error(ErrorCode::SizeRefusal, "component exceeds " + std::to_string(kMaxOracleLimit) + " nodes");
  LocalGraph local;
  local.nodes.push_back(root);
  for (NodeId v : component)
    if (v != root) local.nodes.push_back(v);
  std::vector<int> index(g.node_count(), -1);
  for (std::size_t i = 0; i < local.nodes.size(); ++i) index[local.nodes[i]] = static_cast<int>(i);
  local.adjacency.assign(local.nodes.size(), 0);
  local.degree.assign(local.nodes.size(), 0);
  for (std::size_t i = 0; i < local.nodes.size(); ++i) {
    local.degree[i] = g.degree(local.nodes[i]);
    for (NodeId u : g.neighbors(local.nodes[i]))
      if (index[u] >= 0) local.adjacency[i] |= std::uint64_t{1} << index[u];
  }
  return local;
}

std::vector<NodeId> expand_mask(const LocalGraph& local, std::uint64_t mask) {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < local.nodes.size(); ++i)
    if (mask >> i & 1) out.push_back(local.nodes[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t count_connected_subsets(const Graph& g, const NodeSet& component, NodeId root) {
  auto local = localize(g, component, root);
  ConnectedSubsetEnumerator walker(std::move(local.adjacency), std::move(local.degree));
  std::uint64_t count = 0;
  walker.run([&](std::uint64_t, std::uint64_t, std::uint64_t) { ++count; });
  return count;
}

SearchResult exact_dmcs(const Graph& g, const NodeSet& q, std::size_t node_limit) {
  if (node_limit > kMaxOracleLimit)
    throw Error(ErrorCode::InvalidArgument, "oracle node limit above " + std::to_string(kMaxOracleLimit));
  if (g.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
  const NodeSet component = connected_component_containing(g, q);
  if (component.size() > node_limit)
    throw Error(ErrorCode::SizeRefusal, "component has " + std::to_string(component.size()) +
                                            " nodes, above the oracle limit of " + std::to_string(node_limit));

  const auto local = localize(g, component, q.front());
  std::uint64_t required = 0;
  for (std::size_t i = 0; i < local.nodes.size(); ++i)
    if (q.contains(local.nodes[i])) required |= std::uint64_t{1} << i;

  // DM = (4 m l - d^2) / (4 m |S|); compare numerators cross-multiplied.
  const __int128 four_m = 4 * static_cast<__int128>(g.edge_count());
  bool have = false;
  __int128 best_num = 0;
  std::uint64_t best_size = 0;
  std::uint64_t best_mask = 0;
  std::vector<NodeId> best_nodes;

  ConnectedSubsetEnumerator walker(local.adjacency, local.degree);
  walker.run([&](std::uint64_t mask, std::uint64_t edges, std::uint64_t degree_sum) {
    if ((mask & required) != required) return;
    const __int128 num = four_m * edges - static_cast<__int128>(degree_sum) * degree_sum;
    const std::uint64_t size = static_cast<std::uint64_t>(std::popcount(mask));
    bool better = !have;
    if (have) {
      const __int128 lhs = num * best_size, rhs = best_num * size;
      if (lhs != rhs) {
        better = lhs > rhs;
      } else if (size != best_size) {
        better = size < best_size;
      } else {
        auto nodes = expand_mask(local, mask);
        better = std::lexicographical_compare(nodes.begin(), nodes.end(), best_nodes.begin(), best_nodes.end());
      }
    }
    if (better) {
      have = true;
      best_num = num;
      best_size = size;
      best_mask = mask;
      best_nodes = expand_mask(local, mask);
    }
  });

  SearchResult r;
  r.community = NodeSet(expand_mask(local, best_mask));
  const auto counts = unweighted_counts(g, r.community);
  r.dm = density_modularity(counts);
  r.cm = classic_modularity(counts);
  r.algorithm = Algorithm::Exact;
  r.removals = component.size() - r.community.size();
  return r;
}

}  // namespace dmcs
