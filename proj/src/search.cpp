#include "dmcs/search.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dmcs/error.hpp"

namespace dmcs {

const char* algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Fpa: return "fpa";
    case Algorithm::Nca: return "nca";
    case Algorithm::KCore: return "kcore";
    case Algorithm::HighestCore: return "highcore";
    case Algorithm::Exact: return "exact";
  }
  return "unknown";
}

CommunityState::CommunityState(const Graph& g, const NodeSet& members, const NodeSet& protected_nodes)
    : graph_(&g),
      in_set_(members.mask(g.node_count())),
      protected_(g.node_count(), 0),
      internal_degree_(g.node_count(), 0),
      size_(members.size()) {
  if (!members.empty() && members.ids().back() >= g.node_count())
    throw Error(ErrorCode::UnknownNode, "member id out of range");
  for (NodeId v : protected_nodes) {
    if (v >= g.node_count() || !in_set_[v])
      throw Error(ErrorCode::ContractViolation, "protected node " + std::to_string(v) + " is not a member");
    protected_[v] = 1;
  }
  for (NodeId v : members) {
    degree_sum_ += g.degree(v);
    for (NodeId u : g.neighbors(v))
      if (in_set_[u]) ++internal_degree_[v];
    internal_edges_ += internal_degree_[v];
  }
  internal_edges_ /= 2;
}

void CommunityState::remove(NodeId v) {
  if (v >= in_set_.size() || !in_set_[v])
    throw Error(ErrorCode::ContractViolation, "node " + std::to_string(v) + " is not a member");
  if (protected_[v])
    throw Error(ErrorCode::ContractViolation, "node " + std::to_string(v) + " is protected");
  in_set_[v] = 0;
  --size_;
  internal_edges_ -= internal_degree_[v];
  degree_sum_ -= graph_->degree(v);
  for (NodeId u : graph_->neighbors(v))
    if (in_set_[u]) --internal_degree_[u];
  internal_degree_[v] = 0;
}

CommunityCounts CommunityState::counts() const {
  return {size_, static_cast<double>(internal_edges_), static_cast<double>(degree_sum_),
          static_cast<double>(graph_->edge_count())};
}

double CommunityState::density_modularity() const { return dmcs::density_modularity(counts()); }

NodeSet CommunityState::members() const { return NodeSet::from_mask(in_set_); }

NodeSet connect_queries(const Graph& g, const NodeSet& q) {
  if (q.empty()) throw Error(ErrorCode::InvalidArgument, "query set is empty");
  const NodeId pivot = q.front();
  auto from_pivot = bfs_distances(g, NodeSet{pivot});
  std::vector<NodeId> out{pivot};
  for (NodeId target : q) {
    if (!from_pivot.reachable(target))
      throw Error(ErrorCode::QueriesDisconnected, "query nodes lie in different components");
    NodeId cur = target;
    while (from_pivot.dist[cur] > 0) {
      out.push_back(cur);
      const auto want = from_pivot.dist[cur] - 1;
      for (NodeId u : g.neighbors(cur)) {
        if (from_pivot.dist[u] == want) {
          cur = u;
          break;
        }
      }
    }
  }
  return NodeSet(std::move(out));
}

namespace {

SearchResult finish(const Graph& g, Algorithm algo, const NodeSet& start, std::size_t component_size,
                    std::vector<NodeId> order, std::size_t best_iteration) {
  std::vector<NodeId> dropped(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_iteration));
  SearchResult r;
  r.community = set_difference(start, NodeSet(std::move(dropped)));
  const auto counts = unweighted_counts(g, r.community);
  r.dm = density_modularity(counts);
  r.cm = classic_modularity(counts);
  r.algorithm = algo;
  r.best_iteration = best_iteration;
  r.removals = component_size - r.community.size();
  r.removal_order = std::move(order);
  return r;
}

std::vector<unsigned char> dfs_articulation(const CommunityState& state) {
  std::vector<unsigned char> flags;
  const auto members = state.membership();
  for (NodeId v = 0; v < members.size(); ++v) {
    if (members[v]) {
      detail::articulation_flags(state.graph(), members, v, flags);
      return flags;
    }
  }
  flags.assign(members.size(), 0);
  return flags;
}

}  // namespace

SearchResult nca(const Graph& g, const NodeSet& q, const ArticulationFn& articulation) {
  if (g.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
  const NodeSet component = connected_component_containing(g, q);
  const auto dindex = bfs_distances(g, q);
  CommunityState state(g, component, q);

  std::vector<NodeId> order;
  double best_dm = state.density_modularity();
  std::size_t best_iteration = 0;

  for (;;) {
    const auto flags = articulation ? articulation(state) : dfs_articulation(state);
    const auto counts = state.counts();
    bool found = false;
    NodeId pick = 0;
    double pick_gain = 0.0;
    for (NodeId v : component) {
      if (!state.contains(v) || state.is_protected(v) || flags[v]) continue;
      const double gain = dm_gain(counts, {static_cast<double>(g.degree(v)),
                                           static_cast<double>(state.internal_degree(v))});
      if (!found || gain > pick_gain || (gain == pick_gain && dindex.dist[v] > dindex.dist[pick])) {
        found = true;
        pick = v;
        pick_gain = gain;
      }
    }
    if (!found) break;
    state.remove(pick);
    order.push_back(pick);
    const double dm = state.density_modularity();
    if (dm > best_dm) {
      best_dm = dm;
      best_iteration = order.size();
    }
  }
  return finish(g, Algorithm::Nca, component, component.size(), std::move(order), best_iteration);
}

CommunityState layer_prune(const Graph& g, CommunityState state, const DistanceIndex& dindex) {
  const std::int32_t depth = dindex.max_distance();
  if (depth <= 0) return state;

  const auto layers = static_cast<std::size_t>(depth) + 1;
  std::vector<std::uint64_t> size_at(layers, 0), edges_at(layers, 0), degree_at(layers, 0);
  for (std::size_t t = 0; t < layers; ++t) {
    for (NodeId v : dindex.layers[t]) {
      if (!state.contains(v)) continue;
      ++size_at[t];
      degree_at[t] += g.degree(v);
      for (NodeId u : g.neighbors(v)) {
        // each internal edge is charged once, to its deeper endpoint
        if (!state.contains(u)) continue;
        const auto du = static_cast<std::size_t>(dindex.dist[u]);
        if (du < t || (du == t && u < v)) ++edges_at[t];
      }
    }
  }
  for (std::size_t t = 1; t < layers; ++t) {
    size_at[t] += size_at[t - 1];
    edges_at[t] += edges_at[t - 1];
    degree_at[t] += degree_at[t - 1];
  }

  const double m = static_cast<double>(g.edge_count());
  std::size_t best = layers - 1;
  double best_dm = density_modularity({size_at[best], static_cast<double>(edges_at[best]),
                                       static_cast<double>(degree_at[best]), m});
  for (std::size_t t = layers - 1; t-- > 0;) {
    if (size_at[t] == 0) continue;
    const double dm = density_modularity({size_at[t], static_cast<double>(edges_at[t]),
                                          static_cast<double>(degree_at[t]), m});
    if (dm > best_dm) {
      best_dm = dm;
      best = t;
    }
  }
  for (std::size_t t = layers - 1; t > best; --t)
    for (NodeId v : dindex.layers[t])
      if (state.contains(v)) state.remove(v);
  return state;
}

namespace {

// Candidate ordering by density ratio descending, then id ascending. Ratios
// are compared by cross-multiplying the integer degree counts.
struct RatioKey {
  std::uint64_t degree;
  std::uint64_t internal_degree;
  NodeId id;

  friend bool operator<(const RatioKey& a, const RatioKey& b) {
    const auto lhs = a.degree * b.internal_degree;
    const auto rhs = b.degree * a.internal_degree;
    if (lhs != rhs) return lhs > rhs;
    return a.id < b.id;
  }
};

RatioKey ratio_key(const Graph& g, const CommunityState& state, NodeId v) {
  const auto k = state.internal_degree(v);
  // raises DanglingNode when a candidate lost its link inward
  (void)density_ratio(g.degree(v), k);
  return {g.degree(v), k, v};
}

}  // namespace

SearchResult fpa(const Graph& g, const NodeSet& q, bool pruning) {
  if (g.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
  const NodeSet component = connected_component_containing(g, q);
  const NodeSet protected_nodes = connect_queries(g, q);
  const auto dindex = bfs_distances(g, protected_nodes);

  CommunityState state(g, component, protected_nodes);
  std::int32_t top = dindex.max_distance();
  std::int32_t bottom = 1;
  if (pruning) {
    state = layer_prune(g, std::move(state), dindex);
    while (top > 0 && std::none_of(dindex.layers[top].begin(), dindex.layers[top].end(),
                                   [&](NodeId v) { return state.contains(v); }))
      --top;
    bottom = std::max(top, 1);
  }
  const NodeSet start = state.members();

  std::vector<NodeId> order;
  double best_dm = state.density_modularity();
  std::size_t best_iteration = 0;

  for (std::int32_t layer = top; layer >= bottom; --layer) {
    std::set<RatioKey> candidates;
    for (NodeId v : dindex.layers[layer])
      if (state.contains(v)) candidates.insert(ratio_key(g, state, v));

    while (!candidates.empty()) {
      const NodeId u = candidates.begin()->id;
      candidates.erase(candidates.begin());
      std::vector<NodeId> rekey;
      for (NodeId w : g.neighbors(u)) {
        if (state.contains(w) && dindex.dist[w] == layer) {
          candidates.erase({g.degree(w), state.internal_degree(w), w});
          rekey.push_back(w);
        }
      }
      state.remove(u);
      order.push_back(u);
      for (NodeId w : rekey) candidates.insert(ratio_key(g, state, w));

      const double dm = state.density_modularity();
      if (dm >= best_dm) {
        best_dm = dm;
        best_iteration = order.size();
      }
    }
  }
  return finish(g, Algorithm::Fpa, start, component.size(), std::move(order), best_iteration);
}

}  // namespace dmcs
