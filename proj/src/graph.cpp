#include "dmcs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dmcs/error.hpp"

namespace dmcs {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::Io: return "io-error";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::NegativeWeight: return "negative-weight";
    case ErrorCode::UnknownNode: return "unknown-node";
    case ErrorCode::QueriesDisconnected: return "queries-disconnected";
    case ErrorCode::NotConnected: return "not-connected";
    case ErrorCode::EmptyGraph: return "empty-graph";
    case ErrorCode::DanglingNode: return "dangling-node";
    case ErrorCode::ContractViolation: return "contract-violation";
    case ErrorCode::NoKCoreCommunity: return "no-k-core-community";
    case ErrorCode::SizeRefusal: return "size-refusal";
    case ErrorCode::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

NodeSet::NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

NodeSet NodeSet::from_mask(std::span<const unsigned char> mask) {
  NodeSet out;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) out.ids_.push_back(static_cast<NodeId>(v));
  return out;
}

bool NodeSet::contains(NodeId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

std::vector<unsigned char> NodeSet::mask(std::size_t n) const {
  std::vector<unsigned char> m(n, 0);
  for (NodeId v : ids_) m[v] = 1;
  return m;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
  std::vector<NodeId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NodeSet(std::move(out));
}

Graph Graph::from_edges(std::size_t n, std::span<const WeightedEdge> edges, bool weighted,
                        std::vector<ExternalId> external_ids) {
  if (!external_ids.empty() && external_ids.size() != n)
    throw Error(ErrorCode::InvalidArgument, "external id table does not match node count");

  std::vector<WeightedEdge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (e.u == e.v) {
      ExternalId ext = external_ids.empty() ? e.u : external_ids[e.u];
      throw Error(ErrorCode::SelfLoop, "self-loop on node " + std::to_string(ext));
    }
    if (e.weight < 0.0) throw Error(ErrorCode::NegativeWeight, "negative edge weight");
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), weighted ? e.weight : 1.0});
  }
  std::sort(canon.begin(), canon.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });

  std::vector<WeightedEdge> merged;
  merged.reserve(canon.size());
  for (const auto& e : canon) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      if (weighted) merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  Graph g;
  g.weighted_ = weighted;
  g.edge_count_ = merged.size();
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : merged) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(2 * merged.size());
  g.weights_.resize(2 * merged.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : merged) {
    g.adjacency_[cursor[e.u]] = e.v;
    g.weights_[cursor[e.u]++] = e.weight;
    g.adjacency_[cursor[e.v]] = e.u;
    g.weights_[cursor[e.v]++] = e.weight;
  }
  // (u, v)-sorted insertion leaves every row ascending
  g.weighted_degree_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (double w : g.neighbor_weights(static_cast<NodeId>(i))) g.weighted_degree_[i] += w;
  for (const auto& e : merged) g.total_weight_ += e.weight;

  if (external_ids.empty()) {
    external_ids.resize(n);
    std::iota(external_ids.begin(), external_ids.end(), ExternalId{0});
  }
  g.external_ids_ = std::move(external_ids);
  g.internal_ids_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = g.internal_ids_.emplace(g.external_ids_[v], static_cast<NodeId>(v));
    if (!inserted) throw Error(ErrorCode::InvalidArgument, "duplicate external id");
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> Graph::internal_id(ExternalId id) const {
  auto it = internal_ids_.find(id);
  if (it == internal_ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    auto nb = neighbors(u);
    auto w = neighbor_weights(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (u < nb[i]) out.push_back({u, nb[i], w[i]});
  }
  return out;
}

namespace {

void check_ids(const Graph& g, const NodeSet& s) {
  if (!s.empty() && s.ids().back() >= g.node_count())
    throw Error(ErrorCode::UnknownNode, "node id " + std::to_string(s.ids().back()) + " out of range");
}

// Flood fill restricted to in_set (empty span = whole graph).
std::vector<unsigned char> reach(const Graph& g, std::span<const unsigned char> in_set, NodeId start) {
  std::vector<unsigned char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : g.neighbors(v)) {
      if (!seen[u] && (in_set.empty() || in_set[u])) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace

NodeSet connected_component_containing(const Graph& g, const NodeSet& q) {
  if (q.empty()) throw Error(ErrorCode::InvalidArgument, "query set is empty");
  check_ids(g, q);
  auto seen = reach(g, {}, q.front());
  for (NodeId v : q)
    if (!seen[v]) throw Error(ErrorCode::QueriesDisconnected, "query nodes lie in different components");
  return NodeSet::from_mask(seen);
}

bool is_connected(const Graph& g, const NodeSet& s) {
  if (s.empty()) return true;
  check_ids(g, s);
  auto in_set = s.mask(g.node_count());
  auto seen = reach(g, in_set, s.front());
  return std::all_of(s.begin(), s.end(), [&](NodeId v) { return seen[v] != 0; });
}

std::pair<std::vector<std::uint32_t>, std::uint32_t> component_labels(const Graph& g) {
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(g.node_count(), kNone);
  std::uint32_t count = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (label[s] != kNone) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId u : g.neighbors(v)) {
        if (label[u] == kNone) {
          label[u] = count;
          stack.push_back(u);
        }
      }
    }
    ++count;
  }
  return {std::move(label), count};
}

DistanceIndex bfs_distances(const Graph& g, const NodeSet& sources) {
  if (sources.empty()) throw Error(ErrorCode::InvalidArgument, "source set is empty");
  check_ids(g, sources);
  DistanceIndex idx;
  idx.dist.assign(g.node_count(), DistanceIndex::kUnreachable);
  std::vector<NodeId> frontier(sources.begin(), sources.end());
  for (NodeId v : frontier) idx.dist[v] = 0;
  std::int32_t level = 0;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<NodeId> next;
    for (NodeId v : frontier) {
      for (NodeId u : g.neighbors(v)) {
        if (idx.dist[u] == DistanceIndex::kUnreachable) {
          idx.dist[u] = level + 1;
          next.push_back(u);
        }
      }
    }
    idx.layers.push_back(std::move(frontier));
    frontier = std::move(next);
    ++level;
  }
  return idx;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats st;
  st.nodes = g.node_count();
  st.edges = g.edge_count();
  if (st.nodes == 0) return st;

  std::uint32_t max_degree = 0;
  for (NodeId v = 0; v < st.nodes; ++v) max_degree = std::max(max_degree, g.degree(v));
  st.degree_histogram.assign(max_degree + 1, 0);
  for (NodeId v = 0; v < st.nodes; ++v) ++st.degree_histogram[g.degree(v)];

  auto [label, count] = component_labels(g);
  st.components = count;
  std::vector<std::size_t> sizes(count, 0);
  for (auto l : label) ++sizes[l];
  const auto largest = static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  st.largest_component = sizes[largest];

  const auto start = static_cast<NodeId>(std::find(label.begin(), label.end(), largest) - label.begin());
  auto farthest = [&](NodeId from) {
    auto idx = bfs_distances(g, NodeSet{from});
    return std::pair{idx.layers.back().front(), static_cast<std::uint32_t>(idx.max_distance())};
  };
  const auto [far_node, first] = farthest(start);
  st.diameter_estimate = std::max(first, farthest(far_node).second);
  return st;
}

namespace detail {

std::size_t articulation_flags(const Graph& g, std::span<const unsigned char> in_set, NodeId root,
                               std::vector<unsigned char>& is_articulation) {
  const std::size_t n = g.node_count();
  constexpr std::uint32_t kUnvisited = 0;
  std::vector<std::uint32_t> disc(n, kUnvisited), low(n, 0);
  std::vector<NodeId> parent(n, 0);
  is_articulation.assign(n, 0);

  struct Frame {
    NodeId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::uint32_t timer = 0;
  std::size_t root_children = 0;
  std::size_t reached = 1;

  disc[root] = low[root] = ++timer;
  parent[root] = root;
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      NodeId u = nb[f.next++];
      if (!in_set[u]) continue;
      if (disc[u] == kUnvisited) {
        parent[u] = f.v;
        disc[u] = low[u] = ++timer;
        ++reached;
        if (f.v == root) ++root_children;
        stack.push_back({u, 0});
      } else if (u != parent[f.v]) {
        low[f.v] = std::min(low[f.v], disc[u]);
      }
    } else {
      NodeId v = f.v;
      stack.pop_back();
      if (!stack.empty()) {
        NodeId p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) is_articulation[p] = 1;
      }
    }
  }
  if (root_children >= 2) is_articulation[root] = 1;
  return reached;
}

}  // namespace detail

NodeSet articulation_nodes(const Graph& g, const NodeSet& s) {
  if (s.empty()) return {};
  check_ids(g, s);
  auto in_set = s.mask(g.node_count());
  std::vector<unsigned char> flags;
  std::size_t reached = detail::articulation_flags(g, in_set, s.front(), flags);
  if (reached != s.size()) throw Error(ErrorCode::NotConnected, "induced subgraph is not connected");
  std::vector<NodeId> out;
  for (NodeId v : s)
    if (flags[v]) out.push_back(v);
  return NodeSet(std::move(out));
}

InducedCounts induced_counts(const Graph& g, const NodeSet& s) {
  check_ids(g, s);
  auto in_set = s.mask(g.node_count());
  InducedCounts c;
  c.size = s.size();
  for (NodeId v : s) {
    c.degree_sum += g.degree(v);
    c.weighted_degree_sum += g.weighted_degree(v);
    auto nb = g.neighbors(v);
    auto w = g.neighbor_weights(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (v < nb[i] && in_set[nb[i]]) {
        ++c.edges;
        c.weight += w[i];
      }
    }
  }
  return c;
}

}  // namespace dmcs
