#include "dmcs/modularity.hpp"

#include "dmcs/error.hpp"

namespace dmcs {

namespace {

void require_edges(double total) {
  if (!(total > 0.0)) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
}

void require_members(std::size_t size) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "community is empty");
}

}  // namespace

CommunityCounts unweighted_counts(const Graph& g, const NodeSet& s) {
  auto c = induced_counts(g, s);
  return {c.size, static_cast<double>(c.edges), static_cast<double>(c.degree_sum),
          static_cast<double>(g.edge_count())};
}

CommunityCounts weighted_counts(const Graph& g, const NodeSet& s) {
  auto c = induced_counts(g, s);
  return {c.size, c.weight, c.weighted_degree_sum, g.total_weight()};
}

double classic_modularity(const CommunityCounts& c) {
  require_edges(c.total);
  const double two_m = 2.0 * c.total;
  return (2.0 * c.internal - c.degree_sum * c.degree_sum / two_m) / two_m;
}

double density_modularity(const CommunityCounts& c) {
  require_edges(c.total);
  require_members(c.size);
  const double size = static_cast<double>(c.size);
  return c.internal / size - c.degree_sum * c.degree_sum / (4.0 * c.total * size);
}

double density_modularity_weighted(const CommunityCounts& c) {
  require_edges(c.total);
  require_members(c.size);
  return (c.internal - c.degree_sum * c.degree_sum / (4.0 * c.total)) / static_cast<double>(c.size);
}

double updated_density_modularity(const CommunityCounts& s, const NodeStats& v) {
  if (s.size < 2) throw Error(ErrorCode::InvalidArgument, "cannot remove the last member");
  require_edges(s.total);
  const double rest = static_cast<double>(s.size - 1);
  const double d = s.degree_sum - v.degree;
  return (s.internal - v.internal_degree) / rest - d * d / (4.0 * s.total * rest);
}

double dm_gain(const CommunityCounts& s, const NodeStats& v) {
  return -4.0 * s.total * v.internal_degree + 2.0 * s.degree_sum * v.degree - v.degree * v.degree;
}

double density_ratio(double degree, double internal_degree) {
  if (internal_degree <= 0.0)
    throw Error(ErrorCode::DanglingNode, "node has no neighbor inside the community");
  return degree / internal_degree;
}

FreeRiderScores free_rider_pair_check(const Graph& g, const NodeSet& s, const NodeSet& s_star) {
  if (s.empty() || s_star.empty()) throw Error(ErrorCode::InvalidArgument, "both sets must be non-empty");
  const auto cs = unweighted_counts(g, s);
  const auto cu = unweighted_counts(g, set_union(s, s_star));
  return {classic_modularity(cs), classic_modularity(cu), density_modularity(cs), density_modularity(cu)};
}

}  // namespace dmcs
