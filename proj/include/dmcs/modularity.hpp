#pragma once

#include <cstddef>

#include "dmcs/graph.hpp"

namespace dmcs {

/// Aggregate counts describing one community against its host graph.
///
/// For unweighted scoring `internal` is the internal edge count, `degree_sum`
/// the sum of full-graph degrees and `total` the graph edge count. The
/// weighted variants reuse the fields with internal weight, weighted degree
/// sum and total graph weight.
struct CommunityCounts {
  std::size_t size = 0;
  double internal = 0.0;
  double degree_sum = 0.0;
  double total = 0.0;
};

/// Full-graph degree and edges into the community for a single member.
struct NodeStats {
  double degree = 0.0;
  double internal_degree = 0.0;
};

CommunityCounts unweighted_counts(const Graph& g, const NodeSet& s);
CommunityCounts weighted_counts(const Graph& g, const NodeSet& s);

/// (1 / 2m) (2 l - d^2 / 2m)
double classic_modularity(const CommunityCounts& c);

/// l / |C| - d^2 / (4 m |C|)
double density_modularity(const CommunityCounts& c);

/// (1 / |C|) (w_C - d_C^2 / (4 w_G)), with node weights equal to incident
/// edge-weight sums.
double density_modularity_weighted(const CommunityCounts& c);

/// Density modularity of S \ {v} computed from S's counts and v's stats.
double updated_density_modularity(const CommunityCounts& s, const NodeStats& v);

/// Removal gain: -4 m k + 2 d_S d_v - d_v^2. Ranks candidates identically to
/// updated_density_modularity over a fixed S.
double dm_gain(const CommunityCounts& s, const NodeStats& v);

/// d_v / k_v. Throws DanglingNode when k_v is zero.
double density_ratio(double degree, double internal_degree);

struct FreeRiderScores {
  double cm_s = 0.0;
  double cm_union = 0.0;
  double dm_s = 0.0;
  double dm_union = 0.0;
};

/// Classic and density modularity of `s` and of `s ∪ s_star`, with union
/// counts recomputed from the merged node set.
FreeRiderScores free_rider_pair_check(const Graph& g, const NodeSet& s, const NodeSet& s_star);

}  // namespace dmcs
