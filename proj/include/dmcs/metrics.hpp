#pragma once

#include <cstdint>
#include <vector>

#include "dmcs/graph.hpp"

namespace dmcs {

/// 2x2 membership table over n nodes: first index is "in predicted",
/// second "in truth".
struct Contingency {
  std::uint64_t n11 = 0;
  std::uint64_t n10 = 0;
  std::uint64_t n01 = 0;
  std::uint64_t n00 = 0;

  std::uint64_t total() const noexcept { return n11 + n10 + n01 + n00; }
  friend bool operator==(const Contingency&, const Contingency&) = default;
};

struct EvalReport {
  double nmi = 0.0;
  double ari = 0.0;
  double fscore = 0.0;
  std::size_t matched_truth = 0;
};

Contingency binarize(const NodeSet& community, const NodeSet& truth, std::size_t n);

/// 2 I(X;Y) / (H(X) + H(Y)) in natural logs. When either side has zero
/// entropy the score is 1 for identical partitions and 0 otherwise.
double nmi(const Contingency& c);

/// Pair-counting adjusted Rand index; 1 when both partitions are trivial.
double ari(const Contingency& c);

/// Harmonic mean of precision and recall; 0 when there is no overlap.
double fscore(const Contingency& c);

EvalReport evaluate(const NodeSet& community, const NodeSet& truth, std::size_t n);

/// Scores `community` against every truth containing all of `queries` and
/// keeps the best by NMI, then ARI, then lowest index. Throws NotApplicable
/// when no truth contains the queries.
EvalReport best_against_overlapping(const NodeSet& community, const std::vector<NodeSet>& truths,
                                    const NodeSet& queries, std::size_t n);

}  // namespace dmcs
