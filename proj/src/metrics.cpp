#include "dmcs/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "dmcs/error.hpp"

namespace dmcs {

Contingency binarize(const NodeSet& community, const NodeSet& truth, std::size_t n) {
  if ((!community.empty() && community.ids().back() >= n) || (!truth.empty() && truth.ids().back() >= n))
    throw Error(ErrorCode::InvalidArgument, "node id outside the evaluation universe");
  Contingency c;
  c.n11 = set_intersection(community, truth).size();
  c.n10 = community.size() - c.n11;
  c.n01 = truth.size() - c.n11;
  c.n00 = n - c.n11 - c.n10 - c.n01;
  return c;
}

namespace {

double entropy(double a, double b, double n) {
  double h = 0.0;
  for (double x : {a, b})
    if (x > 0.0) h -= (x / n) * std::log(x / n);
  return h;
}

// Label-invariant equality of two binary partitions.
bool same_partition(const Contingency& c) { return (c.n10 == 0 && c.n01 == 0) || (c.n11 == 0 && c.n00 == 0); }

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

double nmi(const Contingency& c) {
  const double n = static_cast<double>(c.total());
  if (n == 0.0) return 1.0;
  const double pred_in = static_cast<double>(c.n11 + c.n10), truth_in = static_cast<double>(c.n11 + c.n01);
  const double hx = entropy(pred_in, n - pred_in, n);
  const double hy = entropy(truth_in, n - truth_in, n);
  if (hx == 0.0 || hy == 0.0) return same_partition(c) ? 1.0 : 0.0;

  const double cells[2][2] = {{static_cast<double>(c.n11), static_cast<double>(c.n10)},
                              {static_cast<double>(c.n01), static_cast<double>(c.n00)}};
  const double row[2] = {pred_in, n - pred_in};
  const double col[2] = {truth_in, n - truth_in};
  // rows: in / out of pred; columns: in / out of truth
  double mi = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (cells[i][j] > 0.0) mi += (cells[i][j] / n) * std::log(cells[i][j] * n / (row[i] * col[j]));
  return std::clamp(2.0 * mi / (hx + hy), 0.0, 1.0);
}

double ari(const Contingency& c) {
  const double n = static_cast<double>(c.total());
  const double pred_in = static_cast<double>(c.n11 + c.n10), truth_in = static_cast<double>(c.n11 + c.n01);
  const double index = choose2(static_cast<double>(c.n11)) + choose2(static_cast<double>(c.n10)) +
                       choose2(static_cast<double>(c.n01)) + choose2(static_cast<double>(c.n00));
  const double rows = choose2(pred_in) + choose2(n - pred_in);
  const double cols = choose2(truth_in) + choose2(n - truth_in);
  const double pairs = choose2(n);
  if (pairs == 0.0) return 1.0;
  const double expected = rows * cols / pairs;
  const double max_index = 0.5 * (rows + cols);
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

double fscore(const Contingency& c) {
  if (c.n11 == 0) return 0.0;
  const double precision = static_cast<double>(c.n11) / static_cast<double>(c.n11 + c.n10);
  const double recall = static_cast<double>(c.n11) / static_cast<double>(c.n11 + c.n01);
  return 2.0 * precision * recall / (precision + recall);
}

EvalReport evaluate(const NodeSet& community, const NodeSet& truth, std::size_t n) {
  const auto c = binarize(community, truth, n);
  return {nmi(c), ari(c), fscore(c), 0};
}

EvalReport best_against_overlapping(const NodeSet& community, const std::vector<NodeSet>& truths,
                                    const NodeSet& queries, std::size_t n) {
  bool found = false;
  EvalReport best;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const bool eligible =
        std::all_of(queries.begin(), queries.end(), [&](NodeId q) { return truths[i].contains(q); });
    if (!eligible) continue;
    auto report = evaluate(community, truths[i], n);
    report.matched_truth = i;
    if (!found || report.nmi > best.nmi || (report.nmi == best.nmi && report.ari > best.ari)) {
      best = report;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::NotApplicable, "no ground-truth community contains the query");
  return best;
}

}  // namespace dmcs
