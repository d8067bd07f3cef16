#pragma once

#include <vector>

namespace mapf {

struct TraceEntry {
  double time_s;
  long long cost;
};

/// Timestamped sequence of accepted solution costs: one entry per accepted
/// improvement (the initial solution counts as the first acceptance) plus
/// a final entry at budget expiry. Times are strictly increasing, costs
/// non-increasing.
struct RunTrace {
  std::vector<TraceEntry> entries;
  long long iterations = 0;  ///< destroy/repair iterations attempted
  long long accepted = 0;    ///< iterations that improved the solution

  void add(double time_s, long long cost);
  bool empty() const { return entries.empty(); }
};

/// Step-function integral of best-cost-so-far over [first entry time,
/// budget]; the cost is piecewise constant between accepted improvements.
/// Requires a non-empty trace and budget >= the last entry time.
double auc(const RunTrace& trace, double budget_s);

}  // namespace mapf
