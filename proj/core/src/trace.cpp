#include "mapf/trace.hpp"

#include <stdexcept>

namespace mapf {

void RunTrace::add(double time_s, long long cost)
{
  if (!entries.empty()) {
    if (time_s <= entries.back().time_s)
      throw std::invalid_argument("RunTrace: entry times must be strictly increasing");
    if (cost > entries.back().cost)
      throw std::invalid_argument("RunTrace: costs must be non-increasing");
  }
  entries.push_back({time_s, cost});
}

double auc(const RunTrace& trace, double budget_s)
{
  if (trace.empty())
    throw std::invalid_argument("auc: empty trace");
  if (budget_s < trace.entries.back().time_s)
    throw std::invalid_argument("auc: budget precedes the last trace entry");
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < trace.entries.size(); ++i) {
    area += static_cast<double>(trace.entries[i].cost) *
            (trace.entries[i + 1].time_s - trace.entries[i].time_s);
  }
  area += static_cast<double>(trace.entries.back().cost) *
          (budget_s - trace.entries.back().time_s);
  return area;
}

}  // namespace mapf
