#pragma once

#include <map>
#include <string>
#include <vector>

namespace gridshed::agg {

// Rank-based decile binning: entries sorted ascending by (value, upid) are
// split into 10 contiguous bins with sizes differing by at most one
// (larger bins first); bin 1 holds the lowest values.  Requires at least
// 10 entries (Error{too_few_eligible} otherwise).  Being rank-based, the
// binning is invariant under strictly monotone transforms of the values.
std::map<std::string, int> assign_deciles(
    std::vector<std::pair<std::string, double>> eligible);

}  // namespace gridshed::agg
