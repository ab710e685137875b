#pragma once

// Internal matching kernels shared between translation units.

#include <utility>
#include <vector>

namespace cyclecover::detail {

// Minimum-cost assignment on an n x n matrix (Hungarian, O(n^3)); returns
// row -> column.
std::vector<int> hungarian_min(const std::vector<std::vector<long long>>& cost);

// Maximum-weight matching on a dense nonnegative weight matrix (0 = no
// edge), 0-indexed; returns (mate array with -1 for unmatched, total
// weight). Primal-dual blossom, O(n^3).
std::pair<std::vector<int>, long long> blossom_max_weight_matching(
    const std::vector<std::vector<long long>>& w);

}  // namespace cyclecover::detail
