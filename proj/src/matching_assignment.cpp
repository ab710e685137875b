#include <limits>
#include <stdexcept>
#include <vector>

#include "cyclecover/matching.hpp"
#include "matching_internal.hpp"

namespace cyclecover {

namespace detail {

std::vector<int> hungarian_min(const std::vector<std::vector<long long>>& cost) {
    const int n = static_cast<int>(cost.size());
    const long long kInf = std::numeric_limits<long long>::max() / 4;
    // Potentials u/v and matching p over 1-based indices; p[j] is the row
    // matched to column j, column 0 is a virtual staging slot.
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0];
            int j1 = -1;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j) {
        if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
    }
    return row_to_col;
}

}  // namespace detail

AssignmentResult max_weight_assignment(const WeightedCompleteGraph& g) {
    if (!g.directed) {
        throw std::invalid_argument("assignment requires a directed graph");
    }
    if (g.n < 2) {
        throw std::invalid_argument("assignment requires at least two vertices");
    }
    const int n = g.n;
    long long max_w = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && g.weight(i, j) > max_w) max_w = g.weight(i, j);
        }
    }
    if (max_w > std::numeric_limits<long long>::max() / (4LL * (n + 2))) {
        throw std::overflow_error("weights too large for assignment solver");
    }
    // Minimize (max_w - w); self-loops get a cost exceeding any loop-free
    // assignment so they are never chosen (a loop-free bijection exists for
    // n >= 2).
    const long long forbid = max_w * static_cast<long long>(n) + 1;
    std::vector<std::vector<long long>> cost(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cost[i][j] = (i == j) ? forbid : max_w - g.weight(i, j);
        }
    }
    AssignmentResult result;
    result.successor = detail::hungarian_min(cost);
    result.weight = 0;
    for (int i = 0; i < n; ++i) {
        if (result.successor[i] == i) {
            throw std::logic_error("assignment produced a self-loop");
        }
        result.weight += g.weight(i, result.successor[i]);
    }
    return result;
}

CycleCover AssignmentResult::to_cover() const {
    const int n = static_cast<int>(successor.size());
    CycleCover cover;
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        int v = start;
        while (!seen[v]) {
            seen[v] = 1;
            cyc.push_back(v);
            v = successor[v];
        }
        cover.cycles.push_back(std::move(cyc));
    }
    return canonical_cover(cover, /*directed=*/true);
}

}  // namespace cyclecover
