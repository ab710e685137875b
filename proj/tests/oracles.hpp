#pragma once

// Independent brute-force reference implementations used only by the test
// suites. Deliberately structured differently from the library solvers
// (exhaustive partition / permutation / subset enumeration) so agreement is
// meaningful.

#include <optional>
#include <vector>

#include "cyclecover/graph.hpp"
#include "cyclecover/lengths.hpp"

namespace testoracle {

// Heaviest cycle cover whose lengths all satisfy L, by exhaustive partition
// of the vertex set into cycles; nullopt when no such cover exists.
std::optional<long long> best_cover_weight(
    const cyclecover::WeightedCompleteGraph& g, const cyclecover::LengthSet& L);

// Heaviest unrestricted 2-factor (undirected, every cycle length >= 3).
std::optional<long long> best_two_factor_weight(
    const cyclecover::WeightedCompleteGraph& g);

// Heaviest fixed-point-free successor bijection, by permutation scan.
long long best_assignment_weight(const cyclecover::WeightedCompleteGraph& g);

// Heaviest perfect matching on an undirected sparse graph; nullopt if none.
std::optional<long long> best_perfect_matching_weight(
    const cyclecover::SparseGraph& g);

// Heaviest matching with at most cap edges; directed graphs score a pair at
// max(w(u,v), w(v,u)).
long long best_capped_matching_weight(
    const cyclecover::WeightedCompleteGraph& g, int cap);

// Heaviest matching with exactly d edges for every d in 0..cap.
std::vector<long long> matching_weights_by_cardinality(
    const cyclecover::WeightedCompleteGraph& g, int cap);

// Every multiset of parts >= min_part summing to n, parts descending.
std::vector<std::vector<int>> partitions_with_min_part(int n, int min_part);

// reachable[s] == 1 iff s is a sum of members of `lengths` (repetition
// allowed), for 0 <= s <= limit.
std::vector<char> reachable_sums(const std::vector<int>& lengths, int limit);

// Minimum vertex cover size by subset enumeration (undirected, n <= 20).
int min_vertex_cover_size(const cyclecover::SparseGraph& g);

// Whether some subfamily of the sets partitions {0..universe-1}.
bool exact_cover_exists(int universe,
                        const std::vector<std::vector<int>>& sets);

}  // namespace testoracle
