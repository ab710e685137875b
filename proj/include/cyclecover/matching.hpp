#pragma once

// Matching engines: Hungarian assignment (directed cycle covers), blossom
// maximum-weight perfect matching, a 2-factor solver built on it, and
// cardinality-capped matching.

#include <vector>

#include "cyclecover/graph.hpp"

namespace cyclecover {

// Fixed-point-free successor bijection and its total arc weight; the cycle
// structure of the permutation is a maximum-weight directed cycle cover.
struct AssignmentResult {
    std::vector<int> successor;
    long long weight = 0;

    CycleCover to_cover() const;
};

// Maximum-weight assignment with the diagonal forbidden (Hungarian, O(n^3)).
// Requires g.directed and n >= 2.
AssignmentResult max_weight_assignment(const WeightedCompleteGraph& g);

// Maximum-weight unrestricted cycle cover (2-factor) of an undirected
// complete graph: vertex-doubling expansion to a perfect-matching instance,
// weights doubled first so the auxiliary weights stay integral. Requires
// !g.directed and n >= 3.
CycleCover max_weight_two_factor(const WeightedCompleteGraph& g);

// Maximum-weight perfect matching on an undirected sparse graph (dense
// primal-dual blossom, O(n^3)). Throws std::domain_error("no perfect
// matching") when none exists, std::invalid_argument on odd vertex count or
// directed input, std::overflow_error when weights are too large for the
// internal exact arithmetic.
Matching max_weight_perfect_matching(const SparseGraph& g);

// Maximum-weight matching with at most `cap` edges. Directed inputs are
// matched on symmetrized weights max(w(u,v), w(v,u)) and each matched pair
// records its heavier orientation (ties: the (u,v) with u < v). Solved by a
// cardinality sweep; per-cardinality optima are concave, so the best over
// the sweep is the capped optimum. Requires 0 <= cap <= n/2.
Matching max_weight_matching_capped(const WeightedCompleteGraph& g, int cap);

// Best matching weight at each exact cardinality 0..cap (the sweep behind
// max_weight_matching_capped); exposed for concavity checks.
std::vector<long long> matching_weight_by_cardinality(
    const WeightedCompleteGraph& g, int cap);

}  // namespace cyclecover
