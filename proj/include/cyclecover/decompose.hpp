#pragma once

// Splitting cycle covers (minimum cycle length 3) into vertex-disjoint
// one-edge paths ("singles"), two-edge paths ("doubles"), and isolated
// vertices so that the pieces keep at least half of the cover's weight and
// the piece counts depend only on n.

#include <array>
#include <vector>

#include "cyclecover/graph.hpp"

namespace cyclecover {

struct AlphaBeta {
    int alpha = 0;  // singles contributed
    int beta = 0;   // doubles contributed
};

// Decomposition result: singles as edges, doubles as vertex triples
// (u - v - w paths), leftover vertices isolated.
struct PathPack {
    std::vector<std::array<int, 2>> singles;
    std::vector<std::array<int, 3>> doubles;
    std::vector<int> isolated;
    long long kept_weight = 0;
};

// One way to split a pair of odd cycles: per-cycle (alpha, beta) budgets.
struct PairSplitOption {
    AlphaBeta a;  // budget for the first cycle of the row
    AlphaBeta b;  // budget for the second
};

// The fixed split tables driving the decomposition.
struct DecompositionTables {
    // Required piece surpluses by n mod 6: covers on n = 6k + ell vertices
    // decompose into k + alpha singles and k + beta doubles.
    std::array<AlphaBeta, 6> alpha_beta;

    // Final removal of a lone cycle, indexed by base length 3..8.
    std::array<AlphaBeta, 6> base_one_cycle;

    // Final removal of two odd cycles, keyed by base-length pair.
    struct BasePairRow {
        int base_a = 0;
        int base_b = 0;
        std::vector<PairSplitOption> options;
    };
    std::vector<BasePairRow> base_two_odd;

    // Mid-run removal of one even cycle keyed by (base length, ell) where
    // ell is the remaining vertex count mod 6 before the removal.
    struct StepEvenRow {
        int base = 0;
        std::array<AlphaBeta, 6> by_ell;
    };
    std::vector<StepEvenRow> step_even;

    // Mid-run removal of two odd cycles keyed by (base pair, ell).
    struct StepPairRow {
        int base_a = 0;
        int base_b = 0;
        std::array<std::vector<PairSplitOption>, 6> by_ell;
    };
    std::vector<StepPairRow> step_two_odd;
};

const DecompositionTables& decomposition_tables();

// Pieces taken from a single cycle (no isolated bookkeeping at this level).
struct CyclePieces {
    std::vector<std::array<int, 2>> singles;
    std::vector<std::array<int, 3>> doubles;
    long long kept_weight = 0;
};

// Takes alpha singles and beta doubles from the cycle: singles at offsets
// r, r+2, ..., r+2*alpha-2 and doubles at (r+2*alpha+3j, r+2*alpha+3j+1),
// with the rotation offset r chosen to maximize kept weight (ties to the
// smallest r). Requires 2*alpha + 3*beta <= cycle length; the kept weight is
// at least (alpha + 2*beta)/length of the cycle's weight.
CyclePieces decompose_cycle(const WeightedCompleteGraph& g,
                            const std::vector<int>& cycle, int alpha, int beta);

// Split budget for a lone cycle of length lambda >= 3: the base-table entry
// for lengths 3..8, extended by (+1, +1) per 6 extra vertices.
AlphaBeta extend_alpha_beta(int lambda);

// Splits two odd cycles using a table row's options: every option (and both
// role assignments when the cycles share a base length) is evaluated via
// decompose_cycle and the heaviest result returned. Budgets are extended by
// (+1, +1) per 6 vertices above each cycle's base length. The combined kept
// weight is at least half the pair's weight.
CyclePieces decompose_pair(const WeightedCompleteGraph& g,
                           const std::vector<int>& cycle_a,
                           const std::vector<int>& cycle_b,
                           const std::vector<PairSplitOption>& options);

// Full driver: repeatedly removes one even cycle (while any remains beside
// other cycles) or a pair of odd cycles (grouped so residue-3 and residue-5
// lengths never pair except as the final base case), finishing with the
// base table. The result's piece counts match the alpha_beta table for
// n mod 6 and 2 * kept_weight >= cover weight. Requires every cycle >= 3.
PathPack decompose_cover(const WeightedCompleteGraph& g, const CycleCover& c);

// Per cycle, keeps floor(len/2) pairwise vertex-disjoint alternating edges
// (best rotation; a 2-cycle keeps its heavier arc): a matching with at least
// ceil(n/3) edges keeping at least a third of the cover's weight.
Matching decompose_to_matching(const WeightedCompleteGraph& g,
                               const CycleCover& c);

}  // namespace cyclecover
