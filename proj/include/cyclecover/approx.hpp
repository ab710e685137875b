#pragma once

// Approximation algorithms for maximum-weight restricted cycle covers, plus
// the piece-assembly step joining decomposition pieces into allowed cycles.

#include <functional>
#include <optional>
#include <string>

#include "cyclecover/decompose.hpp"
#include "cyclecover/graph.hpp"
#include "cyclecover/lengths.hpp"

namespace cyclecover {

// How assemble distributed pieces over target cycle lengths.
struct AssemblyPlan {
    struct Bin {
        int length = 0;
        std::vector<int> singles;   // indices into the pack's singles
        std::vector<int> doubles;   // indices into the pack's doubles
        std::vector<int> isolated;  // indices into the pack's isolated list
    };
    std::vector<Bin> bins;
    std::vector<std::array<int, 2>> connecting_edges;
};

struct ApproxResult {
    CycleCover cover;
    long long weight = 0;
    std::string branch;  // "undirected" | "dir-2and3" | "dir-2no3" | "dir-no2"
    long long pieces_kept_weight = 0;
};

// Packs the pieces into cycles whose lengths form a plan for (n, L): a joint
// feasibility DP over remaining (singles, doubles, isolated) counts picks
// bin sizes (largest length first), then each bin is closed into a cycle
// (doubles, then singles, then isolated vertices, joined head to tail).
// No piece edge is dropped, so the result weighs at least pack.kept_weight.
// Throws std::domain_error("no exact packing") when the counts cannot fill
// any plan (unreachable for packs produced by decompose_cover on admissible
// n, reachable for hand-built packs).
ApproxResult assemble(const WeightedCompleteGraph& g, const PathPack& pack,
                      const LengthSet& L, AssemblyPlan* plan_out = nullptr);

// Factor-2 approximation of the maximum-weight cover with all cycle lengths
// in L: best unrestricted 2-factor, decomposed and reassembled. Returns
// nullopt exactly when no cover exists (n not realizable by lengths in L).
std::optional<ApproxResult> approx_undirected(const WeightedCompleteGraph& g,
                                              const LengthSet& L);

// Pluggable solver producing a directed cycle cover with no 2-cycles.
using ThreeCycleCoverSolver =
    std::function<CycleCover(const WeightedCompleteGraph&)>;

// Maximum-weight directed cycle cover with all cycle lengths >= 3, by exact
// subset dynamic programming (desk scale); the default solver3. Requires
// n >= 3.
CycleCover exact_three_cycle_cover(const WeightedCompleteGraph& g);

// Directed approximation, dispatching on L:
//   (a) 2 and 3 allowed: assignment cover, then each cycle is snapped into
//       2-cycles plus at most one 3-cycle (factor 2);
//   (b) 2 allowed, 3 not: capped matching joined along a plan maximizing
//       sum(floor(len/2)) (factor 5/2);
//   (c) 2 not allowed: solver3's cover (default exact) decomposed and
//       reassembled (factor 2 with the exact default).
// Returns nullopt exactly when no cover exists.
std::optional<ApproxResult> approx_directed(
    const WeightedCompleteGraph& g, const LengthSet& L,
    const ThreeCycleCoverSolver& solver3 = {});

}  // namespace cyclecover
