#pragma once

// Exact small-instance solvers (ground truth for tests) and the ratio
// verification harness comparing approximation output against exact optima.

#include <optional>
#include <string>
#include <vector>

#include "cyclecover/graph.hpp"
#include "cyclecover/lengths.hpp"

namespace cyclecover {

// Exact nonnegative rational, compared by cross-multiplication.
struct Fraction {
    long long num = 0;
    long long den = 1;
};
bool fraction_le(const Fraction& a, const Fraction& b);
bool fraction_lt(const Fraction& a, const Fraction& b);

// Size bound for the subset-DP solver; default 14, overridable via the
// CYCLECOVER_ORACLE_BOUND environment variable.
int oracle_bound();

// Maximum-weight cover with all cycle lengths in L, by dynamic programming
// over vertex subsets; nullopt exactly when no such cover exists. Throws
// std::domain_error("oracle bound exceeded") when n exceeds the bound.
std::optional<CycleCover> exact_best_cover(const WeightedCompleteGraph& g,
                                           const LengthSet& L);

// Minimum vertex cover of an undirected sparse graph by branching search.
// Requires at most 24 vertices.
std::vector<int> exact_min_vertex_cover(const SparseGraph& h);

// Exact cover: indices of pairwise-disjoint sets covering {0..universe-1}
// exactly, or nullopt. Requires universe <= 24.
std::optional<std::vector<int>> exact_exact_cover(
    int universe, const std::vector<std::vector<int>>& sets);

// Seeded random-instance generator parameters.
struct GeneratorSpec {
    int n = 0;
    bool directed = false;
    long long weight_max = 0;
    unsigned long long seed = 0;
    int trials = 0;
};

// Uniform weights in [0, weight_max], reproducible per seed.
WeightedCompleteGraph random_complete_graph(int n, bool directed,
                                            long long weight_max,
                                            unsigned long long seed);

struct RatioRecord {
    unsigned long long seed = 0;
    int n = 0;
    std::string lengths;  // textual form of the L-set
    long long opt = 0;
    long long apx = 0;
    std::string branch;
    bool within_bound = true;
};

struct RatioReport {
    int instances = 0;
    Fraction worst_ratio{1, 1};  // max over instances of opt/apx
    Fraction bound{1, 1};
    std::vector<RatioRecord> per_instance;
    bool ok = true;  // every instance within its branch bound and the cap
};

// Runs the tagged algorithm ("undirected" or "directed") against
// exact_best_cover on gen.trials seeded instances per length set, skipping
// inadmissible (n, L) combinations. Ratios are exact fractions; opt = 0
// counts as ratio 1. Each instance is also checked against its branch's own
// bound (2 for "undirected" and branch (a), 5/2 for (b), 2 for (c)).
RatioReport ratio_harness(const GeneratorSpec& gen, const std::string& algorithm,
                          const std::vector<LengthSet>& family, Fraction bound);

}  // namespace cyclecover
