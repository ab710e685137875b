#pragma once

// Exhaustive restricted-cycle-cover search on sparse (incomplete) graphs at
// desk scale; powers the clamp/gadget verifiers and reduction desk checks.

#include <optional>
#include <utility>
#include <vector>

#include "cyclecover/graph.hpp"
#include "cyclecover/lengths.hpp"

namespace cyclecover {

// A cover of g with every cycle length in L, or nullopt. Deterministic
// (first cover in a fixed search order). Directed graphs use successor
// backtracking, undirected use edge-selection backtracking.
std::optional<CycleCover> find_cover(const SparseGraph& g, const LengthSet& L);

bool has_cover(const SparseGraph& g, const LengthSet& L);

// Maximum-weight cover (edge weights from g, default 1) or nullopt.
std::optional<std::pair<CycleCover, long long>> find_max_weight_cover(
    const SparseGraph& g, const LengthSet& L);

// Induced subgraph on the vertices outside `drop`; vertices are reindexed
// downward (order preserved). `drop` need not be sorted.
SparseGraph remove_vertices(const SparseGraph& g, std::vector<int> drop);

// Adds a path of k fresh vertices from `from` to `to` (k = 0 adds the
// direct edge/arc). Fresh vertices take indices n, n+1, ....
SparseGraph add_external_path(const SparseGraph& g, int from, int to, int k);

}  // namespace cyclecover
