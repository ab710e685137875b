#pragma once

// Core data model: complete weighted graphs, sparse (incomplete) graphs,
// cycle covers, and matchings, plus weight and validity checks.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclecover/lengths.hpp"

namespace cyclecover {

// Complete graph with nonnegative integer weights on every ordered pair
// (directed) or unordered pair (undirected). Weights stored as a full n x n
// matrix with zero diagonal; undirected graphs keep the matrix symmetric.
struct WeightedCompleteGraph {
    bool directed = false;
    int n = 0;
    std::vector<std::vector<long long>> w;

    long long weight(int u, int v) const { return w[u][v]; }
};

// Validates invariants (size, diagonal, symmetry, nonnegativity, n bounds)
// and returns the graph. Throws std::invalid_argument on violations.
WeightedCompleteGraph make_complete_graph(bool directed, int n,
                                          std::vector<std::vector<long long>> w);
// All-zero weights.
WeightedCompleteGraph make_zero_graph(bool directed, int n);

// Incomplete graph given by an explicit edge list, optionally weighted.
struct SparseGraph {
    struct Edge {
        int u = 0;
        int v = 0;
        long long w = 1;
    };
    bool directed = false;
    int n = 0;
    std::vector<Edge> edges;

    bool has_edge(int u, int v) const;  // respects directedness
};

// Validates (ranges, no loops, no duplicates) and returns the graph.
// Undirected edges are canonicalized to (min,max).
SparseGraph make_sparse_graph(bool directed, int n,
                              std::vector<SparseGraph::Edge> edges);

// Partition of the vertex set into cycles. Each cycle is a vertex sequence;
// consecutive vertices (wrapping around) are the traversed edges.
struct CycleCover {
    std::vector<std::vector<int>> cycles;
};

// Canonical form: each cycle rotated to start at its minimum vertex;
// undirected cycles additionally oriented so the second vertex is the
// smaller of the first vertex's two neighbors; cycles sorted by first vertex.
CycleCover canonical_cover(const CycleCover& c, bool directed);

// Vertex-disjoint edge set; directed use records a chosen orientation.
struct Matching {
    std::vector<std::array<int, 2>> edges;
    long long weight = 0;
};

struct ValidationResult {
    bool ok = true;
    std::string message;  // diagnostic when !ok
    explicit operator bool() const { return ok; }
};

// True iff c partitions {0..n-1} and every cycle length is allowed by L
// (and meets the directedness-dependent minimum length). Malformed input
// yields false plus a reason, never a throw.
ValidationResult validate_cover(const CycleCover& c, int n, bool directed,
                                const LengthSet& L);

// Sum of weights over all traversed edges. Throws std::invalid_argument if c
// is not a partition into cycles of legal length for g's directedness, and
// std::overflow_error if the sum exceeds 64 bits.
long long cover_weight(const WeightedCompleteGraph& g, const CycleCover& c);

}  // namespace cyclecover
