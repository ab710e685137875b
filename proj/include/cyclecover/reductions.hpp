#pragma once

// Hardness-reduction machinery: clamp and gadget axiom verifiers, bounded
// clamp search, the cover-augmentation construction, the vertex-cover
// reduction with legalization/extraction, and the exact-cover reduction.

#include <optional>
#include <string>
#include <vector>

#include "cyclecover/graph.hpp"
#include "cyclecover/lengths.hpp"

namespace cyclecover {

// Two-connector graph meant to force exactly one of its connectors to be
// covered internally ("absorbed") in every ambient restricted cover.
struct ClampCandidate {
    SparseGraph graph;
    int u = 0;
    int v = 0;
    bool weighted = false;
};
ClampCandidate make_clamp_candidate(SparseGraph graph, int u, int v,
                                    bool weighted = false);

struct ClampVerdict {
    // Axioms requiring covers to exist.
    bool cover_without_u = false;  // graph minus u has a cover
    bool cover_without_v = false;  // graph minus v has a cover
    // Axioms requiring covers not to exist.
    bool no_cover_intact = false;        // the graph itself
    bool no_cover_without_both = false;  // graph minus both connectors
    bool no_cover_with_joins = false;    // graph plus a connector-to-connector
                                         // path of k fresh vertices, all
                                         // 0 <= k <= checked k_max (directed:
                                         // both directions)
    int checked_k_max = 0;
    bool passes = false;
    std::string status;  // "passes (bounded in k)" or the failing axiom
    // When a nonexistence axiom fails: the offending cover and where.
    std::optional<CycleCover> witness;
    std::string witness_graph;
    std::optional<int> witness_k;
};

// Exhaustively checks the clamp axioms on a candidate of at most 16
// vertices. Rejects weighted candidates (no weighted axioms are defined).
ClampVerdict verify_clamp(const ClampCandidate& cand, const LengthSet& L,
                          int k_max = 20);

// Three-connector graph enforcing a one-absorbed/two-expelled pattern; sigma
// is the size parameter (vertex count; plus the number of weight-2 edges for
// weighted candidates).
struct GadgetCandidate {
    SparseGraph graph;
    int x = 0;
    int y = 0;
    int z = 0;
    int sigma = 0;
    bool weighted = false;
};
GadgetCandidate make_gadget_candidate(SparseGraph graph, int x, int y, int z,
                                      bool weighted = false);

struct GadgetVerdict {
    // Unweighted checks.
    bool pair_removals_coverable = false;    // minus any two connectors
    bool intact_uncoverable = false;         // the bare gadget
    bool single_removals_uncoverable = false;
    bool triple_removal_uncoverable = false;
    bool through_paths_blocked = false;  // no cover once an external path
                                         // joins two connectors (third
                                         // connector kept or removed), for
                                         // path lengths up to the budget
    // Weighted checks (partial covers over the complete graph on the
    // gadget's vertices, absent pairs at weight 0).
    bool cap_all_cycles = false;       // spanning all-cycle weight <= sigma-1
    bool cap_external_ends = false;    // weight <= sigma - (open end pairs)
    bool healthy_value_exact = false;  // absorbing one connector with the
                                       // other two removed attains exactly
                                       // sigma - 2
    bool cap_two_connectors = false;   // >= 2 connectors left open:
                                       // weight <= sigma - 2
    int checked_budget = 0;
    bool passes = false;
    std::string status;
    std::optional<CycleCover> witness;
    std::string witness_detail;
};

// Exhaustively checks the gadget pattern on a candidate of at most 16
// vertices; `budget` bounds the external path lengths (unweighted) — the
// weighted variant requires L to contain an infinite tail.
GadgetVerdict verify_gadget(const GadgetCandidate& cand, const LengthSet& L,
                            int budget = 6);

// Template instantiation plus seeded randomized search, every candidate
// filtered through verify_clamp; returns the first verified candidate or
// nullopt within the budget (number of random candidates tried).
std::optional<ClampCandidate> search_clamp(const LengthSet& L, int max_vertices,
                                           int budget,
                                           unsigned long long seed = 1);

// One output graph + cover from the augmentation construction.
struct AugmentOutput {
    SparseGraph graph;
    CycleCover cover;
    std::string label;  // "G" | "G-u-v" | "G^k_u" | "G^k_v" (+ derivation)
};

struct AugmentResult {
    // The alternating edge sequences walked from u and from v.
    std::vector<std::array<int, 2>> P;
    std::vector<std::array<int, 2>> P_prime;
    bool path_reaches_v = false;  // P ends at v (joined case) vs. at u
    std::vector<AugmentOutput> outputs;
};

// Given covers of g minus u and g minus v (cycles written in original
// vertex labels), builds the alternating sequences P and P' and returns
// either covers of g joined by a u-to-v path of k fresh vertices for each
// requested k (when P reaches v), or covers of g itself and of g minus both
// (when P returns to u). Every output is degree-validated.
AugmentResult augment_cycle_covers(const SparseGraph& g, int u, int v,
                                   const CycleCover& cover_minus_u,
                                   const CycleCover& cover_minus_v,
                                   const std::vector<int>& join_ks = {0});

// Instance plus bookkeeping for the reductions.
struct ReductionArtifact {
    bool is_rvc = false;
    bool directed = false;
    int sigma = 0;
    int lambda = 0;
    int m = 0;         // source edge count (vertex-cover case)
    int n_source = 0;  // source vertex count / universe size

    // Vertex-cover case: complete instance with weights in {0,1} (or {0,1,2}
    // for weighted gadgets).
    WeightedCompleteGraph instance;
    SparseGraph source;
    GadgetCandidate gadget;
    std::vector<std::array<int, 2>> source_edges;    // sorted edge list
    std::vector<std::vector<int>> incident_edges;    // per vertex, sorted
    // gadget_base[edge][copy]: first instance vertex of that gadget block.
    std::vector<std::vector<int>> gadget_base;
    // Connector instance ids per (edge, copy); x = smaller source endpoint.
    std::vector<std::vector<int>> conn_x, conn_y, conn_z;
    // junctions[vertex][copy][i]: i-th junction edge of the vertex's cycle;
    // the last one closes the cycle and has weight 0 in copy 0.
    std::vector<std::vector<std::vector<std::array<int, 2>>>> junctions;

    // Exact-cover case: sparse digraph instance.
    SparseGraph xlc_graph;
    std::vector<std::vector<int>> sets;
    ClampCandidate clamp;
    std::vector<int> element_vertex;             // element -> instance vertex
    std::vector<std::vector<int>> set_cycle;     // set -> its cycle vertices
    // clamp_interior[set][slot]: first instance vertex of the clamp's
    // interior block for that (set, element) pair.
    std::vector<std::vector<int>> clamp_interior;
};

// Builds the vertex-cover reduction instance: one gadget per source edge in
// each of lambda copies (lambda = min(L)), junction cycles per source vertex
// (the closing junction has weight 0 in the first copy only), and
// cross-copy cycles through the gadgets' third connectors. Requires h to be
// lambda-regular and the gadget to match L's mode.
ReductionArtifact build_rvc_instance(const SparseGraph& h, const LengthSet& L,
                                     const GadgetCandidate& gadget);

// The canonical cover encoding a vertex cover S: junction cycles for every
// vertex in S in every copy, healthy gadget interiors, and third-connector
// cycles where needed; weight = sigma*lambda*m - |S|. Throws if S is not a
// vertex cover.
CycleCover cover_from_vertex_cover(const ReductionArtifact& artifact,
                                   const std::vector<int>& vertex_cover);

// Legality of a cover of the reduction instance: no cross-gadget edges
// beyond junctions and third-connector links; per source edge, two or four
// junctions at its first-copy gadget (two implies both belong to one
// connector and both of the gadget's third-connector links are used; four
// implies neither is).
ValidationResult is_legal_cover(const ReductionArtifact& artifact,
                                const CycleCover& c);

// Rewrites any cover of the instance into a legal one without losing
// weight: drops illegal edges, completes partial junction cycles, fixes
// edges left uncovered, and rebuilds interiors and third-connector cycles.
// Idempotent on its own output.
CycleCover legalize(const ReductionArtifact& artifact, const CycleCover& c);

// The vertices whose first-copy junction cycles are fully used — a vertex
// cover of the source graph whenever the input is legal (checked; throws
// std::domain_error on illegal input).
std::vector<int> extract_vertex_cover(const ReductionArtifact& artifact,
                                      const CycleCover& legal_cover);

// Builds the exact-cover reduction: a vertex per element, a lambda-cycle per
// set, and a clamp copy per (set, element) wired between the set's cycle
// vertex and the element; the instance has a cover with lengths in L iff
// the set system has an exact cover. Requires every set to have exactly
// lambda elements with lambda in L, lambda >= 3, and a directed clamp.
ReductionArtifact build_xlc_instance(int universe,
                                     const std::vector<std::vector<int>>& sets,
                                     const ClampCandidate& clamp,
                                     const LengthSet& L);

}  // namespace cyclecover
