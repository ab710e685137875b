#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclecover/cover_search.hpp"
#include "cyclecover/reductions.hpp"

namespace cyclecover {

namespace {

constexpr int kSmallGraphBound = 16;

std::pair<int, int> norm_pair(bool directed, int a, int b) {
    if (!directed && a > b) std::swap(a, b);
    return {a, b};
}

}  // namespace

// ---------------------------------------------------------------------------
// Clamps
// ---------------------------------------------------------------------------

ClampCandidate make_clamp_candidate(SparseGraph graph, int u, int v,
                                    bool weighted) {
    if (u < 0 || u >= graph.n || v < 0 || v >= graph.n || u == v) {
        throw std::invalid_argument("clamp connectors out of range");
    }
    ClampCandidate cand;
    cand.graph = std::move(graph);
    cand.u = u;
    cand.v = v;
    cand.weighted = weighted;
    return cand;
}

ClampVerdict verify_clamp(const ClampCandidate& cand, const LengthSet& L,
                          int k_max) {
    if (cand.graph.directed != L.directed) {
        throw std::invalid_argument("clamp and length-set modes disagree");
    }
    if (cand.graph.n > kSmallGraphBound) {
        throw std::domain_error("clamp verification bound exceeded");
    }
    if (cand.weighted) {
        throw std::domain_error("weighted clamp candidates have no axioms");
    }
    if (k_max < 0) {
        throw std::invalid_argument("negative join bound");
    }
    ClampVerdict verdict;
    verdict.checked_k_max = k_max;
    std::string failure;
    auto note_failure = [&](const std::string& what) {
        if (failure.empty()) failure = what;
    };

    verdict.cover_without_u =
        has_cover(remove_vertices(cand.graph, {cand.u}), L);
    if (!verdict.cover_without_u) {
        note_failure("no cover after removing the first connector");
    }
    verdict.cover_without_v =
        has_cover(remove_vertices(cand.graph, {cand.v}), L);
    if (!verdict.cover_without_v) {
        note_failure("no cover after removing the second connector");
    }

    auto expect_uncoverable = [&](const SparseGraph& g, const std::string& name,
                                  std::optional<int> k) {
        auto cover = find_cover(g, L);
        if (!cover) return true;
        note_failure("unexpected cover on " + name);
        if (!verdict.witness) {
            verdict.witness = *cover;
            verdict.witness_graph = name;
            verdict.witness_k = k;
        }
        return false;
    };

    verdict.no_cover_intact =
        expect_uncoverable(cand.graph, "intact graph", std::nullopt);
    verdict.no_cover_without_both = expect_uncoverable(
        remove_vertices(cand.graph, {cand.u, cand.v}), "minus both connectors",
        std::nullopt);

    verdict.no_cover_with_joins = true;
    for (int k = 0; k <= k_max && verdict.no_cover_with_joins; ++k) {
        if (!expect_uncoverable(add_external_path(cand.graph, cand.u, cand.v, k),
                                "join from first to second connector", k)) {
            verdict.no_cover_with_joins = false;
            break;
        }
        if (cand.graph.directed &&
            !expect_uncoverable(add_external_path(cand.graph, cand.v, cand.u, k),
                                "join from second to first connector", k)) {
            verdict.no_cover_with_joins = false;
            break;
        }
    }

    verdict.passes = verdict.cover_without_u && verdict.cover_without_v &&
                     verdict.no_cover_intact && verdict.no_cover_without_both &&
                     verdict.no_cover_with_joins;
    verdict.status =
        verdict.passes ? "passes (bounded in k)" : "fails: " + failure;
    return verdict;
}

namespace {

// Candidate layouts known to work for common length sets; every one is
// still filtered through verify_clamp before being reported.
std::vector<ClampCandidate> clamp_templates(const LengthSet& L,
                                            int max_vertices) {
    std::vector<ClampCandidate> out;
    const int cap = std::min(max_vertices, kSmallGraphBound);
    auto keep = [&](bool directed, int n, std::vector<SparseGraph::Edge> edges) {
        if (n <= cap) {
            out.push_back(make_clamp_candidate(
                make_sparse_graph(directed, n, std::move(edges)), 0, 1));
        }
    };
    const int legal_min = L.directed ? 2 : 3;
    int scan_limit = legal_min;
    if (L.tail) scan_limit = std::max(scan_limit, *L.tail + 2);
    if (!L.finite_part.empty()) {
        scan_limit = std::max(scan_limit, L.finite_part.back() + 2);
    }
    std::vector<int> blocked;  // legal lengths up to the scan limit not in L
    for (int len = legal_min; len <= scan_limit; ++len) {
        if (!contains(L, len)) blocked.push_back(len);
    }

    if (L.directed) {
        // Two-connector hub: both connectors exchange arcs with one middle
        // vertex.
        keep(true, 3, {{0, 2, 1}, {2, 0, 1}, {1, 2, 1}, {2, 1, 1}});
        if (!L.tail && !L.finite_part.empty()) {
            // Shared path between the connectors of length max(L) - 1.
            const int lam = L.finite_part.back();
            if (lam >= 3) {
                std::vector<SparseGraph::Edge> edges = {
                    {0, 2, 1}, {1, 2, 1}, {lam, 0, 1}, {lam, 1, 1}};
                for (int i = 2; i < lam; ++i) edges.push_back({i, i + 1, 1});
                keep(true, lam + 1, std::move(edges));
            }
        }
        // Ladder with a reversible middle segment.
        keep(true, 5,
             {{2, 3, 1},
              {3, 4, 1},
              {3, 2, 1},
              {4, 3, 1},
              {0, 2, 1},
              {4, 0, 1},
              {1, 4, 1},
              {2, 1, 1}});
        // Gated shared path: a path of lam - 1 vertices behind two gate
        // vertices, for blocked lam with lam + 2 allowed.
        for (auto it = blocked.rbegin(); it != blocked.rend(); ++it) {
            const int lam = *it;
            if (lam < 3 || !contains(L, lam + 2)) continue;
            std::vector<SparseGraph::Edge> edges = {
                {2, 4, 1},       {3, 4, 1}, {lam + 2, 2, 1}, {lam + 2, 3, 1},
                {1, 2, 1},       {3, 1, 1}, {2, 0, 1},       {0, 3, 1}};
            for (int i = 4; i < lam + 2; ++i) edges.push_back({i, i + 1, 1});
            keep(true, lam + 3, std::move(edges));
        }
        // Tapped cycle of length lam, for lam and lam + 2 blocked but
        // lam + 1 allowed.
        for (int lam = 4; lam <= scan_limit; ++lam) {
            if (contains(L, lam) || contains(L, lam + 2) ||
                !contains(L, lam + 1)) {
                continue;
            }
            std::vector<SparseGraph::Edge> edges = {
                {0, 2, 1}, {lam + 1, 0, 1}, {1, 3, 1}, {2, 1, 1}};
            for (int i = 2; i < lam + 1; ++i) edges.push_back({i, i + 1, 1});
            edges.push_back({lam + 1, 2, 1});
            keep(true, lam + 2, std::move(edges));
        }
    } else {
        if (!L.tail && !L.finite_part.empty()) {
            // Two internally disjoint connector-to-connector paths sharing
            // both connectors.
            const int lam = L.finite_part.back();
            if (lam >= 3) {
                std::vector<SparseGraph::Edge> edges = {
                    {0, 2, 1}, {1, 2, 1}, {0, lam, 1}, {1, lam, 1}};
                for (int i = 2; i < lam; ++i) edges.push_back({i, i + 1, 1});
                keep(false, lam + 1, std::move(edges));
            }
        }
    }
    return out;
}

}  // namespace

std::optional<ClampCandidate> search_clamp(const LengthSet& L, int max_vertices,
                                           int budget, unsigned long long seed) {
    if (max_vertices < 3 || budget < 0) {
        throw std::invalid_argument("malformed search parameters");
    }
    if (L.is_all_lengths()) return std::nullopt;
    for (ClampCandidate& cand : clamp_templates(L, max_vertices)) {
        if (verify_clamp(cand, L, 20).passes) return cand;
    }
    std::mt19937_64 rng(seed);
    const int cap = std::min(max_vertices, kSmallGraphBound);
    for (int trial = 0; trial < budget; ++trial) {
        const int n = 3 + static_cast<int>(rng() % static_cast<unsigned>(cap - 2));
        const unsigned keep_permille =
            std::min(700u, 2500u / static_cast<unsigned>(n - 1));
        std::vector<SparseGraph::Edge> edges;
        for (int a = 0; a < n; ++a) {
            for (int b = L.directed ? 0 : a + 1; b < n; ++b) {
                if (a == b) continue;
                if (rng() % 1000 < keep_permille) edges.push_back({a, b, 1});
            }
        }
        if (edges.empty()) continue;
        ClampCandidate cand =
            make_clamp_candidate(make_sparse_graph(L.directed, n, edges), 0, 1);
        if (verify_clamp(cand, L, 20).passes) return cand;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Gadgets
// ---------------------------------------------------------------------------

GadgetCandidate make_gadget_candidate(SparseGraph graph, int x, int y, int z,
                                      bool weighted) {
    if (x < 0 || x >= graph.n || y < 0 || y >= graph.n || z < 0 ||
        z >= graph.n || x == y || y == z || x == z) {
        throw std::invalid_argument("gadget connectors out of range");
    }
    GadgetCandidate cand;
    cand.sigma = graph.n;
    for (const auto& e : graph.edges) {
        if (weighted) {
            if (e.w != 1 && e.w != 2) {
                throw std::invalid_argument(
                    "weighted gadget edges must have weight 1 or 2");
            }
            if (e.w == 2) ++cand.sigma;
        } else if (e.w != 1) {
            throw std::invalid_argument(
                "unweighted gadget edges must have weight 1");
        }
    }
    cand.graph = std::move(graph);
    cand.x = x;
    cand.y = y;
    cand.z = z;
    cand.weighted = weighted;
    return cand;
}

namespace {

// Remove vertices but report where the survivors land.
SparseGraph remove_with_map(const SparseGraph& g, std::vector<int> drop,
                            std::vector<int>& remap) {
    std::sort(drop.begin(), drop.end());
    remap.assign(g.n, -1);
    int next = 0;
    std::size_t di = 0;
    for (int v = 0; v < g.n; ++v) {
        if (di < drop.size() && drop[di] == v) {
            ++di;
            continue;
        }
        remap[v] = next++;
    }
    return remove_vertices(g, std::move(drop));
}

struct WeightedCapChecks {
    bool cap_all_cycles = true;
    bool cap_external_ends = true;
    bool cap_two_connectors = true;
    std::optional<CycleCover> witness;
    std::string witness_detail;
};

// Enumerates every partial structure over the complete graph on the
// gadget's vertex set: disjoint cycles with allowed lengths plus paths
// whose endpoints are connectors. Absent pairs score weight zero. Checks
// the weight caps against sigma.
WeightedCapChecks check_weighted_caps(const GadgetCandidate& cand,
                                      const LengthSet& L) {
    WeightedCapChecks checks;
    const SparseGraph& g = cand.graph;
    const int n = g.n;
    const bool directed = g.directed;
    const long long sigma = cand.sigma;

    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (const auto& e : g.edges) {
        w[e.u][e.v] = e.w;
        if (!directed) w[e.v][e.u] = e.w;
    }
    std::vector<char> is_conn(n, 0);
    is_conn[cand.x] = is_conn[cand.y] = is_conn[cand.z] = 1;

    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < n; ++a) {
        for (int b = directed ? 0 : a + 1; b < n; ++b) {
            if (a != b) slots.push_back({a, b});
        }
    }

    std::vector<int> deg_out(n, 0), deg_in(n, 0);
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    // Chain endpoints: partner[e] is the other end of e's path, plen[e] its
    // vertex count; meaningful only while e is a path end or isolated.
    std::vector<int> partner(n), plen(n, 1);
    for (int v = 0; v < n; ++v) partner[v] = v;
    long long weight = 0;

    auto degree = [&](int v) { return deg_out[v] + deg_in[v]; };

    auto structure_components = [&]() {
        // Decompose the used edges into open chains and cycles for the
        // witness (chains appear as open vertex sequences).
        std::vector<std::vector<int>> adj(n);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (used[a][b]) {
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
            }
        }
        auto take_walk = [&](int start) {
            std::vector<int> seq = {start};
            int cur = start;
            while (!adj[cur].empty()) {
                const int nxt = adj[cur].back();
                adj[cur].pop_back();
                auto it = std::find(adj[nxt].begin(), adj[nxt].end(), cur);
                adj[nxt].erase(it);
                if (nxt == start) break;
                seq.push_back(nxt);
                cur = nxt;
            }
            return seq;
        };
        CycleCover out;
        for (int v = 0; v < n; ++v) {
            if (adj[v].size() == 1) out.cycles.push_back(take_walk(v));
        }
        for (int v = 0; v < n; ++v) {
            if (!adj[v].empty()) out.cycles.push_back(take_walk(v));
        }
        return out;
    };

    auto evaluate = [&]() {
        int open_slots2 = 0;
        int open_conns = 0;
        for (int v = 0; v < n; ++v) {
            const int d = degree(v);
            if (d < 2) {
                if (!is_conn[v]) return;  // interior vertex left unsaturated
                open_slots2 += 2 - d;
                ++open_conns;
            }
        }
        const int alpha = open_slots2 / 2;
        auto flag = [&](bool& field, const std::string& what) {
            if (field && !checks.witness) {
                checks.witness = structure_components();
                checks.witness_detail =
                    what + " of weight " + std::to_string(weight);
            }
            field = false;
        };
        if (alpha == 0) {
            if (weight > sigma - 1) {
                flag(checks.cap_all_cycles, "spanning cycle structure");
            }
        } else if (weight > sigma - alpha) {
            flag(checks.cap_external_ends,
                 "structure with " + std::to_string(alpha) + " open slots");
        }
        if (open_conns >= 2 && weight > sigma - 2) {
            flag(checks.cap_two_connectors,
                 "structure leaving two connectors open");
        }
    };

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == slots.size()) {
            evaluate();
            return;
        }
        self(self, idx + 1);  // skip this slot
        const auto [a, b] = slots[idx];
        if (directed) {
            if (deg_out[a] >= 1 || deg_in[b] >= 1) return;
        } else {
            if (degree(a) >= 2 || degree(b) >= 2) return;
        }
        if (used[a][b]) return;
        const bool closing = partner[a] == b;
        if (closing) {
            const int len = plen[a];
            if (len < (directed ? 2 : 3) || !contains(L, len)) return;
        }
        const int pa = partner[a], pb = partner[b];
        const int la = plen[a], lb = plen[b];
        if (!closing) {
            partner[pa] = pb;
            partner[pb] = pa;
            plen[pa] = la + lb;
            plen[pb] = la + lb;
        }
        used[a][b] = 1;
        if (!directed) used[b][a] = 1;
        ++deg_out[a];
        ++deg_in[b];
        weight += w[a][b];

        self(self, idx + 1);

        weight -= w[a][b];
        --deg_out[a];
        --deg_in[b];
        used[a][b] = 0;
        if (!directed) used[b][a] = 0;
        if (!closing) {
            partner[pa] = a;
            partner[pb] = b;
            plen[pa] = la;
            plen[pb] = lb;
        }
    };
    rec(rec, 0);
    return checks;
}

}  // namespace

GadgetVerdict verify_gadget(const GadgetCandidate& cand, const LengthSet& L,
                            int budget) {
    if (cand.graph.directed != L.directed) {
        throw std::invalid_argument("gadget and length-set modes disagree");
    }
    if (cand.graph.n > kSmallGraphBound) {
        throw std::domain_error("gadget verification bound exceeded");
    }
    if (budget < 0) {
        throw std::invalid_argument("negative path budget");
    }
    GadgetVerdict verdict;
    std::string failure;
    auto note_failure = [&](const std::string& what) {
        if (failure.empty()) failure = what;
    };
    const std::vector<int> conns = {cand.x, cand.y, cand.z};

    if (!cand.weighted) {
        verdict.checked_budget = budget;
        verdict.pair_removals_coverable = true;
        for (int i = 0; i < 3 && verdict.pair_removals_coverable; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                if (!has_cover(remove_vertices(cand.graph, {conns[i], conns[j]}),
                               L)) {
                    verdict.pair_removals_coverable = false;
                    note_failure("no cover after removing two connectors");
                    break;
                }
            }
        }
        auto expect_uncoverable = [&](const SparseGraph& g,
                                      const std::string& name) {
            auto cover = find_cover(g, L);
            if (!cover) return true;
            note_failure("unexpected cover on " + name);
            if (!verdict.witness) {
                verdict.witness = *cover;
                verdict.witness_detail = name;
            }
            return false;
        };
        verdict.intact_uncoverable =
            expect_uncoverable(cand.graph, "intact gadget");
        verdict.single_removals_uncoverable = true;
        for (int c : conns) {
            if (!expect_uncoverable(remove_vertices(cand.graph, {c}),
                                    "gadget minus one connector")) {
                verdict.single_removals_uncoverable = false;
                break;
            }
        }
        verdict.triple_removal_uncoverable = expect_uncoverable(
            remove_vertices(cand.graph, {cand.x, cand.y, cand.z}),
            "gadget minus all three connectors");

        // No external path may let a cover route through two connectors,
        // whether the third connector is present or removed.
        verdict.through_paths_blocked = true;
        for (int i = 0; i < 3 && verdict.through_paths_blocked; ++i) {
            for (int j = 0; j < 3 && verdict.through_paths_blocked; ++j) {
                if (i == j) continue;
                if (!cand.graph.directed && j < i) continue;
                const int p = conns[i];
                const int q = conns[j];
                const int third = cand.x + cand.y + cand.z - p - q;
                for (int drop_third = 0; drop_third <= 1; ++drop_third) {
                    SparseGraph base = cand.graph;
                    int pp = p, qq = q;
                    if (drop_third) {
                        std::vector<int> remap;
                        base = remove_with_map(cand.graph, {third}, remap);
                        pp = remap[p];
                        qq = remap[q];
                    }
                    bool blocked = true;
                    for (int k = 0; k <= budget; ++k) {
                        if (!expect_uncoverable(
                                add_external_path(base, pp, qq, k),
                                std::string("gadget with an external path") +
                                    (drop_third ? " (third connector removed)"
                                                : ""))) {
                            blocked = false;
                            break;
                        }
                    }
                    if (!blocked) {
                        verdict.through_paths_blocked = false;
                        break;
                    }
                }
            }
        }
        // Weighted caps do not apply to unweighted candidates.
        verdict.cap_all_cycles = true;
        verdict.cap_external_ends = true;
        verdict.healthy_value_exact = true;
        verdict.cap_two_connectors = true;
        verdict.passes = verdict.pair_removals_coverable &&
                         verdict.intact_uncoverable &&
                         verdict.single_removals_uncoverable &&
                         verdict.triple_removal_uncoverable &&
                         verdict.through_paths_blocked;
    } else {
        if (!L.tail) {
            throw std::domain_error(
                "weighted gadget checks need an infinite tail of lengths");
        }
        if (cand.graph.n > 10) {
            throw std::domain_error("weighted gadget enumeration bound exceeded");
        }
        verdict.checked_budget = 0;
        WeightedCapChecks caps = check_weighted_caps(cand, L);
        verdict.cap_all_cycles = caps.cap_all_cycles;
        verdict.cap_external_ends = caps.cap_external_ends;
        verdict.cap_two_connectors = caps.cap_two_connectors;
        if (!caps.cap_all_cycles) {
            note_failure("spanning cycle structure too heavy");
        }
        if (!caps.cap_external_ends) note_failure("open structure too heavy");
        if (!caps.cap_two_connectors) {
            note_failure("structure leaving two connectors open too heavy");
        }
        if (caps.witness) {
            verdict.witness = caps.witness;
            verdict.witness_detail = caps.witness_detail;
        }
        // Absorbing one connector with the other two removed must attain
        // exactly sigma - 2 using real edges only.
        verdict.healthy_value_exact = true;
        for (int keep : conns) {
            std::vector<int> drop;
            for (int c : conns) {
                if (c != keep) drop.push_back(c);
            }
            auto best =
                find_max_weight_cover(remove_vertices(cand.graph, drop), L);
            if (!best || best->second != cand.sigma - 2) {
                verdict.healthy_value_exact = false;
                note_failure("healthy cover value differs from sigma - 2");
                break;
            }
        }
        verdict.pair_removals_coverable = true;
        verdict.intact_uncoverable = true;
        verdict.single_removals_uncoverable = true;
        verdict.triple_removal_uncoverable = true;
        verdict.through_paths_blocked = true;
        verdict.passes = verdict.cap_all_cycles && verdict.cap_external_ends &&
                         verdict.cap_two_connectors &&
                         verdict.healthy_value_exact;
    }
    verdict.status = verdict.passes ? "passes" : "fails: " + failure;
    return verdict;
}

// ---------------------------------------------------------------------------
// Cover augmentation
// ---------------------------------------------------------------------------

namespace {

// Successor array of a cycle cover of all vertices except `skip`; validates
// the partition and that every traversed arc exists in g.
std::vector<int> cover_successors(const SparseGraph& g, const CycleCover& c,
                                  int skip) {
    std::vector<int> succ(g.n, -1);
    std::vector<char> seen(g.n, 0);
    int covered = 0;
    for (const auto& cyc : c.cycles) {
        if (cyc.size() < 2) {
            throw std::invalid_argument("cycle shorter than two vertices");
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int from = cyc[i];
            const int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= g.n || from == skip || seen[from]) {
                throw std::invalid_argument(
                    "cover does not partition the expected vertices");
            }
            seen[from] = 1;
            ++covered;
            if (!g.has_edge(from, to)) {
                throw std::invalid_argument(
                    "cover uses an arc absent from the graph");
            }
            succ[from] = to;
        }
    }
    if (covered != g.n - 1) {
        throw std::invalid_argument(
            "cover does not partition the expected vertices");
    }
    return succ;
}

CycleCover cycles_from_arcs(const std::set<std::pair<int, int>>& arcs, int n,
                            const std::vector<char>& active) {
    std::vector<int> succ(n, -1);
    std::vector<int> indeg(n, 0);
    for (const auto& [a, b] : arcs) {
        if (succ[a] != -1) {
            throw std::logic_error("augmented cover repeats an out-arc");
        }
        succ[a] = b;
        ++indeg[b];
    }
    for (int v = 0; v < n; ++v) {
        if (!active[v]) {
            if (succ[v] != -1 || indeg[v] != 0) {
                throw std::logic_error("augmented cover touches a removed vertex");
            }
            continue;
        }
        if (succ[v] == -1 || indeg[v] != 1) {
            throw std::logic_error("augmented cover violates degree constraints");
        }
    }
    CycleCover out;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (!active[s] || seen[s]) continue;
        std::vector<int> cyc;
        int v = s;
        while (!seen[v]) {
            seen[v] = 1;
            cyc.push_back(v);
            v = succ[v];
        }
        out.cycles.push_back(std::move(cyc));
    }
    return canonical_cover(out, /*directed=*/true);
}

}  // namespace

AugmentResult augment_cycle_covers(const SparseGraph& g, int u, int v,
                                   const CycleCover& cover_minus_u,
                                   const CycleCover& cover_minus_v,
                                   const std::vector<int>& join_ks) {
    if (!g.directed) {
        throw std::invalid_argument("augmentation needs a directed graph");
    }
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v) {
        throw std::invalid_argument("invalid connector pair");
    }
    for (int k : join_ks) {
        if (k < 0) throw std::invalid_argument("negative join length");
    }
    const std::vector<int> succ_u = cover_successors(g, cover_minus_u, u);
    const std::vector<int> succ_v = cover_successors(g, cover_minus_v, v);
    std::vector<int> pred_u(g.n, -1);
    for (int x = 0; x < g.n; ++x) {
        if (succ_u[x] != -1) pred_u[succ_u[x]] = x;
    }

    AugmentResult result;
    const int step_limit = 2 * g.n + 2;

    // First walk: out of u, alternating a forward arc of the cover without
    // v with a backward arc of the cover without u.
    {
        int cur = u;
        for (int step = 1;; ++step) {
            if (step > step_limit) {
                throw std::logic_error("augmentation walk did not terminate");
            }
            if (step % 2 == 1) {
                const int nxt = succ_v[cur];
                result.P.push_back({cur, nxt});
                cur = nxt;
                if (cur == u) break;
            } else {
                const int nxt = pred_u[cur];
                result.P.push_back({nxt, cur});
                cur = nxt;
                if (cur == v) {
                    result.path_reaches_v = true;
                    break;
                }
            }
        }
    }
    // Second walk: into v, mirrored alternation.
    bool prime_reaches_u = false;
    {
        int cur = v;
        for (int step = 1;; ++step) {
            if (step > step_limit) {
                throw std::logic_error("augmentation walk did not terminate");
            }
            if (step % 2 == 1) {
                const int nxt = pred_u[cur];
                result.P_prime.push_back({nxt, cur});
                cur = nxt;
                if (cur == v) break;
            } else {
                const int nxt = succ_v[cur];
                result.P_prime.push_back({cur, nxt});
                cur = nxt;
                if (cur == u) {
                    prime_reaches_u = true;
                    break;
                }
            }
        }
    }
    if (result.path_reaches_v != prime_reaches_u) {
        throw std::logic_error("the two augmentation walks disagree");
    }

    std::set<std::pair<int, int>> e_minus_u, e_minus_v;
    for (int x = 0; x < g.n; ++x) {
        if (succ_u[x] != -1) e_minus_u.insert({x, succ_u[x]});
        if (succ_v[x] != -1) e_minus_v.insert({x, succ_v[x]});
    }
    auto split_walk = [](const std::vector<std::array<int, 2>>& walk) {
        std::pair<std::set<std::pair<int, int>>, std::set<std::pair<int, int>>>
            out;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const std::pair<int, int> arc{walk[i][0], walk[i][1]};
            if (i % 2 == 0) {
                out.first.insert(arc);
            } else {
                out.second.insert(arc);
            }
        }
        return out;
    };
    // Odd steps of the first walk lie in the cover without v, even steps in
    // the cover without u; the second walk is mirrored.
    auto [p_in_minus_v, p_in_minus_u] = split_walk(result.P);
    auto [pp_in_minus_u, pp_in_minus_v] = split_walk(result.P_prime);

    auto minus = [](std::set<std::pair<int, int>> base,
                    const std::set<std::pair<int, int>>& remove) {
        for (const auto& arc : remove) base.erase(arc);
        return base;
    };
    auto plus = [](std::set<std::pair<int, int>> base,
                   const std::set<std::pair<int, int>>& add) {
        base.insert(add.begin(), add.end());
        return base;
    };

    if (result.path_reaches_v) {
        // Joined case: covers of the graph extended by a path of k fresh
        // vertices in either direction between the special vertices.
        for (int k : join_ks) {
            {
                AugmentOutput out;
                out.graph = add_external_path(g, u, v, k);
                auto arcs = plus(minus(e_minus_v, p_in_minus_v), p_in_minus_u);
                int prev = u;
                for (int i = 0; i < k; ++i) {
                    arcs.insert({prev, g.n + i});
                    prev = g.n + i;
                }
                arcs.insert({prev, v});
                std::vector<char> active(out.graph.n, 1);
                out.cover = cycles_from_arcs(arcs, out.graph.n, active);
                out.label = "G^" + std::to_string(k) + "_u";
                result.outputs.push_back(std::move(out));
            }
            {
                AugmentOutput out;
                out.graph = add_external_path(g, v, u, k);
                auto arcs = plus(minus(e_minus_u, p_in_minus_u), p_in_minus_v);
                int prev = v;
                for (int i = 0; i < k; ++i) {
                    arcs.insert({prev, g.n + i});
                    prev = g.n + i;
                }
                arcs.insert({prev, u});
                std::vector<char> active(out.graph.n, 1);
                out.cover = cycles_from_arcs(arcs, out.graph.n, active);
                out.label = "G^" + std::to_string(k) + "_v";
                result.outputs.push_back(std::move(out));
            }
        }
    } else {
        // Separate case: two covers of the whole graph and two covers of
        // the graph without both special vertices.
        auto push_full = [&](std::set<std::pair<int, int>> arcs,
                             const std::string& label) {
            AugmentOutput out;
            out.graph = g;
            std::vector<char> active(g.n, 1);
            out.cover = cycles_from_arcs(arcs, g.n, active);
            out.label = label;
            result.outputs.push_back(std::move(out));
        };
        push_full(plus(minus(e_minus_u, p_in_minus_u), p_in_minus_v),
                  "G (from P)");
        push_full(plus(minus(e_minus_v, pp_in_minus_v), pp_in_minus_u),
                  "G (from P')");

        auto push_reduced = [&](std::set<std::pair<int, int>> arcs,
                                const std::string& label) {
            std::vector<char> active(g.n, 1);
            active[u] = 0;
            active[v] = 0;
            CycleCover cover = cycles_from_arcs(arcs, g.n, active);
            std::vector<int> remap(g.n, -1);
            int next = 0;
            for (int x = 0; x < g.n; ++x) {
                if (active[x]) remap[x] = next++;
            }
            for (auto& cyc : cover.cycles) {
                for (int& x : cyc) x = remap[x];
            }
            AugmentOutput out;
            out.graph = remove_vertices(g, {u, v});
            out.cover = canonical_cover(cover, /*directed=*/true);
            out.label = label;
            result.outputs.push_back(std::move(out));
        };
        push_reduced(plus(minus(e_minus_v, p_in_minus_v), p_in_minus_u),
                     "G-u-v (from P)");
        push_reduced(plus(minus(e_minus_u, pp_in_minus_u), pp_in_minus_v),
                     "G-u-v (from P')");
    }
    for (const auto& out : result.outputs) {
        for (const auto& cyc : out.cover.cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (!out.graph.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) {
                    throw std::logic_error("augmented cover left the graph");
                }
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Vertex-cover reduction
// ---------------------------------------------------------------------------

namespace {

struct TemplateCovers {
    // Healthy covers of the gadget with two connectors removed, written in
    // original template labels; keyed by the connector that stays.
    CycleCover keep_x, keep_y, keep_z;
};

CycleCover template_cover_without(const GadgetCandidate& gadget,
                                  const LengthSet& L, int drop_a, int drop_b) {
    std::vector<int> remap;
    SparseGraph sub = remove_with_map(gadget.graph, {drop_a, drop_b}, remap);
    auto cover = find_cover(sub, L);
    if (!cover) {
        throw std::invalid_argument(
            "gadget lacks a healthy cover with two connectors removed");
    }
    std::vector<int> back(sub.n, -1);
    for (int v = 0; v < gadget.graph.n; ++v) {
        if (remap[v] >= 0) back[remap[v]] = v;
    }
    for (auto& cyc : cover->cycles) {
        for (int& v : cyc) v = back[v];
    }
    std::vector<std::vector<long long>> w(
        gadget.graph.n, std::vector<long long>(gadget.graph.n, 0));
    for (const auto& e : gadget.graph.edges) {
        w[e.u][e.v] = e.w;
        if (!gadget.graph.directed) w[e.v][e.u] = e.w;
    }
    long long weight = 0;
    for (const auto& cyc : cover->cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            weight += w[cyc[i]][cyc[(i + 1) % cyc.size()]];
        }
    }
    if (weight != gadget.sigma - 2) {
        throw std::invalid_argument(
            "gadget healthy cover weight differs from sigma - 2");
    }
    return *cover;
}

TemplateCovers healthy_template_covers(const GadgetCandidate& gadget,
                                       const LengthSet& L) {
    TemplateCovers covers;
    covers.keep_x = template_cover_without(gadget, L, gadget.y, gadget.z);
    covers.keep_y = template_cover_without(gadget, L, gadget.x, gadget.z);
    covers.keep_z = template_cover_without(gadget, L, gadget.x, gadget.y);
    return covers;
}

// Healthy covers reconstructed from the artifact alone: try cycles of
// length exactly lambda first (legal for every length set whose minimum is
// lambda), then fall back to all lengths from lambda up.
TemplateCovers artifact_healthy_covers(const ReductionArtifact& art) {
    try {
        return healthy_template_covers(
            art.gadget,
            make_length_set({art.lambda}, std::nullopt, art.directed));
    } catch (const std::invalid_argument&) {
        return healthy_template_covers(
            art.gadget, make_length_set({}, art.lambda, art.directed));
    }
}

}  // namespace

ReductionArtifact build_rvc_instance(const SparseGraph& h, const LengthSet& L,
                                     const GadgetCandidate& gadget) {
    if (h.directed) {
        throw std::invalid_argument("source graph must be undirected");
    }
    if (gadget.graph.directed != L.directed) {
        throw std::invalid_argument("gadget and length-set modes disagree");
    }
    const int lambda = L.min_length();
    if (lambda < 3) {
        throw std::invalid_argument(
            "minimum allowed length must be at least three");
    }
    if (h.n < 1 || h.edges.empty()) {
        throw std::invalid_argument("source graph must have at least one edge");
    }
    std::vector<int> degree(h.n, 0);
    for (const auto& e : h.edges) {
        ++degree[e.u];
        ++degree[e.v];
    }
    for (int v = 0; v < h.n; ++v) {
        if (degree[v] != lambda) {
            throw std::invalid_argument(
                "source graph is not regular with the minimum length as degree");
        }
    }
    // The gadget must admit the three healthy covers (weights checked).
    healthy_template_covers(gadget, L);

    ReductionArtifact art;
    art.is_rvc = true;
    art.directed = L.directed;
    art.sigma = gadget.sigma;
    art.lambda = lambda;
    art.m = static_cast<int>(h.edges.size());
    art.n_source = h.n;
    art.source = h;
    art.gadget = gadget;

    for (const auto& e : h.edges) art.source_edges.push_back({e.u, e.v});
    std::sort(art.source_edges.begin(), art.source_edges.end());
    art.incident_edges.assign(h.n, {});
    for (int a = 0; a < art.m; ++a) {
        art.incident_edges[art.source_edges[a][0]].push_back(a);
        art.incident_edges[art.source_edges[a][1]].push_back(a);
    }

    const int block = gadget.graph.n;
    const int n_inst = block * lambda * art.m;
    std::vector<std::vector<long long>> w(n_inst,
                                          std::vector<long long>(n_inst, 0));
    auto set_w = [&](int a, int b, long long value) {
        w[a][b] = value;
        if (!L.directed) w[b][a] = value;
    };

    art.gadget_base.assign(art.m, std::vector<int>(lambda, 0));
    art.conn_x.assign(art.m, std::vector<int>(lambda, 0));
    art.conn_y.assign(art.m, std::vector<int>(lambda, 0));
    art.conn_z.assign(art.m, std::vector<int>(lambda, 0));
    for (int a = 0; a < art.m; ++a) {
        for (int copy = 0; copy < lambda; ++copy) {
            const int base = (copy * art.m + a) * block;
            art.gadget_base[a][copy] = base;
            art.conn_x[a][copy] = base + gadget.x;
            art.conn_y[a][copy] = base + gadget.y;
            art.conn_z[a][copy] = base + gadget.z;
            for (const auto& e : gadget.graph.edges) {
                set_w(base + e.u, base + e.v, e.w);
            }
        }
    }
    // Connector of a source vertex inside a given (edge, copy) block.
    auto connector = [&](int x, int a, int copy) {
        return art.source_edges[a][0] == x ? art.conn_x[a][copy]
                                           : art.conn_y[a][copy];
    };
    art.junctions.assign(h.n, {});
    for (int x = 0; x < h.n; ++x) {
        art.junctions[x].assign(lambda, {});
        const auto& inc = art.incident_edges[x];
        for (int copy = 0; copy < lambda; ++copy) {
            auto& list = art.junctions[x][copy];
            for (std::size_t i = 0; i < inc.size(); ++i) {
                const int from = connector(x, inc[i], copy);
                const int to = connector(x, inc[(i + 1) % inc.size()], copy);
                const bool closing = (i + 1 == inc.size());
                list.push_back({from, to});
                set_w(from, to, closing && copy == 0 ? 0 : 1);
            }
        }
    }
    for (int a = 0; a < art.m; ++a) {
        for (int copy = 0; copy < lambda; ++copy) {
            set_w(art.conn_z[a][copy], art.conn_z[a][(copy + 1) % lambda], 1);
        }
    }
    art.instance = make_complete_graph(L.directed, n_inst, std::move(w));
    return art;
}

namespace {

struct InstanceEdgeIndex {
    // Classification of the constructed cross-block edges.
    std::map<std::pair<int, int>, std::pair<int, int>> junction_of;
    std::set<std::pair<int, int>> z_edges;
    int block = 0;
    bool directed = false;

    std::pair<int, int> key(int a, int b) const {
        return norm_pair(directed, a, b);
    }
    bool same_block(int a, int b) const { return a / block == b / block; }
};

InstanceEdgeIndex index_edges(const ReductionArtifact& art) {
    InstanceEdgeIndex idx;
    idx.block = art.gadget.graph.n;
    idx.directed = art.directed;
    for (int x = 0; x < art.n_source; ++x) {
        for (int copy = 0; copy < art.lambda; ++copy) {
            for (const auto& j : art.junctions[x][copy]) {
                idx.junction_of[idx.key(j[0], j[1])] = {x, copy};
            }
        }
    }
    for (int a = 0; a < art.m; ++a) {
        for (int copy = 0; copy < art.lambda; ++copy) {
            idx.z_edges.insert(idx.key(art.conn_z[a][copy],
                                       art.conn_z[a][(copy + 1) % art.lambda]));
        }
    }
    return idx;
}

std::set<std::pair<int, int>> cover_edge_set(const ReductionArtifact& art,
                                             const CycleCover& c) {
    std::set<std::pair<int, int>> edges;
    for (const auto& cyc : c.cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            edges.insert(
                norm_pair(art.directed, cyc[i], cyc[(i + 1) % cyc.size()]));
        }
    }
    return edges;
}

}  // namespace

ValidationResult is_legal_cover(const ReductionArtifact& artifact,
                                const CycleCover& c) {
    if (!artifact.is_rvc) {
        return {false, "artifact does not describe a vertex-cover reduction"};
    }
    std::vector<char> seen(artifact.instance.n, 0);
    long long covered = 0;
    for (const auto& cyc : c.cycles) {
        if (static_cast<int>(cyc.size()) < (artifact.directed ? 2 : 3)) {
            return {false, "cycle below the minimum length"};
        }
        for (int v : cyc) {
            if (v < 0 || v >= artifact.instance.n || seen[v]) {
                return {false,
                        "cover is not a partition of the instance vertices"};
            }
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != artifact.instance.n) {
        return {false, "cover is not a partition of the instance vertices"};
    }

    const InstanceEdgeIndex idx = index_edges(artifact);
    const auto edges = cover_edge_set(artifact, c);
    for (const auto& e : edges) {
        if (idx.same_block(e.first, e.second)) continue;
        if (idx.junction_of.count(e)) continue;
        if (idx.z_edges.count(e)) continue;
        return {false, "illegal edge between vertices " +
                           std::to_string(e.first) + " and " +
                           std::to_string(e.second)};
    }
    for (int a = 0; a < artifact.m; ++a) {
        int at_x = 0, at_y = 0;
        const int cx = artifact.conn_x[a][0];
        const int cy = artifact.conn_y[a][0];
        for (const auto& e : edges) {
            if (!idx.junction_of.count(e)) continue;
            if (e.first == cx || e.second == cx) ++at_x;
            if (e.first == cy || e.second == cy) ++at_y;
        }
        const int total = at_x + at_y;
        const bool two_same = total == 2 && (at_x == 2 || at_y == 2);
        const bool four = total == 4;
        if (!two_same && !four) {
            return {false,
                    "junction usage at the first-copy gadget of source edge " +
                        std::to_string(a) + " is invalid"};
        }
        const int z0 = artifact.conn_z[a][0];
        const int z_prev = artifact.conn_z[a][artifact.lambda - 1];
        const int z_next = artifact.conn_z[a][1 % artifact.lambda];
        const bool z_in =
            edges.count(norm_pair(artifact.directed, z_prev, z0)) > 0;
        const bool z_out =
            edges.count(norm_pair(artifact.directed, z0, z_next)) > 0;
        if (two_same && !(z_in && z_out)) {
            return {false, "source edge " + std::to_string(a) +
                               " has one covered endpoint but no full "
                               "cross-copy cycle"};
        }
        if (four && (z_in || z_out)) {
            return {false, "source edge " + std::to_string(a) +
                               " has two covered endpoints but keeps a "
                               "cross-copy cycle"};
        }
    }
    return {};
}

CycleCover cover_from_vertex_cover(const ReductionArtifact& artifact,
                                   const std::vector<int>& vertex_cover) {
    if (!artifact.is_rvc) {
        throw std::invalid_argument(
            "artifact does not describe a vertex-cover reduction");
    }
    std::vector<char> in_cover(artifact.n_source, 0);
    for (int v : vertex_cover) {
        if (v < 0 || v >= artifact.n_source) {
            throw std::invalid_argument("vertex-cover entry out of range");
        }
        in_cover[v] = 1;
    }
    for (const auto& e : artifact.source_edges) {
        if (!in_cover[e[0]] && !in_cover[e[1]]) {
            throw std::invalid_argument("not a vertex cover of the source graph");
        }
    }
    TemplateCovers healthy = artifact_healthy_covers(artifact);

    CycleCover out;
    // Junction cycles for covered vertices, in every copy.
    for (int x = 0; x < artifact.n_source; ++x) {
        if (!in_cover[x]) continue;
        for (int copy = 0; copy < artifact.lambda; ++copy) {
            std::vector<int> cyc;
            for (const auto& j : artifact.junctions[x][copy]) {
                cyc.push_back(j[0]);
            }
            out.cycles.push_back(std::move(cyc));
        }
    }
    // Gadget interiors.
    for (int a = 0; a < artifact.m; ++a) {
        const int p = artifact.source_edges[a][0];
        const int q = artifact.source_edges[a][1];
        const CycleCover* tpl = nullptr;
        if (in_cover[p] && in_cover[q]) {
            tpl = &healthy.keep_z;
        } else if (in_cover[p]) {
            tpl = &healthy.keep_y;
        } else {
            tpl = &healthy.keep_x;
        }
        for (int copy = 0; copy < artifact.lambda; ++copy) {
            const int base = artifact.gadget_base[a][copy];
            for (const auto& cyc : tpl->cycles) {
                std::vector<int> shifted;
                for (int v : cyc) shifted.push_back(base + v);
                out.cycles.push_back(std::move(shifted));
            }
        }
    }
    // Cross-copy cycles where the third connector is expelled.
    for (int a = 0; a < artifact.m; ++a) {
        const int p = artifact.source_edges[a][0];
        const int q = artifact.source_edges[a][1];
        if (in_cover[p] && in_cover[q]) continue;
        std::vector<int> cyc;
        for (int copy = 0; copy < artifact.lambda; ++copy) {
            cyc.push_back(artifact.conn_z[a][copy]);
        }
        out.cycles.push_back(std::move(cyc));
    }
    out = canonical_cover(out, artifact.directed);

    ValidationResult legal = is_legal_cover(artifact, out);
    if (!legal) {
        throw std::logic_error("constructed cover is not legal: " +
                               legal.message);
    }
    long long cover_count = 0;
    for (char flag : in_cover) cover_count += flag;
    const long long expected = static_cast<long long>(artifact.sigma) *
                                   artifact.lambda * artifact.m -
                               cover_count;
    if (cover_weight(artifact.instance, out) != expected) {
        throw std::logic_error("reduction weight identity violated");
    }
    return out;
}

std::vector<int> extract_vertex_cover(const ReductionArtifact& artifact,
                                      const CycleCover& legal_cover) {
    ValidationResult legal = is_legal_cover(artifact, legal_cover);
    if (!legal) {
        throw std::domain_error("cover is not legal: " + legal.message);
    }
    const auto edges = cover_edge_set(artifact, legal_cover);
    std::vector<int> result;
    for (int x = 0; x < artifact.n_source; ++x) {
        bool all = true;
        for (const auto& j : artifact.junctions[x][0]) {
            if (!edges.count(norm_pair(artifact.directed, j[0], j[1]))) {
                all = false;
                break;
            }
        }
        if (all) result.push_back(x);
    }
    std::vector<char> in_cover(artifact.n_source, 0);
    for (int v : result) in_cover[v] = 1;
    for (const auto& e : artifact.source_edges) {
        if (!in_cover[e[0]] && !in_cover[e[1]]) {
            throw std::logic_error("legal cover did not induce a vertex cover");
        }
    }
    return result;
}

CycleCover legalize(const ReductionArtifact& artifact, const CycleCover& c) {
    if (!artifact.is_rvc) {
        throw std::invalid_argument(
            "artifact does not describe a vertex-cover reduction");
    }
    const InstanceEdgeIndex idx = index_edges(artifact);
    std::set<std::pair<int, int>> kept;
    for (const auto& cyc : c.cycles) {
        for (int v : cyc) {
            if (v < 0 || v >= artifact.instance.n) {
                throw std::invalid_argument("cover vertex out of range");
            }
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const auto e =
                norm_pair(artifact.directed, cyc[i], cyc[(i + 1) % cyc.size()]);
            if (idx.junction_of.count(e)) kept.insert(e);
        }
    }
    std::vector<char> in_cover(artifact.n_source, 0);
    for (int x = 0; x < artifact.n_source; ++x) {
        for (int copy = 0; copy < artifact.lambda && !in_cover[x]; ++copy) {
            for (const auto& j : artifact.junctions[x][copy]) {
                if (kept.count(norm_pair(artifact.directed, j[0], j[1]))) {
                    in_cover[x] = 1;
                    break;
                }
            }
        }
    }
    for (const auto& e : artifact.source_edges) {
        if (!in_cover[e[0]] && !in_cover[e[1]]) {
            in_cover[std::min(e[0], e[1])] = 1;
        }
    }
    std::vector<int> vc;
    for (int x = 0; x < artifact.n_source; ++x) {
        if (in_cover[x]) vc.push_back(x);
    }
    return cover_from_vertex_cover(artifact, vc);
}

// ---------------------------------------------------------------------------
// Exact-cover reduction
// ---------------------------------------------------------------------------

ReductionArtifact build_xlc_instance(int universe,
                                     const std::vector<std::vector<int>>& sets,
                                     const ClampCandidate& clamp,
                                     const LengthSet& L) {
    if (!L.directed || !clamp.graph.directed) {
        throw std::invalid_argument("exact-cover reduction needs directed input");
    }
    if (universe < 0) {
        throw std::invalid_argument("negative universe size");
    }
    if (sets.empty()) {
        throw std::invalid_argument("need at least one set");
    }
    const int lambda = static_cast<int>(sets.front().size());
    if (lambda < 3 || !contains(L, lambda)) {
        throw std::invalid_argument(
            "set size must be an allowed length of at least three");
    }
    ReductionArtifact art;
    art.is_rvc = false;
    art.directed = true;
    art.lambda = lambda;
    art.n_source = universe;
    art.clamp = clamp;
    for (const auto& s : sets) {
        if (static_cast<int>(s.size()) != lambda) {
            throw std::invalid_argument("sets must share one size");
        }
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 0 || sorted[i] >= universe) {
                throw std::invalid_argument("set element out of range");
            }
            if (i > 0 && sorted[i] == sorted[i - 1]) {
                throw std::invalid_argument("duplicate element in a set");
            }
        }
        art.sets.push_back(std::move(sorted));
    }

    const int set_count = static_cast<int>(art.sets.size());
    const int clamp_inner = clamp.graph.n - 2;
    art.element_vertex.resize(universe);
    for (int e = 0; e < universe; ++e) art.element_vertex[e] = e;
    art.set_cycle.assign(set_count, {});
    art.clamp_interior.assign(set_count, {});
    int next = universe;
    for (int s = 0; s < set_count; ++s) {
        for (int eta = 0; eta < lambda; ++eta) {
            art.set_cycle[s].push_back(next++);
        }
    }
    for (int s = 0; s < set_count; ++s) {
        for (int eta = 0; eta < lambda; ++eta) {
            art.clamp_interior[s].push_back(next);
            next += clamp_inner;
        }
    }

    std::vector<SparseGraph::Edge> edges;
    for (int s = 0; s < set_count; ++s) {
        for (int eta = 0; eta < lambda; ++eta) {
            edges.push_back({art.set_cycle[s][eta],
                             art.set_cycle[s][(eta + 1) % lambda], 1});
        }
    }
    for (int s = 0; s < set_count; ++s) {
        for (int eta = 0; eta < lambda; ++eta) {
            // Translate the clamp: first connector onto the set-cycle
            // vertex, second onto the element vertex, interiors fresh.
            std::vector<int> translate(clamp.graph.n, -1);
            translate[clamp.u] = art.set_cycle[s][eta];
            translate[clamp.v] = art.element_vertex[art.sets[s][eta]];
            int inner = art.clamp_interior[s][eta];
            for (int t = 0; t < clamp.graph.n; ++t) {
                if (t != clamp.u && t != clamp.v) translate[t] = inner++;
            }
            for (const auto& e : clamp.graph.edges) {
                edges.push_back({translate[e.u], translate[e.v], 1});
            }
        }
    }
    art.xlc_graph = make_sparse_graph(true, next, std::move(edges));
    return art;
}

}  // namespace cyclecover
