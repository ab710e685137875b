#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cyclecover/matching.hpp"
#include "matching_internal.hpp"

namespace cyclecover {

namespace {

struct DensePerfect {
    std::vector<int> mate;
    long long weight = 0;  // sum of original weights over matched pairs
};

// Maximum-weight perfect matching on an undirected graph given as a dense
// matrix of original weights with a presence mask. Realized by shifting
// every present edge up by a constant large enough that cardinality
// dominates weight, then running the maximum-weight matching kernel; if the
// result leaves a vertex unmatched no perfect matching exists.
DensePerfect dense_perfect_matching(int n,
                                    const std::vector<std::vector<long long>>& w,
                                    const std::vector<std::vector<char>>& present) {
    DensePerfect out;
    out.mate.assign(n, -1);
    if (n == 0) return out;
    if (n % 2 == 1) throw std::domain_error("no perfect matching");
    long long max_w = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (present[u][v]) max_w = std::max(max_w, w[u][v]);
        }
    }
    const long long half = n / 2;
    if (max_w > 0 &&
        max_w > std::numeric_limits<long long>::max() / (8 * (half + 2) * (n + 2))) {
        throw std::overflow_error("weights too large for matching solver");
    }
    const long long shift = half * max_w + 1;
    std::vector<std::vector<long long>> shifted(n, std::vector<long long>(n, 0));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && present[u][v]) shifted[u][v] = w[u][v] + shift;
        }
    }
    auto [mate, total_shifted] = detail::blossom_max_weight_matching(shifted);
    (void)total_shifted;
    for (int u = 0; u < n; ++u) {
        if (mate[u] < 0 || !present[u][mate[u]]) {
            throw std::domain_error("no perfect matching");
        }
    }
    out.mate = mate;
    for (int u = 0; u < n; ++u) {
        if (mate[u] > u) out.weight += w[u][mate[u]];
    }
    return out;
}

}  // namespace

Matching max_weight_perfect_matching(const SparseGraph& g) {
    if (g.directed) {
        throw std::invalid_argument("perfect matching requires an undirected graph");
    }
    if (g.n % 2 == 1) {
        throw std::invalid_argument("perfect matching requires an even vertex count");
    }
    std::vector<std::vector<long long>> w(g.n, std::vector<long long>(g.n, 0));
    std::vector<std::vector<char>> present(g.n, std::vector<char>(g.n, 0));
    for (const auto& e : g.edges) {
        if (e.w < 0) throw std::invalid_argument("negative edge weight");
        w[e.u][e.v] = e.w;
        w[e.v][e.u] = e.w;
        present[e.u][e.v] = 1;
        present[e.v][e.u] = 1;
    }
    DensePerfect pm = dense_perfect_matching(g.n, w, present);
    Matching m;
    m.weight = pm.weight;
    for (int u = 0; u < g.n; ++u) {
        if (pm.mate[u] > u) m.edges.push_back({u, pm.mate[u]});
    }
    return m;
}

CycleCover max_weight_two_factor(const WeightedCompleteGraph& g) {
    if (g.directed) {
        throw std::invalid_argument("two-factor requires an undirected graph");
    }
    if (g.n < 3) {
        throw std::invalid_argument("two-factor requires at least three vertices");
    }
    const int n = g.n;
    // Auxiliary graph: two copies of each vertex, and per original edge two
    // nodes joined by a zero-weight bridge; each edge node sees both copies
    // of its endpoint at the original edge weight. A maximum-weight perfect
    // matching leaves exactly the chosen two-factor's edges with their
    // bridges unmatched, and its weight is twice the two-factor's weight.
    std::vector<std::array<int, 2>> edge_list;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edge_list.push_back({u, v});
    }
    const int m = static_cast<int>(edge_list.size());
    const int aux_n = 2 * n + 2 * m;
    auto vertex_copy = [&](int u, int side) { return 2 * u + side; };
    auto edge_node = [&](int k, int side) { return 2 * n + 2 * k + side; };
    std::vector<std::vector<long long>> w(aux_n, std::vector<long long>(aux_n, 0));
    std::vector<std::vector<char>> present(aux_n, std::vector<char>(aux_n, 0));
    auto add = [&](int a, int b, long long weight) {
        w[a][b] = weight;
        w[b][a] = weight;
        present[a][b] = 1;
        present[b][a] = 1;
    };
    for (int k = 0; k < m; ++k) {
        const int u = edge_list[k][0];
        const int v = edge_list[k][1];
        const long long weight = g.weight(u, v);
        add(edge_node(k, 0), edge_node(k, 1), 0);
        add(vertex_copy(u, 0), edge_node(k, 0), weight);
        add(vertex_copy(u, 1), edge_node(k, 0), weight);
        add(vertex_copy(v, 0), edge_node(k, 1), weight);
        add(vertex_copy(v, 1), edge_node(k, 1), weight);
    }
    DensePerfect pm = dense_perfect_matching(aux_n, w, present);
    // Selected original edges are those whose bridge is not matched.
    std::vector<std::vector<int>> adjacency(n);
    long long factor_weight = 0;
    for (int k = 0; k < m; ++k) {
        if (pm.mate[edge_node(k, 0)] != edge_node(k, 1)) {
            adjacency[edge_list[k][0]].push_back(edge_list[k][1]);
            adjacency[edge_list[k][1]].push_back(edge_list[k][0]);
            factor_weight += g.weight(edge_list[k][0], edge_list[k][1]);
        }
    }
    if (pm.weight != 2 * factor_weight) {
        throw std::logic_error("two-factor weight accounting diverged");
    }
    for (int u = 0; u < n; ++u) {
        if (adjacency[u].size() != 2) {
            throw std::logic_error("two-factor left a vertex without degree two");
        }
    }
    CycleCover cover;
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        int prev = -1;
        int cur = start;
        while (!seen[cur]) {
            seen[cur] = 1;
            cyc.push_back(cur);
            int nxt = (adjacency[cur][0] != prev) ? adjacency[cur][0] : adjacency[cur][1];
            prev = cur;
            cur = nxt;
        }
        if (cyc.size() < 3) {
            throw std::logic_error("two-factor produced a short cycle");
        }
        cover.cycles.push_back(std::move(cyc));
    }
    return canonical_cover(cover, /*directed=*/false);
}

namespace {

struct SymmetrizedView {
    std::vector<std::vector<long long>> w;  // symmetric weights, diagonal 0
    // orientation[u][v] = true when the pair {u,v} should be recorded as
    // (u, v); defined for u < v.
    std::vector<std::vector<char>> forward;
};

SymmetrizedView symmetrize(const WeightedCompleteGraph& g) {
    SymmetrizedView view;
    view.w.assign(g.n, std::vector<long long>(g.n, 0));
    view.forward.assign(g.n, std::vector<char>(g.n, 1));
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            long long uv = g.weight(u, v);
            long long vu = g.directed ? g.weight(v, u) : uv;
            view.w[u][v] = std::max(uv, vu);
            view.w[v][u] = view.w[u][v];
            view.forward[u][v] = (uv >= vu) ? 1 : 0;
        }
    }
    return view;
}

// Maximum weight over matchings with exactly `d` edges, on the symmetric
// view; realized by adding n - 2d dummy vertices adjacent to every real
// vertex at weight zero (and to nothing else), which forces exactly d real
// edges in any perfect matching of the padded graph.
Matching exact_cardinality_matching(const WeightedCompleteGraph& g,
                                    const SymmetrizedView& view, int d) {
    Matching m;
    if (d == 0) return m;
    const int n = g.n;
    const int dummies = n - 2 * d;
    const int total = n + dummies;
    std::vector<std::vector<long long>> w(total, std::vector<long long>(total, 0));
    std::vector<std::vector<char>> present(total, std::vector<char>(total, 0));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            w[u][v] = view.w[u][v];
            w[v][u] = view.w[u][v];
            present[u][v] = 1;
            present[v][u] = 1;
        }
    }
    for (int dummy = n; dummy < total; ++dummy) {
        for (int u = 0; u < n; ++u) {
            present[dummy][u] = 1;
            present[u][dummy] = 1;
        }
    }
    DensePerfect pm = dense_perfect_matching(total, w, present);
    for (int u = 0; u < n; ++u) {
        int v = pm.mate[u];
        if (v < n && v > u) {
            if (view.forward[u][v]) {
                m.edges.push_back({u, v});
            } else {
                m.edges.push_back({v, u});
            }
            m.weight += view.w[u][v];
        }
    }
    if (static_cast<int>(m.edges.size()) != d) {
        throw std::logic_error("cardinality-constrained matching size diverged");
    }
    return m;
}

}  // namespace

std::vector<long long> matching_weight_by_cardinality(const WeightedCompleteGraph& g,
                                                      int cap) {
    if (cap < 0 || cap > g.n / 2) {
        throw std::invalid_argument("matching cardinality cap out of range");
    }
    SymmetrizedView view = symmetrize(g);
    std::vector<long long> weights;
    for (int d = 0; d <= cap; ++d) {
        weights.push_back(exact_cardinality_matching(g, view, d).weight);
    }
    return weights;
}

Matching max_weight_matching_capped(const WeightedCompleteGraph& g, int cap) {
    if (cap < 0 || cap > g.n / 2) {
        throw std::invalid_argument("matching cardinality cap out of range");
    }
    SymmetrizedView view = symmetrize(g);
    int best_d = 0;
    long long best_w = 0;
    for (int d = 0; d <= cap; ++d) {
        long long wd = exact_cardinality_matching(g, view, d).weight;
        if (wd > best_w) {
            best_w = wd;
            best_d = d;
        }
    }
    return exact_cardinality_matching(g, view, best_d);
}

}  // namespace cyclecover
