#include "cyclecover/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyclecover {

WeightedCompleteGraph make_complete_graph(bool directed, int n,
                                          std::vector<std::vector<long long>> w) {
    if (n < (directed ? 2 : 3))
        throw std::invalid_argument("complete graph: need at least " +
                                    std::to_string(directed ? 2 : 3) + " vertices");
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("complete graph: weight matrix must be n x n");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(w[i].size()) != n)
            throw std::invalid_argument("complete graph: weight matrix must be n x n");
        if (w[i][i] != 0)
            throw std::invalid_argument("complete graph: diagonal must be zero");
        for (int j = 0; j < n; ++j) {
            if (w[i][j] < 0)
                throw std::invalid_argument("complete graph: negative weight");
            if (!directed && w[i][j] != w[j][i])
                throw std::invalid_argument(
                    "complete graph: undirected weights must be symmetric");
        }
    }
    WeightedCompleteGraph g;
    g.directed = directed;
    g.n = n;
    g.w = std::move(w);
    return g;
}

WeightedCompleteGraph make_zero_graph(bool directed, int n) {
    return make_complete_graph(
        directed, n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
}

bool SparseGraph::has_edge(int u, int v) const {
    for (const auto& e : edges) {
        if (e.u == u && e.v == v) return true;
        if (!directed && e.u == v && e.v == u) return true;
    }
    return false;
}

SparseGraph make_sparse_graph(bool directed, int n,
                              std::vector<SparseGraph::Edge> edges) {
    if (n < 0) throw std::invalid_argument("sparse graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("sparse graph: endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("sparse graph: self-loop");
        if (e.w < 0) throw std::invalid_argument("sparse graph: negative weight");
        if (!directed && e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert({e.u, e.v}).second)
            throw std::invalid_argument("sparse graph: duplicate edge");
    }
    SparseGraph g;
    g.directed = directed;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

CycleCover canonical_cover(const CycleCover& c, bool directed) {
    CycleCover out;
    for (const auto& cyc : c.cycles) {
        if (cyc.empty()) continue;
        auto mn = std::min_element(cyc.begin(), cyc.end());
        std::vector<int> rot(cyc.size());
        const size_t start = mn - cyc.begin();
        for (size_t i = 0; i < cyc.size(); ++i)
            rot[i] = cyc[(start + i) % cyc.size()];
        if (!directed && rot.size() >= 3 && rot[1] > rot.back())
            std::reverse(rot.begin() + 1, rot.end());
        out.cycles.push_back(std::move(rot));
    }
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return out;
}

ValidationResult validate_cover(const CycleCover& c, int n, bool directed,
                                const LengthSet& L) {
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& cyc : c.cycles) {
        const int len = static_cast<int>(cyc.size());
        if (len < (directed ? 2 : 3))
            return {false, "cycle of length " + std::to_string(len) +
                               " below the " + (directed ? std::string("directed") : std::string("undirected")) +
                               " minimum"};
        if (!L.contains(len))
            return {false, "cycle length " + std::to_string(len) + " not allowed"};
        for (int v : cyc) {
            if (v < 0 || v >= n)
                return {false, "vertex " + std::to_string(v) + " out of range"};
            if (seen[v])
                return {false, "vertex " + std::to_string(v) + " appears twice"};
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n)
        return {false, "covers " + std::to_string(covered) + " of " +
                           std::to_string(n) + " vertices"};
    return {true, ""};
}

long long cover_weight(const WeightedCompleteGraph& g, const CycleCover& c) {
    std::vector<char> seen(g.n, 0);
    int covered = 0;
    long long total = 0;
    for (const auto& cyc : c.cycles) {
        const int len = static_cast<int>(cyc.size());
        if (len < (g.directed ? 2 : 3))
            throw std::invalid_argument("cover weight: cycle too short");
        for (int v : cyc) {
            if (v < 0 || v >= g.n)
                throw std::invalid_argument("cover weight: vertex out of range");
            if (seen[v])
                throw std::invalid_argument("cover weight: vertex appears twice");
            seen[v] = 1;
            ++covered;
        }
        for (int i = 0; i < len; ++i) {
            const int u = cyc[i], v = cyc[(i + 1) % len];
            if (__builtin_add_overflow(total, g.w[u][v], &total))
                throw std::overflow_error("cover weight: 64-bit overflow");
        }
    }
    if (covered != g.n)
        throw std::invalid_argument("cover weight: not a partition of the vertices");
    return total;
}

}  // namespace cyclecover
