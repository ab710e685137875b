#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclecover/cover_search.hpp"

namespace cyclecover {

namespace {

// Backtracking search over covers of a sparse graph. Open chains are
// tracked through their two endpoints: partner[e] is the opposite endpoint
// of the chain ending at e, plen[e] its vertex count. Directed search picks
// the out-arc of one chain tail at a time (fewest-choices-first), undirected
// search saturates the smallest vertex of degree < 2.
class CoverSearch {
public:
    CoverSearch(const SparseGraph& g, const LengthSet& L, bool maximize)
        : g_(g), L_(L), maximize_(maximize), n_(g.n) {
        max_len_ = L.max_length().has_value() ? *L.max_length()
                                              : std::numeric_limits<int>::max();
        partner_.resize(n_);
        plen_.assign(n_, 1);
        for (int v = 0; v < n_; ++v) partner_[v] = v;
        if (g.directed) {
            out_.assign(n_, {});
            succ_.assign(n_, -1);
            has_in_.assign(n_, 0);
            for (const auto& e : g.edges) out_[e.u].push_back(e);
            for (auto& list : out_) {
                std::sort(list.begin(), list.end(),
                          [](const SparseGraph::Edge& a, const SparseGraph::Edge& b) {
                              return a.v < b.v;
                          });
            }
        } else {
            adj_.assign(n_, {});
            deg_.assign(n_, 0);
            for (const auto& e : g.edges) {
                adj_[e.u].push_back(e);
                adj_[e.v].push_back(SparseGraph::Edge{e.v, e.u, e.w});
            }
            for (auto& list : adj_) {
                std::sort(list.begin(), list.end(),
                          [](const SparseGraph::Edge& a, const SparseGraph::Edge& b) {
                              return a.v < b.v;
                          });
            }
            used_.assign(n_, std::vector<char>(n_, 0));
        }
    }

    std::optional<std::pair<CycleCover, long long>> run() {
        if (n_ == 0) {
            return std::make_pair(CycleCover{}, 0LL);
        }
        if (g_.directed) {
            search_directed(0);
        } else {
            search_undirected();
        }
        if (!best_) return std::nullopt;
        return best_;
    }

private:
    bool complete_directed() const {
        for (int v = 0; v < n_; ++v) {
            if (succ_[v] < 0) return false;
        }
        return true;
    }

    void record() {
        CycleCover cover;
        if (g_.directed) {
            std::vector<char> seen(n_, 0);
            for (int s = 0; s < n_; ++s) {
                if (seen[s]) continue;
                std::vector<int> cyc;
                int v = s;
                while (!seen[v]) {
                    seen[v] = 1;
                    cyc.push_back(v);
                    v = succ_[v];
                }
                cover.cycles.push_back(std::move(cyc));
            }
        } else {
            std::vector<char> seen(n_, 0);
            for (int s = 0; s < n_; ++s) {
                if (seen[s]) continue;
                std::vector<int> cyc;
                int prev = -1;
                int v = s;
                while (!seen[v]) {
                    seen[v] = 1;
                    cyc.push_back(v);
                    int nxt = -1;
                    for (const auto& e : adj_[v]) {
                        if (used_[v][e.v] && e.v != prev) {
                            nxt = e.v;
                            break;
                        }
                    }
                    if (nxt < 0) {
                        // Both structure edges lead back to prev: a 2-chain
                        // cannot occur in a finished cover.
                        break;
                    }
                    prev = v;
                    v = nxt;
                }
                cover.cycles.push_back(std::move(cyc));
            }
        }
        if (!best_ || current_weight_ > best_->second) {
            best_ = std::make_pair(canonical_cover(cover, g_.directed),
                                   current_weight_);
        }
    }

    bool done() const { return best_.has_value() && !maximize_; }

    // --- directed ---

    bool arc_ok(int u, const SparseGraph::Edge& e) const {
        if (has_in_[e.v]) return false;
        if (partner_[u] == e.v) {
            return contains(L_, plen_[u]);
        }
        long long joined = static_cast<long long>(plen_[u]) + plen_[e.v];
        return joined <= max_len_;
    }

    void search_directed(int assigned) {
        if (done()) return;
        if (assigned == n_) {
            record();
            return;
        }
        // Fewest-choices vertex among those without an out-arc yet.
        int pick = -1;
        int pick_count = std::numeric_limits<int>::max();
        for (int v = 0; v < n_; ++v) {
            if (succ_[v] >= 0) continue;
            int count = 0;
            for (const auto& e : out_[v]) {
                if (arc_ok(v, e)) ++count;
            }
            if (count < pick_count) {
                pick_count = count;
                pick = v;
                if (count == 0) break;
            }
        }
        if (pick_count == 0) return;
        for (const auto& e : out_[pick]) {
            if (!arc_ok(pick, e)) continue;
            apply_directed(pick, e);
            search_directed(assigned + 1);
            undo_directed(pick, e);
            if (done()) return;
        }
    }

    struct Undo {
        int a, pa;
        int b, pb;
        int la, lb;
    };

    Undo save_endpoints(int u, int w) const {
        return Undo{u, partner_[u], w, partner_[w], plen_[u], plen_[w]};
    }

    void restore(const Undo& s) {
        partner_[s.a] = s.pa;
        partner_[s.b] = s.pb;
        plen_[s.a] = s.la;
        plen_[s.b] = s.lb;
        partner_[s.pa] = s.a;
        partner_[s.pb] = s.b;
        plen_[s.pa] = s.la;
        plen_[s.pb] = s.lb;
    }

    std::vector<Undo> trail_;

    void join_chains(int u, int w) {
        trail_.push_back(save_endpoints(u, w));
        if (partner_[u] == w) return;  // closing: chain vanishes
        int hu = partner_[u];
        int tw = partner_[w];
        int joined = plen_[u] + plen_[w];
        partner_[hu] = tw;
        partner_[tw] = hu;
        plen_[hu] = joined;
        plen_[tw] = joined;
    }

    void unjoin_chains() {
        restore(trail_.back());
        trail_.pop_back();
    }

    void apply_directed(int u, const SparseGraph::Edge& e) {
        succ_[u] = e.v;
        has_in_[e.v] = 1;
        current_weight_ += e.w;
        join_chains(u, e.v);
    }

    void undo_directed(int u, const SparseGraph::Edge& e) {
        unjoin_chains();
        succ_[u] = -1;
        has_in_[e.v] = 0;
        current_weight_ -= e.w;
    }

    // --- undirected ---

    bool edge_ok(int v, const SparseGraph::Edge& e) const {
        if (deg_[e.v] >= 2 || e.v == v) return false;
        if (used_[v][e.v]) return false;
        if (partner_[v] == e.v) {
            return plen_[v] >= 3 && contains(L_, plen_[v]);
        }
        long long joined = static_cast<long long>(plen_[v]) + plen_[e.v];
        return joined <= max_len_;
    }

    void search_undirected() {
        if (done()) return;
        int pick = -1;
        for (int v = 0; v < n_; ++v) {
            if (deg_[v] < 2) {
                pick = v;
                break;
            }
        }
        if (pick < 0) {
            record();
            return;
        }
        for (const auto& e : adj_[pick]) {
            if (!edge_ok(pick, e)) continue;
            apply_undirected(pick, e);
            search_undirected();
            undo_undirected(pick, e);
            if (done()) return;
        }
    }

    void apply_undirected(int v, const SparseGraph::Edge& e) {
        ++deg_[v];
        ++deg_[e.v];
        used_[v][e.v] = 1;
        used_[e.v][v] = 1;
        current_weight_ += e.w;
        join_chains(v, e.v);
    }

    void undo_undirected(int v, const SparseGraph::Edge& e) {
        unjoin_chains();
        --deg_[v];
        --deg_[e.v];
        used_[v][e.v] = 0;
        used_[e.v][v] = 0;
        current_weight_ -= e.w;
    }

    const SparseGraph& g_;
    const LengthSet& L_;
    bool maximize_;
    int n_;
    long long max_len_ = 0;
    long long current_weight_ = 0;
    std::optional<std::pair<CycleCover, long long>> best_;

    std::vector<int> partner_;
    std::vector<int> plen_;

    std::vector<std::vector<SparseGraph::Edge>> out_;
    std::vector<int> succ_;
    std::vector<char> has_in_;

    std::vector<std::vector<SparseGraph::Edge>> adj_;
    std::vector<int> deg_;
    std::vector<std::vector<char>> used_;
};

void check_mode(const SparseGraph& g, const LengthSet& L) {
    if (g.directed != L.directed) {
        throw std::invalid_argument("graph and length-set modes disagree");
    }
}

}  // namespace

std::optional<CycleCover> find_cover(const SparseGraph& g, const LengthSet& L) {
    check_mode(g, L);
    CoverSearch search(g, L, /*maximize=*/false);
    auto result = search.run();
    if (!result) return std::nullopt;
    return result->first;
}

bool has_cover(const SparseGraph& g, const LengthSet& L) {
    return find_cover(g, L).has_value();
}

std::optional<std::pair<CycleCover, long long>> find_max_weight_cover(
    const SparseGraph& g, const LengthSet& L) {
    check_mode(g, L);
    CoverSearch search(g, L, /*maximize=*/true);
    return search.run();
}

SparseGraph remove_vertices(const SparseGraph& g, std::vector<int> drop) {
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    for (int v : drop) {
        if (v < 0 || v >= g.n) {
            throw std::invalid_argument("vertex to remove out of range");
        }
    }
    std::vector<int> remap(g.n, -1);
    int next = 0;
    std::size_t di = 0;
    for (int v = 0; v < g.n; ++v) {
        if (di < drop.size() && drop[di] == v) {
            ++di;
            continue;
        }
        remap[v] = next++;
    }
    std::vector<SparseGraph::Edge> edges;
    for (const auto& e : g.edges) {
        if (remap[e.u] < 0 || remap[e.v] < 0) continue;
        edges.push_back(SparseGraph::Edge{remap[e.u], remap[e.v], e.w});
    }
    return make_sparse_graph(g.directed, next, std::move(edges));
}

SparseGraph add_external_path(const SparseGraph& g, int from, int to, int k) {
    if (from < 0 || from >= g.n || to < 0 || to >= g.n || from == to) {
        throw std::invalid_argument("invalid path endpoints");
    }
    if (k < 0) {
        throw std::invalid_argument("negative path length");
    }
    std::vector<SparseGraph::Edge> edges = g.edges;
    if (k == 0) {
        if (!g.has_edge(from, to)) {
            edges.push_back(SparseGraph::Edge{from, to, 1});
        }
        return make_sparse_graph(g.directed, g.n, std::move(edges));
    }
    int prev = from;
    for (int i = 0; i < k; ++i) {
        edges.push_back(SparseGraph::Edge{prev, g.n + i, 1});
        prev = g.n + i;
    }
    edges.push_back(SparseGraph::Edge{prev, to, 1});
    return make_sparse_graph(g.directed, g.n + k, std::move(edges));
}

}  // namespace cyclecover
