#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matching_internal.hpp"

namespace cyclecover::detail {

namespace {

// Dense maximum-weight matching (not necessarily perfect) on a general
// graph, primal-dual with blossom shrinking, O(n^3). Classic formulation:
// vertices are 1..n, blossom nodes occupy n+1..n_x, st[] maps nodes to the
// surface blossom containing them, lab[] are dual values, and slack[x]
// remembers the outside vertex with the tightest edge into root x. A weight
// of zero means "no edge".
class Blossom {
public:
    explicit Blossom(const std::vector<std::vector<long long>>& w)
        : n_(static_cast<int>(w.size())), n_x_(n_), cap_(2 * n_ + 2) {
        g_.assign(cap_, std::vector<Edge>(cap_));
        for (int u = 0; u < cap_; ++u) {
            for (int v = 0; v < cap_; ++v) g_[u][v] = Edge{u, v, 0};
        }
        for (int u = 1; u <= n_; ++u) {
            for (int v = 1; v <= n_; ++v) g_[u][v].w = w[u - 1][v - 1];
        }
        lab_.assign(cap_, 0);
        match_.assign(cap_, 0);
        slack_.assign(cap_, 0);
        st_.assign(cap_, 0);
        pa_.assign(cap_, 0);
        s_.assign(cap_, -1);
        vis_.assign(cap_, 0);
        flower_.assign(cap_, {});
        flower_from_.assign(cap_, std::vector<int>(n_ + 1, 0));
    }

    std::pair<std::vector<int>, long long> solve() {
        std::fill(match_.begin(), match_.end(), 0);
        n_x_ = n_;
        for (int u = 0; u <= n_; ++u) {
            st_[u] = u;
            flower_[u].clear();
        }
        long long w_max = 0;
        for (int u = 1; u <= n_; ++u) {
            for (int v = 1; v <= n_; ++v) {
                flower_from_[u][v] = (u == v ? u : 0);
                w_max = std::max(w_max, g_[u][v].w);
            }
        }
        for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
        while (phase()) {
        }
        long long total = 0;
        std::vector<int> mate(n_, -1);
        for (int u = 1; u <= n_; ++u) {
            if (match_[u] != 0) {
                mate[u - 1] = match_[u] - 1;
                if (match_[u] < u) total += g_[u][match_[u]].w;
            }
        }
        return {mate, total};
    }

private:
    struct Edge {
        int u = 0, v = 0;
        long long w = 0;
    };

    long long delta(const Edge& e) const {
        return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2;
    }

    void update_slack(int u, int x) {
        if (slack_[x] == 0 || delta(g_[u][x]) < delta(g_[slack_[x]][x])) slack_[x] = u;
    }

    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u) {
            if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
        }
    }

    void push_queue(int x) {
        if (x <= n_) {
            q_.push_back(x);
        } else {
            for (int sub : flower_[x]) push_queue(sub);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_) {
            for (int sub : flower_[x]) set_st(sub, b);
        }
    }

    int get_pr(int b, int xr) {
        int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                                  flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return static_cast<int>(flower_[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = g_[u][v].v;
        if (u > n_) {
            Edge e = g_[u][v];
            int xr = flower_from_[u][e.u];
            int pr = get_pr(u, xr);
            for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
            set_match(xr, v);
            std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
        }
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[match_[u]];
            set_match(u, v);
            if (xnv == 0) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++timer_; u != 0 || v != 0; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[u] == timer_) return u;
            vis_[u] = timer_;
            u = st_[match_[u]];
            if (u != 0) u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b] != 0) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            push_queue(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            push_queue(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) {
            g_[b][x].w = 0;
            g_[x][b].w = 0;
        }
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x) {
                if (g_[b][x].w == 0 || delta(g_[xs][x]) < delta(g_[b][x])) {
                    g_[b][x] = g_[xs][x];
                    g_[x][b] = g_[x][xs];
                }
            }
            for (int x = 1; x <= n_; ++x) {
                if (flower_from_[xs][x] != 0) flower_from_[b][x] = xs;
            }
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        for (int sub : flower_[b]) set_st(sub, sub);
        int xr = flower_from_[b][g_[b][pa_[b]].u];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower_[b][i];
            int xns = flower_[b][i + 1];
            pa_[xs] = g_[xns][xs].u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            push_queue(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (std::size_t i = pr + 1; i < flower_[b].size(); ++i) {
            int xs = flower_[b][i];
            s_[xs] = -1;
            set_slack(xs);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const Edge& e) {
        int u = st_[e.u];
        int v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            int nu = st_[match_[v]];
            slack_[v] = 0;
            slack_[nu] = 0;
            s_[nu] = 0;
            push_queue(nu);
        } else if (s_[v] == 0) {
            int lca = get_lca(u, v);
            if (lca == 0) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool phase() {
        std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x) {
            if (st_[x] == x && match_[x] == 0) {
                pa_[x] = 0;
                s_[x] = 0;
                push_queue(x);
            }
        }
        if (q_.empty()) return false;
        for (;;) {
            while (!q_.empty()) {
                int u = q_.front();
                q_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v) {
                    if (g_[u][v].w > 0 && st_[u] != st_[v]) {
                        if (delta(g_[u][v]) == 0) {
                            if (on_found_edge(g_[u][v])) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
                }
            }
            long long d = std::numeric_limits<long long>::max() / 4;
            for (int b = n_ + 1; b <= n_x_; ++b) {
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            }
            for (int x = 1; x <= n_x_; ++x) {
                if (st_[x] == x && slack_[x] != 0) {
                    if (s_[x] == -1) {
                        d = std::min(d, delta(g_[slack_[x]][x]));
                    } else if (s_[x] == 0) {
                        d = std::min(d, delta(g_[slack_[x]][x]) / 2);
                    }
                }
            }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d) return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b) {
                if (st_[b] == b) {
                    if (s_[b] == 0) {
                        lab_[b] += d * 2;
                    } else if (s_[b] == 1) {
                        lab_[b] -= d * 2;
                    }
                }
            }
            q_.clear();
            for (int x = 1; x <= n_x_; ++x) {
                if (st_[x] == x && slack_[x] != 0 && st_[slack_[x]] != x &&
                    delta(g_[slack_[x]][x]) == 0) {
                    if (on_found_edge(g_[slack_[x]][x])) return true;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b) {
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
            }
        }
    }

    int n_;
    int n_x_;
    int cap_;
    int timer_ = 0;
    std::vector<std::vector<Edge>> g_;
    std::vector<long long> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> q_;
};

}  // namespace

std::pair<std::vector<int>, long long> blossom_max_weight_matching(
    const std::vector<std::vector<long long>>& w) {
    if (w.empty()) return {{}, 0};
    Blossom solver(w);
    return solver.solve();
}

}  // namespace cyclecover::detail
