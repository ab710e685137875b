#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "cyclecover/approx.hpp"
#include "cyclecover/oracle.hpp"

namespace cyclecover {

bool fraction_le(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
}

bool fraction_lt(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

int oracle_bound() {
    if (const char* env = std::getenv("CYCLECOVER_ORACLE_BOUND")) {
        try {
            int bound = std::stoi(env);
            if (bound >= 0) return bound;
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return 14;
}

std::optional<CycleCover> exact_best_cover(const WeightedCompleteGraph& g,
                                           const LengthSet& L) {
    if (g.directed != L.directed) {
        throw std::invalid_argument("graph and length-set modes disagree");
    }
    const int n = g.n;
    if (n > oracle_bound()) {
        throw std::domain_error("oracle bound exceeded");
    }
    if (n == 0) return CycleCover{};
    const long long kNeg = std::numeric_limits<long long>::min() / 4;
    const int full = (1 << n) - 1;

    // path[mask][v]: best weight of a path visiting exactly `mask`, from the
    // lowest vertex of mask to v.
    std::vector<std::vector<long long>> path(full + 1, std::vector<long long>(n, kNeg));
    std::vector<std::vector<int>> par(full + 1, std::vector<int>(n, -1));
    for (int v = 0; v < n; ++v) path[1 << v][v] = 0;
    for (int mask = 1; mask <= full; ++mask) {
        const int anchor = std::countr_zero(static_cast<unsigned>(mask));
        for (int v = anchor; v < n; ++v) {
            if (!(mask & (1 << v)) || path[mask][v] == kNeg) continue;
            for (int u = anchor + 1; u < n; ++u) {
                if (mask & (1 << u)) continue;
                const int next = mask | (1 << u);
                const long long cand = path[mask][v] + g.weight(v, u);
                if (cand > path[next][u]) {
                    path[next][u] = cand;
                    par[next][u] = v;
                }
            }
        }
    }

    // best_cycle[mask]: best weight of one allowed cycle on exactly `mask`.
    std::vector<long long> best_cycle(full + 1, kNeg);
    std::vector<int> cycle_end(full + 1, -1);
    for (int mask = 1; mask <= full; ++mask) {
        const int cnt = std::popcount(static_cast<unsigned>(mask));
        const int anchor = std::countr_zero(static_cast<unsigned>(mask));
        if (cnt == 2 && g.directed && contains(L, 2)) {
            const int other =
                std::countr_zero(static_cast<unsigned>(mask & (mask - 1)));
            best_cycle[mask] = g.weight(anchor, other) + g.weight(other, anchor);
            cycle_end[mask] = other;
        } else if (cnt >= 3 && contains(L, cnt)) {
            for (int v = anchor + 1; v < n; ++v) {
                if (!(mask & (1 << v)) || path[mask][v] == kNeg) continue;
                const long long cand = path[mask][v] + g.weight(v, anchor);
                if (cand > best_cycle[mask]) {
                    best_cycle[mask] = cand;
                    cycle_end[mask] = v;
                }
            }
        }
    }

    // cover[mask]: best cover of exactly `mask`; each step peels the cycle
    // through the lowest vertex.
    std::vector<long long> cover(full + 1, kNeg);
    std::vector<int> choice(full + 1, 0);
    cover[0] = 0;
    for (int mask = 1; mask <= full; ++mask) {
        const int anchor_bit = mask & -mask;
        for (int sub = mask; sub != 0; sub = (sub - 1) & mask) {
            if (!(sub & anchor_bit)) continue;
            if (best_cycle[sub] == kNeg || cover[mask ^ sub] == kNeg) continue;
            const long long cand = cover[mask ^ sub] + best_cycle[sub];
            if (cand > cover[mask]) {
                cover[mask] = cand;
                choice[mask] = sub;
            }
        }
    }

    const bool admissible = is_admissible(n, L);
    if (cover[full] == kNeg) {
        if (admissible) {
            throw std::logic_error("cover table disagrees with admissibility");
        }
        return std::nullopt;
    }
    if (!admissible) {
        throw std::logic_error("cover table disagrees with admissibility");
    }

    CycleCover result;
    int rest = full;
    while (rest != 0) {
        const int sub = choice[rest];
        const int anchor = std::countr_zero(static_cast<unsigned>(sub));
        std::vector<int> cyc;
        if (std::popcount(static_cast<unsigned>(sub)) == 2) {
            cyc = {anchor, cycle_end[sub]};
        } else {
            int m = sub;
            int v = cycle_end[sub];
            while (v != -1) {
                cyc.push_back(v);
                const int p = par[m][v];
                m ^= 1 << v;
                v = p;
            }
            std::reverse(cyc.begin(), cyc.end());
            if (cyc.front() != anchor) {
                throw std::logic_error("cycle reconstruction lost its anchor");
            }
        }
        result.cycles.push_back(std::move(cyc));
        rest ^= sub;
    }
    return canonical_cover(result, g.directed);
}

namespace {

void min_vertex_cover_rec(std::vector<unsigned>& adj, std::vector<int>& current,
                          std::vector<int>& best) {
    if (current.size() >= best.size()) return;
    int pick = -1;
    int pick_deg = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        const int deg = std::popcount(adj[v]);
        if (deg > pick_deg) {
            pick_deg = deg;
            pick = static_cast<int>(v);
        }
    }
    if (pick < 0) {
        best = current;
        std::sort(best.begin(), best.end());
        return;
    }
    const std::vector<unsigned> saved = adj;
    auto take = [&](int v) {
        for (std::size_t u = 0; u < adj.size(); ++u) adj[u] &= ~(1u << v);
        adj[v] = 0;
        current.push_back(v);
    };
    // Branch: pick joins the cover.
    take(pick);
    min_vertex_cover_rec(adj, current, best);
    current.pop_back();
    adj = saved;
    // Branch: pick stays out, so all its neighbors join.
    const unsigned neighbors = saved[pick];
    const std::size_t mark = current.size();
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
        if (neighbors & (1u << u)) take(u);
    }
    min_vertex_cover_rec(adj, current, best);
    current.resize(mark);
    adj = saved;
}

}  // namespace

std::vector<int> exact_min_vertex_cover(const SparseGraph& h) {
    if (h.directed) {
        throw std::invalid_argument("vertex cover requires an undirected graph");
    }
    if (h.n > 24) {
        throw std::domain_error("vertex cover bound exceeded");
    }
    std::vector<unsigned> adj(h.n, 0);
    for (const auto& e : h.edges) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::vector<int> best;
    for (int v = 0; v < h.n; ++v) {
        if (adj[v] != 0) best.push_back(v);
    }
    std::vector<int> current;
    min_vertex_cover_rec(adj, current, best);
    return best;
}

std::optional<std::vector<int>> exact_exact_cover(
    int universe, const std::vector<std::vector<int>>& sets) {
    if (universe < 0) {
        throw std::invalid_argument("negative universe size");
    }
    if (universe > 24) {
        throw std::domain_error("exact cover bound exceeded");
    }
    std::vector<unsigned> masks;
    for (const auto& s : sets) {
        unsigned mask = 0;
        for (int e : s) {
            if (e < 0 || e >= universe) {
                throw std::invalid_argument("set element out of range");
            }
            if (mask & (1u << e)) {
                throw std::invalid_argument("duplicate element in a set");
            }
            mask |= 1u << e;
        }
        masks.push_back(mask);
    }
    const unsigned full = universe == 0 ? 0u : (~0u >> (32 - universe));
    std::vector<int> chosen;
    std::optional<std::vector<int>> found;

    auto rec = [&](auto&& self, unsigned covered) -> bool {
        if (covered == full) {
            std::vector<int> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            found = sorted;
            return true;
        }
        // The uncovered element with the fewest usable sets.
        int pick = -1;
        int pick_count = std::numeric_limits<int>::max();
        for (int e = 0; e < universe; ++e) {
            if (covered & (1u << e)) continue;
            int count = 0;
            for (std::size_t i = 0; i < masks.size(); ++i) {
                if ((masks[i] & (1u << e)) && !(masks[i] & covered)) ++count;
            }
            if (count < pick_count) {
                pick_count = count;
                pick = e;
                if (count == 0) break;
            }
        }
        if (pick_count == 0) return false;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (!(masks[i] & (1u << pick)) || (masks[i] & covered)) continue;
            chosen.push_back(static_cast<int>(i));
            if (self(self, covered | masks[i])) return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(rec, 0u);
    return found;
}

WeightedCompleteGraph random_complete_graph(int n, bool directed,
                                            long long weight_max,
                                            unsigned long long seed) {
    if (weight_max < 0) {
        throw std::invalid_argument("negative weight bound");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!directed && j < i) continue;
            const long long value = static_cast<long long>(
                rng() % static_cast<unsigned long long>(weight_max + 1));
            w[i][j] = value;
            if (!directed) w[j][i] = value;
        }
    }
    return make_complete_graph(directed, n, std::move(w));
}

namespace {

Fraction branch_bound(const std::string& branch) {
    if (branch == "undirected" || branch == "dir-2and3" || branch == "dir-no2") {
        return Fraction{2, 1};
    }
    if (branch == "dir-2no3") {
        return Fraction{5, 2};
    }
    throw std::logic_error("unknown approximation branch");
}

}  // namespace

RatioReport ratio_harness(const GeneratorSpec& gen, const std::string& algorithm,
                          const std::vector<LengthSet>& family, Fraction bound) {
    if (algorithm != "undirected" && algorithm != "directed") {
        throw std::invalid_argument("unknown algorithm tag");
    }
    if (bound.den <= 0 || bound.num < 0) {
        throw std::invalid_argument("malformed ratio bound");
    }
    for (const auto& L : family) {
        if (L.directed != gen.directed) {
            throw std::invalid_argument("length set mode disagrees with generator");
        }
    }
    if ((algorithm == "directed") != gen.directed) {
        throw std::invalid_argument("algorithm disagrees with generator mode");
    }
    RatioReport report;
    report.bound = bound;
    for (const auto& L : family) {
        if (!is_admissible(gen.n, L)) continue;
        for (int trial = 0; trial < gen.trials; ++trial) {
            const unsigned long long instance_seed =
                gen.seed + static_cast<unsigned long long>(trial);
            WeightedCompleteGraph g = random_complete_graph(
                gen.n, gen.directed, gen.weight_max, instance_seed);
            auto opt_cover = exact_best_cover(g, L);
            if (!opt_cover) {
                throw std::logic_error("exact solver refused an admissible instance");
            }
            const long long opt = cover_weight(g, *opt_cover);
            std::optional<ApproxResult> apx_result =
                gen.directed ? approx_directed(g, L) : approx_undirected(g, L);
            if (!apx_result) {
                throw std::logic_error("approximation refused an admissible instance");
            }
            const long long apx = apx_result->weight;

            RatioRecord record;
            record.seed = instance_seed;
            record.n = gen.n;
            record.lengths = format_length_set(L);
            record.opt = opt;
            record.apx = apx;
            record.branch = apx_result->branch;
            const Fraction ratio =
                (opt == 0) ? Fraction{1, 1} : Fraction{opt, apx};
            record.within_bound = fraction_le(ratio, branch_bound(record.branch)) &&
                                  fraction_le(ratio, bound);
            if (!record.within_bound) report.ok = false;
            if (fraction_lt(report.worst_ratio, ratio)) report.worst_ratio = ratio;
            report.per_instance.push_back(std::move(record));
            ++report.instances;
        }
    }
    return report;
}

}  // namespace cyclecover
