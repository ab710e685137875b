#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclecover/decompose.hpp"

namespace cyclecover {

const DecompositionTables& decomposition_tables() {
    static const DecompositionTables tables = [] {
        DecompositionTables t;
        // Target piece counts per residue of n mod 6: k + alpha singles and
        // k + beta doubles for n = 6k + ell.
        t.alpha_beta = {AlphaBeta{0, 0}, AlphaBeta{1, 0}, AlphaBeta{1, 0},
                        AlphaBeta{0, 1}, AlphaBeta{0, 1}, AlphaBeta{1, 1}};
        // Splits for a lone cycle, indexed by base length 3..8.
        t.base_one_cycle = {AlphaBeta{0, 1}, AlphaBeta{0, 1}, AlphaBeta{1, 1},
                            AlphaBeta{1, 1}, AlphaBeta{2, 1}, AlphaBeta{2, 1}};
        // Splits for a final pair of odd cycles, keyed by the two base
        // lengths; rows with two options let the caller pick the heavier.
        t.base_two_odd = {
            {3, 3, {{{1, 0}, {0, 1}}}},
            {3, 5, {{{1, 0}, {1, 1}}, {{0, 1}, {2, 0}}}},
            {3, 7, {{{1, 0}, {0, 2}}, {{0, 1}, {1, 1}}}},
            {5, 5, {{{0, 1}, {1, 1}}}},
            {5, 7, {{{2, 0}, {0, 2}}, {{1, 1}, {1, 1}}}},
            {7, 7, {{{1, 1}, {2, 1}}}},
        };
        // Splits for one even cycle removed while other cycles remain,
        // keyed by base length and by ell = (remaining n before removal)
        // mod 6.
        t.step_even = {
            {4, {AlphaBeta{0, 1}, AlphaBeta{2, 0}, AlphaBeta{2, 0}, AlphaBeta{0, 1},
                 AlphaBeta{0, 1}, AlphaBeta{0, 1}}},
            {6, {AlphaBeta{1, 1}, AlphaBeta{1, 1}, AlphaBeta{1, 1}, AlphaBeta{1, 1},
                 AlphaBeta{1, 1}, AlphaBeta{1, 1}}},
            {8, {AlphaBeta{2, 1}, AlphaBeta{2, 1}, AlphaBeta{2, 1}, AlphaBeta{0, 2},
                 AlphaBeta{0, 2}, AlphaBeta{2, 1}}},
        };
        // Splits for a pair of odd cycles removed while other cycles
        // remain, keyed by the two base lengths and ell; each entry lists
        // one or two options.
        auto pair_options =
            [](std::initializer_list<PairSplitOption> opts) {
                return std::vector<PairSplitOption>(opts);
            };
        {
            DecompositionTables::StepPairRow row;
            row.base_a = 3;
            row.base_b = 3;
            for (int ell = 0; ell < 6; ++ell) {
                row.by_ell[ell] = pair_options({{{1, 0}, {0, 1}}});
            }
            t.step_two_odd.push_back(row);
        }
        {
            DecompositionTables::StepPairRow row;
            row.base_a = 3;
            row.base_b = 7;
            for (int ell : {0, 3, 4, 5}) {
                row.by_ell[ell] =
                    pair_options({{{1, 0}, {0, 2}}, {{0, 1}, {1, 1}}});
            }
            for (int ell : {1, 2}) {
                row.by_ell[ell] =
                    pair_options({{{1, 0}, {2, 1}}, {{0, 1}, {3, 0}}});
            }
            t.step_two_odd.push_back(row);
        }
        {
            DecompositionTables::StepPairRow row;
            row.base_a = 5;
            row.base_b = 5;
            for (int ell : {0, 3, 4, 5}) {
                row.by_ell[ell] = pair_options({{{0, 1}, {1, 1}}});
            }
            for (int ell : {1, 2}) {
                row.by_ell[ell] = pair_options({{{2, 0}, {1, 1}}});
            }
            t.step_two_odd.push_back(row);
        }
        {
            DecompositionTables::StepPairRow row;
            row.base_a = 5;
            row.base_b = 7;
            for (int ell = 0; ell < 6; ++ell) {
                row.by_ell[ell] =
                    pair_options({{{2, 0}, {0, 2}}, {{1, 1}, {1, 1}}});
            }
            t.step_two_odd.push_back(row);
        }
        {
            DecompositionTables::StepPairRow row;
            row.base_a = 7;
            row.base_b = 7;
            for (int ell : {0, 1, 2, 5}) {
                row.by_ell[ell] = pair_options({{{1, 1}, {2, 1}}});
            }
            for (int ell : {3, 4}) {
                row.by_ell[ell] = pair_options({{{1, 1}, {0, 2}}});
            }
            t.step_two_odd.push_back(row);
        }
        return t;
    }();
    return tables;
}

namespace {

int base_length(int lambda) {
    // Base in {3,...,8} with lambda = base + 6q.
    return 3 + (lambda - 3) % 6;
}

long long cycle_edge_weight(const WeightedCompleteGraph& g,
                            const std::vector<int>& cycle, int i) {
    const int lambda = static_cast<int>(cycle.size());
    return g.weight(cycle[i % lambda], cycle[(i + 1) % lambda]);
}

}  // namespace

AlphaBeta extend_alpha_beta(int lambda) {
    if (lambda < 3) {
        throw std::invalid_argument("cycle length below three");
    }
    const int base = base_length(lambda);
    const int q = (lambda - base) / 6;
    AlphaBeta ab = decomposition_tables().base_one_cycle[base - 3];
    ab.alpha += q;
    ab.beta += q;
    return ab;
}

CyclePieces decompose_cycle(const WeightedCompleteGraph& g,
                            const std::vector<int>& cycle, int alpha, int beta) {
    const int lambda = static_cast<int>(cycle.size());
    if (lambda < 3) {
        throw std::invalid_argument("cycle length below three");
    }
    if (alpha < 0 || beta < 0) {
        throw std::invalid_argument("negative piece count");
    }
    if (2 * alpha + 3 * beta > lambda) {
        throw std::invalid_argument("piece pattern does not fit on the cycle");
    }
    // Pattern at rotation r: alpha singles on every other edge starting at
    // r, then beta doubles on consecutive edge pairs spaced three apart.
    long long best = -1;
    int best_r = 0;
    for (int r = 0; r < lambda; ++r) {
        long long kept = 0;
        for (int i = 0; i < alpha; ++i) kept += cycle_edge_weight(g, cycle, r + 2 * i);
        for (int j = 0; j < beta; ++j) {
            kept += cycle_edge_weight(g, cycle, r + 2 * alpha + 3 * j);
            kept += cycle_edge_weight(g, cycle, r + 2 * alpha + 3 * j + 1);
        }
        if (kept > best) {
            best = kept;
            best_r = r;
        }
    }
    CyclePieces pieces;
    pieces.kept_weight = best;
    for (int i = 0; i < alpha; ++i) {
        const int k = (best_r + 2 * i) % lambda;
        pieces.singles.push_back({cycle[k], cycle[(k + 1) % lambda]});
    }
    for (int j = 0; j < beta; ++j) {
        const int k = (best_r + 2 * alpha + 3 * j) % lambda;
        pieces.doubles.push_back(
            {cycle[k], cycle[(k + 1) % lambda], cycle[(k + 2) % lambda]});
    }
    return pieces;
}

CyclePieces decompose_pair(const WeightedCompleteGraph& g,
                           const std::vector<int>& cycle_a,
                           const std::vector<int>& cycle_b,
                           const std::vector<PairSplitOption>& options) {
    const int la = static_cast<int>(cycle_a.size());
    const int lb = static_cast<int>(cycle_b.size());
    if (la < 3 || lb < 3 || la % 2 == 0 || lb % 2 == 0) {
        throw std::invalid_argument("pair split expects two odd cycles");
    }
    if (options.empty()) {
        throw std::invalid_argument("pair split needs at least one option");
    }
    const int qa = (la - base_length(la)) / 6;
    const int qb = (lb - base_length(lb)) / 6;
    const bool equal_bases = base_length(la) == base_length(lb);
    std::optional<CyclePieces> best;
    long long best_kept = -1;
    auto consider = [&](const AlphaBeta& for_a, const AlphaBeta& for_b) {
        CyclePieces pa =
            decompose_cycle(g, cycle_a, for_a.alpha + qa, for_a.beta + qa);
        CyclePieces pb =
            decompose_cycle(g, cycle_b, for_b.alpha + qb, for_b.beta + qb);
        const long long kept = pa.kept_weight + pb.kept_weight;
        if (kept > best_kept) {
            best_kept = kept;
            CyclePieces merged = std::move(pa);
            merged.singles.insert(merged.singles.end(), pb.singles.begin(),
                                  pb.singles.end());
            merged.doubles.insert(merged.doubles.end(), pb.doubles.begin(),
                                  pb.doubles.end());
            merged.kept_weight = kept;
            best = std::move(merged);
        }
    };
    for (const auto& option : options) {
        consider(option.a, option.b);
        if (equal_bases) consider(option.b, option.a);
    }
    return *best;
}

namespace {

struct DriverState {
    std::vector<std::vector<int>> cycles;  // remaining, canonical order
    long long remaining_n = 0;
    PathPack pack;

    void absorb(const std::vector<int>& cycle, const CyclePieces& pieces) {
        std::vector<char> used(cycle.size(), 0);
        auto mark = [&](int v) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                if (cycle[i] == v) used[i] = 1;
            }
        };
        for (const auto& s : pieces.singles) {
            pack.singles.push_back(s);
            mark(s[0]);
            mark(s[1]);
        }
        for (const auto& d : pieces.doubles) {
            pack.doubles.push_back(d);
            mark(d[0]);
            mark(d[1]);
            mark(d[2]);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (!used[i]) pack.isolated.push_back(cycle[i]);
        }
        pack.kept_weight += pieces.kept_weight;
    }
};

const DecompositionTables::StepEvenRow& find_step_even(int base) {
    for (const auto& row : decomposition_tables().step_even) {
        if (row.base == base) return row;
    }
    throw std::logic_error("missing even-step table row");
}

const std::vector<PairSplitOption>& find_step_pair(int base_a, int base_b, int ell) {
    for (const auto& row : decomposition_tables().step_two_odd) {
        if (row.base_a == base_a && row.base_b == base_b) {
            return row.by_ell[ell];
        }
    }
    throw std::logic_error("unreachable odd-pair combination");
}

const DecompositionTables::BasePairRow& find_base_pair(int base_a, int base_b) {
    for (const auto& row : decomposition_tables().base_two_odd) {
        if (row.base_a == base_a && row.base_b == base_b) return row;
    }
    throw std::logic_error("missing final-pair table row");
}

}  // namespace

PathPack decompose_cover(const WeightedCompleteGraph& g, const CycleCover& cover) {
    std::vector<char> seen(g.n, 0);
    long long covered = 0;
    for (const auto& cyc : cover.cycles) {
        if (cyc.size() < 3) {
            throw std::invalid_argument("decomposition expects cycles of length >= 3");
        }
        for (int v : cyc) {
            if (v < 0 || v >= g.n || seen[v]) {
                throw std::invalid_argument("cover is not a partition of the vertices");
            }
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != g.n) {
        throw std::invalid_argument("cover is not a partition of the vertices");
    }

    DriverState state;
    state.cycles = canonical_cover(cover, g.directed).cycles;
    state.remaining_n = g.n;

    auto remove_at = [&](std::size_t idx) {
        state.remaining_n -= static_cast<long long>(state.cycles[idx].size());
        state.cycles.erase(state.cycles.begin() + static_cast<std::ptrdiff_t>(idx));
    };

    while (state.cycles.size() > 1) {
        std::size_t even_idx = state.cycles.size();
        for (std::size_t i = 0; i < state.cycles.size(); ++i) {
            if (state.cycles[i].size() % 2 == 0) {
                even_idx = i;
                break;
            }
        }
        if (even_idx < state.cycles.size()) {
            // Remove the first even cycle; the split depends on its base
            // length and on the residue of the vertex count still present.
            const std::vector<int> cyc = state.cycles[even_idx];
            const int lambda = static_cast<int>(cyc.size());
            const int base = base_length(lambda);
            const int q = (lambda - base) / 6;
            const int ell = static_cast<int>(state.remaining_n % 6);
            AlphaBeta ab = find_step_even(base).by_ell[ell];
            ab.alpha += q;
            ab.beta += q;
            state.absorb(cyc, decompose_cycle(g, cyc, ab.alpha, ab.beta));
            remove_at(even_idx);
            continue;
        }
        // All remaining cycles are odd.
        if (state.cycles.size() == 2) {
            std::vector<int> a = state.cycles[0];
            std::vector<int> b = state.cycles[1];
            int ba = base_length(static_cast<int>(a.size()));
            int bb = base_length(static_cast<int>(b.size()));
            if (ba > bb) {
                std::swap(a, b);
                std::swap(ba, bb);
            }
            const DecompositionTables::BasePairRow& row = find_base_pair(ba, bb);
            std::vector<int> joint = a;
            joint.insert(joint.end(), b.begin(), b.end());
            state.absorb(joint, decompose_pair(g, a, b, row.options));
            state.cycles.clear();
            state.remaining_n = 0;
            break;
        }
        // Three or more odd cycles: take out a pair chosen by base-length
        // counts so the last two never form a {3,5} combination.
        std::vector<std::size_t> by_base[3];  // bases 3, 5, 7
        for (std::size_t i = 0; i < state.cycles.size(); ++i) {
            const int base = base_length(static_cast<int>(state.cycles[i].size()));
            by_base[(base - 3) / 2].push_back(i);
        }
        const auto& threes = by_base[0];
        const auto& fives = by_base[1];
        const auto& sevens = by_base[2];
        std::size_t ia, ib;
        if (threes.size() >= 2) {
            ia = threes[0];
            ib = threes[1];
        } else if (fives.size() >= 2) {
            ia = fives[0];
            ib = fives[1];
        } else if (threes.size() == 1 && !sevens.empty()) {
            ia = threes[0];
            ib = sevens[0];
        } else if (fives.size() == 1 && !sevens.empty()) {
            ia = fives[0];
            ib = sevens[0];
        } else if (sevens.size() >= 2) {
            ia = sevens[0];
            ib = sevens[1];
        } else {
            throw std::logic_error("unreachable odd-cycle configuration");
        }
        std::vector<int> a = state.cycles[ia];
        std::vector<int> b = state.cycles[ib];
        int ba = base_length(static_cast<int>(a.size()));
        int bb = base_length(static_cast<int>(b.size()));
        if (ba > bb) {
            std::swap(a, b);
            std::swap(ba, bb);
        }
        const int ell = static_cast<int>(state.remaining_n % 6);
        const auto& options = find_step_pair(ba, bb, ell);
        std::vector<int> joint = a;
        joint.insert(joint.end(), b.begin(), b.end());
        state.absorb(joint, decompose_pair(g, a, b, options));
        if (ia > ib) std::swap(ia, ib);
        remove_at(ib);
        remove_at(ia);
    }

    if (state.cycles.size() == 1) {
        const std::vector<int> cyc = state.cycles[0];
        AlphaBeta ab = extend_alpha_beta(static_cast<int>(cyc.size()));
        state.absorb(cyc, decompose_cycle(g, cyc, ab.alpha, ab.beta));
        state.cycles.clear();
    }

    // The totals must land exactly on the target counts for n mod 6.
    const long long n = g.n;
    const long long k = n / 6;
    const AlphaBeta target = decomposition_tables().alpha_beta[n % 6];
    if (static_cast<long long>(state.pack.singles.size()) != k + target.alpha ||
        static_cast<long long>(state.pack.doubles.size()) != k + target.beta) {
        throw std::logic_error("piece counts diverged from the target profile");
    }
    return state.pack;
}

Matching decompose_to_matching(const WeightedCompleteGraph& g,
                               const CycleCover& cover) {
    Matching m;
    for (const auto& cyc : cover.cycles) {
        const int lambda = static_cast<int>(cyc.size());
        if (lambda < 2 || (!g.directed && lambda < 3)) {
            throw std::invalid_argument("cycle too short for this graph mode");
        }
        if (lambda == 2) {
            const long long fwd = g.weight(cyc[0], cyc[1]);
            const long long bwd = g.weight(cyc[1], cyc[0]);
            if (fwd >= bwd) {
                m.edges.push_back({cyc[0], cyc[1]});
                m.weight += fwd;
            } else {
                m.edges.push_back({cyc[1], cyc[0]});
                m.weight += bwd;
            }
            continue;
        }
        // Keep floor(lambda / 2) pairwise-disjoint edges: every other edge
        // starting from the best rotation.
        const int take = lambda / 2;
        long long best = -1;
        int best_r = 0;
        for (int r = 0; r < lambda; ++r) {
            long long kept = 0;
            for (int i = 0; i < take; ++i) kept += cycle_edge_weight(g, cyc, r + 2 * i);
            if (kept > best) {
                best = kept;
                best_r = r;
            }
        }
        for (int i = 0; i < take; ++i) {
            const int k = (best_r + 2 * i) % lambda;
            m.edges.push_back({cyc[k], cyc[(k + 1) % lambda]});
        }
        m.weight += best;
    }
    return m;
}

}  // namespace cyclecover
