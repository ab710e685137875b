#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cyclecover/approx.hpp"
#include "cyclecover/matching.hpp"
#include "cyclecover/oracle.hpp"

namespace cyclecover {

namespace {

long long piece_weight_sum(const WeightedCompleteGraph& g, const PathPack& pack) {
    long long sum = 0;
    for (const auto& s : pack.singles) sum += g.weight(s[0], s[1]);
    for (const auto& d : pack.doubles) {
        sum += g.weight(d[0], d[1]) + g.weight(d[1], d[2]);
    }
    return sum;
}

}  // namespace

ApproxResult assemble(const WeightedCompleteGraph& g, const PathPack& pack,
                      const LengthSet& L, AssemblyPlan* plan_out) {
    if (g.directed != L.directed) {
        throw std::invalid_argument("graph and length-set modes disagree");
    }
    std::vector<char> seen(g.n, 0);
    long long covered = 0;
    auto touch = [&](int v) {
        if (v < 0 || v >= g.n || seen[v]) {
            throw std::invalid_argument("pieces do not partition the vertices");
        }
        seen[v] = 1;
        ++covered;
    };
    for (const auto& s : pack.singles) {
        touch(s[0]);
        touch(s[1]);
    }
    for (const auto& d : pack.doubles) {
        touch(d[0]);
        touch(d[1]);
        touch(d[2]);
    }
    for (int v : pack.isolated) touch(v);
    if (covered != g.n) {
        throw std::invalid_argument("pieces do not partition the vertices");
    }

    const int s_total = static_cast<int>(pack.singles.size());
    const int d_total = static_cast<int>(pack.doubles.size());
    const int z_total = static_cast<int>(pack.isolated.size());

    // feasible[a][b][c]: a singles, b doubles, c isolated vertices can be
    // packed exactly into cycles with allowed lengths.
    auto index = [&](int a, int b, int c) {
        return (a * (d_total + 1) + b) * (z_total + 1) + c;
    };
    std::vector<char> feasible((s_total + 1) * (d_total + 1) * (z_total + 1), 0);
    feasible[index(0, 0, 0)] = 1;
    const int min_len = L.directed ? 2 : 3;
    for (int a = 0; a <= s_total; ++a) {
        for (int b = 0; b <= d_total; ++b) {
            for (int c = 0; c <= z_total; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                char ok = 0;
                for (int ba = 0; ba <= a && !ok; ++ba) {
                    for (int bb = 0; bb <= b && !ok; ++bb) {
                        for (int bc = 0; bc <= c && !ok; ++bc) {
                            if (ba + bb + bc == 0) continue;
                            const int len = 2 * ba + 3 * bb + bc;
                            if (len < min_len || !contains(L, len)) continue;
                            if (feasible[index(a - ba, b - bb, c - bc)]) ok = 1;
                        }
                    }
                }
                feasible[index(a, b, c)] = ok;
            }
        }
    }
    if (!feasible[index(s_total, d_total, z_total)]) {
        throw std::domain_error("no exact packing");
    }

    // Reconstruct bins: repeatedly take the largest feasible cycle length,
    // preferring more doubles and then more singles inside it.
    AssemblyPlan plan;
    int a = s_total, b = d_total, c = z_total;
    int next_single = 0, next_double = 0, next_isolated = 0;
    while (a + b + c > 0) {
        int best_len = -1, best_ba = -1, best_bb = -1, best_bc = -1;
        for (int ba = 0; ba <= a; ++ba) {
            for (int bb = 0; bb <= b; ++bb) {
                for (int bc = 0; bc <= c; ++bc) {
                    if (ba + bb + bc == 0) continue;
                    const int len = 2 * ba + 3 * bb + bc;
                    if (len < min_len || !contains(L, len)) continue;
                    if (!feasible[index(a - ba, b - bb, c - bc)]) continue;
                    const bool better =
                        len > best_len ||
                        (len == best_len &&
                         (bb > best_bb || (bb == best_bb && ba > best_ba)));
                    if (better) {
                        best_len = len;
                        best_ba = ba;
                        best_bb = bb;
                        best_bc = bc;
                    }
                }
            }
        }
        if (best_len < 0) {
            throw std::logic_error("packing reconstruction lost feasibility");
        }
        AssemblyPlan::Bin bin;
        bin.length = best_len;
        for (int i = 0; i < best_ba; ++i) bin.singles.push_back(next_single++);
        for (int i = 0; i < best_bb; ++i) bin.doubles.push_back(next_double++);
        for (int i = 0; i < best_bc; ++i) bin.isolated.push_back(next_isolated++);
        plan.bins.push_back(std::move(bin));
        a -= best_ba;
        b -= best_bb;
        c -= best_bc;
    }

    // Close each bin into a cycle: doubles first, then singles, then
    // isolated vertices, joined head to tail in order.
    ApproxResult result;
    for (auto& bin : plan.bins) {
        std::vector<std::vector<int>> segments;
        for (int di : bin.doubles) {
            const auto& d = pack.doubles[di];
            segments.push_back({d[0], d[1], d[2]});
        }
        for (int si : bin.singles) {
            const auto& s = pack.singles[si];
            segments.push_back({s[0], s[1]});
        }
        for (int zi : bin.isolated) segments.push_back({pack.isolated[zi]});
        std::vector<int> cyc;
        for (std::size_t i = 0; i < segments.size(); ++i) {
            if (i > 0) {
                plan.connecting_edges.push_back(
                    {segments[i - 1].back(), segments[i].front()});
            }
            cyc.insert(cyc.end(), segments[i].begin(), segments[i].end());
        }
        plan.connecting_edges.push_back({segments.back().back(), segments.front().front()});
        if (static_cast<int>(cyc.size()) != bin.length) {
            throw std::logic_error("bin length accounting diverged");
        }
        result.cover.cycles.push_back(std::move(cyc));
    }
    result.cover = canonical_cover(result.cover, g.directed);
    ValidationResult valid = validate_cover(result.cover, g.n, g.directed, L);
    if (!valid) {
        throw std::logic_error("assembled cover failed validation: " + valid.message);
    }
    result.weight = cover_weight(g, result.cover);
    result.pieces_kept_weight = piece_weight_sum(g, pack);
    if (plan_out != nullptr) *plan_out = std::move(plan);
    return result;
}

std::optional<ApproxResult> approx_undirected(const WeightedCompleteGraph& g,
                                              const LengthSet& L) {
    if (g.directed || L.directed) {
        throw std::invalid_argument("undirected algorithm needs undirected input");
    }
    if (!is_admissible(g.n, L)) return std::nullopt;
    if (g.n == 0) {
        ApproxResult empty;
        empty.branch = "undirected";
        return empty;
    }
    CycleCover factor = max_weight_two_factor(g);
    PathPack pack = decompose_cover(g, factor);
    ApproxResult result = assemble(g, pack, L);
    result.branch = "undirected";
    return result;
}

CycleCover exact_three_cycle_cover(const WeightedCompleteGraph& g) {
    if (!g.directed) {
        throw std::invalid_argument("three-cycle cover solver needs a directed graph");
    }
    if (g.n < 3) {
        throw std::invalid_argument("need at least three vertices");
    }
    LengthSet all_from_three = make_length_set({}, 3, /*directed=*/true);
    auto cover = exact_best_cover(g, all_from_three);
    if (!cover) {
        throw std::logic_error("unrestricted cover must exist for n >= 3");
    }
    return *cover;
}

namespace {

ApproxResult directed_two_and_three(const WeightedCompleteGraph& g) {
    AssignmentResult assignment = max_weight_assignment(g);
    CycleCover base = assignment.to_cover();
    ApproxResult result;
    result.branch = "dir-2and3";
    long long kept = 0;
    auto arc_w = [&](const std::vector<int>& cyc, int i) {
        const int lambda = static_cast<int>(cyc.size());
        return g.weight(cyc[i % lambda], cyc[(i + 1) % lambda]);
    };
    for (const auto& cyc : base.cycles) {
        const int lambda = static_cast<int>(cyc.size());
        if (lambda % 2 == 0) {
            // Even cycle: keep the heavier alternation class, each kept arc
            // becomes a 2-cycle.
            long long class_sum[2] = {0, 0};
            for (int i = 0; i < lambda; ++i) class_sum[i % 2] += arc_w(cyc, i);
            const int cls = (class_sum[0] >= class_sum[1]) ? 0 : 1;
            kept += class_sum[cls];
            for (int i = cls; i < lambda; i += 2) {
                result.cover.cycles.push_back({cyc[i], cyc[(i + 1) % lambda]});
            }
        } else {
            // Odd cycle: one consecutive arc pair becomes a 3-cycle, every
            // other arc after it a 2-cycle; rotation picked for weight.
            long long best = -1;
            int best_r = 0;
            for (int r = 0; r < lambda; ++r) {
                long long w = arc_w(cyc, r) + arc_w(cyc, r + 1);
                for (int k = r + 3; k <= r + lambda - 2; k += 2) w += arc_w(cyc, k);
                if (w > best) {
                    best = w;
                    best_r = r;
                }
            }
            kept += best;
            result.cover.cycles.push_back({cyc[best_r % lambda],
                                           cyc[(best_r + 1) % lambda],
                                           cyc[(best_r + 2) % lambda]});
            for (int k = best_r + 3; k <= best_r + lambda - 2; k += 2) {
                result.cover.cycles.push_back(
                    {cyc[k % lambda], cyc[(k + 1) % lambda]});
            }
        }
    }
    result.cover = canonical_cover(result.cover, /*directed=*/true);
    result.weight = cover_weight(g, result.cover);
    result.pieces_kept_weight = kept;
    return result;
}

ApproxResult directed_two_no_three(const WeightedCompleteGraph& g,
                                   const LengthSet& L) {
    const long long cap = max_half_sum(g.n, L);
    LengthPlan plan = max_half_sum_plan(g.n, L);
    Matching matching = max_weight_matching_capped(g, static_cast<int>(cap));

    std::vector<char> matched(g.n, 0);
    for (const auto& e : matching.edges) {
        matched[e[0]] = 1;
        matched[e[1]] = 1;
    }
    std::vector<int> fillers;
    for (int v = 0; v < g.n; ++v) {
        if (!matched[v]) fillers.push_back(v);
    }

    // Fill the longest cycles first with matched pairs laid out
    // consecutively; remaining slots take unmatched vertices.
    std::vector<int> lengths = plan.lengths;
    std::sort(lengths.rbegin(), lengths.rend());
    ApproxResult result;
    result.branch = "dir-2no3";
    std::size_t next_pair = 0;
    std::size_t next_filler = 0;
    for (int len : lengths) {
        std::vector<int> cyc;
        const int capacity = len / 2;
        for (int i = 0; i < capacity && next_pair < matching.edges.size(); ++i) {
            cyc.push_back(matching.edges[next_pair][0]);
            cyc.push_back(matching.edges[next_pair][1]);
            ++next_pair;
        }
        while (static_cast<int>(cyc.size()) < len) {
            cyc.push_back(fillers[next_filler++]);
        }
        result.cover.cycles.push_back(std::move(cyc));
    }
    if (next_filler != fillers.size() || next_pair != matching.edges.size()) {
        throw std::logic_error("cycle filling accounting diverged");
    }
    result.cover = canonical_cover(result.cover, /*directed=*/true);
    result.weight = cover_weight(g, result.cover);
    result.pieces_kept_weight = matching.weight;
    return result;
}

}  // namespace

std::optional<ApproxResult> approx_directed(const WeightedCompleteGraph& g,
                                            const LengthSet& L,
                                            const ThreeCycleCoverSolver& solver3) {
    if (!g.directed || !L.directed) {
        throw std::invalid_argument("directed algorithm needs directed input");
    }
    if (!is_admissible(g.n, L)) return std::nullopt;
    const bool has2 = contains(L, 2);
    const bool has3 = contains(L, 3);
    if (g.n == 0) {
        ApproxResult empty;
        empty.branch = has2 ? (has3 ? "dir-2and3" : "dir-2no3") : "dir-no2";
        return empty;
    }
    if (has2 && has3) {
        return directed_two_and_three(g);
    }
    if (has2) {
        return directed_two_no_three(g, L);
    }
    CycleCover three_cover =
        solver3 ? solver3(g) : exact_three_cycle_cover(g);
    LengthSet all_from_three = make_length_set({}, 3, /*directed=*/true);
    ValidationResult valid =
        validate_cover(three_cover, g.n, /*directed=*/true, all_from_three);
    if (!valid) {
        throw std::invalid_argument("solver produced an invalid cover: " +
                                    valid.message);
    }
    PathPack pack = decompose_cover(g, three_cover);
    ApproxResult result = assemble(g, pack, L);
    result.branch = "dir-no2";
    return result;
}

}  // namespace cyclecover
