#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cyclecover/approx.hpp"
#include "cyclecover/oracle.hpp"
#include "oracles.hpp"

using cyclecover::ApproxResult;
using cyclecover::AssemblyPlan;
using cyclecover::CycleCover;
using cyclecover::LengthSet;
using cyclecover::PathPack;
using cyclecover::WeightedCompleteGraph;
using cyclecover::approx_directed;
using cyclecover::approx_undirected;
using cyclecover::assemble;
using cyclecover::cover_weight;
using cyclecover::exact_best_cover;
using cyclecover::exact_three_cycle_cover;
using cyclecover::make_length_set;
using cyclecover::make_zero_graph;
using cyclecover::random_complete_graph;
using cyclecover::validate_cover;

TEST_CASE("assembly closes pieces into allowed cycles without dropping edges") {
    const auto g = random_complete_graph(4, false, 20, 3);
    PathPack pack;
    pack.singles = {{0, 1}, {2, 3}};
    pack.kept_weight = g.weight(0, 1) + g.weight(2, 3);
    const auto L4 = make_length_set({4}, std::nullopt, false);
    AssemblyPlan plan;
    const auto res = assemble(g, pack, L4, &plan);
    CHECK(static_cast<bool>(validate_cover(res.cover, 4, false, L4)));
    CHECK(res.weight == cover_weight(g, res.cover));
    CHECK(res.weight >= pack.kept_weight);
    CHECK(res.pieces_kept_weight == pack.kept_weight);
    // Both piece edges survive in the single 4-cycle.
    REQUIRE(res.cover.cycles.size() == 1);
    std::set<std::pair<int, int>> edges;
    const auto& cyc = res.cover.cycles[0];
    for (size_t i = 0; i < cyc.size(); ++i) {
        edges.insert({cyc[i], cyc[(i + 1) % cyc.size()]});
        edges.insert({cyc[(i + 1) % cyc.size()], cyc[i]});
    }
    CHECK(edges.count({0, 1}));
    CHECK(edges.count({2, 3}));
    REQUIRE(plan.bins.size() == 1);
    CHECK(plan.bins[0].length == 4);
    CHECK(plan.connecting_edges.size() == 2);

    // A double plus an isolated vertex close into one square.
    PathPack pd;
    pd.doubles = {{1, 0, 2}};
    pd.isolated = {3};
    pd.kept_weight = g.weight(1, 0) + g.weight(0, 2);
    const auto rd = assemble(g, pd, L4);
    CHECK(static_cast<bool>(validate_cover(rd.cover, 4, false, L4)));
    CHECK(rd.weight >= pd.kept_weight);
}

TEST_CASE("assembly prefers long bins and refuses impossible packings") {
    // Six vertices as three singles cannot tile two triangles (a triangle
    // absorbs at most one single), but {6} works.
    const auto g = random_complete_graph(6, false, 10, 5);
    PathPack pack;
    pack.singles = {{0, 1}, {2, 3}, {4, 5}};
    pack.kept_weight =
        g.weight(0, 1) + g.weight(2, 3) + g.weight(4, 5);
    const auto L3 = make_length_set({3}, std::nullopt, false);
    CHECK_THROWS_WITH_AS(assemble(g, pack, L3), "no exact packing",
                         std::domain_error);

    const auto L36 = make_length_set({3, 6}, std::nullopt, false);
    AssemblyPlan plan;
    const auto res = assemble(g, pack, L36, &plan);
    REQUIRE(plan.bins.size() == 1);
    CHECK(plan.bins[0].length == 6);
    CHECK(static_cast<bool>(validate_cover(res.cover, 6, false, L36)));

    // Inadmissible totals refuse as well.
    const auto g5 = random_complete_graph(5, false, 10, 5);
    PathPack iso;
    iso.isolated = {0, 1, 2, 3, 4};
    CHECK_THROWS_AS(assemble(g5, iso, make_length_set({4}, std::nullopt, false)),
                    std::domain_error);

    // Bin lengths come out largest first when several lengths are needed.
    const auto g7 = random_complete_graph(7, false, 10, 2);
    PathPack p7;
    p7.doubles = {{0, 1, 2}};
    p7.isolated = {3, 4, 5, 6};
    const auto L34 = make_length_set({3, 4}, std::nullopt, false);
    AssemblyPlan plan7;
    const auto r7 = assemble(g7, p7, L34, &plan7);
    REQUIRE(plan7.bins.size() == 2);
    CHECK(plan7.bins[0].length == 4);
    CHECK(plan7.bins[1].length == 3);
    CHECK(static_cast<bool>(validate_cover(r7.cover, 7, false, L34)));
}

TEST_CASE("undirected approximation achieves factor two against the optimum") {
    const std::vector<LengthSet> families = {
        make_length_set({3}, std::nullopt, false),
        make_length_set({4}, std::nullopt, false),
        make_length_set({5}, std::nullopt, false),
        make_length_set({4, 5}, std::nullopt, false),
        make_length_set({}, 4, false),
        make_length_set({}, 5, false),
        make_length_set({}, 3, false),
    };
    for (const auto& L : families) {
        for (int n = 3; n <= 9; ++n) {
            for (unsigned seed = 1; seed <= 4; ++seed) {
                const auto g = random_complete_graph(n, false, 50, seed);
                const auto res = approx_undirected(g, L);
                const auto opt = exact_best_cover(g, L);
                CAPTURE(cyclecover::format_length_set(L));
                CAPTURE(n);
                CAPTURE(seed);
                CHECK(res.has_value() == opt.has_value());
                if (!res) continue;
                REQUIRE(static_cast<bool>(
                    validate_cover(res->cover, n, false, L)));
                CHECK(res->weight == cover_weight(g, res->cover));
                CHECK(res->branch == "undirected");
                CHECK(res->weight >= res->pieces_kept_weight);
                const long long best = cover_weight(g, *opt);
                CHECK(res->weight <= best);
                CHECK(2 * res->weight >= best);
            }
        }
    }
}

TEST_CASE("undirected approximation is deterministic") {
    const auto g = random_complete_graph(9, false, 80, 17);
    const auto L = make_length_set({}, 4, false);
    const auto a = approx_undirected(g, L);
    const auto b = approx_undirected(g, L);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->cover.cycles == b->cover.cycles);
    CHECK(a->weight == b->weight);
}

TEST_CASE("no-2-cycle exact solver matches exhaustive enumeration") {
    const auto tail3 = make_length_set({}, 3, true);
    for (int n = 3; n <= 7; ++n) {
        for (unsigned seed = 1; seed <= 5; ++seed) {
            const auto g = random_complete_graph(n, true, 40, seed);
            const auto cover = exact_three_cycle_cover(g);
            CAPTURE(n);
            CAPTURE(seed);
            REQUIRE(static_cast<bool>(validate_cover(cover, n, true, tail3)));
            CHECK(cover_weight(g, cover) ==
                  testoracle::best_cover_weight(g, tail3));
        }
    }
    CHECK_THROWS_AS(exact_three_cycle_cover(make_zero_graph(true, 2)),
                    std::invalid_argument);
}

TEST_CASE("directed approximation dispatches by branch and meets its bounds") {
    struct Family {
        LengthSet L;
        std::string branch;
        // apx * ratio_den * ... : checked as bound_num * apx >= bound_den * opt
        long long bound_num;
        long long bound_den;
    };
    const std::vector<Family> families = {
        {make_length_set({2, 3}, std::nullopt, true), "dir-2and3", 2, 1},
        {make_length_set({}, 2, true), "dir-2and3", 2, 1},
        {make_length_set({2, 5}, std::nullopt, true), "dir-2no3", 5, 2},
        {make_length_set({2}, std::nullopt, true), "dir-2no3", 5, 2},
        {make_length_set({2, 4}, 7, true), "dir-2no3", 5, 2},
        {make_length_set({3}, std::nullopt, true), "dir-no2", 2, 1},
        {make_length_set({}, 3, true), "dir-no2", 2, 1},
        {make_length_set({4}, 6, true), "dir-no2", 2, 1},
    };
    for (const auto& fam : families) {
        for (int n = 2; n <= 8; ++n) {
            for (unsigned seed = 1; seed <= 3; ++seed) {
                const auto g = random_complete_graph(n, true, 40, seed);
                const auto res = approx_directed(g, fam.L);
                const auto opt = exact_best_cover(g, fam.L);
                CAPTURE(cyclecover::format_length_set(fam.L));
                CAPTURE(n);
                CAPTURE(seed);
                CHECK(res.has_value() == opt.has_value());
                if (!res) continue;
                REQUIRE(static_cast<bool>(
                    validate_cover(res->cover, n, true, fam.L)));
                CHECK(res->weight == cover_weight(g, res->cover));
                CHECK(res->branch == fam.branch);
                const long long best = cover_weight(g, *opt);
                CHECK(res->weight <= best);
                CHECK(fam.bound_num * res->weight >= fam.bound_den * best);
            }
        }
    }
}

TEST_CASE("directed branch without 2-cycles consults the plugged solver") {
    const auto g = random_complete_graph(6, true, 30, 21);
    int calls = 0;
    cyclecover::ThreeCycleCoverSolver probe =
        [&calls](const WeightedCompleteGraph& h) {
            ++calls;
            return exact_three_cycle_cover(h);
        };
    const auto L3 = make_length_set({3}, std::nullopt, true);
    const auto res = approx_directed(g, L3, probe);
    REQUIRE(res.has_value());
    CHECK(calls == 1);

    // Branches that allow 2-cycles never touch the solver.
    const auto L23 = make_length_set({2, 3}, std::nullopt, true);
    (void)approx_directed(g, L23, probe);
    const auto L25 = make_length_set({2, 5}, std::nullopt, true);
    (void)approx_directed(g, L25, probe);
    CHECK(calls == 1);

    // Inadmissible sizes refuse before any solving happens.
    const auto g5 = random_complete_graph(5, true, 30, 21);
    CHECK_FALSE(approx_directed(g5, L3, probe).has_value());
    CHECK(calls == 1);
}

TEST_CASE("mode mismatches are rejected up front") {
    const auto gu = random_complete_graph(6, false, 10, 1);
    const auto gd = random_complete_graph(6, true, 10, 1);
    CHECK_THROWS_AS(
        approx_undirected(gd, make_length_set({3}, std::nullopt, false)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        approx_undirected(gu, make_length_set({3}, std::nullopt, true)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        approx_directed(gu, make_length_set({3}, std::nullopt, true)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        approx_directed(gd, make_length_set({3}, std::nullopt, false)),
        std::invalid_argument);
}
