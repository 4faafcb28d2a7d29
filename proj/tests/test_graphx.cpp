#include "treemorph/graphx.hpp"
#include "treemorph/labeled.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace treemorph;

namespace {

// Plane spanning trees among all (n-1)-subsets of point pairs.
long brute_force_count(const PointSet& ps) {
    int n = ps.n();
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    int m = static_cast<int>(all.size());
    long count = 0;
    for (long mask = 0; mask < (1L << m); ++mask) {
        if (__builtin_popcountl(mask) != n - 1) continue;
        std::vector<Edge> es;
        for (int b = 0; b < m; ++b)
            if (mask >> b & 1) es.push_back(all[b]);
        count += !check_tree(ps, es);
    }
    return count;
}

std::vector<int> diameters(const PointSet& ps, bool sim) {
    auto nodes = enumerate_trees(ps);
    std::vector<int> out;
    for (Kind k : all_kinds) out.push_back(diameter(build_transition_graph(ps, nodes, GraphSpec{k, sim, false, false})).diameter);
    return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
    const long expect[] = {3, 12, 55, 273, 1428, 7752};
    for (int n = 3; n <= 8; ++n) {
        CHECK(static_cast<long>(enumerate_trees(convex_regular(n)).size()) == expect[n - 3]);
        CHECK(convex_tree_count(n) == expect[n - 3]);
    }
    CHECK(brute_force_count(convex_regular(3)) == 3);
    CHECK(brute_force_count(convex_regular(4)) == 12);
    CHECK(brute_force_count(convex_regular(5)) == 55);
    for (std::uint64_t seed : {1, 2, 3}) {
        PointSet ps = random_general(5, seed);
        CHECK(static_cast<long>(enumerate_trees(ps).size()) == brute_force_count(ps));
    }
    CHECK(enumerate_trees(convex_regular(4), true).size() == 12 * 6);
}

TEST_CASE("caps are enforced with a partial count") {
    GraphLimits lim;
    lim.enum_cap = 50;
    try {
        enumerate_trees(convex_regular(6), false, lim);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.partial() >= 50);
    }
    lim = GraphLimits{};
    lim.pair_cap = 1000;
    CHECK_THROWS_AS(build_transition_graph(convex_regular(6), GraphSpec{Kind::slide, true, false, false}, lim), CapExceeded);
}

TEST_CASE("exact single-operation diameters, convex") {
    CHECK(diameters(convex_regular(5), false) == std::vector<int>{4, 4, 4, 4, 4});
    CHECK(diameters(convex_regular(6), false) == std::vector<int>{5, 6, 6, 6, 6});
    CHECK(diameters(convex_regular(7), false) == std::vector<int>{6, 7, 7, 7, 8});
    for (int n = 5; n <= 7; ++n) {
        auto d = diameters(convex_regular(n), false);
        for (int k = 0; k < 5; ++k) {
            CHECK(d[k] <= 2 * n - 5);
            if (k < 4) CHECK(d[k] >= 3 * n / 2 - 5);
        }
    }
}

TEST_CASE("exact simultaneous diameters, convex") {
    CHECK(diameters(convex_regular(6), true) == std::vector<int>{1, 2, 3, 3, 4});
    CHECK(diameters(convex_regular(7), true) == std::vector<int>{1, 2, 3, 3, 5});
}

TEST_CASE("graph structure") {
    PointSet ps = convex_regular(6);
    auto nodes = enumerate_trees(ps);
    auto sx = build_transition_graph(ps, nodes, GraphSpec{Kind::exchange, true, false, false});
    for (int i = 0; i < sx.size(); ++i) CHECK(sx.adj[i].size() == nodes.size() - 1);
    auto sl = build_transition_graph(ps, nodes, GraphSpec{Kind::slide, false, false, false});
    for (int i = 0; i < sl.size(); ++i) CHECK(sl.adj[i].size() == 8u);
    std::vector<TransitionGraph> gs;
    for (Kind k : all_kinds) gs.push_back(build_transition_graph(ps, nodes, GraphSpec{k, false, false, false}));
    for (int k = 1; k < 5; ++k) CHECK(is_subgraph(gs[k], gs[k - 1]));
    CHECK(distance(gs[0], 7, 7) == 0);
    CHECK(diameter(gs[2], 1).diameter == diameter(gs[2], 3).diameter);
    CHECK(diameter(gs[2], 1).a == diameter(gs[2], 3).a);
    CHECK(describe(GraphSpec{Kind::slide, true, true, false}).find("slide") != std::string::npos);
}

TEST_CASE("disconnected graphs are reported with a census") {
    PointSet ps = convex_regular(4);
    auto g = build_transition_graph(ps, GraphSpec{Kind::slide, false, false, false});
    // Drop every edge of node 0.
    for (int w : g.adj[0]) g.adj[w].erase(std::find(g.adj[w].begin(), g.adj[w].end(), 0));
    g.adj[0].clear();
    DiameterResult d = diameter(g);
    CHECK_FALSE(d.connected);
    CHECK(d.component_sizes.size() == 2);
    CHECK(distance(g, 0, 1) == -1);
    CHECK(diameter_csv_row(ps, g, d).find("disconnected") != std::string::npos);
}

TEST_CASE("constructive traces are never shorter than the exact distance") {
    std::mt19937_64 rng(3);
    std::vector<PointSet> sets = {convex_regular(6), random_general(6, 13)};
    for (const auto& ps : sets) {
        auto nodes = enumerate_trees(ps);
        auto rot = build_transition_graph(ps, nodes, GraphSpec{Kind::rotation, false, false, false});
        auto srot = build_transition_graph(ps, nodes, GraphSpec{Kind::rotation, true, false, false});
        auto slide = build_transition_graph(ps, nodes, GraphSpec{Kind::slide, false, false, false});
        std::uniform_int_distribution<int> pick(0, static_cast<int>(nodes.size()) - 1);
        int p = extreme_point(ps);
        for (int r = 0; r < 40; ++r) {
            const Tree& a = nodes[pick(rng)];
            const Tree& b = nodes[pick(rng)];
            Trace x = star_by_rotations(ps, a, p);
            CHECK(x.size() >= distance(rot, rot.find(a), rot.find(replay(ps, x))));
            Trace y = star_by_sim_rotations(ps, a, p);
            CHECK(y.size() >= distance(srot, srot.find(a), srot.find(replay(ps, y))));
            if (ps.position() == Position::convex) {
                Trace z = convex_transform_by_slides(ps, a, b);
                CHECK(z.size() >= distance(slide, slide.find(a), slide.find(b)));
            }
        }
    }
    PointSet c5 = convex_regular(5);
    auto lab = build_transition_graph(c5, GraphSpec{Kind::rotation, false, false, true});
    std::uniform_int_distribution<int> pick(0, lab.size() - 1);
    for (int r = 0; r < 30; ++r) {
        const Tree& a = lab.nodes[pick(rng)];
        const Tree& b = lab.nodes[pick(rng)];
        Trace t = labeled_transform_rotations(c5, a, b);
        CHECK(t.size() >= distance(lab, lab.find(a), lab.find(b)));
    }
}

TEST_CASE("labeled diameters dominate unlabeled ones") {
    PointSet ps = convex_regular(5);
    auto un = diameters(ps, false);
    auto lnodes = enumerate_trees(ps, true);
    for (Kind k : all_kinds) {
        int d = diameter(build_transition_graph(ps, lnodes, GraphSpec{k, false, false, true})).diameter;
        CHECK(d >= un[static_cast<int>(k)]);
    }
}
