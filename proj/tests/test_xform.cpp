#include "treemorph/graphx.hpp"
#include "treemorph/xform.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace treemorph;

namespace {

void require_valid(const PointSet& ps, const Trace& tr, const Tree& end) {
    TraceCheck c = verify_trace(ps, tr);
    INFO(tr.algorithm << ": " << c.diagnosis);
    REQUIRE(c.ok);
    REQUIRE(c.final_tree == end);
    REQUIRE(tr.size() <= tr.bound);
}

}  // namespace

TEST_CASE("extreme points and radial order") {
    PointSet ps({{4, 6}, {0, 0}, {10, 0}, {10, 10}, {0, 10}});
    CHECK(extreme_point(ps) == ps.hull().front());
    CHECK_THROWS(require_extreme(ps, 0));
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(1024) == 10);
    auto order = radial_order(ps, 1);
    CHECK(order.size() == 4);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) CHECK(ps.orient(1, order[i], order[i + 1]) > 0);
}

TEST_CASE("star transforms on random general sets") {
    for (int n : {3, 5, 9, 17, 40, 90}) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            PointSet ps = random_general(n, seed * 31 + n);
            Tree t = random_tree(ps, seed);
            int p = extreme_point(ps);
            Tree s = star(n, p);
            Trace rot = star_by_rotations(ps, t, p);
            require_valid(ps, rot, s);
            CHECK(rot.size() <= n - 2);
            Trace sf = star_by_starify(ps, t, p);
            require_valid(ps, sf, s);
            CHECK(sf.size() <= ceil_log2(n));
            require_valid(ps, star_by_sim_rotations(ps, t, p), s);
            CHECK(star_by_sim_rotations(ps, t, p).size() <= 4L * ceil_log2(n));
            Trace et = star_by_empty_tri(ps, t, p);
            require_valid(ps, et, s);
            CHECK(et.size() <= static_cast<long>(4.0 * n * std::log2(n)));
            Trace st = star_by_sim_empty_tri(ps, t, p);
            require_valid(ps, st, s);
            CHECK(st.size() < 4L * n);
        }
    }
}

TEST_CASE("one starify step is a simultaneous compatible exchange reproduced by four rotation rounds") {
    PointSet ps = random_general(30, 77);
    Tree t = random_tree(ps, 3);
    int p = extreme_point(ps);
    auto step = starify_step(ps, t, p);
    CHECK(apply_sim_move(ps, t, step.move) == step.tree);
    CHECK(step.move.kind == Kind::compatible);
    auto rounds = starify_as_sim_rotations(ps, t, p);
    CHECK(rounds.size() <= 4);
    Tree cur = t;
    for (const auto& r : rounds) cur = apply_sim_move(ps, cur, r);
    CHECK(cur == step.tree);
    // Degree of p never decreases.
    CHECK(step.tree.degree(p) >= t.degree(p));
}

TEST_CASE("convex slide transforms") {
    for (int n : {3, 4, 6, 10, 25, 60}) {
        PointSet ps = convex_regular(n);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Tree a = random_tree(ps, seed), b = random_tree(ps, seed + 100);
            Trace tr = convex_transform_by_slides(ps, a, b);
            require_valid(ps, tr, b);
            CHECK(tr.size() <= std::max(0, 2 * n - 5));
            int p = extreme_point(ps);
            Trace ss = convex_star_by_sim_slides(ps, a, p);
            require_valid(ps, ss, star(n, p));
            CHECK(ss.size() <= static_cast<long>(120.0 * (std::log2(n) + 1.0)));
            for (const auto& step : ss.steps)
                if (const auto* m = std::get_if<SimMove>(&step)) {
                    CHECK(m->kind == Kind::slide);
                    CHECK(static_cast<int>(m->pairs.size()) <= slide_packing_max(n));
                }
        }
    }
}

TEST_CASE("path to path takes n-2 slides") {
    PointSet ps = convex_regular(9);
    auto h = ps.hull();
    Tree p1 = path(9, h);
    std::vector<int> rot(h.begin() + 3, h.end());
    rot.insert(rot.end(), h.begin(), h.begin() + 3);
    Tree p2 = path(9, rot);
    Trace tr = path_to_path_slides(ps, p1, p2);
    require_valid(ps, tr, p2);
    CHECK(tr.size() == 7);
    CHECK(path_to_path_slides(ps, p1, p1).size() == 0);
}

TEST_CASE("hull paths by two simultaneous empty-triangle rotations") {
    for (int n : {4, 7, 12, 33}) {
        PointSet ps = convex_regular(n);
        auto h = ps.hull();
        Edge avoid(h.back(), h.front());
        Tree hp = path(n, h);
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            Tree t = random_tree(ps, seed);
            Trace tr = convex_hull_path_by_sim_empty_tri(ps, t, avoid);
            require_valid(ps, tr, hp);
            CHECK(tr.size() <= 2);
            Trace back = convex_hull_path_by_sim_empty_tri(ps, random_tree(ps, seed + 50), avoid);
            Trace both = join_at_common(ps, tr, back, "pair", 4);
            CHECK(verify_trace(ps, both).ok);
            CHECK(both.size() <= 4);
        }
    }
}

TEST_CASE("special instances") {
    SECTION("disjoint compatible pair") {
        std::vector<PointSet> sets = {convex_regular(7), random_general(9, 4), random_general(15, 8)};
        for (const auto& ps : sets) {
            auto [a, b] = disjoint_compatible_pair(ps);
            CHECK_FALSE(check_tree(ps, a.edges()));
            CHECK_FALSE(check_tree(ps, b.edges()));
            for (const auto& e : a.edges())
                for (const auto& f : b.edges())
                    if (!(e == f)) CHECK_FALSE(ps.cross(e.u, e.v, f.u, f.v));
        }
    }
    SECTION("witness pair for simultaneous rotations is at least 3 apart") {
        PointSet hex = sim_rotation_lb_points();
        auto [a, b] = sim_rotation_lb_pair();
        auto g = build_transition_graph(hex, GraphSpec{Kind::rotation, true, false, false});
        CHECK(distance(g, g.find(a), g.find(b)) >= 3);
        CHECK(a.has(Edge(0, 3)));
    }
}

TEST_CASE("traces: corruption is caught at the corrupted step") {
    PointSet ps = convex_regular(8);
    Tree a = random_tree(ps, 1), b = random_tree(ps, 2);
    Trace tr = convex_transform_by_slides(ps, a, b);
    REQUIRE(tr.size() >= 2);
    Trace bad = tr;
    auto& m = std::get<Move>(bad.steps[1]);
    m.inserted = m.removed;
    TraceCheck c = verify_trace(ps, bad);
    CHECK_FALSE(c.ok);
    CHECK(c.failed_step == 1);
    Trace back = reversed(ps, tr);
    CHECK(verify_trace(ps, back).ok);
    CHECK(replay(ps, back) == a);
}
