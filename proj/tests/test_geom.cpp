#include "treemorph/geom.hpp"

#include <catch_amalgamated.hpp>

using namespace treemorph;

TEST_CASE("orientation is exact far beyond 64 bits") {
    Int big("1000000000000000000000000000000000000000");  // 10^39
    Point a(big, big), b(big + 1, big + 1), c(big + 2, big + 2);
    CHECK(orientation(a, b, c) == Orientation::COLLINEAR);
    Point d(big + 2, big + 3);
    CHECK(orientation(a, b, d) == Orientation::CCW);
    CHECK(orientation(a, d, b) == Orientation::CW);

    // Fast path and GMP path agree on the same configuration.
    PointSet small({{0, 0}, {1, 1}, {2, 3}});
    PointSet large({a, b, d});
    CHECK(small.small());
    CHECK_FALSE(large.small());
    CHECK(small.orient(0, 1, 2) == large.orient(0, 1, 2));
}

TEST_CASE("crossing and triangle predicates on a square") {
    PointSet sq({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {6, 3}});
    CHECK(sq.cross(0, 2, 1, 3));
    CHECK_FALSE(sq.cross(0, 1, 1, 2));  // shared endpoint only
    CHECK_FALSE(sq.cross(0, 1, 2, 3));
    CHECK(sq.inside(0, 1, 2, 4));
    CHECK_FALSE(sq.inside(0, 1, 2, 3));
    CHECK(sq.blocks(0, 1, 2, 3, 4));  // segment from a corner into the triangle
    CHECK_FALSE(sq.blocks(0, 1, 3, 1, 2));
    CHECK_THROWS_AS(triangle_blocked({0, 0}, {1, 1}, {2, 2}, {}), GeometryError);
}

TEST_CASE("hull starts at the lowest-then-leftmost point and runs counterclockwise") {
    PointSet ps({{5, 5}, {0, 0}, {10, 0}, {10, 10}, {0, 10}, {-3, 1}});
    CHECK(ps.hull() == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("position classification") {
    PointSet c = convex_regular(12);
    CHECK(c.position() == Position::convex);
    PointSet g = random_general(30, 7);
    CHECK(g.position() == Position::general);
    PointSet bad({{0, 0}, {1, 1}, {2, 2}, {0, 5}});
    CHECK(check_position(bad) == Position::degenerate);
    CHECK(position_from_string(to_string(Position::convex)) == Position::convex);
    CHECK_THROWS(position_from_string("wobbly"));
}

TEST_CASE("generators are reproducible from their seed") {
    CHECK(random_general(40, 11).points() == random_general(40, 11).points());
    CHECK(random_general(40, 11).points() != random_general(40, 12).points());
    CHECK(generate("convex_regular", {9, 0}, 0).points() == convex_regular(9).points());
    CHECK_THROWS_AS(generate("spiral", {9, 0}, 0), GeometryError);
}

TEST_CASE("tower sets: perturbed to general position, levels verified by brute force") {
    for (int k : {2, 3}) {
        PointSet raw = binary_tower(k, false);
        CHECK(raw.n() == (1 << k) + 1);
        auto hk = binary_tower_heights(k);
        for (int x = 0; x < raw.n(); ++x) CHECK(raw[x].y == hk[x]);
        PointSet ps = binary_tower(k);
        CHECK(ps.position() != Position::degenerate);
        CHECK(verify_tower_levels(ps, k));
    }
    auto h = binary_tower_heights(2);  // n = 5: end points 1, odd x get 5^4, x = 2 gets 5^2
    CHECK(h == std::vector<Int>{1, Int(625), Int(25), Int(625), 1});
}

TEST_CASE("hexagon for the simultaneous rotation witness") {
    PointSet hex = sim_rotation_lb_points();
    CHECK(hex.n() == 6);
    CHECK(hex.position() == Position::convex);
}
