#include "treemorph/graphx.hpp"
#include "treemorph/labeled.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

using namespace treemorph;

namespace {

std::vector<int> ids(int n) {
    std::vector<int> v(n - 1);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

void require_reaches(const PointSet& ps, const Trace& tr, const Tree& end) {
    TraceCheck c = verify_trace(ps, tr);
    INFO(tr.algorithm << ": " << c.diagnosis);
    REQUIRE(c.ok);
    REQUIRE(c.final_tree == end);
    REQUIRE(tr.size() <= tr.bound);
}

// Edge set restored, the labels of e and f exchanged, every other label kept.
void require_swap(const PointSet& ps, const Tree& t, const Trace& tr, const Edge& e, const Edge& f) {
    Tree end = replay(ps, tr);
    REQUIRE(verify_trace(ps, tr).ok);
    REQUIRE(end.edges() == t.edges());
    for (const auto& g : t.edges()) {
        int want = g == e ? t.label_of(f) : g == f ? t.label_of(e) : t.label_of(g);
        CHECK(end.label_of(g) == want);
    }
}

Tree shifted_star(int n, int c, int shift) {
    std::vector<int> l(n - 1);
    for (int i = 0; i < n - 1; ++i) l[i] = (i + shift) % (n - 1) + 1;
    return star(n, c, l);
}

}  // namespace

TEST_CASE("label permutation bookkeeping") {
    Tree t(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)}, {2, 3, 1});
    LabelPermutation p(t, {Edge(2, 3), Edge(1, 2), Edge(0, 1)});
    CHECK(p.label_at(0) == 1);
    CHECK(p.position_of(2) == 2);
    p.swap_positions(0, 2);
    CHECK(p.label_at(0) == 2);
    CHECK(p.position_of(1) == 2);
    p.rotate_along({0, 1, 2});
    CHECK(p.label_at(2) == 2);
    CHECK(p.label_at(0) == 3);
    CHECK(p.label_at(1) == 1);
}

TEST_CASE("swap gadgets") {
    SECTION("three slides on a triangle") {
        PointSet ps = convex_regular(6);
        Tree t = path(6, ps.hull()).with_labels(ids(6));
        auto h = ps.hull();
        Edge e(h[1], h[2]), f(h[2], h[3]);
        Trace tr = swap_gadget(ps, t, Gadget::adjacent3slides, e, f);
        CHECK(tr.size() == 3);
        require_swap(ps, t, tr, e, f);
        CHECK(quad_swap_plan(h[1], h[2], h[2], h[3]).size() == 3);
    }
    SECTION("quadrilateral rotations on hull edges") {
        PointSet ps = convex_regular(8);
        auto h = ps.hull();
        Tree t = path(8, h).with_labels(ids(8));
        for (int i = 0; i + 1 < 7; ++i)
            for (int j = i + 1; j < 7; ++j) {
                Edge e(h[i], h[i + 1]), f(h[j], h[j + 1]);
                Trace tr = swap_gadget(ps, t, Gadget::quad4rotations, e, f);
                CHECK(tr.size() == (j == i + 1 ? 3 : 4));
                require_swap(ps, t, tr, e, f);
            }
    }
    SECTION("seven rotations on the radial path") {
        PointSet ps = random_general(9, 21);
        int p = extreme_point(ps);
        std::vector<int> order{p};
        for (int v : radial_order(ps, p)) order.push_back(v);
        Tree t = validate_tree(ps, path(9, order).edges(), ids(9));
        for (int i = 0; i + 1 < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                Edge e(order[i], order[i + 1]), f(order[j], order[j + 1]);
                Trace tr = swap_gadget(ps, t, Gadget::path7rotations, e, f);
                CHECK(tr.size() <= 7);
                if (i == 0 && j == 1) CHECK(tr.size() <= 3);
                require_swap(ps, t, tr, e, f);
            }
    }
    SECTION("preconditions") {
        PointSet ps = convex_regular(6);
        Tree t = path(6, ps.hull()).with_labels(ids(6));
        auto h = ps.hull();
        CHECK_THROWS(swap_gadget(ps, t, Gadget::adjacent3slides, Edge(h[0], h[1]), Edge(h[3], h[4])));
        CHECK_THROWS(swap_gadget(ps, t.unlabeled(), Gadget::quad4rotations, Edge(h[0], h[1]), Edge(h[3], h[4])));
        CHECK(gadget_from_string(to_string(Gadget::path7rotations)) == Gadget::path7rotations);
    }
}

TEST_CASE("canonical balanced tree") {
    SECTION("n=3 is a path") {
        PointSet ps = convex_regular(3);
        auto bt = canonical_balanced_tree(ps, 0);
        CHECK(bt.tree.edges().size() == 2);
        CHECK(bt.height == 2);
    }
    SECTION("n=7 from v0 starts with the edge to p3") {
        PointSet ps = convex_regular(7);
        auto bt = canonical_balanced_tree(ps, 0);
        CHECK(bt.parent[3] == 0);
        CHECK(bt.tree.degree(0) == 1);
        for (int x : {1, 2, 4, 5, 6}) {
            int a = x;
            while (bt.parent[a] != 3) a = bt.parent[a];
            CHECK(bt.parent[a] == 3);
        }
    }
    SECTION("depth and empty (vertex, parent, grandparent) triangles") {
        for (int n : {9, 16, 33, 64, 100}) {
            PointSet ps = convex_regular(n);
            auto bt = canonical_balanced_tree(ps, ps.hull().front());
            CHECK(bt.height <= ceil_log2(n) + 1);
            for (int x = 0; x < n; ++x) {
                int p = bt.parent[x];
                if (p < 0 || bt.parent[p] < 0) continue;
                int g = bt.parent[p];
                for (const auto& e : bt.tree.edges()) CHECK_FALSE(ps.blocks(x, p, g, e.u, e.v));
            }
        }
        CHECK(canonical_balanced_tree(convex_regular(64), 0).height <= 7);
    }
}

TEST_CASE("labeled rotations") {
    PointSet ps = random_general(5, 9);
    Tree a = random_tree(ps, 1, true), b = random_tree(ps, 2, true);
    Trace tr = labeled_transform_rotations(ps, a, b);
    require_reaches(ps, tr, b);
    CHECK(tr.size() <= 33);
    CHECK(labeled_transform_rotations(ps, a, a).size() == 0);
    for (int n : {6, 12, 30}) {
        PointSet qs = random_general(n, n);
        Tree x = random_tree(qs, 4, true);
        std::vector<int> shifted = x.labels();
        std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
        Tree y = x.with_labels(shifted);
        Trace t2 = labeled_transform_rotations(qs, x, y);
        require_reaches(qs, t2, y);
        CHECK(t2.size() <= 11L * (n - 2));
    }
}

TEST_CASE("labeled simultaneous exchanges") {
    SECTION("shifted stars need exactly three") {
        for (int n : {4, 5}) {
            PointSet ps = convex_regular(n);
            Tree s1 = shifted_star(n, 0, 0), s2 = shifted_star(n, 0, 1);
            LowerCertificate cert = labeled_sim_lower_check(ps, s1, s2);
            CHECK(cert.at_least_3);
            CHECK(cert.intermediates > 0);
            CHECK_FALSE(labeled_sim_exchange_within_two(ps, s1, s2));
            Trace tr = labeled_sim_exchange_transform(ps, s1, s2, false);
            require_reaches(ps, tr, s2);
            CHECK(tr.size() == 3);
        }
    }
    SECTION("convex Case 2: two hull paths without a common labeled hull edge") {
        PointSet ps = convex_regular(6);
        auto h = ps.hull();
        Tree a = path(6, h).with_labels({1, 2, 3, 4, 5});
        std::vector<int> rot(h.begin() + 3, h.end());
        rot.insert(rot.end(), h.begin(), h.begin() + 3);
        Tree b = validate_tree(ps, path(6, rot).edges(), {5, 4, 3, 2, 1});
        for (bool compatible : {false, true}) {
            Trace tr = labeled_sim_exchange_transform(ps, a, b, compatible);
            require_reaches(ps, tr, b);
            CHECK(tr.size() <= 3);
        }
    }
    SECTION("bounds on random pairs, exhaustive at n=4") {
        PointSet c4 = convex_regular(4);
        auto all = enumerate_trees(c4, true);
        for (std::size_t i = 0; i < all.size(); i += 5)
            for (std::size_t j = 0; j < all.size(); j += 3) {
                Trace x = labeled_sim_exchange_transform(c4, all[i], all[j], false);
                require_reaches(c4, x, all[j]);
                CHECK(x.size() <= 3);
                Trace y = labeled_sim_exchange_transform(c4, all[i], all[j], true);
                require_reaches(c4, y, all[j]);
                CHECK(y.size() <= 4);
            }
        for (int n : {7, 15, 40}) {
            for (bool convex : {true, false}) {
                PointSet ps = convex ? convex_regular(n) : random_general(n, 3 * n);
                Tree a = random_tree(ps, 5, true), b = random_tree(ps, 6, true);
                Trace x = labeled_sim_exchange_transform(ps, a, b, false);
                require_reaches(ps, x, b);
                CHECK(x.size() <= 3);
                Trace y = labeled_sim_exchange_transform(ps, a, b, true);
                require_reaches(ps, y, b);
                CHECK(y.size() <= (convex ? 4 : labeled_sim_compatible_bound(n)));
            }
        }
    }
    SECTION("a shorter exchange path exists whenever the search says so") {
        PointSet ps = convex_regular(5);
        Tree a = random_tree(ps, 31, true), b = random_tree(ps, 32, true);
        bool two = labeled_sim_exchange_within_two(ps, a, b);
        auto g = build_transition_graph(ps, GraphSpec{Kind::exchange, true, false, true});
        int d = distance(g, g.find(a), g.find(b));
        CHECK(two == (d <= 2));
    }
}

TEST_CASE("labeled simultaneous empty-triangle rotations") {
    PointSet ps = random_general(12, 5);
    int p = extreme_point(ps);
    std::vector<int> rev = ids(12);
    std::reverse(rev.begin(), rev.end());
    Tree s1 = star(12, p, ids(12)), s2 = star(12, p, rev);
    Trace sort = star_label_sort(ps, s1, s2);
    require_reaches(ps, sort, s2);
    CHECK(sort.size() <= 3 * 11);
    for (const auto& st : sort.steps) CHECK(std::get<SimMove>(st).restricted);
    CHECK(labeled_sim_empty_tri_transform(ps, s1, s2).size() <= 3 * 11);

    PointSet big = random_general(40, 40);
    Tree a = random_tree(big, 1, true), b = random_tree(big, 2, true);
    Trace tr = labeled_sim_empty_tri_transform(big, a, b);
    require_reaches(big, tr, b);
    CHECK(tr.size() <= 12 * 40);
    CHECK(labeled_sim_empty_tri_transform(big, a, a).size() == 0);
}

TEST_CASE("labeled convex empty-triangle rotations") {
    PointSet ps = convex_regular(8);
    auto h = ps.hull();
    std::vector<int> rev = ids(8);
    std::reverse(rev.begin(), rev.end());
    Tree a = path(8, h).with_labels(ids(8)), b = path(8, h).with_labels(rev);
    Trace single = labeled_cx_empty_tri_transform(ps, a, b, false);
    require_reaches(ps, single, b);
    CHECK(single.size() <= 35);
    Trace sim = labeled_cx_empty_tri_transform(ps, a, b, true);
    require_reaches(ps, sim, b);

    PointSet big = convex_regular(64);
    Tree x = random_tree(big, 3, true), y = random_tree(big, 4, true);
    Trace s64 = labeled_cx_empty_tri_transform(big, x, y, true);
    require_reaches(big, s64, y);
    CHECK(s64.size() <= 104);
    Trace t64 = labeled_cx_empty_tri_transform(big, x, y, false);
    require_reaches(big, t64, y);
    CHECK(t64.size() <= 6 * 64 - 13);
    CHECK_THROWS(labeled_cx_empty_tri_transform(random_general(8, 1), random_tree(random_general(8, 1), 1, true),
                                                random_tree(random_general(8, 1), 2, true), false));
}

TEST_CASE("labeled convex slides") {
    PointSet ps = convex_regular(8);
    Tree a = path(8, ps.hull()).with_labels(ids(8));
    auto sw = ids(8);
    std::swap(sw[1], sw[5]);
    Tree b = a.with_labels(sw);
    Trace single = labeled_cx_slides_transform(ps, a, b, false);
    require_reaches(ps, single, b);
    CHECK(labeled_cx_slides_transform(ps, a, a, false).size() == 0);

    PointSet big = convex_regular(32);
    Tree x = random_tree(big, 7, true), y = random_tree(big, 8, true);
    Trace sim = labeled_cx_slides_transform(big, x, y, true);
    require_reaches(big, sim, y);
    CHECK(sim.size() <= static_cast<long>(2 * 120.0 * (std::log2(32.0) + 1)) + 3 * 31);
    Trace one = labeled_cx_slides_transform(big, x, y, false);
    require_reaches(big, one, y);
    CHECK(one.size() <= 2L * (2 * 32 - 5) + 6L * 30 * (ceil_log2(32) + 1));
}
