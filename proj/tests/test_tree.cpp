#include "treemorph/graphx.hpp"
#include "treemorph/tree.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace treemorph;

namespace {

std::vector<int> identity_labels(int n) {
    std::vector<int> ids(n - 1);
    std::iota(ids.begin(), ids.end(), 1);
    return ids;
}

// RLG with every vertex's tags replaced by their rank 1..deg, keyed by labels.
std::map<int, std::vector<std::pair<int, int>>> compressed(const ReducedLineGraph& g) {
    std::map<int, std::vector<std::pair<int, int>>> key;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> sorted = g.tags[v];
        std::sort(sorted.begin(), sorted.end());
        auto& row = key[g.labels[v]];
        for (std::size_t i = 0; i < g.nbrs[v].size(); ++i) {
            int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), g.tags[v][i]) - sorted.begin()) + 1;
            row.emplace_back(g.labels[g.nbrs[v][i]], rank);
        }
        std::sort(row.begin(), row.end());
    }
    return key;
}

}  // namespace

TEST_CASE("validation reports the offending edges") {
    PointSet sq({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    CHECK_NOTHROW(validate_tree(sq, {Edge(0, 1), Edge(1, 2), Edge(2, 3)}));
    auto crossing = check_tree(sq, {Edge(0, 2), Edge(1, 3), Edge(0, 1)});
    REQUIRE(crossing);
    CHECK(crossing->issue == TreeIssue::crossing);
    CHECK(crossing->witnesses.size() == 2);
    CHECK(check_tree(sq, {Edge(0, 1), Edge(1, 2)})->issue == TreeIssue::edge_count);
    CHECK(check_tree(sq, {Edge(0, 1), Edge(0, 1), Edge(2, 3)})->issue == TreeIssue::duplicate_edge);
    CHECK(check_tree(sq, {Edge(0, 1), Edge(1, 2), Edge(2, 7)})->issue == TreeIssue::bad_index);
    CHECK(check_tree(sq, {Edge(0, 1), Edge(1, 2), Edge(2, 3)}, {1, 1, 2})->issue == TreeIssue::bad_labels);
    try {
        validate_tree(sq, {Edge(0, 2), Edge(1, 3), Edge(0, 1)});
        FAIL("expected TreeError");
    } catch (const TreeError& e) {
        CHECK(e.issue() == TreeIssue::crossing);
    }
}

TEST_CASE("labels follow their edges") {
    Tree t(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)}, {3, 1, 2});
    CHECK(t.label_of(Edge(1, 2)) == 1);
    CHECK(t.edge_with_label(2) == Edge(2, 3));
    t.replace(Edge(1, 2), Edge(0, 3));
    CHECK(t.label_of(Edge(0, 3)) == 1);
    CHECK(t.edges() == std::vector<Edge>{Edge(0, 1), Edge(0, 3), Edge(2, 3)});
}

TEST_CASE("canonical keys are injective over every enumerated tree") {
    for (int n = 3; n <= 7; ++n) {
        auto trees = enumerate_trees(convex_regular(n));
        std::set<std::string> keys;
        for (const auto& t : trees) keys.insert(canonical_key(t));
        CHECK(keys.size() == trees.size());
    }
    auto labeled = enumerate_trees(convex_regular(5), true);
    std::set<std::string> keys;
    for (const auto& t : labeled) keys.insert(canonical_key(t));
    CHECK(keys.size() == labeled.size());
    CHECK(labeled.size() == 55 * 24);
}

TEST_CASE("cells of the dual tree: sizes minus two sum to n-2") {
    for (int n = 3; n <= 8; ++n) {
        PointSet ps = convex_regular(n);
        for (const auto& t : enumerate_trees(ps)) {
            DualTree dt = build_dual_tree(ps, t);
            long s = 0;
            for (const auto& c : dt.cells) s += c.size() - 2;
            REQUIRE(s == n - 2);
            CHECK(dt.cells[dt.root].hull_edge == default_root_hull_edge(ps, t));
            // One cell per hull edge missing from the tree.
            long missing = 0;
            for (const auto& h : hull_edges(ps)) missing += !t.has(h);
            CHECK(static_cast<long>(dt.cells.size()) == missing);
        }
    }
}

TEST_CASE("reduced line graphs: tags and reconstruction") {
    SECTION("tags are distinct, in 1..4, one per neighbor") {
        PointSet ps = convex_regular(7);
        for (const auto& t : enumerate_trees(ps)) {
            auto g = rlg_build(ps, t.with_labels(identity_labels(7)));
            for (int v = 0; v < g.vertex_count(); ++v) {
                std::set<int> seen(g.tags[v].begin(), g.tags[v].end());
                REQUIRE(seen.size() == g.nbrs[v].size());
                CHECK(*seen.begin() >= 1);
                CHECK(*seen.rbegin() <= 4);
            }
        }
    }
    SECTION("round trip up to symmetry, every tree n<=7 and random labelings") {
        std::mt19937_64 rng(5);
        for (int n = 3; n <= 7; ++n) {
            PointSet ps = convex_regular(n);
            for (const auto& t : enumerate_trees(ps)) {
                Tree lt = t.with_labels(identity_labels(n));
                REQUIRE(dihedral_equivalent(rlg_reconstruct(rlg_build(ps, lt), n), lt));
                auto lab = identity_labels(n);
                std::shuffle(lab.begin(), lab.end(), rng);
                Tree rt = t.with_labels(lab);
                REQUIRE(dihedral_equivalent(rlg_reconstruct(rlg_build(ps, rt), n), rt));
            }
        }
    }
    SECTION("injective on dihedral classes at n=5") {
        PointSet ps = convex_regular(5);
        auto all = enumerate_trees(ps, true);
        std::vector<Tree> reps;
        for (const auto& t : all) {
            bool fresh = true;
            for (const auto& r : reps)
                if (dihedral_equivalent(r, t)) fresh = false;
            if (fresh) reps.push_back(t);
        }
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                REQUIRE_FALSE(rlg_equal(rlg_build(ps, reps[i]), rlg_build(ps, reps[j])));
    }
}

TEST_CASE("tags compressed to 1..deg collide at n=4") {
    PointSet ps = convex_regular(4);
    auto all = enumerate_trees(ps, true);
    REQUIRE(all.size() == 72);
    std::vector<Tree> reps;
    for (const auto& t : all) {
        bool fresh = true;
        for (const auto& r : reps)
            if (dihedral_equivalent(r, t)) fresh = false;
        if (fresh) reps.push_back(t);
    }
    std::set<std::map<int, std::vector<std::pair<int, int>>>> keys;
    for (const auto& t : all) keys.insert(compressed(rlg_build(ps, t)));
    CHECK(reps.size() >= 9);
    CHECK(keys.size() == 6);
    CHECK(keys.size() < reps.size());  // so compressed tags cannot determine the tree
}

TEST_CASE("random trees are valid and reproducible") {
    PointSet ps = random_general(25, 3);
    Tree a = random_tree(ps, 9, true);
    CHECK_FALSE(check_tree(ps, a.edges(), a.labels()));
    CHECK(a == random_tree(ps, 9, true));
    CHECK(a.unlabeled() != random_tree(ps, 10).unlabeled());
}
