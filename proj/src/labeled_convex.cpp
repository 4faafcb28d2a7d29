#include "labeled_util.hpp"

#include <algorithm>
#include <functional>

namespace treemorph {

using namespace detail;

namespace {

void require_convex_labeled(const PointSet& ps, const char* who) {
    if (ps.position() != Position::convex) throw GeometryError(std::string(who) + ": point set must be in convex position");
}

// Quadrilateral (or triangle, when b == c) spanned by the path edges ab and cd.
std::vector<int> swap_polygon(int a, int b, int c, int d) {
    if (b == c) return {a, b, d};
    return {a, b, c, d};
}

bool polygons_interior_disjoint(const PointSet& ps, const std::vector<int>& x, const std::vector<int>& y) {
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
        for (std::size_t j = 1; j + 1 < y.size(); ++j)
            if (!triangle_interiors_disjoint(ps, x[0], x[i], x[i + 1], y[0], y[j], y[j + 1])) return false;
    return true;
}

}  // namespace

Trace labeled_cx_empty_tri_transform(const PointSet& ps, const Tree& t1, const Tree& t2, bool simultaneous) {
    require_convex_labeled(ps, "labeled_cx_empty_tri_transform");
    require_labeled_pair(ps, t1, t2, "labeled_cx_empty_tri_transform");
    const int n = ps.n();
    const long bound = n < 3 ? 0 : simultaneous ? 8L + 16L * ceil_log2(n) : 6L * n - 13;
    TraceBuilder tb(ps, t1, "labeled_cx_empty_tri_transform");
    if (t1 == t2 || n < 3) return tb.finish(bound);

    Trace a, b;
    if (simultaneous) {
        const auto hull = ps.hull();
        Edge avoid(hull.back(), hull.front());
        a = relabel(convex_hull_path_by_sim_empty_tri(ps, t1.unlabeled(), avoid), t1);
        b = relabel(convex_hull_path_by_sim_empty_tri(ps, t2.unlabeled(), avoid), t2);
    } else {
        auto [x, y] = convex_slides_to_common_path(ps, t1.unlabeled(), t2.unlabeled());
        a = relabel(std::move(x), t1);
        b = relabel(std::move(y), t2);
    }
    tb.append(a);
    const Tree goal = replay(ps, b);
    const std::vector<int> v = path_vertices(tb.current());
    std::vector<Edge> slots;
    for (int k = 0; k + 1 < n; ++k) slots.emplace_back(v[k], v[k + 1]);
    LabelPermutation perm(tb.current(), slots);
    std::vector<int> target(n, 0);  // label -> slot in the goal
    for (int k = 0; k + 1 < n; ++k) target[goal.label_of(slots[k])] = k;

    if (!simultaneous) {
        for (int i = 0; i + 1 < n; ++i) {
            int want = goal.label_of(slots[i]);
            if (perm.label_at(i) == want) continue;
            int j = perm.position_of(want);
            tb.append(swap_gadget(ps, tb.current(), Gadget::quad4rotations, slots[i], slots[j]));
            perm.swap_positions(i, j);
        }
    } else {
        // Halve every segment per wave; labels bound for the other half trade places pairwise.
        std::vector<std::pair<int, int>> segments{{0, n - 1}};
        while (!segments.empty()) {
            std::vector<std::pair<int, int>> swaps, next;
            for (auto [lo, hi] : segments) {
                if (hi - lo < 2) continue;
                int mid = lo + (hi - lo) / 2;
                std::vector<int> m1, m2;
                for (int k = lo; k < mid; ++k)
                    if (target[perm.label_at(k)] >= mid) m1.push_back(k);
                for (int k = mid; k < hi; ++k)
                    if (target[perm.label_at(k)] < mid) m2.push_back(k);
                if (m1.size() != m2.size()) throw std::logic_error("labeled_cx_empty_tri_transform: unbalanced halves");
                for (std::size_t k = 0; k < m1.size(); ++k) swaps.emplace_back(m1[k], m2[m2.size() - 1 - k]);
                next.emplace_back(lo, mid);
                next.emplace_back(mid, hi);
            }
            std::vector<std::vector<std::pair<Edge, Edge>>> plans;
            std::vector<std::vector<int>> polys;
            for (auto [i, j] : swaps) {
                plans.push_back(quad_swap_plan(v[i], v[i + 1], v[j], v[j + 1]));
                polys.push_back(swap_polygon(v[i], v[i + 1], v[j], v[j + 1]));
            }
            for (std::size_t x = 0; x < polys.size(); ++x)
                for (std::size_t y = x + 1; y < polys.size(); ++y)
                    if (!polygons_interior_disjoint(ps, polys[x], polys[y]))
                        throw std::logic_error("labeled_cx_empty_tri_transform: swap polygons overlap within a wave");
            for (std::size_t s = 0; s < 4; ++s) {
                SimMove mv{{}, Kind::empty_triangle, false};
                for (const auto& pl : plans)
                    if (s < pl.size()) mv.pairs.push_back(pl[s]);
                tb.sim(mv);
            }
            for (auto [i, j] : swaps) perm.swap_positions(i, j);
            segments = std::move(next);
        }
    }
    for (int k = 0; k + 1 < n; ++k)
        if (target[perm.label_at(k)] != k) throw std::logic_error("labeled_cx_empty_tri_transform: labels not in place");
    tb.append(reversed(ps, b));
    return tb.finish(bound);
}

// ---------------------------------------------------------------------------

BalancedTree canonical_balanced_tree(const PointSet& ps, int r) {
    require_convex_labeled(ps, "canonical_balanced_tree");
    require_extreme(ps, r);
    const int n = ps.n();
    BalancedTree bt;
    bt.root = r;
    bt.parent.assign(n, -1);
    bt.depth.assign(n, 0);
    std::vector<Edge> edges;
    std::function<void(int, std::vector<int>)> grow = [&](int root, std::vector<int> rest) {
        if (rest.empty()) return;
        std::sort(rest.begin(), rest.end(), [&](int a, int b) { return ps.orient(root, a, b) > 0; });
        std::size_t m = (rest.size() + 1) / 2;
        int y = rest[m - 1];
        edges.emplace_back(root, y);
        bt.parent[y] = root;
        bt.depth[y] = bt.depth[root] + 1;
        bt.height = std::max(bt.height, bt.depth[y]);
        grow(y, std::vector<int>(rest.begin(), rest.begin() + static_cast<long>(m) - 1));
        grow(y, std::vector<int>(rest.begin() + static_cast<long>(m), rest.end()));
    };
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
        if (i != r) rest.push_back(i);
    grow(r, rest);
    bt.tree = validate_tree(ps, edges);
    return bt;
}

Trace labeled_cx_slides_transform(const PointSet& ps, const Tree& t1, const Tree& t2, bool simultaneous) {
    require_convex_labeled(ps, "labeled_cx_slides_transform");
    require_labeled_pair(ps, t1, t2, "labeled_cx_slides_transform");
    const int n = ps.n();
    const long bound = n < 3 ? 0
                       : simultaneous ? 2 * sim_slide_bound(n) + 3L * (n - 1)
                                      : 2L * (2 * n - 5) + 6L * (n - 2) * (ceil_log2(n) + 1);
    TraceBuilder tb(ps, t1, "labeled_cx_slides_transform");
    if (t1 == t2 || n < 3) return tb.finish(bound);
    const int r = extreme_point(ps);

    if (simultaneous) {
        Trace a = relabel(convex_star_by_sim_slides(ps, t1.unlabeled(), r), t1);
        Trace b = relabel(convex_star_by_sim_slides(ps, t2.unlabeled(), r), t2);
        tb.append(a);
        tb.append(star_label_sort(ps, tb.current(), replay(ps, b)));
        tb.append(reversed(ps, b));
        return tb.finish(bound);
    }

    const BalancedTree bt = canonical_balanced_tree(ps, r);
    Trace a = relabel(convex_transform_by_slides(ps, t1.unlabeled(), bt.tree), t1);
    Trace b = relabel(convex_transform_by_slides(ps, t2.unlabeled(), bt.tree), t2);
    tb.append(a);
    const Tree goal = replay(ps, b);
    // Slot x is the edge from x to its parent; slots of a vertex and its parent are swapped by three slides.
    auto slot = [&](int x) { return Edge(x, bt.parent[x]); };
    auto up = [&](int x) { return bt.parent[x] == r ? -1 : bt.parent[x]; };
    std::vector<int> todo;
    for (int x = 0; x < n; ++x)
        if (x != r) todo.push_back(x);
    // Deepest first: the slots still open always form a connected subtree.
    std::stable_sort(todo.begin(), todo.end(), [&](int x, int y) { return bt.depth[x] > bt.depth[y]; });
    for (int y : todo) {
        int want = goal.label_of(slot(y));
        Edge at = tb.current().edge_with_label(want);
        int x = at.u == bt.parent[at.v] ? at.v : at.u;
        if (x == y) continue;
        std::vector<int> from_x{x}, from_y{y};
        while (bt.depth[from_x.back()] > bt.depth[from_y.back()]) from_x.push_back(up(from_x.back()));
        while (bt.depth[from_y.back()] > bt.depth[from_x.back()]) from_y.push_back(up(from_y.back()));
        while (from_x.back() != from_y.back()) {
            from_x.push_back(up(from_x.back()));
            from_y.push_back(up(from_y.back()));
        }
        from_y.pop_back();
        std::vector<int> route = from_x;
        route.insert(route.end(), from_y.rbegin(), from_y.rend());
        for (std::size_t k = 1; k < route.size(); ++k)
            tb.append(swap_gadget(ps, tb.current(), Gadget::adjacent3slides, slot(route[k - 1]), slot(route[k])));
    }
    if (tb.current() != goal) throw std::logic_error("labeled_cx_slides_transform: labels not in place");
    tb.append(reversed(ps, b));
    return tb.finish(bound);
}

}  // namespace treemorph
