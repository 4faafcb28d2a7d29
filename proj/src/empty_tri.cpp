#include "treemorph/xform.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace treemorph {

namespace {

// One halving subproblem: p together with a contiguous range [lo, hi) of the radial order around p.
class Halving {
public:
    Halving(const PointSet& ps, int p) : ps_(ps), p_(p), order_(radial_order(ps, p)), rank_(ps.n(), -1) {
        for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = static_cast<int>(i);
    }

    struct Range {
        int lo, hi;
        std::vector<std::set<int>> tri;  // triangulation adjacency, filled on first use
        bool triangulated = false;
    };

    Range root() const { return Range{0, static_cast<int>(order_.size()), {}, false}; }

    /// Next rotation inside r, or nullopt when the ray at the median crosses no tree edge.
    std::optional<Move> next(const Tree& t, Range& r) const {
        if (r.hi - r.lo < 2) return std::nullopt;
        int mid = r.lo + (r.hi - r.lo) / 2;
        int best = -1;
        const auto& E = t.edges();
        for (int i = 0; i < static_cast<int>(E.size()); ++i)
            if (straddles(E[i], r, mid) && (best < 0 || below(E[best], E[i]))) best = i;
        if (best < 0) return std::nullopt;
        if (!r.triangulated) triangulate(t, r);
        Edge e = E[best];
        int a = e.u, b = e.v;
        int c = -1;
        for (int x : r.tri[a]) {
            if (!r.tri[b].count(x)) continue;
            if (ps_.orient(a, b, x) != ps_.orient(a, b, p_) && x != p_) continue;
            if (!empty_triangle(a, b, x, r)) continue;
            c = x;
            break;
        }
        if (c < 0) throw std::logic_error("star_by_empty_tri: no triangle below the farthest crossing edge");
        auto parent = parent_array(t, p_);
        // Side of a after removing e: walk up from c.
        bool c_with_a = on_side_of(parent, e, c, a);
        Edge f = c_with_a ? Edge(c, b) : Edge(a, c);
        return Move{e, f, Kind::empty_triangle};
    }

    std::pair<Range, Range> split(const Range& r) const {
        int mid = r.lo + (r.hi - r.lo) / 2;
        return {Range{r.lo, mid, {}, false}, Range{mid, r.hi, {}, false}};
    }

private:
    bool in_range(int x, const Range& r) const { return x != p_ && rank_[x] >= r.lo && rank_[x] < r.hi; }
    bool straddles(const Edge& e, const Range& r, int mid) const {
        if (!in_range(e.u, r) || !in_range(e.v, r)) return false;
        return (rank_[e.u] < mid) != (rank_[e.v] < mid);
    }
    bool beyond(const Edge& e, int x) const { return ps_.orient(e.u, e.v, x) != ps_.orient(e.u, e.v, p_); }
    bool within(const Edge& e, int x) const {
        int lo = std::min(rank_[e.u], rank_[e.v]), hi = std::max(rank_[e.u], rank_[e.v]);
        return rank_[x] > lo && rank_[x] < hi;
    }
    // a is closer to p than b where both straddle the same ray.
    bool below(const Edge& a, const Edge& b) const {
        for (int x : {b.u, b.v})
            if (!a.has(x) && within(a, x)) return beyond(a, x);
        for (int y : {a.u, a.v})
            if (!b.has(y) && within(b, y)) return !beyond(b, y);
        return a < b;
    }
    bool empty_triangle(int a, int b, int c, const Range& r) const {
        for (int i = r.lo; i < r.hi; ++i) {
            int x = order_[i];
            if (x != a && x != b && x != c && ps_.inside(a, b, c, x)) return false;
        }
        return true;
    }
    static bool on_side_of(const std::vector<int>& parent, const Edge& e, int c, int a) {
        // Vertices below the child endpoint of e form one side.
        int child = parent[e.u] == e.v ? e.u : e.v;
        bool c_below = false;
        for (int x = c; x >= 0; x = parent[x])
            if (x == child) {
                c_below = true;
                break;
            }
        bool a_below = a == child;
        return c_below == a_below;
    }
    void triangulate(const Tree& t, Range& r) const {
        std::vector<int> vs{p_};
        for (int i = r.lo; i < r.hi; ++i) vs.push_back(order_[i]);
        std::sort(vs.begin(), vs.end());
        std::vector<Edge> edges;
        for (const auto& e : t.edges())
            if ((e.u == p_ || in_range(e.u, r)) && (e.v == p_ || in_range(e.v, r))) edges.push_back(e);
        std::set<Edge> have(edges.begin(), edges.end());
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                Edge c(vs[i], vs[j]);
                if (have.count(c)) continue;
                bool ok = true;
                for (const auto& f : edges)
                    if (ps_.cross(c.u, c.v, f.u, f.v)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                edges.push_back(c);
                have.insert(c);
            }
        r.tri.assign(ps_.n(), {});
        for (const auto& e : edges) {
            r.tri[e.u].insert(e.v);
            r.tri[e.v].insert(e.u);
        }
        r.triangulated = true;
    }

    const PointSet& ps_;
    int p_;
    std::vector<int> order_;
    std::vector<int> rank_;
};

long empty_tri_bound(int n) { return n < 2 ? 0 : static_cast<long>(std::floor(4.0 * n * std::log2(static_cast<double>(n)))); }

}  // namespace

Trace star_by_empty_tri(const PointSet& ps, const Tree& t, int p) {
    require_extreme(ps, p);
    Halving h(ps, p);
    TraceBuilder tb(ps, t, "star_by_empty_tri");
    std::vector<Halving::Range> stack{h.root()};
    while (!stack.empty()) {
        Halving::Range r = std::move(stack.back());
        stack.pop_back();
        while (auto m = h.next(tb.current(), r)) tb.move(m->removed, m->inserted, m->kind);
        if (r.hi - r.lo >= 2) {
            auto [a, b] = h.split(r);
            stack.push_back(std::move(b));
            stack.push_back(std::move(a));
        }
    }
    if (!is_star_at(tb.current(), p)) throw std::logic_error("star_by_empty_tri: did not reach the star");
    return tb.finish(empty_tri_bound(ps.n()));
}

Trace star_by_sim_empty_tri(const PointSet& ps, const Tree& t, int p) {
    require_extreme(ps, p);
    Halving h(ps, p);
    TraceBuilder tb(ps, t, "star_by_sim_empty_tri");
    std::vector<Halving::Range> active{h.root()};
    while (!active.empty()) {
        SimMove step;
        step.kind = Kind::empty_triangle;
        std::vector<Halving::Range> next;
        std::vector<Halving::Range> work = std::move(active);
        while (!work.empty()) {
            Halving::Range r = std::move(work.back());
            work.pop_back();
            if (auto m = h.next(tb.current(), r)) {
                step.pairs.emplace_back(m->removed, m->inserted);
                next.push_back(std::move(r));
            } else if (r.hi - r.lo >= 2) {
                auto [a, b] = h.split(r);
                work.push_back(std::move(a));
                work.push_back(std::move(b));
            }
        }
        tb.sim(std::move(step));
        active = std::move(next);
    }
    if (!is_star_at(tb.current(), p)) throw std::logic_error("star_by_sim_empty_tri: did not reach the star");
    return tb.finish(std::max(0L, 4L * ps.n() - 1));
}

Trace convex_hull_path_by_sim_empty_tri(const PointSet& ps, const Tree& t, const Edge& avoid) {
    if (ps.position() != Position::convex) throw GeometryError("convex_hull_path_by_sim_empty_tri: point set must be in convex position");
    auto hull = hull_edges(ps);
    if (std::find(hull.begin(), hull.end(), avoid) == hull.end())
        throw GeometryError("convex_hull_path_by_sim_empty_tri: " + to_string(avoid) + " is not a hull edge");
    TraceBuilder tb(ps, t, "convex_hull_path_by_sim_empty_tri");
    if (ps.n() < 3) return tb.finish(2);

    Edge root_choice = avoid;
    if (t.has(avoid)) {
        auto dt = build_dual_tree(ps, t);
        auto [ca, cb] = dt.edge_cells[t.index_of(avoid)];
        root_choice = dt.cells[ca >= 0 ? ca : cb].hull_edge;
    }
    auto dt = build_dual_tree(ps, t, root_choice);
    SimMove first, second;
    first.kind = second.kind = Kind::empty_triangle;
    for (int ci = 0; ci < static_cast<int>(dt.cells.size()); ++ci) {
        const Cell& c = dt.cells[ci];
        Edge moving;
        if (c.parent_edge) moving = *c.parent_edge;
        else if (t.has(avoid)) moving = avoid;
        else continue;
        // Orient both edges along the counterclockwise boundary: x -> y, then y ... x2 -> y2 ... x.
        const auto& b = c.boundary;
        int m = c.size();
        int x = -1, y = -1, x2 = -1, y2 = -1;
        for (int i = 0; i < m; ++i) {
            Edge e(b[i], b[(i + 1) % m]);
            if (e == moving) x = b[i], y = b[(i + 1) % m];
            if (e == c.hull_edge) x2 = b[i], y2 = b[(i + 1) % m];
        }
        if (x < 0 || x2 < 0) throw std::logic_error("convex_hull_path_by_sim_empty_tri: cell boundary is missing an edge");
        Edge mid = moving;
        if (x2 != y) {
            mid = Edge(x, x2);
            first.pairs.emplace_back(moving, mid);
        }
        if (x != y2) second.pairs.emplace_back(mid, Edge(x2, y2));
    }
    tb.sim(std::move(first));
    tb.sim(std::move(second));
    std::vector<Edge> goal;
    for (const auto& e : hull)
        if (e != avoid) goal.push_back(e);
    std::sort(goal.begin(), goal.end());
    if (tb.current().edges() != goal) throw std::logic_error("convex_hull_path_by_sim_empty_tri: did not reach the hull path");
    return tb.finish(2);
}

}  // namespace treemorph
