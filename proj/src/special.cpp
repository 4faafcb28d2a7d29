#include "treemorph/graphx.hpp"
#include "treemorph/xform.hpp"

#include <algorithm>

namespace treemorph {

std::pair<Tree, Tree> disjoint_compatible_pair(const PointSet& ps) {
    int n = ps.n();
    if (n < 2) throw std::invalid_argument("disjoint_compatible_pair: need at least 2 points");
    if (n == 2) {
        Tree t(2, {Edge(0, 1)});
        return {t, t};
    }
    auto hull = ps.hull();
    if (static_cast<int>(hull.size()) == n) {
        // Hull path v1..vn and the star at v1 share only v1v2.
        return {validate_tree(ps, path(n, hull).edges()), validate_tree(ps, star(n, hull.front()).edges())};
    }
    std::vector<char> on_hull(n, 0);
    for (int h : hull) on_hull[h] = 1;
    int v1 = static_cast<int>(std::find(on_hull.begin(), on_hull.end(), 0) - on_hull.begin());
    // Full-turn angular order around the interior point v1, starting from the direction +x.
    std::vector<int> r;
    for (int i = 0; i < n; ++i)
        if (i != v1) r.push_back(i);
    const Point& c = ps[v1];
    auto upper = [&](int i) {
        const Point& q = ps[i];
        return q.y > c.y || (q.y == c.y && q.x > c.x);
    };
    std::sort(r.begin(), r.end(), [&](int a, int b) {
        bool ua = upper(a), ub = upper(b);
        if (ua != ub) return ua;
        return ps.orient(v1, a, b) > 0;
    });
    int v2 = r[0], v3 = r[1];
    std::vector<Edge> a, b;
    for (int x : r)
        if (x != v2) a.emplace_back(v1, x);
    a.emplace_back(v2, v3);
    for (std::size_t i = 1; i < r.size(); ++i) b.emplace_back(r[i], r[(i + 1) % r.size()]);
    b.emplace_back(v1, v2);
    return {validate_tree(ps, a), validate_tree(ps, b)};
}

std::pair<Tree, Tree> sim_rotation_lb_pair() {
    PointSet ps = sim_rotation_lb_points();
    auto g = build_transition_graph(ps, {Kind::rotation, true, false, false});
    // Hexagon a..f is 0..5; the first rotation either keeps ad or turns it into ac, ae, bd or fd.
    const Edge ad(0, 3);
    const std::vector<Edge> images{ad, Edge(0, 2), Edge(0, 4), Edge(1, 3), Edge(3, 5)};
    auto blocked = [&](const Tree& t2, const Edge& e) {
        for (const auto& f : t2.edges())
            if (ps.cross(e.u, e.v, f.u, f.v)) return true;
        return false;
    };
    for (int i = 0; i < g.size(); ++i) {
        if (!g.nodes[i].has(ad)) continue;
        auto dist = bfs_distances(g, i);
        for (int j = 0; j < g.size(); ++j) {
            if (dist[j] < 3) continue;
            const Tree& t2 = g.nodes[j];
            if (std::all_of(images.begin(), images.end(), [&](const Edge& e) { return blocked(t2, e); })) return {g.nodes[i], t2};
        }
    }
    throw std::logic_error("sim_rotation_lb_pair: no pair at simultaneous-rotation distance 3 on the hexagon");
}

}  // namespace treemorph
