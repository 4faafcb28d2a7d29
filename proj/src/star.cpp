#include "treemorph/xform.hpp"

#include <algorithm>

namespace treemorph {

int extreme_point(const PointSet& ps) {
    if (ps.n() == 0) throw GeometryError("extreme_point: empty point set");
    return ps.hull().front();
}

void require_extreme(const PointSet& ps, int p) {
    auto h = ps.hull();
    if (std::find(h.begin(), h.end(), p) == h.end())
        throw GeometryError("point " + std::to_string(p) + " is not a vertex of the convex hull");
}

std::vector<int> radial_order(const PointSet& ps, int p) {
    std::vector<int> order;
    for (int i = 0; i < ps.n(); ++i)
        if (i != p) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ps.orient(p, a, b) > 0; });
    return order;
}

int ceil_log2(long n) {
    int k = 0;
    while ((1L << k) < n) ++k;
    return k;
}

Trace star_by_rotations(const PointSet& ps, const Tree& t, int p) {
    require_extreme(ps, p);
    int n = ps.n();
    TraceBuilder tb(ps, t, "star_by_rotations");
    auto order = radial_order(ps, p);
    while (!is_star_at(tb.current(), p)) {
        const Tree& cur = tb.current();
        auto parent = parent_array(cur, p);
        int before = cur.degree(p);
        bool done = false;
        for (int w : order) {
            if (parent[w] == p) continue;
            Edge out(parent[w], w), in(p, w);
            bool clear = true;
            for (const auto& f : cur.edges())
                if (f != out && ps.cross(p, w, f.u, f.v)) {
                    clear = false;
                    break;
                }
            if (!clear) continue;
            tb.move(out, in, Kind::rotation);
            done = true;
            break;
        }
        if (!done) throw std::logic_error("star_by_rotations: no rotation increases the degree of the extreme point");
        if (tb.current().degree(p) != before + 1) throw std::logic_error("star_by_rotations: degree did not increase");
    }
    return tb.finish(std::max(0, n - 2));
}

}  // namespace treemorph
