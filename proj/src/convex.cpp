#include "treemorph/xform.hpp"

#include <algorithm>
#include <functional>

namespace treemorph {

namespace {

void require_convex(const PointSet& ps, const char* who) {
    if (ps.position() != Position::convex) throw GeometryError(std::string(who) + ": point set must be in convex position");
}

// The single hull edge missing from a hull path; throws when t is not one.
Edge missing_hull_edge(const PointSet& ps, const Tree& t, const char* who) {
    auto hull = hull_edges(ps);
    std::vector<Edge> absent;
    for (const auto& e : hull)
        if (!t.has(e)) absent.push_back(e);
    if (absent.size() != 1 || static_cast<int>(hull.size()) != ps.n())
        throw std::invalid_argument(std::string(who) + ": tree is not a path of hull edges");
    return absent.front();
}

}  // namespace

std::vector<std::pair<Edge, Edge>> boundary_path_slides(const std::vector<int>& cycle, const Edge& missing1,
                                                        const Edge& missing2) {
    std::vector<std::pair<Edge, Edge>> out;
    if (missing1 == missing2) return out;
    int m = static_cast<int>(cycle.size());
    int b = -1;
    for (int i = 0; i < m; ++i)
        if (Edge(cycle[i], cycle[(i + 1) % m]) == missing2) b = i;
    if (b < 0) throw std::invalid_argument("boundary_path_slides: " + to_string(missing2) + " is not a cycle edge");
    // v[1..m] walks the cycle starting after missing2, so v[1]v[m] is missing2.
    std::vector<int> v(m + 1);
    for (int i = 1; i <= m; ++i) v[i] = cycle[(b + i) % m];
    int k = -1;
    for (int i = 1; i < m; ++i)
        if (Edge(v[i], v[i + 1]) == missing1) k = i;
    if (k < 0) throw std::invalid_argument("boundary_path_slides: " + to_string(missing1) + " is not a cycle edge");
    for (int i = 2; i <= k; ++i) out.emplace_back(Edge(v[i - 1], v[m]), Edge(v[i], v[m]));
    for (int j = m - 1; j >= k + 1; --j) out.emplace_back(Edge(v[k], v[j + 1]), Edge(v[k], v[j]));
    return out;
}

Trace path_to_path_slides(const PointSet& ps, const Tree& p1, const Tree& p2) {
    require_convex(ps, "path_to_path_slides");
    Edge m1 = missing_hull_edge(ps, p1, "path_to_path_slides");
    Edge m2 = missing_hull_edge(ps, p2, "path_to_path_slides");
    TraceBuilder tb(ps, p1, "path_to_path_slides");
    for (const auto& [out, in] : boundary_path_slides(ps.hull(), m1, m2)) tb.move(out, in, Kind::slide);
    if (tb.current().edges() != p2.edges()) throw std::logic_error("path_to_path_slides: did not reach the target path");
    return tb.finish(m1 == m2 ? 0 : ps.n() - 2);
}

Trace convex_path_by_slides(const PointSet& ps, const Tree& t, const Edge& root_edge) {
    require_convex(ps, "convex_path_by_slides");
    if (t.has(root_edge)) throw std::invalid_argument("convex_path_by_slides: root edge " + to_string(root_edge) + " is in the tree");
    TraceBuilder tb(ps, t, "convex_path_by_slides");
    if (ps.n() < 3) return tb.finish(0);
    auto dt = build_dual_tree(ps, t, root_edge);
    // A cell's slides stay inside it and keep every boundary edge except its parent edge,
    // so parents go before children.
    int m = static_cast<int>(dt.cells.size());
    std::vector<int> depth(m, -1);
    std::function<int(int)> d = [&](int i) { return depth[i] >= 0 ? depth[i] : depth[i] = dt.cells[i].parent < 0 ? 0 : d(dt.cells[i].parent) + 1; };
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d(a) < d(b); });
    for (int ci : order) {
        const Cell& c = dt.cells[ci];
        if (!c.parent_edge) continue;
        for (const auto& [out, in] : boundary_path_slides(c.boundary, c.hull_edge, *c.parent_edge)) tb.move(out, in, Kind::slide);
    }
    return tb.finish(ps.n() - dt.cells[dt.root].size());
}

std::pair<Trace, Trace> convex_slides_to_common_path(const PointSet& ps, const Tree& t1, const Tree& t2) {
    require_convex(ps, "convex_slides_to_common_path");
    if (ps.n() < 3) return {TraceBuilder(ps, t1, "convex_path_by_slides").finish(0), TraceBuilder(ps, t2, "convex_path_by_slides").finish(0)};
    Edge e0 = default_root_hull_edge(ps, t1);
    Trace a = convex_path_by_slides(ps, t1, e0);
    TraceBuilder tb(ps, t2, "convex_path_by_slides");
    if (t2.has(e0)) {
        // Slide e0 along a neighboring boundary edge of its cell.
        auto dt = build_dual_tree(ps, t2);
        auto [ca, cb] = dt.edge_cells[t2.index_of(e0)];
        const Cell& c = dt.cells[ca >= 0 ? ca : cb];
        int m = c.size();
        for (int i = 0; i < m; ++i) {
            int x = c.boundary[i], y = c.boundary[(i + 1) % m];
            if (Edge(x, y) != e0) continue;
            int after = c.boundary[(i + 2) % m], before = c.boundary[(i + m - 1) % m];
            if (t2.has(Edge(y, after))) tb.move(e0, Edge(x, after), Kind::slide);
            else tb.move(e0, Edge(before, y), Kind::slide);
            break;
        }
    }
    tb.append(convex_path_by_slides(ps, tb.current(), e0));
    return {a, tb.finish(ps.n() - 2)};
}

Trace convex_transform_by_slides(const PointSet& ps, const Tree& t1, const Tree& t2) {
    require_convex(ps, "convex_transform_by_slides");
    if (ps.n() < 3) return TraceBuilder(ps, t1, "convex_transform_by_slides").finish(0);
    auto [a, b] = convex_slides_to_common_path(ps, t1, t2);
    return join_at_common(ps, a, b, "convex_transform_by_slides", 2L * ps.n() - 5);
}

}  // namespace treemorph
