#include "treemorph/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace treemorph {

namespace {

void require_convex(const PointSet& ps, const char* who) {
    if (ps.position() != Position::convex) throw GeometryError(std::string(who) + ": point set must be in convex position");
}

}  // namespace

Edge default_root_hull_edge(const PointSet& ps, const Tree& t) {
    auto hull = hull_edges(ps);
    std::sort(hull.begin(), hull.end());
    for (const auto& h : hull)
        if (!t.has(h)) return h;
    throw GeometryError("tree contains every hull edge");
}

DualTree build_dual_tree(const PointSet& ps, const Tree& t) { return build_dual_tree(ps, t, default_root_hull_edge(ps, t)); }

DualTree build_dual_tree(const PointSet& ps, const Tree& t, const Edge& root_choice) {
    require_convex(ps, "build_dual_tree");
    int n = ps.n();
    if (n < 3) throw GeometryError("build_dual_tree: need at least 3 points");
    auto h = ps.hull();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[h[i]] = i;
    auto hull = hull_edges(ps);
    if (std::find(hull.begin(), hull.end(), root_choice) == hull.end())
        throw GeometryError("build_dual_tree: root choice " + to_string(root_choice) + " is not a hull edge");
    if (t.has(root_choice)) throw GeometryError("build_dual_tree: root choice " + to_string(root_choice) + " is a tree edge");

    // Plane graph of tree plus hull; around each vertex, neighbors sorted counterclockwise.
    // In convex position the counterclockwise order around v is the hull order starting after v.
    std::vector<std::vector<int>> around(n);
    auto add = [&](int a, int b) {
        if (std::find(around[a].begin(), around[a].end(), b) == around[a].end()) around[a].push_back(b);
        if (std::find(around[b].begin(), around[b].end(), a) == around[b].end()) around[b].push_back(a);
    };
    for (const auto& e : t.edges()) add(e.u, e.v);
    for (const auto& e : hull) add(e.u, e.v);
    for (int v = 0; v < n; ++v) {
        auto key = [&](int w) { return (pos[w] - pos[v] + n) % n; };
        std::sort(around[v].begin(), around[v].end(), [&](int a, int b) { return key(a) < key(b); });
    }
    // Face on the left of u->v continues with the clockwise successor of u around v.
    auto next_vertex = [&](int u, int v) {
        const auto& a = around[v];
        auto it = std::find(a.begin(), a.end(), u);
        return it == a.begin() ? a.back() : *(it - 1);
    };

    std::vector<char> used_flag(static_cast<std::size_t>(n) * n, 0);
    auto used = [&](int a, int b) -> char& { return used_flag[static_cast<std::size_t>(a) * n + b]; };
    DualTree dt;
    std::map<std::pair<int, int>, int> half_edge_cell;
    for (int s = 0; s < n; ++s)
        for (int w : around[s]) {
            if (used(s, w)) continue;
            std::vector<int> face;
            int a = s, b = w;
            bool outer = false;
            while (!used(a, b)) {
                used(a, b) = 1;
                face.push_back(a);
                int c = next_vertex(a, b);
                a = b;
                b = c;
            }
            // Outer face: the hull traversed clockwise, containing h[1] -> h[0].
            for (std::size_t i = 0; i < face.size(); ++i) {
                int x = face[i], y = face[(i + 1) % face.size()];
                if (x == h[1] && y == h[0]) outer = true;
            }
            if (outer) continue;
            Cell c;
            c.boundary = face;
            int missing = 0;
            for (std::size_t i = 0; i < face.size(); ++i) {
                Edge e(face[i], face[(i + 1) % face.size()]);
                if (!t.has(e)) {
                    c.hull_edge = e;
                    ++missing;
                }
            }
            if (missing != 1) throw std::logic_error("build_dual_tree: cell without a unique hull edge");
            int id = static_cast<int>(dt.cells.size());
            for (std::size_t i = 0; i < face.size(); ++i) half_edge_cell[{face[i], face[(i + 1) % face.size()]}] = id;
            dt.cells.push_back(std::move(c));
        }

    dt.edge_cells.assign(t.edges().size(), {-1, -1});
    std::vector<std::vector<std::pair<int, Edge>>> nb(dt.cells.size());
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        const Edge& e = t.edges()[i];
        auto fa = half_edge_cell.find({e.u, e.v});
        auto fb = half_edge_cell.find({e.v, e.u});
        int ca = fa == half_edge_cell.end() ? -1 : fa->second;
        int cb = fb == half_edge_cell.end() ? -1 : fb->second;
        dt.edge_cells[i] = {ca, cb};
        if (ca >= 0 && cb >= 0) {
            dt.adjacency.emplace_back(std::min(ca, cb), std::max(ca, cb));
            nb[ca].emplace_back(cb, e);
            nb[cb].emplace_back(ca, e);
        }
    }
    std::sort(dt.adjacency.begin(), dt.adjacency.end());

    dt.root = -1;
    for (std::size_t i = 0; i < dt.cells.size(); ++i)
        if (dt.cells[i].hull_edge == root_choice) dt.root = static_cast<int>(i);
    std::vector<bool> seen(dt.cells.size(), false);
    std::queue<int> q;
    q.push(dt.root);
    seen[dt.root] = true;
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (const auto& [d, e] : nb[c]) {
            if (seen[d]) continue;
            seen[d] = true;
            dt.cells[d].parent = c;
            dt.cells[d].parent_edge = e;
            q.push(d);
        }
    }
    return dt;
}

}  // namespace treemorph
