#include "treemorph/tree.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace treemorph {

namespace {

// Four neighbor slots of a tree edge (u,v), u<v, in counterclockwise order around the union of its cells:
// 0 = next in the cell traversing u->v (at v), 1 = previous in that cell (at u),
// 2 = next in the cell traversing v->u (at u), 3 = previous in that cell (at v).
using Slots = std::array<int, 4>;

std::vector<Slots> edge_slots(const Tree& t, const DualTree& dt) {
    std::vector<Slots> slots(t.edges().size(), Slots{-1, -1, -1, -1});
    for (const auto& cell : dt.cells) {
        const auto& b = cell.boundary;
        int m = cell.size();
        int k = 0;
        while (Edge(b[k], b[(k + 1) % m]) != cell.hull_edge) ++k;
        std::vector<int> pathv(m);
        for (int j = 0; j < m; ++j) pathv[j] = b[(k + 1 + j) % m];
        std::vector<int> ids(m - 1);
        for (int j = 0; j + 1 < m; ++j) ids[j] = t.index_of(Edge(pathv[j], pathv[j + 1]));
        for (int j = 0; j + 1 < m; ++j) {
            bool forward = pathv[j] < pathv[j + 1];
            int next = j + 2 < m ? ids[j + 1] : -1;
            int prev = j >= 1 ? ids[j - 1] : -1;
            auto& s = slots[ids[j]];
            if (forward) {
                s[0] = next;
                s[1] = prev;
            } else {
                s[2] = next;
                s[3] = prev;
            }
        }
    }
    return slots;
}

int vertex_label(const ReducedLineGraph& g, int v) { return g.labels.empty() ? v + 1 : g.labels[v]; }

// Tags for one vertex from its slot occupancy: the frame is turned by two slots when needed so that
// the neighbor with the smallest label sits in slot 0 or 1.
void assign_tags(ReducedLineGraph& g, int v, const std::array<int, 4>& slot_nbr) {
    int best = -1, best_slot = 0;
    for (int s = 0; s < 4; ++s) {
        int w = slot_nbr[s];
        if (w < 0) continue;
        if (best < 0 || vertex_label(g, w) < vertex_label(g, best)) {
            best = w;
            best_slot = s;
        }
    }
    int turn = best_slot >= 2 ? 2 : 0;
    std::vector<std::pair<int, int>> entries;
    for (int s = 0; s < 4; ++s)
        if (slot_nbr[s] >= 0) entries.emplace_back((s + turn) % 4 + 1, slot_nbr[s]);
    std::sort(entries.begin(), entries.end());
    g.nbrs[v].clear();
    g.tags[v].clear();
    for (auto [tag, w] : entries) {
        g.nbrs[v].push_back(w);
        g.tags[v].push_back(tag);
    }
}

const PointSet& regular(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PointSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<PointSet>(convex_regular(n));
    return *slot;
}

// Removes vertex x and re-tags its neighbors from their remaining slots.
ReducedLineGraph remove_leaf(const ReducedLineGraph& g, int x) {
    int m = g.vertex_count();
    std::vector<int> remap(m, -1);
    for (int v = 0, k = 0; v < m; ++v)
        if (v != x) remap[v] = k++;
    ReducedLineGraph h;
    h.nbrs.resize(m - 1);
    h.tags.resize(m - 1);
    h.labels.resize(m - 1);
    for (int v = 0; v < m; ++v)
        if (v != x) h.labels[remap[v]] = vertex_label(g, v);
    for (int v = 0; v < m; ++v) {
        if (v == x) continue;
        std::array<int, 4> slot_nbr{-1, -1, -1, -1};
        for (std::size_t i = 0; i < g.nbrs[v].size(); ++i)
            if (g.nbrs[v][i] != x) slot_nbr[g.tags[v][i] - 1] = remap[g.nbrs[v][i]];
        assign_tags(h, remap[v], slot_nbr);
    }
    return h;
}

Tree insert_leaf(const Tree& base, int q, int after, int label) {
    // New hull vertex placed between base vertices `after` and `after+1`.
    int m = base.n();
    auto map = [&](int i) { return i <= after ? i : i + 1; };
    int p = after + 1;
    std::vector<Edge> es;
    std::vector<int> labs = base.labels();
    for (const auto& e : base.edges()) es.emplace_back(map(e.u), map(e.v));
    es.emplace_back(p, map(q));
    labs.push_back(label);
    return Tree(m + 1, es, labs);
}

std::optional<Tree> reconstruct_rec(const ReducedLineGraph& g) {
    int m = g.vertex_count();
    int n = m + 1;
    std::vector<int> labs(m);
    for (int v = 0; v < m; ++v) labs[v] = vertex_label(g, v);
    if (m == 1) return Tree(2, {Edge(0, 1)}, {labs[0]});
    if (m == 2) {
        if (g.nbrs[0].size() != 1) return std::nullopt;
        for (int a = 0; a < 2; ++a) {
            Tree cand(3, {Edge(0, 1), Edge(1, 2)}, {labs[a], labs[1 - a]});
            if (rlg_equal(rlg_build(regular(3), cand), g)) return cand;
        }
        return std::nullopt;
    }
    for (int x = 0; x < m; ++x) {
        if (g.nbrs[x].size() != 1) continue;
        int f = g.nbrs[x][0];
        auto sub = reconstruct_rec(remove_leaf(g, x));
        if (!sub) continue;
        for (int refl = 0; refl < 2; ++refl) {
            Tree base = refl ? dihedral_image(*sub, 0, true) : *sub;
            Edge fe = base.edge_with_label(vertex_label(g, f));
            for (int q : {fe.u, fe.v})
                for (int after : {q, (q - 1 + n - 1) % (n - 1)}) {
                    Tree cand = insert_leaf(base, q, after, vertex_label(g, x));
                    if (rlg_equal(rlg_build(regular(n), cand), g)) return cand;
                }
        }
    }
    return std::nullopt;
}

}  // namespace

int ReducedLineGraph::edge_count() const {
    int s = 0;
    for (const auto& a : nbrs) s += static_cast<int>(a.size());
    return s / 2;
}

int ReducedLineGraph::max_degree() const {
    int d = 0;
    for (const auto& a : nbrs) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int ReducedLineGraph::by_tag(int v, int t) const {
    for (std::size_t i = 0; i < tags[v].size(); ++i)
        if (tags[v][i] == t) return nbrs[v][i];
    return -1;
}

ReducedLineGraph rlg_build(const PointSet& ps, const Tree& t) {
    if (ps.position() != Position::convex) throw GeometryError("rlg_build: point set must be in convex position");
    ReducedLineGraph g;
    int m = static_cast<int>(t.edges().size());
    g.labels = t.labels();
    g.nbrs.resize(m);
    g.tags.resize(m);
    if (m <= 1) return g;
    auto dt = build_dual_tree(ps, t);
    auto slots = edge_slots(t, dt);
    for (int v = 0; v < m; ++v) assign_tags(g, v, slots[v]);
    return g;
}

bool rlg_equal(const ReducedLineGraph& a, const ReducedLineGraph& b) {
    int m = a.vertex_count();
    if (m != b.vertex_count()) return false;
    std::map<int, int> where;
    for (int v = 0; v < m; ++v) where[vertex_label(b, v)] = v;
    if (static_cast<int>(where.size()) != m) return false;
    for (int v = 0; v < m; ++v) {
        auto it = where.find(vertex_label(a, v));
        if (it == where.end()) return false;
        int w = it->second;
        std::vector<std::pair<int, int>> ea, eb;
        for (std::size_t i = 0; i < a.nbrs[v].size(); ++i) ea.emplace_back(a.tags[v][i], vertex_label(a, a.nbrs[v][i]));
        for (std::size_t i = 0; i < b.nbrs[w].size(); ++i) eb.emplace_back(b.tags[w][i], vertex_label(b, b.nbrs[w][i]));
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        if (ea != eb) return false;
    }
    return true;
}

Tree rlg_reconstruct(const ReducedLineGraph& g, int n) {
    if (g.vertex_count() != n - 1) throw std::invalid_argument("rlg_reconstruct: graph must have n-1 vertices");
    if (n < 2) throw std::invalid_argument("rlg_reconstruct: n must be at least 2");
    auto t = reconstruct_rec(g);
    if (!t) throw std::invalid_argument("rlg_reconstruct: graph is not realizable on the regular n-gon");
    return g.labels.empty() ? t->unlabeled() : *t;
}

}  // namespace treemorph
