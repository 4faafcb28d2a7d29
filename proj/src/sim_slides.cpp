#include "treemorph/xform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace treemorph {

long sim_slide_bound(int n) {
    if (n < 2) return 0;
    return static_cast<long>(std::floor(kSimSlideConstant * (std::log2(static_cast<double>(n)) + 1.0)));
}

namespace {

using Pairs = std::vector<std::pair<Edge, Edge>>;

// The surviving vertices, as a point set of their own.
struct Survivors {
    std::vector<int> global;  // local -> global, increasing
    std::vector<int> local;   // global -> local or -1
    PointSet ps;

    Survivors(const PointSet& all, const std::vector<int>& verts) : global(verts), local(all.n(), -1) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            local[verts[i]] = static_cast<int>(i);
            pts.push_back(all[verts[i]]);
        }
        ps = PointSet(std::move(pts), Position::convex);
    }
    int n() const { return static_cast<int>(global.size()); }
    Tree restrict(const Tree& t) const {
        std::vector<Edge> es;
        for (const auto& e : t.edges())
            if (local[e.u] >= 0 && local[e.v] >= 0) es.emplace_back(local[e.u], local[e.v]);
        return Tree(n(), std::move(es));
    }
    Edge lift(const Edge& e) const { return Edge(global[e.u], global[e.v]); }
    Pairs lift(const Pairs& ps_) const {
        Pairs out;
        for (const auto& [a, b] : ps_) out.emplace_back(lift(a), lift(b));
        return out;
    }
};

class SimSlideStar {
public:
    SimSlideStar(const PointSet& ps, const Tree& t, int p) : ps_(ps), p_(p), tb_(ps, t, "convex_star_by_sim_slides") {}

    Trace run() {
        int n = ps_.n();
        std::vector<int> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i;
        if (n >= 3) {
            Survivors s(ps_, verts);
            halve_until_small(s);
            auto dt = build_dual_tree(s.ps, s.restrict(tb_.current()));
            int t = static_cast<int>(dt.cells.size());
            if (4 * t < n - 2) throw std::logic_error("convex_star_by_sim_slides: fewer than (n-2)/4 cells after halving");
        }
        // Phase 2: peel good leaves.
        std::vector<std::vector<std::pair<int, int>>> layers;
        while (verts.size() > 1) {
            Survivors s(ps_, verts);
            if (s.n() >= 3) {
                halve_until_small(s);
                clean_up(s);
                merge_chains(s);
            }
            auto removed = good_leaves(s);
            if (removed.empty() || 24 * static_cast<long>(removed.size()) < s.n() - 2)
                throw std::logic_error("convex_star_by_sim_slides: too few good leaves in a round");
            std::set<int> gone;
            for (auto [leaf, at] : removed) gone.insert(leaf);
            std::vector<int> next;
            for (int v : verts)
                if (!gone.count(v)) next.push_back(v);
            verts = std::move(next);
            layers.push_back(std::move(removed));
        }
        // Phase 3: put the layers back as a star, innermost first.
        for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
            Pairs first, second;
            std::set<int> used;
            for (auto [leaf, at] : *it) {
                if (at == p_) continue;
                auto& step = used.insert(at).second ? first : second;
                step.emplace_back(Edge(leaf, at), Edge(leaf, p_));
            }
            emit(first);
            emit(second);
        }
        if (!is_star_at(tb_.current(), p_)) throw std::logic_error("convex_star_by_sim_slides: did not reach the star");
        return tb_.finish(sim_slide_bound(n));
    }

private:
    // Applies the pairs as one restricted simultaneous slide, or as a few if some pairs conflict.
    void emit(Pairs pairs) {
        while (!pairs.empty()) {
            SimMove all{pairs, Kind::slide, true};
            if (try_apply(all)) return;
            Pairs batch, rest;
            for (const auto& pr : pairs) {
                SimMove m{batch, Kind::slide, true};
                m.pairs.push_back(pr);
                if (valid(m)) batch.push_back(pr);
                else rest.push_back(pr);
            }
            if (batch.empty()) throw std::logic_error("convex_star_by_sim_slides: no pair slides on its own");
            tb_.sim(SimMove{batch, Kind::slide, true});
            pairs = std::move(rest);
        }
    }
    bool valid(const SimMove& m) const {
        try {
            apply_sim_move(ps_, tb_.current(), m);
            return true;
        } catch (const MoveError&) {
            return false;
        }
    }
    bool try_apply(const SimMove& m) {
        if (!valid(m)) return false;
        tb_.sim(m);
        return true;
    }

    // Boundary paths left after removing the hull edge and the parent edge.
    static std::vector<std::vector<int>> convex_paths(const Cell& c) {
        const auto& b = c.boundary;
        int m = c.size();
        int h = -1;
        for (int i = 0; i < m; ++i)
            if (Edge(b[i], b[(i + 1) % m]) == c.hull_edge) h = i;
        std::vector<int> w;
        for (int i = 1; i <= m; ++i) w.push_back(b[(h + i) % m]);
        // w[0] .. w[m-1] walks from the hull edge's end back to its start.
        std::vector<std::vector<int>> out;
        if (!c.parent_edge) {
            out.push_back(w);
            return out;
        }
        for (int i = 0; i + 1 < m; ++i)
            if (Edge(w[i], w[i + 1]) == *c.parent_edge) {
                out.emplace_back(w.begin(), w.begin() + i + 1);
                out.emplace_back(w.begin() + i + 1, w.end());
            }
        return out;
    }

    void halve_until_small(const Survivors& s) {
        for (int guard = 0;; ++guard) {
            if (guard > 4 * ps_.n() + 8) throw std::logic_error("convex_star_by_sim_slides: halving does not terminate");
            Tree t = s.restrict(tb_.current());
            auto dt = build_dual_tree(s.ps, t);
            bool big = false;
            for (const auto& c : dt.cells) big = big || c.size() >= 7;
            if (!big) return;
            Pairs pairs;
            for (const auto& c : dt.cells)
                for (const auto& w : convex_paths(c))
                    for (std::size_t i = 2; i < w.size(); i += 2) pairs.emplace_back(Edge(w[i - 1], w[i]), Edge(w[i - 2], w[i]));
            emit(s.lift(pairs));
        }
    }

    static std::vector<std::vector<int>> children_of(const DualTree& dt) {
        std::vector<std::vector<int>> ch(dt.cells.size());
        for (std::size_t i = 0; i < dt.cells.size(); ++i)
            if (dt.cells[i].parent >= 0) ch[dt.cells[i].parent].push_back(static_cast<int>(i));
        return ch;
    }

    // Slides the edge between a cell with one child and that child into the parent's hull edge,
    // when both cells are triangles.
    static std::optional<std::pair<Edge, Edge>> triangle_merge(const DualTree& dt, const std::vector<std::vector<int>>& ch, int a) {
        if (ch[a].size() != 1) return std::nullopt;
        const Cell& ca = dt.cells[a];
        const Cell& cb = dt.cells[ch[a][0]];
        if (ca.size() + cb.size() - 2 > 4) return std::nullopt;
        return std::make_pair(*cb.parent_edge, ca.hull_edge);
    }

    void clean_up(const Survivors& s) {
        auto dt = build_dual_tree(s.ps, s.restrict(tb_.current()));
        auto ch = children_of(dt);
        int m = static_cast<int>(dt.cells.size());
        std::function<int(int)> d = [&](int i) { return dt.cells[i].parent < 0 ? 0 : d(dt.cells[i].parent) + 1; };
        std::set<Edge> odd;  // single-child cells at odd depth, by hull edge
        Pairs even_moves;
        for (int i = 0; i < m; ++i) {
            if (ch[i].size() != 1) continue;
            if (d(i) % 2) odd.insert(dt.cells[i].hull_edge);
            else if (auto mv = triangle_merge(dt, ch, i)) even_moves.push_back(*mv);
        }
        emit(s.lift(even_moves));
        dt = build_dual_tree(s.ps, s.restrict(tb_.current()));
        ch = children_of(dt);
        Pairs odd_moves;
        for (int i = 0; i < static_cast<int>(dt.cells.size()); ++i)
            if (odd.count(dt.cells[i].hull_edge))
                if (auto mv = triangle_merge(dt, ch, i)) odd_moves.push_back(*mv);
        emit(s.lift(odd_moves));
    }

    std::vector<std::pair<int, int>> good_leaves(const Survivors& s) const {
        Tree t = s.restrict(tb_.current());
        std::vector<std::pair<int, int>> out;
        int n = s.n();
        if (n == 1) return out;
        auto hull = hull_edges(s.ps);
        std::set<Edge> hs(hull.begin(), hull.end());
        if (n == 2) hs.insert(Edge(0, 1));
        auto adj = t.adjacency();
        for (int v = 0; v < n; ++v) {
            if (s.global[v] == p_ || adj[v].size() != 1) continue;
            int x = adj[v][0];
            if (!hs.count(Edge(v, x))) continue;
            out.emplace_back(s.global[v], s.global[x]);
        }
        return out;
    }

    int good_leaf_count(const Survivors& s, const Tree& t) const {
        int n = t.n();
        auto hull = hull_edges(s.ps);
        std::set<Edge> hs(hull.begin(), hull.end());
        auto adj = t.adjacency();
        int k = 0;
        for (int v = 0; v < n; ++v)
            if (s.global[v] != p_ && adj[v].size() == 1 && hs.count(Edge(v, adj[v][0]))) ++k;
        return k;
    }

    // Pairs a cell having one child with that child along chains of such cells, and slides the
    // edge between them to a hull edge so that a good leaf appears.
    void merge_chains(const Survivors& s) {
        Tree t = s.restrict(tb_.current());
        if (t.n() < 3) return;
        auto dt = build_dual_tree(s.ps, t);
        auto ch = children_of(dt);
        int m = static_cast<int>(dt.cells.size());
        std::vector<std::pair<int, int>> matched;
        for (int i = 0; i < m; ++i) {
            if (ch[i].size() != 1) continue;
            int par = dt.cells[i].parent;
            if (par >= 0 && ch[par].size() == 1) continue;  // not the top of a chain
            int a = i;
            while (ch[a].size() == 1 && ch[ch[a][0]].size() == 1) {
                matched.emplace_back(a, ch[a][0]);
                a = ch[ch[a][0]][0];
            }
        }
        std::vector<Pairs> plans;
        int before = good_leaf_count(s, t);
        for (auto [a, b] : matched) {
            const Cell& ca = dt.cells[a];
            const Cell& cb = dt.cells[b];
            Edge between = *cb.parent_edge;
            std::optional<Pairs> best;
            for (const Cell* c : {&ca, &cb}) {
                Pairs plan = boundary_path_slides(c->boundary, c->hull_edge, between);
                Tree u = t;
                bool ok = true;
                for (const auto& [out, in] : plan) {
                    try {
                        u = apply_move(s.ps, u, Move{out, in, Kind::slide});
                    } catch (const MoveError&) {
                        ok = false;
                        break;
                    }
                }
                if (!ok || good_leaf_count(s, u) <= before) continue;
                if (!best || plan.size() < best->size()) best = plan;
            }
            if (best) plans.push_back(*best);
        }
        std::size_t rounds = 0;
        for (const auto& pl : plans) rounds = std::max(rounds, pl.size());
        for (std::size_t r = 0; r < rounds; ++r) {
            Pairs step;
            for (const auto& pl : plans)
                if (r < pl.size()) step.push_back(pl[r]);
            emit(s.lift(step));
        }
    }

    const PointSet& ps_;
    int p_;
    TraceBuilder tb_;
};

}  // namespace

Trace convex_star_by_sim_slides(const PointSet& ps, const Tree& t, int p) {
    if (ps.position() != Position::convex) throw GeometryError("convex_star_by_sim_slides: point set must be in convex position");
    if (p < 0 || p >= ps.n()) throw std::invalid_argument("convex_star_by_sim_slides: center out of range");
    return SimSlideStar(ps, t, p).run();
}

}  // namespace treemorph
