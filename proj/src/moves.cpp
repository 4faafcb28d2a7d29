#include "treemorph/moves.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace treemorph {

const char* to_string(Kind k) {
    switch (k) {
        case Kind::exchange: return "exchange";
        case Kind::compatible: return "compatible";
        case Kind::rotation: return "rotation";
        case Kind::empty_triangle: return "empty_triangle";
        case Kind::slide: return "slide";
    }
    return "exchange";
}

Kind kind_from_string(const std::string& s) {
    for (Kind k : all_kinds)
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown operation kind: " + s);
}

namespace {

int uf_find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

// Component marks of t minus `removed`: 0 on the side of removed.u, 1 on the side of removed.v.
std::vector<int> split_sides(const Tree& t, const Edge& removed) {
    int n = t.n();
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : t.edges()) {
        if (e == removed) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> side(n, 1);
    std::vector<int> stack = {removed.u};
    side[removed.u] = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (side[y] == 1) {
                side[y] = 0;
                stack.push_back(y);
            }
    }
    return side;
}

bool crosses_any(const PointSet& ps, const Edge& f, const std::vector<Edge>& edges, const Edge& skip) {
    for (const auto& e : edges) {
        if (e == skip) continue;
        if (ps.cross(f.u, f.v, e.u, e.v)) return true;
    }
    return false;
}

// No new edge crosses an old one, so the union of both trees is plane.
bool union_noncrossing(const PointSet& ps, const std::vector<Edge>& old_edges, const std::vector<Edge>& new_edges) {
    for (const auto& f : new_edges)
        for (const auto& e : old_edges)
            if (ps.cross(f.u, f.v, e.u, e.v)) return false;
    return true;
}

Kind strongest_single(const PointSet& ps, const Tree& t, const Edge& removed, const Edge& inserted) {
    std::vector<Edge> both = t.edges();
    both.push_back(inserted);
    auto shared = [&](const Edge& e) { return e != removed && t.has(e); };
    Kind best = Kind::exchange;
    for (Kind k : {Kind::compatible, Kind::rotation, Kind::empty_triangle, Kind::slide}) {
        if (!pair_condition(ps, removed, inserted, k, both, shared)) break;
        best = k;
    }
    return best;
}

// Kuhn's augmenting paths on a dense boolean matrix.
bool augment(int a, const std::vector<std::vector<char>>& ok, std::vector<int>& match_b, std::vector<char>& seen) {
    for (std::size_t b = 0; b < ok[a].size(); ++b) {
        if (!ok[a][b] || seen[b]) continue;
        seen[b] = 1;
        if (match_b[b] < 0 || augment(match_b[b], ok, match_b, seen)) {
            match_b[b] = a;
            return true;
        }
    }
    return false;
}

std::vector<int> max_matching(const std::vector<std::vector<char>>& ok, int nb) {
    std::vector<int> match_b(nb, -1);
    for (std::size_t a = 0; a < ok.size(); ++a) {
        std::vector<char> seen(nb, 0);
        augment(static_cast<int>(a), ok, match_b, seen);
    }
    return match_b;
}

}  // namespace

bool still_plane_tree(const PointSet& ps, const std::vector<Edge>& edges, const std::vector<Edge>& added) {
    int n = ps.n();
    if (static_cast<int>(edges.size()) != n - 1) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : edges) {
        if (e.u < 0 || e.v >= n || e.u == e.v) return false;
        int a = uf_find(parent, e.u), b = uf_find(parent, e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    for (const auto& f : added)
        for (const auto& e : edges)
            if (e != f && ps.cross(f.u, f.v, e.u, e.v)) return false;
    return true;
}

bool triangle_interiors_disjoint(const PointSet& ps, int a0, int a1, int a2, int b0, int b1, int b2) {
    int a[3] = {a0, a1, a2}, b[3] = {b0, b1, b2};
    std::sort(a, a + 3);
    std::sort(b, b + 3);
    if (std::equal(a, a + 3, b)) return false;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        if (ps.blocks(b0, b1, b2, a[i], a[j])) return false;
        if (ps.blocks(a0, a1, a2, b[i], b[j])) return false;
    }
    return true;
}

bool slide_triangles_compatible(const PointSet& ps, const std::pair<Edge, Edge>& x, const std::pair<Edge, Edge>& y) {
    auto tri = [](const std::pair<Edge, Edge>& p) {
        int c = p.first.common(p.second);
        return std::array<int, 3>{c, p.first.other(c), p.second.other(c)};
    };
    auto s = tri(x), t = tri(y);
    int common = 0;
    for (int i : s)
        for (int j : t) common += i == j;
    if (common >= 2) return false;
    return triangle_interiors_disjoint(ps, s[0], s[1], s[2], t[0], t[1], t[2]);
}

std::optional<Kind> classify_move(const PointSet& ps, const Tree& t, const Edge& removed, const Edge& inserted) {
    if (!t.has(removed)) throw MoveError("removed edge " + to_string(removed) + " is not in the tree");
    if (t.has(inserted)) throw MoveError("inserted edge " + to_string(inserted) + " is already in the tree");
    if (inserted.u < 0 || inserted.v >= t.n() || inserted.u == inserted.v) throw MoveError("inserted edge out of range");
    auto side = split_sides(t, removed);
    if (side[inserted.u] == side[inserted.v]) return std::nullopt;
    if (crosses_any(ps, inserted, t.edges(), removed)) return std::nullopt;
    return strongest_single(ps, t, removed, inserted);
}

Tree apply_move(const PointSet& ps, const Tree& t, const Move& m) {
    auto k = classify_move(ps, t, m.removed, m.inserted);
    if (!k) throw MoveError("replacing " + to_string(m.removed) + " by " + to_string(m.inserted) + " does not give a plane tree");
    if (!satisfies(*k, m.kind))
        throw MoveError("move " + to_string(m.removed) + "->" + to_string(m.inserted) + " is not a " + to_string(m.kind) +
                            " (strongest: " + to_string(*k) + ")",
                        k);
    Tree out = t;
    out.replace(m.removed, m.inserted);
    return out;
}

std::vector<Move> enumerate_neighbors(const PointSet& ps, const Tree& t, Kind kind) {
    std::vector<Move> out;
    int n = t.n();
    for (const auto& e : t.edges()) {
        auto side = split_sides(t, e);
        std::vector<Edge> cands;
        if (satisfies(kind, Kind::rotation)) {
            for (int c : {e.u, e.v})
                for (int w = 0; w < n; ++w)
                    if (w != c && side[w] != side[c] && w != e.other(c)) cands.emplace_back(c, w);
        } else {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (side[a] != side[b] && Edge(a, b) != e) cands.emplace_back(a, b);
        }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& f : cands) {
            if (crosses_any(ps, f, t.edges(), e)) continue;
            Kind k = strongest_single(ps, t, e, f);
            if (satisfies(k, kind)) out.push_back({e, f, kind});
        }
    }
    return out;
}

SimResult validate_simultaneous(const PointSet& ps, const Tree& t1, const Tree& t2, Kind kind, bool restricted,
                                long node_budget) {
    if (t1.n() != t2.n() || t1.n() != ps.n()) throw std::invalid_argument("validate_simultaneous: trees on different point sets");
    std::vector<Edge> d1, d2, both;
    std::set_difference(t1.edges().begin(), t1.edges().end(), t2.edges().begin(), t2.edges().end(), std::back_inserter(d1));
    std::set_difference(t2.edges().begin(), t2.edges().end(), t1.edges().begin(), t1.edges().end(), std::back_inserter(d2));
    std::set_union(t1.edges().begin(), t1.edges().end(), t2.edges().begin(), t2.edges().end(), std::back_inserter(both));
    auto shared = [&](const Edge& e) { return t1.has(e) && t2.has(e); };
    SimResult res;
    res.move.kind = kind;
    res.move.restricted = restricted;
    bool use_restriction = restricted && kind == Kind::slide;
    int k = static_cast<int>(d1.size());
    if (k != static_cast<int>(d2.size())) return res;
    if (satisfies(kind, Kind::compatible) && !union_noncrossing(ps, d1, d2)) return res;

    if (t1.labeled() && t2.labeled()) {
        for (const auto& e : t1.edges())
            if (t2.has(e) && t1.label_of(e) != t2.label_of(e)) return res;
        for (const auto& e : d1) {
            Edge f = t2.edge_with_label(t1.label_of(e));
            if (t1.has(f)) return res;
            if (!pair_condition(ps, e, f, kind, both, shared)) return res;
            res.move.pairs.emplace_back(e, f);
        }
        if (use_restriction)
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (!slide_triangles_compatible(ps, res.move.pairs[i], res.move.pairs[j])) {
                        res.move.pairs.clear();
                        return res;
                    }
        res.status = SimStatus::found;
        return res;
    }

    std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) ok[a][b] = pair_condition(ps, d1[a], d2[b], kind, both, shared);
    auto match_b = max_matching(ok, k);
    if (std::count(match_b.begin(), match_b.end(), -1) > 0) return res;
    std::vector<int> match_a(k);
    for (int b = 0; b < k; ++b) match_a[match_b[b]] = b;

    auto emit = [&](const std::vector<int>& ma) {
        for (int a = 0; a < k; ++a) res.move.pairs.emplace_back(d1[a], d2[ma[a]]);
        res.status = SimStatus::found;
    };
    if (!use_restriction) {
        emit(match_a);
        return res;
    }
    auto compatible = [&](int a, int b, int c, int d) {
        return slide_triangles_compatible(ps, {d1[a], d2[b]}, {d1[c], d2[d]});
    };
    bool all_ok = true;
    for (int a = 0; a < k && all_ok; ++a)
        for (int c = a + 1; c < k && all_ok; ++c) all_ok = compatible(a, match_a[a], c, match_a[c]);
    if (all_ok) {
        emit(match_a);
        return res;
    }
    // Backtracking over matchings that avoid conflicting triangle pairs.
    std::vector<int> assign(k, -1);
    std::vector<char> taken(k, 0);
    long nodes = 0;
    bool exhausted = false;
    std::function<bool(int)> search = [&](int a) -> bool {
        if (a == k) return true;
        if (++nodes > node_budget) {
            exhausted = true;
            return false;
        }
        for (int b = 0; b < k; ++b) {
            if (!ok[a][b] || taken[b]) continue;
            bool fine = true;
            for (int c = 0; c < a && fine; ++c) fine = compatible(c, assign[c], a, b);
            if (!fine) continue;
            assign[a] = b;
            taken[b] = 1;
            if (search(a + 1)) return true;
            taken[b] = 0;
            if (exhausted) return false;
        }
        return false;
    };
    if (search(0)) {
        emit(assign);
        return res;
    }
    if (exhausted) res.status = SimStatus::unknown;
    return res;
}

Tree apply_sim_move(const PointSet& ps, const Tree& t1, const SimMove& m) {
    std::vector<Edge> removed, inserted;
    for (const auto& [r, i] : m.pairs) {
        removed.push_back(r);
        inserted.push_back(i);
    }
    std::vector<Edge> rs = removed, is = inserted;
    std::sort(rs.begin(), rs.end());
    std::sort(is.begin(), is.end());
    if (std::adjacent_find(rs.begin(), rs.end()) != rs.end()) throw MoveError("simultaneous move removes an edge twice");
    if (std::adjacent_find(is.begin(), is.end()) != is.end()) throw MoveError("simultaneous move inserts an edge twice");
    for (const auto& r : removed)
        if (!t1.has(r)) throw MoveError("removed edge " + to_string(r) + " is not in the tree");
    for (const auto& i : inserted) {
        if (t1.has(i)) throw MoveError("inserted edge " + to_string(i) + " is already in the tree");
        if (i.u < 0 || i.v >= t1.n() || i.u == i.v) throw MoveError("inserted edge out of range");
    }
    Tree t2 = t1;
    for (const auto& [r, i] : m.pairs) t2.replace(r, i);
    if (!still_plane_tree(ps, t2.edges(), inserted)) throw MoveError("simultaneous move does not give a plane tree");
    std::vector<Edge> both;
    std::set_union(t1.edges().begin(), t1.edges().end(), t2.edges().begin(), t2.edges().end(), std::back_inserter(both));
    if (satisfies(m.kind, Kind::compatible) && !union_noncrossing(ps, removed, inserted))
        throw MoveError("a new edge crosses an old edge");
    auto shared = [&](const Edge& e) { return t1.has(e) && t2.has(e); };
    for (const auto& [r, i] : m.pairs)
        if (!pair_condition(ps, r, i, m.kind, both, shared))
            throw MoveError("pair " + to_string(r) + "->" + to_string(i) + " fails the " + to_string(m.kind) + " condition");
    if (m.restricted && m.kind == Kind::slide)
        for (std::size_t a = 0; a < m.pairs.size(); ++a)
            for (std::size_t b = a + 1; b < m.pairs.size(); ++b)
                if (!slide_triangles_compatible(ps, m.pairs[a], m.pairs[b]))
                    throw MoveError("restricted slide triangles share more than a point");
    return t2;
}

std::vector<Tree> sequentialize_sim_slides(const PointSet& ps, const Tree& t1, const SimMove& sim, const std::vector<int>& order) {
    if (sim.kind != Kind::slide) throw std::invalid_argument("sequentialize_sim_slides: move is not a slide");
    if (order.size() != sim.pairs.size()) throw std::invalid_argument("sequentialize_sim_slides: order has wrong length");
    std::vector<Tree> out;
    Tree cur = t1;
    for (int idx : order) {
        const auto& [r, i] = sim.pairs.at(idx);
        auto k = classify_move(ps, cur, r, i);
        if (!k || !satisfies(*k, Kind::slide))
            throw std::logic_error("sequentialized slide " + to_string(r) + "->" + to_string(i) + " is not a valid single slide");
        cur.replace(r, i);
        out.push_back(cur);
    }
    return out;
}

}  // namespace treemorph
