#include "treemorph/labeled.hpp"

#include <algorithm>

namespace treemorph {

LabelPermutation::LabelPermutation(const Tree& host, const std::vector<Edge>& order) : at_(order.size()), pos_(order.size() + 1, -1) {
    if (!host.labeled()) throw std::invalid_argument("LabelPermutation: host tree is unlabeled");
    for (std::size_t i = 0; i < order.size(); ++i) {
        int l = host.label_of(order[i]);
        at_[i] = l;
        pos_[l] = static_cast<int>(i);
    }
}

void LabelPermutation::swap_positions(int i, int j) {
    std::swap(at_[i], at_[j]);
    pos_[at_[i]] = i;
    pos_[at_[j]] = j;
}

void LabelPermutation::rotate_along(const std::vector<int>& route) {
    for (std::size_t k = 1; k < route.size(); ++k) swap_positions(route[k - 1], route[k]);
}

const char* to_string(Gadget g) {
    switch (g) {
        case Gadget::adjacent3slides: return "adjacent3slides";
        case Gadget::quad4rotations: return "quad4rotations";
        case Gadget::path7rotations: return "path7rotations";
    }
    return "?";
}

Gadget gadget_from_string(const std::string& s) {
    for (Gadget g : {Gadget::adjacent3slides, Gadget::quad4rotations, Gadget::path7rotations})
        if (s == to_string(g)) return g;
    throw std::invalid_argument("unknown gadget '" + s + "'");
}

std::vector<std::pair<Edge, Edge>> quad_swap_plan(int a, int b, int c, int d) {
    if (b == c) return {{Edge(a, b), Edge(a, d)}, {Edge(b, d), Edge(a, b)}, {Edge(a, d), Edge(b, d)}};
    return {{Edge(a, b), Edge(a, d)}, {Edge(c, d), Edge(a, c)}, {Edge(a, d), Edge(c, d)}, {Edge(a, c), Edge(a, b)}};
}

namespace {

// Applies the plan, or returns nullopt at the first invalid move.
std::optional<Trace> try_plan(const PointSet& ps, const Tree& t, const std::vector<std::pair<Edge, Edge>>& plan, Kind kind,
                              const std::string& name) {
    TraceBuilder tb(ps, t, name);
    try {
        for (const auto& [out, in] : plan) tb.move(out, in, kind);
    } catch (const MoveError&) {
        return std::nullopt;
    }
    return tb.finish(static_cast<long>(plan.size()));
}

Trace adjacent3(const PointSet& ps, const Tree& t, const Edge& e, const Edge& f) {
    int p = e.common(f);
    if (e == f || p < 0) throw std::invalid_argument("adjacent3slides: edges " + to_string(e) + " and " + to_string(f) + " share no vertex");
    int u = e.other(p), v = f.other(p);
    auto tr = try_plan(ps, t, quad_swap_plan(u, p, p, v), Kind::slide, "adjacent3slides");
    if (!tr)
        throw std::invalid_argument("adjacent3slides: triangle " + std::to_string(u) + "," + std::to_string(p) + "," + std::to_string(v) +
                                    " is blocked or the angle at " + std::to_string(p) + " is reflex");
    return *tr;
}

Trace quad4(const PointSet& ps, const Tree& t, const Edge& e, const Edge& f) {
    if (ps.position() != Position::convex) throw std::invalid_argument("quad4rotations: point set must be in convex position");
    auto hull = hull_edges(ps);
    for (const Edge& x : {e, f})
        if (std::find(hull.begin(), hull.end(), x) == hull.end() || !t.has(x))
            throw std::invalid_argument("quad4rotations: " + to_string(x) + " is not a hull edge of the tree");
    if (e == f) throw std::invalid_argument("quad4rotations: the two edges coincide");
    // Try every naming of the quadrilateral; the first plan that stays a plane tree wins.
    for (auto [x, y] : {std::pair{e, f}, std::pair{f, e}})
        for (int fx = 0; fx < 2; ++fx)
            for (int fy = 0; fy < 2; ++fy) {
                int a = fx ? x.v : x.u, b = fx ? x.u : x.v;
                int c = fy ? y.v : y.u, d = fy ? y.u : y.v;
                if (a == c || a == d || b == d) continue;
                if (auto tr = try_plan(ps, t, quad_swap_plan(a, b, c, d), Kind::empty_triangle, "quad4rotations")) return *tr;
            }
    throw std::invalid_argument("quad4rotations: no empty quadrilateral swap exists for " + to_string(e) + " and " + to_string(f));
}

Trace path7(const PointSet& ps, const Tree& t, Edge e, Edge f) {
    int n = ps.n();
    auto adj = t.adjacency();
    int p1 = -1;
    std::vector<int> order;
    auto hull = ps.hull();
    for (int x = 0; x < n && p1 < 0; ++x) {
        if (adj[x].size() != 1 || std::find(hull.begin(), hull.end(), x) == hull.end()) continue;
        std::vector<int> r = radial_order(ps, x);
        r.insert(r.begin(), x);
        if (t.edges() != path(n, r).edges()) continue;
        p1 = x;
        order = std::move(r);
    }
    if (p1 < 0) throw std::invalid_argument("path7rotations: tree is not the radial path from an extreme point");
    // order[k] is p_{k+1}; edge p_i p_{i+1} has position i.
    auto position = [&](const Edge& x) {
        for (int k = 0; k + 1 < n; ++k)
            if (Edge(order[k], order[k + 1]) == x) return k + 1;
        throw std::invalid_argument("path7rotations: " + to_string(x) + " is not on the path");
    };
    int i = position(e), j = position(f);
    if (i == j) throw std::invalid_argument("path7rotations: the two edges coincide");
    if (i > j) std::swap(i, j);
    auto P = [&](int k) { return order[k - 1]; };
    TraceBuilder tb(ps, t, "path7rotations");
    std::vector<std::pair<Edge, Edge>> there;
    if (i > 1) there.emplace_back(Edge(P(i), P(i + 1)), Edge(P(1), P(i + 1)));
    if (j > i + 1) there.emplace_back(Edge(P(1), P(i + 1)), Edge(P(1), P(j)));
    for (const auto& [out, in] : there) tb.move(out, in, Kind::rotation);
    for (const auto& [out, in] : quad_swap_plan(P(1), P(j), P(j), P(j + 1))) tb.move(out, in, Kind::rotation);
    for (auto it = there.rbegin(); it != there.rend(); ++it) tb.move(it->second, it->first, Kind::rotation);
    return tb.finish(7);
}

}  // namespace

Trace swap_gadget(const PointSet& ps, const Tree& t, Gadget g, const Edge& e, const Edge& f) {
    if (!t.labeled()) throw std::invalid_argument(std::string(to_string(g)) + ": tree must be labeled");
    if (!t.has(e) || !t.has(f)) throw std::invalid_argument(std::string(to_string(g)) + ": both edges must be in the tree");
    switch (g) {
        case Gadget::adjacent3slides: return adjacent3(ps, t, e, f);
        case Gadget::quad4rotations: return quad4(ps, t, e, f);
        case Gadget::path7rotations: return path7(ps, t, e, f);
    }
    throw std::invalid_argument("swap_gadget: unknown gadget");
}

}  // namespace treemorph
