#include "treemorph/xform.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace treemorph {

namespace {

// Twice the signed area of abc.
Int area2(const PointSet& ps, int a, int b, int c) {
    const Point &A = ps[a], &B = ps[b], &C = ps[c];
    return (B.x - A.x) * (C.y - A.y) - (B.y - A.y) * (C.x - A.x);
}

struct Sweep {
    const PointSet& ps;
    const std::vector<int>& rank;
    int p;
    std::vector<std::pair<int, int>> lr;  // endpoints by rank, per edge index; (-1,-1) for edges at p

    // x lies beyond the line of edge i, seen from p.
    bool beyond(int i, int x) const { return ps.orient(lr[i].first, lr[i].second, x) != ps.orient(lr[i].first, lr[i].second, p); }
    bool strictly_within(int i, int x) const {
        return rank[lr[i].first] < rank[x] && rank[x] < rank[lr[i].second];
    }
    // Edge i is closer to p than edge j over their common range.
    bool below(int i, int j) const {
        if (i == j) return false;
        for (int x : {lr[j].first, lr[j].second})
            if (strictly_within(i, x)) return beyond(i, x);
        for (int y : {lr[i].first, lr[i].second})
            if (strictly_within(j, y)) return !beyond(j, y);
        return i < j;
    }
};

struct Query {
    int s;
};

struct SweepLess {
    using is_transparent = void;
    const Sweep* sw;
    bool operator()(int i, int j) const { return sw->below(i, j); }
    bool operator()(int i, Query q) const { return sw->beyond(i, q.s); }
    bool operator()(Query q, int i) const { return !sw->beyond(i, q.s); }
};

}  // namespace

int StarifyState::width(int a, int b) const {
    if (a == p || b == p) return 0;
    return std::abs(rank[a] - rank[b]);
}

StarifyState starify_state(const PointSet& ps, const Tree& t, int p) {
    require_extreme(ps, p);
    int n = ps.n();
    StarifyState st;
    st.p = p;
    st.rank.assign(n, -1);
    auto order = radial_order(ps, p);
    for (int i = 0; i < n - 1; ++i) st.rank[order[i]] = i;
    st.out = parent_array(t, p);
    const auto& E = t.edges();
    int m = static_cast<int>(E.size());
    st.hit.assign(n, -1);
    st.hit_by.assign(m, {});

    Sweep sw{ps, st.rank, p, std::vector<std::pair<int, int>>(m, {-1, -1})};
    std::vector<std::vector<int>> starts(n), ends(n);
    for (int i = 0; i < m; ++i) {
        if (E[i].has(p)) continue;
        int a = E[i].u, b = E[i].v;
        if (st.rank[a] > st.rank[b]) std::swap(a, b);
        sw.lr[i] = {a, b};
        starts[a].push_back(i);
        ends[b].push_back(i);
    }
    std::vector<std::vector<int>> above(m);
    std::set<int, SweepLess> status(SweepLess{&sw});
    auto link = [&](int lo, int hi) { above[lo].push_back(hi); };
    for (int s : order) {
        for (int i : ends[s]) {
            auto it = status.find(i);
            auto nx = std::next(it);
            if (it != status.begin() && nx != status.end()) link(*std::prev(it), *nx);
            status.erase(it);
        }
        auto it = status.lower_bound(Query{s});
        if (it != status.begin()) st.hit[s] = *std::prev(it);
        for (int i : starts[s]) {
            auto [pos, fresh] = status.insert(i);
            if (!fresh) throw std::logic_error("starify: duplicate edge in sweep");
            if (pos != status.begin()) link(*std::prev(pos), i);
            if (std::next(pos) != status.end()) link(i, *std::next(pos));
        }
    }
    // Linear extension: repeatedly take the lowest-index edge with no unplaced edge below it.
    std::vector<int> indeg(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j : above[i]) ++indeg[j];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < m; ++i)
        if (sw.lr[i].first >= 0 && indeg[i] == 0) ready.push(i);
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        st.edge_order.push_back(i);
        for (int j : above[i])
            if (--indeg[j] == 0) ready.push(j);
    }

    for (int s : order)
        if (st.hit[s] >= 0) st.hit_by[st.hit[s]].push_back(s);

    st.new_out.assign(n, -1);
    for (int s : order)
        if (st.hit[s] < 0) st.new_out[s] = p;
    for (int i = 0; i < m; ++i) {
        const auto& S = st.hit_by[i];
        if (S.empty()) continue;
        std::vector<int> chain{sw.lr[i].first};
        chain.insert(chain.end(), S.begin(), S.end());
        chain.push_back(sw.lr[i].second);
        int cut = 0, best = -1;
        for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
            int w = st.width(chain[j], chain[j + 1]);
            if (w > best) {
                best = w;
                cut = static_cast<int>(j);
            }
        }
        for (int j = 1; j + 1 < static_cast<int>(chain.size()); ++j) st.new_out[chain[j]] = j <= cut ? chain[j - 1] : chain[j + 1];
    }
    return st;
}

namespace {

// No tree edge meets the interior of any polygon P_e.
void check_polygons_clear(const PointSet& ps, const Tree& t, const StarifyState& st) {
    const auto& E = t.edges();
    int n = ps.n();
    std::vector<int> by_rank(n - 1);
    for (int s = 0; s < n; ++s)
        if (s != st.p) by_rank[st.rank[s]] = s;
    for (std::size_t i = 0; i < E.size(); ++i) {
        const auto& S = st.hit_by[i];
        if (S.empty()) continue;
        int q = E[i].u, r = E[i].v;
        if (st.rank[q] > st.rank[r]) std::swap(q, r);
        std::vector<int> chain{q};
        chain.insert(chain.end(), S.begin(), S.end());
        chain.push_back(r);
        for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
            Edge seg(chain[j], chain[j + 1]);
            for (const auto& f : E)
                if (f != seg && ps.cross(f.u, f.v, seg.u, seg.v))
                    throw std::logic_error("starify: tree edge " + to_string(f) + " crosses the polygon of " + to_string(E[i]));
        }
        std::vector<char> on_chain(n, 0);
        for (int c : chain) on_chain[c] = 1;
        std::size_t seg = 0;
        for (int x = st.rank[q] + 1; x < st.rank[r]; ++x) {
            int v = by_rank[x];
            while (st.rank[chain[seg + 1]] < x) ++seg;
            if (on_chain[v]) continue;
            int a = chain[seg], b = chain[seg + 1];
            bool above_e = ps.orient(q, r, v) != ps.orient(q, r, st.p);
            bool below_chain = ps.orient(a, b, v) == ps.orient(a, b, st.p);
            if (above_e && below_chain)
                throw std::logic_error("starify: vertex " + std::to_string(v) + " lies inside the polygon of " + to_string(E[i]));
        }
        std::vector<int> pos(n, -1);
        for (std::size_t j = 0; j < chain.size(); ++j) pos[chain[j]] = static_cast<int>(j);
        for (const auto& f : E) {
            int a = pos[f.u], b = pos[f.v];
            if (a < 0 || b < 0) continue;
            if (a > b) std::swap(a, b);
            if (b - a < 2 || (a == 0 && b + 1 == static_cast<int>(chain.size()))) continue;
            int c = chain[a + 1];
            if (ps.orient(f.u, f.v, c) != ps.orient(f.u, f.v, st.p))
                throw std::logic_error("starify: tree edge " + to_string(f) + " is a diagonal of the polygon of " + to_string(E[i]));
        }
    }
}

std::vector<Edge> edges_from_parents(const std::vector<int>& parent) {
    std::vector<Edge> es;
    for (int s = 0; s < static_cast<int>(parent.size()); ++s)
        if (parent[s] >= 0) es.emplace_back(s, parent[s]);
    return es;
}

SimMove parent_change_move(const std::vector<int>& from, const std::vector<int>& to, Kind kind) {
    SimMove m;
    m.kind = kind;
    for (int s = 0; s < static_cast<int>(from.size()); ++s)
        if (from[s] != to[s]) m.pairs.emplace_back(Edge(s, from[s]), Edge(s, to[s]));
    return m;
}

}  // namespace

StarifyResult starify_step(const PointSet& ps, const Tree& t, int p) {
    auto st = starify_state(ps, t, p);
    check_polygons_clear(ps, t, st);
    const auto& E = t.edges();
    for (int s = 0; s < ps.n(); ++s) {
        if (s == p) continue;
        if (st.width(s, st.out[s]) > ps.n() - 2) throw std::logic_error("starify: width exceeds n-2");
        int q = st.new_out[s];
        if (q == p) continue;
        const Edge& e = E[st.hit[s]];
        if (st.width(e.u, e.v) < 2 * st.width(s, q))
            throw std::logic_error("starify: new edge " + to_string(Edge(s, q)) + " is wider than half of " + to_string(e));
    }
    Tree target(t.n(), edges_from_parents(st.new_out));
    StarifyResult res;
    res.move.kind = Kind::compatible;
    if (target.edges() == t.edges()) {
        res.tree = t;
        return res;
    }
    auto r = validate_simultaneous(ps, t.unlabeled(), target, Kind::compatible);
    if (!r) throw std::logic_error("starify: result is not one simultaneous compatible exchange");
    res.move = r.move;
    res.tree = apply_sim_move(ps, t, res.move);
    return res;
}

std::vector<SimMove> starify_as_sim_rotations(const PointSet& ps, const Tree& t, int p) {
    auto st = starify_state(ps, t, p);
    int n = ps.n();
    const auto& E = t.edges();
    const std::vector<int>& out0 = st.out;

    // Triangulation of each polygon: every chain vertex is the apex of one triangle over a base.
    std::vector<int> base_lo(n, -1), base_hi(n, -1), parent_apex(n, -1);
    std::vector<char> peak(n, 0), in_some(n, 0);
    for (std::size_t i = 0; i < E.size(); ++i) {
        const auto& S = st.hit_by[i];
        if (S.empty()) continue;
        int q = E[i].u, r = E[i].v;
        if (st.rank[q] > st.rank[r]) std::swap(q, r);
        std::vector<int> c{q};
        c.insert(c.end(), S.begin(), S.end());
        c.push_back(r);
        std::function<void(int, int, int)> split = [&](int lo, int hi, int par) {
            if (hi - lo < 2) return;
            int best = -1;
            Int best_h;
            for (int j = lo + 1; j < hi; ++j) {
                Int h = abs(area2(ps, c[lo], c[hi], c[j]));
                if (best < 0 || h < best_h) {
                    best = j;
                    best_h = h;
                }
            }
            int s = c[best];
            base_lo[s] = c[lo];
            base_hi[s] = c[hi];
            parent_apex[s] = par;
            peak[s] = hi - lo == 2;
            in_some[s] = 1;
            split(lo, best, s);
            split(best, hi, s);
        };
        split(0, static_cast<int>(c.size()) - 1, -1);
    }
    auto target = [&](int s) { return st.new_out[s]; };
    auto in_A = [&](int s, int w) { return w == base_lo[s] || w == base_hi[s]; };
    auto is_diagonal = [&](int s, int w) {
        // Boundary edges of the polygon join consecutive chain vertices.
        int rs = st.rank[s], rw = st.rank[w];
        int lo = std::min(rs, rw), hi = std::max(rs, rw);
        const auto& S = st.hit_by[st.hit[s]];
        int between = 0;
        for (int x : S)
            if (st.rank[x] > lo && st.rank[x] < hi) ++between;
        return between > 0;
    };

    std::vector<std::vector<int>> stages;
    std::vector<int> cur = out0;
    // Step 1: rays reaching p, and pre-rotations next to peaks whose two polygon edges point at them.
    for (int s = 0; s < n; ++s) {
        if (s == p) continue;
        if (st.hit[s] < 0) cur[s] = p;
    }
    for (int s = 0; s < n; ++s) {
        if (!in_some[s] || !peak[s]) continue;
        int a = base_lo[s], b = base_hi[s];
        if (out0[a] == s && out0[b] == s) {
            int sp = parent_apex[s];
            if (sp != a && sp != b) throw std::logic_error("starify: peak without a polygon neighbor apex");
            cur[sp] = sp == a ? b : a;
        }
    }
    stages.push_back(cur);
    // Step 2: every polygon vertex moves into its own triangle.
    auto in_tree = [&](const std::vector<int>& par, int a, int b) { return par[a] == b || par[b] == a; };
    std::vector<int> before2 = cur;
    for (int s = 0; s < n; ++s) {
        if (!in_some[s]) continue;
        int a = base_lo[s], b = base_hi[s];
        if (!peak[s]) {
            if (in_A(s, before2[s]) && is_diagonal(s, before2[s])) continue;
            cur[s] = is_diagonal(s, a) ? a : b;
        } else {
            if (in_A(s, before2[s])) continue;
            int first = target(s), second = first == a ? b : a;
            if (!in_tree(before2, s, first)) cur[s] = first;
            else if (!in_tree(before2, s, second)) cur[s] = second;
            else throw std::logic_error("starify: both polygon edges of a peak are tree edges");
        }
    }
    stages.push_back(cur);
    // Steps 3 and 4: peaks, then the other polygon vertices, to their final edges.
    for (int s = 0; s < n; ++s)
        if (in_some[s] && peak[s]) cur[s] = target(s);
    stages.push_back(cur);
    for (int s = 0; s < n; ++s)
        if (in_some[s] && !peak[s]) cur[s] = target(s);
    stages.push_back(cur);

    std::vector<SimMove> moves;
    std::vector<int> prev = out0;
    Tree tree = t;
    for (const auto& stage : stages) {
        SimMove m = parent_change_move(prev, stage, Kind::rotation);
        prev = stage;
        if (m.pairs.empty()) continue;
        try {
            tree = apply_sim_move(ps, tree, m);
        } catch (const MoveError& e) {
            throw std::logic_error(std::string("starify: simultaneous rotation stage invalid: ") + e.what());
        }
        moves.push_back(std::move(m));
    }
    Tree expect(t.n(), edges_from_parents(st.new_out));
    if (tree.edges() != expect.edges()) throw std::logic_error("starify: rotation stages do not compose to the starify step");
    return moves;
}

Trace star_by_starify(const PointSet& ps, const Tree& t, int p) {
    TraceBuilder tb(ps, t, "star_by_starify");
    int guard = 0;
    while (!is_star_at(tb.current(), p)) {
        auto r = starify_step(ps, tb.current(), p);
        tb.sim(r.move);
        if (++guard > 64) throw std::logic_error("star_by_starify: no progress");
    }
    return tb.finish(ceil_log2(ps.n()));
}

Trace star_by_sim_rotations(const PointSet& ps, const Tree& t, int p) {
    TraceBuilder tb(ps, t, "star_by_sim_rotations");
    int guard = 0;
    while (!is_star_at(tb.current(), p)) {
        for (auto& m : starify_as_sim_rotations(ps, tb.current(), p)) tb.sim(std::move(m));
        if (++guard > 64) throw std::logic_error("star_by_sim_rotations: no progress");
    }
    return tb.finish(4L * ceil_log2(ps.n()));
}

}  // namespace treemorph
