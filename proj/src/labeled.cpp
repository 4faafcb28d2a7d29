#include "labeled_util.hpp"
#include "treemorph/graphx.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace treemorph {

namespace detail {

void require_labeled_pair(const PointSet& ps, const Tree& t1, const Tree& t2, const char* who) {
    for (const Tree* t : {&t1, &t2}) {
        if (t->n() != ps.n()) throw std::invalid_argument(std::string(who) + ": tree and point set sizes differ");
        if (!t->labeled() && ps.n() > 1) throw std::invalid_argument(std::string(who) + ": trees must be labeled");
        validate_tree(ps, t->edges(), t->labels());
    }
}

Trace relabel(Trace tr, const Tree& start) {
    if (tr.initial.edges() != start.edges()) throw std::logic_error("relabel: trace starts elsewhere");
    tr.initial = start;
    return tr;
}

std::vector<int> path_vertices(const Tree& t) {
    auto adj = t.adjacency();
    int n = t.n();
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (adj[v].size() <= 1) start = v;
    std::vector<int> out{start};
    for (int prev = -1, cur = start; static_cast<int>(out.size()) < n;) {
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        if (next < 0 || adj[cur].size() > 2) throw std::logic_error("path_vertices: tree is not a path");
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

Tree assign_labels(const Tree& from, const std::vector<Edge>& to, const std::map<int, Edge>& wishes) {
    Tree goal(from.n(), to);
    std::vector<int> labels(goal.edges().size(), 0);
    std::set<int> free_labels;
    for (std::size_t i = 0; i < from.edges().size(); ++i)
        if (!goal.has(from.edges()[i])) free_labels.insert(from.labels()[i]);
    for (std::size_t i = 0; i < goal.edges().size(); ++i)
        if (from.has(goal.edges()[i])) labels[i] = from.label_of(goal.edges()[i]);
    for (const auto& [l, e] : wishes) {
        int i = goal.index_of(e);
        if (i < 0 || labels[i] != 0 || !free_labels.count(l)) continue;
        labels[i] = l;
        free_labels.erase(l);
    }
    auto it = free_labels.begin();
    for (auto& l : labels)
        if (l == 0) l = *it++;
    return goal.with_labels(std::move(labels));
}

void sim_by_labels(TraceBuilder& tb, const Tree& target, Kind kind) {
    const Tree& cur = tb.current();
    SimMove m{{}, kind, false};
    for (std::size_t i = 0; i < cur.edges().size(); ++i) {
        const Edge& e = cur.edges()[i];
        int l = cur.labels()[i];
        if (target.has(e)) {
            if (target.label_of(e) != l) throw std::logic_error("sim_by_labels: shared edge " + to_string(e) + " changes its label");
            continue;
        }
        m.pairs.emplace_back(e, target.edge_with_label(l));
    }
    tb.sim(std::move(m));
}

}  // namespace detail

using namespace detail;

// ---------------------------------------------------------------------------

Trace labeled_transform_rotations(const PointSet& ps, const Tree& t1, const Tree& t2) {
    require_labeled_pair(ps, t1, t2, "labeled_transform_rotations");
    int n = ps.n();
    long bound = n < 2 ? 0 : 11L * (n - 2);
    TraceBuilder tb(ps, t1, "labeled_transform_rotations");
    if (t1 == t2) return tb.finish(bound);
    int p = extreme_point(ps);
    std::vector<int> full = radial_order(ps, p);
    full.insert(full.begin(), p);
    // Star at p, then each star edge turned onto the radial path.
    auto to_path = [&](const Tree& t) {
        TraceBuilder b(ps, t, "labeled_transform_rotations");
        b.append(relabel(star_by_rotations(ps, t.unlabeled(), p), t));
        for (int k = 2; k < n; ++k) b.move(Edge(p, full[k]), Edge(full[k - 1], full[k]), Kind::rotation);
        return b.finish(2L * (n - 2));
    };
    Trace a = to_path(t1), b = to_path(t2);
    tb.append(a);
    std::vector<Edge> order;
    for (int k = 0; k + 1 < n; ++k) order.emplace_back(full[k], full[k + 1]);
    Tree goal = replay(ps, b);
    LabelPermutation perm(tb.current(), order);
    for (int i = 0; i < n - 1; ++i) {
        int want = goal.label_of(order[i]);
        if (perm.label_at(i) == want) continue;
        int j = perm.position_of(want);
        tb.append(swap_gadget(ps, tb.current(), Gadget::path7rotations, order[i], order[j]));
        perm.swap_positions(i, j);
    }
    tb.append(reversed(ps, b));
    return tb.finish(bound);
}

// ---------------------------------------------------------------------------

long labeled_sim_compatible_bound(int n) { return 8L * ceil_log2(std::max(n, 2)); }

namespace {

// Shortest labeled path by brute force, for n <= 3.
Trace small_sim_exchange(const PointSet& ps, const Tree& t1, const Tree& t2, Kind kind, long bound) {
    auto g = build_transition_graph(ps, GraphSpec{kind, true, false, true});
    int a = g.find(t1), b = g.find(t2);
    auto da = bfs_distances(g, a);
    TraceBuilder tb(ps, t1, "labeled_sim_exchange_transform");
    // Walk back from b along decreasing distance.
    std::vector<int> route{b};
    while (route.back() != a) {
        int v = route.back();
        for (int w : g.adj[v])
            if (da[w] == da[v] - 1) {
                route.push_back(w);
                break;
            }
    }
    for (auto it = route.rbegin() + 1; it != route.rend(); ++it) sim_by_labels(tb, g.nodes[*it], kind);
    return tb.finish(bound);
}

Tree hull_path_from(const std::vector<int>& hull, int start, int dir) {
    int n = static_cast<int>(hull.size());
    int at = static_cast<int>(std::find(hull.begin(), hull.end(), start) - hull.begin());
    std::vector<int> order;
    for (int k = 0; k < n; ++k) order.push_back(hull[((at + dir * k) % n + n) % n]);
    return path(n, order);
}

bool is_hull_edge(const std::vector<int>& hull, const Edge& e) {
    int n = static_cast<int>(hull.size());
    for (int k = 0; k < n; ++k)
        if (Edge(hull[k], hull[(k + 1) % n]) == e) return true;
    return false;
}

// Convex position, n >= 4.
Trace convex_sim_exchange(const PointSet& ps, const Tree& t1, const Tree& t2, bool compatible) {
    const Kind kind = compatible ? Kind::compatible : Kind::exchange;
    const long bound = compatible ? 4 : 3;
    const int n = ps.n();
    const auto hull = ps.hull();
    auto hull_list = hull_edges(ps);
    TraceBuilder tb(ps, t1, "labeled_sim_exchange_transform");

    // Shared hull edge with the same label: meet at a hull path and a star sharing it.
    for (const Edge& uv : hull_list) {
        if (!t1.has(uv) || !t2.has(uv) || t1.label_of(uv) != t2.label_of(uv)) continue;
        int u = uv.u, v = uv.v;
        int at = static_cast<int>(std::find(hull.begin(), hull.end(), u) - hull.begin());
        int dir = hull[(at + 1) % n] == v ? 1 : -1;
        Tree pa = hull_path_from(hull, u, dir);
        Tree la = assign_labels(t1, pa.edges());
        std::vector<Tree> back;  // t2 side, ending at the star
        Tree cur = t2;
        if (compatible) {
            cur = assign_labels(cur, pa.edges());
            back.push_back(cur);
        }
        back.push_back(assign_labels(cur, star(n, u).edges()));
        sim_by_labels(tb, la, kind);
        for (auto it = back.rbegin(); it != back.rend(); ++it) sim_by_labels(tb, *it, kind);
        sim_by_labels(tb, t2, kind);
        return tb.finish(bound);
    }

    auto is_hull_path = [&](const Tree& t) {
        return std::all_of(t.edges().begin(), t.edges().end(), [&](const Edge& e) { return is_hull_edge(hull, e); });
    };

    if (is_hull_path(t1) && is_hull_path(t2)) {
        std::vector<int> v = path_vertices(t1);
        // Orient so that the first edge's label sits on a path edge of t2, not on the closing edge.
        if (t2.edge_with_label(t1.label_of(Edge(v[0], v[1]))) == Edge(v[n - 1], v[0])) std::reverse(v.begin(), v.end());
        auto V = [&](int k) { return v[k - 1]; };
        Edge target = t2.edge_with_label(t1.label_of(Edge(V(1), V(2))));
        int i = -1;
        for (int k = 2; k < n; ++k)
            if (Edge(V(k), V(k + 1)) == target) i = k;
        if (i < 0) throw std::logic_error("labeled_sim_exchange_transform: label not on a path edge");
        std::map<int, Edge> wishes;
        Edge closing(V(1), V(n)), second(V(2), V(3));
        if (t2.has(closing) && !(i > 2 && i + 1 == n)) wishes[t2.label_of(closing)] = closing;
        if (t2.has(second) && i > 2) wishes[t2.label_of(second)] = Edge(V(1), V(i + 1));
        sim_by_labels(tb, assign_labels(t1, star(n, V(1)).edges(), wishes), kind);
        SimMove m{{{Edge(V(1), V(2)), Edge(V(i), V(i + 1))}}, kind, false};
        if (i > 2) m.pairs.emplace_back(Edge(V(1), V(i + 1)), second);
        tb.sim(m);
        sim_by_labels(tb, t2, kind);
        return tb.finish(bound);
    }

    auto has_inner = [&](const Tree& t) { return !is_hull_path(t); };
    if (!has_inner(t1)) {
        Trace r = reversed(ps, convex_sim_exchange(ps, t2, t1, compatible));
        r.algorithm = "labeled_sim_exchange_transform";
        return r;
    }
    // Meet at the hull path v1..vn and the star at v1, where v1v2 is missing from t2.
    for (const Edge& h : hull_list) {
        if (t2.has(h)) continue;
        for (int v1 : {h.u, h.v}) {
            int v2 = h.other(v1);
            int at = static_cast<int>(std::find(hull.begin(), hull.end(), v1) - hull.begin());
            Tree pa = hull_path_from(hull, v1, hull[(at + 1) % n] == v2 ? 1 : -1);
            Tree sb = star(n, v1);
            std::vector<int> choices;
            if (t1.has(h)) choices.push_back(t1.label_of(h));
            else
                for (std::size_t k = 0; k < t1.edges().size(); ++k)
                    if (!pa.has(t1.edges()[k])) choices.push_back(t1.labels()[k]);
            // Compatible mode reaches the star through a hull path; any hull path will do.
            std::vector<Tree> via;
            if (compatible) {
                via.push_back(pa);
                for (int k = 0; k < n; ++k) {
                    Tree q = hull_path_from(hull, hull[k], 1);
                    if (q.edges() != pa.edges()) via.push_back(q);
                }
            }
            for (int lambda : choices) {
                Tree la = assign_labels(t1, pa.edges(), {{lambda, h}});
                std::vector<Tree> back;
                if (!compatible) {
                    Tree lb = assign_labels(t2, sb.edges(), {{lambda, h}});
                    if (lb.label_of(h) == lambda) back.push_back(lb);
                }
                for (std::size_t q = 0; q < via.size() && back.empty(); ++q) {
                    // Where lambda lands on the path decides whether it can move on to h.
                    std::vector<Edge> spots{h};
                    for (const Edge& f : via[q].edges())
                        if (!t2.has(f) && f != h) spots.push_back(f);
                    for (const Edge& f : spots) {
                        Tree lq = assign_labels(t2, via[q].edges(), {{lambda, f}});
                        Tree lb = assign_labels(lq, sb.edges(), {{lambda, h}});
                        if (lb.label_of(h) != lambda) continue;
                        back = {lq, lb};
                        break;
                    }
                }
                if (back.empty()) continue;
                sim_by_labels(tb, la, kind);
                for (auto it = back.rbegin(); it != back.rend(); ++it) sim_by_labels(tb, *it, kind);
                sim_by_labels(tb, t2, kind);
                return tb.finish(bound);
            }
        }
    }
    throw std::logic_error("labeled_sim_exchange_transform: no meeting pair of trees found");
}

}  // namespace

Trace labeled_sim_exchange_transform(const PointSet& ps, const Tree& t1, const Tree& t2, bool compatible) {
    require_labeled_pair(ps, t1, t2, "labeled_sim_exchange_transform");
    const int n = ps.n();
    const Kind kind = compatible ? Kind::compatible : Kind::exchange;
    const bool convex = ps.position() == Position::convex;
    const long bound = !compatible ? 3 : convex ? 4 : labeled_sim_compatible_bound(n);
    TraceBuilder tb(ps, t1, "labeled_sim_exchange_transform");
    if (t1 == t2) return tb.finish(bound);
    if (n <= 3) return small_sim_exchange(ps, t1, t2, kind, bound);
    if (convex) return convex_sim_exchange(ps, t1, t2, compatible);

    auto [a, b] = disjoint_compatible_pair(ps);
    if (!compatible) {
        Tree la = assign_labels(t1, a.edges());
        Tree lb = assign_labels(t2, b.edges());
        sim_by_labels(tb, la, kind);
        sim_by_labels(tb, lb, kind);
        sim_by_labels(tb, t2, kind);
        return tb.finish(bound);
    }
    // Each side goes through the star at an extreme point by starify steps, then out to its tree of the pair.
    int p = extreme_point(ps);
    auto side = [&](const Tree& t, const Tree& meet) {
        TraceBuilder b(ps, t, "labeled_sim_exchange_transform");
        b.append(relabel(star_by_starify(ps, t.unlabeled(), p), t));
        b.append(relabel(reversed(ps, star_by_starify(ps, meet, p)), b.current()));
        return b.finish(2L * ceil_log2(n));
    };
    Trace sa = side(t1, a), sb = side(t2, b);
    tb.append(sa);
    sim_by_labels(tb, replay(ps, sb), kind);
    tb.append(reversed(ps, sb));
    return tb.finish(bound);
}

// ---------------------------------------------------------------------------

namespace {

// Perfect matching of edges to labels within the allowed sets.
bool labels_fit(const std::vector<std::vector<int>>& allowed, int labels) {
    std::vector<int> owner(labels + 1, -1);
    std::function<bool(int, std::vector<char>&)> augment = [&](int e, std::vector<char>& seen) {
        for (int l : allowed[e]) {
            if (seen[l]) continue;
            seen[l] = 1;
            if (owner[l] < 0 || augment(owner[l], seen)) {
                owner[l] = e;
                return true;
            }
        }
        return false;
    };
    for (std::size_t e = 0; e < allowed.size(); ++e) {
        std::vector<char> seen(labels + 1, 0);
        if (!augment(static_cast<int>(e), seen)) return false;
    }
    return true;
}

}  // namespace

bool labeled_sim_exchange_within_two(const PointSet& ps, const Tree& t1, const Tree& t2, LowerCertificate* stats) {
    if (t1 == t2) return true;
    if (validate_simultaneous(ps, t1, t2, Kind::exchange)) return true;
    int m = ps.n() - 1;
    for (const Tree& mid : enumerate_trees(ps)) {
        if (stats) ++stats->intermediates;
        std::vector<int> free1, free2;
        for (std::size_t k = 0; k < t1.edges().size(); ++k)
            if (!mid.has(t1.edges()[k])) free1.push_back(t1.labels()[k]);
        for (std::size_t k = 0; k < t2.edges().size(); ++k)
            if (!mid.has(t2.edges()[k])) free2.push_back(t2.labels()[k]);
        std::vector<std::vector<int>> allowed;
        bool dead = false;
        for (const Edge& e : mid.edges()) {
            std::vector<int> a = t1.has(e) ? std::vector<int>{t1.label_of(e)} : free1;
            std::vector<int> b = t2.has(e) ? std::vector<int>{t2.label_of(e)} : free2;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::vector<int> both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            if (both.empty()) dead = true;
            allowed.push_back(std::move(both));
        }
        if (dead) continue;
        if (stats) ++stats->label_checks;
        if (labels_fit(allowed, m)) return true;
    }
    return false;
}

LowerCertificate labeled_sim_lower_check(const PointSet& ps, const Tree& t1, const Tree& t2) {
    require_labeled_pair(ps, t1, t2, "labeled_sim_lower_check");
    int n = ps.n();
    if (n < 3) throw std::invalid_argument("labeled_sim_lower_check: needs at least 3 points");
    int c = -1;
    for (int v = 0; v < n; ++v)
        if (is_star_at(t1, v)) c = v;
    if (c < 0 || !is_star_at(t2, c)) throw std::invalid_argument("labeled_sim_lower_check: trees must be stars with the same center");
    for (const Edge& e : t1.edges())
        if (t1.label_of(e) == t2.label_of(e))
            throw std::invalid_argument("labeled_sim_lower_check: edge " + to_string(e) + " keeps its label");
    LowerCertificate cert;
    bool two = labeled_sim_exchange_within_two(ps, t1, t2, &cert);
    cert.at_least_3 = !two;
    cert.reason = two ? "a path of at most two simultaneous exchanges exists"
                      : "no intermediate tree admits labels consistent with both stars";
    return cert;
}

// ---------------------------------------------------------------------------

Trace star_label_sort(const PointSet& ps, const Tree& s1, const Tree& s2) {
    int n = ps.n();
    TraceBuilder tb(ps, s1, "star_label_sort");
    long bound = n < 2 ? 0 : 3L * (n - 1);
    if (n < 3 || s1 == s2) return tb.finish(bound);
    int p = -1;
    for (int v = 0; v < n; ++v)
        if (is_star_at(s1, v)) p = v;
    if (p < 0 || !is_star_at(s2, p)) throw std::invalid_argument("star_label_sort: trees must be stars with the same center");
    require_extreme(ps, p);
    auto order = radial_order(ps, p);
    int m = n - 1;
    std::vector<Edge> slots;
    for (int q : order) slots.emplace_back(p, q);
    std::vector<int> rank(n, 0);
    for (int k = 0; k < m; ++k) rank[s2.label_of(slots[k])] = k;
    LabelPermutation perm(s1, slots);
    auto key = [&](int k) { return rank[perm.label_at(k)]; };
    int rounds = 0;
    for (int r = 0; r < m; ++r) {
        std::vector<int> swaps;
        for (int k = r % 2; k + 1 < m; k += 2)
            if (key(k) > key(k + 1)) swaps.push_back(k);
        if (swaps.empty()) continue;
        ++rounds;
        for (int s = 0; s < 3; ++s) {
            SimMove mv{{}, Kind::slide, true};
            for (int k : swaps) mv.pairs.push_back(quad_swap_plan(order[k], p, p, order[k + 1])[s]);
            tb.sim(mv);
        }
        for (int k : swaps) perm.swap_positions(k, k + 1);
    }
    for (int k = 0; k + 1 < m; ++k)
        if (key(k) > key(k + 1)) throw std::logic_error("star_label_sort: labels unsorted after the last round");
    return tb.finish(bound);
}

Trace labeled_sim_empty_tri_transform(const PointSet& ps, const Tree& t1, const Tree& t2) {
    require_labeled_pair(ps, t1, t2, "labeled_sim_empty_tri_transform");
    int n = ps.n();
    TraceBuilder tb(ps, t1, "labeled_sim_empty_tri_transform");
    if (t1 == t2) return tb.finish(12L * n);
    int p = extreme_point(ps);
    Trace a = relabel(star_by_sim_empty_tri(ps, t1.unlabeled(), p), t1);
    Trace b = relabel(star_by_sim_empty_tri(ps, t2.unlabeled(), p), t2);
    tb.append(a);
    tb.append(star_label_sort(ps, tb.current(), replay(ps, b)));
    tb.append(reversed(ps, b));
    return tb.finish(12L * n);
}

}  // namespace treemorph
