#include "treemorph/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace treemorph {

std::string to_string(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

Tree::Tree(int n, std::vector<Edge> edges, std::vector<int> labels) : n_(n) {
    if (!labels.empty() && labels.size() != edges.size())
        throw TreeError(TreeIssue::bad_labels, {}, "label count differs from edge count");
    std::vector<int> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return edges[a] < edges[b]; });
    edges_.reserve(edges.size());
    for (int i : order) edges_.push_back(edges[i]);
    if (!labels.empty()) {
        labels_.reserve(labels.size());
        for (int i : order) labels_.push_back(labels[i]);
    }
}

bool Tree::has(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

int Tree::index_of(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Tree::label_of(const Edge& e) const {
    int i = index_of(e);
    if (i < 0 || labels_.empty()) return 0;
    return labels_[i];
}

Edge Tree::edge_with_label(int l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == l) return edges_[i];
    throw std::out_of_range("no edge with label " + std::to_string(l));
}

void Tree::replace(const Edge& out, const Edge& in) {
    int i = index_of(out);
    if (i < 0) throw std::out_of_range("replace: edge " + to_string(out) + " not in tree");
    int lab = labels_.empty() ? 0 : labels_[i];
    edges_.erase(edges_.begin() + i);
    if (!labels_.empty()) labels_.erase(labels_.begin() + i);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), in);
    auto pos = it - edges_.begin();
    edges_.insert(it, in);
    if (!labels_.empty()) labels_.insert(labels_.begin() + pos, lab);
}

std::vector<std::vector<int>> Tree::adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

int Tree::degree(int x) const {
    int d = 0;
    for (const auto& e : edges_) d += e.has(x);
    return d;
}

const char* to_string(TreeIssue i) {
    switch (i) {
        case TreeIssue::bad_index: return "bad_index";
        case TreeIssue::self_loop: return "self_loop";
        case TreeIssue::duplicate_edge: return "duplicate_edge";
        case TreeIssue::edge_count: return "edge_count";
        case TreeIssue::disconnected: return "disconnected";
        case TreeIssue::crossing: return "crossing";
        case TreeIssue::bad_labels: return "bad_labels";
        case TreeIssue::bad_pointset: return "bad_pointset";
    }
    return "unknown";
}

namespace {

int find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

}  // namespace

std::optional<TreeCheck> check_tree(const PointSet& ps, const std::vector<Edge>& edges, const std::vector<int>& labels) {
    int n = ps.n();
    if (ps.position() == Position::degenerate)
        return TreeCheck{TreeIssue::bad_pointset, {}, "point set is degenerate"};
    for (const auto& e : edges) {
        if (e.u < 0 || e.v >= n) return TreeCheck{TreeIssue::bad_index, {e}, "edge index out of range"};
        if (e.u == e.v) return TreeCheck{TreeIssue::self_loop, {e}, "self loop"};
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
        return TreeCheck{TreeIssue::duplicate_edge, {*it}, "duplicate edge " + to_string(*it)};
    if (static_cast<int>(edges.size()) != std::max(0, n - 1))
        return TreeCheck{TreeIssue::edge_count, {},
                         "expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size())};
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& e : edges) {
        int a = find(parent, e.u), b = find(parent, e.v);
        if (a == b) return TreeCheck{TreeIssue::disconnected, {e}, "edge " + to_string(e) + " closes a cycle"};
        parent[a] = b;
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (ps.cross(edges[i].u, edges[i].v, edges[j].u, edges[j].v))
                return TreeCheck{TreeIssue::crossing, {edges[i], edges[j]},
                                 "edges " + to_string(edges[i]) + " and " + to_string(edges[j]) + " cross"};
    if (!labels.empty()) {
        if (labels.size() != edges.size()) return TreeCheck{TreeIssue::bad_labels, {}, "label count mismatch"};
        std::vector<int> s = labels;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != static_cast<int>(i) + 1)
                return TreeCheck{TreeIssue::bad_labels, {}, "labels are not a bijection onto 1..n-1"};
    }
    return std::nullopt;
}

Tree validate_tree(const PointSet& ps, const std::vector<Edge>& edges, const std::vector<int>& labels) {
    if (auto bad = check_tree(ps, edges, labels)) throw TreeError(bad->issue, bad->witnesses, bad->message);
    return Tree(ps.n(), edges, labels);
}

std::string canonical_key(const Tree& t) {
    int n = t.n();
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string key((bits + 7) / 8, '\0');
    for (const auto& e : t.edges()) {
        auto b = static_cast<std::size_t>(pair_index(n, e.u, e.v));
        key[b / 8] = static_cast<char>(key[b / 8] | (1 << (b % 8)));
    }
    for (int l : t.labels()) {
        key.push_back(static_cast<char>(l & 0xff));
        key.push_back(static_cast<char>((l >> 8) & 0xff));
    }
    return key;
}

Tree random_tree(const PointSet& ps, std::uint64_t seed, bool labeled) {
    int n = ps.n();
    std::mt19937_64 rng(seed);
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    // A maximal noncrossing forest is spanning, since any plane forest extends to a triangulation.
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    std::vector<Edge> edges;
    for (const Edge& e : pairs) {
        if (static_cast<int>(edges.size()) == n - 1) break;
        int a = find(e.u), b = find(e.v);
        if (a == b) continue;
        bool crossing = false;
        for (const Edge& f : edges)
            if (ps.cross(e.u, e.v, f.u, f.v)) {
                crossing = true;
                break;
            }
        if (crossing) continue;
        comp[a] = b;
        edges.push_back(e);
    }
    std::vector<int> labels;
    if (labeled) {
        labels.resize(edges.size());
        std::iota(labels.begin(), labels.end(), 1);
        std::shuffle(labels.begin(), labels.end(), rng);
    }
    return Tree(n, std::move(edges), std::move(labels));
}

Tree star(int n, int center, const std::vector<int>& labels) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        if (i != center) es.emplace_back(center, i);
    return Tree(n, es, labels);
}

Tree path(int n, const std::vector<int>& order) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) es.emplace_back(order[i], order[i + 1]);
    return Tree(n, es);
}

bool is_star_at(const Tree& t, int center) { return t.degree(center) == t.n() - 1; }

std::vector<Edge> hull_edges(const PointSet& ps) {
    auto h = ps.hull();
    std::vector<Edge> out;
    if (h.size() < 2) return out;
    if (h.size() == 2) return {Edge(h[0], h[1])};
    for (std::size_t i = 0; i < h.size(); ++i) out.emplace_back(h[i], h[(i + 1) % h.size()]);
    return out;
}

Tree dihedral_image(const Tree& t, int shift, bool reflect) {
    int n = t.n();
    auto map = [&](int x) { return (((reflect ? -x : x) + shift) % n + n) % n; };
    std::vector<Edge> es;
    es.reserve(t.edges().size());
    for (const auto& e : t.edges()) es.emplace_back(map(e.u), map(e.v));
    return Tree(n, es, t.labels());
}

bool dihedral_equivalent(const Tree& a, const Tree& b) {
    if (a.n() != b.n()) return false;
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < a.n(); ++s)
            if (dihedral_image(a, s, r == 1) == b) return true;
    return false;
}

std::vector<int> parent_array(const Tree& t, int root) {
    auto adj = t.adjacency();
    std::vector<int> parent(t.n(), -2);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (parent[y] == -2) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    return parent;
}

}  // namespace treemorph
