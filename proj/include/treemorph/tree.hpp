#pragma once

#include "treemorph/geom.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace treemorph {

/// Undirected edge between point indices, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool has(int x) const { return u == x || v == x; }
    int other(int x) const { return x == u ? v : u; }
    /// Shared endpoint, or -1.
    int common(const Edge& o) const {
        if (o.has(u)) return u;
        if (o.has(v)) return v;
        return -1;
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Index of (i,j), i<j, in the lexicographic order of all pairs over n points.
inline int pair_index(int n, int i, int j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

/**
 * Plane spanning tree over a point set, optionally with an edge labeling.
 *
 * Edges are kept sorted; when labeled, labels[i] belongs to edges[i].
 */
class Tree {
public:
    Tree() = default;
    Tree(int n, std::vector<Edge> edges, std::vector<int> labels = {});

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& labels() const { return labels_; }
    bool labeled() const { return !labels_.empty(); }

    bool has(const Edge& e) const;
    /// Position of e in edges(), or -1.
    int index_of(const Edge& e) const;
    int label_of(const Edge& e) const;
    /// Edge carrying label l (labeled trees only).
    Edge edge_with_label(int l) const;

    /// Replaces one edge, moving its label to the new edge. No validation.
    void replace(const Edge& out, const Edge& in);
    Tree unlabeled() const { return Tree(n_, edges_); }
    Tree with_labels(std::vector<int> labels) const { return Tree(n_, edges_, std::move(labels)); }

    std::vector<std::vector<int>> adjacency() const;
    int degree(int x) const;

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> labels_;
};

enum class TreeIssue { bad_index, self_loop, duplicate_edge, edge_count, disconnected, crossing, bad_labels, bad_pointset };

const char* to_string(TreeIssue i);

class TreeError : public std::invalid_argument {
public:
    TreeError(TreeIssue issue, std::vector<Edge> witnesses, const std::string& msg)
        : std::invalid_argument(msg), issue_(issue), witnesses_(std::move(witnesses)) {}
    TreeIssue issue() const { return issue_; }
    const std::vector<Edge>& witnesses() const { return witnesses_; }

private:
    TreeIssue issue_;
    std::vector<Edge> witnesses_;
};

struct TreeCheck {
    TreeIssue issue;
    std::vector<Edge> witnesses;
    std::string message;
};

/// Full validation; nullopt when the edge set is a plane spanning tree with a valid labeling.
std::optional<TreeCheck> check_tree(const PointSet& ps, const std::vector<Edge>& edges, const std::vector<int>& labels = {});
/// Validates and builds, throwing TreeError with witnesses on failure.
Tree validate_tree(const PointSet& ps, const std::vector<Edge>& edges, const std::vector<int>& labels = {});

/// Bitset over the C(n,2) pairs in lexicographic order, followed by the label vector when labeled.
std::string canonical_key(const Tree& t);

Tree star(int n, int center, const std::vector<int>& labels = {});
/// Path through the given vertex order.
Tree path(int n, const std::vector<int>& order);
bool is_star_at(const Tree& t, int center);
/// Greedy noncrossing spanning tree over randomly ordered point pairs; labels are a random permutation when asked.
Tree random_tree(const PointSet& ps, std::uint64_t seed, bool labeled = false);
/// Parent of every vertex when t is rooted at `root` (-1 for the root).
std::vector<int> parent_array(const Tree& t, int root);

/// Hull edges of a convex set in counterclockwise order; hull_edges()[i] joins h[i] and h[i+1].
std::vector<Edge> hull_edges(const PointSet& ps);

struct Cell {
    std::vector<int> boundary;  ///< counterclockwise
    Edge hull_edge;             ///< the boundary edge missing from the tree
    std::optional<Edge> parent_edge;
    int parent = -1;
    int size() const { return static_cast<int>(boundary.size()); }
};

struct DualTree {
    std::vector<Cell> cells;
    std::vector<std::pair<int, int>> adjacency;
    int root = 0;
    /// Cells on each side of a tree edge (second is -1 for hull edges).
    std::vector<std::pair<int, int>> edge_cells;
};

/// Faces of the tree plus the hull, rooted at the cell whose hull edge is root_choice.
DualTree build_dual_tree(const PointSet& ps, const Tree& t, const Edge& root_choice);
DualTree build_dual_tree(const PointSet& ps, const Tree& t);
/// Lowest-index hull edge absent from t.
Edge default_root_hull_edge(const PointSet& ps, const Tree& t);

/**
 * Reduced line graph: one vertex per tree edge (in sorted edge order when built),
 * adjacency for consecutive edges along a cell boundary, and half-edge tags.
 * tags[v][i] is the tag of half-edge (v, nbrs[v][i]).
 */
struct ReducedLineGraph {
    std::vector<int> labels;
    std::vector<std::vector<int>> nbrs;
    std::vector<std::vector<int>> tags;

    int vertex_count() const { return static_cast<int>(nbrs.size()); }
    int edge_count() const;
    int max_degree() const;
    /// Neighbor of v carrying tag t, or -1.
    int by_tag(int v, int t) const;
};

ReducedLineGraph rlg_build(const PointSet& ps, const Tree& t);
/// Rebuilds a labeled tree on the regular n-gon whose reduced line graph equals g.
Tree rlg_reconstruct(const ReducedLineGraph& g, int n);
/// Same graph up to renaming vertices by label.
bool rlg_equal(const ReducedLineGraph& a, const ReducedLineGraph& b);

/// Image of t under the symmetry x -> (reflect ? -x : x) + shift (mod n) of the n-gon.
Tree dihedral_image(const Tree& t, int shift, bool reflect);
bool dihedral_equivalent(const Tree& a, const Tree& b);

}  // namespace treemorph
