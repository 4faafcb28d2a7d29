#pragma once

#include "treemorph/xform.hpp"

#include <string>
#include <vector>

namespace treemorph {

/// Label positions over the edges of a fixed host tree, with swaps tracked.
class LabelPermutation {
public:
    /// Labels of `host` read off in the given edge order.
    LabelPermutation(const Tree& host, const std::vector<Edge>& order);

    int size() const { return static_cast<int>(at_.size()); }
    int label_at(int pos) const { return at_[pos]; }
    int position_of(int label) const { return pos_[label]; }
    void swap_positions(int i, int j);
    /// Moves the label at route.front() to route.back(); the labels in between shift one place back.
    void rotate_along(const std::vector<int>& route);

private:
    std::vector<int> at_;   // position -> label
    std::vector<int> pos_;  // label -> position
};

// ---------------------------------------------------------------------------
// Label-swap gadgets. Each returns a trace whose net effect exchanges the labels of e and f
// and restores the edge set.

enum class Gadget { adjacent3slides, quad4rotations, path7rotations };

const char* to_string(Gadget g);
Gadget gadget_from_string(const std::string& s);

/// adjacent3slides: e and f share a vertex p and span an empty triangle; exactly 3 slides.
/// quad4rotations: e and f are hull edges of a hull path (convex position); at most 4 empty-triangle rotations.
/// path7rotations: t is the radial path from an extreme point; at most 7 rotations.
/// Throws std::invalid_argument when the gadget's preconditions fail.
Trace swap_gadget(const PointSet& ps, const Tree& t, Gadget g, const Edge& e, const Edge& f);

/// The four moves of the quadrilateral swap of path edges ab and cd (a,b,c,d in path order),
/// or the three slides of the triangle swap when b == c.
std::vector<std::pair<Edge, Edge>> quad_swap_plan(int a, int b, int c, int d);

// ---------------------------------------------------------------------------
// Labeled transformations.

/// Rotations through the radial path from an extreme point; at most 11(n-2).
Trace labeled_transform_rotations(const PointSet& ps, const Tree& t1, const Tree& t2);

/// At most 3 simultaneous exchanges. With `compatible`: simultaneous compatible exchanges, at most 4 in
/// convex position and at most 8 ceil(log2 n) otherwise.
Trace labeled_sim_exchange_transform(const PointSet& ps, const Tree& t1, const Tree& t2, bool compatible);
long labeled_sim_compatible_bound(int n);

/// Outcome of the exhaustive search for a path of at most two simultaneous exchanges.
struct LowerCertificate {
    bool at_least_3 = false;
    long intermediates = 0;   ///< unlabeled trees examined
    long label_checks = 0;    ///< intermediates whose edge set passed and needed a labeling search
    std::string reason;
};

/// Certifies that two same-center stars with every edge relabeled are at least 3 simultaneous exchanges apart.
LowerCertificate labeled_sim_lower_check(const PointSet& ps, const Tree& t1, const Tree& t2);
/// True when a labeled tree is reachable from t1 by one simultaneous exchange and reaches t2 by another.
bool labeled_sim_exchange_within_two(const PointSet& ps, const Tree& t1, const Tree& t2, LowerCertificate* stats = nullptr);

/// Both trees to the star at an extreme point, then odd-even transposition sort; at most 12n steps.
Trace labeled_sim_empty_tri_transform(const PointSet& ps, const Tree& t1, const Tree& t2);

/// Convex position. Single: at most 6n-13 empty-triangle rotations.
/// Simultaneous: 4 steps to a common hull path, then parallel swap waves; at most 8 + 16 ceil(log2 n).
Trace labeled_cx_empty_tri_transform(const PointSet& ps, const Tree& t1, const Tree& t2, bool simultaneous);

/// Recursive median-split tree rooted at hull vertex r, in convex position.
struct BalancedTree {
    Tree tree;
    int root = 0;
    std::vector<int> parent;  ///< -1 at the root
    std::vector<int> depth;
    int height = 0;
};

BalancedTree canonical_balanced_tree(const PointSet& ps, int r);

/// Convex position. Single: slides to the balanced tree and label routing along it,
/// at most 2(2n-5) + 6(n-2)(ceil(log2 n)+1). Simultaneous: restricted slides to a star and
/// odd-even transposition sort, at most 2 * sim_slide_bound(n) + 3(n-1).
Trace labeled_cx_slides_transform(const PointSet& ps, const Tree& t1, const Tree& t2, bool simultaneous);

/// Radial positions around p sorted by odd-even transposition rounds of 3 simultaneous slides each.
/// Both trees must be the star at the extreme point p.
Trace star_label_sort(const PointSet& ps, const Tree& s1, const Tree& s2);

}  // namespace treemorph
