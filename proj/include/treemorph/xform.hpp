#pragma once

#include "treemorph/trace.hpp"

#include <utility>
#include <vector>

namespace treemorph {

/// Lowest-then-leftmost point; always a hull vertex.
int extreme_point(const PointSet& ps);
/// The other points sorted counterclockwise around an extreme point p.
std::vector<int> radial_order(const PointSet& ps, int p);
/// Throws GeometryError unless p is a vertex of the convex hull.
void require_extreme(const PointSet& ps, int p);
/// ceil(log2(n)) for n >= 1.
int ceil_log2(long n);

// ---------------------------------------------------------------------------
// Stars by single and simultaneous rotations.

/// At most n-2 rotations, each adding an edge at p.
Trace star_by_rotations(const PointSet& ps, const Tree& t, int p);

/**
 * Combinatorial state of one starify step, in the frame where p sits at y = -infinity:
 * x-coordinates are ranks in the radial order around p, and "below" means closer to p along a ray.
 */
struct StarifyState {
    int p = 0;
    std::vector<int> rank;        ///< rank[s] in 0..n-2 for s != p, -1 for p
    std::vector<int> out;         ///< parent of each vertex in the tree rooted at p, -1 for p
    std::vector<int> hit;         ///< first edge (index into t.edges()) hit by the ray from s toward p, or -1
    std::vector<int> edge_order;  ///< linear extension of the below relation over edges not incident to p
    /// Per edge index: the vertices whose rays hit it, sorted by rank.
    std::vector<std::vector<int>> hit_by;
    /// New parent of each vertex after the step.
    std::vector<int> new_out;

    int width(int a, int b) const;
};

StarifyState starify_state(const PointSet& ps, const Tree& t, int p);

struct StarifyResult {
    Tree tree;
    SimMove move;  ///< simultaneous compatible exchange; empty when t is already the star
};

StarifyResult starify_step(const PointSet& ps, const Tree& t, int p);
/// The same step as up to four simultaneous rotations.
std::vector<SimMove> starify_as_sim_rotations(const PointSet& ps, const Tree& t, int p);
/// Iterated starify steps, at most ceil(log2 n) simultaneous compatible exchanges.
Trace star_by_starify(const PointSet& ps, const Tree& t, int p);
/// At most 4 ceil(log2 n) simultaneous rotations.
Trace star_by_sim_rotations(const PointSet& ps, const Tree& t, int p);

// ---------------------------------------------------------------------------
// Empty-triangle rotations.

/// Recursive halving by rays from p; at most 4 n log2 n empty-triangle rotations.
Trace star_by_empty_tri(const PointSet& ps, const Tree& t, int p);
/// Same recursion with independent subproblems advanced together; fewer than 4n steps.
Trace star_by_sim_empty_tri(const PointSet& ps, const Tree& t, int p);
/// Convex position: at most 2 simultaneous empty-triangle rotations to the hull path without `avoid`.
Trace convex_hull_path_by_sim_empty_tri(const PointSet& ps, const Tree& t, const Edge& avoid);

// ---------------------------------------------------------------------------
// Edge slides in convex position.

/// Slides moving one path of boundary edges of a convex polygon to another.
/// `cycle` lists the polygon's vertices in order; the source path misses `missing1`, the target misses `missing2`.
std::vector<std::pair<Edge, Edge>> boundary_path_slides(const std::vector<int>& cycle, const Edge& missing1,
                                                        const Edge& missing2);
/// Exactly n-2 slides between distinct hull paths.
Trace path_to_path_slides(const PointSet& ps, const Tree& p1, const Tree& p2);
/// Slides from t to the hull path without `root_edge` (a hull edge absent from t); n - n0 slides.
Trace convex_path_by_slides(const PointSet& ps, const Tree& t, const Edge& root_edge);
/// Slide traces from t1 and from t2 into one hull path, at most 2n-5 slides together.
std::pair<Trace, Trace> convex_slides_to_common_path(const PointSet& ps, const Tree& t1, const Tree& t2);
/// At most 2n-5 slides.
Trace convex_transform_by_slides(const PointSet& ps, const Tree& t1, const Tree& t2);
/// Restricted simultaneous slides to the star at p, at most 120 (log2 n + 1) steps.
Trace convex_star_by_sim_slides(const PointSet& ps, const Tree& t, int p);
/// Engineering constant of the simultaneous slide bound.
inline constexpr long kSimSlideConstant = 120;
long sim_slide_bound(int n);

// ---------------------------------------------------------------------------
// Special pairs.

/// Two compatible plane trees sharing no edge (interior point present) or only the hull edge v1v2 (convex).
std::pair<Tree, Tree> disjoint_compatible_pair(const PointSet& ps);
/// A pair on the hexagon from sim_rotation_lb_points() at simultaneous-rotation distance at least 3.
std::pair<Tree, Tree> sim_rotation_lb_pair();

}  // namespace treemorph
