#pragma once

#include "treemorph/tree.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace treemorph {

/// Operation kinds ordered from weakest to strongest; each implies all weaker ones.
enum class Kind : int { exchange = 0, compatible = 1, rotation = 2, empty_triangle = 3, slide = 4 };

const char* to_string(Kind k);
Kind kind_from_string(const std::string& s);
inline bool satisfies(Kind have, Kind want) { return static_cast<int>(have) >= static_cast<int>(want); }
inline constexpr Kind all_kinds[] = {Kind::exchange, Kind::compatible, Kind::rotation, Kind::empty_triangle, Kind::slide};

struct Move {
    Edge removed;
    Edge inserted;
    Kind kind = Kind::exchange;

    friend bool operator==(const Move&, const Move&) = default;
};

struct SimMove {
    std::vector<std::pair<Edge, Edge>> pairs;  ///< (removed, inserted)
    Kind kind = Kind::exchange;
    bool restricted = false;
};

class MoveError : public std::invalid_argument {
public:
    MoveError(const std::string& msg, std::optional<Kind> strongest = std::nullopt)
        : std::invalid_argument(msg), strongest_(strongest) {}
    /// Strongest kind the move does satisfy, when it is a valid exchange at all.
    std::optional<Kind> strongest() const { return strongest_; }

private:
    std::optional<Kind> strongest_;
};

/// Per-pair geometric condition of a kind, evaluated against the edge sets of both trees.
/// `both` lists E1 u E2 (for emptiness), `shared` tests membership in E1 n E2 (for the slide side).
template <class SharedFn>
bool pair_condition(const PointSet& ps, const Edge& e1, const Edge& e2, Kind kind, const std::vector<Edge>& both,
                    SharedFn&& shared);

/// Strongest kind of the single move, or nullopt when the result is not a plane spanning tree.
std::optional<Kind> classify_move(const PointSet& ps, const Tree& t, const Edge& removed, const Edge& inserted);
Tree apply_move(const PointSet& ps, const Tree& t, const Move& m);
/// Valid moves of at least the given kind, ordered by removed edge then inserted edge.
std::vector<Move> enumerate_neighbors(const PointSet& ps, const Tree& t, Kind kind);

enum class SimStatus { found, none, unknown };

struct SimResult {
    SimStatus status = SimStatus::none;
    SimMove move;
    explicit operator bool() const { return status == SimStatus::found; }
};

/// Searches for a bijection E1\E2 -> E2\E1 whose pairs all meet the kind's condition.
/// Labeled trees force the bijection through the labels. The restricted flag applies to slides.
SimResult validate_simultaneous(const PointSet& ps, const Tree& t1, const Tree& t2, Kind kind, bool restricted = false,
                                long node_budget = 1000000);

/// Applies a simultaneous move after checking every pair and the resulting tree; throws MoveError.
Tree apply_sim_move(const PointSet& ps, const Tree& t1, const SimMove& m);

/// Applies the pairs of a simultaneous slide one at a time; every prefix must be a tree reached by a single slide.
std::vector<Tree> sequentialize_sim_slides(const PointSet& ps, const Tree& t1, const SimMove& sim, const std::vector<int>& order);

/// Claimed cap on the pairs of a simultaneous slide, 2 floor((n-1)/3).
inline int slide_packing_bound(int n) { return 2 * ((n - 1) / 3); }
/// Largest possible number of pairs, floor(2(n-1)/3): every pair needs a shared third side
/// and at most two pairs slide along one shared edge.
inline int slide_packing_max(int n) { return n < 2 ? 0 : 2 * (n - 1) / 3; }

/// Closed slide triangles meet in at most one point.
bool slide_triangles_compatible(const PointSet& ps, const std::pair<Edge, Edge>& a, const std::pair<Edge, Edge>& b);
/// Open triangle interiors are disjoint.
bool triangle_interiors_disjoint(const PointSet& ps, int a0, int a1, int a2, int b0, int b1, int b2);

/// Plane spanning tree check when only `added` edges may cross the rest.
bool still_plane_tree(const PointSet& ps, const std::vector<Edge>& edges, const std::vector<Edge>& added);

// ---------------------------------------------------------------------------

template <class SharedFn>
bool pair_condition(const PointSet& ps, const Edge& e1, const Edge& e2, Kind kind, const std::vector<Edge>& both,
                    SharedFn&& shared) {
    if (e1 == e2) return false;
    if (kind == Kind::exchange) return true;
    if (ps.cross(e1.u, e1.v, e2.u, e2.v)) return false;
    if (kind == Kind::compatible) return true;
    int c = e1.common(e2);
    if (c < 0) return false;
    if (kind == Kind::rotation) return true;
    int a = e1.other(c), b = e2.other(c);
    if (ps.orient(c, a, b) == 0) return false;
    for (const auto& f : both)
        if (ps.blocks(c, a, b, f.u, f.v)) return false;
    if (kind == Kind::empty_triangle) return true;
    return shared(Edge(a, b));
}

}  // namespace treemorph
