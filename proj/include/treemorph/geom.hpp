#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treemorph {

using Int = mpz_class;

struct Point {
    Int x;
    Int y;

    Point() = default;
    Point(Int px, Int py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

using Segment = std::pair<Point, Point>;

enum class Orientation : int { CW = -1, COLLINEAR = 0, CCW = 1 };

enum class Position { general, convex, unchecked, degenerate };

const char* to_string(Position p);
Position position_from_string(const std::string& s);

/// Raised for malformed geometric input (degenerate triangles, bad generator parameters).
class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Orientation orientation(const Point& a, const Point& b, const Point& c);

/// True iff the open segments share a point.
bool proper_cross(const Segment& s1, const Segment& s2);

/// True iff some segment meets the open interior of triangle pqr. Throws on a collinear triangle.
bool triangle_blocked(const Point& p, const Point& q, const Point& r, const std::vector<Segment>& edges);

/// Strictly inside the triangle (any orientation).
bool strictly_inside(const Point& p, const Point& q, const Point& r, const Point& s);

/**
 * Ordered point set with its position flag.
 *
 * Index-based predicates take a 64-bit fast path whenever every coordinate
 * fits in 28 bits; otherwise they fall back to GMP.
 */
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts, Position pos = Position::unchecked);

    std::size_t size() const { return pts_.size(); }
    int n() const { return static_cast<int>(pts_.size()); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }
    Position position() const { return pos_; }
    void set_position(Position p) { pos_ = p; }
    bool small() const { return small_; }

    int orient(int a, int b, int c) const;
    /// Open segments ab and cd share a point.
    bool cross(int a, int b, int c, int d) const;
    /// Segment ab meets the open interior of triangle pqr.
    bool blocks(int p, int q, int r, int a, int b) const;
    /// Point s strictly inside triangle pqr.
    bool inside(int p, int q, int r, int s) const;
    /// Indices of hull vertices in counterclockwise order, starting at the lowest-then-leftmost point.
    std::vector<int> hull() const;

private:
    std::vector<Point> pts_;
    std::vector<std::int64_t> fx_, fy_;
    Position pos_ = Position::unchecked;
    bool small_ = false;
};

/// Classifies the set and stores the result in its flag.
Position check_position(PointSet& ps);
Position classify_points(const std::vector<Point>& pts);

struct GenParams {
    int n = 0;
    int k = 0;
};

PointSet generate(const std::string& kind, const GenParams& params, std::uint64_t seed);
PointSet convex_regular(int n);
PointSet random_general(int n, std::uint64_t seed);
/// Tower set on 2^k+1 points with heights n^(2(k-j(x))), perturbed to general position.
PointSet binary_tower(int k, bool perturb = true);
/// Unperturbed tower heights, x = 0..2^k.
std::vector<Int> binary_tower_heights(int k);
/// Regular hexagon, vertices a..f counterclockwise.
PointSet sim_rotation_lb_points();

/// Brute-force check that every empty triangle with two vertices in level i has its third in level i+1.
bool verify_tower_levels(const PointSet& ps, int k);

}  // namespace treemorph
