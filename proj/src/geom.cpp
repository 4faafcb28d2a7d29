#include "treemorph/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace treemorph {

namespace {

constexpr std::int64_t kFastLimit = std::int64_t{1} << 28;

template <class N>
int sign_of(const N& v) {
    if constexpr (std::is_same_v<N, Int>) {
        return sgn(v);
    } else {
        return (v > 0) - (v < 0);
    }
}

template <class N>
N det(const N& ax, const N& ay, const N& bx, const N& by, const N& cx, const N& cy) {
    return N((bx - ax) * (cy - ay)) - N((by - ay) * (cx - ax));
}

// Fraction t = num/den with den > 0.
template <class N>
struct Frac {
    N num;
    N den;
};

template <class N>
bool frac_less(const Frac<N>& a, const Frac<N>& b) {
    return N(a.num * b.den) < N(b.num * a.den);
}

// Segment ab against the open interior of triangle t[0..2], which must be counterclockwise.
template <class N>
bool segment_hits_open_triangle(const N tx[3], const N ty[3], const N& ax, const N& ay, const N& bx,
                                const N& by) {
    Frac<N> lo{N(0), N(1)};
    Frac<N> hi{N(1), N(1)};
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        N sa = det(tx[i], ty[i], tx[j], ty[j], ax, ay);
        N sb = det(tx[i], ty[i], tx[j], ty[j], bx, by);
        bool pa = sign_of(sa) > 0;
        bool pb = sign_of(sb) > 0;
        if (!pa && !pb) return false;
        if (pa && pb) continue;
        if (pa) {
            Frac<N> u{sa, N(sa - sb)};
            if (frac_less(u, hi)) hi = u;
        } else {
            Frac<N> l{N(-sa), N(sb - sa)};
            if (frac_less(lo, l)) lo = l;
        }
    }
    return frac_less(lo, hi);
}

Int idet(const Point& a, const Point& b, const Point& c) {
    return Int((b.x - a.x) * (c.y - a.y)) - Int((b.y - a.y) * (c.x - a.x));
}

bool on_open_segment_collinear(const Point& a, const Point& b, const Point& c) {
    // c collinear with ab; is c strictly between a and b?
    if (a.x != b.x) {
        const Int& lo = a.x < b.x ? a.x : b.x;
        const Int& hi = a.x < b.x ? b.x : a.x;
        return lo < c.x && c.x < hi;
    }
    const Int& lo = a.y < b.y ? a.y : b.y;
    const Int& hi = a.y < b.y ? b.y : a.y;
    return lo < c.y && c.y < hi;
}

template <class Get>
bool cross_impl(int o1, int o2, int o3, int o4, Get&& collinear_overlap) {
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && o2 == 0) return collinear_overlap();
    return false;
}

// Normalized direction; (0,0) for coincident points.
std::pair<Int, Int> direction(const Point& from, const Point& to) {
    Int dx = to.x - from.x;
    Int dy = to.y - from.y;
    Int g = gcd(dx, dy);
    if (g != 0) {
        dx /= g;
        dy /= g;
    }
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    return {dx, dy};
}

std::pair<std::int64_t, std::int64_t> direction_fast(std::int64_t dx, std::int64_t dy) {
    std::int64_t g = std::gcd(dx, dy);
    if (g != 0) {
        dx /= g;
        dy /= g;
    }
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    return {dx, dy};
}

bool fits_fast(const Point& p) {
    return p.x.fits_slong_p() && p.y.fits_slong_p() && abs(p.x) < kFastLimit && abs(p.y) < kFastLimit;
}

// Does point z make a duplicate or a collinear triple with any point in pts?
bool degenerate_with(const std::vector<Point>& pts, const Point& z) {
    bool fast = fits_fast(z) && std::all_of(pts.begin(), pts.end(), fits_fast);
    if (fast) {
        std::vector<std::pair<std::int64_t, std::int64_t>> dirs;
        dirs.reserve(pts.size());
        std::int64_t zx = z.x.get_si(), zy = z.y.get_si();
        for (const auto& p : pts) {
            auto d = direction_fast(p.x.get_si() - zx, p.y.get_si() - zy);
            if (d.first == 0 && d.second == 0) return true;
            dirs.push_back(d);
        }
        std::sort(dirs.begin(), dirs.end());
        return std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end();
    }
    std::vector<std::pair<Int, Int>> dirs;
    dirs.reserve(pts.size());
    for (const auto& p : pts) {
        auto d = direction(z, p);
        if (d.first == 0 && d.second == 0) return true;
        dirs.push_back(std::move(d));
    }
    std::sort(dirs.begin(), dirs.end());
    return std::adjacent_find(dirs.begin(), dirs.end()) != dirs.end();
}

}  // namespace

const char* to_string(Position p) {
    switch (p) {
        case Position::general: return "general";
        case Position::convex: return "convex";
        case Position::unchecked: return "unchecked";
        case Position::degenerate: return "degenerate";
    }
    return "unchecked";
}

Position position_from_string(const std::string& s) {
    if (s == "general") return Position::general;
    if (s == "convex") return Position::convex;
    if (s == "unchecked") return Position::unchecked;
    if (s == "degenerate") return Position::degenerate;
    throw std::invalid_argument("unknown position: " + s);
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
    return static_cast<Orientation>(sgn(idet(a, b, c)));
}

bool proper_cross(const Segment& s1, const Segment& s2) {
    const auto& [a, b] = s1;
    const auto& [c, d] = s2;
    int o1 = static_cast<int>(orientation(a, b, c));
    int o2 = static_cast<int>(orientation(a, b, d));
    int o3 = static_cast<int>(orientation(c, d, a));
    int o4 = static_cast<int>(orientation(c, d, b));
    return cross_impl(o1, o2, o3, o4, [&] {
        // Collinear: open segments overlap iff one contains an interior point of the other or they coincide.
        if ((a == c && b == d) || (a == d && b == c)) return true;
        return on_open_segment_collinear(a, b, c) || on_open_segment_collinear(a, b, d) ||
               on_open_segment_collinear(c, d, a) || on_open_segment_collinear(c, d, b);
    });
}

bool triangle_blocked(const Point& p, const Point& q, const Point& r, const std::vector<Segment>& edges) {
    Orientation o = orientation(p, q, r);
    if (o == Orientation::COLLINEAR) throw GeometryError("triangle_blocked: degenerate triangle");
    Int tx[3] = {p.x, q.x, r.x};
    Int ty[3] = {p.y, q.y, r.y};
    if (o == Orientation::CW) {
        std::swap(tx[1], tx[2]);
        std::swap(ty[1], ty[2]);
    }
    for (const auto& [a, b] : edges) {
        if (segment_hits_open_triangle<Int>(tx, ty, a.x, a.y, b.x, b.y)) return true;
    }
    return false;
}

bool strictly_inside(const Point& p, const Point& q, const Point& r, const Point& s) {
    int o = sgn(idet(p, q, r));
    if (o == 0) return false;
    return sgn(idet(p, q, s)) == o && sgn(idet(q, r, s)) == o && sgn(idet(r, p, s)) == o;
}

PointSet::PointSet(std::vector<Point> pts, Position pos) : pts_(std::move(pts)), pos_(pos) {
    small_ = std::all_of(pts_.begin(), pts_.end(), fits_fast);
    if (small_) {
        fx_.reserve(pts_.size());
        fy_.reserve(pts_.size());
        for (const auto& p : pts_) {
            fx_.push_back(p.x.get_si());
            fy_.push_back(p.y.get_si());
        }
    }
}

int PointSet::orient(int a, int b, int c) const {
    if (small_) {
        std::int64_t v = (fx_[b] - fx_[a]) * (fy_[c] - fy_[a]) - (fy_[b] - fy_[a]) * (fx_[c] - fx_[a]);
        return (v > 0) - (v < 0);
    }
    return sgn(idet(pts_[a], pts_[b], pts_[c]));
}

bool PointSet::cross(int a, int b, int c, int d) const {
    if (a == c || a == d || b == c || b == d) {
        // Sharing an endpoint: open segments meet only if collinear and overlapping.
        if ((a == c && b == d) || (a == d && b == c)) return true;
        int s = (a == c || a == d) ? a : b;
        int u = s == a ? b : a;
        int v = (c == s) ? d : c;
        if (orient(s, u, v) != 0) return false;
        // Collinear through s: overlap iff u and v lie on the same side of s.
        const Point& ps = pts_[s];
        const Point& pu = pts_[u];
        const Point& pv = pts_[v];
        Int dot = Int((pu.x - ps.x) * (pv.x - ps.x)) + Int((pu.y - ps.y) * (pv.y - ps.y));
        return dot > 0;
    }
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    return cross_impl(o1, o2, o3, o4, [&] {
        return on_open_segment_collinear(pts_[a], pts_[b], pts_[c]) ||
               on_open_segment_collinear(pts_[a], pts_[b], pts_[d]) ||
               on_open_segment_collinear(pts_[c], pts_[d], pts_[a]) ||
               on_open_segment_collinear(pts_[c], pts_[d], pts_[b]);
    });
}

bool PointSet::blocks(int p, int q, int r, int a, int b) const {
    int o = orient(p, q, r);
    if (o == 0) throw GeometryError("blocks: degenerate triangle");
    if (o < 0) std::swap(q, r);
    if (small_) {
        __int128 tx[3] = {fx_[p], fx_[q], fx_[r]};
        __int128 ty[3] = {fy_[p], fy_[q], fy_[r]};
        return segment_hits_open_triangle<__int128>(tx, ty, fx_[a], fy_[a], fx_[b], fy_[b]);
    }
    Int tx[3] = {pts_[p].x, pts_[q].x, pts_[r].x};
    Int ty[3] = {pts_[p].y, pts_[q].y, pts_[r].y};
    return segment_hits_open_triangle<Int>(tx, ty, pts_[a].x, pts_[a].y, pts_[b].x, pts_[b].y);
}

bool PointSet::inside(int p, int q, int r, int s) const {
    int o = orient(p, q, r);
    if (o == 0) return false;
    return orient(p, q, s) == o && orient(q, r, s) == o && orient(r, p, s) == o;
}

std::vector<int> PointSet::hull() const {
    int n = this->n();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    if (n <= 2) return idx;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts_[a].x != pts_[b].x) return pts_[a].x < pts_[b].x;
        return pts_[a].y < pts_[b].y;
    });
    std::vector<int> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], idx[i]) <= 0) --k;
        h[k++] = idx[i];
    }
    for (int i = n - 2, t = k + 1; i >= 0; --i) {
        while (k >= t && orient(h[k - 2], h[k - 1], idx[i]) <= 0) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    auto lowest = std::min_element(h.begin(), h.end(), [&](int a, int b) {
        if (pts_[a].y != pts_[b].y) return pts_[a].y < pts_[b].y;
        return pts_[a].x < pts_[b].x;
    });
    std::rotate(h.begin(), lowest, h.end());
    return h;
}

Position classify_points(const std::vector<Point>& pts) {
    std::vector<Point> seen;
    seen.reserve(pts.size());
    for (const auto& p : pts) {
        if (degenerate_with(seen, p)) return Position::degenerate;
        seen.push_back(p);
    }
    PointSet tmp(pts);
    if (static_cast<int>(tmp.hull().size()) == tmp.n()) return Position::convex;
    return Position::general;
}

Position check_position(PointSet& ps) {
    Position p = classify_points(ps.points());
    ps.set_position(p);
    return p;
}

PointSet convex_regular(int n) {
    if (n < 1) throw GeometryError("convex_regular: n must be >= 1");
    long double radius = 1e6L;
    for (int attempt = 0; attempt < 8; ++attempt, radius *= 10) {
        std::vector<Point> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) {
            long double a = 2.0L * 3.14159265358979323846264338327950288L * i / n;
            auto x = static_cast<long long>(std::llround(radius * std::cos(a)));
            auto y = static_cast<long long>(std::llround(radius * std::sin(a)));
            pts.emplace_back(Int(std::to_string(x)), Int(std::to_string(y)));
        }
        if (classify_points(pts) == Position::convex) return PointSet(std::move(pts), Position::convex);
    }
    throw GeometryError("convex_regular: could not produce a convex set");
}

PointSet random_general(int n, std::uint64_t seed) {
    if (n < 1) throw GeometryError("random_general: n must be >= 1");
    std::mt19937_64 rng(seed);
    const std::int64_t range = std::max<std::int64_t>(1000000, std::int64_t{16} * n * n);
    std::uniform_int_distribution<std::int64_t> coord(0, range - 1);
    std::vector<Point> pts;
    pts.reserve(n);
    long budget = 1000L + 100L * n;
    while (static_cast<int>(pts.size()) < n) {
        if (budget-- <= 0) throw GeometryError("random_general: rejection budget exhausted");
        Point z(coord(rng), coord(rng));
        if (!degenerate_with(pts, z)) pts.push_back(std::move(z));
    }
    PointSet ps(std::move(pts));
    if (check_position(ps) == Position::degenerate) throw GeometryError("random_general: degenerate output");
    return ps;
}

std::vector<Int> binary_tower_heights(int k) {
    if (k < 1) throw GeometryError("binary_tower: k must be >= 1");
    long n = (1L << k) + 1;
    std::vector<Int> phi(n);
    Int base(n);
    for (long x = 0; x < n; ++x) {
        if (x == 0 || x == n - 1) {
            phi[x] = 1;
            continue;
        }
        int j = __builtin_ctzl(static_cast<unsigned long>(x));
        mpz_pow_ui(phi[x].get_mpz_t(), base.get_mpz_t(), 2UL * static_cast<unsigned long>(k - j));
    }
    return phi;
}

PointSet binary_tower(int k, bool perturb) {
    auto phi = binary_tower_heights(k);
    long n = static_cast<long>(phi.size());
    Int b;
    mpz_pow_ui(b.get_mpz_t(), Int(n).get_mpz_t(), 4);
    std::vector<Point> pts;
    pts.reserve(n);
    for (long x = 0; x < n; ++x) {
        Int y = perturb ? Int(b * phi[x] + x * x) : phi[x];
        pts.emplace_back(Int(x), y);
    }
    if (!perturb) return PointSet(std::move(pts), Position::unchecked);
    PointSet ps(std::move(pts));
    if (check_position(ps) == Position::degenerate) throw GeometryError("binary_tower: perturbed set is degenerate");
    if (!verify_tower_levels(ps, k)) throw GeometryError("binary_tower: level property fails after perturbation");
    return ps;
}

bool verify_tower_levels(const PointSet& ps, int k) {
    auto phi = binary_tower_heights(k);
    int n = ps.n();
    if (static_cast<int>(phi.size()) != n) return false;
    // level[x] = least i with phi(x) <= n^(2i)
    std::vector<int> level(n, 0);
    for (int x = 0; x < n; ++x) {
        Int bound = 1;
        int i = 0;
        while (phi[x] > bound) {
            bound *= n;
            bound *= n;
            ++i;
        }
        level[x] = i;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                int i = std::max(level[a], level[b]);
                if (i > k - 1 || level[c] <= i + 1) continue;
                bool empty = true;
                for (int d = 0; d < n && empty; ++d)
                    if (d != a && d != b && d != c && ps.inside(a, b, c, d)) empty = false;
                if (empty) return false;
            }
    return true;
}

PointSet sim_rotation_lb_points() {
    // Regular hexagon with exact integer vertices: (2,0),(1,s),(-1,s),(-2,0),(-1,-s),(1,-s) scaled; s ~ sqrt(3).
    std::vector<Point> pts = {{2000, 0}, {1000, 1732}, {-1000, 1732}, {-2000, 0}, {-1000, -1732}, {1000, -1732}};
    PointSet ps(std::move(pts));
    check_position(ps);
    return ps;
}

PointSet generate(const std::string& kind, const GenParams& params, std::uint64_t seed) {
    if (kind == "convex_regular") return convex_regular(params.n);
    if (kind == "random_general") return random_general(params.n, seed);
    if (kind == "binary_tower") return binary_tower(params.k);
    if (kind == "sim_rotation_lb") return sim_rotation_lb_points();
    throw GeometryError("generate: unknown kind " + kind);
}

}  // namespace treemorph
