// Acceptance run: one PASS/FAIL line per criterion 1-9.
//
// All checks are exact; the only pinned numbers are instance counts, size ranges and the
// run-time limit of criterion 1. Exit status is 0 when every criterion passes except those
// listed in kKnownFailures, whose failure is reported but expected (see README).

#include "treemorph/graphx.hpp"
#include "treemorph/labeled.hpp"
#include "treemorph/xform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace treemorph;

namespace {

constexpr int kInstances = 200;             // seeded instances per constructive algorithm
constexpr int kSimSlideSamples = 1000;      // random simultaneous slides for criterion 8
constexpr int kMaxSimPairs = 5;             // pairs per sampled simultaneous slide
constexpr double kEnumSeconds = 60.0;       // criterion 1 run-time limit
constexpr int kRandomLabelings = 100;       // criterion 7 labelings per tree set
constexpr std::uint64_t kSeed = 20240601;   // base seed for every random choice

// Criterion 6(c) checks the stated packing formula 2*floor((n-1)/3); it is violated by valid
// simultaneous slides at n = 3 and n = 6 (the exhaustive maximum is floor(2(n-1)/3)).
const std::set<std::string> kKnownFailures = {"6c"};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (pass) detail << "FIRST FAILURE: " << why << "; ";
        pass = false;
    }
};

// n spread evenly over [lo, hi] across the instances.
int size_for(int i, int lo, int hi) { return lo + static_cast<int>(static_cast<long>(hi - lo) * i / (kInstances - 1)); }

double log2d(int n) { return std::log2(static_cast<double>(n)); }

// steps <= c * n * log2(n) decided without rounding: 2^(steps / (c n)) <= n.
bool within_n_log(long steps, double c, int n) { return steps <= static_cast<long>(std::floor(c * n * log2d(n) + 1e-9)); }

std::string check(const PointSet& ps, const Trace& tr, long bound, const Tree* target = nullptr) {
    TraceCheck c = verify_trace(ps, tr);
    if (!c.ok) return "replay fails at step " + std::to_string(c.failed_step) + ": " + c.diagnosis;
    if (target && c.final_tree != *target) return "trace ends elsewhere";
    if (tr.size() > bound) return std::to_string(tr.size()) + " steps > " + std::to_string(bound);
    return "";
}

// First random set from `seed` on that is in general but not convex position.
PointSet general_set(int n, std::uint64_t seed) {
    for (;; ++seed) {
        PointSet ps = random_general(n, seed);
        if (ps.position() == Position::general) return ps;
    }
}

// (pairs, n) of every simultaneous slide emitted in criteria 4 and 5.
std::vector<std::pair<int, int>> produced_slides;

void collect_slides(const Trace& tr, int n) {
    for (const auto& s : tr.steps)
        if (const auto* m = std::get_if<SimMove>(&s); m && m->kind == Kind::slide)
            produced_slides.emplace_back(static_cast<int>(m->pairs.size()), n);
}

// ---------------------------------------------------------------------------

void criterion1(Outcome& o) {
    auto start = std::chrono::steady_clock::now();
    const long expect[] = {3, 12, 55, 273, 1428, 7752};
    for (int n = 3; n <= 8; ++n) {
        PointSet ps = convex_regular(n);
        long got = static_cast<long>(enumerate_trees(ps).size());
        long oracle = 0;
        if (n <= 4) {
            // Every (n-1)-subset of pairs, kept when it is a plane spanning tree.
            std::vector<Edge> all;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
            int m = static_cast<int>(all.size());
            for (int mask = 0; mask < (1 << m); ++mask) {
                if (__builtin_popcount(mask) != n - 1) continue;
                std::vector<Edge> es;
                for (int b = 0; b < m; ++b)
                    if (mask >> b & 1) es.push_back(all[b]);
                if (!check_tree(ps, es)) ++oracle;
            }
        } else {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), 3 * n - 3, n - 1);
            oracle = mpz_class(c / (2 * n - 1)).get_si();
        }
        o.detail << "n=" << n << ":" << got << " ";
        if (got != expect[n - 3] || got != oracle) o.fail("n=" + std::to_string(n) + " count " + std::to_string(got) + " oracle " + std::to_string(oracle));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.detail << "(" << static_cast<int>(secs * 1000) << " ms)";
    if (secs >= kEnumSeconds) o.fail("run time " + std::to_string(secs) + " s");
}

void criterion2(Outcome& o) {
    for (int n = 5; n <= 8; ++n) {
        PointSet ps = convex_regular(n);
        auto nodes = enumerate_trees(ps);
        o.detail << "n=" << n << ":";
        for (Kind k : all_kinds) {
            TransitionGraph g = build_transition_graph(ps, nodes, GraphSpec{k, false, false, false});
            DiameterResult d = diameter(g);
            o.detail << d.diameter << (k == Kind::slide ? " " : ",");
            if (!d.connected) o.fail("disconnected " + std::string(to_string(k)));
            if (d.diameter > 2 * n - 5) o.fail(std::string(to_string(k)) + " diameter above 2n-5 at n=" + std::to_string(n));
            if (k != Kind::slide && d.diameter < 3 * n / 2 - 5)
                o.fail(std::string(to_string(k)) + " diameter below floor(3n/2)-5 at n=" + std::to_string(n));
        }
    }
}

void criterion3(Outcome& o) {
    for (int n = 4; n <= 7; ++n) {
        PointSet ps = convex_regular(n);
        auto nodes = enumerate_trees(ps);
        int dx = diameter(build_transition_graph(ps, nodes, GraphSpec{Kind::exchange, true, false, false})).diameter;
        int dc = diameter(build_transition_graph(ps, nodes, GraphSpec{Kind::compatible, true, false, false})).diameter;
        o.detail << "n=" << n << " sx=" << dx << " sc=" << dc << "; ";
        if (dx != 1) o.fail("sim exchange diameter " + std::to_string(dx) + " at n=" + std::to_string(n));
        if (dc != 2) o.fail("sim compatible diameter " + std::to_string(dc) + " at n=" + std::to_string(n));
    }
    PointSet six = convex_regular(6);
    int de = diameter(build_transition_graph(six, GraphSpec{Kind::empty_triangle, true, false, false})).diameter;
    o.detail << "n=6 sim empty-triangle=" << de << "; ";
    if (de < 3 || de > 4) o.fail("sim empty-triangle diameter " + std::to_string(de) + " at n=6");
    PointSet hex = sim_rotation_lb_points();
    auto [a, b] = sim_rotation_lb_pair();
    TransitionGraph g = build_transition_graph(hex, GraphSpec{Kind::rotation, true, false, false});
    int dab = distance(g, g.find(a), g.find(b));
    int dr = diameter(g).diameter;
    o.detail << "witness pair sim-rotation distance=" << dab << " diameter=" << dr;
    if (dab < 3) o.fail("witness pair at distance " + std::to_string(dab));
    if (dr < 3) o.fail("sim rotation diameter " + std::to_string(dr));
}

void criterion4(Outcome& o) {
    struct Row {
        const char* name;
        int lo, hi;
        bool convex;
        std::function<std::string(const PointSet&, const Tree&, const Tree&, int)> run;
    };
    std::vector<Row> rows = {
        {"star_by_rotations", 3, 200, false,
         [](const PointSet& ps, const Tree& t, const Tree&, int n) {
             return check(ps, star_by_rotations(ps, t, extreme_point(ps)), std::max(0, n - 2));
         }},
        {"starify", 3, 1024, false,
         [](const PointSet& ps, const Tree& t, const Tree&, int n) {
             int p = extreme_point(ps);
             Trace tr = star_by_starify(ps, t, p);
             Tree s = star(n, p);
             return check(ps, tr, ceil_log2(n), &s);
         }},
        {"star_by_sim_rotations", 3, 1024, false,
         [](const PointSet& ps, const Tree& t, const Tree&, int n) {
             int p = extreme_point(ps);
             Tree s = star(n, p);
             return check(ps, star_by_sim_rotations(ps, t, p), 4L * ceil_log2(n), &s);
         }},
        {"star_by_empty_tri", 3, 200, false,
         [](const PointSet& ps, const Tree& t, const Tree&, int n) {
             int p = extreme_point(ps);
             Trace tr = star_by_empty_tri(ps, t, p);
             std::string e = check(ps, tr, tr.size());
             if (e.empty() && !within_n_log(tr.size(), 4.0, n)) e = "above 4 n log2 n";
             return e;
         }},
        {"star_by_sim_empty_tri", 3, 200, false,
         [](const PointSet& ps, const Tree& t, const Tree&, int n) {
             int p = extreme_point(ps);
             return check(ps, star_by_sim_empty_tri(ps, t, p), 4L * n - 1);
         }},
        {"convex_transform_by_slides", 3, 200, true,
         [](const PointSet& ps, const Tree& t, const Tree& u, int n) {
             return check(ps, convex_transform_by_slides(ps, t, u), std::max(0, 2 * n - 5), &u);
         }},
        {"convex_hull_path_by_sim_empty_tri", 3, 200, true,
         [](const PointSet& ps, const Tree& t, const Tree& u, int) {
             auto h = ps.hull();
             Edge avoid(h.back(), h.front());
             Trace a = convex_hull_path_by_sim_empty_tri(ps, t, avoid);
             Trace b = convex_hull_path_by_sim_empty_tri(ps, u, avoid);
             std::string e = check(ps, a, 2);
             if (e.empty()) e = check(ps, b, 2);
             if (e.empty()) {
                 Trace j = join_at_common(ps, a, b, "pairwise", 4);
                 e = check(ps, j, 4, &u);
             }
             return e;
         }},
        {"convex_star_by_sim_slides", 3, 256, true,
         [](const PointSet& ps, const Tree& t, const Tree&, int n) {
             int p = extreme_point(ps);
             Trace tr = convex_star_by_sim_slides(ps, t, p);
             Tree s = star(n, p);
             std::string e = check(ps, tr, tr.size(), &s);
             if (e.empty() && tr.size() > static_cast<long>(std::floor(120.0 * (log2d(n) + 1.0)))) e = "above 120 (log2 n + 1)";
             if (e.empty()) collect_slides(tr, n);
             return e;
         }},
    };
    for (const auto& row : rows) {
        long worst = 0;
        int fails = 0;
        auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < kInstances; ++i) {
            int n = size_for(i, row.lo, row.hi);
            std::uint64_t seed = kSeed + 7919ULL * i;
            PointSet ps = row.convex ? convex_regular(n) : random_general(n, seed);
            Tree t = random_tree(ps, seed + 1), u = random_tree(ps, seed + 2);
            std::string e;
            try {
                e = row.run(ps, t, u, n);
            } catch (const std::exception& ex) {
                e = std::string("exception: ") + ex.what();
            }
            if (!e.empty()) {
                if (fails++ == 0) o.fail(std::string(row.name) + " n=" + std::to_string(n) + " seed " + std::to_string(seed) + ": " + e);
            }
            worst = std::max(worst, static_cast<long>(n));
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.detail << row.name << " " << (kInstances - fails) << "/" << kInstances << " (n<=" << worst << ", "
                 << static_cast<int>(secs) << "s); ";
    }
}

void criterion5(Outcome& o) {
    struct Row {
        const char* name;
        int lo, hi;
        bool convex;
        std::function<long(int)> bound;
        std::function<Trace(const PointSet&, const Tree&, const Tree&)> run;
    };
    auto clog = [](int n) { return static_cast<long>(ceil_log2(n)); };
    std::vector<Row> rows = {
        {"labeled_transform_rotations", 3, 128, false, [](int n) { return 11L * (n - 2); }, labeled_transform_rotations},
        {"labeled_cx_empty_tri", 3, 128, true, [](int n) { return 6L * n - 13; },
         [](auto& ps, auto& a, auto& b) { return labeled_cx_empty_tri_transform(ps, a, b, false); }},
        {"labeled_sim_exchange", 3, 128, false, [](int) { return 3L; },
         [](auto& ps, auto& a, auto& b) { return labeled_sim_exchange_transform(ps, a, b, false); }},
        {"labeled_sim_exchange_convex", 3, 128, true, [](int) { return 3L; },
         [](auto& ps, auto& a, auto& b) { return labeled_sim_exchange_transform(ps, a, b, false); }},
        {"labeled_sim_compatible_convex", 3, 128, true, [](int) { return 4L; },
         [](auto& ps, auto& a, auto& b) { return labeled_sim_exchange_transform(ps, a, b, true); }},
        {"labeled_cx_sim_empty_tri", 3, 128, true, [clog](int n) { return 8L + 16L * clog(n); },
         [](auto& ps, auto& a, auto& b) { return labeled_cx_empty_tri_transform(ps, a, b, true); }},
        {"labeled_sim_empty_tri", 3, 128, false, [](int n) { return 12L * n; }, labeled_sim_empty_tri_transform},
        {"labeled_cx_slides", 3, 128, true, [clog](int n) { return 2L * (2 * n - 5) + 6L * (n - 2) * (clog(n) + 1); },
         [](auto& ps, auto& a, auto& b) { return labeled_cx_slides_transform(ps, a, b, false); }},
        {"labeled_cx_sim_slides", 3, 128, true,
         [](int n) { return static_cast<long>(std::floor(2 * 120.0 * (log2d(n) + 1.0))) + 3L * (n - 1); },
         [](auto& ps, auto& a, auto& b) { return labeled_cx_slides_transform(ps, a, b, true); }},
    };
    for (const auto& row : rows) {
        int fails = 0;
        long most = 0;
        auto t0 = std::chrono::steady_clock::now();
        for (int i = 0; i < kInstances; ++i) {
            int n = size_for(i, row.lo, row.hi);
            std::uint64_t seed = kSeed + 104729ULL * i + 3;
            PointSet ps = row.convex ? convex_regular(n) : random_general(n, seed);
            Tree a = random_tree(ps, seed + 1, true), b = random_tree(ps, seed + 2, true);
            std::string e;
            try {
                Trace tr = row.run(ps, a, b);
                e = check(ps, tr, row.bound(n), &b);
                most = std::max(most, tr.size());
                if (e.empty()) collect_slides(tr, n);
            } catch (const std::exception& ex) {
                e = std::string("exception: ") + ex.what();
            }
            if (!e.empty() && fails++ == 0)
                o.fail(std::string(row.name) + " n=" + std::to_string(n) + " seed " + std::to_string(seed) + ": " + e);
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.detail << row.name << " " << (kInstances - fails) << "/" << kInstances << " (n<=" << row.hi << ", " << static_cast<int>(secs)
                 << "s); ";
    }
}

Tree shifted_star(int n, int center, int shift) {
    std::vector<int> labels(n - 1);
    for (int i = 0; i < n - 1; ++i) labels[i] = (i + shift) % (n - 1) + 1;
    return star(n, center, labels);
}

void criterion6a(Outcome& o) {
    std::vector<PointSet> sets = {convex_regular(4), convex_regular(5), general_set(4, kSeed), general_set(5, kSeed)};
    for (const auto& ps : sets) {
        int n = ps.n(), c = extreme_point(ps);
        Tree s1 = shifted_star(n, c, 0), s2 = shifted_star(n, c, 1);
        LowerCertificate cert;
        bool two = labeled_sim_exchange_within_two(ps, s1, s2, &cert);
        Trace tr = labeled_sim_exchange_transform(ps, s1, s2, false);
        std::string e = check(ps, tr, 3, &s2);
        o.detail << "n=" << n << " " << to_string(ps.position()) << ": within two=" << (two ? "yes" : "no") << " ("
                 << cert.intermediates << " intermediates), steps=" << tr.size() << "; ";
        if (two) o.fail("shifted stars within two steps at n=" + std::to_string(n));
        if (!e.empty()) o.fail(e);
        if (tr.size() != 3) o.fail("constructed trace has " + std::to_string(tr.size()) + " steps");
    }
}

void criterion6b(Outcome& o) {
    for (int k : {2, 3}) {
        PointSet ps = binary_tower(k);
        bool general = ps.position() == Position::general || ps.position() == Position::convex;
        bool claim = verify_tower_levels(ps, k);
        o.detail << "k=" << k << " n=" << ps.n() << " position=" << to_string(ps.position()) << " levels=" << (claim ? "ok" : "violated") << "; ";
        if (!general) o.fail("tower not in general position");
        if (!claim) o.fail("level property fails at k=" + std::to_string(k));
    }
}

void criterion6c(Outcome& o) {
    int worst = 0;
    long violations = 0;
    for (auto [k, n] : produced_slides) {
        worst = std::max(worst, k);
        if (k > slide_packing_bound(n)) {
            if (violations++ == 0)
                o.fail("a " + std::to_string(k) + "-pair slide at n=" + std::to_string(n) + " exceeds 2 floor((n-1)/3) = " +
                       std::to_string(slide_packing_bound(n)));
        }
        if (k > slide_packing_max(n)) o.fail("slide above the exhaustive maximum");
    }
    o.detail << produced_slides.size() << " simultaneous slides checked, " << violations << " above the stated formula, most pairs " << worst;
}

void criterion7(Outcome& o) {
    std::mt19937_64 rng(kSeed);
    for (int n = 3; n <= 8; ++n) {
        PointSet ps = convex_regular(n);
        auto trees = enumerate_trees(ps);
        long bad_sum = 0, bad_deg = 0, bad_rlg = 0;
        std::vector<int> ids(n - 1);
        std::iota(ids.begin(), ids.end(), 1);
        for (const auto& t : trees) {
            DualTree dt = build_dual_tree(ps, t);
            long s = 0;
            for (const auto& c : dt.cells) s += c.size() - 2;
            if (s != n - 2) ++bad_sum;
            if (static_cast<int>(enumerate_neighbors(ps, t, Kind::slide).size()) != 2 * (n - 2)) ++bad_deg;
            Tree lt = t.with_labels(ids);
            if (!dihedral_equivalent(rlg_reconstruct(rlg_build(ps, lt), n), lt)) ++bad_rlg;
        }
        long random_bad = 0;
        std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
        for (int r = 0; r < kRandomLabelings; ++r) {
            std::vector<int> lab = ids;
            std::shuffle(lab.begin(), lab.end(), rng);
            Tree lt = trees[pick(rng)].with_labels(lab);
            if (!dihedral_equivalent(rlg_reconstruct(rlg_build(ps, lt), n), lt)) ++random_bad;
        }
        o.detail << "n=" << n << ":" << trees.size() << " ";
        if (bad_sum) o.fail("cell identity fails on " + std::to_string(bad_sum) + " trees at n=" + std::to_string(n));
        if (bad_deg) o.fail("slide degree differs from 2(n-2) on " + std::to_string(bad_deg) + " trees at n=" + std::to_string(n));
        if (bad_rlg || random_bad)
            o.fail("reconstruction fails on " + std::to_string(bad_rlg + random_bad) + " trees at n=" + std::to_string(n));
    }
}

// A random valid simultaneous slide with at most kMaxSimPairs pairs.
std::optional<SimMove> random_sim_slide(const PointSet& ps, const Tree& t, std::mt19937_64& rng) {
    auto cands = enumerate_neighbors(ps, t, Kind::slide);
    std::shuffle(cands.begin(), cands.end(), rng);
    std::uniform_int_distribution<int> want_dist(1, kMaxSimPairs);
    int want = want_dist(rng);
    std::vector<Edge> edges = t.edges();
    SimMove best;
    for (const auto& m : cands) {
        if (static_cast<int>(best.pairs.size()) >= want) break;
        std::vector<Edge> next = edges;
        bool clash = false;
        for (auto& e : next)
            if (e == m.removed) e = m.inserted;
        for (const auto& [r, i] : best.pairs)
            if (r == m.removed || i == m.inserted || i == m.removed || r == m.inserted) clash = true;
        if (clash || check_tree(ps, next)) continue;
        Tree target(ps.n(), [&] {
            auto v = next;
            std::sort(v.begin(), v.end());
            return v;
        }());
        SimResult sr = validate_simultaneous(ps, t, target, Kind::slide);
        if (!sr) continue;
        edges = next;
        best = sr.move;
    }
    if (best.pairs.empty()) return std::nullopt;
    return best;
}

void criterion8(Outcome& o) {
    std::mt19937_64 rng(kSeed + 8);
    long orders = 0, samples = 0;
    std::vector<int> by_size(kMaxSimPairs + 1, 0);
    for (int attempt = 0; samples < kSimSlideSamples && attempt < 50 * kSimSlideSamples; ++attempt) {
        int n = 6 + attempt % 10;
        PointSet ps = attempt % 2 ? convex_regular(n) : random_general(n, kSeed + attempt);
        Tree t = random_tree(ps, kSeed + 3 * attempt);
        auto sim = random_sim_slide(ps, t, rng);
        if (!sim) continue;
        ++samples;
        ++by_size[sim->pairs.size()];
        std::vector<int> order(sim->pairs.size());
        std::iota(order.begin(), order.end(), 0);
        Tree expect = apply_sim_move(ps, t, *sim);
        do {
            ++orders;
            try {
                auto seq = sequentialize_sim_slides(ps, t, *sim, order);
                for (const auto& mid : seq)
                    if (check_tree(ps, mid.edges())) throw std::logic_error("intermediate is not a plane spanning tree");
                if (seq.back() != expect) throw std::logic_error("sequence ends elsewhere");
            } catch (const std::exception& e) {
                o.fail(std::string("order failed: ") + e.what());
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    o.detail << samples << " slides, " << orders << " orders; pairs histogram";
    for (int k = 1; k <= kMaxSimPairs; ++k) o.detail << " " << k << ":" << by_size[k];
    if (samples < kSimSlideSamples) o.fail("only " + std::to_string(samples) + " samples found");
}

// graphx invariants on one enumerated point set. Exact simultaneous diameters when `sim_exact`,
// otherwise every single-operation edge is confirmed to be a simultaneous edge (so sim diam <= single diam).
void invariants(const PointSet& ps, bool sim_exact, bool labeled, Outcome& o, std::mt19937_64& rng) {
    auto nodes = enumerate_trees(ps);
    const std::string where = "n=" + std::to_string(ps.n()) + " " + to_string(ps.position());
    std::vector<int> single(5);
    std::vector<TransitionGraph> gs;
    for (Kind k : all_kinds) {
        gs.push_back(build_transition_graph(ps, nodes, GraphSpec{k, false, false, false}));
        DiameterResult d = diameter(gs.back());
        if (!d.connected) o.fail(where + ": " + to_string(k) + " graph disconnected");
        single[static_cast<int>(k)] = d.diameter;
    }
    for (int k = 1; k < 5; ++k) {
        if (single[k - 1] > single[k]) o.fail(where + ": diameter not monotone in the operation");
        if (!is_subgraph(gs[k], gs[k - 1])) o.fail(where + ": stronger operation graph not contained in weaker");
    }
    std::vector<TransitionGraph> sims(5);
    for (Kind k : all_kinds) {
        int ki = static_cast<int>(k);
        if (sim_exact) {
            sims[ki] = build_transition_graph(ps, nodes, GraphSpec{k, true, false, false});
            DiameterResult d = diameter(sims[ki]);
            if (!d.connected || d.diameter > single[ki]) o.fail(where + ": simultaneous diameter above single for " + to_string(k));
        } else {
            const auto& g = gs[ki];
            for (int a = 0; a < g.size(); ++a)
                for (int b : g.adj[a])
                    if (a < b && !validate_simultaneous(ps, g.nodes[a], g.nodes[b], k))
                        o.fail(where + ": single " + to_string(k) + " edge is not a simultaneous edge");
        }
    }
    if (labeled) {
        auto lnodes = enumerate_trees(ps, true);
        for (Kind k : all_kinds) {
            int dl = diameter(build_transition_graph(ps, lnodes, GraphSpec{k, false, false, true})).diameter;
            if (dl < single[static_cast<int>(k)]) o.fail(where + ": labeled diameter below unlabeled for " + to_string(k));
        }
    }
    // Constructive traces are never shorter than the exact distance between their endpoints.
    std::uniform_int_distribution<int> pick(0, static_cast<int>(nodes.size()) - 1);
    int p = extreme_point(ps);
    for (int r = 0; r < 6; ++r) {
        const Tree& a = nodes[pick(rng)];
        const Tree& b = nodes[pick(rng)];
        std::vector<std::pair<Trace, int>> traces;  // (trace, graph index: kind, +5 when simultaneous)
        traces.emplace_back(star_by_rotations(ps, a, p), 2);
        traces.emplace_back(star_by_empty_tri(ps, a, p), 3);
        traces.emplace_back(star_by_starify(ps, a, p), 5 + 1);
        traces.emplace_back(star_by_sim_rotations(ps, a, p), 5 + 2);
        traces.emplace_back(star_by_sim_empty_tri(ps, a, p), 5 + 3);
        if (ps.position() == Position::convex) {
            traces.emplace_back(convex_transform_by_slides(ps, a, b), 4);
            traces.emplace_back(convex_star_by_sim_slides(ps, a, p), 5 + 4);
        }
        for (const auto& [tr, gi] : traces) {
            if (!verify_trace(ps, tr).ok) o.fail(where + ": invalid trace from " + tr.algorithm);
            bool sim = gi >= 5;
            int k = sim ? gi - 5 : gi;
            if (sim && !sim_exact) continue;
            const TransitionGraph& g = sim ? sims[k] : gs[k];
            int d = distance(g, g.find(tr.initial), g.find(replay(ps, tr)));
            if (tr.size() < d) o.fail(where + ": " + tr.algorithm + " trace shorter than the exact distance");
        }
    }
    o.detail << where << " (" << nodes.size() << ") ";
}

void criterion9(Outcome& o) {
    std::mt19937_64 rng(kSeed + 9);
    for (int n = 3; n <= 8; ++n) invariants(convex_regular(n), n <= 7, n <= 5, o, rng);
    for (int n = 4; n <= 7; ++n)
        for (int s = 0; s < 3; ++s) invariants(general_set(n, kSeed + 100 * n + 10 * s), n <= 6, n <= 5, o, rng);
}

}  // namespace

int main() {
    struct Item {
        std::string id;
        std::string title;
        void (*fn)(Outcome&);
    };
    const std::vector<Item> items = {
        {"1", "enumeration counts, convex n=3..8", criterion1},
        {"2", "single-operation diameter sandwiches, convex n=5..8", criterion2},
        {"3", "simultaneous convex diameters", criterion3},
        {"4", "constructive step bounds, 200 seeded instances each", criterion4},
        {"5", "labeled step bounds, 200 seeded instances each", criterion5},
        {"6a", "shifted-label stars need 3 labeled simultaneous exchanges", criterion6a},
        {"6b", "tower level property by brute force, k=2,3", criterion6b},
        {"6c", "produced simultaneous slides within 2 floor((n-1)/3) pairs", criterion6c},
        {"7", "cell identity, slide uniformity, reconstruction, convex n<=8", criterion7},
        {"8", "sequentialized simultaneous slides, all orders", criterion8},
        {"9", "transition-graph invariants", criterion9},
    };
    int unexpected = 0;
    for (const auto& it : items) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            it.fn(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool known = kKnownFailures.count(it.id) > 0;
        std::printf("%s criterion %-3s %s [%.1fs] %s\n", o.pass ? "PASS" : "FAIL", it.id.c_str(), it.title.c_str(), secs,
                    o.detail.str().c_str());
        if (!o.pass && known) std::printf("     criterion %s: documented expected failure\n", it.id.c_str());
        if (o.pass && known) std::printf("     criterion %s: passed although listed as an expected failure\n", it.id.c_str());
        if (!o.pass && !known) ++unexpected;
        std::fflush(stdout);
    }
    std::printf("%s: %d unexpected failure(s)\n", unexpected ? "ACCEPTANCE FAILED" : "ACCEPTANCE OK", unexpected);
    return unexpected ? 1 : 0;
}
