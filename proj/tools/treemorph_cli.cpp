// treemorph: generators, enumeration, transforms, distances and rendering for plane spanning trees.
//
// Exit codes: 0 success, 1 domain error (bad geometry, invalid tree or move, cap exceeded), 2 usage error.

#include "treemorph/graphx.hpp"
#include "treemorph/io.hpp"
#include "treemorph/labeled.hpp"
#include "treemorph/svg.hpp"
#include "treemorph/xform.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace treemorph;

namespace {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PointSet load_points(const std::string& path) { return pointset_from_json(read_json_file(path)); }

Tree load_tree(const PointSet& ps, const std::string& path) {
    Tree t = tree_from_json(read_json_file(path));
    if (t.n() != ps.n()) throw DomainError(path + ": tree has " + std::to_string(t.n()) + " vertices, point set has " + std::to_string(ps.n()));
    return validate_tree(ps, t.edges(), t.labels());
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") std::cout << text;
    else write_text_file(out, text);
}

Edge parse_edge(const std::string& s) {
    int a = 0, b = 0;
    char comma = 0;
    std::istringstream is(s);
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof()) throw CLI::ValidationError("edge", "expected i,j but got " + s);
    return Edge(a, b);
}

// --- transform -------------------------------------------------------------

struct TransformArgs {
    std::string alg, ps, tree, target, out, avoid, gadget, swap;
    int root = -1;
};

using Runner = std::function<Trace(const PointSet&, const TransformArgs&)>;

Tree need(const PointSet& ps, const std::string& path, const char* flag) {
    if (path.empty()) throw CLI::ValidationError(flag, std::string("this algorithm needs ") + flag);
    return load_tree(ps, path);
}

int root_of(const PointSet& ps, const TransformArgs& a) { return a.root >= 0 ? a.root : extreme_point(ps); }

const std::map<std::string, Runner>& algorithms() {
    static const std::map<std::string, Runner> table = [] {
        std::map<std::string, Runner> m;
        auto rooted = [&m](const std::string& name, Trace (*f)(const PointSet&, const Tree&, int)) {
            m[name] = [f](const PointSet& ps, const TransformArgs& a) { return f(ps, need(ps, a.tree, "--tree"), root_of(ps, a)); };
        };
        auto paired = [&m](const std::string& name, std::function<Trace(const PointSet&, const Tree&, const Tree&)> f) {
            m[name] = [f](const PointSet& ps, const TransformArgs& a) {
                return f(ps, need(ps, a.tree, "--tree"), need(ps, a.target, "--target"));
            };
        };
        rooted("star_by_rotations", star_by_rotations);
        rooted("star_by_starify", star_by_starify);
        rooted("star_by_sim_rotations", star_by_sim_rotations);
        rooted("star_by_empty_tri", star_by_empty_tri);
        rooted("star_by_sim_empty_tri", star_by_sim_empty_tri);
        rooted("convex_star_by_sim_slides", convex_star_by_sim_slides);
        rooted("sim_slide_star", convex_star_by_sim_slides);
        m["convex_hull_path_by_sim_empty_tri"] = [](const PointSet& ps, const TransformArgs& a) {
            Edge avoid;
            if (a.avoid.empty()) {
                auto h = ps.hull();
                avoid = Edge(h.back(), h.front());
            } else {
                avoid = parse_edge(a.avoid);
            }
            return convex_hull_path_by_sim_empty_tri(ps, need(ps, a.tree, "--tree"), avoid);
        };
        m["convex_path_by_slides"] = [](const PointSet& ps, const TransformArgs& a) {
            Tree t = need(ps, a.tree, "--tree");
            return convex_path_by_slides(ps, t, a.avoid.empty() ? default_root_hull_edge(ps, t) : parse_edge(a.avoid));
        };
        paired("convex_transform_by_slides", convex_transform_by_slides);
        paired("path_to_path_slides", path_to_path_slides);
        paired("labeled_transform_rotations", labeled_transform_rotations);
        paired("labeled_sim_exchange", [](auto& ps, auto& a, auto& b) { return labeled_sim_exchange_transform(ps, a, b, false); });
        paired("labeled_sim_compatible", [](auto& ps, auto& a, auto& b) { return labeled_sim_exchange_transform(ps, a, b, true); });
        paired("labeled_sim_empty_tri", labeled_sim_empty_tri_transform);
        paired("labeled_cx_empty_tri", [](auto& ps, auto& a, auto& b) { return labeled_cx_empty_tri_transform(ps, a, b, false); });
        paired("labeled_cx_sim_empty_tri", [](auto& ps, auto& a, auto& b) { return labeled_cx_empty_tri_transform(ps, a, b, true); });
        paired("labeled_cx_slides", [](auto& ps, auto& a, auto& b) { return labeled_cx_slides_transform(ps, a, b, false); });
        paired("labeled_cx_sim_slides", [](auto& ps, auto& a, auto& b) { return labeled_cx_slides_transform(ps, a, b, true); });
        paired("star_label_sort", star_label_sort);
        m["swap_gadget"] = [](const PointSet& ps, const TransformArgs& a) {
            if (a.swap.empty()) throw CLI::ValidationError("--swap", "swap_gadget needs --swap i,j:k,l");
            auto colon = a.swap.find(':');
            if (colon == std::string::npos) throw CLI::ValidationError("--swap", "expected i,j:k,l");
            return swap_gadget(ps, need(ps, a.tree, "--tree"), gadget_from_string(a.gadget), parse_edge(a.swap.substr(0, colon)),
                               parse_edge(a.swap.substr(colon + 1)));
        };
        return m;
    }();
    return table;
}

// --- graph flags shared by distance and diameter -----------------------------

struct GraphArgs {
    std::string ps, kind = "exchange";
    bool sim = false, restricted = false, labeled = false;
    long cap = GraphLimits{}.enum_cap;
    long pair_cap = GraphLimits{}.pair_cap;
    int threads = 0;
};

void add_graph_flags(CLI::App* c, GraphArgs& g) {
    std::vector<std::string> kinds;
    for (Kind k : all_kinds) kinds.push_back(to_string(k));
    c->add_option("--ps", g.ps, "point-set JSON")->required();
    c->add_option("--kind", g.kind, "operation kind")->check(CLI::IsMember(kinds));
    c->add_flag("--sim", g.sim, "simultaneous operations");
    c->add_flag("--restricted", g.restricted, "restricted simultaneous slides");
    c->add_flag("--labeled", g.labeled, "labeled trees");
    c->add_option("--cap", g.cap, "most trees an enumeration may produce");
    c->add_option("--pair-cap", g.pair_cap, "most node pairs a simultaneous graph may test");
    c->add_option("--threads", g.threads, "worker threads (default: TREEMORPH_THREADS or all cores)");
}

TransitionGraph graph_of(const PointSet& ps, const GraphArgs& g) {
    GraphSpec spec{kind_from_string(g.kind), g.sim, g.restricted, g.labeled};
    return build_transition_graph(ps, spec, GraphLimits{g.cap, g.pair_cap});
}

int run(int argc, char** argv) {
    CLI::App app{"treemorph: transformations between plane spanning trees"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a point set or a tree");
    std::string gen_kind, gen_ps, gen_out;
    int gen_n = 0, gen_k = 0, gen_root = -1;
    std::uint64_t gen_seed = 1;
    bool gen_labeled = false;
    gen->add_option("--kind", gen_kind, "convex_regular | random_general | binary_tower | sim_rotation_lb | random_tree | star | balanced_tree")
        ->required()
        ->check(CLI::IsMember({"convex_regular", "random_general", "binary_tower", "sim_rotation_lb", "random_tree", "star", "balanced_tree"}));
    gen->add_option("--n", gen_n, "number of points");
    gen->add_option("--k", gen_k, "tower parameter");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--ps", gen_ps, "point set (tree kinds)");
    gen->add_option("--root", gen_root, "star center or balanced-tree root (default: an extreme point)");
    gen->add_flag("--labeled", gen_labeled, "label the tree's edges");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // enum
    auto* en = app.add_subcommand("enum", "enumerate all plane spanning trees");
    std::string en_ps, en_out;
    bool en_labeled = false;
    long en_cap = GraphLimits{}.enum_cap;
    en->add_option("--ps", en_ps, "point-set JSON")->required();
    en->add_flag("--labeled", en_labeled, "all labelings of every tree");
    en->add_option("--cap", en_cap, "most trees to produce");
    en->add_option("-o,--out", en_out, "write the trees as JSON");

    // neighbors
    auto* nb = app.add_subcommand("neighbors", "list single-operation neighbors of a tree");
    std::string nb_ps, nb_tree, nb_kind = "exchange", nb_out;
    nb->add_option("--ps", nb_ps)->required();
    nb->add_option("--tree", nb_tree)->required();
    nb->add_option("--kind", nb_kind);
    nb->add_option("-o,--out", nb_out);

    // transform
    auto* tf = app.add_subcommand("transform", "run a constructive transformation and write its verified trace");
    TransformArgs ta;
    std::vector<std::string> names;
    for (const auto& [name, fn] : algorithms()) names.push_back(name);
    tf->add_option("--alg", ta.alg, "algorithm")->required()->check(CLI::IsMember(names));
    tf->add_option("--ps", ta.ps, "point-set JSON")->required();
    tf->add_option("--tree", ta.tree, "initial tree");
    tf->add_option("--target", ta.target, "target tree");
    tf->add_option("--root", ta.root, "star center (default: an extreme point)");
    tf->add_option("--avoid", ta.avoid, "hull edge i,j to keep out (hull path) or root edge (path by slides)");
    tf->add_option("--gadget", ta.gadget, "adjacent3slides | quad4rotations | path7rotations")->default_val("adjacent3slides");
    tf->add_option("--swap", ta.swap, "edges whose labels swap_gadget exchanges, as i,j:k,l");
    tf->add_option("-o,--out", ta.out, "trace file (default stdout)");

    // distance, diameter
    auto* ds = app.add_subcommand("distance", "exact distance between two trees by breadth-first search");
    GraphArgs dg;
    std::string ds_tree, ds_target;
    add_graph_flags(ds, dg);
    ds->add_option("--tree", ds_tree)->required();
    ds->add_option("--target", ds_target)->required();

    auto* dm = app.add_subcommand("diameter", "exact transition-graph diameter as a CSV row");
    GraphArgs mg;
    bool dm_no_header = false;
    std::string dm_export, dm_export_bin;
    add_graph_flags(dm, mg);
    dm->add_flag("--no-header", dm_no_header, "omit the CSV header line");
    dm->add_option("--export", dm_export, "write the graph's adjacency as JSON");
    dm->add_option("--export-binary", dm_export_bin, "write the graph in compact binary form");

    // verify
    auto* vf = app.add_subcommand("verify", "replay a trace and check every step");
    std::string vf_ps, vf_trace, vf_target;
    vf->add_option("--ps", vf_ps)->required();
    vf->add_option("--trace", vf_trace)->required();
    vf->add_option("--target", vf_target, "also require the trace to end at this tree");

    // render
    auto* rd = app.add_subcommand("render", "draw a tree or every frame of a trace as SVG");
    std::string rd_ps, rd_tree, rd_trace, rd_out;
    rd->add_option("--ps", rd_ps)->required();
    auto* rd_t = rd->add_option("--tree", rd_tree);
    auto* rd_tr = rd->add_option("--trace", rd_trace, "frames go to <out>-000.svg, <out>-001.svg, ...");
    rd_t->excludes(rd_tr);
    rd->add_option("-o,--out", rd_out, "output file, or the frame prefix for traces")->required();

    // rlg
    auto* rlg = app.add_subcommand("rlg", "reduced line graphs of trees on convex sets");
    rlg->require_subcommand(1);
    auto* rb = rlg->add_subcommand("build", "reduced line graph of a tree");
    std::string rb_ps, rb_tree, rb_out;
    rb->add_option("--ps", rb_ps)->required();
    rb->add_option("--tree", rb_tree)->required();
    rb->add_option("-o,--out", rb_out);
    auto* rr = rlg->add_subcommand("reconstruct", "labeled tree on the regular n-gon with the given reduced line graph");
    std::string rr_rlg, rr_out;
    int rr_n = 0;
    rr->add_option("--rlg", rr_rlg)->required();
    rr->add_option("--n", rr_n, "number of points")->required();
    rr->add_option("-o,--out", rr_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            bool tree_kind = gen_kind == "random_tree" || gen_kind == "star" || gen_kind == "balanced_tree";
            if (!tree_kind) {
                emit(gen_out, canonical_dump(to_json(generate(gen_kind, GenParams{gen_n, gen_k}, gen_seed))));
                return 0;
            }
            if (gen_ps.empty()) throw CLI::RequiredError("--ps");
            PointSet ps = load_points(gen_ps);
            Tree t;
            if (gen_kind == "random_tree") {
                t = random_tree(ps, gen_seed, gen_labeled);
            } else {
                int r = gen_root >= 0 ? gen_root : extreme_point(ps);
                t = gen_kind == "star" ? star(ps.n(), r) : canonical_balanced_tree(ps, r).tree;
                if (gen_labeled) {
                    std::vector<int> ids(t.edges().size());
                    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i) + 1;
                    t = t.with_labels(ids);
                }
                t = validate_tree(ps, t.edges(), t.labels());
            }
            emit(gen_out, canonical_dump(to_json(t)));
        } else if (*en) {
            PointSet ps = load_points(en_ps);
            GraphLimits lim;
            lim.enum_cap = en_cap;
            auto trees = enumerate_trees(ps, en_labeled, lim);
            std::cout << trees.size() << "\n";
            if (!en_out.empty()) {
                Json arr = Json::array();
                for (const auto& t : trees) arr.push_back(to_json(t));
                write_text_file(en_out, canonical_dump(Json{{"trees", arr}}));
            }
        } else if (*nb) {
            PointSet ps = load_points(nb_ps);
            Tree t = load_tree(ps, nb_tree);
            auto moves = enumerate_neighbors(ps, t, kind_from_string(nb_kind));
            Json arr = Json::array();
            for (const auto& m : moves) arr.push_back(to_json(m));
            if (nb_out.empty()) std::cout << moves.size() << "\n";
            else write_text_file(nb_out, canonical_dump(Json{{"moves", arr}}));
        } else if (*tf) {
            PointSet ps = load_points(ta.ps);
            Trace tr = algorithms().at(ta.alg)(ps, ta);
            TraceCheck chk = verify_trace(ps, tr);
            if (!chk.ok)
                throw DomainError("internal error: trace fails at step " + std::to_string(chk.failed_step) + ": " + chk.diagnosis);
            if (!ta.target.empty() && ta.alg != "star_label_sort" && chk.final_tree != load_tree(ps, ta.target))
                throw DomainError("internal error: trace does not end at the target");
            emit(ta.out, canonical_dump(to_json(tr)));
            std::cerr << ta.alg << ": " << tr.size() << " steps (bound " << tr.bound << ")\n";
        } else if (*ds) {
            PointSet ps = load_points(dg.ps);
            Tree a = load_tree(ps, ds_tree), b = load_tree(ps, ds_target);
            if (dg.labeled != a.labeled() || a.labeled() != b.labeled())
                throw DomainError("--labeled must match whether both trees carry labels");
            TransitionGraph g = graph_of(ps, dg);
            int ia = g.find(a), ib = g.find(b);
            if (ia < 0 || ib < 0) throw DomainError("tree not among the enumerated nodes");
            int d = distance(g, ia, ib);
            std::cout << (d < 0 ? std::string("unreachable") : std::to_string(d)) << "\n";
        } else if (*dm) {
            PointSet ps = load_points(mg.ps);
            TransitionGraph g = graph_of(ps, mg);
            DiameterResult d = diameter(g, mg.threads);
            if (!dm_no_header) std::cout << diameter_csv_header() << "\n";
            std::cout << diameter_csv_row(ps, g, d) << "\n";
            if (!dm_export.empty()) write_text_file(dm_export, canonical_dump(to_json(g)));
            if (!dm_export_bin.empty()) {
                std::ostringstream os;
                write_graph_binary(os, g);
                write_text_file(dm_export_bin, os.str());
            }
        } else if (*vf) {
            PointSet ps = load_points(vf_ps);
            Trace tr = trace_from_json(read_json_file(vf_trace));
            if (tr.initial.n() != ps.n()) throw DomainError("trace and point set differ in size");
            TraceCheck chk = verify_trace(ps, tr);
            if (!chk.ok) {
                std::cout << "FAIL step " << chk.failed_step << ": " << chk.diagnosis << "\n";
                return 1;
            }
            if (!vf_target.empty() && chk.final_tree != load_tree(ps, vf_target)) {
                std::cout << "FAIL final tree differs from the target\n";
                return 1;
            }
            std::cout << "OK " << tr.size() << " steps, bound " << tr.bound << (tr.size() <= tr.bound ? "" : " EXCEEDED") << "\n";
            if (tr.size() > tr.bound) return 1;
        } else if (*rd) {
            PointSet ps = load_points(rd_ps);
            if (!rd_tree.empty()) {
                write_text_file(rd_out, render_svg(ps, load_tree(ps, rd_tree)));
            } else if (!rd_trace.empty()) {
                Trace tr = trace_from_json(read_json_file(rd_trace));
                TraceCheck chk = verify_trace(ps, tr);
                if (!chk.ok) throw DomainError("trace fails at step " + std::to_string(chk.failed_step) + ": " + chk.diagnosis);
                auto frames = render_svg(ps, tr);
                std::string prefix = rd_out;
                if (prefix.size() > 4 && prefix.substr(prefix.size() - 4) == ".svg") prefix.resize(prefix.size() - 4);
                for (std::size_t i = 0; i < frames.size(); ++i) {
                    char suffix[32];
                    std::snprintf(suffix, sizeof suffix, "-%03zu.svg", i);
                    write_text_file(prefix + suffix, frames[i]);
                }
                std::cout << frames.size() << " frames\n";
            } else {
                throw CLI::RequiredError("--tree or --trace");
            }
        } else if (*rb) {
            PointSet ps = load_points(rb_ps);
            emit(rb_out, canonical_dump(to_json(rlg_build(ps, load_tree(ps, rb_tree)))));
        } else if (*rr) {
            emit(rr_out, canonical_dump(to_json(rlg_reconstruct(rlg_from_json(read_json_file(rr_rlg)), rr_n))));
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << " (" << e.partial() << " produced)\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
