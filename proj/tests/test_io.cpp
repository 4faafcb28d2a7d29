#include "treemorph/io.hpp"
#include "treemorph/labeled.hpp"
#include "treemorph/svg.hpp"
#include "treemorph/xform.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace treemorph;

namespace {

int count_of(const std::string& s, const std::string& needle) {
    int c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}


}  // namespace

TEST_CASE("point sets keep arbitrary precision") {
    Int big("1234567890123456789012345678901234567890");
    PointSet ps({{0, 0}, {big, 1}, {1, big}});
    check_position(ps);
    Json j = to_json(ps);
    CHECK(j["points"][1][0] == "1234567890123456789012345678901234567890");
    PointSet back = pointset_from_json(Json::parse(canonical_dump(j)));
    CHECK(back.points()[1].x == big);
    CHECK(back.position() == ps.position());
}

TEST_CASE("integers are accepted as strings or numbers") {
    Json j = Json::parse(R"({"points": [[0, 0], ["4", 0], [0, 4]]})");
    CHECK(pointset_from_json(j).n() == 3);
    Json t = Json::parse(R"({"edges": [["0", 1], [0, "2"]]})");
    CHECK(tree_from_json(t).n() == 3);
}

TEST_CASE("trees and traces round trip") {
    PointSet ps = convex_regular(7);
    Tree t = random_tree(ps, 5, true);
    CHECK(tree_from_json(to_json(t)) == t);

    Tree target = random_tree(ps, 6, true);
    Trace tr = labeled_transform_rotations(ps, t, target);
    Trace back = trace_from_json(Json::parse(canonical_dump(to_json(tr))));
    CHECK(back.size() == tr.size());
    CHECK(back.bound == tr.bound);
    CHECK(back.algorithm == tr.algorithm);
    CHECK(verify_trace(ps, back).ok);
    CHECK(replay(ps, back) == target);

    Trace sim = star_by_sim_rotations(ps, t.unlabeled(), 0);
    Trace sim_back = trace_from_json(to_json(sim));
    CHECK(verify_trace(ps, sim_back).ok);
    CHECK(replay(ps, sim_back) == replay(ps, sim));
}

TEST_CASE("reduced line graphs round trip") {
    PointSet ps = convex_regular(6);
    Tree t = random_tree(ps, 9, true);
    ReducedLineGraph g = rlg_build(ps, t);
    ReducedLineGraph back = rlg_from_json(to_json(g));
    CHECK(rlg_equal(g, back));
    CHECK(rlg_reconstruct(back, 6) == rlg_reconstruct(g, 6));
}

TEST_CASE("graphs export in both forms") {
    PointSet ps = convex_regular(4);
    auto g = build_transition_graph(ps, GraphSpec{Kind::rotation, false, false, false});
    Json j = to_json(g);
    CHECK(j["nodes"].size() == 12);
    CHECK(j["adjacency"].size() == 12);
    std::ostringstream os;
    write_graph_binary(os, g);
    std::string b = os.str();
    CHECK(b.substr(0, 4) == "TMG1");
    CHECK(b.size() == 4 + 4 + 8 * 13 + 4 * static_cast<std::size_t>(2 * g.edge_count()));
}

TEST_CASE("canonical dump is byte stable") {
    PointSet ps = convex_regular(5);
    Tree t = random_tree(ps, 1);
    std::string a = canonical_dump(to_json(t));
    std::string b = canonical_dump(to_json(tree_from_json(Json::parse(a))));
    CHECK(a == b);
    CHECK(a.back() == '\n');
    // Keys come out sorted.
    CHECK(a.find("\"edges\"") < a.find("\"n\""));
}

TEST_CASE("schema errors carry a JSON pointer") {
    auto pointer = [](auto fn, const char* text) {
        try {
            fn(Json::parse(text));
        } catch (const FormatError& e) {
            return e.pointer();
        }
        return std::string("none");
    };
    auto ps = [](const Json& j) { pointset_from_json(j); };
    auto tree = [](const Json& j) { tree_from_json(j); };
    auto trace = [](const Json& j) { trace_from_json(j); };
    CHECK(pointer(ps, R"({"points": [[0, 0], [1, "x"]]})") == "/points/1/1");
    CHECK(pointer(ps, R"({"points": [[0, 0], [1]]})") == "/points/1");
    CHECK(pointer(ps, R"({"points": [[0,0],[4,0],[0,4],[4,4]], "position": "general"})") == "/position");
    CHECK(pointer(tree, R"({"n": 3, "edges": [[0, 1], [1, 7]]})") == "/edges/1");
    CHECK(pointer(tree, R"({"edges": [[0, 1]], "labels": [1, 2]})") == "/labels");
    CHECK(pointer(trace, R"({"bound": 1, "initial": {"edges": [[0, 1]]}, "steps": [{"kind": "twist", "pairs": []}]})") ==
          "/steps/0/kind");
    CHECK_THROWS(read_json_file("/nonexistent/file.json"));
}

TEST_CASE("svg rendering") {
    PointSet ps({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    check_position(ps);
    Tree s = star(4, 0);
    std::string svg = render_svg(ps, s);
    CHECK(svg.find("viewBox=\"0 0 400 400\"") != std::string::npos);
    CHECK(count_of(svg, "<line ") == 3);
    CHECK(count_of(svg, "<circle ") == 4);
    CHECK(svg == render_svg(ps, s));

    Tree p = path(4, {0, 1, 2, 3});
    Trace tr = star_by_rotations(ps, p, 0);
    REQUIRE(tr.size() == 2);
    auto frames = render_svg(ps, tr);
    REQUIRE(frames.size() == 3);
    CHECK(count_of(frames[0], "class=\"removed\"") == 1);
    CHECK(count_of(frames[0], "class=\"inserted\"") == 1);
    CHECK(frames[0].find("stroke-dasharray=\"8,5\"") != std::string::npos);
    CHECK(frames[0].find("stroke-dasharray=\"1,5\"") != std::string::npos);
    CHECK(count_of(frames[2], "stroke-dasharray") == 0);

    SvgOptions opt;
    opt.size = 200;
    CHECK(render_svg(ps, s, opt).find("viewBox=\"0 0 200 200\"") != std::string::npos);
}
