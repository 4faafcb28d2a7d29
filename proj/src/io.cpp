#include "treemorph/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace treemorph {

namespace {

std::string str(long v) { return std::to_string(v); }

const Json& field(const Json& j, const char* key, const std::string& at) {
    if (!j.is_object()) throw FormatError(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw FormatError(at, std::string("missing key \"") + key + "\"");
    return *it;
}

const Json& array(const Json& j, const std::string& at) {
    if (!j.is_array()) throw FormatError(at, "expected an array");
    return j;
}

Int big(const Json& j, const std::string& at) {
    std::string s;
    if (j.is_string()) s = j.get<std::string>();
    else if (j.is_number_integer()) s = std::to_string(j.get<long long>());
    else throw FormatError(at, "expected an integer or a decimal string");
    Int v;
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos || v.set_str(s, 10) != 0)
        throw FormatError(at, "\"" + s + "\" is not a decimal integer");
    return v;
}

long integer(const Json& j, const std::string& at) {
    Int v = big(j, at);
    if (!v.fits_slong_p()) throw FormatError(at, "integer out of range");
    return v.get_si();
}

int index(const Json& j, const std::string& at) {
    long v = integer(j, at);
    if (v < 0 || v > 1'000'000'000) throw FormatError(at, "expected a point index");
    return static_cast<int>(v);
}

bool boolean(const Json& j, const std::string& at) {
    if (!j.is_boolean()) throw FormatError(at, "expected true or false");
    return j.get<bool>();
}

std::string text(const Json& j, const std::string& at) {
    if (!j.is_string()) throw FormatError(at, "expected a string");
    return j.get<std::string>();
}

Json edge_json(const Edge& e) { return Json::array({str(e.u), str(e.v)}); }

Edge edge_from(const Json& j, const std::string& at) {
    if (!j.is_array() || j.size() != 2) throw FormatError(at, "expected an edge [i, j]");
    return Edge(index(j[0], at + "/0"), index(j[1], at + "/1"));
}

std::string hex(const std::string& s) {
    static const char* d = "0123456789abcdef";
    std::string out;
    for (unsigned char c : s) {
        out.push_back(d[c >> 4]);
        out.push_back(d[c & 15]);
    }
    return out;
}

}  // namespace

Json to_json(const PointSet& ps) {
    Json pts = Json::array();
    for (const auto& p : ps.points()) pts.push_back(Json::array({p.x.get_str(), p.y.get_str()}));
    return Json{{"points", pts}, {"position", to_string(ps.position())}};
}

PointSet pointset_from_json(const Json& j, const std::string& at) {
    const Json& pts = array(field(j, "points", at), at + "/points");
    std::vector<Point> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string here = at + "/points/" + str(static_cast<long>(i));
        if (!pts[i].is_array() || pts[i].size() != 2) throw FormatError(here, "expected a point [x, y]");
        out.emplace_back(big(pts[i][0], here + "/0"), big(pts[i][1], here + "/1"));
    }
    PointSet ps(std::move(out));
    Position claimed = Position::unchecked;
    if (j.contains("position")) {
        try {
            claimed = position_from_string(text(j["position"], at + "/position"));
        } catch (const std::invalid_argument& e) {
            throw FormatError(at + "/position", e.what());
        }
    }
    Position actual = check_position(ps);
    if (claimed != Position::unchecked && claimed != actual)
        throw FormatError(at + "/position", std::string("points are in ") + to_string(actual) + " position, file says " + to_string(claimed));
    return ps;
}

Json to_json(const Tree& t) {
    Json edges = Json::array();
    for (const auto& e : t.edges()) edges.push_back(edge_json(e));
    Json j{{"n", str(t.n())}, {"edges", edges}};
    if (t.labeled()) {
        Json labels = Json::array();
        for (int l : t.labels()) labels.push_back(str(l));
        j["labels"] = labels;
    }
    return j;
}

Tree tree_from_json(const Json& j, const std::string& at) {
    const Json& es = array(field(j, "edges", at), at + "/edges");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < es.size(); ++i) edges.push_back(edge_from(es[i], at + "/edges/" + str(static_cast<long>(i))));
    int n = j.contains("n") ? index(j["n"], at + "/n") : static_cast<int>(edges.size()) + 1;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].v >= n) throw FormatError(at + "/edges/" + str(static_cast<long>(i)), "vertex index out of range");
    std::vector<int> labels;
    if (j.contains("labels")) {
        const Json& ls = array(j["labels"], at + "/labels");
        if (ls.size() != edges.size()) throw FormatError(at + "/labels", "label count differs from edge count");
        for (std::size_t i = 0; i < ls.size(); ++i) labels.push_back(index(ls[i], at + "/labels/" + str(static_cast<long>(i))));
    }
    // Labels belong to edges in file order; the tree sorts both together.
    std::vector<std::pair<Edge, int>> both;
    for (std::size_t i = 0; i < edges.size(); ++i) both.emplace_back(edges[i], labels.empty() ? 0 : labels[i]);
    std::sort(both.begin(), both.end());
    std::vector<Edge> se;
    std::vector<int> sl;
    for (auto& [e, l] : both) {
        se.push_back(e);
        if (!labels.empty()) sl.push_back(l);
    }
    return Tree(n, std::move(se), std::move(sl));
}

Json to_json(const Move& m) {
    return Json{{"kind", to_string(m.kind)},
                {"pairs", Json::array({Json::array({edge_json(m.removed), edge_json(m.inserted)})})},
                {"restricted", false},
                {"simultaneous", false}};
}

Json to_json(const SimMove& m) {
    Json pairs = Json::array();
    for (const auto& [a, b] : m.pairs) pairs.push_back(Json::array({edge_json(a), edge_json(b)}));
    return Json{{"kind", to_string(m.kind)}, {"pairs", pairs}, {"restricted", m.restricted}, {"simultaneous", true}};
}

Step step_from_json(const Json& j, const std::string& at) {
    const std::string name = text(field(j, "kind", at), at + "/kind");
    Kind kind;
    try {
        kind = kind_from_string(name);
    } catch (const std::invalid_argument& e) {
        throw FormatError(at + "/kind", e.what());
    }
    const Json& ps = array(field(j, "pairs", at), at + "/pairs");
    std::vector<std::pair<Edge, Edge>> pairs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        std::string here = at + "/pairs/" + str(static_cast<long>(i));
        if (!ps[i].is_array() || ps[i].size() != 2) throw FormatError(here, "expected a pair [removed, inserted]");
        pairs.emplace_back(edge_from(ps[i][0], here + "/0"), edge_from(ps[i][1], here + "/1"));
    }
    bool sim = j.contains("simultaneous") ? boolean(j["simultaneous"], at + "/simultaneous") : true;
    bool restricted = j.contains("restricted") ? boolean(j["restricted"], at + "/restricted") : false;
    if (!sim) {
        if (pairs.size() != 1) throw FormatError(at + "/pairs", "a single move has exactly one pair");
        return Move{pairs[0].first, pairs[0].second, kind};
    }
    return SimMove{std::move(pairs), kind, restricted};
}

Json to_json(const Trace& tr) {
    Json steps = Json::array();
    for (const auto& s : tr.steps) steps.push_back(std::visit([](const auto& m) { return to_json(m); }, s));
    return Json{{"theorem", tr.algorithm}, {"bound", str(tr.bound)}, {"initial", to_json(tr.initial)}, {"steps", steps}};
}

Trace trace_from_json(const Json& j, const std::string& at) {
    Trace tr;
    tr.initial = tree_from_json(field(j, "initial", at), at + "/initial");
    tr.bound = integer(field(j, "bound", at), at + "/bound");
    if (j.contains("theorem")) tr.algorithm = text(j["theorem"], at + "/theorem");
    const Json& steps = array(field(j, "steps", at), at + "/steps");
    for (std::size_t i = 0; i < steps.size(); ++i) tr.steps.push_back(step_from_json(steps[i], at + "/steps/" + str(static_cast<long>(i))));
    return tr;
}

Json to_json(const ReducedLineGraph& g) {
    Json vs = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        Json nb = Json::array(), tg = Json::array();
        for (std::size_t i = 0; i < g.nbrs[v].size(); ++i) {
            nb.push_back(str(g.nbrs[v][i]));
            tg.push_back(str(g.tags[v][i]));
        }
        Json x{{"neighbors", nb}, {"tags", tg}};
        if (!g.labels.empty()) x["label"] = str(g.labels[v]);
        vs.push_back(x);
    }
    return Json{{"vertices", vs}};
}

ReducedLineGraph rlg_from_json(const Json& j, const std::string& at) {
    const Json& vs = array(field(j, "vertices", at), at + "/vertices");
    ReducedLineGraph g;
    int m = static_cast<int>(vs.size());
    for (int v = 0; v < m; ++v) {
        std::string here = at + "/vertices/" + str(v);
        const Json& nb = array(field(vs[v], "neighbors", here), here + "/neighbors");
        const Json& tg = array(field(vs[v], "tags", here), here + "/tags");
        if (nb.size() != tg.size()) throw FormatError(here + "/tags", "tag count differs from neighbor count");
        std::vector<int> a, b;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int w = index(nb[i], here + "/neighbors/" + str(static_cast<long>(i)));
            if (w >= m) throw FormatError(here + "/neighbors/" + str(static_cast<long>(i)), "vertex out of range");
            a.push_back(w);
            b.push_back(index(tg[i], here + "/tags/" + str(static_cast<long>(i))));
        }
        g.nbrs.push_back(std::move(a));
        g.tags.push_back(std::move(b));
        if (vs[v].contains("label")) g.labels.push_back(index(vs[v]["label"], here + "/label"));
    }
    if (!g.labels.empty() && static_cast<int>(g.labels.size()) != m) throw FormatError(at + "/vertices", "labels on some vertices only");
    return g;
}

Json to_json(const TransitionGraph& g) {
    Json nodes = Json::array(), adj = Json::array();
    for (int i = 0; i < g.size(); ++i) {
        nodes.push_back(hex(canonical_key(g.nodes[i])));
        Json a = Json::array();
        for (int w : g.adj[i]) a.push_back(str(w));
        adj.push_back(a);
    }
    Json spec{{"kind", to_string(g.spec.kind)},
              {"labeled", g.spec.labeled},
              {"restricted", g.spec.restricted},
              {"simultaneous", g.spec.simultaneous}};
    return Json{{"adjacency", adj}, {"nodes", nodes}, {"spec", spec}};
}

void write_graph_binary(std::ostream& os, const TransitionGraph& g) {
    auto put = [&](std::uint64_t v, int bytes) {
        for (int b = 0; b < bytes; ++b) os.put(static_cast<char>((v >> (8 * b)) & 0xff));
    };
    os.write("TMG1", 4);
    put(static_cast<std::uint64_t>(g.size()), 4);
    std::uint64_t off = 0;
    put(off, 8);
    for (const auto& a : g.adj) {
        off += a.size();
        put(off, 8);
    }
    for (const auto& a : g.adj)
        for (int w : a) put(static_cast<std::uint64_t>(w), 4);
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError("", path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace treemorph
