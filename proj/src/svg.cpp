#include "treemorph/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace treemorph {

namespace {

// Coordinates are scaled into the fixed viewBox with exact rationals before the one conversion to double.
class Frame {
public:
    Frame(const PointSet& ps, const SvgOptions& opt) : opt_(opt) {
        if (ps.n() == 0) return;
        lo_x_ = hi_x_ = ps[0].x;
        lo_y_ = hi_y_ = ps[0].y;
        for (const auto& p : ps.points()) {
            lo_x_ = std::min(lo_x_, p.x);
            hi_x_ = std::max(hi_x_, p.x);
            lo_y_ = std::min(lo_y_, p.y);
            hi_y_ = std::max(hi_y_, p.y);
        }
        span_ = std::max(hi_x_ - lo_x_, hi_y_ - lo_y_);
        if (span_ == 0) span_ = 1;
        for (const auto& p : ps.points()) {
            double inner = opt.size - 2.0 * opt.margin;
            mpq_class fx(p.x - lo_x_, span_), fy(hi_y_ - p.y, span_);  // y grows downward in SVG
            xy_.emplace_back(opt.margin + inner * fx.get_d(), opt.margin + inner * fy.get_d());
        }
    }

    std::string x(int i) const { return num(xy_[i].first); }
    std::string y(int i) const { return num(xy_[i].second); }
    std::string mx(const Edge& e) const { return num((xy_[e.u].first + xy_[e.v].first) / 2); }
    std::string my(const Edge& e) const { return num((xy_[e.u].second + xy_[e.v].second) / 2); }
    int points() const { return static_cast<int>(xy_.size()); }

private:
    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return buf;
    }

    const SvgOptions& opt_;
    Int lo_x_, hi_x_, lo_y_, hi_y_, span_;
    std::vector<std::pair<double, double>> xy_;
};

std::string document(const PointSet& ps, const Tree& t, const std::set<Edge>& removed, const std::vector<Edge>& inserted,
                     const SvgOptions& opt) {
    Frame f(ps, opt);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\" width=\""
       << opt.size << "\" height=\"" << opt.size << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto line = [&](const Edge& e, const char* cls, const char* extra) {
        os << "<line class=\"" << cls << "\" x1=\"" << f.x(e.u) << "\" y1=\"" << f.y(e.u) << "\" x2=\"" << f.x(e.v)
           << "\" y2=\"" << f.y(e.v) << "\" stroke=\"black\" stroke-width=\"2\"" << extra << "/>\n";
    };
    for (const auto& e : t.edges()) {
        if (removed.count(e)) line(e, "removed", " stroke-dasharray=\"8,5\"");
        else line(e, "edge", "");
    }
    for (const auto& e : inserted) line(e, "inserted", " stroke-dasharray=\"1,5\" stroke-linecap=\"round\"");
    if (opt.edge_labels && t.labeled())
        for (std::size_t i = 0; i < t.edges().size(); ++i) {
            const Edge& e = t.edges()[i];
            os << "<text class=\"label\" x=\"" << f.mx(e) << "\" y=\"" << f.my(e)
               << "\" font-size=\"11\" fill=\"#b00\" text-anchor=\"middle\">" << t.labels()[i] << "</text>\n";
        }
    for (int i = 0; i < f.points(); ++i) {
        os << "<circle cx=\"" << f.x(i) << "\" cy=\"" << f.y(i) << "\" r=\"4\" fill=\"black\"/>\n";
        if (opt.point_labels)
            os << "<text x=\"" << f.x(i) << "\" y=\"" << f.y(i) << "\" dx=\"6\" dy=\"-6\" font-size=\"11\">" << i << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_svg(const PointSet& ps, const Tree& t, const SvgOptions& opt) { return document(ps, t, {}, {}, opt); }

std::vector<std::string> render_svg(const PointSet& ps, const Trace& tr, const SvgOptions& opt) {
    std::vector<std::string> frames;
    Tree cur = tr.initial;
    for (const auto& step : tr.steps) {
        std::set<Edge> removed;
        std::vector<Edge> inserted;
        Tree next;
        if (const auto* m = std::get_if<Move>(&step)) {
            removed.insert(m->removed);
            inserted.push_back(m->inserted);
            next = apply_move(ps, cur, *m);
        } else {
            const auto& s = std::get<SimMove>(step);
            for (const auto& [a, b] : s.pairs) {
                removed.insert(a);
                inserted.push_back(b);
            }
            next = apply_sim_move(ps, cur, s);
        }
        frames.push_back(document(ps, cur, removed, inserted, opt));
        cur = std::move(next);
    }
    frames.push_back(document(ps, cur, {}, {}, opt));
    return frames;
}

}  // namespace treemorph
