#include "treemorph/trace.hpp"

#include <algorithm>

namespace treemorph {

namespace {

Tree apply_step(const PointSet& ps, const Tree& t, const Step& s) {
    if (const auto* m = std::get_if<Move>(&s)) return apply_move(ps, t, *m);
    return apply_sim_move(ps, t, std::get<SimMove>(s));
}

}  // namespace

TraceCheck verify_trace(const PointSet& ps, const Trace& tr) {
    TraceCheck res;
    if (tr.initial.n() != ps.n()) {
        res.ok = false;
        res.diagnosis = "initial tree has " + std::to_string(tr.initial.n()) + " vertices, point set has " +
                        std::to_string(ps.n());
        return res;
    }
    if (auto bad = check_tree(ps, tr.initial.edges(), tr.initial.labels())) {
        res.ok = false;
        res.diagnosis = "initial tree invalid: " + bad->message;
        return res;
    }
    Tree cur = tr.initial;
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        try {
            cur = apply_step(ps, cur, tr.steps[i]);
        } catch (const std::exception& e) {
            res.ok = false;
            res.failed_step = static_cast<int>(i);
            res.diagnosis = e.what();
            res.final_tree = cur;
            return res;
        }
    }
    res.final_tree = cur;
    if (tr.size() > tr.bound) {
        res.ok = false;
        res.diagnosis = "trace has " + std::to_string(tr.size()) + " steps, bound is " + std::to_string(tr.bound);
    }
    return res;
}

Tree replay(const PointSet& ps, const Trace& tr) {
    Tree cur = tr.initial;
    for (const auto& s : tr.steps) cur = apply_step(ps, cur, s);
    return cur;
}

Trace reversed(const PointSet& ps, const Trace& tr) {
    Trace out;
    out.initial = replay(ps, tr);
    out.bound = tr.bound;
    out.algorithm = tr.algorithm;
    for (auto it = tr.steps.rbegin(); it != tr.steps.rend(); ++it) {
        if (const auto* m = std::get_if<Move>(&*it)) {
            out.steps.emplace_back(Move{m->inserted, m->removed, m->kind});
        } else {
            SimMove s = std::get<SimMove>(*it);
            for (auto& [r, i] : s.pairs) std::swap(r, i);
            out.steps.emplace_back(std::move(s));
        }
    }
    return out;
}

Trace join_at_common(const PointSet& ps, const Trace& a, const Trace& b, const std::string& algorithm, long bound) {
    Tree ea = replay(ps, a), eb = replay(ps, b);
    if (ea.edges() != eb.edges()) throw std::logic_error("join_at_common: traces end in different trees");
    if (ea.labels() != eb.labels()) throw std::logic_error("join_at_common: traces end with different labels");
    TraceBuilder tb(ps, a.initial, algorithm);
    tb.append(a);
    tb.append(reversed(ps, b));
    return tb.finish(bound);
}

TraceBuilder::TraceBuilder(const PointSet& ps, Tree initial, std::string algorithm)
    : ps_(ps), initial_(initial), cur_(std::move(initial)), algorithm_(std::move(algorithm)) {}

void TraceBuilder::move(const Edge& out, const Edge& in, Kind kind) {
    Move m{out, in, kind};
    cur_ = apply_move(ps_, cur_, m);
    steps_.emplace_back(m);
}

void TraceBuilder::sim(SimMove m) {
    if (m.pairs.empty()) return;
    cur_ = apply_sim_move(ps_, cur_, m);
    steps_.emplace_back(std::move(m));
}

void TraceBuilder::sim_to(const std::vector<Edge>& target, Kind kind, bool restricted) {
    Tree goal(cur_.n(), target);
    if (goal.edges() == cur_.edges()) return;
    auto r = validate_simultaneous(ps_, cur_.unlabeled(), goal, kind, restricted);
    if (!r) throw std::logic_error(std::string("no simultaneous ") + to_string(kind) + " reaches the requested tree");
    sim(std::move(r.move));
}

void TraceBuilder::append(const Trace& tr) {
    if (tr.initial.edges() != cur_.edges() || tr.initial.labels() != cur_.labels())
        throw std::logic_error("TraceBuilder::append: trace does not start at the current tree");
    for (const auto& s : tr.steps) {
        cur_ = apply_step(ps_, cur_, s);
        steps_.push_back(s);
    }
}

Trace TraceBuilder::finish(long bound) const {
    if (size() > bound)
        throw std::logic_error(algorithm_ + ": " + std::to_string(size()) + " steps exceed the bound " + std::to_string(bound));
    return Trace{initial_, steps_, bound, algorithm_};
}

}  // namespace treemorph
