#pragma once

#include "treemorph/moves.hpp"

#include <string>
#include <variant>
#include <vector>

namespace treemorph {

using Step = std::variant<Move, SimMove>;

/// A transformation sequence together with the step bound its construction guarantees.
struct Trace {
    Tree initial;
    std::vector<Step> steps;
    long bound = 0;
    std::string algorithm;

    long size() const { return static_cast<long>(steps.size()); }
};

struct TraceCheck {
    bool ok = true;
    /// Index of the first failing step; -1 for problems with the trace as a whole.
    int failed_step = -1;
    std::string diagnosis;
    Tree final_tree;
};

/// Independent replay: validates the initial tree, every step at its claimed kind, and the bound.
TraceCheck verify_trace(const PointSet& ps, const Trace& tr);

/// Replays without the bound check; throws MoveError on the first invalid step.
Tree replay(const PointSet& ps, const Trace& tr);

/// Same steps in reverse order, each inverted, starting from the final tree.
Trace reversed(const PointSet& ps, const Trace& tr);

/// Trace from a's initial tree to b's initial tree, given that both end in the same tree.
Trace join_at_common(const PointSet& ps, const Trace& a, const Trace& b, const std::string& algorithm, long bound);

/// Applies and validates steps as they are added.
class TraceBuilder {
public:
    TraceBuilder(const PointSet& ps, Tree initial, std::string algorithm);

    const Tree& current() const { return cur_; }
    long size() const { return static_cast<long>(steps_.size()); }

    void move(const Edge& out, const Edge& in, Kind kind);
    /// Skips empty moves.
    void sim(SimMove m);
    /// Moves to the given edge set in one simultaneous step, with the bijection found by matching.
    /// Labels follow the matched pairs. Throws std::logic_error when no bijection exists.
    void sim_to(const std::vector<Edge>& target, Kind kind, bool restricted = false);
    /// Appends a trace that starts at the current tree.
    void append(const Trace& tr);

    /// Throws std::logic_error when the step count exceeds the bound.
    Trace finish(long bound) const;

private:
    const PointSet& ps_;
    Tree initial_;
    Tree cur_;
    std::string algorithm_;
    std::vector<Step> steps_;
};

}  // namespace treemorph
