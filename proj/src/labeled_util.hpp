#pragma once

#include "treemorph/labeled.hpp"

#include <map>
#include <vector>

namespace treemorph::detail {

/// Checks both trees are labeled plane trees on ps.
void require_labeled_pair(const PointSet& ps, const Tree& t1, const Tree& t2, const char* who);

/// The same steps replayed from a labeled copy of the trace's initial tree; labels follow the moves.
Trace relabel(Trace tr, const Tree& start);

/// Vertices of a path tree from one endpoint to the other (the smaller endpoint first).
std::vector<int> path_vertices(const Tree& t);

/// Labels `to` from `from` as one simultaneous exchange would: shared edges keep their labels,
/// wished (label, edge) pairs are honored when possible, the rest pair up in edge order.
Tree assign_labels(const Tree& from, const std::vector<Edge>& to, const std::map<int, Edge>& wishes = {});

/// One simultaneous move to a labeled target, pairing edges through their labels.
/// Throws std::logic_error when a shared edge carries different labels.
void sim_by_labels(TraceBuilder& tb, const Tree& target, Kind kind);

}  // namespace treemorph::detail
