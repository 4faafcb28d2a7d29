#pragma once

#include "treemorph/moves.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace treemorph {

struct GraphLimits {
    long enum_cap = 10'000'000;    ///< most trees an enumeration may produce
    long pair_cap = 100'000'000;  ///< most node pairs a simultaneous graph may test
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& msg, long partial) : std::runtime_error(msg), partial_(partial) {}
    /// Count reached (or estimated) when the cap tripped.
    long partial() const { return partial_; }

private:
    long partial_;
};

/// Every plane spanning tree, by breadth-first search over exchanges from a star at a hull vertex.
/// Labeled mode returns every tree with every labeling. Sorted by canonical key.
std::vector<Tree> enumerate_trees(const PointSet& ps, bool labeled = false, const GraphLimits& lim = {});

/// Number of plane spanning trees on n points in convex position, C(3n-3, n-1) / (2n-1).
long convex_tree_count(int n);

struct GraphSpec {
    Kind kind = Kind::exchange;
    bool simultaneous = false;
    bool restricted = false;  ///< simultaneous slides only
    bool labeled = false;
};

std::string describe(const GraphSpec& s);

struct TransitionGraph {
    GraphSpec spec;
    std::vector<Tree> nodes;
    std::vector<std::vector<int>> adj;  ///< sorted neighbor lists
    std::unordered_map<std::string, int> index;

    int size() const { return static_cast<int>(nodes.size()); }
    long edge_count() const;
    /// Node of a tree, or -1.
    int find(const Tree& t) const;
};

TransitionGraph build_transition_graph(const PointSet& ps, const GraphSpec& spec, const GraphLimits& lim = {});
/// Same, over a node list from enumerate_trees (so several graphs share node numbering).
TransitionGraph build_transition_graph(const PointSet& ps, std::vector<Tree> nodes, const GraphSpec& spec,
                                       const GraphLimits& lim = {});

/// Breadth-first distances from src; -1 where unreachable.
std::vector<int> bfs_distances(const TransitionGraph& g, int src);
/// Exact distance, or -1 when b is unreachable from a.
int distance(const TransitionGraph& g, int a, int b);

struct DiameterResult {
    bool connected = true;
    int diameter = 0;
    int a = 0, b = 0;                  ///< witness pair at distance `diameter`
    std::vector<int> component_sizes;  ///< filled when disconnected
};

/// Exact diameter by breadth-first search from every node, split over worker threads.
DiameterResult diameter(const TransitionGraph& g, int threads = 0);

/// Worker count: `requested` if positive, else TREEMORPH_THREADS, else the hardware concurrency.
int worker_count(int requested = 0);

/// Every edge of `sub` is an edge of `super` (same node list).
bool is_subgraph(const TransitionGraph& sub, const TransitionGraph& super);

std::string diameter_csv_header();
std::string diameter_csv_row(const PointSet& ps, const TransitionGraph& g, const DiameterResult& d);

}  // namespace treemorph
