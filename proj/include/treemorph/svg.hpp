#pragma once

#include "treemorph/trace.hpp"

#include <string>
#include <vector>

namespace treemorph {

struct SvgOptions {
    int size = 400;           ///< viewBox is 0 0 size size
    int margin = 24;
    bool point_labels = true; ///< draw point indices
    bool edge_labels = true;  ///< draw edge labels of labeled trees
};

std::string render_svg(const PointSet& ps, const Tree& t, const SvgOptions& opt = {});

/// One frame per step (the tree before it, removed edges dashed, inserted ones dotted) plus the final tree.
std::vector<std::string> render_svg(const PointSet& ps, const Trace& tr, const SvgOptions& opt = {});

}  // namespace treemorph
