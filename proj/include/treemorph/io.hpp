#pragma once

#include "treemorph/graphx.hpp"
#include "treemorph/trace.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace treemorph {

using Json = nlohmann::json;

/// Schema violation; `pointer` locates the offending value (RFC 6901).
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& pointer, const std::string& msg)
        : std::runtime_error((pointer.empty() ? std::string("/") : pointer) + ": " + msg), pointer_(pointer) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// All integers are written as decimal strings. Readers accept strings or JSON integers.

Json to_json(const PointSet& ps);
PointSet pointset_from_json(const Json& j, const std::string& at = "");

Json to_json(const Tree& t);
Tree tree_from_json(const Json& j, const std::string& at = "");

Json to_json(const Move& m);
Json to_json(const SimMove& m);
Step step_from_json(const Json& j, const std::string& at = "");

Json to_json(const Trace& tr);
Trace trace_from_json(const Json& j, const std::string& at = "");

Json to_json(const ReducedLineGraph& g);
ReducedLineGraph rlg_from_json(const Json& j, const std::string& at = "");

/// Node keys (hex), specification and sorted adjacency lists.
Json to_json(const TransitionGraph& g);
/// Compact form: "TMG1", node count (u32), CSR offsets (u64 each), targets (u32 each), little endian.
void write_graph_binary(std::ostream& os, const TransitionGraph& g);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace treemorph
