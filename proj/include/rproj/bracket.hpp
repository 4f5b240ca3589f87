// bracket.hpp - Linearized bracket form of projection trees:
//   tree   := vertex [ '(' tree { ',' tree } ')' ]
//   vertex := positive decimal integer
// Whitespace between tokens is insignificant. A childless node is just
// its vertex token; there is no empty-list form "()".
#pragma once

#include "rproj/projection.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace rproj {

// Raised by parse_bracket; offset() is the 0-based position of the
// offending character in the input.
class BracketParseError : public std::runtime_error {
public:
    BracketParseError(std::size_t offset, const std::string& message);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Children are emitted ascending by subtree root vertex.
std::string to_bracket(const ProjectionTree& t);

// One child per line, indented by depth; reparses to the same tree.
std::string to_bracket_pretty(const ProjectionTree& t);

ProjectionTree parse_bracket(std::string_view text);

// Forward-expands the predecessor DAG from the source: the children of a
// node holding x are every v with x in pred(v). Shared sub-DAGs are
// duplicated, so the expansion can be exponential; NodeCapError guards it.
ProjectionTree projection_to_tree(const RefinedProjection& p,
                                  std::size_t node_cap = kDefaultNodeCap);

}  // namespace rproj
