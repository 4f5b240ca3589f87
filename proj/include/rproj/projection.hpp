// projection.hpp - Projection trees over a mixed graph and the refined
// (shortest-path) per-source predecessor structure built from them.
#pragma once

#include "rproj/graph.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rproj {

// Level sentinel for vertices a source cannot reach.
inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

// Guard for operations whose output can grow exponentially.
inline constexpr std::size_t kDefaultNodeCap = 1u << 20;

class NodeCapError : public std::runtime_error {
public:
    explicit NodeCapError(std::size_t cap)
        : std::runtime_error("node cap of " + std::to_string(cap) +
                             " exceeded") {}
};

struct ProjectionNode {
    VertexId vertex = 0;
    std::vector<ProjectionNode> children;  // ascending by vertex when built

    friend bool operator==(const ProjectionNode&,
                           const ProjectionNode&) = default;
};

// Rooted tree of vertex instances. Along any root-to-node path no vertex
// repeats; depth_limit records the expansion bound k it was built with.
struct ProjectionTree {
    ProjectionNode root;
    std::size_t depth_limit = 0;

    std::size_t node_count() const;
    std::size_t depth() const;
};

struct BuildStats {
    std::uint64_t vertices_placed = 0;       // distinct vertices on levels >= 1
    std::uint64_t adjacency_cells_read = 0;  // neighbor-list elements inspected
    std::uint64_t levels_built = 0;          // max finite level reached

    friend bool operator==(const BuildStats&, const BuildStats&) = default;
};

// Per-source shortest-path structure: for every reachable vertex v, the
// full ascending set of predecessors lying on shortest source->v paths,
// plus the level (hop distance) of every vertex. Immutable by convention
// once built; safe to share across threads.
struct RefinedProjection {
    VertexId source = 0;
    std::vector<std::uint32_t> level_of;        // [0] unused; kUnreachable if none
    std::vector<std::vector<VertexId>> pred_of; // [0] unused; ascending
    std::vector<std::vector<VertexId>> frontiers;  // frontiers[k] = level-k set
    BuildStats stats;

    std::size_t order() const noexcept { return level_of.empty() ? 0 : level_of.size() - 1; }

    std::uint32_t level(VertexId v) const;
    std::span<const VertexId> pred(VertexId v) const;
    bool reachable(VertexId v) const { return level(v) != kUnreachable; }
    std::vector<VertexId> unreachable_vertices() const;

private:
    void require_valid(VertexId v) const;
};

// Full projection P(u): the tree of all simple paths from u of length at
// most max_depth. Children of a node holding x are N(x) minus the vertices
// on the root-to-x path, ascending; a node whose exclusions exhaust N(x)
// is a leaf. Throws NodeCapError when the tree would exceed node_cap.
ProjectionTree build_full(const MixedGraph& g, VertexId u,
                          std::size_t max_depth,
                          std::size_t node_cap = kDefaultNodeCap);

// Prunes, top down, every vertex instance whose depth exceeds the minimum
// depth of that vertex anywhere in the tree, together with its subtree.
// On a full projection the surviving root-to-node paths are exactly the
// shortest paths of the input's path set.
ProjectionTree refine_tree(const ProjectionTree& t);

// Builds the refined projection directly, level by level: level 1 is
// N(u); at level k each frontier vertex x contributes N(x) minus the
// blocked set, and every same-level parent of a vertex is recorded, since
// blocking grows only after the whole level is processed. Stops when all
// vertices are blocked or the frontier empties (unreached vertices keep
// empty predecessor sets and an unreachable level).
RefinedProjection build_refined(const MixedGraph& g, VertexId u);

}  // namespace rproj
