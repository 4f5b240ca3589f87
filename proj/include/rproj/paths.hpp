// paths.hpp - Distance, enumeration and counting queries over a refined
// projection, plus the single-source and all-pairs drivers.
#pragma once

#include "rproj/projection.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rproj {

// Vertex sequence from source to target; consecutive entries are adjacent
// in traversal direction and no vertex repeats.
using Path = std::vector<VertexId>;

// All shortest paths to one target, lexicographically ordered. truncated
// is set only when a limit cut the enumeration short of the full set.
struct PathSet {
    VertexId target = 0;
    std::vector<Path> paths;
    bool truncated = false;

    friend bool operator==(const PathSet&, const PathSet&) = default;
};

struct DistanceTable {
    VertexId source = 0;
    std::vector<std::uint32_t> dist;  // [0] unused; kUnreachable sentinel

    std::size_t order() const noexcept { return dist.empty() ? 0 : dist.size() - 1; }
    std::uint32_t operator[](VertexId v) const { return dist.at(v); }

    friend bool operator==(const DistanceTable&, const DistanceTable&) = default;
};

// Exact shortest-path count, or overflow = true when the tally does not
// fit 64 bits (value saturates; treat it as unusable).
struct PathCount {
    std::uint64_t value = 0;
    bool overflow = false;

    friend bool operator==(const PathCount&, const PathCount&) = default;
};

// One path pulled backward through predecessor sets, with the number of
// vertices the extraction touched (= hop distance + 1).
struct Extraction {
    Path path;
    std::size_t vertices_touched = 0;
};

struct SsspResult {
    DistanceTable table;
    RefinedProjection projection;
};

struct ApspResult {
    std::vector<DistanceTable> rows;             // ordered by source id
    std::vector<RefinedProjection> projections;  // empty unless requested
};

// level(v): O(1) lookup.
std::uint32_t distance(const RefinedProjection& p, VertexId v);

// Maximum finite level; 0 for an isolated source.
std::uint32_t eccentricity(const RefinedProjection& p);

// All shortest source->v paths in lexicographic order. Enumeration stops
// after `limit` paths, flagging truncated when more exist; an unreachable
// target yields an empty, untruncated set.
PathSet enumerate_shortest_paths(const RefinedProjection& p, VertexId v,
                                 std::optional<std::uint64_t> limit = {});

// sigma(source) = 1, sigma(v) = sum of sigma over pred(v).
PathCount count_shortest_paths(const RefinedProjection& p, VertexId v);

// Walks pred sets backward from v, taking the smallest predecessor at
// each hop. nullopt when v is unreachable.
std::optional<Extraction> extract_shortest_path(const RefinedProjection& p,
                                                VertexId v);

SsspResult sssp(const MixedGraph& g, VertexId u);

// One refined projection per source; rows are keyed by source id, so the
// result is identical at any parallelism degree.
ApspResult apsp(const MixedGraph& g, unsigned parallelism = 1,
                bool keep_projections = false);

}  // namespace rproj
