// graph.hpp - Mixed-graph data model: undirected edges and directed arcs
// over 1-based vertex ids, stored as ascending out-neighbor lists.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rproj {

using VertexId = std::uint32_t;

// Relation of an ordered vertex pair (u, v).
// edge and none are symmetric; arc_forward(u,v) == arc_backward(v,u).
enum class EdgeKind { none, arc_forward, arc_backward, edge };

const char* to_string(EdgeKind k) noexcept;

// Raised by parse_graph_text; line() is the 1-based offending input line.
class GraphParseError : public std::runtime_error {
public:
    GraphParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Immutable n-vertex mixed graph. A pair (u,v) is an undirected edge when
// both out-lists contain the other endpoint, an arc u->v when only N(u)
// contains v. No self-loops, no duplicate pairs. Safe for unlimited
// concurrent readers once constructed.
class MixedGraph {
public:
    MixedGraph() = default;

    // Ids must lie in [1, n]; each unordered pair may appear at most once
    // across both lists. Throws std::invalid_argument on violations.
    MixedGraph(std::size_t n,
               std::span<const std::pair<VertexId, VertexId>> edges,
               std::span<const std::pair<VertexId, VertexId>> arcs);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t arc_count() const noexcept { return arc_count_; }

    bool valid(VertexId v) const noexcept { return v >= 1 && v <= n_; }
    void require_valid(VertexId v) const;

    // Ascending out-neighborhood N(v): every w with a_{v,w} = 1.
    std::span<const VertexId> out_neighbors(VertexId v) const;

    // a_{u,v} == 1, i.e. v is reachable from u in one step.
    bool has_out(VertexId u, VertexId v) const;

    EdgeKind classify_pair(VertexId u, VertexId v) const;

    // Inverse of parse_graph_text: header line, then `e` lines, then `a`
    // lines, both sorted ascending. Reparsing yields an equal graph.
    std::string to_text() const;

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::vector<VertexId>> adj_;  // index 0 unused
    std::size_t edge_count_ = 0;
    std::size_t arc_count_ = 0;
};

// Line-oriented text format: `#` starts a comment, first significant line
// is `n <count>`, then `e <u> <v>` (edge) or `a <u> <v>` (arc u->v) lines
// in any order, whitespace-separated, 1-based ids.
MixedGraph parse_graph_text(std::string_view text);

// Matrix rows are out-neighborhoods; entries must be 0 or 1, the diagonal
// is ignored. Throws std::invalid_argument for non-square input.
MixedGraph from_adjacency_matrix(const std::vector<std::vector<int>>& matrix);

// splitmix64: the fixed, self-contained generator behind all seeded
// randomness in this project, so fixtures reproduce on any platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 bits of precision.
    double next_double() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Seeded random mixed graph. Unordered pairs are visited in ascending
// (u, v) order, u < v; each is present with pair_prob, a present pair
// becomes an arc with orient_prob (fair direction draw), else an edge.
// Draws are consumed lazily from one SplitMix64 stream, so identical
// (n, probabilities, seed) reproduce the identical graph everywhere.
MixedGraph random_mixed_graph(std::size_t n, double pair_prob,
                              double orient_prob, std::uint64_t seed);

}  // namespace rproj
