// oracle.hpp - Brute-force reference implementations used only for
// verification. bfs_distances and brute_force_shortest_paths touch the
// graph through out_neighbors alone and share no code with the projection
// builders, so their agreement is evidence rather than tautology.
#pragma once

#include "rproj/graph.hpp"
#include "rproj/paths.hpp"
#include "rproj/projection.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rproj {

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(std::size_t budget)
        : std::runtime_error("expansion budget of " + std::to_string(budget) +
                             " exceeded") {}
};

inline constexpr std::size_t kDefaultExpansionBudget = 50'000'000;

struct DistanceMismatch {
    VertexId source = 0;
    VertexId vertex = 0;
    std::uint32_t expected = 0;  // kUnreachable when the oracle says so
    std::uint32_t actual = 0;

    friend bool operator==(const DistanceMismatch&,
                           const DistanceMismatch&) = default;
};

struct PredMismatch {
    VertexId source = 0;
    VertexId vertex = 0;
    std::vector<VertexId> expected;
    std::vector<VertexId> actual;

    friend bool operator==(const PredMismatch&, const PredMismatch&) = default;
};

struct PathSetMismatch {
    VertexId source = 0;
    VertexId vertex = 0;
    std::vector<Path> expected;
    std::vector<Path> actual;

    friend bool operator==(const PathSetMismatch&,
                           const PathSetMismatch&) = default;
};

struct OracleReport {
    std::vector<DistanceMismatch> distance_mismatches;
    std::vector<PredMismatch> pred_mismatches;
    std::vector<PathSetMismatch> path_set_mismatches;

    bool empty() const noexcept {
        return distance_mismatches.empty() && pred_mismatches.empty() &&
               path_set_mismatches.empty();
    }
};

// Textbook queue BFS over out-neighborhoods.
DistanceTable bfs_distances(const MixedGraph& g, VertexId u);

// Exhaustive DFS over all simple u->v paths, keeping the minimum length,
// in lexicographic order. Intended for small graphs; throws BudgetError
// once `expansion_budget` recursion steps have been spent. Branches that
// already exceed the best known length are cut, which cannot change the
// output.
PathSet brute_force_shortest_paths(
    const MixedGraph& g, VertexId u, VertexId v,
    std::size_t expansion_budget = kDefaultExpansionBudget);

struct CheckOptions {
    bool check_paths = true;  // disable for graphs too large to brute-force
    std::size_t path_budget = kDefaultExpansionBudget;
};

// Drives the oracles against a projection: distances against BFS,
// predecessor sets against the full { q : level(q) = level(v) - 1,
// v in N(q) } rule, and (optionally) path sets against brute force for
// every target. An empty report means the projection verified.
OracleReport check_projection(const MixedGraph& g, const RefinedProjection& p,
                              const CheckOptions& options = {});

}  // namespace rproj
