#include "rproj/oracle.hpp"

#include <algorithm>
#include <deque>

namespace rproj {

DistanceTable bfs_distances(const MixedGraph& g, VertexId u) {
    g.require_valid(u);
    DistanceTable table;
    table.source = u;
    table.dist.assign(g.order() + 1, kUnreachable);
    table.dist[u] = 0;
    std::deque<VertexId> queue{u};
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : g.out_neighbors(x)) {
            if (table.dist[y] != kUnreachable) continue;
            table.dist[y] = table.dist[x] + 1;
            queue.push_back(y);
        }
    }
    return table;
}

namespace {

struct BruteForce {
    const MixedGraph& g;
    VertexId target;
    std::size_t budget;
    std::size_t expansions = 0;
    std::vector<char> on_path;
    Path current;
    std::vector<Path> found;
    std::size_t best = SIZE_MAX;

    void walk(VertexId x) {
        if (++expansions > budget) throw BudgetError(budget);
        if (x == target) {
            std::size_t length = current.size() - 1;
            if (length < best) {
                best = length;
                found.clear();
            }
            if (length == best) found.push_back(current);
            return;  // a simple path cannot revisit the target
        }
        if (current.size() - 1 >= best) return;  // cannot beat or tie anymore
        for (VertexId y : g.out_neighbors(x)) {
            if (on_path[y]) continue;
            on_path[y] = 1;
            current.push_back(y);
            walk(y);
            current.pop_back();
            on_path[y] = 0;
        }
    }
};

}  // namespace

PathSet brute_force_shortest_paths(const MixedGraph& g, VertexId u, VertexId v,
                                   std::size_t expansion_budget) {
    g.require_valid(u);
    g.require_valid(v);
    BruteForce bf{g, v, expansion_budget, 0,
                  std::vector<char>(g.order() + 1, 0), {}, {}, SIZE_MAX};
    bf.on_path[u] = 1;
    bf.current.push_back(u);
    bf.walk(u);
    // DFS over ascending neighbors emits all simple paths in lexicographic
    // order; dropping the non-minimal ones preserves that order.
    return {v, std::move(bf.found), false};
}

OracleReport check_projection(const MixedGraph& g, const RefinedProjection& p,
                              const CheckOptions& options) {
    OracleReport report;
    const VertexId source = p.source;
    DistanceTable bfs = bfs_distances(g, source);

    for (VertexId v = 1; v <= g.order(); ++v) {
        if (bfs.dist[v] != p.level_of[v])
            report.distance_mismatches.push_back(
                {source, v, bfs.dist[v], p.level_of[v]});
    }

    for (VertexId v = 1; v <= g.order(); ++v) {
        std::vector<VertexId> expected;
        if (v != source && bfs.dist[v] != kUnreachable) {
            for (VertexId q = 1; q <= g.order(); ++q) {
                if (q == v || bfs.dist[q] == kUnreachable) continue;
                if (bfs.dist[q] + 1 == bfs.dist[v] && g.has_out(q, v))
                    expected.push_back(q);
            }
        }
        std::span<const VertexId> actual = p.pred_of[v];
        if (!std::equal(expected.begin(), expected.end(), actual.begin(),
                        actual.end()))
            report.pred_mismatches.push_back(
                {source, v, std::move(expected),
                 std::vector<VertexId>(actual.begin(), actual.end())});
    }

    if (options.check_paths) {
        for (VertexId v = 1; v <= g.order(); ++v) {
            PathSet expected =
                brute_force_shortest_paths(g, source, v, options.path_budget);
            PathSet actual = enumerate_shortest_paths(p, v);
            if (expected.paths != actual.paths)
                report.path_set_mismatches.push_back({source, v,
                                                      std::move(expected.paths),
                                                      std::move(actual.paths)});
        }
    }
    return report;
}

}  // namespace rproj
