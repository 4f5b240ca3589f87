#include "rproj/paths.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace rproj {

namespace {

void require_valid(const RefinedProjection& p, VertexId v) {
    if (v < 1 || v > p.order())
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [1, " +
                                    std::to_string(p.order()) + "]");
}

}  // namespace

std::uint32_t distance(const RefinedProjection& p, VertexId v) {
    require_valid(p, v);
    return p.level_of[v];
}

std::uint32_t eccentricity(const RefinedProjection& p) {
    std::uint32_t ecc = 0;
    for (VertexId v = 1; v <= p.order(); ++v)
        if (p.level_of[v] != kUnreachable) ecc = std::max(ecc, p.level_of[v]);
    return ecc;
}

namespace {

// Forward DFS over the ancestor-marked sub-DAG emits the paths directly
// in lexicographic order, which keeps `limit` lazy: the first paths out
// are the lexicographically smallest.
struct Enumerator {
    const RefinedProjection& p;
    const std::vector<std::vector<VertexId>>& succ;
    VertexId target;
    std::optional<std::uint64_t> limit;
    PathSet out;
    Path current;

    bool walk(VertexId x) {
        current.push_back(x);
        if (x == target) {
            if (limit && out.paths.size() >= *limit) {
                out.truncated = true;
                current.pop_back();
                return false;
            }
            out.paths.push_back(current);
        } else {
            for (VertexId y : succ[x]) {
                if (!walk(y)) {
                    current.pop_back();
                    return false;
                }
            }
        }
        current.pop_back();
        return true;
    }
};

}  // namespace

PathSet enumerate_shortest_paths(const RefinedProjection& p, VertexId v,
                                 std::optional<std::uint64_t> limit) {
    require_valid(p, v);
    PathSet out;
    out.target = v;
    if (p.level_of[v] == kUnreachable) return out;

    // Mark the ancestors of v in the predecessor DAG; every marked vertex
    // other than v has at least one marked successor, so each maximal
    // forward walk from the source ends at v.
    std::vector<char> marked(p.order() + 1, 0);
    std::vector<VertexId> stack{v};
    marked[v] = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (VertexId q : p.pred_of[x]) {
            if (!marked[q]) {
                marked[q] = 1;
                stack.push_back(q);
            }
        }
    }

    std::vector<std::vector<VertexId>> succ(p.order() + 1);
    for (VertexId y = 1; y <= p.order(); ++y) {
        if (!marked[y]) continue;
        for (VertexId q : p.pred_of[y]) succ[q].push_back(y);
    }

    Enumerator e{p, succ, v, limit, {}, {}};
    e.out.target = v;
    e.walk(p.source);
    return e.out;
}

PathCount count_shortest_paths(const RefinedProjection& p, VertexId v) {
    require_valid(p, v);
    if (p.level_of[v] == kUnreachable) return {0, false};

    std::vector<std::uint64_t> sigma(p.order() + 1, 0);
    std::vector<char> over(p.order() + 1, 0);
    sigma[p.source] = 1;
    for (std::size_t k = 1; k < p.frontiers.size(); ++k) {
        for (VertexId y : p.frontiers[k]) {
            std::uint64_t total = 0;
            bool o = false;
            for (VertexId q : p.pred_of[y]) {
                std::uint64_t sum = total + sigma[q];
                if (sum < total) o = true;
                total = sum;
                o = o || over[q];
            }
            sigma[y] = total;
            over[y] = o;
        }
    }
    return {sigma[v], static_cast<bool>(over[v])};
}

std::optional<Extraction> extract_shortest_path(const RefinedProjection& p,
                                                VertexId v) {
    require_valid(p, v);
    if (p.level_of[v] == kUnreachable) return std::nullopt;
    Extraction ex;
    VertexId cur = v;
    ex.path.push_back(cur);
    ex.vertices_touched = 1;
    while (cur != p.source) {
        cur = p.pred_of[cur].front();
        ex.path.push_back(cur);
        ++ex.vertices_touched;
    }
    std::reverse(ex.path.begin(), ex.path.end());
    return ex;
}

namespace {

DistanceTable table_from(const RefinedProjection& p) {
    return {p.source, p.level_of};
}

}  // namespace

SsspResult sssp(const MixedGraph& g, VertexId u) {
    RefinedProjection p = build_refined(g, u);
    DistanceTable table = table_from(p);
    return {std::move(table), std::move(p)};
}

ApspResult apsp(const MixedGraph& g, unsigned parallelism,
                bool keep_projections) {
    const std::size_t n = g.order();
    ApspResult result;
    result.rows.resize(n);
    if (keep_projections) result.projections.resize(n);

    auto run_source = [&](std::size_t idx) {
        RefinedProjection p = build_refined(g, static_cast<VertexId>(idx + 1));
        result.rows[idx] = table_from(p);
        if (keep_projections) result.projections[idx] = std::move(p);
    };

    if (parallelism <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) run_source(i);
        return result;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
            run_source(i);
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<std::size_t>(parallelism, n);
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return result;
}

}  // namespace rproj
