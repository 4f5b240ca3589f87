#include "rproj/projection.hpp"

#include <algorithm>
#include <unordered_map>

namespace rproj {

namespace {

std::size_t count_nodes(const ProjectionNode& node) {
    std::size_t total = 1;
    for (const auto& child : node.children) total += count_nodes(child);
    return total;
}

std::size_t node_depth(const ProjectionNode& node) {
    std::size_t deepest = 0;
    for (const auto& child : node.children)
        deepest = std::max(deepest, 1 + node_depth(child));
    return deepest;
}

}  // namespace

std::size_t ProjectionTree::node_count() const { return count_nodes(root); }

std::size_t ProjectionTree::depth() const { return node_depth(root); }

std::uint32_t RefinedProjection::level(VertexId v) const {
    require_valid(v);
    return level_of[v];
}

std::span<const VertexId> RefinedProjection::pred(VertexId v) const {
    require_valid(v);
    return pred_of[v];
}

std::vector<VertexId> RefinedProjection::unreachable_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 1; v <= order(); ++v)
        if (level_of[v] == kUnreachable) out.push_back(v);
    return out;
}

void RefinedProjection::require_valid(VertexId v) const {
    if (v < 1 || v > order())
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [1, " +
                                    std::to_string(order()) + "]");
}

namespace {

void expand_full(const MixedGraph& g, ProjectionNode& node,
                 std::vector<char>& on_path, std::size_t depth_left,
                 std::size_t& nodes, std::size_t cap) {
    if (depth_left == 0) return;
    for (VertexId w : g.out_neighbors(node.vertex)) {
        if (on_path[w]) continue;
        if (++nodes > cap) throw NodeCapError(cap);
        node.children.push_back({w, {}});
    }
    for (auto& child : node.children) {
        on_path[child.vertex] = 1;
        expand_full(g, child, on_path, depth_left - 1, nodes, cap);
        on_path[child.vertex] = 0;
    }
}

}  // namespace

ProjectionTree build_full(const MixedGraph& g, VertexId u,
                          std::size_t max_depth, std::size_t node_cap) {
    g.require_valid(u);
    ProjectionTree tree{{u, {}}, max_depth};
    std::vector<char> on_path(g.order() + 1, 0);
    on_path[u] = 1;
    std::size_t nodes = 1;
    if (nodes > node_cap) throw NodeCapError(node_cap);
    expand_full(g, tree.root, on_path, max_depth, nodes, node_cap);
    return tree;
}

namespace {

void record_min_depths(const ProjectionNode& node, std::size_t depth,
                       std::unordered_map<VertexId, std::size_t>& min_depth) {
    auto [it, inserted] = min_depth.emplace(node.vertex, depth);
    if (!inserted && depth < it->second) it->second = depth;
    for (const auto& child : node.children)
        record_min_depths(child, depth + 1, min_depth);
}

ProjectionNode prune_above_min(
    const ProjectionNode& node, std::size_t depth,
    const std::unordered_map<VertexId, std::size_t>& min_depth) {
    ProjectionNode out{node.vertex, {}};
    for (const auto& child : node.children)
        if (min_depth.at(child.vertex) == depth + 1)
            out.children.push_back(prune_above_min(child, depth + 1, min_depth));
    return out;
}

}  // namespace

ProjectionTree refine_tree(const ProjectionTree& t) {
    std::unordered_map<VertexId, std::size_t> min_depth;
    record_min_depths(t.root, 0, min_depth);
    return {prune_above_min(t.root, 0, min_depth), t.depth_limit};
}

RefinedProjection build_refined(const MixedGraph& g, VertexId u) {
    g.require_valid(u);
    const std::size_t n = g.order();

    RefinedProjection p;
    p.source = u;
    p.level_of.assign(n + 1, kUnreachable);
    p.pred_of.assign(n + 1, {});
    p.level_of[u] = 0;
    p.frontiers.push_back({u});

    std::vector<char> blocked(n + 1, 0);
    blocked[u] = 1;
    std::size_t blocked_count = 1;

    // Level 1 is the source's own row; block {u} union N(u) right away.
    std::vector<VertexId> frontier;
    for (VertexId w : g.out_neighbors(u)) {
        ++p.stats.adjacency_cells_read;
        blocked[w] = 1;
        ++blocked_count;
        p.level_of[w] = 1;
        p.pred_of[w].push_back(u);
        frontier.push_back(w);
    }
    if (!frontier.empty()) {
        p.stats.vertices_placed += frontier.size();
        p.stats.levels_built = 1;
        p.frontiers.push_back(frontier);
    }

    std::uint32_t k = 1;
    while (blocked_count < n && !frontier.empty()) {
        ++k;
        std::vector<VertexId> next;
        for (VertexId x : frontier) {
            for (VertexId y : g.out_neighbors(x)) {
                ++p.stats.adjacency_cells_read;
                if (blocked[y]) continue;
                if (p.level_of[y] != k) {
                    p.level_of[y] = k;
                    next.push_back(y);
                }
                // every same-level parent is kept: blocking happens below,
                // only once the whole level has been generated
                p.pred_of[y].push_back(x);
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        for (VertexId y : next) blocked[y] = 1;
        blocked_count += next.size();
        p.stats.vertices_placed += next.size();
        p.stats.levels_built = k;
        p.frontiers.push_back(next);
        frontier = std::move(next);
    }
    return p;
}

}  // namespace rproj
