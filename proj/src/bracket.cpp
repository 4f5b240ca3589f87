#include "rproj/bracket.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace rproj {

BracketParseError::BracketParseError(std::size_t offset,
                                     const std::string& message)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

namespace {

std::vector<std::size_t> child_order(const ProjectionNode& node) {
    std::vector<std::size_t> order(node.children.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return node.children[a].vertex < node.children[b].vertex;
    });
    return order;
}

void emit(const ProjectionNode& node, std::string& out) {
    out += std::to_string(node.vertex);
    if (node.children.empty()) return;
    out += '(';
    auto order = child_order(node);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0) out += ',';
        emit(node.children[order[i]], out);
    }
    out += ')';
}

void emit_pretty(const ProjectionNode& node, std::string& out,
                 std::size_t depth) {
    out.append(2 * depth, ' ');
    out += std::to_string(node.vertex);
    if (node.children.empty()) return;
    out += '(';
    auto order = child_order(node);
    for (std::size_t i = 0; i < order.size(); ++i) {
        out += i > 0 ? ",\n" : "\n";
        emit_pretty(node.children[order[i]], out, depth + 1);
    }
    out += ')';
}

}  // namespace

std::string to_bracket(const ProjectionTree& t) {
    std::string out;
    emit(t.root, out);
    return out;
}

std::string to_bracket_pretty(const ProjectionTree& t) {
    std::string out;
    emit_pretty(t.root, out, 0);
    out += '\n';
    return out;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                text[pos] == '\r'))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    [[noreturn]] void fail(const std::string& message) {
        throw BracketParseError(pos, message);
    }

    VertexId parse_vertex() {
        skip_ws();
        if (pos >= text.size()) fail("expected vertex");
        if (text[pos] < '0' || text[pos] > '9') fail("expected vertex");
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos,
                                         text.data() + text.size(), value);
        if (ec != std::errc{} || value > std::numeric_limits<VertexId>::max())
            fail("vertex id too large");
        if (value == 0) fail("vertex must be positive");
        pos = static_cast<std::size_t>(ptr - text.data());
        return static_cast<VertexId>(value);
    }

    ProjectionNode parse_tree() {
        ProjectionNode node{parse_vertex(), {}};
        skip_ws();
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            node.children.push_back(parse_tree());
            skip_ws();
            while (pos < text.size() && text[pos] == ',') {
                ++pos;
                node.children.push_back(parse_tree());
                skip_ws();
            }
            if (pos >= text.size() || text[pos] != ')')
                fail("expected ')' or ','");
            ++pos;
        }
        return node;
    }
};

std::size_t node_depth(const ProjectionNode& node) {
    std::size_t deepest = 0;
    for (const auto& child : node.children)
        deepest = std::max(deepest, 1 + node_depth(child));
    return deepest;
}

}  // namespace

ProjectionTree parse_bracket(std::string_view text) {
    Parser parser{text};
    if (parser.at_end()) parser.fail("empty input");
    ProjectionNode root = parser.parse_tree();
    if (!parser.at_end()) parser.fail("trailing garbage");
    ProjectionTree tree{std::move(root), 0};
    tree.depth_limit = node_depth(tree.root);
    return tree;
}

namespace {

ProjectionNode expand_dag(const RefinedProjection& p,
                          const std::vector<std::vector<VertexId>>& succ,
                          VertexId x, std::size_t& nodes, std::size_t cap) {
    if (++nodes > cap) throw NodeCapError(cap);
    ProjectionNode node{x, {}};
    for (VertexId y : succ[x]) node.children.push_back(expand_dag(p, succ, y, nodes, cap));
    return node;
}

}  // namespace

ProjectionTree projection_to_tree(const RefinedProjection& p,
                                  std::size_t node_cap) {
    std::vector<std::vector<VertexId>> succ(p.order() + 1);
    for (VertexId v = 1; v <= p.order(); ++v)
        for (VertexId q : p.pred_of[v]) succ[q].push_back(v);
    std::size_t nodes = 0;
    ProjectionTree tree;
    tree.root = expand_dag(p, succ, p.source, nodes, node_cap);
    tree.depth_limit = p.frontiers.empty() ? 0 : p.frontiers.size() - 1;
    return tree;
}

}  // namespace rproj
