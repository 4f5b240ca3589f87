#include "rproj/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace rproj {

const char* to_string(EdgeKind k) noexcept {
    switch (k) {
        case EdgeKind::none: return "none";
        case EdgeKind::arc_forward: return "arc-forward";
        case EdgeKind::arc_backward: return "arc-backward";
        case EdgeKind::edge: return "edge";
    }
    return "none";
}

GraphParseError::GraphParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

MixedGraph::MixedGraph(std::size_t n,
                       std::span<const std::pair<VertexId, VertexId>> edges,
                       std::span<const std::pair<VertexId, VertexId>> arcs)
    : n_(n), adj_(n + 1) {
    std::set<std::pair<VertexId, VertexId>> seen;
    auto check_pair = [&](VertexId u, VertexId v) {
        if (!valid(u) || !valid(v))
            throw std::invalid_argument("vertex id out of range [1, " +
                                        std::to_string(n_) + "]");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " +
                                        std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate pair (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
    };
    for (auto [u, v] : edges) {
        check_pair(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto [u, v] : arcs) {
        check_pair(u, v);
        adj_[u].push_back(v);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    edge_count_ = edges.size();
    arc_count_ = arcs.size();
}

void MixedGraph::require_valid(VertexId v) const {
    if (!valid(v))
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [1, " + std::to_string(n_) +
                                    "]");
}

std::span<const VertexId> MixedGraph::out_neighbors(VertexId v) const {
    require_valid(v);
    return adj_[v];
}

bool MixedGraph::has_out(VertexId u, VertexId v) const {
    require_valid(u);
    require_valid(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

EdgeKind MixedGraph::classify_pair(VertexId u, VertexId v) const {
    require_valid(u);
    require_valid(v);
    if (u == v) throw std::invalid_argument("classify_pair requires u != v");
    const bool uv = std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    const bool vu = std::binary_search(adj_[v].begin(), adj_[v].end(), u);
    if (uv && vu) return EdgeKind::edge;
    if (uv) return EdgeKind::arc_forward;
    if (vu) return EdgeKind::arc_backward;
    return EdgeKind::none;
}

std::string MixedGraph::to_text() const {
    std::ostringstream out;
    out << "n " << n_ << "\n";
    for (VertexId u = 1; u <= n_; ++u)
        for (VertexId v : adj_[u])
            if (u < v && std::binary_search(adj_[v].begin(), adj_[v].end(), u))
                out << "e " << u << " " << v << "\n";
    for (VertexId u = 1; u <= n_; ++u)
        for (VertexId v : adj_[u])
            if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u))
                out << "a " << u << " " << v << "\n";
    return out.str();
}

namespace {

std::uint64_t parse_uint(std::string_view token, std::size_t line,
                         const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw GraphParseError(line, std::string("expected ") + what +
                                        ", got '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

}  // namespace

MixedGraph parse_graph_text(std::string_view text) {
    bool have_header = false;
    std::uint64_t n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    std::set<std::pair<VertexId, VertexId>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto fields = split_fields(line);
        if (fields.empty()) continue;

        if (!have_header) {
            if (fields[0] != "n")
                throw GraphParseError(line_no,
                                      "expected header 'n <count>' first");
            if (fields.size() != 2)
                throw GraphParseError(line_no, "header takes one count field");
            n = parse_uint(fields[1], line_no, "vertex count");
            have_header = true;
            continue;
        }
        if (fields[0] != "e" && fields[0] != "a")
            throw GraphParseError(line_no, "unknown directive '" +
                                               std::string(fields[0]) + "'");
        if (fields.size() != 3)
            throw GraphParseError(
                line_no, "'" + std::string(fields[0]) + "' takes two vertex ids");
        std::uint64_t u = parse_uint(fields[1], line_no, "vertex id");
        std::uint64_t v = parse_uint(fields[2], line_no, "vertex id");
        if (u < 1 || u > n || v < 1 || v > n)
            throw GraphParseError(line_no, "vertex id out of range [1, " +
                                               std::to_string(n) + "]");
        if (u == v)
            throw GraphParseError(line_no,
                                  "self-loop at vertex " + std::to_string(u));
        auto uu = static_cast<VertexId>(u);
        auto vv = static_cast<VertexId>(v);
        if (!seen.insert(std::minmax(uu, vv)).second)
            throw GraphParseError(line_no, "duplicate pair (" +
                                               std::to_string(u) + ", " +
                                               std::to_string(v) + ")");
        auto& dst = fields[0] == "e" ? edges : arcs;
        dst.emplace_back(uu, vv);
    }
    if (!have_header) throw GraphParseError(line_no, "missing 'n <count>' header");
    return MixedGraph(static_cast<std::size_t>(n), edges, arcs);
}

MixedGraph from_adjacency_matrix(const std::vector<std::vector<int>>& matrix) {
    const std::size_t n = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != n)
            throw std::invalid_argument("adjacency matrix must be square");
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;  // diagonal ignored
            if (matrix[i][j] != 0 && matrix[i][j] != 1)
                throw std::invalid_argument("matrix entries must be 0 or 1");
            if (matrix[i][j] != 1) continue;
            auto u = static_cast<VertexId>(i + 1);
            auto v = static_cast<VertexId>(j + 1);
            if (matrix[j][i] == 1) {
                if (i < j) edges.emplace_back(u, v);
            } else {
                arcs.emplace_back(u, v);
            }
        }
    }
    return MixedGraph(n, edges, arcs);
}

MixedGraph random_mixed_graph(std::size_t n, double pair_prob,
                              double orient_prob, std::uint64_t seed) {
    auto valid_prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (std::isnan(pair_prob) || std::isnan(orient_prob) ||
        !valid_prob(pair_prob) || !valid_prob(orient_prob))
        throw std::invalid_argument("probabilities must lie in [0, 1]");
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");

    SplitMix64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId u = 1; u <= n; ++u) {
        for (VertexId v = u + 1; v <= n; ++v) {
            if (rng.next_double() >= pair_prob) continue;
            if (rng.next_double() < orient_prob) {
                if (rng.next_double() < 0.5)
                    arcs.emplace_back(u, v);
                else
                    arcs.emplace_back(v, u);
            } else {
                edges.emplace_back(u, v);
            }
        }
    }
    return MixedGraph(n, edges, arcs);
}

}  // namespace rproj
