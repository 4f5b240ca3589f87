#include "rproj/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace rproj {

namespace {

Json level_json(std::uint32_t level) {
    if (level == kUnreachable) return nullptr;
    return level;
}

std::string level_text(std::uint32_t level) {
    if (level == kUnreachable) return "inf";
    return std::to_string(level);
}

void join_ids(std::ostream& out, std::span<const VertexId> ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out << ' ';
        out << ids[i];
    }
}

}  // namespace

Json stats_json(const BuildStats& stats) {
    Json j;
    j["vertices_placed"] = stats.vertices_placed;
    j["adjacency_cells_read"] = stats.adjacency_cells_read;
    j["levels_built"] = stats.levels_built;
    return j;
}

Json projection_json(const RefinedProjection& p) {
    Json j;
    j["source"] = p.source;
    j["levels"] = p.frontiers;
    Json pred = Json::object();
    for (VertexId v = 1; v <= p.order(); ++v)
        if (v != p.source && !p.pred_of[v].empty())
            pred[std::to_string(v)] = p.pred_of[v];
    j["pred"] = std::move(pred);
    j["unreachable"] = p.unreachable_vertices();
    j["stats"] = stats_json(p.stats);
    return j;
}

Json path_set_json(const RefinedProjection& p, const PathSet& set) {
    Json j;
    j["source"] = p.source;
    j["target"] = set.target;
    j["distance"] = level_json(p.level_of[set.target]);
    j["truncated"] = set.truncated;
    j["paths"] = set.paths;
    return j;
}

Json distance_table_json(const DistanceTable& table) {
    Json j;
    j["source"] = table.source;
    Json dist = Json::array();
    for (VertexId v = 1; v <= table.order(); ++v)
        dist.push_back(level_json(table.dist[v]));
    j["dist"] = std::move(dist);
    return j;
}

Json apsp_json(const ApspResult& result) {
    Json j;
    j["n"] = result.rows.size();
    Json rows = Json::array();
    for (const DistanceTable& table : result.rows) {
        Json row = Json::array();
        for (VertexId v = 1; v <= table.order(); ++v)
            row.push_back(level_json(table.dist[v]));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json report_json(const OracleReport& report) {
    Json j;
    j["ok"] = report.empty();
    Json dist = Json::array();
    for (const auto& m : report.distance_mismatches)
        dist.push_back({{"source", m.source},
                        {"vertex", m.vertex},
                        {"expected", level_json(m.expected)},
                        {"actual", level_json(m.actual)}});
    j["distance_mismatches"] = std::move(dist);
    Json pred = Json::array();
    for (const auto& m : report.pred_mismatches)
        pred.push_back({{"source", m.source},
                        {"vertex", m.vertex},
                        {"expected", m.expected},
                        {"actual", m.actual}});
    j["pred_mismatches"] = std::move(pred);
    Json paths = Json::array();
    for (const auto& m : report.path_set_mismatches)
        paths.push_back({{"source", m.source},
                         {"vertex", m.vertex},
                         {"expected", m.expected},
                         {"actual", m.actual}});
    j["path_set_mismatches"] = std::move(paths);
    return j;
}

std::string projection_text(const RefinedProjection& p) {
    std::ostringstream out;
    out << "source: " << p.source << "\n";
    out << "eccentricity: " << p.stats.levels_built << "\n";
    out << "levels:\n";
    for (std::size_t k = 0; k < p.frontiers.size(); ++k) {
        out << "  " << k << ": ";
        join_ids(out, p.frontiers[k]);
        out << "\n";
    }
    out << "pred:\n";
    for (VertexId v = 1; v <= p.order(); ++v) {
        if (v == p.source || p.pred_of[v].empty()) continue;
        out << "  " << v << ": ";
        join_ids(out, p.pred_of[v]);
        out << "\n";
    }
    auto unreachable = p.unreachable_vertices();
    out << "unreachable:";
    if (unreachable.empty()) {
        out << " none";
    } else {
        out << " ";
        join_ids(out, unreachable);
    }
    out << "\n";
    out << "stats: vertices_placed=" << p.stats.vertices_placed
        << " adjacency_cells_read=" << p.stats.adjacency_cells_read
        << " levels_built=" << p.stats.levels_built << "\n";
    return out.str();
}

std::string path_set_text(const RefinedProjection& p, const PathSet& set) {
    std::ostringstream out;
    out << "distance: " << level_text(p.level_of[set.target]) << "\n";
    out << "paths (" << set.paths.size() << "):\n";
    for (const Path& path : set.paths) {
        out << "  ";
        join_ids(out, path);
        out << "\n";
    }
    if (set.truncated) out << "truncated: more paths exist\n";
    return out.str();
}

namespace {

std::string aligned_table(const std::vector<DistanceTable>& rows,
                          bool with_source_column) {
    std::size_t n = rows.empty() ? 0 : rows.front().order();
    std::size_t width = 1;
    for (const auto& table : rows)
        for (VertexId v = 1; v <= table.order(); ++v)
            width = std::max(width, level_text(table.dist[v]).size());
    width = std::max(width, std::to_string(n).size());

    std::ostringstream out;
    if (with_source_column) {
        out << std::setw(static_cast<int>(width)) << " ";
        for (VertexId v = 1; v <= n; ++v)
            out << ' ' << std::setw(static_cast<int>(width)) << v;
        out << "\n";
    }
    for (const auto& table : rows) {
        if (with_source_column)
            out << std::setw(static_cast<int>(width)) << table.source;
        for (VertexId v = 1; v <= table.order(); ++v) {
            if (with_source_column || v > 1) out << ' ';
            out << std::setw(static_cast<int>(width)) << level_text(table.dist[v]);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace

std::string distance_table_text(const DistanceTable& table) {
    std::size_t width = std::to_string(table.order()).size();
    width = std::max(width, std::size_t{6});
    std::ostringstream out;
    out << "vertex distance\n";
    for (VertexId v = 1; v <= table.order(); ++v)
        out << std::setw(static_cast<int>(width)) << v << " "
            << level_text(table.dist[v]) << "\n";
    return out.str();
}

std::string apsp_text(const ApspResult& result) {
    return aligned_table(result.rows, true);
}

std::string report_text(const OracleReport& report) {
    if (report.empty()) return "ok\n";
    std::ostringstream out;
    for (const auto& m : report.distance_mismatches)
        out << "distance mismatch: source=" << m.source << " vertex=" << m.vertex
            << " expected=" << level_text(m.expected)
            << " actual=" << level_text(m.actual) << "\n";
    auto render_ids = [&](const std::vector<VertexId>& ids) {
        std::ostringstream s;
        s << "{";
        join_ids(s, ids);
        s << "}";
        return s.str();
    };
    for (const auto& m : report.pred_mismatches)
        out << "pred mismatch: source=" << m.source << " vertex=" << m.vertex
            << " expected=" << render_ids(m.expected)
            << " actual=" << render_ids(m.actual) << "\n";
    for (const auto& m : report.path_set_mismatches)
        out << "path set mismatch: source=" << m.source << " vertex=" << m.vertex
            << " expected " << m.expected.size() << " paths, got "
            << m.actual.size() << "\n";
    return out.str();
}

}  // namespace rproj
