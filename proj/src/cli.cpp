#include "rproj/cli.hpp"

#include "rproj/bracket.hpp"
#include "rproj/graph.hpp"
#include "rproj/oracle.hpp"
#include "rproj/paths.hpp"
#include "rproj/serialize.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace rproj {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Options {
    std::string graph_path;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::string format = "text";
    std::optional<std::uint64_t> limit;
    std::uint64_t seed = 0;
    unsigned parallel = 1;
    std::size_t node_cap = kDefaultNodeCap;
    bool pretty = false;

    std::vector<std::uint32_t> sources;
    std::size_t gen_n = 0;
    double pair_prob = 0.5;
    double orient_prob = 0.0;
    unsigned reps = 3;
    std::size_t budget = kDefaultExpansionBudget;
    std::size_t path_check_max = 12;
    bool inject_fault = false;
};

MixedGraph load_graph(const Options& opt) {
    return parse_graph_text(read_file(opt.graph_path));
}

std::vector<VertexId> pick_sources(const Options& opt, const MixedGraph& g) {
    if (!opt.sources.empty()) {
        for (VertexId s : opt.sources) g.require_valid(s);
        return {opt.sources.begin(), opt.sources.end()};
    }
    std::vector<VertexId> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<VertexId>(i + 1);
    return all;
}

// Test hook: damage a projection so the oracle check must flag it.
void inject_fault(RefinedProjection& p) {
    for (VertexId v = 1; v <= p.order(); ++v) {
        if (p.pred_of[v].size() >= 2) {
            p.pred_of[v].pop_back();
            return;
        }
    }
    for (VertexId v = static_cast<VertexId>(p.order()); v >= 1; --v) {
        if (v != p.source && !p.pred_of[v].empty()) {
            p.pred_of[v].clear();
            return;
        }
    }
}

int cmd_build(const Options& opt, std::ostream& out) {
    MixedGraph g = load_graph(opt);
    RefinedProjection p = build_refined(g, opt.source);
    if (opt.format == "json") {
        out << projection_json(p).dump(2) << "\n";
    } else if (opt.format == "bracket") {
        ProjectionTree t = projection_to_tree(p, opt.node_cap);
        out << (opt.pretty ? to_bracket_pretty(t) : to_bracket(t) + "\n");
    } else {
        out << projection_text(p);
    }
    return 0;
}

int cmd_path(const Options& opt, std::ostream& out) {
    MixedGraph g = load_graph(opt);
    RefinedProjection p = build_refined(g, opt.source);
    PathSet set = enumerate_shortest_paths(p, opt.target, opt.limit);
    if (opt.format == "json")
        out << path_set_json(p, set).dump(2) << "\n";
    else
        out << path_set_text(p, set);
    return 0;
}

int cmd_sssp(const Options& opt, std::ostream& out) {
    MixedGraph g = load_graph(opt);
    SsspResult result = sssp(g, opt.source);
    if (opt.format == "json")
        out << distance_table_json(result.table).dump(2) << "\n";
    else
        out << distance_table_text(result.table);
    return 0;
}

int cmd_apsp(const Options& opt, std::ostream& out) {
    MixedGraph g = load_graph(opt);
    ApspResult result = apsp(g, opt.parallel);
    if (opt.format == "json")
        out << apsp_json(result).dump(2) << "\n";
    else
        out << apsp_text(result);
    return 0;
}

int cmd_check(const Options& opt, std::ostream& out) {
    MixedGraph g = load_graph(opt);
    std::vector<VertexId> sources = pick_sources(opt, g);
    CheckOptions check_options;
    check_options.check_paths = g.order() <= opt.path_check_max;
    check_options.path_budget = opt.budget;

    std::vector<OracleReport> reports(sources.size());
    auto run_one = [&](std::size_t i) {
        RefinedProjection p = build_refined(g, sources[i]);
        if (opt.inject_fault) inject_fault(p);
        reports[i] = check_projection(g, p, check_options);
    };
    if (opt.parallel <= 1 || sources.size() <= 1) {
        for (std::size_t i = 0; i < sources.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < sources.size();
                 i = next.fetch_add(1))
                run_one(i);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(opt.parallel, sources.size()); ++t)
            pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::size_t mismatches = 0;
    for (const auto& report : reports) {
        mismatches += report.distance_mismatches.size() +
                      report.pred_mismatches.size() +
                      report.path_set_mismatches.size();
    }
    if (opt.format == "json") {
        Json j;
        j["sources_checked"] = sources.size();
        j["ok"] = mismatches == 0;
        Json items = Json::array();
        for (const auto& report : reports)
            if (!report.empty()) items.push_back(report_json(report));
        j["reports"] = std::move(items);
        out << j.dump(2) << "\n";
    } else {
        for (const auto& report : reports)
            if (!report.empty()) out << report_text(report);
        out << "checked " << sources.size() << " sources: "
            << (mismatches == 0 ? "ok"
                                : std::to_string(mismatches) + " mismatches")
            << "\n";
    }
    return mismatches == 0 ? 0 : 1;
}

struct BenchRow {
    std::string graph;
    std::size_t n = 0;
    VertexId source = 0;
    BuildStats stats;
    VertexId extract_target = 0;
    std::size_t extract_touched = 0;
    std::uint64_t build_ns = 0;
    std::uint64_t bfs_ns = 0;
};

int cmd_bench(const Options& opt, std::ostream& out, const std::string& label,
              const MixedGraph& g) {
    std::vector<VertexId> sources = pick_sources(opt, g);
    std::vector<BenchRow> rows;
    for (VertexId s : sources) {
        BenchRow row;
        row.graph = label;
        row.n = g.order();
        row.source = s;
        std::uint64_t best_build = UINT64_MAX;
        std::uint64_t best_bfs = UINT64_MAX;
        RefinedProjection p;
        for (unsigned rep = 0; rep < std::max(1u, opt.reps); ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            RefinedProjection candidate = build_refined(g, s);
            auto t1 = std::chrono::steady_clock::now();
            bfs_distances(g, s);
            auto t2 = std::chrono::steady_clock::now();
            best_build = std::min<std::uint64_t>(
                best_build,
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                    .count());
            best_bfs = std::min<std::uint64_t>(
                best_bfs,
                std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1)
                    .count());
            if (rep == 0) p = std::move(candidate);
        }
        row.stats = p.stats;
        row.build_ns = best_build;
        row.bfs_ns = best_bfs;
        // farthest reachable vertex, smallest id on ties
        for (VertexId v = 1; v <= g.order(); ++v) {
            if (v == s || p.level_of[v] == kUnreachable) continue;
            if (row.extract_target == 0 ||
                p.level_of[v] > p.level_of[row.extract_target])
                row.extract_target = v;
        }
        if (row.extract_target != 0) {
            auto ex = extract_shortest_path(p, row.extract_target);
            row.extract_touched = ex ? ex->vertices_touched : 0;
        }
        rows.push_back(std::move(row));
    }

    if (opt.format == "json") {
        Json j = Json::array();
        for (const auto& row : rows)
            j.push_back({{"graph", row.graph},
                         {"n", row.n},
                         {"source", row.source},
                         {"levels_built", row.stats.levels_built},
                         {"vertices_placed", row.stats.vertices_placed},
                         {"adjacency_cells_read", row.stats.adjacency_cells_read},
                         {"extract_target", row.extract_target},
                         {"extract_touched", row.extract_touched},
                         {"build_ns", row.build_ns},
                         {"bfs_ns", row.bfs_ns}});
        out << j.dump(2) << "\n";
    } else {
        out << "graph,n,source,levels_built,vertices_placed,"
               "adjacency_cells_read,extract_target,extract_touched,build_ns,"
               "bfs_ns\n";
        for (const auto& row : rows)
            out << row.graph << ',' << row.n << ',' << row.source << ','
                << row.stats.levels_built << ',' << row.stats.vertices_placed
                << ',' << row.stats.adjacency_cells_read << ','
                << row.extract_target << ',' << row.extract_touched << ','
                << row.build_ns << ',' << row.bfs_ns << "\n";
    }
    return 0;
}

int cmd_gen(const Options& opt, std::ostream& out) {
    MixedGraph g =
        random_mixed_graph(opt.gen_n, opt.pair_prob, opt.orient_prob, opt.seed);
    out << g.to_text();
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"shortest paths on unweighted mixed graphs via refined "
                 "projections"};
    app.require_subcommand(1);
    Options opt;

    auto add_graph = [&](CLI::App* cmd) {
        cmd->add_option("-g,--graph", opt.graph_path, "graph file")->required();
    };
    auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& allowed) {
        cmd->add_option("-f,--format", opt.format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };

    CLI::App* build = app.add_subcommand("build", "build a refined projection");
    add_graph(build);
    build->add_option("-s,--source", opt.source, "source vertex")->required();
    add_format(build, {"text", "json", "bracket"});
    build->add_flag("--pretty", opt.pretty, "indent bracket output");
    build->add_option("--node-cap", opt.node_cap,
                      "bracket expansion node cap");

    CLI::App* path = app.add_subcommand("path", "enumerate shortest paths");
    add_graph(path);
    path->add_option("-s,--source", opt.source, "source vertex")->required();
    path->add_option("-t,--target", opt.target, "target vertex")->required();
    path->add_option("--limit", opt.limit, "stop after this many paths");
    add_format(path, {"text", "json"});

    CLI::App* sssp_cmd = app.add_subcommand("sssp", "single-source distances");
    add_graph(sssp_cmd);
    sssp_cmd->add_option("-s,--source", opt.source, "source vertex")->required();
    add_format(sssp_cmd, {"text", "json"});

    CLI::App* apsp_cmd = app.add_subcommand("apsp", "all-pairs distances");
    add_graph(apsp_cmd);
    apsp_cmd->add_option("--parallel", opt.parallel, "worker thread count")
        ->capture_default_str();
    add_format(apsp_cmd, {"text", "json"});

    CLI::App* check = app.add_subcommand(
        "check", "verify projections against brute-force oracles");
    add_graph(check);
    check->add_option("-s,--source", opt.sources,
                      "sources to check (default: all)");
    check->add_option("--parallel", opt.parallel, "worker thread count")
        ->capture_default_str();
    check->add_option("--path-check-max", opt.path_check_max,
                      "skip path-set comparison above this order")
        ->capture_default_str();
    check->add_option("--budget", opt.budget, "oracle expansion budget")
        ->capture_default_str();
    check->add_flag("--inject-fault", opt.inject_fault)->group("");
    add_format(check, {"text", "json"});

    CLI::App* bench = app.add_subcommand("bench", "counter and timing report");
    bench->add_option("-g,--graph", opt.graph_path, "graph file");
    bench->add_option("-n,--order", opt.gen_n, "generate a graph of this order");
    bench->add_option("--pair-prob", opt.pair_prob, "pair probability")
        ->capture_default_str();
    bench->add_option("--orient-prob", opt.orient_prob,
                      "arc probability for present pairs")
        ->capture_default_str();
    bench->add_option("--seed", opt.seed, "generator seed")
        ->capture_default_str();
    bench->add_option("-s,--source", opt.sources,
                      "sources to measure (default: all)");
    bench->add_option("--reps", opt.reps, "timing repetitions")
        ->capture_default_str();
    add_format(bench, {"text", "json"});

    CLI::App* gen = app.add_subcommand("gen", "emit a seeded random graph");
    gen->add_option("-n,--order", opt.gen_n, "vertex count")->required();
    gen->add_option("--pair-prob", opt.pair_prob, "pair probability")
        ->capture_default_str();
    gen->add_option("--orient-prob", opt.orient_prob,
                    "arc probability for present pairs")
        ->capture_default_str();
    gen->add_option("--seed", opt.seed, "generator seed")
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(opt, out);
        if (path->parsed()) return cmd_path(opt, out);
        if (sssp_cmd->parsed()) return cmd_sssp(opt, out);
        if (apsp_cmd->parsed()) return cmd_apsp(opt, out);
        if (check->parsed()) return cmd_check(opt, out);
        if (bench->parsed()) {
            const bool from_file = !opt.graph_path.empty();
            const bool from_gen = opt.gen_n > 0;
            if (from_file == from_gen) {
                err << "error: bench needs exactly one of --graph or --order\n";
                return 2;
            }
            if (from_file)
                return cmd_bench(opt, out, opt.graph_path, load_graph(opt));
            std::ostringstream label;
            label << "gen:n=" << opt.gen_n << ";p=" << opt.pair_prob
                  << ";q=" << opt.orient_prob << ";seed=" << opt.seed;
            return cmd_bench(opt, out, label.str(),
                             random_mixed_graph(opt.gen_n, opt.pair_prob,
                                                opt.orient_prob, opt.seed));
        }
        if (gen->parsed()) return cmd_gen(opt, out);
        err << "error: no command\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rproj
