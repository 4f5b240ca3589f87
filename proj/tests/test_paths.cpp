// test_paths.cpp - Distance lookups, path enumeration, counting,
// extraction, sssp and apsp.
#include "rproj/paths.hpp"

#include "rproj/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <sstream>

using namespace rproj;
using rproj::test::demo_graph;

namespace {

RefinedProjection demo_p4() { return build_refined(demo_graph(), 4); }

// layered doubling graph: s -> {x_1,y_1} -> ... -> {x_k,y_k}, every layer
// vertex feeding both successors, so sigma doubles per layer
MixedGraph doubling_graph(std::size_t layers) {
    std::ostringstream text;
    text << "n " << 1 + 2 * layers << "\n";
    auto x = [](std::size_t i) { return 2 * i; };
    auto y = [](std::size_t i) { return 2 * i + 1; };
    text << "a 1 " << x(1) << "\na 1 " << y(1) << "\n";
    for (std::size_t i = 1; i < layers; ++i) {
        text << "a " << x(i) << " " << x(i + 1) << "\n";
        text << "a " << x(i) << " " << y(i + 1) << "\n";
        text << "a " << y(i) << " " << x(i + 1) << "\n";
        text << "a " << y(i) << " " << y(i + 1) << "\n";
    }
    return parse_graph_text(text.str());
}

}  // namespace

TEST_SUITE_BEGIN("paths");

TEST_CASE("distance lookups") {
    RefinedProjection p = demo_p4();
    CHECK(distance(p, 5) == 4);
    CHECK(distance(p, 4) == 0);
    CHECK_THROWS_AS(distance(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(distance(p, 9), std::invalid_argument);

    MixedGraph arc_path = parse_graph_text("n 3\na 1 2\na 2 3");
    CHECK(distance(build_refined(arc_path, 3), 1) == kUnreachable);
}

TEST_CASE("eccentricity") {
    CHECK(eccentricity(demo_p4()) == 4);
    CHECK(eccentricity(build_refined(demo_graph(), 1)) == 3);
    MixedGraph k3 = parse_graph_text("n 3\ne 1 2\ne 1 3\ne 2 3");
    for (VertexId u = 1; u <= 3; ++u)
        CHECK(eccentricity(build_refined(k3, u)) == 1);
    CHECK(eccentricity(build_refined(parse_graph_text("n 1"), 1)) == 0);
    CHECK(eccentricity(demo_p4()) == demo_p4().stats.levels_built);
}

TEST_CASE("enumerate the two demo paths") {
    PathSet set = enumerate_shortest_paths(demo_p4(), 5);
    CHECK(set.target == 5);
    CHECK_FALSE(set.truncated);
    CHECK(set.paths == std::vector<Path>{{4, 1, 2, 8, 5}, {4, 3, 2, 8, 5}});
}

TEST_CASE("enumerate trivial targets") {
    RefinedProjection p = demo_p4();
    CHECK(enumerate_shortest_paths(p, 1).paths == std::vector<Path>{{4, 1}});
    CHECK(enumerate_shortest_paths(p, 4).paths == std::vector<Path>{{4}});
}

TEST_CASE("enumerate unreachable target") {
    MixedGraph g = parse_graph_text("n 3\na 1 2\na 2 3");
    PathSet set = enumerate_shortest_paths(build_refined(g, 3), 1);
    CHECK(set.paths.empty());
    CHECK_FALSE(set.truncated);
}

TEST_CASE("enumerate with limit") {
    RefinedProjection p = demo_p4();
    PathSet one = enumerate_shortest_paths(p, 5, 1);
    CHECK(one.paths == std::vector<Path>{{4, 1, 2, 8, 5}});
    CHECK(one.truncated);
    PathSet two = enumerate_shortest_paths(p, 5, 2);
    CHECK(two.paths.size() == 2);
    CHECK_FALSE(two.truncated);
    PathSet none = enumerate_shortest_paths(p, 5, 0);
    CHECK(none.paths.empty());
    CHECK(none.truncated);
}

TEST_CASE("enumeration is ordered by the forward sequence") {
    // two shortest 1->6 paths whose backward predecessor order differs
    // from the forward lexicographic order: (1,2,5,6) and (1,3,4,6)
    MixedGraph g = parse_graph_text(
        "n 6\ne 1 2\ne 1 3\ne 2 5\ne 3 4\ne 4 6\ne 5 6");
    PathSet set = enumerate_shortest_paths(build_refined(g, 1), 6);
    CHECK(set.paths == std::vector<Path>{{1, 2, 5, 6}, {1, 3, 4, 6}});
    // with a limit of one, the lexicographically first path must win
    PathSet first = enumerate_shortest_paths(build_refined(g, 1), 6, 1);
    CHECK(first.paths == std::vector<Path>{{1, 2, 5, 6}});
}

TEST_CASE("count matches the demo trace") {
    RefinedProjection p = demo_p4();
    CHECK(count_shortest_paths(p, 5) == PathCount{2, false});
    CHECK(count_shortest_paths(p, 7) == PathCount{2, false});
    CHECK(count_shortest_paths(p, 4) == PathCount{1, false});
}

TEST_CASE("count of unreachable target is zero") {
    MixedGraph g = parse_graph_text("n 3\na 1 2\na 2 3");
    CHECK(count_shortest_paths(build_refined(g, 3), 1) == PathCount{0, false});
}

TEST_CASE("count equals enumeration cardinality on the corpus") {
    std::size_t checked = 0;
    for (const auto& [g, label] : rproj::test::small_corpus()) {
        if (++checked > 60) break;
        for (VertexId u = 1; u <= g.order(); ++u) {
            RefinedProjection p = build_refined(g, u);
            for (VertexId v = 1; v <= g.order(); ++v) {
                CAPTURE(label);
                PathCount count = count_shortest_paths(p, v);
                REQUIRE_FALSE(count.overflow);
                CHECK(count.value == enumerate_shortest_paths(p, v).paths.size());
            }
        }
    }
}

TEST_CASE("count saturates with an overflow flag") {
    MixedGraph g = doubling_graph(65);
    RefinedProjection p = build_refined(g, 1);
    // sigma(x_k) = 2^(k-1): still exact at layer 64, overflowed at 65
    CHECK(count_shortest_paths(p, 2 * 64) ==
          PathCount{std::uint64_t{1} << 63, false});
    CHECK(count_shortest_paths(p, 2 * 65).overflow);
}

TEST_CASE("extraction touches distance+1 vertices") {
    RefinedProjection p = demo_p4();
    for (VertexId v = 1; v <= 8; ++v) {
        auto ex = extract_shortest_path(p, v);
        REQUIRE(ex.has_value());
        CHECK(ex->vertices_touched == distance(p, v) + 1);
        CHECK(ex->path.size() == ex->vertices_touched);
        CHECK(ex->path.front() == 4);
        CHECK(ex->path.back() == v);
    }
    MixedGraph g = parse_graph_text("n 3\na 1 2\na 2 3");
    CHECK_FALSE(extract_shortest_path(build_refined(g, 3), 1).has_value());
}

TEST_CASE("sssp tables") {
    SsspResult r4 = sssp(demo_graph(), 4);
    CHECK(r4.table.dist == std::vector<std::uint32_t>{kUnreachable, 1, 2, 1, 0,
                                                      4, 4, 3, 3});
    SsspResult r1 = sssp(demo_graph(), 1);
    CHECK(r1.table.dist == std::vector<std::uint32_t>{kUnreachable, 0, 1, 2, 1,
                                                      3, 3, 2, 2});
    SsspResult single = sssp(parse_graph_text("n 1"), 1);
    CHECK(single.table.dist == std::vector<std::uint32_t>{kUnreachable, 0});
}

TEST_CASE("apsp matches sssp rows") {
    ApspResult result = apsp(demo_graph());
    REQUIRE(result.rows.size() == 8);
    CHECK(result.rows[3] == sssp(demo_graph(), 4).table);

    ApspResult arc_path = apsp(parse_graph_text("n 3\na 1 2\na 2 3"));
    CHECK(arc_path.rows[0].dist ==
          std::vector<std::uint32_t>{kUnreachable, 0, 1, 2});
    CHECK(arc_path.rows[1].dist ==
          std::vector<std::uint32_t>{kUnreachable, kUnreachable, 0, 1});
    CHECK(arc_path.rows[2].dist ==
          std::vector<std::uint32_t>{kUnreachable, kUnreachable, kUnreachable, 0});
}

TEST_CASE("apsp equals repeated oracle BFS") {
    MixedGraph g = random_mixed_graph(10, 0.4, 0.5, 7);
    ApspResult result = apsp(g);
    for (VertexId u = 1; u <= 10; ++u)
        CHECK(result.rows[u - 1] == bfs_distances(g, u));
}

TEST_CASE("apsp is independent of parallelism") {
    MixedGraph g = random_mixed_graph(30, 0.2, 0.5, 99);
    ApspResult serial = apsp(g, 1);
    ApspResult parallel = apsp(g, 4);
    CHECK(serial.rows == parallel.rows);
}

TEST_CASE("apsp can keep projections") {
    ApspResult result = apsp(demo_graph(), 2, true);
    REQUIRE(result.projections.size() == 8);
    CHECK(result.projections[3].level(5) == 4);
}

TEST_SUITE_END();
