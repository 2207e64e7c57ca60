#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "netopt/errors.hpp"
#include "netopt/graph.hpp"
#include "netopt/rng.hpp"
#include "oracles.hpp"

using namespace netopt;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("edge bookkeeping") {
    Graph g(4);
    CHECK(g.n() == 4);
    CHECK(g.m() == 0);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.m() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    CHECK(g.degree_sum() == 2 * g.m());
    g.remove_edge(1, 0);
    CHECK(g.m() == 1);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.degree(1) == 1);
}

TEST_CASE("neighbor lists stay sorted") {
    Graph g(5);
    g.add_edge(2, 4);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(2, 1);
    const auto& nb = g.neighbors(2);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(nb.size() == 4);
}

TEST_CASE("invalid mutations throw") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), graph_error);    // self loop
    CHECK_THROWS_AS(g.add_edge(0, 1), graph_error);    // duplicate
    CHECK_THROWS_AS(g.add_edge(0, 3), graph_error);    // out of range
    CHECK_THROWS_AS(g.remove_edge(0, 2), graph_error); // absent
    CHECK_THROWS_AS(g.remove_edge(-1, 0), graph_error);
    CHECK(g.m() == 1);  // failed calls must not mutate
}

TEST_CASE("degree sum equals twice edge count on random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = oracles::random_connected_graph(30, 70, seed);
        std::int64_t total = 0;
        for (int v = 0; v < g.n(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.m());
        CHECK(g.degree_sum() == total);
    }
}

TEST_CASE("average shortest path on known shapes") {
    CHECK(avg_shortest_path(path_graph(4)) == doctest::Approx(10.0 / 6.0).epsilon(1e-12));
    CHECK(avg_shortest_path(star_graph(4)) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(avg_shortest_path(complete_graph(4)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(avg_shortest_path(cycle_graph(6)) == doctest::Approx(1.8).epsilon(1e-12));
}

TEST_CASE("diameter on known shapes") {
    CHECK(diameter(path_graph(4)) == 3);
    CHECK(diameter(cycle_graph(6)) == 3);
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(diameter(star_graph(7)) == 2);
}

TEST_CASE("disconnected graphs are rejected") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK_FALSE(is_connected(g));
    CHECK_THROWS_AS(avg_shortest_path(g), disconnected_error);
    CHECK_THROWS_AS(diameter(g), disconnected_error);
    AsplEvaluator eval(4);
    CHECK(eval.total_ordered_distance(g) == -1);
}

TEST_CASE("distance matrix matches Floyd-Warshall on random graphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const int n = 2 + static_cast<int>(seed % 13);
        const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const std::int64_t m = std::min<std::int64_t>(n - 1 + static_cast<std::int64_t>(seed % 7), max_m);
        Graph g = oracles::random_connected_graph(n, m, seed * 977 + 5);
        DistanceMatrix dm = distance_matrix(g);
        auto fw = oracles::all_pairs_fw(g);
        REQUIRE(dm.n == n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(dm.at(i, j) == fw[static_cast<std::size_t>(i) * n + j]);
        CHECK(avg_shortest_path(g) == doctest::Approx(oracles::aspl_fw(g)).epsilon(1e-12));
        CHECK(diameter(g) == oracles::diameter_fw(g));
    }
}

TEST_CASE("sampled mean path with full sample reproduces the exact value bit for bit") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = oracles::random_connected_graph(40, 90, seed);
        const double exact = avg_shortest_path(g);
        const double approx = approx_avg_shortest_path(g, g.n(), seed * 31);
        CHECK(exact == approx);  // identical arithmetic, not just close
    }
}

TEST_CASE("sampled mean path is close at half sample and deterministic per seed") {
    Graph g = oracles::random_connected_graph(100, 300, 42);
    const double exact = avg_shortest_path(g);
    const double approx = approx_avg_shortest_path(g, 50, 7);
    CHECK(std::abs(approx - exact) < 0.3);
    CHECK(approx == approx_avg_shortest_path(g, 50, 7));
    // degenerate sample sizes are rejected
    CHECK_THROWS_AS(approx_avg_shortest_path(g, 0, 7), graph_error);
    CHECK_THROWS_AS(approx_avg_shortest_path(g, 101, 7), graph_error);
}

TEST_CASE("diameter dominates the mean path length") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = oracles::random_connected_graph(25, 50, seed + 100);
        CHECK(static_cast<double>(diameter(g)) >= avg_shortest_path(g));
    }
}

TEST_CASE("clustering coefficient on known shapes") {
    // triangle with one pendant: locals are 1/3 (hub), 1, 1, 0
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    CHECK(clustering_coefficient(g) == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
    CHECK(clustering_coefficient(complete_graph(4)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(clustering_coefficient(path_graph(5)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("clustering coefficient matches triangle counting oracle") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = oracles::random_connected_graph(20, 60, seed + 500);
        CHECK(clustering_coefficient(g) ==
              doctest::Approx(oracles::brute_clustering(g)).epsilon(1e-12));
    }
}

TEST_CASE("evaluator total matches the mean path accessor") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = oracles::random_connected_graph(30, 80, seed + 900);
        AsplEvaluator eval(g.n());
        const std::int64_t total = eval.total_ordered_distance(g);
        const double n = g.n();
        CHECK(static_cast<double>(total) / (n * (n - 1)) ==
              doctest::Approx(avg_shortest_path(g)).epsilon(1e-15));
    }
}

TEST_CASE("evaluator row totals cover chosen sources") {
    Graph g = oracles::random_connected_graph(20, 40, 3);
    AsplEvaluator eval(g.n());
    auto fw = oracles::all_pairs_fw(g);
    std::vector<int> sources = {0, 5, 19};
    std::int64_t want = 0;
    for (int s : sources)
        for (int j = 0; j < g.n(); ++j) want += fw[static_cast<std::size_t>(s) * g.n() + j];
    CHECK(eval.rows_total(g, sources) == want);
}

}  // TEST_SUITE
