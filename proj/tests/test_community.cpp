#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "netopt/community.hpp"
#include "netopt/errors.hpp"
#include "netopt/graph.hpp"
#include "netopt/objectives.hpp"
#include "netopt/optimizer.hpp"
#include "oracles.hpp"

using namespace netopt;

namespace {

// two triangles joined by one bridge edge
Graph two_triangles() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(2, 3);
    return g;
}

}  // namespace

TEST_SUITE("community") {

TEST_CASE("balanced assignment with deterministic shuffle") {
    auto labels = assign_communities(10, 3, 42);
    REQUIRE(labels.size() == 10);
    std::vector<int> sizes(3, 0);
    for (int l : labels) {
        REQUIRE(l >= 0);
        REQUIRE(l < 3);
        ++sizes[l];
    }
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{3, 3, 4});
    CHECK(labels == assign_communities(10, 3, 42));
    CHECK(labels != assign_communities(10, 3, 43));

    auto even = assign_communities(300, 2, 7);
    CHECK(std::count(even.begin(), even.end(), 0) == 150);
}

TEST_CASE("modularity of a two-clique split") {
    Graph g = two_triangles();
    std::vector<int> labels = {0, 0, 0, 1, 1, 1};
    CHECK(modularity(g, labels) == doctest::Approx(5.0 / 14.0).epsilon(1e-12));
}

TEST_CASE("modularity of the trivial partition is zero") {
    Graph g = two_triangles();
    std::vector<int> labels(6, 0);
    CHECK(modularity(g, labels) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("attenuated objective on a labelled triangle") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    CommunityParams params;
    params.model = {3, 0.0, 1.0, 1, 1.0, 3};
    params.k = 2;
    params.s = 0.5;
    params.assignment = {0, 0, 1};
    // ordered pairs: (0,1),(1,0) at full weight contribute 4; the four pairs
    // crossing into node 2 carry weight 1/2 and contribute 4 more
    CHECK(f2_community(g, params) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("attenuation off recovers the base objective exactly") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = oracles::random_connected_graph(25, 60, seed + 20);
        CommunityParams params;
        params.model = {25, 0.5, 1.2, 1, 2.0, 60};
        params.k = 3;
        params.s = 1.0;
        params.assignment = assign_communities(25, 3, seed);
        CHECK(f2_community(g, params) == doctest::Approx(f2(g, 0.5, 1.2)).epsilon(1e-12));
    }
}

TEST_CASE("attenuated objective matches brute enumeration") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = oracles::random_connected_graph(20, 50, seed + 70);
        CommunityParams params;
        params.model = {20, 0.3, 1.1, 1, 2.0, 50};
        params.k = 4;
        params.s = 0.35;
        params.assignment = assign_communities(20, 4, seed + 1);
        const double want =
            oracles::brute_f2_community(g, 0.3, 1.1, params.assignment, 0.35);
        CHECK(f2_community(g, params) == doctest::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("community-aware optimization produces a valid labelled graph") {
    CommunityParams params;
    params.model = {40, 0.0, 1.0, 1, 3.0, 90};
    params.k = 2;
    params.s = 0.3;
    params.assignment = assign_communities(40, 2, 5);
    OptimizerConfig cfg;
    cfg.max_iters = 15000;
    cfg.stall_limit = 15000;
    cfg.seed = 5;
    OptimizeResult res = optimize_community(params, cfg);
    CHECK(res.graph.m() == 90);
    CHECK(is_connected(res.graph));
    CHECK(res.trace.final_values.f1 == 180);
    const double want =
        oracles::brute_f2_community(res.graph, 0.0, 1.0, params.assignment, 0.3);
    CHECK(res.trace.final_values.f2 == doctest::Approx(want).epsilon(1e-9));
    // same seed reproduces the run
    OptimizeResult res2 = optimize_community(params, cfg);
    CHECK(res.trace.final_values.f2 == res2.trace.final_values.f2);
    CHECK(res.trace.accepted == res2.trace.accepted);
}

TEST_CASE("community parameter validation") {
    CommunityParams params;
    params.model = {30, 0.0, 1.0, 1, 2.5, 70};
    params.k = 2;
    params.s = 0.5;
    params.assignment = assign_communities(30, 2, 1);
    CHECK_NOTHROW(params.validate());
    auto bad = params;
    bad.k = 1;
    CHECK_THROWS_AS(bad.validate(), config_error);
    bad = params;
    bad.s = 0.0;
    CHECK_THROWS_AS(bad.validate(), config_error);
    bad = params;
    bad.s = 1.5;
    CHECK_THROWS_AS(bad.validate(), config_error);
    bad = params;
    bad.assignment.pop_back();
    CHECK_THROWS_AS(bad.validate(), config_error);
    bad = params;
    bad.assignment[0] = 2;  // label out of range for k = 2
    CHECK_THROWS_AS(bad.validate(), config_error);
}

}  // TEST_SUITE
