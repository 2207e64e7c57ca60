#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "netopt/edge_list_io.hpp"
#include "netopt/errors.hpp"
#include "netopt/graph.hpp"
#include "netopt/optimizer.hpp"
#include "oracles.hpp"

using namespace netopt;

namespace {

int min_degree(const Graph& g) {
    int best = g.n();
    for (int v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
    return best;
}

OptimizerConfig small_config(std::uint64_t seed, long iters = 20000) {
    OptimizerConfig cfg;
    cfg.max_iters = iters;
    cfg.stall_limit = iters;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_SUITE("optimizer") {

TEST_CASE("random initial graphs satisfy every structural constraint") {
    struct Case {
        int n;
        std::int64_t e;
        int x_min;
    } cases[] = {{20, 19, 1}, {20, 40, 2}, {30, 100, 3}, {12, 66, 1}, {50, 80, 2}};
    for (const auto& tc : cases)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Graph g = init_random_connected(tc.n, tc.e, tc.x_min, seed);
            CHECK(g.n() == tc.n);
            CHECK(g.m() == tc.e);
            CHECK(is_connected(g));
            CHECK(min_degree(g) >= tc.x_min);
        }
}

TEST_CASE("initial graph generation is deterministic") {
    Graph g1 = init_random_connected(40, 90, 2, 77);
    Graph g2 = init_random_connected(40, 90, 2, 77);
    CHECK(format_edge_list(g1) == format_edge_list(g2));
    Graph g3 = init_random_connected(40, 90, 2, 78);
    CHECK(format_edge_list(g1) != format_edge_list(g3));
}

TEST_CASE("infeasible budgets are rejected up front") {
    CHECK_THROWS_AS(init_random_connected(20, 18, 1, 1), infeasible_error);  // under tree
    CHECK_THROWS_AS(init_random_connected(20, 25, 3, 1), infeasible_error);  // under floor
    CHECK_THROWS_AS(init_random_connected(6, 16, 1, 1), infeasible_error);   // over complete
}

TEST_CASE("dense budgets near the complete graph still initialize") {
    Graph g = init_random_connected(12, 60, 1, 9);  // 60 of 66 possible edges
    CHECK(g.m() == 60);
    CHECK(is_connected(g));
}

TEST_CASE("proposed moves respect the structural invariants") {
    Rng rng(555);
    int produced = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = init_random_connected(25, 60, 2, seed);
        for (int k = 0; k < 30; ++k) {
            auto mv = propose_move(g, 2, rng);
            if (!mv) continue;
            ++produced;
            CHECK(g.has_edge(mv->removed.u, mv->removed.v));
            CHECK_FALSE(g.has_edge(mv->added.u, mv->added.v));
            CHECK(mv->added.u == mv->removed.u);
            CHECK(mv->added.v != mv->removed.u);
            CHECK(mv->added.v != mv->removed.v);
            CHECK(g.degree(mv->removed.v) >= 3);  // floor of 2 survives the drop
            Graph h = g;
            h.remove_edge(mv->removed.u, mv->removed.v);
            h.add_edge(mv->added.u, mv->added.v);
            CHECK(is_connected(h));
        }
    }
    CHECK(produced > 200);
}

TEST_CASE("greedy acceptance rule truth table") {
    Rng rng(1);
    const double c = 3.0;
    // strictly better objective, gap no worse
    CHECK(accept(10.0, 3.2, 11.0, 3.2, c, Acceptance::greedy, 0.0, rng));
    CHECK(accept(10.0, 3.2, 11.0, 3.1, c, Acceptance::greedy, 0.0, rng));
    // objective tied, gap strictly better
    CHECK(accept(10.0, 3.2, 10.0, 3.1, c, Acceptance::greedy, 0.0, rng));
    // better objective but worse gap
    CHECK_FALSE(accept(10.0, 3.1, 11.0, 3.4, c, Acceptance::greedy, 0.0, rng));
    // worse objective
    CHECK_FALSE(accept(10.0, 3.2, 9.0, 3.0, c, Acceptance::greedy, 0.0, rng));
    // both tied: no progress, reject
    CHECK_FALSE(accept(10.0, 3.2, 10.0, 3.2, c, Acceptance::greedy, 0.0, rng));
    // gap improves on the other side of the target
    CHECK(accept(10.0, 2.6, 10.0, 2.9, c, Acceptance::greedy, 0.0, rng));
}

TEST_CASE("annealed acceptance admits improving moves and cools down") {
    Rng rng(2);
    const double c = 3.0;
    CHECK(accept(10.0, 3.2, 11.0, 3.1, c, Acceptance::anneal, 0.5, rng));
    // at near-zero temperature worsening moves are effectively rejected
    int hot = 0, cold = 0;
    for (int i = 0; i < 1000; ++i) {
        if (accept(10.0, 3.0, 9.5, 3.0, c, Acceptance::anneal, 5.0, rng)) ++hot;
        if (accept(10.0, 3.0, 9.5, 3.0, c, Acceptance::anneal, 1e-9, rng)) ++cold;
    }
    CHECK(hot > 200);
    CHECK(cold == 0);
}

TEST_CASE("greedy run reaches the target and reports consistent objectives") {
    ModelParams params{30, 0.0, 1.0, 1, 2.5, 60};
    OptimizeResult res = optimize(params, small_config(5));
    CHECK(res.trace.converged);
    CHECK(std::abs(res.trace.final_y - 2.5) <= 0.05);
    CHECK(res.graph.m() == 60);
    CHECK(is_connected(res.graph));
    CHECK(min_degree(res.graph) >= 1);
    CHECK(res.trace.final_values.f1 == 120);
    CHECK(res.trace.final_values.f2 ==
          doctest::Approx(oracles::brute_f2(res.graph, 0.0, 1.0)).epsilon(1e-9));
    CHECK(res.trace.final_y == doctest::Approx(oracles::aspl_fw(res.graph)).epsilon(1e-12));
    CHECK(res.trace.accepted == static_cast<long>(res.trace.records.size()));
}

TEST_CASE("greedy trace is monotone in both objectives") {
    ModelParams params{40, 0.0, 1.0, 2, 3.0, 100};
    OptimizeResult res = optimize(params, small_config(9));
    REQUIRE(res.trace.records.size() > 10);
    for (std::size_t i = 1; i < res.trace.records.size(); ++i) {
        const auto& prev = res.trace.records[i - 1];
        const auto& cur = res.trace.records[i];
        CHECK(cur.f2 >= prev.f2 - 1e-9);
        CHECK(cur.gap <= prev.gap + 1e-9);
    }
}

TEST_CASE("identical seeds give identical runs, different seeds diverge") {
    ModelParams params{35, 0.0, 1.0, 1, 2.8, 80};
    OptimizeResult r1 = optimize(params, small_config(123, 8000));
    OptimizeResult r2 = optimize(params, small_config(123, 8000));
    CHECK(format_edge_list(r1.graph) == format_edge_list(r2.graph));
    CHECK(r1.trace.final_values.f2 == r2.trace.final_values.f2);
    CHECK(r1.trace.accepted == r2.trace.accepted);
    OptimizeResult r3 = optimize(params, small_config(124, 8000));
    CHECK(format_edge_list(r1.graph) != format_edge_list(r3.graph));
}

TEST_CASE("accept observer sees every accepted state") {
    ModelParams params{25, 0.0, 1.0, 1, 2.4, 50};
    OptimizerConfig cfg = small_config(3, 5000);
    long calls = 0;
    bool all_valid = true;
    cfg.on_accept = [&](const Graph& g, long, double, double) {
        ++calls;
        if (g.m() != 50 || !is_connected(g)) all_valid = false;
    };
    OptimizeResult res = optimize(params, cfg);
    CHECK(calls == res.trace.accepted);
    CHECK(all_valid);
}

TEST_CASE("annealed run keeps the structural invariants") {
    ModelParams params{30, 0.0, 1.0, 2, 2.8, 75};
    OptimizerConfig cfg = small_config(11, 12000);
    cfg.acceptance = Acceptance::anneal;
    cfg.anneal.initial_temperature = 0.5;
    cfg.anneal.decay = 0.99;
    cfg.anneal.iterations_per_decay = 200;
    OptimizeResult res = optimize(params, cfg);
    CHECK(res.graph.m() == 75);
    CHECK(is_connected(res.graph));
    CHECK(min_degree(res.graph) >= 2);
    CHECK(res.trace.final_values.f1 == 150);
    CHECK(res.trace.final_values.f2 ==
          doctest::Approx(oracles::brute_f2(res.graph, 0.0, 1.0)).epsilon(1e-9));
}

TEST_CASE("sampling every source reproduces the exact-mode run") {
    ModelParams params{30, 0.0, 1.0, 1, 2.6, 70};
    OptimizeResult exact = optimize(params, small_config(21, 6000));
    OptimizerConfig cfg = small_config(21, 6000);
    cfg.aspl_mode = AsplMode::sampled;
    cfg.sample_size = 30;
    OptimizeResult sampled = optimize(params, cfg);
    CHECK(format_edge_list(exact.graph) == format_edge_list(sampled.graph));
    CHECK(exact.trace.final_y == sampled.trace.final_y);
}

TEST_CASE("sampled mode with a partial sample still produces a valid graph") {
    ModelParams params{60, 0.0, 1.0, 1, 3.0, 140};
    OptimizerConfig cfg = small_config(31, 10000);
    cfg.aspl_mode = AsplMode::sampled;
    cfg.sample_size = 20;
    OptimizeResult res = optimize(params, cfg);
    CHECK(res.graph.m() == 140);
    CHECK(is_connected(res.graph));
    // the reported y is the sampled estimate; the true value should be near it
    CHECK(std::abs(oracles::aspl_fw(res.graph) - res.trace.final_y) < 0.5);
}

TEST_CASE("edge-budget sweep reports one valid point per budget") {
    ModelParams base{40, 0.0, 1.0, 1, 3.0, 0};
    OptimizerConfig cfg = small_config(41, 12000);
    auto points = pareto_sweep(base, {80, 38, 60, 100}, cfg);
    REQUIRE(points.size() == 4);
    // returned in ascending budget order
    CHECK(points[0].e == 38);
    CHECK(points[3].e == 100);
    CHECK_FALSE(points[0].ok);  // 38 < n-1 cannot span the graph
    CHECK_FALSE(points[0].message.empty());
    double prev_f2 = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        REQUIRE(points[i].ok);
        CHECK(points[i].values.f1 == 2 * points[i].e);
        CHECK(points[i].graph.m() == points[i].e);
        CHECK(points[i].values.f2 > prev_f2);  // larger budget, larger objective
        prev_f2 = points[i].values.f2;
    }
}

TEST_CASE("optimizer configuration validation") {
    OptimizerConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.max_iters = 0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg = OptimizerConfig{};
    cfg.aspl_tolerance = 0.0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg = OptimizerConfig{};
    cfg.anneal.decay = 1.0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg = OptimizerConfig{};
    cfg.aspl_mode = AsplMode::sampled;
    cfg.sample_size = 0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
}

TEST_CASE("unreachable targets are reported as not converged") {
    // a 20-node graph with 100 edges cannot have mean distance anywhere near 8
    ModelParams params{20, 0.0, 1.0, 1, 8.0, 100};
    OptimizerConfig cfg = small_config(51, 900);
    OptimizeResult res = optimize(params, cfg);
    CHECK_FALSE(res.trace.converged);
    CHECK(res.graph.m() == 100);  // still returns the best structure found
}

}  // TEST_SUITE
