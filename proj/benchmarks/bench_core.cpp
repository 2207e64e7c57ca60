#include <benchmark/benchmark.h>

#include <optional>

#include "netopt/analysis.hpp"
#include "netopt/graph.hpp"
#include "netopt/objectives.hpp"
#include "netopt/optimizer.hpp"
#include "netopt/rng.hpp"

using namespace netopt;

namespace {

Graph make_graph(int n, std::int64_t e, std::uint64_t seed = 7) {
    return init_random_connected(n, e, 2, seed);
}

// full mean-path evaluation: the optimizer's dominant cost per iteration
void bm_aspl(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = make_graph(n, static_cast<std::int64_t>(n) * 5 / 2);
    AsplEvaluator eval(n);
    for (auto _ : state) benchmark::DoNotOptimize(eval.total_ordered_distance(g));
    state.SetItemsProcessed(state.iterations() * n);  // BFS passes
}
BENCHMARK(bm_aspl)->Arg(100)->Arg(300)->Arg(1000);

// incremental objective update for one endpoint rewire
void bm_f2_delta(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = make_graph(n, static_cast<std::int64_t>(n) * 5 / 2);
    Rng rng(11);
    std::vector<Move> moves;
    while (moves.size() < 256) {
        auto mv = propose_move(g, 2, rng);
        if (mv) moves.push_back(*mv);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const Move& mv = moves[i++ & 255];
        benchmark::DoNotOptimize(f2_delta(g, mv.removed, mv.added, 0.0, 1.0));
    }
}
BENCHMARK(bm_f2_delta)->Arg(300)->Arg(1000);

// one full proposal: sampling plus the structural feasibility probes
void bm_propose_move(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = make_graph(n, static_cast<std::int64_t>(n) * 5 / 2);
    Rng rng(13);
    for (auto _ : state) benchmark::DoNotOptimize(propose_move(g, 2, rng));
}
BENCHMARK(bm_propose_move)->Arg(300)->Arg(1000);

// greedy box covering at an intermediate scale
void bm_box_cover(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = make_graph(n, static_cast<std::int64_t>(n) * 2);
    const int l_b = diameter(g) / 2 + 1;
    for (auto _ : state) benchmark::DoNotOptimize(box_cover(g, l_b, 12345, 2));
}
BENCHMARK(bm_box_cover)->Arg(100)->Arg(300);

// short greedy optimization burst end to end
void bm_optimize_burst(benchmark::State& state) {
    ModelParams params{100, 0.0, 1.0, 2, 3.0, 250};
    for (auto _ : state) {
        OptimizerConfig cfg;
        cfg.max_iters = 2000;
        cfg.stall_limit = 2000;
        cfg.seed = 29;
        cfg.keep_trace = false;
        benchmark::DoNotOptimize(optimize(params, cfg));
    }
}
BENCHMARK(bm_optimize_burst)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
