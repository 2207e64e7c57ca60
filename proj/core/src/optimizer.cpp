#include "netopt/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

#include "netopt/errors.hpp"

namespace netopt {

void OptimizerConfig::validate() const {
    if (max_iters <= 0) throw config_error("max_iters must be positive");
    if (stall_limit <= 0) throw config_error("stall_limit must be positive");
    if (!(aspl_tolerance > 0.0)) throw config_error("aspl_tolerance must be positive");
    if (!(anneal.decay > 0.0 && anneal.decay < 1.0))
        throw config_error("anneal decay must lie in (0, 1)");
    if (anneal.iterations_per_decay <= 0)
        throw config_error("anneal iterations_per_decay must be positive");
    if (!(anneal.initial_temperature > 0.0))
        throw config_error("anneal initial_temperature must be positive");
    if (aspl_mode == AsplMode::sampled && sample_size < 1)
        throw config_error("sampled mode needs sample_size >= 1");
}

namespace {

// Prufer-style decode of a uniform random integer sequence: every labelled
// tree is produced with equal probability.
void build_random_tree(Graph& g, Rng& rng) {
    const int n = g.n();
    if (n == 2) {
        g.add_edge(0, 1);
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& x : seq) x = rng.index(n);
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++deg[x];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int i = 0; i < n; ++i)
        if (deg[i] == 1) leaves.push(i);
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, x);
        if (--deg[x] == 1) leaves.push(x);
    }
    int u = leaves.top();
    leaves.pop();
    g.add_edge(u, leaves.top());
}

std::vector<Edge> collect_edges(const Graph& g) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.m()));
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.push_back({u, v});
    return edges;
}

bool connected_quick(const Graph& g, AsplEvaluator& ev, std::vector<int>& scratch) {
    return ev.bfs(g, 0, scratch) == g.n();
}

constexpr std::uint64_t seed_mix = 0x9E3779B97F4A7C15ULL;

}  // namespace

Graph init_random_connected(int n, std::int64_t e, int x_min, std::uint64_t seed) {
    if (n < 2) throw config_error("need at least 2 nodes");
    if (x_min < 1 || x_min >= n) throw config_error("need 1 <= x_min < n");
    const std::int64_t max_e = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const std::int64_t floor_e = (static_cast<std::int64_t>(n) * x_min + 1) / 2;
    if (e < n - 1 || e < floor_e || e > max_e)
        throw infeasible_error("edge budget " + std::to_string(e) + " infeasible for n=" +
                               std::to_string(n) + ", x_min=" + std::to_string(x_min));

    Rng rng(seed);
    Graph g(n);
    build_random_tree(g, rng);

    if (e > (6 * max_e) / 10) {
        // dense regime: enumerate the complement and draw without replacement
        std::vector<Edge> comp;
        comp.reserve(static_cast<std::size_t>(max_e - g.m()));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) comp.push_back({u, v});
        std::int64_t need = e - g.m();
        for (std::int64_t i = 0; i < need; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(rng.below(comp.size() - static_cast<std::size_t>(i)));
            std::swap(comp[static_cast<std::size_t>(i)], comp[j]);
            g.add_edge(comp[static_cast<std::size_t>(i)].u, comp[static_cast<std::size_t>(i)].v);
        }
    } else {
        while (g.m() < e) {
            int u = rng.index(n);
            int v = rng.index(n);
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
    }

    // repair pass: raise nodes below the degree floor by stealing an edge
    // endpoint from a donor of surplus degree, keeping connectivity
    AsplEvaluator ev(n);
    std::vector<int> scratch;
    while (true) {
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (g.degree(i) < x_min) {
                v = i;
                break;
            }
        if (v < 0) break;
        std::vector<Edge> edges = collect_edges(g);
        const std::int64_t cap = 200 * std::max<std::int64_t>(g.m(), 1);
        bool repaired = false;
        for (std::int64_t attempt = 0; attempt < cap && !repaired; ++attempt) {
            Edge ed = edges[static_cast<std::size_t>(rng.below(edges.size()))];
            int x = ed.u, y = ed.v;
            if (rng.coin()) std::swap(x, y);
            if (x == v || y == v) continue;
            if (g.degree(x) <= x_min) continue;
            if (g.has_edge(v, y)) continue;
            g.remove_edge(x, y);
            g.add_edge(v, y);
            if (connected_quick(g, ev, scratch)) {
                repaired = true;
            } else {
                g.remove_edge(v, y);
                g.add_edge(x, y);
            }
        }
        if (!repaired)
            throw infeasible_error("degree floor repair failed; parameters too tight");
    }
    return g;
}

std::optional<Move> propose_move(const Graph& g, int x_min, Rng& rng) {
    const int n = g.n();
    const std::int64_t m = g.m();
    if (m == 0) return std::nullopt;
    // uniform directed arc (u, v): u is kept, v dropped
    std::int64_t arc = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * m)));
    int u = 0;
    std::int64_t cum = 0;
    while (arc >= cum + g.degree(u)) {
        cum += g.degree(u);
        ++u;
    }
    int v = g.neighbors(u)[static_cast<std::size_t>(arc - cum)];
    if (g.degree(v) <= x_min) return std::nullopt;
    int w = rng.index(n);
    if (w == u || w == v || g.has_edge(u, w)) return std::nullopt;
    Graph probe = g;
    probe.remove_edge(u, v);
    probe.add_edge(u, w);
    if (!is_connected(probe)) return std::nullopt;
    return Move{{u, v}, {u, w}};
}

bool accept(double f2_before, double y_before, double f2_after, double y_after, double c,
            Acceptance mode, double temperature, Rng& rng) {
    const double gap_before = std::abs(y_before - c);
    const double gap_after = std::abs(y_after - c);
    const bool greedy_ok = (f2_after > f2_before && gap_after <= gap_before) ||
                           (f2_after >= f2_before && gap_after < gap_before);
    if (greedy_ok || mode == Acceptance::greedy) return greedy_ok;
    constexpr double tiny = 1e-12;
    const double delta = std::max(0.0, f2_before - f2_after) / std::max(std::abs(f2_before), tiny) +
                         std::max(0.0, gap_after - gap_before) / std::max(c, tiny);
    if (temperature <= 0.0) return false;
    return rng.unit() < std::exp(-delta / temperature);
}

namespace {

template <class Scale>
OptimizeResult run_engine(const ModelParams& params, const OptimizerConfig& config,
                          const Scale& scale) {
    params.validate();
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const int n = params.n;
    const double c = params.c;
    const bool greedy = config.acceptance == Acceptance::greedy;

    Graph g = init_random_connected(n, params.e, params.x_min, config.seed);
    std::vector<Edge> edges = collect_edges(g);
    Rng rng(config.seed ^ seed_mix);

    PowerTable pa(params.a, n), pb(params.b, n);
    double f2_cur = f2_weighted(g, pa, pb, scale);
    AsplEvaluator ev(n);

    std::vector<int> sources;  // empty means exact mode
    double denom = static_cast<double>(n) * (n - 1);
    if (config.aspl_mode == AsplMode::sampled) {
        const int k = std::min(config.sample_size, n);
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[i] = i;
        Rng source_rng(config.seed ^ (seed_mix << 1));
        for (int i = 0; i < k; ++i) {
            int j = i + source_rng.index(n - i);
            std::swap(pool[i], pool[j]);
            sources.push_back(pool[i]);
        }
        denom = static_cast<double>(k) * (n - 1);
    }
    auto eval_y = [&](const Graph& gg) -> double {
        const std::int64_t total =
            sources.empty() ? ev.total_ordered_distance(gg) : ev.rows_total(gg, sources);
        if (total < 0) return std::numeric_limits<double>::quiet_NaN();
        return static_cast<double>(total) / denom;
    };

    double y = eval_y(g);
    double gap = std::abs(y - c);

    RunTrace trace;
    double temperature = config.anneal.initial_temperature;
    const std::int64_t retry_cap = 100 * std::max<std::int64_t>(params.e, 1);

    // anneal can walk away from its best point; remember it
    Graph best_graph;
    double best_gap = std::numeric_limits<double>::infinity();
    double best_f2 = -std::numeric_limits<double>::infinity();

    long it = 0;
    long last_accept = 0;
    while (it < config.max_iters && (it - last_accept) < config.stall_limit) {
        ++it;
        if (!greedy && it % config.anneal.iterations_per_decay == 0)
            temperature *= config.anneal.decay;

        bool evaluated = false;
        bool accepted_move = false;
        for (std::int64_t r = 0; r < retry_cap; ++r) {
            const std::size_t ei = static_cast<std::size_t>(rng.below(edges.size()));
            int u = edges[ei].u, v = edges[ei].v;
            if (rng.coin()) std::swap(u, v);
            if (g.degree(v) <= params.x_min) continue;
            const int w = rng.index(n);
            if (w == u || w == v || g.has_edge(u, w)) continue;
            const double df2 = f2_delta_weighted(g, u, v, w, pa, pb, scale);
            if (greedy && df2 < 0.0) {
                // neither greedy clause can fire: skip the path-length pass
                evaluated = true;
                break;
            }
            g.remove_edge(u, v);
            g.add_edge(u, w);
            const double y_after = eval_y(g);
            if (std::isnan(y_after)) {
                // disconnecting candidates are structural rejections: free retry
                g.remove_edge(u, w);
                g.add_edge(u, v);
                continue;
            }
            evaluated = true;
            if (accept(f2_cur, y, f2_cur + df2, y_after, c, config.acceptance, temperature, rng)) {
                f2_cur += df2;
                y = y_after;
                gap = std::abs(y - c);
                edges[ei] = {u, w};
                accepted_move = true;
                ++trace.accepted;
                last_accept = it;
                if (config.keep_trace) trace.records.push_back({it, f2_cur, y, gap});
                if (config.on_accept) config.on_accept(g, it, f2_cur, y);
                if (!greedy && (gap < best_gap || (gap == best_gap && f2_cur > best_f2))) {
                    best_graph = g;
                    best_gap = gap;
                    best_f2 = f2_cur;
                }
            } else {
                g.remove_edge(u, w);
                g.add_edge(u, v);
            }
            break;
        }
        if (evaluated && !accepted_move) ++trace.rejected;
    }

    if (!greedy && best_graph.n() == n && (best_gap < gap || (best_gap == gap && best_f2 > f2_cur))) {
        g = std::move(best_graph);
        y = eval_y(g);
        gap = std::abs(y - c);
    }

    trace.iterations = it;
    trace.final_values.f1 = f1(g);
    trace.final_values.f2 = f2_weighted(g, pa, pb, scale);  // fresh: no accumulation drift
    trace.final_y = y;
    trace.converged = gap <= config.aspl_tolerance;
    trace.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(g), std::move(trace)};
}

}  // namespace

OptimizeResult optimize(const ModelParams& params, const OptimizerConfig& config) {
    return run_engine(params, config, UnitScale{});
}

OptimizeResult optimize_community(const CommunityParams& params, const OptimizerConfig& config) {
    params.validate();
    return run_engine(params.model, config,
                      CommunityScale{params.assignment.data(), params.s});
}

std::vector<SweepPoint> pareto_sweep(ModelParams base, std::vector<std::int64_t> e_grid,
                                     const OptimizerConfig& config) {
    std::sort(e_grid.begin(), e_grid.end());
    std::vector<SweepPoint> out;
    out.reserve(e_grid.size());
    for (std::int64_t e : e_grid) {
        SweepPoint point;
        point.e = e;
        base.e = e;
        try {
            OptimizeResult res = optimize(base, config);
            point.ok = true;
            point.graph = std::move(res.graph);
            point.values = res.trace.final_values;
            point.y = res.trace.final_y;
            point.converged = res.trace.converged;
        } catch (const error& ex) {
            point.ok = false;
            point.message = ex.what();
        }
        out.push_back(std::move(point));
    }
    return out;
}

}  // namespace netopt
