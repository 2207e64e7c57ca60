#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netopt/community.hpp"
#include "netopt/graph.hpp"
#include "netopt/model.hpp"
#include "netopt/objectives.hpp"
#include "netopt/rng.hpp"

namespace netopt {

enum class Acceptance { greedy, anneal };
enum class AsplMode { exact, sampled };

struct AnnealSchedule {
    double initial_temperature = 1.0;
    double decay = 0.995;
    long iterations_per_decay = 1000;
};

struct OptimizerConfig {
    long max_iters = 5'000'000;
    long stall_limit = 50'000;
    double aspl_tolerance = 0.05;
    std::uint64_t seed = 1;
    Acceptance acceptance = Acceptance::greedy;
    AnnealSchedule anneal;
    AsplMode aspl_mode = AsplMode::exact;
    int sample_size = 0;  // source count for sampled mode
    bool keep_trace = true;

    // Called after every accepted move with the post-move graph; used by the
    // invariant test harness. Programmatic only (not a config-file field).
    std::function<void(const Graph&, long iteration, double f2, double y)> on_accept;

    void validate() const;
};

struct Move {
    Edge removed;
    Edge added;  // shares removed.u
};

struct TraceRecord {
    long iteration = 0;
    double f2 = 0.0;
    double y = 0.0;
    double gap = 0.0;  // |y - c|
};

struct RunTrace {
    std::vector<TraceRecord> records;  // one per accepted move (when kept)
    ObjectiveValues final_values;
    long accepted = 0;
    long rejected = 0;    // proposals that reached objective evaluation and failed
    long iterations = 0;  // objective evaluations consumed
    double final_y = 0.0;
    double wall_seconds = 0.0;
    bool converged = false;  // |final_y - c| <= aspl_tolerance
};

struct OptimizeResult {
    Graph graph;
    RunTrace trace;
};

// Connected simple graph with exactly e edges and min degree >= x_min:
// uniform random spanning tree, uniform extra edges, then a repair pass that
// rewires edges toward degree-deficient nodes.
Graph init_random_connected(int n, std::int64_t e, int x_min, std::uint64_t seed);

// One sampling attempt: uniform ordered adjacent pair (u,v) plus uniform
// replacement endpoint w. Returns a Move satisfying all structural
// invariants (degree floor, simplicity, connectivity after the move) or
// nullopt when the sampled candidate violates one; callers retry.
std::optional<Move> propose_move(const Graph& g, int x_min, Rng& rng);

// Two-clause greedy rule; anneal additionally admits worsening moves with
// probability exp(-delta/temperature) on a normalized composite score.
bool accept(double f2_before, double y_before, double f2_after, double y_after, double c,
            Acceptance mode, double temperature, Rng& rng);

OptimizeResult optimize(const ModelParams& params, const OptimizerConfig& config);

OptimizeResult optimize_community(const CommunityParams& params, const OptimizerConfig& config);

struct SweepPoint {
    std::int64_t e = 0;
    bool ok = false;
    std::string message;  // failure description when !ok
    Graph graph;
    ObjectiveValues values;
    double y = 0.0;
    bool converged = false;
};

// Fixed-budget scan: one optimize run per edge budget, results ordered by e.
// Per-point failures are recorded, not propagated.
std::vector<SweepPoint> pareto_sweep(ModelParams base, std::vector<std::int64_t> e_grid,
                                     const OptimizerConfig& config);

}  // namespace netopt
