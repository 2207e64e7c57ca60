#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netopt/driver.hpp"
#include "netopt/edge_list_io.hpp"
#include "netopt/errors.hpp"
#include "netopt/report.hpp"
#include "netopt/run_config.hpp"
#include "netopt/version.hpp"

namespace {

using netopt::RunConfig;

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_infeasible = 3;
constexpr int exit_soft_failure = 4;
constexpr int exit_io = 5;

// flag -> config key mapping; all overrides funnel through RunConfig::set so
// file values and CLI values share one validation path
struct OverrideOpt {
    const char* flag;
    const char* key;
    const char* help;
    std::string value;
    CLI::Option* opt = nullptr;
};

std::vector<OverrideOpt> make_overrides() {
    return {
        {"--n", "n", "node count", {}, nullptr},
        {"--a", "a", "node-side exponent", {}, nullptr},
        {"--b", "b", "neighbor-side exponent", {}, nullptr},
        {"--x-min", "x_min", "minimum node degree", {}, nullptr},
        {"--c", "c", "target average shortest path length", {}, nullptr},
        {"--e", "e", "edge budget", {}, nullptr},
        {"--max-iters", "max_iters", "iteration budget", {}, nullptr},
        {"--stall-limit", "stall_limit", "iterations without accepts before stopping", {}, nullptr},
        {"--tolerance", "aspl_tolerance", "target band for |y-c|", {}, nullptr},
        {"--seed", "seed", "RNG seed", {}, nullptr},
        {"--acceptance", "acceptance", "greedy or anneal", {}, nullptr},
        {"--anneal-t0", "anneal_t0", "initial annealing temperature", {}, nullptr},
        {"--anneal-decay", "anneal_decay", "geometric cooling factor", {}, nullptr},
        {"--anneal-steps", "anneal_steps", "iterations per cooling step", {}, nullptr},
        {"--aspl-mode", "aspl_mode", "exact or sampled", {}, nullptr},
        {"--sample-size", "sample_size", "BFS sources in sampled mode", {}, nullptr},
        {"--community", "community", "true to use the community-weighted objective", {}, nullptr},
        {"--k", "k", "community count", {}, nullptr},
        {"--s", "s", "cross-community attenuation in (0,1]", {}, nullptr},
        {"--delta", "delta", "complete/ultra classification slack", {}, nullptr},
        {"--delta-sw", "delta_sw", "small-world band half-width", {}, nullptr},
        {"--r2-threshold", "r2_threshold", "fractal scaling quality threshold", {}, nullptr},
        {"--q-threshold", "q_threshold", "community-evidence modularity threshold", {}, nullptr},
        {"--shift-base", "shift_base", "classifier anchor shrink per unit x_min-1", {}, nullptr},
        {"--baseline-samples", "baseline_samples", "rewired samples for clustering baseline", {}, nullptr},
        {"--out-dir", "out_dir", "output directory", {}, nullptr},
        {"--prefix", "prefix", "output file prefix", {}, nullptr},
        {"--report-format", "report_format", "json or text", {}, nullptr},
    };
}

void register_overrides(CLI::App* cmd, std::vector<OverrideOpt>& overrides) {
    for (auto& o : overrides) {
        o.opt = cmd->add_option(o.flag, o.value, o.help);
        // bare --community acts as a switch; an explicit value still works
        if (std::string(o.key) == "community") o.opt->expected(0, 1);
    }
}

void apply_env_seed(RunConfig& cfg) {
    if (const char* env = std::getenv("NETOPT_SEED")) {
        try {
            cfg.spec.opt.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw netopt::config_error("NETOPT_SEED is not a valid integer");
        }
    }
}

void apply_overrides(RunConfig& cfg, const std::string& config_path,
                     std::vector<OverrideOpt>& overrides) {
    apply_env_seed(cfg);  // weakest: beaten by config file and flags
    if (!config_path.empty()) cfg.load_file(config_path);
    for (auto& o : overrides)
        if (o.opt->count() > 0) {
            if (o.value.empty() && std::string(o.key) == "community") o.value = "true";
            cfg.set(o.key, o.value);
        }
}

int map_exception(const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    if (dynamic_cast<const netopt::infeasible_error*>(&ex)) return exit_infeasible;
    if (dynamic_cast<const netopt::io_error*>(&ex)) return exit_io;
    return exit_config;
}

void ensure_out_dir(const RunConfig& cfg) {
    if (cfg.out_dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw netopt::io_error("cannot create output directory: " + cfg.out_dir);
}

int cmd_generate(RunConfig& cfg, bool print_config) {
    if (print_config) {
        std::cout << cfg.print();
        return exit_ok;
    }
    cfg.validate();
    ensure_out_dir(cfg);
    netopt::RunOutcome outcome = netopt::run_model(cfg.spec);
    netopt::OutputPaths paths = netopt::default_paths(cfg.out_dir, cfg.prefix);
    netopt::write_run_outputs(cfg.spec, outcome, paths, cfg.report_format);
    std::cout << netopt::summary_row(cfg.spec, outcome) << "\n";
    return outcome.trace.converged ? exit_ok : exit_soft_failure;
}

int cmd_analyze(const std::string& path, RunConfig& cfg, bool have_x_min, int x_min, double a,
                double b, bool write_outputs) {
    netopt::Graph g = netopt::read_edge_list(path);
    if (!netopt::is_connected(g)) throw netopt::disconnected_error();
    netopt::ModelParams params;
    params.n = g.n();
    params.e = g.m();
    params.a = a;
    params.b = b;
    params.c = 1.0;
    int min_degree = g.n() > 0 ? g.degree(0) : 1;
    for (int v = 0; v < g.n(); ++v) min_degree = std::min(min_degree, g.degree(v));
    params.x_min = have_x_min ? x_min : std::max(1, min_degree);

    netopt::AnalysisReport rep = netopt::analyze_graph(g, params, cfg.spec.thresholds);

    netopt::RunSpec spec = cfg.spec;
    spec.model = params;
    netopt::RunOutcome outcome;
    outcome.graph = std::move(g);
    outcome.analysis = rep;
    outcome.y_reported = rep.y;
    outcome.trace.final_values = {netopt::f1(outcome.graph),
                                  netopt::f2(outcome.graph, params.a, params.b)};
    outcome.trace.converged = true;

    if (write_outputs) {
        ensure_out_dir(cfg);
        netopt::OutputPaths paths = netopt::default_paths(cfg.out_dir, cfg.prefix);
        paths.trace.clear();  // no optimizer ran
        netopt::write_run_outputs(spec, outcome, paths, cfg.report_format);
    }
    std::cout << "label=" << netopt::to_string(rep.classification.label)
              << " gamma=" << rep.fit.gamma_hat << " y=" << rep.y
              << " clustering=" << rep.clustering << " diameter=" << rep.diameter;
    if (rep.box) std::cout << " d_b=" << rep.box->d_b << " r2=" << rep.box->r2;
    std::cout << "\n";
    for (const auto& line : rep.classification.evidence) std::cout << "  evidence: " << line << "\n";
    return exit_ok;
}

int cmd_sweep(RunConfig& cfg, const std::string& grid_arg, bool print_config) {
    if (print_config) {
        std::cout << cfg.print();
        return exit_ok;
    }
    std::vector<std::int64_t> grid;
    std::stringstream ss(grid_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            grid.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw netopt::config_error("invalid edge budget in grid: '" + tok + "'");
        }
    }
    if (grid.empty()) throw netopt::config_error("empty edge-budget grid");
    cfg.spec.opt.validate();
    ensure_out_dir(cfg);

    auto points = netopt::pareto_sweep(cfg.spec.model, grid, cfg.spec.opt);
    const std::string base =
        cfg.out_dir.empty() ? cfg.prefix : cfg.out_dir + "/" + cfg.prefix;
    bool all_ok = true;
    for (const auto& p : points) {
        if (p.ok) {
            netopt::write_edge_list(p.graph, base + ".e" + std::to_string(p.e) + ".edges");
            std::cout << "e=" << p.e << " f1=" << p.values.f1 << " f2=" << p.values.f2
                      << " y=" << p.y << (p.converged ? "" : " [not converged]") << "\n";
            all_ok = all_ok && p.converged;
        } else {
            std::cout << "e=" << p.e << " failed: " << p.message << "\n";
            all_ok = false;
        }
    }
    netopt::write_text_file(base + ".front.tsv", netopt::front_tsv(points));
    return all_ok ? exit_ok : exit_soft_failure;
}

struct TableRow {
    char name;
    std::int64_t e;
    double c;
    int x_min;
    bool community;
    double gamma_ref;
};

constexpr TableRow table_rows[] = {
    {'a', 762, 3.9, 2, false, 2.10},
    {'b', 762, 5.5, 2, true, 2.11},
    {'c', 762, 7.0, 2, false, 2.13},
    {'d', 1157, 3.1, 3, false, 2.16},
    {'e', 1157, 4.5, 3, true, 2.19},
    {'f', 1157, 5.0, 3, false, 2.28},
};

int cmd_reproduce(RunConfig& cfg, const std::string& rows_arg, bool write_outputs) {
    constexpr double gamma_tol = 0.3;
    constexpr double y_tol = 0.05;
    if (rows_arg.empty()) throw netopt::config_error("row filter is empty (use letters a-f)");
    for (char ch : rows_arg)
        if (ch != ',' && (ch < 'a' || ch > 'f'))
            throw netopt::config_error(std::string("unknown table row '") + ch + "' (use a-f)");
    if (write_outputs) ensure_out_dir(cfg);
    bool all_pass = true;
    std::cout << "row  E     c     x_min  mode       gamma'  ref    y       pass\n";
    for (const TableRow& row : table_rows) {
        if (rows_arg.find(row.name) == std::string::npos) continue;
        netopt::RunSpec spec = cfg.spec;
        spec.model.n = 300;
        spec.model.a = 0.0;
        spec.model.b = 1.0;
        spec.model.e = row.e;
        spec.model.c = row.c;
        spec.model.x_min = row.x_min;
        spec.community = row.community;
        spec.k = 2;
        spec.s = 0.5;
        netopt::RunOutcome outcome = netopt::run_model(spec);
        const double gamma = outcome.analysis.fit.gamma_hat;
        const double y = outcome.y_reported;
        const bool pass = std::abs(gamma - row.gamma_ref) <= gamma_tol &&
                          std::abs(y - row.c) <= y_tol && outcome.trace.converged;
        all_pass = all_pass && pass;
        std::cout << row.name << "    " << std::left << std::setw(6) << row.e << std::setw(6)
                  << row.c << std::setw(7) << row.x_min << std::setw(11)
                  << (row.community ? "community" : "base") << std::setw(8) << std::setprecision(3)
                  << gamma << std::setw(7) << row.gamma_ref << std::setw(8) << std::setprecision(4)
                  << y << (pass ? "PASS" : "FAIL") << std::right << "\n"
                  << std::setprecision(6);
        if (write_outputs) {
            RunConfig row_cfg = cfg;
            row_cfg.prefix = std::string("table1_") + row.name;
            netopt::OutputPaths paths = netopt::default_paths(row_cfg.out_dir, row_cfg.prefix);
            netopt::write_run_outputs(spec, outcome, paths, cfg.report_format);
        }
    }
    return all_pass ? exit_ok : exit_soft_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bi-objective network synthesis and analysis"};
    app.set_version_flag("--version", netopt::version_string);
    app.require_subcommand(1);

    std::function<int()> action;

    // generate
    auto* gen = app.add_subcommand("generate", "run the optimizer and write network + report");
    auto gen_overrides = std::make_shared<std::vector<OverrideOpt>>(make_overrides());
    auto gen_config = std::make_shared<std::string>();
    auto gen_print = std::make_shared<bool>(false);
    gen->add_option("--config", *gen_config, "key=value configuration file");
    gen->add_flag("--print-config", *gen_print, "print the effective configuration and exit");
    register_overrides(gen, *gen_overrides);
    gen->callback([&action, gen_config, gen_print, gen_overrides] {
        action = [gen_config, gen_print, gen_overrides] {
            RunConfig cfg;
            apply_overrides(cfg, *gen_config, *gen_overrides);
            return cmd_generate(cfg, *gen_print);
        };
    });

    // analyze
    auto* ana = app.add_subcommand("analyze", "measure and classify an existing edge list");
    auto ana_path = std::make_shared<std::string>();
    auto ana_x_min = std::make_shared<int>(1);
    auto ana_a = std::make_shared<double>(0.0);
    auto ana_b = std::make_shared<double>(1.0);
    auto ana_out = std::make_shared<bool>(false);
    auto ana_overrides = std::make_shared<std::vector<OverrideOpt>>(make_overrides());
    ana->add_option("edge_list", *ana_path, "canonical edge-list file")->required();
    auto* ana_xopt = ana->add_option("--fit-x-min", *ana_x_min, "power-law fit cutoff (default: min degree)");
    ana->add_option("--model-a", *ana_a, "assumed node-side exponent");
    ana->add_option("--model-b", *ana_b, "assumed neighbor-side exponent");
    ana->add_flag("--write", *ana_out, "write report and TSV outputs");
    register_overrides(ana, *ana_overrides);
    ana->callback([&action, ana_path, ana_x_min, ana_a, ana_b, ana_out, ana_overrides, ana_xopt] {
        action = [ana_path, ana_x_min, ana_a, ana_b, ana_out, ana_overrides, ana_xopt] {
            RunConfig cfg;
            cfg.prefix = "analysis";
            apply_overrides(cfg, "", *ana_overrides);
            return cmd_analyze(*ana_path, cfg, ana_xopt->count() > 0, *ana_x_min, *ana_a, *ana_b,
                               *ana_out);
        };
    });

    // sweep
    auto* swp = app.add_subcommand("sweep", "fixed-budget scan over a grid of edge counts");
    auto swp_overrides = std::make_shared<std::vector<OverrideOpt>>(make_overrides());
    auto swp_config = std::make_shared<std::string>();
    auto swp_grid = std::make_shared<std::string>();
    auto swp_print = std::make_shared<bool>(false);
    swp->add_option("--config", *swp_config, "key=value configuration file");
    swp->add_option("--e-grid", *swp_grid, "comma-separated edge budgets")->required();
    swp->add_flag("--print-config", *swp_print, "print the effective configuration and exit");
    register_overrides(swp, *swp_overrides);
    swp->callback([&action, swp_config, swp_grid, swp_print, swp_overrides] {
        action = [swp_config, swp_grid, swp_print, swp_overrides] {
            RunConfig cfg;
            cfg.prefix = "sweep";
            apply_overrides(cfg, *swp_config, *swp_overrides);
            return cmd_sweep(cfg, *swp_grid, *swp_print);
        };
    });

    // reproduce-table1
    auto* rep = app.add_subcommand("reproduce-table1",
                                   "re-run the six published parameter rows and check tolerances");
    auto rep_overrides = std::make_shared<std::vector<OverrideOpt>>(make_overrides());
    auto rep_rows = std::make_shared<std::string>("abcdef");
    auto rep_write = std::make_shared<bool>(false);
    rep->add_option("--rows", *rep_rows, "subset of rows to run, e.g. 'acf'");
    rep->add_flag("--write", *rep_write, "write per-row outputs");
    register_overrides(rep, *rep_overrides);
    rep->callback([&action, rep_rows, rep_write, rep_overrides] {
        action = [rep_rows, rep_write, rep_overrides] {
            RunConfig cfg;
            // reproduction-tuned defaults; flags still override
            cfg.spec.opt.max_iters = 400'000;
            cfg.spec.opt.stall_limit = 40'000;
            apply_overrides(cfg, "", *rep_overrides);
            return cmd_reproduce(cfg, *rep_rows, *rep_write);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return exit_config;
    }

    try {
        return action();
    } catch (const std::exception& ex) {
        return map_exception(ex);
    }
}
