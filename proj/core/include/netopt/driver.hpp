#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netopt/analysis.hpp"
#include "netopt/graph.hpp"
#include "netopt/model.hpp"
#include "netopt/optimizer.hpp"

namespace netopt {

// Everything one generation run needs; shared by the CLI and test harnesses.
struct RunSpec {
    ModelParams model;
    OptimizerConfig opt;
    bool community = false;
    int k = 2;
    double s = 0.5;
    ClassifyThresholds thresholds;
};

struct RunOutcome {
    Graph graph;
    RunTrace trace;
    AnalysisReport analysis;
    std::vector<int> assignment;  // non-empty only for community runs
    std::optional<double> planted_modularity;
    double y_reported = 0.0;  // re-verified exact value when n <= 2000
};

RunOutcome run_model(const RunSpec& spec);

struct OutputPaths {
    std::string edge_list;
    std::string trace;
    std::string histogram;
    std::string box_curve;
    std::string report;
    std::string assignment;
};

OutputPaths default_paths(const std::string& dir, const std::string& prefix);

// Writes whichever outputs have non-empty paths; format is "json" or "text".
void write_run_outputs(const RunSpec& spec, const RunOutcome& outcome, const OutputPaths& paths,
                       const std::string& report_format);

// One-line summary mirroring the reproduction table columns.
std::string summary_row(const RunSpec& spec, const RunOutcome& outcome);

}  // namespace netopt
