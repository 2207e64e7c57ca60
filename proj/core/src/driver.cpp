#include "netopt/driver.hpp"

#include <cmath>
#include <sstream>

#include "netopt/community.hpp"
#include "netopt/edge_list_io.hpp"
#include "netopt/report.hpp"

namespace netopt {

RunOutcome run_model(const RunSpec& spec) {
    RunOutcome out;
    if (spec.community) {
        CommunityParams cp;
        cp.model = spec.model;
        cp.k = spec.k;
        cp.s = spec.s;
        cp.assignment = assign_communities(spec.model.n, spec.k, spec.opt.seed);
        OptimizeResult res = optimize_community(cp, spec.opt);
        out.graph = std::move(res.graph);
        out.trace = std::move(res.trace);
        out.assignment = std::move(cp.assignment);
        out.planted_modularity = modularity(out.graph, out.assignment);
    } else {
        OptimizeResult res = optimize(spec.model, spec.opt);
        out.graph = std::move(res.graph);
        out.trace = std::move(res.trace);
    }
    // reports re-verify y with an exact pass at moderate sizes
    out.y_reported = spec.model.n <= 2000 ? avg_shortest_path(out.graph) : out.trace.final_y;
    out.analysis = analyze_graph(out.graph, spec.model, spec.thresholds, out.planted_modularity);
    return out;
}

OutputPaths default_paths(const std::string& dir, const std::string& prefix) {
    const std::string base = dir.empty() ? prefix : dir + "/" + prefix;
    OutputPaths p;
    p.edge_list = base + ".edges";
    p.trace = base + ".trace.tsv";
    p.histogram = base + ".hist.tsv";
    p.box_curve = base + ".boxes.tsv";
    p.report = base + ".report";
    p.assignment = base + ".communities";
    return p;
}

void write_run_outputs(const RunSpec& spec, const RunOutcome& outcome, const OutputPaths& paths,
                       const std::string& report_format) {
    if (!paths.edge_list.empty()) write_edge_list(outcome.graph, paths.edge_list);
    if (!paths.trace.empty()) write_text_file(paths.trace, trace_tsv(outcome.trace));
    if (!paths.histogram.empty())
        write_text_file(paths.histogram, histogram_tsv(outcome.analysis.histogram));
    if (!paths.box_curve.empty() && outcome.analysis.box)
        write_text_file(paths.box_curve, box_curve_tsv(*outcome.analysis.box));
    if (!paths.report.empty()) {
        const std::string body = report_format == "text" ? render_report_text(spec, outcome)
                                                         : render_report_json(spec, outcome);
        write_text_file(paths.report, body);
    }
    if (!paths.assignment.empty() && !outcome.assignment.empty())
        write_assignment(outcome.assignment, paths.assignment);
}

std::string summary_row(const RunSpec& spec, const RunOutcome& outcome) {
    std::ostringstream out;
    out << "E=" << spec.model.e << " c=" << spec.model.c << " x_min=" << spec.model.x_min
        << " gamma=" << outcome.analysis.fit.gamma_hat << " y=" << outcome.y_reported
        << " label=" << to_string(outcome.analysis.classification.label)
        << (outcome.trace.converged ? "" : " [not converged]");
    return out.str();
}

}  // namespace netopt
