#include "netopt/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "netopt/errors.hpp"
#include "netopt/version.hpp"

namespace netopt {

namespace {

nlohmann::json build_report(const RunSpec& spec, const RunOutcome& outcome) {
    nlohmann::json j;
    j["version"] = version_string;
    j["seed"] = spec.opt.seed;
    j["wall_seconds"] = outcome.trace.wall_seconds;

    j["params"] = {
        {"n", spec.model.n}, {"a", spec.model.a},     {"b", spec.model.b},
        {"x_min", spec.model.x_min}, {"c", spec.model.c}, {"e", spec.model.e},
    };
    if (spec.community) {
        j["params"]["community"] = true;
        j["params"]["k"] = spec.k;
        j["params"]["s"] = spec.s;
    }

    j["optimizer"] = {
        {"max_iters", spec.opt.max_iters},
        {"stall_limit", spec.opt.stall_limit},
        {"aspl_tolerance", spec.opt.aspl_tolerance},
        {"acceptance", spec.opt.acceptance == Acceptance::greedy ? "greedy" : "anneal"},
        {"aspl_mode", spec.opt.aspl_mode == AsplMode::exact ? "exact" : "sampled"},
        {"sample_size", spec.opt.sample_size},
        {"iterations", outcome.trace.iterations},
        {"accepted", outcome.trace.accepted},
        {"rejected", outcome.trace.rejected},
        {"converged", outcome.trace.converged},
    };

    j["objectives"] = {{"f1", outcome.trace.final_values.f1}, {"f2", outcome.trace.final_values.f2}};
    j["y"] = outcome.y_reported;
    j["gap"] = std::abs(outcome.y_reported - spec.model.c);

    const AnalysisReport& a = outcome.analysis;
    nlohmann::json ja = {
        {"gamma_hat", a.fit.gamma_hat},
        {"fit_x_min", a.fit.x_min_used},
        {"ks_statistic", a.fit.ks_statistic},
        {"n_tail", a.fit.n_tail},
        {"fit_degenerate", a.fit.degenerate},
        {"clustering", a.clustering},
        {"diameter", a.diameter},
        {"w_exponent", a.w_exponent},
        {"label", to_string(a.classification.label)},
        {"low_confidence", a.classification.low_confidence},
        {"evidence", a.classification.evidence},
    };
    if (a.box) {
        ja["d_b"] = a.box->d_b;
        ja["box_r2"] = a.box->r2;
    }
    j["analysis"] = ja;

    if (outcome.planted_modularity) j["modularity"] = *outcome.planted_modularity;
    return j;
}

}  // namespace

std::string render_report_json(const RunSpec& spec, const RunOutcome& outcome) {
    return build_report(spec, outcome).dump(2) + "\n";
}

std::string render_report_text(const RunSpec& spec, const RunOutcome& outcome) {
    nlohmann::json flat = build_report(spec, outcome).flatten();
    std::ostringstream out;
    for (const auto& [pointer, value] : flat.items()) {
        std::string key = pointer.substr(1);  // drop leading '/'
        for (char& ch : key)
            if (ch == '/') ch = '.';
        out << key << " = " << value.dump() << "\n";
    }
    return out.str();
}

std::string histogram_tsv(const DegreeHistogram& histogram) {
    std::ostringstream out;
    out << "degree\tcount\tpdf\n";
    for (const auto& bin : histogram.bins)
        out << bin.degree << "\t" << bin.count << "\t" << bin.probability << "\n";
    return out.str();
}

std::string box_curve_tsv(const BoxCoverResult& box) {
    std::ostringstream out;
    out << "l_b\tn_b\n";
    for (const auto& point : box.curve) out << point.l_b << "\t" << point.n_b << "\n";
    return out.str();
}

std::string trace_tsv(const RunTrace& trace) {
    std::ostringstream out;
    out << "iteration\tf2\ty\tgap\n";
    for (const auto& rec : trace.records)
        out << rec.iteration << "\t" << rec.f2 << "\t" << rec.y << "\t" << rec.gap << "\n";
    return out.str();
}

std::string front_tsv(const std::vector<SweepPoint>& front) {
    std::ostringstream out;
    out << "e\tf1\tf2\ty\tconverged\n";
    for (const auto& point : front) {
        if (point.ok) {
            out << point.e << "\t" << point.values.f1 << "\t" << point.values.f2 << "\t" << point.y
                << "\t" << (point.converged ? 1 : 0) << "\n";
        } else {
            out << point.e << "\t-\t-\t-\t-\n";
        }
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write: " + path);
    out << content;
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace netopt
