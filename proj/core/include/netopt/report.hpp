#pragma once

#include <string>

#include "netopt/driver.hpp"

namespace netopt {

std::string render_report_json(const RunSpec& spec, const RunOutcome& outcome);
std::string render_report_text(const RunSpec& spec, const RunOutcome& outcome);

std::string histogram_tsv(const DegreeHistogram& histogram);
std::string box_curve_tsv(const BoxCoverResult& box);
std::string trace_tsv(const RunTrace& trace);
std::string front_tsv(const std::vector<SweepPoint>& front);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace netopt
