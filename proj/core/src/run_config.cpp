#include "netopt/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "netopt/errors.hpp"

namespace netopt {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& key, const std::string& value) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw config_error("invalid integer for " + key + ": '" + value + "'");
    return out;
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double out = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing");
        return out;
    } catch (const std::exception&) {
        throw config_error("invalid number for " + key + ": '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw config_error("invalid boolean for " + key + ": '" + value + "'");
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
    auto& m = spec.model;
    auto& o = spec.opt;
    auto& t = spec.thresholds;
    if (key == "n") m.n = static_cast<int>(parse_int(key, value));
    else if (key == "a") m.a = parse_real(key, value);
    else if (key == "b") m.b = parse_real(key, value);
    else if (key == "x_min") m.x_min = static_cast<int>(parse_int(key, value));
    else if (key == "c") m.c = parse_real(key, value);
    else if (key == "e") m.e = parse_int(key, value);
    else if (key == "max_iters") o.max_iters = static_cast<long>(parse_int(key, value));
    else if (key == "stall_limit") o.stall_limit = static_cast<long>(parse_int(key, value));
    else if (key == "aspl_tolerance") o.aspl_tolerance = parse_real(key, value);
    else if (key == "seed") {
        o.seed = static_cast<std::uint64_t>(parse_int(key, value));
        seed_explicit = true;
    } else if (key == "acceptance") {
        if (value == "greedy") o.acceptance = Acceptance::greedy;
        else if (value == "anneal") o.acceptance = Acceptance::anneal;
        else throw config_error("acceptance must be greedy or anneal, got '" + value + "'");
    } else if (key == "anneal_t0") o.anneal.initial_temperature = parse_real(key, value);
    else if (key == "anneal_decay") o.anneal.decay = parse_real(key, value);
    else if (key == "anneal_steps") o.anneal.iterations_per_decay = static_cast<long>(parse_int(key, value));
    else if (key == "aspl_mode") {
        if (value == "exact") o.aspl_mode = AsplMode::exact;
        else if (value == "sampled") o.aspl_mode = AsplMode::sampled;
        else throw config_error("aspl_mode must be exact or sampled, got '" + value + "'");
    } else if (key == "sample_size") o.sample_size = static_cast<int>(parse_int(key, value));
    else if (key == "community") spec.community = parse_bool(key, value);
    else if (key == "k") spec.k = static_cast<int>(parse_int(key, value));
    else if (key == "s") spec.s = parse_real(key, value);
    else if (key == "delta") t.delta = parse_real(key, value);
    else if (key == "delta_sw") t.delta_sw = parse_real(key, value);
    else if (key == "r2_threshold") t.r2_threshold = parse_real(key, value);
    else if (key == "q_threshold") t.q_threshold = parse_real(key, value);
    else if (key == "shift_base") t.shift_base = parse_real(key, value);
    else if (key == "baseline_samples") t.baseline_samples = static_cast<int>(parse_int(key, value));
    else if (key == "out_dir") out_dir = value;
    else if (key == "prefix") prefix = value;
    else if (key == "report_format") {
        if (value != "json" && value != "text")
            throw config_error("report_format must be json or text, got '" + value + "'");
        report_format = value;
    } else {
        throw config_error("unknown configuration key: '" + key + "'");
    }
}

void RunConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config: " + path);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw io_error("expected key = value in config", line_no);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        try {
            set(key, value);
        } catch (const config_error& ex) {
            throw config_error(std::string(ex.what()) + " (config line " + std::to_string(line_no) + ")");
        }
    }
}

std::string RunConfig::print() const {
    const auto& m = spec.model;
    const auto& o = spec.opt;
    const auto& t = spec.thresholds;
    std::ostringstream out;
    out << "n = " << m.n << "\n"
        << "a = " << m.a << "\n"
        << "b = " << m.b << "\n"
        << "x_min = " << m.x_min << "\n"
        << "c = " << m.c << "\n"
        << "e = " << m.e << "\n"
        << "max_iters = " << o.max_iters << "\n"
        << "stall_limit = " << o.stall_limit << "\n"
        << "aspl_tolerance = " << o.aspl_tolerance << "\n"
        << "seed = " << o.seed << "\n"
        << "acceptance = " << (o.acceptance == Acceptance::greedy ? "greedy" : "anneal") << "\n"
        << "anneal_t0 = " << o.anneal.initial_temperature << "\n"
        << "anneal_decay = " << o.anneal.decay << "\n"
        << "anneal_steps = " << o.anneal.iterations_per_decay << "\n"
        << "aspl_mode = " << (o.aspl_mode == AsplMode::exact ? "exact" : "sampled") << "\n"
        << "sample_size = " << o.sample_size << "\n"
        << "community = " << (spec.community ? "true" : "false") << "\n"
        << "k = " << spec.k << "\n"
        << "s = " << spec.s << "\n"
        << "delta = " << t.delta << "\n"
        << "delta_sw = " << t.delta_sw << "\n"
        << "r2_threshold = " << t.r2_threshold << "\n"
        << "q_threshold = " << t.q_threshold << "\n"
        << "shift_base = " << t.shift_base << "\n"
        << "baseline_samples = " << t.baseline_samples << "\n"
        << "out_dir = " << out_dir << "\n"
        << "prefix = " << prefix << "\n"
        << "report_format = " << report_format << "\n";
    return out.str();
}

void RunConfig::validate() const {
    spec.model.validate();
    spec.opt.validate();
    if (spec.community) {
        if (spec.k < 2) throw config_error("community count k must be at least 2");
        if (spec.k > spec.model.n) throw config_error("community count k exceeds node count");
        if (!(spec.s > 0.0 && spec.s <= 1.0)) throw config_error("attenuation s must lie in (0, 1]");
    }
}

}  // namespace netopt
