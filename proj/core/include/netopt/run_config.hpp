#pragma once

#include <string>

#include "netopt/driver.hpp"

namespace netopt {

// Flat key=value configuration mirroring RunSpec, with strict key checking.
// Files use one "key = value" pair per line; '#' starts a comment.
struct RunConfig {
    RunSpec spec;
    std::string out_dir = ".";
    std::string prefix = "run";
    std::string report_format = "json";
    bool seed_explicit = false;  // explicit seed beats the environment default

    void set(const std::string& key, const std::string& value);
    void load_file(const std::string& path);
    std::string print() const;  // effective configuration, parseable back
    void validate() const;
};

}  // namespace netopt
