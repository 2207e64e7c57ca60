#pragma once

#include <stdexcept>
#include <string>

namespace netopt {

// Root of the library's error taxonomy. Every throw site uses one of the
// subclasses below so callers can map failures onto process exit codes
// without string matching.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural misuse of a graph: self-loop, duplicate edge, missing edge,
// node id out of range.
struct graph_error : error {
    using error::error;
};

// An operation that requires a connected graph received a disconnected one.
struct disconnected_error : error {
    disconnected_error() : error("graph is not connected") {}
    explicit disconnected_error(const std::string& what) : error(what) {}
};

// Parameter combination that cannot produce a feasible graph
// (edge budget below spanning tree / degree floor, etc.).
struct infeasible_error : error {
    using error::error;
};

// Invalid or inconsistent run configuration (unknown key, bad value).
struct config_error : error {
    using error::error;
};

// File handling and parse failures; carries a line number when parsing.
struct io_error : error {
    explicit io_error(const std::string& what, long line = -1)
        : error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what), line(line) {}
    long line = -1;
};

// Measurement preconditions not met (insufficient tail, too few scales, ...).
struct analysis_error : error {
    using error::error;
};

}  // namespace netopt
