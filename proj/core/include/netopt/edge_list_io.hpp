#pragma once

#include <string>
#include <vector>

#include "netopt/graph.hpp"

namespace netopt {

// Canonical edge-list format: optional "# nodes=N" header, then one edge per
// line as "u v" with u < v, lines in lexicographic order. '#' lines are
// comments. Node count defaults to max id + 1 when no header is present.
Graph read_edge_list(const std::string& path);
void write_edge_list(const Graph& g, const std::string& path);

// In-memory variants (testing and piping).
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// Two-column "node-id community-id" file.
std::vector<int> read_assignment(const std::string& path, int n);
void write_assignment(const std::vector<int>& assignment, const std::string& path);

}  // namespace netopt
