#include "netopt/edge_list_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "netopt/errors.hpp"

namespace netopt {

namespace {

struct ParsedLine {
    long line_no;
    int u;
    int v;
};

bool parse_int(std::string_view token, int& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

Graph parse_stream(std::istream& in) {
    std::string line;
    long line_no = 0;
    long header_nodes = -1;
    std::vector<ParsedLine> edges;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        std::size_t first = view.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;
        if (view[first] == '#') {
            const std::string_view key = "nodes=";
            auto pos = view.find(key);
            if (pos != std::string_view::npos) {
                int n = 0;
                auto rest = view.substr(pos + key.size());
                auto end = rest.find_first_of(" \t");
                if (!parse_int(rest.substr(0, end), n) || n < 0)
                    throw io_error("malformed nodes header", line_no);
                header_nodes = n;
            }
            continue;
        }
        auto tokens = split_ws(view);
        if (tokens.size() != 2) throw io_error("expected two node ids", line_no);
        int u = 0, v = 0;
        if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v) || u < 0 || v < 0)
            throw io_error("invalid node id", line_no);
        if (u == v) throw io_error("self-loop", line_no);
        edges.push_back({line_no, u, v});
        max_id = std::max({max_id, u, v});
    }
    long n = header_nodes >= 0 ? header_nodes : static_cast<long>(max_id) + 1;
    if (header_nodes >= 0 && max_id >= header_nodes)
        throw io_error("node id " + std::to_string(max_id) + " exceeds declared node count");
    Graph g(static_cast<int>(n));
    for (const auto& pe : edges) {
        try {
            g.add_edge(pe.u, pe.v);
        } catch (const graph_error& ex) {
            throw io_error(ex.what(), pe.line_no);
        }
    }
    return g;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_stream(in);
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open edge list: " + path);
    return parse_stream(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# nodes=" << g.n() << "\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << " " << v << "\n";
    return out.str();
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write edge list: " + path);
    out << format_edge_list(g);
    if (!out) throw io_error("write failed: " + path);
}

std::vector<int> read_assignment(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open assignment: " + path);
    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens.size() != 2) throw io_error("expected node and community id", line_no);
        int node = 0, label = 0;
        if (!parse_int(tokens[0], node) || !parse_int(tokens[1], label) || node < 0 || label < 0)
            throw io_error("invalid id", line_no);
        if (node >= n) throw io_error("node id out of range", line_no);
        assignment[node] = label;
    }
    for (std::size_t i = 0; i < assignment.size(); ++i)
        if (assignment[i] < 0)
            throw io_error("node " + std::to_string(i) + " has no community label");
    return assignment;
}

void write_assignment(const std::vector<int>& assignment, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write assignment: " + path);
    for (std::size_t i = 0; i < assignment.size(); ++i)
        out << i << " " << assignment[i] << "\n";
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace netopt
