#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "netopt/edge_list_io.hpp"
#include "netopt/errors.hpp"
#include "netopt/graph.hpp"
#include "oracles.hpp"

using namespace netopt;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("netopt_io_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("canonical text form") {
    Graph g(4);
    g.add_edge(2, 0);
    g.add_edge(0, 1);
    g.add_edge(3, 2);
    CHECK(format_edge_list(g) == "# nodes=4\n0 1\n0 2\n2 3\n");
}

TEST_CASE("isolated trailing nodes survive the header round trip") {
    Graph g(5);
    g.add_edge(0, 1);
    Graph back = parse_edge_list(format_edge_list(g));
    CHECK(back.n() == 5);
    CHECK(back.m() == 1);
}

TEST_CASE("parse and format are mutually inverse") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = oracles::random_connected_graph(24, 60, seed + 60);
        const std::string text = format_edge_list(g);
        Graph back = parse_edge_list(text);
        CHECK(back.n() == g.n());
        CHECK(back.m() == g.m());
        for (int u = 0; u < g.n(); ++u) CHECK(back.neighbors(u) == g.neighbors(u));
        CHECK(format_edge_list(back) == text);
    }
}

TEST_CASE("header is optional") {
    Graph g = parse_edge_list("0 1\n1 2\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);
}

TEST_CASE("comments and blank lines are skipped") {
    Graph g = parse_edge_list("# nodes=4\n# a comment\n\n0 1\n\n# another\n2 3\n");
    CHECK(g.n() == 4);
    CHECK(g.m() == 2);
}

TEST_CASE("malformed input is reported with its line") {
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 1\n"), io_error);       // self loop
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 x\n"), io_error);       // bad token
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), io_error);          // too many fields
    CHECK_THROWS_AS(parse_edge_list("# nodes=2\n0 5\n"), io_error); // id beyond header
    CHECK_THROWS_AS(parse_edge_list("0 1\n0 1\n"), io_error);       // duplicate edge
    try {
        parse_edge_list("0 1\n1 1\n");
        FAIL("expected io_error");
    } catch (const io_error& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("file round trip") {
    TempDir tmp;
    Graph g = oracles::random_connected_graph(30, 70, 9);
    const std::string path = tmp.file("g.edges");
    write_edge_list(g, path);
    Graph back = read_edge_list(path);
    CHECK(format_edge_list(back) == format_edge_list(g));
}

TEST_CASE("missing file is an io error") {
    CHECK_THROWS_AS(read_edge_list("/nonexistent/definitely/missing.edges"), io_error);
    CHECK_THROWS_AS(read_assignment("/nonexistent/definitely/missing.comm", 4), io_error);
}

TEST_CASE("assignment file round trip") {
    TempDir tmp;
    const std::string path = tmp.file("labels.comm");
    std::vector<int> labels = {1, 0, 0, 2, 1};
    write_assignment(labels, path);
    CHECK(read_assignment(path, 5) == labels);
    // node count mismatch is detected
    CHECK_THROWS_AS(read_assignment(path, 4), io_error);
    CHECK_THROWS_AS(read_assignment(path, 6), io_error);
}

TEST_CASE("assignment parser rejects junk") {
    TempDir tmp;
    const std::string path = tmp.file("bad.comm");
    std::ofstream(path) << "0 0\n1 zero\n";
    CHECK_THROWS_AS(read_assignment(path, 2), io_error);
}

}  // TEST_SUITE
