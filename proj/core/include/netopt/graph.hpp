#pragma once

#include <cstdint>
#include <vector>

namespace netopt {

struct Edge {
    int u = 0;
    int v = 0;
};

// Undirected simple graph on dense node ids 0..n-1.
// Neighbor lists are kept sorted so membership tests are O(log deg) and
// serialized output is canonical without extra sorting.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return static_cast<int>(adj_.size()); }
    std::int64_t m() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // Total degree: sum of degree(v) == 2*m().
    std::int64_t degree_sum() const { return 2 * m_; }

  private:
    void check_node(int v) const;

    std::vector<std::vector<int>> adj_;
    std::int64_t m_ = 0;
};

// All-pairs hop distances; -1 marks unreachable pairs.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;  // row-major n*n

    int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

DistanceMatrix distance_matrix(const Graph& g);

bool is_connected(const Graph& g);

// Exact mean hop distance over distinct pairs, via one BFS per node.
// Throws disconnected_error / config-level errors per contract.
double avg_shortest_path(const Graph& g);

// Mean pair distance estimated from BFS rows of sample_size distinct source
// nodes drawn uniformly (without replacement). sample_size == n reproduces
// avg_shortest_path exactly, bit for bit.
double approx_avg_shortest_path(const Graph& g, int sample_size, std::uint64_t seed);

int diameter(const Graph& g);

// Mean over all nodes of the local clustering coefficient; nodes of degree
// < 2 contribute 0 but stay in the denominator.
double clustering_coefficient(const Graph& g);

// Reusable BFS scratch space for the optimizer hot loop: no allocation per
// evaluation. Not thread-safe; use one instance per thread.
class AsplEvaluator {
  public:
    explicit AsplEvaluator(int n);

    // Sum of ordered-pair distances, or -1 if the graph is disconnected
    // (detected on the first BFS, so rejected moves abort early).
    std::int64_t total_ordered_distance(const Graph& g);

    // Sum over BFS rows of the given sources, or -1 if disconnected.
    std::int64_t rows_total(const Graph& g, const std::vector<int>& sources);

    // One BFS; fills dist (-1 = unreached) and returns the count reached.
    int bfs(const Graph& g, int src, std::vector<int>& dist);

  private:
    std::vector<int> dist_;
    std::vector<int> queue_;
};

}  // namespace netopt
