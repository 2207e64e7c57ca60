#include "netopt/graph.hpp"

#include <algorithm>
#include <string>

#include "netopt/errors.hpp"
#include "netopt/rng.hpp"

namespace netopt {

Graph::Graph(int n) {
    if (n < 0) throw graph_error("negative node count");
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= n()) throw graph_error("node id out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (u == v) throw graph_error("self-loop rejected: " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        throw graph_error("duplicate edge rejected: " + std::to_string(u) + "-" + std::to_string(v));
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_node(u);
    check_node(v);
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v)
        throw graph_error("missing edge: " + std::to_string(u) + "-" + std::to_string(v));
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --m_;
}

AsplEvaluator::AsplEvaluator(int n)
    : dist_(static_cast<std::size_t>(n)), queue_(static_cast<std::size_t>(n)) {}

int AsplEvaluator::bfs(const Graph& g, int src, std::vector<int>& dist) {
    const int n = g.n();
    dist.assign(static_cast<std::size_t>(n), -1);
    int head = 0, tail = 0;
    dist[src] = 0;
    queue_[tail++] = src;
    while (head < tail) {
        int u = queue_[head++];
        int du = dist[u] + 1;
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = du;
                queue_[tail++] = w;
            }
        }
    }
    return tail;
}

std::int64_t AsplEvaluator::total_ordered_distance(const Graph& g) {
    const int n = g.n();
    std::int64_t total = 0;
    for (int s = 0; s < n; ++s) {
        int reached = bfs(g, s, dist_);
        if (reached != n) return -1;  // first BFS already covers this; later ones can't fail after it passes
        for (int v = 0; v < n; ++v) total += dist_[v];
    }
    return total;
}

std::int64_t AsplEvaluator::rows_total(const Graph& g, const std::vector<int>& sources) {
    const int n = g.n();
    std::int64_t total = 0;
    for (int s : sources) {
        int reached = bfs(g, s, dist_);
        if (reached != n) return -1;
        for (int v = 0; v < n; ++v) total += dist_[v];
    }
    return total;
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.n();
    DistanceMatrix dm;
    dm.n = n;
    dm.d.resize(static_cast<std::size_t>(n) * n);
    AsplEvaluator ev(n);
    std::vector<int> row;
    for (int s = 0; s < n; ++s) {
        ev.bfs(g, s, row);
        std::copy(row.begin(), row.end(), dm.d.begin() + static_cast<std::size_t>(s) * n);
    }
    return dm;
}

bool is_connected(const Graph& g) {
    const int n = g.n();
    if (n == 0) return true;
    AsplEvaluator ev(n);
    std::vector<int> dist;
    return ev.bfs(g, 0, dist) == n;
}

double avg_shortest_path(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw graph_error("average shortest path needs at least 2 nodes");
    AsplEvaluator ev(n);
    std::int64_t total = ev.total_ordered_distance(g);
    if (total < 0) throw disconnected_error();
    return static_cast<double>(total) / (static_cast<double>(n) * (n - 1));
}

double approx_avg_shortest_path(const Graph& g, int sample_size, std::uint64_t seed) {
    const int n = g.n();
    if (n < 2) throw graph_error("average shortest path needs at least 2 nodes");
    if (sample_size < 1 || sample_size > n)
        throw graph_error("sample_size must be in [1, n]");
    // partial Fisher-Yates over the id range; with sample_size == n this is a
    // permutation of all nodes, so the estimate degenerates to the exact value
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[i] = i;
    Rng rng(seed);
    std::vector<int> sources;
    sources.reserve(static_cast<std::size_t>(sample_size));
    for (int i = 0; i < sample_size; ++i) {
        int j = i + rng.index(n - i);
        std::swap(pool[i], pool[j]);
        sources.push_back(pool[i]);
    }
    AsplEvaluator ev(n);
    std::int64_t total = ev.rows_total(g, sources);
    if (total < 0) throw disconnected_error();
    return static_cast<double>(total) / (static_cast<double>(sample_size) * (n - 1));
}

int diameter(const Graph& g) {
    const int n = g.n();
    if (n < 1) throw graph_error("diameter needs at least 1 node");
    AsplEvaluator ev(n);
    std::vector<int> dist;
    int best = 0;
    for (int s = 0; s < n; ++s) {
        if (ev.bfs(g, s, dist) != n) throw disconnected_error();
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

double clustering_coefficient(const Graph& g) {
    const int n = g.n();
    if (n < 3) throw graph_error("clustering coefficient needs at least 3 nodes");
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
        const auto& nv = g.neighbors(v);
        const int d = static_cast<int>(nv.size());
        if (d < 2) continue;
        // count edges among neighbors of v (each triangle edge found once)
        long links = 0;
        for (std::size_t i = 0; i < nv.size(); ++i) {
            const auto& ni = g.neighbors(nv[i]);
            for (std::size_t j = i + 1; j < nv.size(); ++j)
                if (std::binary_search(ni.begin(), ni.end(), nv[j])) ++links;
        }
        sum += 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
    }
    return sum / n;
}

}  // namespace netopt
