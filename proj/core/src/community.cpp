#include "netopt/community.hpp"

#include <algorithm>
#include <string>

#include "netopt/errors.hpp"
#include "netopt/objectives.hpp"
#include "netopt/rng.hpp"

namespace netopt {

void CommunityParams::validate() const {
    model.validate();
    if (k < 2) throw config_error("community count k must be at least 2");
    if (k > model.n) throw config_error("community count k exceeds node count");
    if (!(s > 0.0 && s <= 1.0)) throw config_error("attenuation s must lie in (0, 1]");
    if (static_cast<int>(assignment.size()) != model.n)
        throw config_error("assignment must label every node");
    for (int label : assignment)
        if (label < 0 || label >= k)
            throw config_error("assignment label out of range: " + std::to_string(label));
}

std::vector<int> assign_communities(int n, int k, std::uint64_t seed) {
    if (k < 1 || k > n) throw config_error("need 1 <= k <= n communities");
    std::vector<int> labels(static_cast<std::size_t>(n));
    // round-robin fill guarantees balance, then a Fisher-Yates shuffle
    for (int i = 0; i < n; ++i) labels[i] = i % k;
    Rng rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = rng.index(i + 1);
        std::swap(labels[i], labels[j]);
    }
    return labels;
}

double f2_community(const Graph& g, const CommunityParams& params) {
    if (static_cast<int>(params.assignment.size()) != g.n())
        throw config_error("assignment must label every node");
    int cap = 1;
    for (int v = 0; v < g.n(); ++v) cap = std::max(cap, g.degree(v) + 1);
    PowerTable pa(params.model.a, cap), pb(params.model.b, cap);
    return f2_weighted(g, pa, pb, CommunityScale{params.assignment.data(), params.s});
}

double modularity(const Graph& g, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != g.n())
        throw config_error("assignment must label every node");
    const double m = static_cast<double>(g.m());
    if (m <= 0.0) throw graph_error("modularity needs at least one edge");
    int k = 0;
    for (int label : assignment) k = std::max(k, label + 1);
    std::vector<double> internal(static_cast<std::size_t>(k), 0.0);
    std::vector<double> degree_sum(static_cast<std::size_t>(k), 0.0);
    for (int u = 0; u < g.n(); ++u) {
        degree_sum[assignment[u]] += g.degree(u);
        for (int v : g.neighbors(u))
            if (u < v && assignment[u] == assignment[v]) internal[assignment[u]] += 1.0;
    }
    double q = 0.0;
    for (int c = 0; c < k; ++c) {
        const double frac = degree_sum[c] / (2.0 * m);
        q += internal[c] / m - frac * frac;
    }
    return q;
}

}  // namespace netopt
