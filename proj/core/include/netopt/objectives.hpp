#pragma once

#include <cstdint>
#include <vector>

#include "netopt/graph.hpp"
#include "netopt/model.hpp"

namespace netopt {

// x_i^a * x_j^b: the edge degree of (i,j) relative to endpoint i.
double edge_degree(int x_i, int x_j, double a, double b);

// Total degree objective: sum of node degrees == 2m.
std::int64_t f1(const Graph& g);

// Edge-degree objective: sum over ordered adjacent pairs (i,j) of
// deg(i)^a * deg(j)^b, so each undirected edge contributes both orientations.
double f2(const Graph& g, double a, double b);

// f2 after replacing `removed` by `added` minus f2 before, where the two
// edges share one endpoint. O(deg) instead of O(m).
double f2_delta(const Graph& g, Edge removed, Edge added, double a, double b);

// Exponent the degree distribution is predicted to follow: 1 + a + b.
double predicted_exponent(double a, double b);

// Normalized discrete power law on support [1, n-1] with exponent 1+a+b.
double discrete_power_pdf(int x, double a, double b, int n);

// Continuous power-law density ((gamma-1)/x_min) * (x/x_min)^(-gamma).
double continuous_power_pdf(double x, double gamma, int x_min);

// Precomputed integer powers x^e for x in [0, max_x]. Integer exponents use
// exact repeated multiplication; fractional ones fall back to std::pow.
class PowerTable {
  public:
    PowerTable(double exponent, int max_x);
    double operator[](int x) const { return table_[x]; }
    int max_x() const { return static_cast<int>(table_.size()) - 1; }

  private:
    std::vector<double> table_;
};

// Pair-scale functors let the same accumulation kernels serve the base
// objective (unit scale) and the community-weighted one.
struct UnitScale {
    double operator()(int, int) const { return 1.0; }
};

template <class Scale>
double f2_weighted(const Graph& g, const PowerTable& pa, const PowerTable& pb, const Scale& scale) {
    double total = 0.0;
    const int n = g.n();
    for (int i = 0; i < n; ++i) {
        const double pai = pa[g.degree(i)];
        for (int j : g.neighbors(i)) total += pai * pb[g.degree(j)] * scale(i, j);
    }
    return total;
}

// Change in f2_weighted caused by replacing edge (u,v) with edge (u,w).
// Preconditions (not rechecked here; the public f2_delta wrapper validates):
// (u,v) present, (u,w) absent, u/v/w distinct, deg(v) >= 2.
template <class Scale>
double f2_delta_weighted(const Graph& g, int u, int v, int w, const PowerTable& pa,
                         const PowerTable& pb, const Scale& scale) {
    const int du = g.degree(u);
    const int dv = g.degree(v);
    const int dw = g.degree(w);
    // removed edge, evaluated at pre-move degrees
    double delta = -(pa[du] * pb[dv] + pa[dv] * pb[du]) * scale(u, v);
    // v loses a degree: rescale its remaining incident terms
    const double dpa_v = pa[dv - 1] - pa[dv];
    const double dpb_v = pb[dv - 1] - pb[dv];
    for (int t : g.neighbors(v)) {
        if (t == u || t == w) continue;
        delta += dpa_v * pb[g.degree(t)] * scale(v, t) + pa[g.degree(t)] * dpb_v * scale(t, v);
    }
    // w gains a degree: rescale its incident terms
    const double dpa_w = pa[dw + 1] - pa[dw];
    const double dpb_w = pb[dw + 1] - pb[dw];
    for (int t : g.neighbors(w)) {
        if (t == v) continue;
        delta += dpa_w * pb[g.degree(t)] * scale(w, t) + pa[g.degree(t)] * dpb_w * scale(t, w);
    }
    // if v and w are adjacent both endpoints change degree at once
    if (g.has_edge(v, w)) {
        delta += (pa[dv - 1] * pb[dw + 1] - pa[dv] * pb[dw]) * scale(v, w) +
                 (pa[dw + 1] * pb[dv - 1] - pa[dw] * pb[dv]) * scale(w, v);
    }
    // added edge, evaluated at post-move degrees
    delta += pa[du] * pb[dw + 1] * scale(u, w) + pa[dw + 1] * pb[du] * scale(w, u);
    return delta;
}

}  // namespace netopt
