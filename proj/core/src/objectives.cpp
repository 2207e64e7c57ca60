#include "netopt/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "netopt/errors.hpp"

namespace netopt {

namespace {

bool integral_exponent(double e) { return e >= 0.0 && e <= 64.0 && e == std::floor(e); }

double int_pow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

double power(double x, double e) {
    if (e == 0.0) return 1.0;  // 0^0 convention: degrees are >= 1 anyway
    if (integral_exponent(e)) return int_pow(x, static_cast<int>(e));
    return std::pow(x, e);
}

}  // namespace

void ModelParams::validate() const {
    if (n < 2) throw config_error("n must be at least 2");
    if (x_min < 1) throw config_error("x_min must be at least 1");
    if (n <= x_min) throw config_error("n must exceed x_min");
    if (a < 0.0 || b < 0.0) throw config_error("exponents a, b must be non-negative");
    if (c < 1.0) throw config_error("target path length c must be at least 1");
    const std::int64_t nn = n;
    const std::int64_t max_e = nn * (nn - 1) / 2;
    const std::int64_t floor_e = (nn * x_min + 1) / 2;
    if (e < nn - 1)
        throw infeasible_error("edge budget " + std::to_string(e) + " below spanning-tree minimum " +
                               std::to_string(nn - 1));
    if (e < floor_e)
        throw infeasible_error("edge budget " + std::to_string(e) + " below degree-floor minimum " +
                               std::to_string(floor_e));
    if (e > max_e)
        throw infeasible_error("edge budget " + std::to_string(e) + " exceeds simple-graph maximum " +
                               std::to_string(max_e));
}

PowerTable::PowerTable(double exponent, int max_x) {
    table_.resize(static_cast<std::size_t>(max_x) + 1);
    for (int x = 0; x <= max_x; ++x) table_[x] = power(static_cast<double>(x), exponent);
}

double edge_degree(int x_i, int x_j, double a, double b) {
    if (x_i < 1 || x_j < 1) throw graph_error("edge degree requires degrees >= 1");
    return power(static_cast<double>(x_i), a) * power(static_cast<double>(x_j), b);
}

std::int64_t f1(const Graph& g) { return g.degree_sum(); }

namespace {

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

}  // namespace

double f2(const Graph& g, double a, double b) {
    const int cap = max_degree(g) + 1;
    PowerTable pa(a, cap), pb(b, cap);
    return f2_weighted(g, pa, pb, UnitScale{});
}

double f2_delta(const Graph& g, Edge removed, Edge added, double a, double b) {
    auto same = [](Edge e, Edge f) {
        return (e.u == f.u && e.v == f.v) || (e.u == f.v && e.v == f.u);
    };
    if (same(removed, added)) return 0.0;  // identity move
    // orient so both edges share endpoint u
    int u, v, w;
    if (removed.u == added.u) {
        u = removed.u; v = removed.v; w = added.v;
    } else if (removed.u == added.v) {
        u = removed.u; v = removed.v; w = added.u;
    } else if (removed.v == added.u) {
        u = removed.v; v = removed.u; w = added.v;
    } else if (removed.v == added.v) {
        u = removed.v; v = removed.u; w = added.u;
    } else {
        throw graph_error("rewiring move must share an endpoint");
    }
    if (u == v || u == w || v == w) throw graph_error("rewiring move endpoints must be distinct");
    if (!g.has_edge(u, v)) throw graph_error("removed edge absent");
    if (g.has_edge(u, w)) throw graph_error("added edge already present");
    if (g.degree(v) < 2) throw graph_error("move would drop a degree below 1");
    const int cap = max_degree(g) + 2;
    PowerTable pa(a, cap), pb(b, cap);
    return f2_delta_weighted(g, u, v, w, pa, pb, UnitScale{});
}

double predicted_exponent(double a, double b) {
    if (a < 0.0 || b < 0.0) throw config_error("exponents a, b must be non-negative");
    return 1.0 + a + b;
}

double discrete_power_pdf(int x, double a, double b, int n) {
    if (n < 2) throw config_error("support needs n >= 2");
    if (x < 1 || x > n - 1) throw config_error("x outside support [1, n-1]");
    const double gamma = 1.0 + a + b;
    double norm = 0.0;
    for (int k = 1; k <= n - 1; ++k) norm += power(static_cast<double>(k), -gamma);
    return power(static_cast<double>(x), -gamma) / norm;
}

double continuous_power_pdf(double x, double gamma, int x_min) {
    if (gamma <= 1.0) throw analysis_error("continuous power law needs gamma > 1");
    if (x_min < 1) throw analysis_error("x_min must be positive");
    if (x < x_min) throw analysis_error("x below x_min");
    return ((gamma - 1.0) / x_min) * std::pow(x / x_min, -gamma);
}

}  // namespace netopt
