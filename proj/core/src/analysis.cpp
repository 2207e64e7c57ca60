#include "netopt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "netopt/errors.hpp"
#include "netopt/rng.hpp"

namespace netopt {

const char* to_string(NetworkClass c) {
    switch (c) {
        case NetworkClass::complete: return "complete";
        case NetworkClass::delta_distribution: return "delta_distribution";
        case NetworkClass::compact: return "compact";
        case NetworkClass::community: return "community";
        case NetworkClass::small_world: return "small_world";
        case NetworkClass::ultra_small_world: return "ultra_small_world";
        case NetworkClass::fractal: return "fractal";
        case NetworkClass::linear_regular: return "linear_regular";
        case NetworkClass::random: return "random";
    }
    return "unknown";
}

DegreeHistogram degree_histogram(const Graph& g) {
    std::map<int, long> counts;
    for (int v = 0; v < g.n(); ++v) ++counts[g.degree(v)];
    DegreeHistogram h;
    h.bins.reserve(counts.size());
    const double n = static_cast<double>(g.n());
    for (const auto& [degree, count] : counts)
        h.bins.push_back({degree, count, static_cast<double>(count) / n});
    return h;
}

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0)) throw analysis_error("hurwitz_zeta needs s > 1");
    if (!(a > 0.0)) throw analysis_error("hurwitz_zeta needs a > 0");
    constexpr int head = 32;
    double sum = 0.0;
    for (int k = 0; k < head; ++k) sum += std::pow(a + k, -s);
    const double an = a + head;
    sum += std::pow(an, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(an, -s);
    // Euler-Maclaurin correction: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * an^{-s-2k+1}
    static constexpr double bern[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
    static constexpr double fact[] = {2.0, 24.0, 720.0, 40320.0};
    double rising = 1.0;
    int r = 0;
    for (int k = 1; k <= 4; ++k) {
        while (r < 2 * k - 1) rising *= s + (r++);
        sum += bern[k - 1] / fact[k - 1] * rising * std::pow(an, -s - (2 * k - 1));
    }
    return sum;
}

namespace {

constexpr double gamma_lo = 1.0 + 1e-6;
constexpr double gamma_hi = 50.0;

// golden-section maximization of the tail log-likelihood
double maximize_likelihood(long n_tail, double sum_log, double x_min) {
    auto log_likelihood = [&](double gamma) {
        return -static_cast<double>(n_tail) * std::log(hurwitz_zeta(gamma, x_min)) -
               gamma * sum_log;
    };
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = gamma_lo, hi = gamma_hi;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = log_likelihood(x1);
    double f2 = log_likelihood(x2);
    while (hi - lo > 1e-9) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = log_likelihood(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = log_likelihood(x1);
        }
    }
    return (lo + hi) / 2.0;
}

}  // namespace

PowerLawFit fit_power_law_mle(const std::vector<int>& degrees, int x_min) {
    if (x_min < 1) throw analysis_error("fit cutoff must be >= 1");
    std::vector<int> tail;
    tail.reserve(degrees.size());
    for (int d : degrees)
        if (d >= x_min) tail.push_back(d);
    if (tail.size() < 10) throw analysis_error("insufficient tail: fewer than 10 samples >= cutoff");
    std::sort(tail.begin(), tail.end());

    double sum_log = 0.0;
    for (int d : tail) sum_log += std::log(static_cast<double>(d));

    PowerLawFit fit;
    fit.x_min_used = x_min;
    fit.n_tail = static_cast<long>(tail.size());
    fit.gamma_hat = maximize_likelihood(fit.n_tail, sum_log, static_cast<double>(x_min));
    fit.degenerate = fit.gamma_hat > gamma_hi - 1e-3;

    // KS distance between empirical and fitted CDFs at the observed atoms
    const double z0 = hurwitz_zeta(fit.gamma_hat, static_cast<double>(x_min));
    double ks = 0.0;
    long cum = 0;
    for (std::size_t i = 0; i < tail.size();) {
        const int x = tail[i];
        std::size_t j = i;
        while (j < tail.size() && tail[j] == x) ++j;
        cum += static_cast<long>(j - i);
        const double empirical = static_cast<double>(cum) / static_cast<double>(fit.n_tail);
        const double fitted = 1.0 - hurwitz_zeta(fit.gamma_hat, static_cast<double>(x) + 1.0) / z0;
        ks = std::max(ks, std::abs(empirical - fitted));
        i = j;
    }
    fit.ks_statistic = ks;
    return fit;
}

PowerLawFit fit_power_law_scan(const std::vector<int>& degrees) {
    std::vector<int> distinct(degrees);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    PowerLawFit best;
    bool have = false;
    int tried = 0;
    for (int candidate : distinct) {
        if (tried >= 50) break;
        PowerLawFit fit;
        try {
            fit = fit_power_law_mle(degrees, candidate);
        } catch (const analysis_error&) {
            break;  // tails only shrink from here on
        }
        ++tried;
        if (!have || fit.ks_statistic < best.ks_statistic) {
            best = fit;
            have = true;
        }
    }
    if (!have) throw analysis_error("insufficient tail: no viable fit cutoff");
    return best;
}

namespace {

long greedy_boxes(const DistanceMatrix& dm, int l_b, Rng& rng) {
    const int n = dm.n;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) {
        int j = rng.index(i + 1);
        std::swap(order[i], order[j]);
    }
    std::vector<std::vector<int>> boxes;
    for (int node : order) {
        bool placed = false;
        for (auto& box : boxes) {
            bool fits = true;
            for (int member : box) {
                const int d = dm.at(node, member);
                if (d < 0 || d >= l_b) {
                    fits = false;
                    break;
                }
            }
            if (fits) {
                box.push_back(node);
                placed = true;
                break;
            }
        }
        if (!placed) boxes.push_back({node});
    }
    return static_cast<long>(boxes.size());
}

long min_boxes(const DistanceMatrix& dm, int l_b, std::uint64_t seed, int repetitions) {
    long best = std::numeric_limits<long>::max();
    for (int rep = 0; rep < repetitions; ++rep) {
        Rng rng(seed + static_cast<std::uint64_t>(rep));
        best = std::min(best, greedy_boxes(dm, l_b, rng));
    }
    return best;
}

}  // namespace

long box_cover(const Graph& g, int l_b, std::uint64_t seed, int repetitions) {
    if (l_b < 1) throw analysis_error("box diameter must be >= 1");
    if (repetitions < 1) throw analysis_error("need at least one repetition");
    if (!is_connected(g)) throw disconnected_error();
    return min_boxes(distance_matrix(g), l_b, seed, repetitions);
}

BoxCoverResult fractal_dimension(const Graph& g, std::uint64_t seed, int repetitions) {
    if (!is_connected(g)) throw disconnected_error();
    const DistanceMatrix dm = distance_matrix(g);
    int diam = 0;
    for (int v : dm.d) diam = std::max(diam, v);
    if (diam < 4) throw analysis_error("too few scales: diameter below 4");

    BoxCoverResult res;
    res.curve.reserve(static_cast<std::size_t>(diam));
    for (int l = 1; l <= diam; ++l)
        res.curve.push_back({l, min_boxes(dm, l, seed, repetitions)});
    // a cover at a smaller scale is still a valid cover here, so the running
    // minimum is an achievable count; clamping removes greedy ordering noise
    for (std::size_t i = 1; i < res.curve.size(); ++i)
        res.curve[i].n_b = std::min(res.curve[i].n_b, res.curve[i - 1].n_b);

    double sx = 0, sy = 0;
    const double k = static_cast<double>(res.curve.size());
    std::vector<double> xs, ys;
    for (const auto& p : res.curve) {
        xs.push_back(std::log(static_cast<double>(p.l_b)));
        ys.push_back(std::log(static_cast<double>(p.n_b)));
        sx += xs.back();
        sy += ys.back();
    }
    const double mx = sx / k, my = sy / k;
    double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx > 0 && syy > 0) {
        res.d_b = -(sxy / sxx);
        res.r2 = (sxy * sxy) / (sxx * syy);
    }
    return res;
}

double fractal_scaling_exponent(int n, double y) {
    if (n < 2) throw analysis_error("need n >= 2");
    if (!(y > 1.0)) throw analysis_error("need y > 1");
    return std::log(static_cast<double>(n)) / std::log(y);
}

double degree_matched_clustering_baseline(const Graph& g, int samples, std::uint64_t seed) {
    if (samples < 1) throw analysis_error("need at least one sample");
    std::vector<Edge> base_edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) base_edges.push_back({u, v});
    if (base_edges.size() < 2) throw graph_error("rewiring baseline needs at least 2 edges");

    double total = 0.0;
    for (int s = 0; s < samples; ++s) {
        Graph h = g;
        std::vector<Edge> edges = base_edges;
        Rng rng(seed + static_cast<std::uint64_t>(s));
        const std::int64_t target = 10 * static_cast<std::int64_t>(edges.size());
        std::int64_t done = 0;
        for (std::int64_t attempt = 0; attempt < 100 * target && done < target; ++attempt) {
            const std::size_t i = static_cast<std::size_t>(rng.below(edges.size()));
            const std::size_t j = static_cast<std::size_t>(rng.below(edges.size()));
            if (i == j) continue;
            int a = edges[i].u, b = edges[i].v;
            int c = edges[j].u, d = edges[j].v;
            if (rng.coin()) std::swap(c, d);
            if (a == c || a == d || b == c || b == d) continue;
            if (h.has_edge(a, d) || h.has_edge(c, b)) continue;
            h.remove_edge(a, b);
            h.remove_edge(c, d);
            h.add_edge(a, d);
            h.add_edge(c, b);
            edges[i] = {a, d};
            edges[j] = {c, b};
            ++done;
        }
        total += clustering_coefficient(h);
    }
    return total / samples;
}

Classification classify(const Graph& g, const ModelParams& params, const PowerLawFit& fit,
                        const BoxCoverResult& frac, const ClassifyThresholds& th,
                        std::optional<double> community_modularity) {
    const int n = g.n();
    Classification out;
    auto note = [&](const std::string& s) { out.evidence.push_back(s); };
    const double y = avg_shortest_path(g);
    const double shift = std::pow(th.shift_base, params.x_min - 1);
    const double anchor = std::log(static_cast<double>(n)) * shift;

    if (y <= 1.0 + th.delta) {
        note("y=" + std::to_string(y) + " within complete band (<= 1+delta)");
        out.label = NetworkClass::complete;
        return out;
    }

    {
        DegreeHistogram h = degree_histogram(g);
        double top1 = 0.0, top2 = 0.0;
        int max_degree = 0;
        for (const auto& bin : h.bins) {
            max_degree = std::max(max_degree, bin.degree);
            if (bin.probability >= top1) {
                top2 = top1;
                top1 = bin.probability;
            } else if (bin.probability > top2) {
                top2 = bin.probability;
            }
        }
        if (top1 + top2 >= 0.9 && 2 * max_degree >= n) {
            note("degenerate degree distribution: top-2 mass " + std::to_string(top1 + top2) +
                 ", hub degree " + std::to_string(max_degree));
            out.label = NetworkClass::delta_distribution;
            return out;
        }
    }

    if (n >= 3 && y < std::log(std::log(static_cast<double>(n))) + th.delta) {
        note("y=" + std::to_string(y) + " below ln(ln n) band");
        out.label = NetworkClass::ultra_small_world;
        return out;
    }

    // a path graph realizes the maximum mean distance (n+1)/3
    const double path_aspl = (static_cast<double>(n) + 1.0) / 3.0;
    if (y >= 0.9 * path_aspl) {
        note("y=" + std::to_string(y) + " within 10% of the path maximum " + std::to_string(path_aspl));
        out.label = NetworkClass::linear_regular;
        return out;
    }

    if (community_modularity && *community_modularity >= th.q_threshold) {
        note("planted-assignment modularity " + std::to_string(*community_modularity) +
             " >= " + std::to_string(th.q_threshold));
        out.label = NetworkClass::community;
        return out;
    }

    const double band = th.delta_sw * shift * shift * shift;
    if (std::abs(y - anchor) <= band) {
        const double clustering = n >= 3 ? clustering_coefficient(g) : 0.0;
        const double baseline = degree_matched_clustering_baseline(g, th.baseline_samples, th.seed);
        if (clustering > baseline) {
            note("y=" + std::to_string(y) + " in small-world band around " + std::to_string(anchor) +
                 "; clustering " + std::to_string(clustering) + " above baseline " +
                 std::to_string(baseline));
            out.label = NetworkClass::small_world;
            return out;
        }
        note("in small-world band but clustering " + std::to_string(clustering) +
             " not above baseline " + std::to_string(baseline));
    }

    const bool power_tail = !fit.degenerate && fit.gamma_hat > 1.0 && fit.n_tail >= 10;
    if (y < anchor && power_tail) {
        note("y=" + std::to_string(y) + " below anchor " + std::to_string(anchor) +
             " with power-law tail (gamma=" + std::to_string(fit.gamma_hat) + ")");
        out.label = NetworkClass::compact;
        return out;
    }

    if (y > anchor && frac.curve.size() >= 4 && frac.r2 >= th.r2_threshold) {
        note("y=" + std::to_string(y) + " above anchor " + std::to_string(anchor) +
             " with box scaling r2=" + std::to_string(frac.r2));
        out.label = NetworkClass::fractal;
        return out;
    }

    if (params.a == 0.0 && params.b == 0.0) {
        note("flat edge-degree objective (a=b=0)");
        out.label = NetworkClass::random;
        return out;
    }

    out.low_confidence = true;
    out.label = y < anchor ? NetworkClass::compact : NetworkClass::fractal;
    note("fallback by side of anchor " + std::to_string(anchor));
    return out;
}

AnalysisReport analyze_graph(const Graph& g, const ModelParams& params,
                             const ClassifyThresholds& thresholds,
                             std::optional<double> community_modularity) {
    AnalysisReport rep;
    rep.histogram = degree_histogram(g);
    std::vector<int> degs(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) degs[v] = g.degree(v);
    try {
        rep.fit = fit_power_law_mle(degs, params.x_min);
    } catch (const analysis_error&) {
        rep.fit = PowerLawFit{};
        rep.fit.x_min_used = params.x_min;
        rep.fit.degenerate = true;
    }
    rep.y = avg_shortest_path(g);
    rep.diameter = diameter(g);
    rep.clustering = g.n() >= 3 ? clustering_coefficient(g) : 0.0;
    rep.w_exponent = rep.y > 1.0 ? fractal_scaling_exponent(g.n(), rep.y) : 0.0;
    if (rep.diameter >= 4) rep.box = fractal_dimension(g);
    rep.classification = classify(g, params, rep.fit, rep.box ? *rep.box : BoxCoverResult{},
                                  thresholds, community_modularity);
    return rep;
}

}  // namespace netopt
