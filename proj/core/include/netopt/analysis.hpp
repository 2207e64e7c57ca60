#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netopt/graph.hpp"
#include "netopt/model.hpp"

namespace netopt {

struct HistogramBin {
    int degree = 0;
    long count = 0;
    double probability = 0.0;
};

struct DegreeHistogram {
    std::vector<HistogramBin> bins;  // strictly increasing degree values
};

struct PowerLawFit {
    double gamma_hat = 0.0;
    int x_min_used = 1;
    double ks_statistic = 1.0;
    long n_tail = 0;
    // true when the likelihood maximum sits at the search bracket's upper
    // edge: the tail is (nearly) all at x_min, the delta-distribution regime
    bool degenerate = false;
};

struct BoxCurvePoint {
    int l_b = 0;
    long n_b = 0;
};

struct BoxCoverResult {
    std::vector<BoxCurvePoint> curve;  // l_b = 1 .. diameter
    double d_b = 0.0;                  // negated log-log slope
    double r2 = 0.0;
};

enum class NetworkClass {
    complete,
    delta_distribution,
    compact,
    community,
    small_world,
    ultra_small_world,
    fractal,
    linear_regular,
    random,
};

const char* to_string(NetworkClass c);

struct Classification {
    NetworkClass label = NetworkClass::compact;
    std::vector<std::string> evidence;  // which tests fired, in evaluation order
    bool low_confidence = false;
};

struct ClassifyThresholds {
    double delta = 0.1;          // complete / ultra-small-world slack
    double delta_sw = 1.0;       // small-world band half-width at x_min = 1
    double r2_threshold = 0.9;   // fractal scaling quality
    double q_threshold = 0.25;   // community-evidence modularity
    double shift_base = 0.8;     // spectral anchor shrink per unit of x_min - 1
    int baseline_samples = 20;   // rewired graphs for the clustering baseline
    std::uint64_t seed = 9001;   // seeds baseline rewiring (classification stays deterministic)
};

struct AnalysisReport {
    DegreeHistogram histogram;
    PowerLawFit fit;
    std::optional<BoxCoverResult> box;  // absent when the graph has too few scales
    double y = 0.0;
    double clustering = 0.0;
    int diameter = 0;
    double w_exponent = 0.0;  // ln n / ln y, 0 when undefined
    Classification classification;
};

DegreeHistogram degree_histogram(const Graph& g);

// Hurwitz zeta sum_{k>=0} (a+k)^(-s) via Euler-Maclaurin; backs the exact
// discrete power-law likelihood and CDF.
double hurwitz_zeta(double s, double a);

// Exact discrete maximum-likelihood power-law fit over the tail x >= x_min,
// with the Kolmogorov-Smirnov distance of the fitted CDF.
PowerLawFit fit_power_law_mle(const std::vector<int>& degrees, int x_min);

// Cutoff-scanning variant for external graphs: picks the x_min minimizing KS.
PowerLawFit fit_power_law_scan(const std::vector<int>& degrees);

// Greedy box covering: nodes in seeded random order, first-fit into boxes
// whose members all sit at pairwise distance < l_b; minimum over
// `repetitions` node orders.
long box_cover(const Graph& g, int l_b, std::uint64_t seed = 12345, int repetitions = 10);

// Full covering curve l_b = 1..diameter plus the log-log regression.
BoxCoverResult fractal_dimension(const Graph& g, std::uint64_t seed = 12345, int repetitions = 10);

// Point estimate of w in c ~ N^(1/w): w = ln n / ln y.
double fractal_scaling_exponent(int n, double y);

// Mean clustering coefficient of degree-preserving rewirings of g.
double degree_matched_clustering_baseline(const Graph& g, int samples, std::uint64_t seed);

// Rule cascade over the measured quantities; community_modularity, when
// supplied, is the modularity under the generator's planted assignment.
Classification classify(const Graph& g, const ModelParams& params, const PowerLawFit& fit,
                        const BoxCoverResult& frac, const ClassifyThresholds& thresholds = {},
                        std::optional<double> community_modularity = std::nullopt);

// One-stop measurement pass feeding classify.
AnalysisReport analyze_graph(const Graph& g, const ModelParams& params,
                             const ClassifyThresholds& thresholds = {},
                             std::optional<double> community_modularity = std::nullopt);

}  // namespace netopt
