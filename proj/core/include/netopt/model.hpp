#pragma once

#include <cstdint>

namespace netopt {

// All constants of the generation model: node count, the two edge-degree
// exponents, the degree floor, the target average shortest path length, and
// the fixed edge budget (so the conserved first objective is 2*e).
struct ModelParams {
    int n = 0;
    double a = 0.0;
    double b = 1.0;
    int x_min = 1;
    double c = 1.0;
    std::int64_t e = 0;

    // Throws config_error for out-of-domain values and infeasible_error for
    // edge budgets that cannot satisfy connectivity or the degree floor.
    void validate() const;
};

struct ObjectiveValues {
    std::int64_t f1 = 0;
    double f2 = 0.0;
};

}  // namespace netopt
