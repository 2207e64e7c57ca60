#pragma once

#include <cstdint>
#include <vector>

#include "netopt/graph.hpp"
#include "netopt/model.hpp"

namespace netopt {

// Community-aware variant: a two-level similarity distance (0 inside a
// community, 1 across) attenuates cross-community edge-degree terms by a
// factor s per unit distance. s = 1 recovers the base model exactly.
struct CommunityParams {
    ModelParams model;
    int k = 2;
    double s = 0.5;
    std::vector<int> assignment;  // node -> community label in [0, k)

    void validate() const;
};

// Balanced random partition of n nodes into k labels (sizes differ by at
// most one); deterministic for a fixed seed.
std::vector<int> assign_communities(int n, int k, std::uint64_t seed);

// Edge-degree objective with cross-community attenuation s^d(i,j).
double f2_community(const Graph& g, const CommunityParams& params);

// Newman-Girvan modularity of a labelled partition.
double modularity(const Graph& g, const std::vector<int>& assignment);

// Pair-scale functor plugged into the shared objective kernels.
struct CommunityScale {
    const int* labels;
    double s;
    double operator()(int i, int j) const { return labels[i] == labels[j] ? 1.0 : s; }
};

}  // namespace netopt
