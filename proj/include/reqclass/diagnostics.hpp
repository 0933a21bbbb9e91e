#pragma once

#include <cstdint>
#include <vector>

#include "reqclass/cluster.hpp"

namespace reqclass {

// Hopkins statistic for clustering tendency. Draws a sample of real points
// and an equal number of synthetic points uniform over the data's bounding
// box, then compares nearest-neighbour distances:
//
//   H = sum(w) / (sum(u) + sum(w))
//
// where w are the sampled real points' distances to their nearest other real
// point and u are the synthetic points' distances to their nearest real
// point. Values near 0 indicate clusterable data, values near 0.5 indicate
// uniform data.
//
// Requires at least 10 vectors and sample_fraction in (0, 0.5]. All points
// identical (degenerate bounding box) is an error.
double hopkins(const std::vector<DenseVec>& x, double sample_fraction,
               uint64_t seed);

// Mean of hopkins() over seeds base_seed .. base_seed + seeds - 1.
double hopkins_mean(const std::vector<DenseVec>& x, double sample_fraction,
                    int seeds, uint64_t base_seed);

struct SilhouetteResult {
    std::vector<double> values;
    double mean = 0.0;
};

// Silhouette coefficient per point and its mean, Euclidean distance.
// s(i) = (b(i) - a(i)) / max(a(i), b(i)); points in singleton clusters get
// s = 0. Fewer than two distinct clusters is an error.
SilhouetteResult silhouette(const std::vector<DenseVec>& x,
                            const std::vector<int>& assignments);

} // namespace reqclass
