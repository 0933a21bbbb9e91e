#include "reqclass/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "reqclass/error.hpp"
#include "reqclass/rng.hpp"

namespace reqclass {

namespace {

double sq_dist(const DenseVec& a, const DenseVec& b) {
    double s = 0.0;
    for (size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        s += diff * diff;
    }
    return s;
}

} // namespace

double hopkins(const std::vector<DenseVec>& x, double sample_fraction,
               uint64_t seed) {
    const size_t n = x.size();
    if (n < 10) {
        throw UsageError("hopkins: need at least 10 vectors, got " +
                         std::to_string(n));
    }
    if (!(sample_fraction > 0.0) || sample_fraction > 0.5) {
        throw UsageError("hopkins: sample_fraction must be in (0, 0.5]");
    }
    const size_t dims = x[0].size();
    for (const auto& v : x) {
        if (v.size() != dims) {
            throw UsageError("hopkins: vectors have mixed dimensionality");
        }
    }
    if (dims == 0) throw UsageError("hopkins: zero-dimensional vectors");

    DenseVec lo(dims, std::numeric_limits<double>::infinity());
    DenseVec hi(dims, -std::numeric_limits<double>::infinity());
    for (const auto& v : x) {
        for (size_t d = 0; d < dims; ++d) {
            lo[d] = std::min(lo[d], v[d]);
            hi[d] = std::max(hi[d], v[d]);
        }
    }
    bool degenerate = true;
    for (size_t d = 0; d < dims; ++d) {
        if (hi[d] > lo[d]) {
            degenerate = false;
            break;
        }
    }
    if (degenerate) {
        throw DataError("hopkins: degenerate bounding box, all points "
                        "identical");
    }

    size_t m = static_cast<size_t>(
        std::llround(sample_fraction * static_cast<double>(n)));
    m = std::max<size_t>(1, std::min(m, n - 1));

    Rng rng(seed);
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    // Partial Fisher-Yates: the first m entries become the sample.
    for (size_t i = 0; i < m; ++i) {
        const size_t j = i + static_cast<size_t>(rng.next_index(n - i));
        std::swap(order[i], order[j]);
    }

    double sum_w = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const size_t pick = order[i];
        double best = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < n; ++j) {
            if (j == pick) continue;
            best = std::min(best, sq_dist(x[pick], x[j]));
        }
        sum_w += std::sqrt(best);
    }

    double sum_u = 0.0;
    DenseVec synth(dims);
    for (size_t i = 0; i < m; ++i) {
        for (size_t d = 0; d < dims; ++d) {
            synth[d] = rng.next_double(lo[d], hi[d]);
        }
        double best = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < n; ++j) {
            best = std::min(best, sq_dist(synth, x[j]));
        }
        sum_u += std::sqrt(best);
    }

    const double denom = sum_u + sum_w;
    if (denom <= 0.0) {
        throw DataError("hopkins: degenerate distances, all points "
                        "identical");
    }
    return sum_w / denom;
}

double hopkins_mean(const std::vector<DenseVec>& x, double sample_fraction,
                    int seeds, uint64_t base_seed) {
    if (seeds < 1) throw UsageError("hopkins_mean: seeds must be >= 1");
    double total = 0.0;
    for (int s = 0; s < seeds; ++s) {
        total += hopkins(x, sample_fraction, base_seed + static_cast<uint64_t>(s));
    }
    return total / seeds;
}

SilhouetteResult silhouette(const std::vector<DenseVec>& x,
                            const std::vector<int>& assignments) {
    const size_t n = x.size();
    if (assignments.size() != n) {
        throw UsageError("silhouette: assignments size does not match "
                         "vector count");
    }
    if (n == 0) throw UsageError("silhouette: empty input");

    std::set<int> clusters(assignments.begin(), assignments.end());
    if (clusters.size() < 2) {
        throw UsageError("silhouette: need at least two clusters");
    }
    for (int c : clusters) {
        if (c < 0) throw UsageError("silhouette: negative cluster id");
    }
    const int k = *clusters.rbegin() + 1;

    std::vector<size_t> sizes(static_cast<size_t>(k), 0);
    for (int a : assignments) ++sizes[static_cast<size_t>(a)];

    SilhouetteResult res;
    res.values.assign(n, 0.0);

    std::vector<double> cluster_sum(static_cast<size_t>(k));
    for (size_t i = 0; i < n; ++i) {
        const int own = assignments[i];
        if (sizes[static_cast<size_t>(own)] <= 1) {
            res.values[i] = 0.0;
            continue;
        }
        std::fill(cluster_sum.begin(), cluster_sum.end(), 0.0);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            cluster_sum[static_cast<size_t>(assignments[j])] +=
                std::sqrt(sq_dist(x[i], x[j]));
        }
        const double a = cluster_sum[static_cast<size_t>(own)] /
                         static_cast<double>(sizes[static_cast<size_t>(own)] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            if (c == own || sizes[static_cast<size_t>(c)] == 0) continue;
            b = std::min(b, cluster_sum[static_cast<size_t>(c)] /
                                static_cast<double>(sizes[static_cast<size_t>(c)]));
        }
        const double denom = std::max(a, b);
        res.values[i] = denom > 0.0 ? (b - a) / denom : 0.0;
    }

    res.mean = std::accumulate(res.values.begin(), res.values.end(), 0.0) /
               static_cast<double>(n);
    return res;
}

} // namespace reqclass
