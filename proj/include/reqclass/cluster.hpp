#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace reqclass {

struct Vocab {
    std::vector<std::string> terms; // sorted; index is the term id
    std::map<std::string, int> ids;

    static Vocab fit(const std::vector<std::vector<std::string>>& docs);
    std::size_t size() const { return terms.size(); }
};

using DenseVec = std::vector<double>;

// Raw term-count coordinates over a fitted vocabulary.
std::vector<DenseVec> doc_term_matrix(const std::vector<std::vector<std::string>>& docs,
                                      const Vocab& vocab);

// Euclidean distance; throws UsageError on dimension mismatch.
double doc_distance(const DenseVec& a, const DenseVec& b);

enum class ClusterMethod { Hierarchical, KMeans, Hybrid };
enum class Linkage { Single, Complete, Average };

struct MergeStep {
    int a = 0, b = 0;    // merged cluster representatives (smallest doc index)
    double distance = 0; // linkage distance at the merge
};

struct ClusterModel {
    ClusterMethod method = ClusterMethod::KMeans;
    int k = 0;
    std::vector<int> assignments;          // per document, in [0, k)
    std::vector<DenseVec> centroids;       // k-means and hybrid
    std::vector<MergeStep> merges;         // hierarchical and hybrid
    std::vector<double> objective_history; // k-means/hybrid WCSS per iteration
};

// Agglomerative clustering cut at k clusters. Cluster ids are renumbered by
// each cluster's smallest document index.
ClusterModel cluster_hierarchical(const std::vector<DenseVec>& x, int k,
                                  Linkage linkage = Linkage::Average);

// Lloyd iterations from a random initial partition (the documents are
// assigned to k bins uniformly). Nearest-centroid ties pick the lowest
// cluster id; empty clusters are re-seeded with the point farthest from its
// centroid. Deterministic per seed.
ClusterModel cluster_kmeans(const std::vector<DenseVec>& x, int k,
                            std::uint64_t seed, int max_iters = 100);

// Hierarchical cut provides the initial centroids for Lloyd refinement; no
// randomness anywhere.
ClusterModel cluster_hybrid(const std::vector<DenseVec>& x, int k,
                            int max_iters = 100,
                            Linkage linkage = Linkage::Average);

// Within-cluster sum of squared distances to centroids (computes centroids
// from assignments when the model carries none).
double cluster_objective(const std::vector<DenseVec>& x, const ClusterModel& m);

} // namespace reqclass
