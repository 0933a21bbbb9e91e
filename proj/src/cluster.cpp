#include "reqclass/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "reqclass/error.hpp"
#include "reqclass/rng.hpp"

namespace reqclass {

Vocab Vocab::fit(const std::vector<std::vector<std::string>>& docs) {
    Vocab v;
    for (const auto& d : docs)
        for (const auto& t : d) v.ids.emplace(t, 0);
    for (auto& [term, id] : v.ids) {
        id = static_cast<int>(v.terms.size());
        v.terms.push_back(term);
    }
    return v;
}

std::vector<DenseVec> doc_term_matrix(const std::vector<std::vector<std::string>>& docs,
                                      const Vocab& vocab) {
    std::vector<DenseVec> out(docs.size(), DenseVec(vocab.size(), 0.0));
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (const auto& t : docs[d]) {
            auto it = vocab.ids.find(t);
            if (it != vocab.ids.end())
                out[d][static_cast<std::size_t>(it->second)] += 1.0;
        }
    }
    return out;
}

double doc_distance(const DenseVec& a, const DenseVec& b) {
    if (a.size() != b.size())
        throw UsageError("doc_distance: vectors drawn from different vocabularies");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

namespace {

void check_cluster_args(const std::vector<DenseVec>& x, int k) {
    if (k < 1) throw UsageError("clustering: k must be >= 1");
    if (x.empty()) throw UsageError("clustering: no vectors");
    if (static_cast<std::size_t>(k) > x.size())
        throw UsageError("clustering: k exceeds number of vectors");
    for (const auto& v : x)
        if (v.size() != x[0].size())
            throw UsageError("clustering: ragged vectors");
}

DenseVec mean_of(const std::vector<DenseVec>& x, const std::vector<int>& members) {
    DenseVec m(x[0].size(), 0.0);
    for (int i : members)
        for (std::size_t j = 0; j < m.size(); ++j)
            m[j] += x[static_cast<std::size_t>(i)][j];
    for (auto& v : m) v /= static_cast<double>(members.size());
    return m;
}

// Renumber cluster ids in order of each cluster's smallest member.
void canonicalize(std::vector<int>& assignment, int k,
                  std::vector<DenseVec>* centroids) {
    std::vector<int> first(static_cast<std::size_t>(k),
                           std::numeric_limits<int>::max());
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        auto c = static_cast<std::size_t>(assignment[i]);
        first[c] = std::min(first[c], static_cast<int>(i));
    }
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) order[static_cast<std::size_t>(c)] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return first[static_cast<std::size_t>(a)] < first[static_cast<std::size_t>(b)];
    });
    std::vector<int> rank(static_cast<std::size_t>(k), 0);
    for (int pos = 0; pos < k; ++pos)
        rank[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    for (auto& a : assignment) a = rank[static_cast<std::size_t>(a)];
    if (centroids) {
        std::vector<DenseVec> reordered(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c)
            reordered[static_cast<std::size_t>(rank[static_cast<std::size_t>(c)])] =
                std::move((*centroids)[static_cast<std::size_t>(c)]);
        *centroids = std::move(reordered);
    }
}

struct Agglomeration {
    std::vector<int> assignment;
    std::vector<MergeStep> merges;
};

Agglomeration agglomerate(const std::vector<DenseVec>& x, int k, Linkage linkage) {
    const std::size_t n = x.size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            dist[i][j] = dist[j][i] = doc_distance(x[i], x[j]);

    std::vector<bool> active(n, true);
    std::vector<int> size(n, 1);
    std::vector<int> cluster_of(n);
    std::vector<std::vector<int>> members(n);
    for (std::size_t i = 0; i < n; ++i) {
        cluster_of[i] = static_cast<int>(i);
        members[i] = {static_cast<int>(i)};
    }

    Agglomeration out;
    int remaining = static_cast<int>(n);
    while (remaining > k) {
        std::size_t bi = 0, bj = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!active[j]) continue;
                if (dist[i][j] < best) {
                    best = dist[i][j];
                    bi = i;
                    bj = j;
                }
            }
        }
        out.merges.push_back({static_cast<int>(bi), static_cast<int>(bj), best});
        // Lance-Williams update, merging bj into bi.
        for (std::size_t m = 0; m < n; ++m) {
            if (!active[m] || m == bi || m == bj) continue;
            double di = dist[m][bi], dj = dist[m][bj];
            double nd = 0.0;
            switch (linkage) {
                case Linkage::Single: nd = std::min(di, dj); break;
                case Linkage::Complete: nd = std::max(di, dj); break;
                case Linkage::Average:
                    nd = (size[bi] * di + size[bj] * dj) /
                         static_cast<double>(size[bi] + size[bj]);
                    break;
            }
            dist[m][bi] = dist[bi][m] = nd;
        }
        active[bj] = false;
        size[bi] += size[bj];
        members[bi].insert(members[bi].end(), members[bj].begin(), members[bj].end());
        members[bj].clear();
        --remaining;
    }

    out.assignment.assign(n, 0);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (int doc : members[i])
            out.assignment[static_cast<std::size_t>(doc)] = next;
        ++next;
    }
    return out;
}

int nearest_centroid(const DenseVec& v, const std::vector<DenseVec>& centroids) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        double d = doc_distance(v, centroids[c]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(c);
        }
    }
    return best;
}

double wcss(const std::vector<DenseVec>& x, const std::vector<int>& assignment,
            const std::vector<DenseVec>& centroids) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = doc_distance(x[i], centroids[static_cast<std::size_t>(assignment[i])]);
        s += d * d;
    }
    return s;
}

std::vector<DenseVec> compute_centroids(const std::vector<DenseVec>& x,
                                        const std::vector<int>& assignment, int k) {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < x.size(); ++i)
        members[static_cast<std::size_t>(assignment[i])].push_back(
            static_cast<int>(i));
    std::vector<DenseVec> centroids(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        auto cs = static_cast<std::size_t>(c);
        if (members[cs].empty())
            centroids[cs] = DenseVec(x[0].size(), 0.0);
        else
            centroids[cs] = mean_of(x, members[cs]);
    }
    return centroids;
}

// Moves the point farthest from its centroid into each empty cluster.
void repair_empty(const std::vector<DenseVec>& x, std::vector<int>& assignment,
                  std::vector<DenseVec>& centroids, int k) {
    for (int c = 0; c < k; ++c) {
        auto cs = static_cast<std::size_t>(c);
        bool empty = std::find(assignment.begin(), assignment.end(), c) ==
                     assignment.end();
        if (!empty) continue;
        std::size_t farthest = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto ai = static_cast<std::size_t>(assignment[i]);
            // Skip points that are alone in their cluster.
            int company = 0;
            for (std::size_t j = 0; j < assignment.size() && company < 2; ++j)
                if (assignment[j] == assignment[i]) ++company;
            if (company < 2) continue;
            double d = doc_distance(x[i], centroids[ai]);
            if (d > best) {
                best = d;
                farthest = i;
            }
        }
        assignment[farthest] = c;
        centroids = compute_centroids(x, assignment, k);
        (void)cs;
    }
}

ClusterModel lloyd(const std::vector<DenseVec>& x, int k,
                   std::vector<DenseVec> centroids, int max_iters,
                   ClusterMethod method) {
    ClusterModel m;
    m.method = method;
    m.k = k;
    m.centroids = std::move(centroids);
    m.assignments.assign(x.size(), -1);

    for (int iter = 0; iter < max_iters; ++iter) {
        std::vector<int> next(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            next[i] = nearest_centroid(x[i], m.centroids);
        std::vector<DenseVec> cents = compute_centroids(x, next, k);
        repair_empty(x, next, cents, k);
        m.objective_history.push_back(wcss(x, next, cents));
        bool stable = next == m.assignments;
        m.assignments = std::move(next);
        m.centroids = std::move(cents);
        if (stable) break;
    }
    canonicalize(m.assignments, k, &m.centroids);
    return m;
}

} // namespace

ClusterModel cluster_hierarchical(const std::vector<DenseVec>& x, int k,
                                  Linkage linkage) {
    check_cluster_args(x, k);
    Agglomeration agg = agglomerate(x, k, linkage);
    ClusterModel m;
    m.method = ClusterMethod::Hierarchical;
    m.k = k;
    m.assignments = std::move(agg.assignment);
    m.merges = std::move(agg.merges);
    canonicalize(m.assignments, k, nullptr);
    return m;
}

ClusterModel cluster_kmeans(const std::vector<DenseVec>& x, int k,
                            std::uint64_t seed, int max_iters) {
    check_cluster_args(x, k);
    Rng rng(seed);
    std::vector<int> assignment(x.size());
    for (auto& a : assignment)
        a = static_cast<int>(rng.next_index(static_cast<std::uint64_t>(k)));
    std::vector<DenseVec> centroids = compute_centroids(x, assignment, k);
    repair_empty(x, assignment, centroids, k);
    return lloyd(x, k, std::move(centroids), max_iters, ClusterMethod::KMeans);
}

ClusterModel cluster_hybrid(const std::vector<DenseVec>& x, int k, int max_iters,
                            Linkage linkage) {
    check_cluster_args(x, k);
    Agglomeration agg = agglomerate(x, k, linkage);
    std::vector<DenseVec> centroids = compute_centroids(x, agg.assignment, k);
    ClusterModel m = lloyd(x, k, std::move(centroids), max_iters, ClusterMethod::Hybrid);
    m.merges = std::move(agg.merges);
    return m;
}

double cluster_objective(const std::vector<DenseVec>& x, const ClusterModel& m) {
    if (m.assignments.size() != x.size())
        throw UsageError("cluster_objective: model/vectors size mismatch");
    std::vector<DenseVec> centroids =
        m.centroids.empty() ? compute_centroids(x, m.assignments, m.k) : m.centroids;
    return wcss(x, m.assignments, centroids);
}

} // namespace reqclass
