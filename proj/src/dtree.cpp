#include "reqclass/dtree.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "reqclass/error.hpp"
#include "reqclass/text.hpp"

namespace reqclass {

namespace {

double entropy(const std::vector<int>& counts, int total) {
    if (total == 0) return 0.0;
    double h = 0.0;
    for (int c : counts) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / total;
        h -= p * std::log2(p);
    }
    return h;
}

struct Builder {
    const std::vector<std::vector<double>>& x;
    const std::vector<int>& y;
    int n_classes;
    TreeParams params;
    std::vector<int> global_counts;
    std::vector<TreeNode>* nodes;

    int majority(const std::vector<int>& counts) const {
        int best = 0;
        for (int c = 1; c < n_classes; ++c) {
            if (counts[c] > counts[best] ||
                (counts[c] == counts[best] && global_counts[c] > global_counts[best]))
                best = c;
        }
        return best;
    }

    int make_leaf(const std::vector<int>& counts) {
        TreeNode node;
        node.leaf = true;
        node.distribution = counts;
        node.klass = majority(counts);
        nodes->push_back(std::move(node));
        return static_cast<int>(nodes->size()) - 1;
    }

    struct Split {
        int feature = -1;
        double threshold = 0.0;
        double gain_ratio = 0.0;
    };

    Split best_split(const std::vector<int>& idx,
                     const std::vector<int>& counts) const {
        const int n = static_cast<int>(idx.size());
        const double parent_h = entropy(counts, n);
        Split best;
        const int min_leaf = params.min_leaf;
        const std::size_t n_features = x[0].size();

        std::vector<int> order(idx);
        for (std::size_t f = 0; f < n_features; ++f) {
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                if (x[a][f] != x[b][f]) return x[a][f] < x[b][f];
                return a < b;
            });
            std::vector<int> left(n_classes, 0);
            std::vector<int> right(counts);
            for (int i = 0; i + 1 < n; ++i) {
                int sample = order[static_cast<std::size_t>(i)];
                ++left[static_cast<std::size_t>(y[sample])];
                --right[static_cast<std::size_t>(y[sample])];
                double v = x[sample][f];
                double next = x[order[static_cast<std::size_t>(i + 1)]][f];
                if (v == next) continue;
                int n_left = i + 1, n_right = n - n_left;
                if (n_left < min_leaf || n_right < min_leaf) continue;
                double gain = parent_h -
                              (static_cast<double>(n_left) / n) * entropy(left, n_left) -
                              (static_cast<double>(n_right) / n) * entropy(right, n_right);
                if (gain <= 0.0) continue;
                double pl = static_cast<double>(n_left) / n;
                double pr = static_cast<double>(n_right) / n;
                double split_info = -pl * std::log2(pl) - pr * std::log2(pr);
                double ratio = gain / split_info;
                double threshold = (v + next) / 2.0;
                bool better = ratio > best.gain_ratio;
                bool tie = ratio == best.gain_ratio && best.feature >= 0;
                if (tie)
                    better = static_cast<int>(f) < best.feature ||
                             (static_cast<int>(f) == best.feature &&
                              threshold < best.threshold);
                if (better) {
                    best.feature = static_cast<int>(f);
                    best.threshold = threshold;
                    best.gain_ratio = ratio;
                }
            }
        }
        return best;
    }

    int build(const std::vector<int>& idx) {
        std::vector<int> counts(static_cast<std::size_t>(n_classes), 0);
        for (int i : idx) ++counts[static_cast<std::size_t>(y[i])];

        bool pure = std::count_if(counts.begin(), counts.end(),
                                  [](int c) { return c > 0; }) <= 1;
        if (pure || static_cast<int>(idx.size()) < 2 * params.min_leaf)
            return make_leaf(counts);

        Split s = best_split(idx, counts);
        if (s.feature < 0 || s.gain_ratio <= 0.0) return make_leaf(counts);

        std::vector<int> left_idx, right_idx;
        for (int i : idx)
            (x[i][static_cast<std::size_t>(s.feature)] <= s.threshold ? left_idx
                                                                      : right_idx)
                .push_back(i);

        int self = static_cast<int>(nodes->size());
        nodes->push_back(TreeNode{});
        int left = build(left_idx);
        int right = build(right_idx);
        TreeNode& node = (*nodes)[static_cast<std::size_t>(self)];
        node.leaf = false;
        node.feature = s.feature;
        node.threshold = s.threshold;
        node.gain_ratio = s.gain_ratio;
        node.left = left;
        node.right = right;
        node.distribution = counts;
        node.klass = majority(counts);
        return self;
    }
};

} // namespace

DecisionTree train_tree(const std::vector<std::vector<double>>& vectors,
                        const std::vector<int>& labels,
                        const std::vector<std::string>& class_names,
                        TreeParams params) {
    if (vectors.empty()) throw UsageError("train_tree: empty training set");
    if (vectors.size() != labels.size())
        throw UsageError("train_tree: vectors/labels size mismatch");
    if (class_names.empty()) throw UsageError("train_tree: no classes");
    if (params.min_leaf < 1) throw UsageError("train_tree: min_leaf must be >= 1");
    const std::size_t width = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != width) throw UsageError("train_tree: ragged feature vectors");
    for (int label : labels)
        if (label < 0 || label >= static_cast<int>(class_names.size()))
            throw UsageError("train_tree: label out of range");

    DecisionTree tree;
    tree.classes_ = class_names;
    tree.n_features_ = width;
    tree.params_ = params;

    Builder b{vectors, labels, static_cast<int>(class_names.size()), params,
              std::vector<int>(class_names.size(), 0), &tree.nodes_};
    for (int label : labels) ++b.global_counts[static_cast<std::size_t>(label)];
    std::vector<int> idx(vectors.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    b.build(idx);
    return tree;
}

TreePrediction predict_tree(const DecisionTree& tree,
                            const std::vector<double>& vector) {
    if (tree.nodes().empty()) throw UsageError("predict_tree: empty tree");
    if (vector.size() != tree.feature_count())
        throw UsageError("predict_tree: feature vector length mismatch");
    const auto& nodes = tree.nodes();
    std::size_t at = 0;
    while (!nodes[at].leaf) {
        const TreeNode& n = nodes[at];
        at = static_cast<std::size_t>(
            vector[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                                       : n.right);
    }
    const TreeNode& leaf = nodes[at];
    TreePrediction p;
    p.klass = leaf.klass;
    int total = 0;
    for (int c : leaf.distribution) total += c;
    p.distribution.reserve(leaf.distribution.size());
    for (int c : leaf.distribution)
        p.distribution.push_back(total > 0 ? static_cast<double>(c) / total : 0.0);
    return p;
}

std::size_t DecisionTree::depth() const {
    if (nodes_.empty()) return 0;
    std::size_t best = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 1}};
    while (!stack.empty()) {
        auto [at, d] = stack.back();
        stack.pop_back();
        best = std::max(best, d);
        if (!nodes_[at].leaf) {
            stack.push_back({static_cast<std::size_t>(nodes_[at].left), d + 1});
            stack.push_back({static_cast<std::size_t>(nodes_[at].right), d + 1});
        }
    }
    return best;
}

std::size_t DecisionTree::leaf_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes_)
        if (node.leaf) ++n;
    return n;
}

void DecisionTree::save(std::ostream& out) const {
    out << "reqclass-tree v1\n";
    out << "classes";
    for (const auto& c : classes_) out << ' ' << c;
    out << "\n";
    out << "features " << n_features_ << "\n";
    out << "min_leaf " << params_.min_leaf << "\n";
    out << "nodes " << nodes_.size() << "\n";
    std::ostringstream os;
    os.precision(17);
    for (const auto& n : nodes_) {
        os.str("");
        if (n.leaf) {
            os << "leaf " << n.klass;
        } else {
            os << "split " << n.feature << ' ' << n.threshold << ' ' << n.gain_ratio
               << ' ' << n.left << ' ' << n.right << ' ' << n.klass;
        }
        for (int c : n.distribution) os << ' ' << c;
        out << os.str() << "\n";
    }
    out << "end\n";
}

DecisionTree DecisionTree::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != "reqclass-tree v1")
        throw DataError("tree model: bad header");
    DecisionTree tree;
    std::size_t n_nodes = 0;
    while (std::getline(in, line)) {
        auto f = split_whitespace(line);
        if (f.empty()) continue;
        if (f[0] == "end") break;
        if (f[0] == "classes") {
            tree.classes_.assign(f.begin() + 1, f.end());
        } else if (f[0] == "features" && f.size() == 2) {
            tree.n_features_ = static_cast<std::size_t>(std::stoul(f[1]));
        } else if (f[0] == "min_leaf" && f.size() == 2) {
            tree.params_.min_leaf = std::stoi(f[1]);
        } else if (f[0] == "nodes" && f.size() == 2) {
            n_nodes = static_cast<std::size_t>(std::stoul(f[1]));
        } else if (f[0] == "leaf" || f[0] == "split") {
            TreeNode node;
            std::size_t at;
            if (f[0] == "leaf") {
                if (f.size() < 2) throw DataError("tree model: bad leaf line");
                node.leaf = true;
                node.klass = std::stoi(f[1]);
                at = 2;
            } else {
                if (f.size() < 7) throw DataError("tree model: bad split line");
                node.leaf = false;
                node.feature = std::stoi(f[1]);
                node.threshold = std::stod(f[2]);
                node.gain_ratio = std::stod(f[3]);
                node.left = std::stoi(f[4]);
                node.right = std::stoi(f[5]);
                node.klass = std::stoi(f[6]);
                at = 7;
            }
            for (; at < f.size(); ++at) node.distribution.push_back(std::stoi(f[at]));
            tree.nodes_.push_back(std::move(node));
        } else {
            throw DataError("tree model: unexpected line '" + line + "'");
        }
    }
    if (tree.nodes_.size() != n_nodes) throw DataError("tree model: node count mismatch");
    if (tree.classes_.empty()) throw DataError("tree model: missing classes");
    for (const auto& n : tree.nodes_) {
        if (n.leaf) continue;
        if (n.left < 0 || n.right < 0 ||
            n.left >= static_cast<int>(tree.nodes_.size()) ||
            n.right >= static_cast<int>(tree.nodes_.size()))
            throw DataError("tree model: child index out of range");
    }
    return tree;
}

} // namespace reqclass
