#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reqclass {

struct TreeNode {
    bool leaf = true;
    // split node
    int feature = -1;
    double threshold = 0.0;
    double gain_ratio = 0.0;
    int left = -1, right = -1; // indices into DecisionTree::nodes
    // leaf node
    int klass = 0;
    std::vector<int> distribution; // training count per class
};

struct TreeParams {
    int min_leaf = 6;
};

// Numeric-threshold gain-ratio tree (values <= threshold descend left).
class DecisionTree {
public:
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const std::vector<std::string>& classes() const { return classes_; }
    std::size_t feature_count() const { return n_features_; }
    int min_leaf() const { return params_.min_leaf; }
    std::size_t depth() const;
    std::size_t leaf_count() const;

    void save(std::ostream& out) const;
    static DecisionTree load(std::istream& in);

    friend DecisionTree train_tree(const std::vector<std::vector<double>>& vectors,
                                   const std::vector<int>& labels,
                                   const std::vector<std::string>& class_names,
                                   TreeParams params);

private:
    std::vector<TreeNode> nodes_; // nodes_[0] is the root
    std::vector<std::string> classes_;
    std::size_t n_features_ = 0;
    TreeParams params_;
};

// Splits maximize gain ratio over midpoint thresholds; a split is legal only
// when both children keep at least min_leaf instances; recursion stops when
// no legal split improves on zero gain. Leaves predict the majority class,
// ties broken toward the globally more frequent class, then the lower index.
DecisionTree train_tree(const std::vector<std::vector<double>>& vectors,
                        const std::vector<int>& labels,
                        const std::vector<std::string>& class_names,
                        TreeParams params = {});

struct TreePrediction {
    int klass = 0;
    std::vector<double> distribution; // normalized leaf distribution
};

TreePrediction predict_tree(const DecisionTree& tree,
                            const std::vector<double>& vector);

} // namespace reqclass
