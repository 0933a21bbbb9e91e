#pragma once

#include <cstdint>
#include <vector>

#include "reqclass/corpus.hpp"
#include "reqclass/dtree.hpp"
#include "reqclass/metrics.hpp"

namespace reqclass {

struct CvSpec {
    int folds = 10;
    int runs = 1;
    uint64_t seed = 1;
};

struct CvResult {
    ConfusionMatrix pooled; // counts summed over every run and fold
    EvalReport report;      // evaluate(pooled)
    std::vector<EvalReport> per_run;
    FoldPlan plan;
    double seconds = 0.0;
};

struct TreeCvOptions {
    TreeParams tree;
    double cutoff_syntactic = 0.8;
    double cutoff_keywords = 0.7;
    // When true, the feature spec (syntactic ranking + keyword groups) is
    // refit on each training split; the default fits it once on the whole
    // corpus before splitting.
    bool fold_wise_features = false;
};

// Stratified k-fold FR/NFR cross-validation of the decision tree. A training
// split missing one of the two classes is an error naming the run, fold and
// class.
CvResult cross_validate_tree(const Corpus& corpus, const TreeCvOptions& opt,
                             const CvSpec& spec);

struct BnbCvOptions {
    int smoothing = 1;
};

// Stratified k-fold cross-validation of binarized Naive Bayes over the
// corpus's label codes (conventionally an NFR-only corpus). Documents are
// each requirement's content terms. Every label must appear in every
// training split.
CvResult cross_validate_bnb(const Corpus& corpus, const BnbCvOptions& opt,
                            const CvSpec& spec);

} // namespace reqclass
