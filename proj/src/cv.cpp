#include "reqclass/cv.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "reqclass/bnb.hpp"
#include "reqclass/cooccur.hpp"
#include "reqclass/error.hpp"
#include "reqclass/features.hpp"
#include "reqclass/pipeline.hpp"

namespace reqclass {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_training_classes(const std::vector<int>& train_labels,
                            const std::vector<std::string>& class_names,
                            int run, int fold) {
    std::vector<bool> seen(class_names.size(), false);
    for (int l : train_labels) seen[static_cast<size_t>(l)] = true;
    for (size_t c = 0; c < class_names.size(); ++c) {
        if (!seen[c]) {
            throw DataError("run " + std::to_string(run + 1) + " fold " +
                            std::to_string(fold + 1) +
                            ": training split lacks class '" + class_names[c] +
                            "'");
        }
    }
}

} // namespace

CvResult cross_validate_tree(const Corpus& corpus, const TreeCvOptions& opt,
                             const CvSpec& spec) {
    const auto start = Clock::now();
    const size_t n = corpus.size();
    if (n == 0) throw UsageError("cross_validate_tree: empty corpus");

    std::vector<std::vector<Token>> docs(n);
    std::vector<bool> is_nfr(n);
    std::vector<int> labels(n);
    for (size_t i = 0; i < n; ++i) {
        docs[i] = analyze(corpus.at(i).text);
        is_nfr[i] = corpus.at(i).label.is_nfr();
        labels[i] = is_nfr[i] ? 1 : 0;
    }
    const std::vector<std::string> class_names = {"FR", "NFR"};

    FeatureSpec global_spec;
    std::vector<std::vector<double>> global_vectors;
    if (!opt.fold_wise_features) {
        global_spec = fit_feature_spec(docs, is_nfr, opt.cutoff_syntactic,
                                       opt.cutoff_keywords);
        global_vectors.resize(n);
        for (size_t i = 0; i < n; ++i)
            global_vectors[i] = extract_vector(docs[i], global_spec);
    }

    CvResult result;
    result.plan = stratified_folds(corpus, spec.folds, spec.runs, spec.seed);
    result.pooled = ConfusionMatrix(class_names);

    for (int run = 0; run < spec.runs; ++run) {
        const auto& fold_of = result.plan.assignment[static_cast<size_t>(run)];
        ConfusionMatrix run_matrix(class_names);
        for (int fold = 0; fold < spec.folds; ++fold) {
            std::vector<size_t> train_idx, test_idx;
            for (size_t i = 0; i < n; ++i) {
                if (fold_of.at(corpus.at(i).id) == fold)
                    test_idx.push_back(i);
                else
                    train_idx.push_back(i);
            }
            if (test_idx.empty()) continue;

            std::vector<int> train_labels;
            train_labels.reserve(train_idx.size());
            for (size_t i : train_idx) train_labels.push_back(labels[i]);
            check_training_classes(train_labels, class_names, run, fold);

            FeatureSpec fold_spec;
            const FeatureSpec* active = &global_spec;
            if (opt.fold_wise_features) {
                std::vector<std::vector<Token>> train_docs;
                std::vector<bool> train_nfr;
                train_docs.reserve(train_idx.size());
                for (size_t i : train_idx) {
                    train_docs.push_back(docs[i]);
                    train_nfr.push_back(is_nfr[i]);
                }
                fold_spec = fit_feature_spec(train_docs, train_nfr,
                                             opt.cutoff_syntactic,
                                             opt.cutoff_keywords);
                active = &fold_spec;
            }

            std::vector<std::vector<double>> train_vecs;
            train_vecs.reserve(train_idx.size());
            for (size_t i : train_idx) {
                train_vecs.push_back(opt.fold_wise_features
                                         ? extract_vector(docs[i], *active)
                                         : global_vectors[i]);
            }
            DecisionTree tree =
                train_tree(train_vecs, train_labels, class_names, opt.tree);

            for (size_t i : test_idx) {
                const std::vector<double> v =
                    opt.fold_wise_features ? extract_vector(docs[i], *active)
                                           : global_vectors[i];
                const TreePrediction p = predict_tree(tree, v);
                run_matrix.add(class_names[static_cast<size_t>(p.klass)],
                               class_names[static_cast<size_t>(labels[i])]);
            }
        }
        result.per_run.push_back(evaluate(run_matrix));
        result.pooled.merge(run_matrix);
    }

    result.report = evaluate(result.pooled);
    result.seconds = elapsed_seconds(start);
    return result;
}

CvResult cross_validate_bnb(const Corpus& corpus, const BnbCvOptions& opt,
                            const CvSpec& spec) {
    const auto start = Clock::now();
    const size_t n = corpus.size();
    if (n == 0) throw UsageError("cross_validate_bnb: empty corpus");

    std::set<std::string> label_set;
    for (const auto& r : corpus) label_set.insert(r.label.code());
    const std::vector<std::string> class_names(label_set.begin(),
                                               label_set.end());
    if (class_names.size() < 2) {
        throw UsageError("cross_validate_bnb: need at least two labels");
    }

    std::vector<std::vector<std::string>> docs(n);
    std::vector<int> labels(n);
    for (size_t i = 0; i < n; ++i) {
        docs[i] = content_terms(analyze(corpus.at(i).text));
        const auto it = std::lower_bound(class_names.begin(), class_names.end(),
                                         corpus.at(i).label.code());
        labels[i] = static_cast<int>(it - class_names.begin());
    }

    CvResult result;
    result.plan = stratified_folds(corpus, spec.folds, spec.runs, spec.seed);
    result.pooled = ConfusionMatrix(class_names);

    for (int run = 0; run < spec.runs; ++run) {
        const auto& fold_of = result.plan.assignment[static_cast<size_t>(run)];
        ConfusionMatrix run_matrix(class_names);
        for (int fold = 0; fold < spec.folds; ++fold) {
            std::vector<std::vector<std::string>> train_docs;
            std::vector<int> train_labels;
            std::vector<size_t> test_idx;
            for (size_t i = 0; i < n; ++i) {
                if (fold_of.at(corpus.at(i).id) == fold) {
                    test_idx.push_back(i);
                } else {
                    train_docs.push_back(docs[i]);
                    train_labels.push_back(labels[i]);
                }
            }
            if (test_idx.empty()) continue;
            check_training_classes(train_labels, class_names, run, fold);

            const BnbModel model =
                train_bnb(train_docs, train_labels, class_names, opt.smoothing);
            for (size_t i : test_idx) {
                const BnbPrediction p = predict_bnb(model, docs[i]);
                run_matrix.add(class_names[static_cast<size_t>(p.klass)],
                               class_names[static_cast<size_t>(labels[i])]);
            }
        }
        result.per_run.push_back(evaluate(run_matrix));
        result.pooled.merge(run_matrix);
    }

    result.report = evaluate(result.pooled);
    result.seconds = elapsed_seconds(start);
    return result;
}

} // namespace reqclass
