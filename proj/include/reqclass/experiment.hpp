#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqclass/corpus.hpp"
#include "reqclass/cv.hpp"
#include "reqclass/metrics.hpp"
#include "reqclass/pipeline.hpp"

namespace reqclass {

enum class Task { FrNfr, NfrSub };
enum class Method { Tree, Bnb, Lda, Btm, Hierarchical, KMeans, Hybrid };

std::string_view task_name(Task t);
std::string_view method_name(Method m);
std::optional<Task> task_from_name(std::string_view name);
std::optional<Method> method_from_name(std::string_view name);

// One experiment: which corpus, how to preprocess it, which task/method to
// evaluate and with what hyperparameters. Serialized as a flat JSON object;
// unknown keys are rejected so typos surface as config errors.
struct ExperimentConfig {
    std::string corpus;
    std::string corpus_format = "auto"; // auto | csv | arff
    std::string dictionary;             // entity dictionary path ("" = none)
    std::string rules;                  // rewrite rule path ("" = none)

    bool preprocess = true;
    bool normalize = true;
    bool blind_entities = true;
    bool temporal_rules = true;
    bool nfr_rules = true;

    Task task = Task::NfrSub;
    Method method = Method::Bnb;

    int folds = 10;
    int runs = 1;
    uint64_t seed = 1;

    // decision tree
    int min_leaf = 6;
    double cutoff_syntactic = 0.8;
    double cutoff_keywords = 0.7;
    bool fold_wise_features = false;

    // binarized naive Bayes
    int smoothing = 1;

    // topic models
    int topics = 10;
    double alpha = -1.0; // negative: 50 / topics
    double beta = 0.01;
    int iterations = 1000;

    // clustering
    int clusters = 10;
    int max_iters = 100;
    std::string linkage = "average"; // single | complete | average

    // NFR sub-classification scope
    bool exclude_po = true;

    // clustering-tendency diagnostics attached to clustering reports
    double hopkins_fraction = 0.1;
    int hopkins_seeds = 20;

    static ExperimentConfig from_json(const std::string& text);
    static ExperimentConfig load(const std::string& path);
    std::string to_json() const; // round-trips through from_json
};

struct EvaluateOutcome {
    ExperimentConfig config;
    EvalReport report;
    std::vector<EvalReport> per_run; // cross-validated methods only
    std::optional<double> hopkins;   // clustering methods only
    std::optional<double> silhouette_mean;
    double seconds = 0.0; // wall time; never serialized

    // Full result object: metadata + metrics + confusion counts. Identical
    // config and seed give byte-identical text.
    std::string to_json() const;
};

// Loads the corpus, optionally runs the preprocessing pipeline, then
// evaluates the configured task/method.
EvaluateOutcome run_evaluate(const ExperimentConfig& cfg);

struct PreprocessOutcome {
    Corpus original;
    Corpus processed;
    std::vector<AuditEntry> audit;
};

PreprocessOutcome run_preprocess(const ExperimentConfig& cfg);

struct IngestOutcome {
    Corpus corpus;
    std::map<std::string, int> by_label;
    int fr = 0;
    int nfr = 0;
};

IngestOutcome run_ingest(const std::string& path, const std::string& format_name);

// Consolidates evaluate-output JSON documents into one CSV with per-class
// recall/precision columns plus weighted totals, one row per report. Needs
// at least two reports; mismatched label sets are an error.
std::string compare_reports_csv(const std::vector<std::string>& report_jsons);

// Rebuilds the confusion matrix embedded in an evaluate-output JSON document.
ConfusionMatrix matrix_from_report_json(const std::string& text);

// Writes content to path via a temporary file in the same directory followed
// by an atomic rename. Creates missing parent directories.
void atomic_write_file(const std::string& path, const std::string& content);

} // namespace reqclass
