#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace reqclass {

// Square count matrix; rows are predicted labels, columns actual labels.
class ConfusionMatrix {
public:
    ConfusionMatrix() = default;
    explicit ConfusionMatrix(std::vector<std::string> labels);

    // Infers the label set (sorted union) when labels is empty.
    static ConfusionMatrix from_pairs(const std::vector<std::string>& predicted,
                                      const std::vector<std::string>& actual,
                                      std::vector<std::string> labels = {});

    void add(const std::string& predicted, const std::string& actual, int n = 1);
    void merge(const ConfusionMatrix& other);

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    std::optional<std::size_t> index_of(const std::string& label) const;

    int at(std::size_t predicted, std::size_t actual) const;
    int row_sum(std::size_t predicted) const; // instances predicted as this label
    int col_sum(std::size_t actual) const;    // actual support
    int trace() const;
    int total() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> counts_;
};

struct ClassMetrics {
    std::optional<double> precision; // empty when no instance was predicted as c
    std::optional<double> recall;    // empty when the class has no actual support
    std::optional<double> f1;
    int support = 0;
};

struct EvalReport {
    ConfusionMatrix matrix;
    std::vector<ClassMetrics> per_class;
    double accuracy = 0.0;
    std::optional<double> kappa;
    std::optional<double> weighted_precision;
    std::optional<double> weighted_recall;
    std::optional<double> weighted_f1;
    std::vector<std::string> warnings;
};

// Chance-corrected agreement; empty when expected agreement is 1.
std::optional<double> cohen_kappa(const ConfusionMatrix& m);

// Per-class precision/recall/F1 with undefined markers, class-support
// weighted averages (undefined entries excluded with a warning), accuracy
// and kappa.
EvalReport evaluate(ConfusionMatrix m);

// Row-stochastic copy; all-zero rows stay zero.
std::vector<std::vector<double>> normalize_confusion(const ConfusionMatrix& m);

std::string report_to_json(const EvalReport& r); // pretty-printed object
void write_report_csv(std::ostream& out, const EvalReport& r);
void write_confusion_csv(std::ostream& out, const ConfusionMatrix& m,
                         bool normalized = false);

} // namespace reqclass
