#include "reqclass/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

#include "reqclass/error.hpp"

namespace reqclass {

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      counts_(labels_.size(), std::vector<int>(labels_.size(), 0)) {
    if (labels_.empty()) throw UsageError("confusion matrix: no labels");
    std::set<std::string> uniq(labels_.begin(), labels_.end());
    if (uniq.size() != labels_.size())
        throw UsageError("confusion matrix: duplicate labels");
}

ConfusionMatrix ConfusionMatrix::from_pairs(const std::vector<std::string>& predicted,
                                            const std::vector<std::string>& actual,
                                            std::vector<std::string> labels) {
    if (predicted.size() != actual.size())
        throw UsageError("confusion matrix: predictions/truth length mismatch");
    if (predicted.empty()) throw UsageError("confusion matrix: no instances");
    if (labels.empty()) {
        std::set<std::string> all(predicted.begin(), predicted.end());
        all.insert(actual.begin(), actual.end());
        labels.assign(all.begin(), all.end());
    }
    ConfusionMatrix m(std::move(labels));
    for (std::size_t i = 0; i < predicted.size(); ++i) m.add(predicted[i], actual[i]);
    return m;
}

std::optional<std::size_t> ConfusionMatrix::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

void ConfusionMatrix::add(const std::string& predicted, const std::string& actual,
                          int n) {
    auto p = index_of(predicted);
    auto a = index_of(actual);
    if (!p) throw UsageError("confusion matrix: unknown predicted label " + predicted);
    if (!a) throw UsageError("confusion matrix: unknown actual label " + actual);
    counts_[*p][*a] += n;
}

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
    if (labels_ != other.labels_)
        throw UsageError("confusion matrix: merging mismatched label sets");
    for (std::size_t p = 0; p < size(); ++p)
        for (std::size_t a = 0; a < size(); ++a) counts_[p][a] += other.counts_[p][a];
}

int ConfusionMatrix::at(std::size_t predicted, std::size_t actual) const {
    return counts_.at(predicted).at(actual);
}

int ConfusionMatrix::row_sum(std::size_t predicted) const {
    int s = 0;
    for (int c : counts_.at(predicted)) s += c;
    return s;
}

int ConfusionMatrix::col_sum(std::size_t actual) const {
    int s = 0;
    for (const auto& row : counts_) s += row.at(actual);
    return s;
}

int ConfusionMatrix::trace() const {
    int s = 0;
    for (std::size_t i = 0; i < size(); ++i) s += counts_[i][i];
    return s;
}

int ConfusionMatrix::total() const {
    int s = 0;
    for (const auto& row : counts_)
        for (int c : row) s += c;
    return s;
}

std::optional<double> cohen_kappa(const ConfusionMatrix& m) {
    const double n = m.total();
    if (n <= 0) throw UsageError("kappa: empty matrix");
    double po = m.trace() / n;
    double pe = 0.0;
    for (std::size_t c = 0; c < m.size(); ++c)
        pe += (m.row_sum(c) / n) * (m.col_sum(c) / n);
    if (std::abs(1.0 - pe) < 1e-15) return std::nullopt;
    return (po - pe) / (1.0 - pe);
}

EvalReport evaluate(ConfusionMatrix m) {
    EvalReport r;
    const std::size_t k = m.size();
    const int n = m.total();
    if (n <= 0) throw UsageError("evaluate: empty confusion matrix");

    r.per_class.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
        ClassMetrics& cm = r.per_class[c];
        int diag = m.at(c, c);
        int pred = m.row_sum(c);
        int act = m.col_sum(c);
        cm.support = act;
        if (pred > 0) cm.precision = static_cast<double>(diag) / pred;
        if (act > 0) cm.recall = static_cast<double>(diag) / act;
        if (cm.precision && cm.recall) {
            double s = *cm.precision + *cm.recall;
            cm.f1 = s > 0 ? 2.0 * *cm.precision * *cm.recall / s : 0.0;
        }
    }

    r.accuracy = static_cast<double>(m.trace()) / n;
    r.kappa = cohen_kappa(m);
    if (!r.kappa)
        r.warnings.push_back("kappa undefined: expected agreement is 1");

    auto weighted = [&](auto getter, const char* name) -> std::optional<double> {
        double sum = 0.0;
        int weight = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const auto& v = getter(r.per_class[c]);
            if (r.per_class[c].support == 0) continue;
            if (!v) {
                r.warnings.push_back(std::string(name) + " undefined for class '" +
                                     m.labels()[c] +
                                     "'; excluded from weighted average");
                continue;
            }
            sum += *v * r.per_class[c].support;
            weight += r.per_class[c].support;
        }
        if (weight == 0) return std::nullopt;
        return sum / weight;
    };
    r.weighted_precision =
        weighted([](const ClassMetrics& c) -> const std::optional<double>& {
            return c.precision;
        }, "precision");
    r.weighted_recall = weighted(
        [](const ClassMetrics& c) -> const std::optional<double>& { return c.recall; },
        "recall");
    r.weighted_f1 = weighted(
        [](const ClassMetrics& c) -> const std::optional<double>& { return c.f1; },
        "f1");

    r.matrix = std::move(m);
    return r;
}

std::vector<std::vector<double>> normalize_confusion(const ConfusionMatrix& m) {
    std::vector<std::vector<double>> out(m.size(), std::vector<double>(m.size(), 0.0));
    for (std::size_t p = 0; p < m.size(); ++p) {
        int rs = m.row_sum(p);
        if (rs == 0) continue;
        for (std::size_t a = 0; a < m.size(); ++a)
            out[p][a] = static_cast<double>(m.at(p, a)) / rs;
    }
    return out;
}

namespace {

nlohmann::json opt_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

} // namespace

std::string report_to_json(const EvalReport& r) {
    nlohmann::json j;
    j["labels"] = r.matrix.labels();
    auto& counts = j["confusion"] = nlohmann::json::array();
    for (std::size_t p = 0; p < r.matrix.size(); ++p) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t a = 0; a < r.matrix.size(); ++a) row.push_back(r.matrix.at(p, a));
        counts.push_back(row);
    }
    j["accuracy"] = r.accuracy;
    j["kappa"] = opt_json(r.kappa);
    j["weighted_precision"] = opt_json(r.weighted_precision);
    j["weighted_recall"] = opt_json(r.weighted_recall);
    j["weighted_f1"] = opt_json(r.weighted_f1);
    auto& per_class = j["per_class"] = nlohmann::json::object();
    for (std::size_t c = 0; c < r.matrix.size(); ++c) {
        nlohmann::json cm;
        cm["precision"] = opt_json(r.per_class[c].precision);
        cm["recall"] = opt_json(r.per_class[c].recall);
        cm["f1"] = opt_json(r.per_class[c].f1);
        cm["support"] = r.per_class[c].support;
        per_class[r.matrix.labels()[c]] = cm;
    }
    j["total"] = r.matrix.total();
    j["correct"] = r.matrix.trace();
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

namespace {

std::string csv_opt(const std::optional<double>& v) {
    if (!v) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return buf;
}

} // namespace

void write_report_csv(std::ostream& out, const EvalReport& r) {
    int total = r.matrix.total();
    int correct = r.matrix.trace();
    out << "correctly_classified,incorrectly_classified,accuracy,"
           "weighted_precision,weighted_recall,weighted_f1,kappa\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r.accuracy);
    out << correct << ',' << (total - correct) << ',' << buf << ','
        << csv_opt(r.weighted_precision) << ',' << csv_opt(r.weighted_recall) << ','
        << csv_opt(r.weighted_f1) << ',' << csv_opt(r.kappa) << "\n";
    out << "\n";
    out << "class,precision,recall,f1,support\n";
    for (std::size_t c = 0; c < r.matrix.size(); ++c) {
        const auto& cm = r.per_class[c];
        out << r.matrix.labels()[c] << ',' << csv_opt(cm.precision) << ','
            << csv_opt(cm.recall) << ',' << csv_opt(cm.f1) << ',' << cm.support
            << "\n";
    }
}

void write_confusion_csv(std::ostream& out, const ConfusionMatrix& m,
                         bool normalized) {
    out << "predicted\\actual";
    for (const auto& l : m.labels()) out << ',' << l;
    out << "\n";
    auto norm = normalized ? normalize_confusion(m)
                           : std::vector<std::vector<double>>{};
    for (std::size_t p = 0; p < m.size(); ++p) {
        out << m.labels()[p];
        for (std::size_t a = 0; a < m.size(); ++a) {
            if (normalized) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6f", norm[p][a]);
                out << ',' << buf;
            } else {
                out << ',' << m.at(p, a);
            }
        }
        out << "\n";
    }
}

} // namespace reqclass
