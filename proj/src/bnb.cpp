#include "reqclass/bnb.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "reqclass/error.hpp"
#include "reqclass/text.hpp"

namespace reqclass {

BnbModel train_bnb(const std::vector<std::vector<std::string>>& docs,
                   const std::vector<int>& labels,
                   const std::vector<std::string>& class_names, int smoothing) {
    if (docs.empty()) throw UsageError("train_bnb: empty training set");
    if (docs.size() != labels.size())
        throw UsageError("train_bnb: docs/labels size mismatch");
    if (class_names.empty()) throw UsageError("train_bnb: no classes");
    if (smoothing < 1) throw UsageError("train_bnb: smoothing must be >= 1");

    BnbModel m;
    m.classes_ = class_names;
    m.smoothing_ = smoothing;
    m.class_docs_.assign(class_names.size(), 0);
    m.total_docs_ = static_cast<int>(docs.size());

    const std::size_t C = class_names.size();
    for (std::size_t d = 0; d < docs.size(); ++d) {
        int label = labels[d];
        if (label < 0 || label >= static_cast<int>(C))
            throw UsageError("train_bnb: label out of range");
        ++m.class_docs_[static_cast<std::size_t>(label)];
        std::set<std::string> present(docs[d].begin(), docs[d].end());
        for (const auto& t : present) {
            auto [it, fresh] = m.doc_freq_.try_emplace(t, std::vector<int>(C, 0));
            ++it->second[static_cast<std::size_t>(label)];
        }
    }
    for (std::size_t c = 0; c < C; ++c)
        if (m.class_docs_[c] == 0)
            throw UsageError("train_bnb: class '" + class_names[c] +
                             "' has no training documents");
    m.vocab_.reserve(m.doc_freq_.size());
    for (const auto& [t, df] : m.doc_freq_) m.vocab_.push_back(t);
    return m;
}

double BnbModel::prior(std::size_t c) const {
    return static_cast<double>(class_docs_.at(c)) / total_docs_;
}

double BnbModel::likelihood(std::size_t c, const std::string& term) const {
    auto it = doc_freq_.find(term);
    int df = it == doc_freq_.end() ? 0 : it->second.at(c);
    return (df + static_cast<double>(smoothing_)) /
           (class_docs_.at(c) + 2.0 * smoothing_);
}

BnbPrediction predict_bnb(const BnbModel& model, const std::vector<std::string>& doc) {
    const std::size_t C = model.classes().size();
    std::set<std::string> present(doc.begin(), doc.end());

    std::vector<double> logp(C);
    for (std::size_t c = 0; c < C; ++c) {
        double lp = std::log(model.prior(c));
        for (const auto& t : present) {
            if (!std::binary_search(model.vocabulary().begin(),
                                    model.vocabulary().end(), t))
                continue; // out-of-vocabulary terms carry no signal
            lp += std::log(model.likelihood(c, t));
        }
        logp[c] = lp;
    }

    double max_lp = *std::max_element(logp.begin(), logp.end());
    double total = 0.0;
    BnbPrediction out;
    out.posterior.resize(C);
    for (std::size_t c = 0; c < C; ++c) {
        out.posterior[c] = std::exp(logp[c] - max_lp);
        total += out.posterior[c];
    }
    for (auto& p : out.posterior) p /= total;
    out.klass = 0;
    for (std::size_t c = 1; c < C; ++c)
        if (logp[c] > logp[static_cast<std::size_t>(out.klass)])
            out.klass = static_cast<int>(c);
    return out;
}

void BnbModel::save(std::ostream& out) const {
    out << "reqclass-bnb v1\n";
    out << "smoothing " << smoothing_ << "\n";
    out << "classes " << classes_.size() << "\n";
    for (std::size_t c = 0; c < classes_.size(); ++c)
        out << classes_[c] << ' ' << class_docs_[c] << "\n";
    out << "terms " << doc_freq_.size() << "\n";
    for (const auto& [t, df] : doc_freq_) {
        out << t;
        for (int c : df) out << ' ' << c;
        out << "\n";
    }
    out << "end\n";
}

BnbModel BnbModel::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != "reqclass-bnb v1")
        throw DataError("bnb model: bad header");
    BnbModel m;
    while (std::getline(in, line)) {
        auto f = split_whitespace(line);
        if (f.empty()) continue;
        if (f[0] == "end") break;
        if (f[0] == "smoothing" && f.size() == 2) {
            m.smoothing_ = std::stoi(f[1]);
        } else if (f[0] == "classes" && f.size() == 2) {
            std::size_t n = std::stoul(f[1]);
            for (std::size_t i = 0; i < n; ++i) {
                if (!std::getline(in, line))
                    throw DataError("bnb model: truncated classes");
                auto kv = split_whitespace(line);
                if (kv.size() != 2) throw DataError("bnb model: bad class line");
                m.classes_.push_back(kv[0]);
                m.class_docs_.push_back(std::stoi(kv[1]));
                m.total_docs_ += m.class_docs_.back();
            }
        } else if (f[0] == "terms" && f.size() == 2) {
            std::size_t n = std::stoul(f[1]);
            for (std::size_t i = 0; i < n; ++i) {
                if (!std::getline(in, line)) throw DataError("bnb model: truncated terms");
                auto kv = split_whitespace(line);
                if (kv.size() != 1 + m.classes_.size())
                    throw DataError("bnb model: bad term line");
                std::vector<int> df;
                for (std::size_t c = 1; c < kv.size(); ++c)
                    df.push_back(std::stoi(kv[c]));
                m.doc_freq_[kv[0]] = std::move(df);
            }
        } else {
            throw DataError("bnb model: unexpected line '" + line + "'");
        }
    }
    if (m.classes_.empty()) throw DataError("bnb model: missing classes");
    for (const auto& [t, df] : m.doc_freq_) m.vocab_.push_back(t);
    return m;
}

} // namespace reqclass
