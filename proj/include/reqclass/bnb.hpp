#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace reqclass {

// Multivariate Bernoulli-style Naive Bayes over binarized (presence-only)
// document terms. Likelihood of term t in class c:
//   P(t | c) = (docs in c containing t + smoothing) / (n_c + 2 * smoothing)
// Scoring multiplies the prior by P(t | c) for the document's distinct
// in-vocabulary terms.
class BnbModel {
public:
    const std::vector<std::string>& classes() const { return classes_; }
    const std::vector<std::string>& vocabulary() const { return vocab_; }
    int smoothing() const { return smoothing_; }
    int class_doc_count(std::size_t c) const { return class_docs_.at(c); }
    int total_docs() const { return total_docs_; }

    double prior(std::size_t c) const;
    double likelihood(std::size_t c, const std::string& term) const;

    void save(std::ostream& out) const;
    static BnbModel load(std::istream& in);

    friend BnbModel train_bnb(const std::vector<std::vector<std::string>>& docs,
                              const std::vector<int>& labels,
                              const std::vector<std::string>& class_names,
                              int smoothing);

private:
    std::vector<std::string> classes_;
    std::vector<std::string> vocab_;
    std::map<std::string, std::vector<int>> doc_freq_; // term -> df per class
    std::vector<int> class_docs_;
    int total_docs_ = 0;
    int smoothing_ = 1;
};

// Every class named in class_names must receive at least one document.
BnbModel train_bnb(const std::vector<std::vector<std::string>>& docs,
                   const std::vector<int>& labels,
                   const std::vector<std::string>& class_names, int smoothing = 1);

struct BnbPrediction {
    int klass = 0;
    std::vector<double> posterior; // sums to 1
};

// Out-of-vocabulary terms are ignored; argmax ties go to the lower class
// index (class names are conventionally sorted).
BnbPrediction predict_bnb(const BnbModel& model, const std::vector<std::string>& doc);

} // namespace reqclass
