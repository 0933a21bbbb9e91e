#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace reqclass {

struct TopicParams {
    int K = 10;
    double alpha = -1.0; // negative: use 50/K
    double beta = 0.01;
    int iterations = 1000;
    std::uint64_t seed = 1;

    double effective_alpha() const { return alpha < 0 ? 50.0 / K : alpha; }
};

// Collapsed-Gibbs LDA over term lists. Counts are exposed so conservation
// and conditional-validity properties can be checked externally.
class LdaModel {
public:
    int K() const { return params_.K; }
    const TopicParams& params() const { return params_; }
    const std::vector<std::string>& vocab() const { return vocab_; }
    std::size_t doc_count() const { return doc_topic_.size(); }
    std::size_t token_count() const { return total_tokens_; }

    const std::vector<std::vector<int>>& doc_topic_counts() const { return doc_topic_; }
    const std::vector<std::vector<int>>& topic_word_counts() const { return topic_word_; }
    const std::vector<int>& topic_totals() const { return topic_total_; }

    std::vector<double> doc_topic_dist(std::size_t doc) const;
    int dominant_topic(std::size_t doc) const; // ties -> lowest topic id
    std::vector<std::pair<std::string, int>> top_words(int topic, std::size_t n) const;

    // p(z=k | w, d) computed from current counts; sums to 1.
    std::vector<double> conditional(std::size_t doc, const std::string& term) const;

    void save(std::ostream& out) const;
    static LdaModel load(std::istream& in);

    friend LdaModel train_lda(const std::vector<std::vector<std::string>>& docs,
                              const TopicParams& params);
    friend class GibbsTester;

private:
    TopicParams params_;
    std::vector<std::string> vocab_;
    std::map<std::string, int> term_id_;
    std::vector<std::vector<int>> doc_topic_;  // D x K
    std::vector<std::vector<int>> topic_word_; // K x V
    std::vector<int> topic_total_;             // K
    std::size_t total_tokens_ = 0;
};

LdaModel train_lda(const std::vector<std::vector<std::string>>& docs,
                   const TopicParams& params = {});

// Biterm topic model; biterms are unordered pairs of distinct terms within a
// whole-requirement window.
class BtmModel {
public:
    int K() const { return params_.K; }
    const TopicParams& params() const { return params_; }
    const std::vector<std::string>& vocab() const { return vocab_; }
    std::size_t doc_count() const { return doc_biterms_.size(); }
    std::size_t biterm_count() const { return total_biterms_; }

    const std::vector<int>& topic_biterm_counts() const { return topic_total_; }
    const std::vector<std::vector<int>>& topic_word_counts() const { return topic_word_; }

    std::vector<double> biterm_conditional(int w1, int w2) const; // sums to 1
    std::vector<double> doc_topic_dist(std::size_t doc) const;
    int dominant_topic(std::size_t doc) const;
    std::vector<std::pair<std::string, int>> top_words(int topic, std::size_t n) const;

    void save(std::ostream& out) const;
    static BtmModel load(std::istream& in);

    friend BtmModel train_btm(const std::vector<std::vector<std::string>>& docs,
                              const TopicParams& params);

private:
    TopicParams params_;
    std::vector<std::string> vocab_;
    std::map<std::string, int> term_id_;
    std::vector<std::vector<std::pair<int, int>>> doc_biterms_;
    std::vector<std::vector<int>> topic_word_; // K x V
    std::vector<int> topic_total_;             // biterms per topic
    std::size_t total_biterms_ = 0;
};

BtmModel train_btm(const std::vector<std::vector<std::string>>& docs,
                   const TopicParams& params = {});

// Enumerate a document's biterms (used by tests and by BTM itself).
std::vector<std::pair<std::string, std::string>> enumerate_biterms(
    const std::vector<std::string>& doc);

// Majority label per topic/cluster id over the docs whose dominant id it is.
// Ties pick the lexicographically smaller code; ids with no docs fall back
// to the overall majority label.
std::vector<std::string> majority_label_map(const std::vector<int>& dominant,
                                            const std::vector<std::string>& labels,
                                            int k);

} // namespace reqclass
