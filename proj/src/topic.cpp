#include "reqclass/topic.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "reqclass/error.hpp"
#include "reqclass/rng.hpp"
#include "reqclass/text.hpp"

namespace reqclass {

namespace {

std::pair<std::vector<std::string>, std::map<std::string, int>> build_vocab(
    const std::vector<std::vector<std::string>>& docs) {
    std::map<std::string, int> id;
    std::vector<std::string> vocab;
    for (const auto& d : docs)
        for (const auto& t : d)
            if (id.emplace(t, static_cast<int>(vocab.size())).second)
                vocab.push_back(t);
    return {vocab, id};
}

int sample_discrete(const std::vector<double>& weights, Rng& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = rng.next_double() * total;
    double cum = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        cum += weights[k];
        if (u < cum) return static_cast<int>(k);
    }
    return static_cast<int>(weights.size()) - 1;
}

void check_params(const TopicParams& p) {
    if (p.K < 1) throw UsageError("topic model: K must be >= 1");
    if (p.beta <= 0 || p.effective_alpha() <= 0)
        throw UsageError("topic model: alpha and beta must be positive");
    if (p.iterations < 0) throw UsageError("topic model: negative iterations");
}

std::vector<std::pair<std::string, int>> top_words_impl(
    const std::vector<std::string>& vocab, const std::vector<int>& counts,
    std::size_t n) {
    std::vector<int> order(vocab.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (counts[static_cast<std::size_t>(a)] != counts[static_cast<std::size_t>(b)])
            return counts[static_cast<std::size_t>(a)] >
                   counts[static_cast<std::size_t>(b)];
        return vocab[static_cast<std::size_t>(a)] < vocab[static_cast<std::size_t>(b)];
    });
    std::vector<std::pair<std::string, int>> out;
    for (std::size_t i = 0; i < n && i < order.size(); ++i) {
        int w = order[i];
        out.emplace_back(vocab[static_cast<std::size_t>(w)],
                         counts[static_cast<std::size_t>(w)]);
    }
    return out;
}

} // namespace

LdaModel train_lda(const std::vector<std::vector<std::string>>& docs,
                   const TopicParams& params) {
    check_params(params);
    LdaModel m;
    m.params_ = params;
    std::tie(m.vocab_, m.term_id_) = build_vocab(docs);
    if (m.vocab_.empty()) throw DataError("lda: empty vocabulary");

    const int K = params.K;
    const double alpha = params.effective_alpha();
    const double beta = params.beta;
    const double vbeta = beta * static_cast<double>(m.vocab_.size());
    const std::size_t D = docs.size();

    std::vector<std::vector<int>> words(D);
    for (std::size_t d = 0; d < D; ++d) {
        words[d].reserve(docs[d].size());
        for (const auto& t : docs[d]) words[d].push_back(m.term_id_[t]);
        m.total_tokens_ += docs[d].size();
    }

    m.doc_topic_.assign(D, std::vector<int>(static_cast<std::size_t>(K), 0));
    m.topic_word_.assign(static_cast<std::size_t>(K),
                         std::vector<int>(m.vocab_.size(), 0));
    m.topic_total_.assign(static_cast<std::size_t>(K), 0);

    Rng rng(params.seed);
    std::vector<std::vector<int>> z(D);
    for (std::size_t d = 0; d < D; ++d) {
        z[d].resize(words[d].size());
        for (std::size_t i = 0; i < words[d].size(); ++i) {
            int k = static_cast<int>(rng.next_index(static_cast<std::uint64_t>(K)));
            z[d][i] = k;
            ++m.doc_topic_[d][static_cast<std::size_t>(k)];
            ++m.topic_word_[static_cast<std::size_t>(k)]
                           [static_cast<std::size_t>(words[d][i])];
            ++m.topic_total_[static_cast<std::size_t>(k)];
        }
    }

    std::vector<double> p(static_cast<std::size_t>(K));
    for (int iter = 0; iter < params.iterations; ++iter) {
        for (std::size_t d = 0; d < D; ++d) {
            for (std::size_t i = 0; i < words[d].size(); ++i) {
                const int w = words[d][i];
                const int old = z[d][i];
                --m.doc_topic_[d][static_cast<std::size_t>(old)];
                --m.topic_word_[static_cast<std::size_t>(old)][static_cast<std::size_t>(w)];
                --m.topic_total_[static_cast<std::size_t>(old)];
                for (int k = 0; k < K; ++k) {
                    auto ks = static_cast<std::size_t>(k);
                    p[ks] = (m.doc_topic_[d][ks] + alpha) *
                            (m.topic_word_[ks][static_cast<std::size_t>(w)] + beta) /
                            (m.topic_total_[ks] + vbeta);
                }
                int fresh = sample_discrete(p, rng);
                z[d][i] = fresh;
                ++m.doc_topic_[d][static_cast<std::size_t>(fresh)];
                ++m.topic_word_[static_cast<std::size_t>(fresh)][static_cast<std::size_t>(w)];
                ++m.topic_total_[static_cast<std::size_t>(fresh)];
            }
        }
    }
    return m;
}

std::vector<double> LdaModel::doc_topic_dist(std::size_t doc) const {
    const double alpha = params_.effective_alpha();
    const auto& counts = doc_topic_.at(doc);
    double total = 0.0;
    for (int c : counts) total += c;
    total += alpha * params_.K;
    std::vector<double> out(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        out[k] = (counts[k] + alpha) / total;
    return out;
}

int LdaModel::dominant_topic(std::size_t doc) const {
    const auto& counts = doc_topic_.at(doc);
    int best = 0;
    for (int k = 1; k < params_.K; ++k)
        if (counts[static_cast<std::size_t>(k)] > counts[static_cast<std::size_t>(best)])
            best = k;
    return best;
}

std::vector<std::pair<std::string, int>> LdaModel::top_words(int topic,
                                                             std::size_t n) const {
    return top_words_impl(vocab_, topic_word_.at(static_cast<std::size_t>(topic)), n);
}

std::vector<double> LdaModel::conditional(std::size_t doc,
                                          const std::string& term) const {
    auto it = term_id_.find(term);
    if (it == term_id_.end()) throw UsageError("lda: term not in vocabulary");
    const int w = it->second;
    const double alpha = params_.effective_alpha();
    const double vbeta = params_.beta * static_cast<double>(vocab_.size());
    std::vector<double> p(static_cast<std::size_t>(params_.K));
    double total = 0.0;
    for (int k = 0; k < params_.K; ++k) {
        auto ks = static_cast<std::size_t>(k);
        p[ks] = (doc_topic_.at(doc)[ks] + alpha) *
                (topic_word_[ks][static_cast<std::size_t>(w)] + params_.beta) /
                (topic_total_[ks] + vbeta);
        total += p[ks];
    }
    for (auto& v : p) v /= total;
    return p;
}

std::vector<std::pair<std::string, std::string>> enumerate_biterms(
    const std::vector<std::string>& doc) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        for (std::size_t j = i + 1; j < doc.size(); ++j) {
            if (doc[i] == doc[j]) continue;
            out.emplace_back(std::min(doc[i], doc[j]), std::max(doc[i], doc[j]));
        }
    }
    return out;
}

BtmModel train_btm(const std::vector<std::vector<std::string>>& docs,
                   const TopicParams& params) {
    check_params(params);
    BtmModel m;
    m.params_ = params;
    std::tie(m.vocab_, m.term_id_) = build_vocab(docs);

    m.doc_biterms_.resize(docs.size());
    std::vector<std::pair<int, int>> all;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (const auto& [a, b] : enumerate_biterms(docs[d])) {
            std::pair<int, int> bt{m.term_id_[a], m.term_id_[b]};
            m.doc_biterms_[d].push_back(bt);
            all.push_back(bt);
        }
    }
    m.total_biterms_ = all.size();
    if (all.empty()) throw DataError("btm: no biterms extractable from corpus");

    const int K = params.K;
    const double alpha = params.effective_alpha();
    const double beta = params.beta;
    const double vbeta = beta * static_cast<double>(m.vocab_.size());

    m.topic_word_.assign(static_cast<std::size_t>(K),
                         std::vector<int>(m.vocab_.size(), 0));
    m.topic_total_.assign(static_cast<std::size_t>(K), 0);

    Rng rng(params.seed);
    std::vector<int> z(all.size());
    for (std::size_t b = 0; b < all.size(); ++b) {
        int k = static_cast<int>(rng.next_index(static_cast<std::uint64_t>(K)));
        z[b] = k;
        auto ks = static_cast<std::size_t>(k);
        ++m.topic_total_[ks];
        ++m.topic_word_[ks][static_cast<std::size_t>(all[b].first)];
        ++m.topic_word_[ks][static_cast<std::size_t>(all[b].second)];
    }

    std::vector<double> p(static_cast<std::size_t>(K));
    for (int iter = 0; iter < params.iterations; ++iter) {
        for (std::size_t b = 0; b < all.size(); ++b) {
            const auto [w1, w2] = all[b];
            const int old = z[b];
            auto os = static_cast<std::size_t>(old);
            --m.topic_total_[os];
            --m.topic_word_[os][static_cast<std::size_t>(w1)];
            --m.topic_word_[os][static_cast<std::size_t>(w2)];
            for (int k = 0; k < K; ++k) {
                auto ks = static_cast<std::size_t>(k);
                double words_in_k = 2.0 * m.topic_total_[ks];
                p[ks] = (m.topic_total_[ks] + alpha) *
                        (m.topic_word_[ks][static_cast<std::size_t>(w1)] + beta) /
                        (words_in_k + vbeta) *
                        (m.topic_word_[ks][static_cast<std::size_t>(w2)] + beta) /
                        (words_in_k + 1.0 + vbeta);
            }
            int fresh = sample_discrete(p, rng);
            z[b] = fresh;
            auto fs = static_cast<std::size_t>(fresh);
            ++m.topic_total_[fs];
            ++m.topic_word_[fs][static_cast<std::size_t>(w1)];
            ++m.topic_word_[fs][static_cast<std::size_t>(w2)];
        }
    }
    return m;
}

std::vector<double> BtmModel::biterm_conditional(int w1, int w2) const {
    const double alpha = params_.effective_alpha();
    const double beta = params_.beta;
    const double vbeta = beta * static_cast<double>(vocab_.size());
    std::vector<double> p(static_cast<std::size_t>(params_.K));
    double total = 0.0;
    for (int k = 0; k < params_.K; ++k) {
        auto ks = static_cast<std::size_t>(k);
        double words_in_k = 2.0 * topic_total_[ks];
        p[ks] = (topic_total_[ks] + alpha) *
                (topic_word_[ks][static_cast<std::size_t>(w1)] + beta) /
                (words_in_k + vbeta) *
                (topic_word_[ks][static_cast<std::size_t>(w2)] + beta) /
                (words_in_k + 1.0 + vbeta);
        total += p[ks];
    }
    for (auto& v : p) v /= total;
    return p;
}

std::vector<double> BtmModel::doc_topic_dist(std::size_t doc) const {
    const auto& biterms = doc_biterms_.at(doc);
    std::vector<double> out(static_cast<std::size_t>(params_.K),
                            biterms.empty() ? 1.0 / params_.K : 0.0);
    if (biterms.empty()) return out;
    for (const auto& [w1, w2] : biterms) {
        auto p = biterm_conditional(w1, w2);
        for (std::size_t k = 0; k < p.size(); ++k) out[k] += p[k];
    }
    for (auto& v : out) v /= static_cast<double>(biterms.size());
    return out;
}

int BtmModel::dominant_topic(std::size_t doc) const {
    auto dist = doc_topic_dist(doc);
    int best = 0;
    for (int k = 1; k < params_.K; ++k)
        if (dist[static_cast<std::size_t>(k)] > dist[static_cast<std::size_t>(best)])
            best = k;
    return best;
}

std::vector<std::pair<std::string, int>> BtmModel::top_words(int topic,
                                                             std::size_t n) const {
    return top_words_impl(vocab_, topic_word_.at(static_cast<std::size_t>(topic)), n);
}

std::vector<std::string> majority_label_map(const std::vector<int>& dominant,
                                            const std::vector<std::string>& labels,
                                            int k) {
    if (dominant.size() != labels.size())
        throw UsageError("majority_label_map: size mismatch");
    std::map<std::string, int> overall;
    for (const auto& l : labels) ++overall[l];
    std::string fallback;
    int best = -1;
    for (const auto& [code, n] : overall) {
        if (n > best) {
            best = n;
            fallback = code;
        }
    }

    std::vector<std::map<std::string, int>> per_id(static_cast<std::size_t>(k));
    for (std::size_t d = 0; d < dominant.size(); ++d) {
        int id = dominant[d];
        if (id < 0 || id >= k)
            throw UsageError("majority_label_map: id out of range");
        ++per_id[static_cast<std::size_t>(id)][labels[d]];
    }

    std::vector<std::string> out(static_cast<std::size_t>(k));
    for (int id = 0; id < k; ++id) {
        const auto& counts = per_id[static_cast<std::size_t>(id)];
        if (counts.empty()) {
            out[static_cast<std::size_t>(id)] = fallback;
            continue;
        }
        std::string code;
        int n = -1;
        for (const auto& [c, cnt] : counts) { // map order: smaller code wins ties
            if (cnt > n) {
                n = cnt;
                code = c;
            }
        }
        out[static_cast<std::size_t>(id)] = code;
    }
    return out;
}

namespace {

void save_matrix(std::ostream& out, const std::vector<std::vector<int>>& m) {
    for (const auto& row : m) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i];
        out << "\n";
    }
}

std::vector<int> parse_int_row(const std::string& line, std::size_t expect,
                               const char* what) {
    auto f = split_whitespace(line);
    if (f.size() != expect) throw DataError(std::string(what) + ": bad row width");
    std::vector<int> row;
    row.reserve(f.size());
    for (const auto& s : f) row.push_back(std::stoi(s));
    return row;
}

std::string params_line(const TopicParams& p) {
    std::ostringstream os;
    os.precision(17);
    os << "params " << p.K << ' ' << p.effective_alpha() << ' ' << p.beta << ' '
       << p.iterations << ' ' << p.seed;
    return os.str();
}

TopicParams parse_params_line(const std::vector<std::string>& f, const char* what) {
    if (f.size() != 6) throw DataError(std::string(what) + ": bad params line");
    TopicParams p;
    p.K = std::stoi(f[1]);
    p.alpha = std::stod(f[2]);
    p.beta = std::stod(f[3]);
    p.iterations = std::stoi(f[4]);
    p.seed = std::stoull(f[5]);
    return p;
}

} // namespace

void LdaModel::save(std::ostream& out) const {
    out << "reqclass-lda v1\n";
    out << params_line(params_) << "\n";
    out << "vocab " << vocab_.size() << "\n";
    for (const auto& t : vocab_) out << t << "\n";
    out << "doc_topic " << doc_topic_.size() << "\n";
    save_matrix(out, doc_topic_);
    out << "topic_word " << topic_word_.size() << "\n";
    save_matrix(out, topic_word_);
    out << "end\n";
}

LdaModel LdaModel::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != "reqclass-lda v1")
        throw DataError("lda model: bad header");
    LdaModel m;
    while (std::getline(in, line)) {
        auto f = split_whitespace(line);
        if (f.empty()) continue;
        if (f[0] == "end") break;
        if (f[0] == "params") {
            m.params_ = parse_params_line(f, "lda model");
        } else if (f[0] == "vocab" && f.size() == 2) {
            std::size_t v = std::stoul(f[1]);
            for (std::size_t i = 0; i < v; ++i) {
                if (!std::getline(in, line)) throw DataError("lda model: truncated vocab");
                m.vocab_.push_back(trim(line));
                m.term_id_[m.vocab_.back()] = static_cast<int>(i);
            }
        } else if (f[0] == "doc_topic" && f.size() == 2) {
            std::size_t d = std::stoul(f[1]);
            for (std::size_t i = 0; i < d; ++i) {
                if (!std::getline(in, line))
                    throw DataError("lda model: truncated doc_topic");
                m.doc_topic_.push_back(parse_int_row(
                    line, static_cast<std::size_t>(m.params_.K), "lda model"));
            }
        } else if (f[0] == "topic_word" && f.size() == 2) {
            std::size_t k = std::stoul(f[1]);
            for (std::size_t i = 0; i < k; ++i) {
                if (!std::getline(in, line))
                    throw DataError("lda model: truncated topic_word");
                m.topic_word_.push_back(parse_int_row(line, m.vocab_.size(), "lda model"));
            }
        } else {
            throw DataError("lda model: unexpected line '" + line + "'");
        }
    }
    if (m.topic_word_.size() != static_cast<std::size_t>(m.params_.K))
        throw DataError("lda model: topic_word size mismatch");
    m.topic_total_.assign(static_cast<std::size_t>(m.params_.K), 0);
    for (int k = 0; k < m.params_.K; ++k)
        for (int c : m.topic_word_[static_cast<std::size_t>(k)])
            m.topic_total_[static_cast<std::size_t>(k)] += c;
    for (const auto& row : m.doc_topic_)
        for (int c : row) m.total_tokens_ += static_cast<std::size_t>(c);
    return m;
}

void BtmModel::save(std::ostream& out) const {
    out << "reqclass-btm v1\n";
    out << params_line(params_) << "\n";
    out << "vocab " << vocab_.size() << "\n";
    for (const auto& t : vocab_) out << t << "\n";
    out << "topic_total";
    for (int c : topic_total_) out << ' ' << c;
    out << "\n";
    out << "topic_word " << topic_word_.size() << "\n";
    save_matrix(out, topic_word_);
    out << "doc_biterms " << doc_biterms_.size() << "\n";
    for (const auto& doc : doc_biterms_) {
        out << doc.size();
        for (const auto& [a, b] : doc) out << ' ' << a << ' ' << b;
        out << "\n";
    }
    out << "end\n";
}

BtmModel BtmModel::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != "reqclass-btm v1")
        throw DataError("btm model: bad header");
    BtmModel m;
    while (std::getline(in, line)) {
        auto f = split_whitespace(line);
        if (f.empty()) continue;
        if (f[0] == "end") break;
        if (f[0] == "params") {
            m.params_ = parse_params_line(f, "btm model");
        } else if (f[0] == "vocab" && f.size() == 2) {
            std::size_t v = std::stoul(f[1]);
            for (std::size_t i = 0; i < v; ++i) {
                if (!std::getline(in, line)) throw DataError("btm model: truncated vocab");
                m.vocab_.push_back(trim(line));
                m.term_id_[m.vocab_.back()] = static_cast<int>(i);
            }
        } else if (f[0] == "topic_total") {
            for (std::size_t i = 1; i < f.size(); ++i)
                m.topic_total_.push_back(std::stoi(f[i]));
        } else if (f[0] == "topic_word" && f.size() == 2) {
            std::size_t k = std::stoul(f[1]);
            for (std::size_t i = 0; i < k; ++i) {
                if (!std::getline(in, line))
                    throw DataError("btm model: truncated topic_word");
                m.topic_word_.push_back(parse_int_row(line, m.vocab_.size(), "btm model"));
            }
        } else if (f[0] == "doc_biterms" && f.size() == 2) {
            std::size_t d = std::stoul(f[1]);
            for (std::size_t i = 0; i < d; ++i) {
                if (!std::getline(in, line))
                    throw DataError("btm model: truncated doc_biterms");
                auto row = split_whitespace(line);
                if (row.empty()) throw DataError("btm model: bad biterm row");
                std::size_t n = std::stoul(row[0]);
                if (row.size() != 1 + 2 * n) throw DataError("btm model: bad biterm row");
                std::vector<std::pair<int, int>> doc;
                for (std::size_t j = 0; j < n; ++j)
                    doc.emplace_back(std::stoi(row[1 + 2 * j]),
                                     std::stoi(row[2 + 2 * j]));
                m.doc_biterms_.push_back(std::move(doc));
                m.total_biterms_ += n;
            }
        } else {
            throw DataError("btm model: unexpected line '" + line + "'");
        }
    }
    if (m.topic_word_.size() != static_cast<std::size_t>(m.params_.K))
        throw DataError("btm model: topic_word size mismatch");
    if (m.topic_total_.size() != static_cast<std::size_t>(m.params_.K))
        throw DataError("btm model: topic_total size mismatch");
    return m;
}

} // namespace reqclass
