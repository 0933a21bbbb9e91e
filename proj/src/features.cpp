#include "reqclass/features.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "reqclass/error.hpp"
#include "reqclass/text.hpp"

namespace reqclass {

const char* syntactic_kind_name(SyntacticKind k) {
    switch (k) {
        case SyntacticKind::Adjectives: return "adjectives";
        case SyntacticKind::Adverbs: return "adverbs";
        case SyntacticKind::AdverbsModifyingVerbs: return "adverbs_modifying_verbs";
        case SyntacticKind::Cardinals: return "cardinals";
        case SyntacticKind::DegreeAdjAdv: return "degree_adj_adv";
    }
    return "";
}

int syntactic_count(const SyntacticCounts& c, SyntacticKind k) {
    switch (k) {
        case SyntacticKind::Adjectives: return c.adjectives;
        case SyntacticKind::Adverbs: return c.adverbs;
        case SyntacticKind::AdverbsModifyingVerbs: return c.adverbs_modifying_verbs;
        case SyntacticKind::Cardinals: return c.cardinals;
        case SyntacticKind::DegreeAdjAdv: return c.degree_adj_adv;
    }
    return 0;
}

SyntacticCounts count_syntactic(const std::vector<Token>& tokens) {
    SyntacticCounts c;
    const std::size_t n = tokens.size();
    for (std::size_t i = 0; i < n; ++i) {
        Pos t = tokens[i].pos;
        if (is_adjective(t)) ++c.adjectives;
        if (is_adverb(t)) {
            ++c.adverbs;
            bool near_verb = false;
            for (std::size_t j = (i >= 2 ? i - 2 : 0); j <= i + 2 && j < n; ++j) {
                if (j != i && is_verb(tokens[j].pos)) {
                    near_verb = true;
                    break;
                }
            }
            if (near_verb) ++c.adverbs_modifying_verbs;
        }
        if (t == Pos::CD) ++c.cardinals;
        if (is_degree(t)) ++c.degree_adj_adv;
    }
    return c;
}

SyntacticRanking rank_syntactic(const std::vector<std::vector<Token>>& docs,
                                double cutoff) {
    SyntacticRanking r;
    if (docs.empty()) return r;
    std::array<int, kSyntacticKinds> with_feature{};
    for (const auto& doc : docs) {
        SyntacticCounts c = count_syntactic(doc);
        for (int k = 0; k < kSyntacticKinds; ++k)
            if (syntactic_count(c, static_cast<SyntacticKind>(k)) > 0)
                ++with_feature[static_cast<std::size_t>(k)];
    }
    for (int k = 0; k < kSyntacticKinds; ++k) {
        double p = static_cast<double>(with_feature[static_cast<std::size_t>(k)]) /
                   static_cast<double>(docs.size());
        r.probability[static_cast<std::size_t>(k)] = p;
        if (p > cutoff) r.selected.push_back(static_cast<SyntacticKind>(k));
    }
    return r;
}

const char* keyword_kind_name(KeywordKind k) {
    switch (k) {
        case KeywordKind::Adjective: return "adjective";
        case KeywordKind::Adverb: return "adverb";
        case KeywordKind::Modal: return "modal";
        case KeywordKind::Determiner: return "determiner";
        case KeywordKind::Verb: return "verb";
        case KeywordKind::Preposition: return "preposition";
        case KeywordKind::SingularNoun: return "singular_noun";
        case KeywordKind::PluralNoun: return "plural_noun";
    }
    return "";
}

bool pos_in_keyword_group(Pos p, KeywordKind k) {
    switch (k) {
        case KeywordKind::Adjective: return is_adjective(p);
        case KeywordKind::Adverb: return is_adverb(p);
        case KeywordKind::Modal: return p == Pos::MD;
        case KeywordKind::Determiner: return p == Pos::DT;
        case KeywordKind::Verb: return is_verb(p);
        case KeywordKind::Preposition: return p == Pos::IN;
        case KeywordKind::SingularNoun: return p == Pos::NN || p == Pos::NNP;
        case KeywordKind::PluralNoun: return p == Pos::NNS || p == Pos::NNPS;
    }
    return false;
}

KeywordGroup keyword_discrimination(const std::vector<std::vector<Token>>& docs,
                                    const std::vector<bool>& is_nfr,
                                    KeywordKind kind, double cutoff) {
    if (docs.size() != is_nfr.size())
        throw UsageError("keyword_discrimination: docs/labels size mismatch");
    std::map<std::string, std::pair<int, int>> counts; // word -> (nfr, all)
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (const Token& t : docs[d]) {
            if (!pos_in_keyword_group(t.pos, kind)) continue;
            auto& c = counts[to_lower(t.surface)];
            if (is_nfr[d]) ++c.first;
            ++c.second;
        }
    }
    KeywordGroup g;
    g.kind = kind;
    for (const auto& [word, c] : counts) {
        double score = (c.first + 1.0) / (c.second + 2.0);
        if (score > cutoff || score < 1.0 - cutoff) g.selected[word] = score;
    }
    return g;
}

std::vector<std::string> FeatureSpec::feature_names() const {
    std::vector<std::string> names;
    for (auto k : selected_syntactic) names.emplace_back(syntactic_kind_name(k));
    for (const auto& g : keyword_groups)
        names.emplace_back(std::string("keywords_") + keyword_kind_name(g.kind));
    return names;
}

FeatureSpec fit_feature_spec(const std::vector<std::vector<Token>>& docs,
                             const std::vector<bool>& is_nfr,
                             double cutoff_syntactic, double cutoff_keywords) {
    FeatureSpec spec;
    spec.cutoff_syntactic = cutoff_syntactic;
    spec.cutoff_keywords = cutoff_keywords;
    spec.selected_syntactic = rank_syntactic(docs, cutoff_syntactic).selected;
    for (int k = 0; k < kKeywordKinds; ++k)
        spec.keyword_groups.push_back(keyword_discrimination(
            docs, is_nfr, static_cast<KeywordKind>(k), cutoff_keywords));
    return spec;
}

std::vector<double> extract_vector(const std::vector<Token>& tokens,
                                   const FeatureSpec& spec) {
    std::vector<double> v;
    v.reserve(spec.feature_count());
    SyntacticCounts c = count_syntactic(tokens);
    for (auto k : spec.selected_syntactic)
        v.push_back(static_cast<double>(syntactic_count(c, k)));
    for (const auto& g : spec.keyword_groups) {
        int hits = 0;
        for (const Token& t : tokens)
            if (g.selected.count(to_lower(t.surface))) ++hits;
        v.push_back(static_cast<double>(hits));
    }
    return v;
}

namespace {

std::optional<SyntacticKind> syntactic_from_name(const std::string& name) {
    for (int k = 0; k < kSyntacticKinds; ++k)
        if (name == syntactic_kind_name(static_cast<SyntacticKind>(k)))
            return static_cast<SyntacticKind>(k);
    return std::nullopt;
}

std::optional<KeywordKind> keyword_from_name(const std::string& name) {
    for (int k = 0; k < kKeywordKinds; ++k)
        if (name == keyword_kind_name(static_cast<KeywordKind>(k)))
            return static_cast<KeywordKind>(k);
    return std::nullopt;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

void FeatureSpec::save(std::ostream& out) const {
    out << "reqclass-feature-spec v1\n";
    out << "cutoff_syntactic " << format_double(cutoff_syntactic) << "\n";
    out << "cutoff_keywords " << format_double(cutoff_keywords) << "\n";
    out << "syntactic";
    for (auto k : selected_syntactic) out << ' ' << syntactic_kind_name(k);
    out << "\n";
    for (const auto& g : keyword_groups) {
        out << "group " << keyword_kind_name(g.kind) << ' ' << g.selected.size()
            << "\n";
        for (const auto& [word, score] : g.selected)
            out << word << ' ' << format_double(score) << "\n";
    }
    out << "end\n";
}

FeatureSpec FeatureSpec::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != "reqclass-feature-spec v1")
        throw DataError("feature spec: bad header");
    FeatureSpec spec;
    bool saw_end = false;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        auto fields = split_whitespace(line);
        if (fields.empty()) continue;
        if (fields[0] == "end") {
            saw_end = true;
            break;
        }
        if (fields[0] == "cutoff_syntactic" && fields.size() == 2) {
            spec.cutoff_syntactic = std::stod(fields[1]);
        } else if (fields[0] == "cutoff_keywords" && fields.size() == 2) {
            spec.cutoff_keywords = std::stod(fields[1]);
        } else if (fields[0] == "syntactic") {
            spec.selected_syntactic.clear();
            for (std::size_t i = 1; i < fields.size(); ++i) {
                auto k = syntactic_from_name(fields[i]);
                if (!k)
                    throw DataError("feature spec: unknown syntactic feature " +
                                        fields[i],
                                    lineno);
                spec.selected_syntactic.push_back(*k);
            }
        } else if (fields[0] == "group" && fields.size() == 3) {
            auto kind = keyword_from_name(fields[1]);
            if (!kind)
                throw DataError("feature spec: unknown keyword group " + fields[1],
                                lineno);
            KeywordGroup g;
            g.kind = *kind;
            long n = std::stol(fields[2]);
            for (long i = 0; i < n; ++i) {
                if (!std::getline(in, line))
                    throw DataError("feature spec: truncated group", lineno);
                ++lineno;
                auto kv = split_whitespace(line);
                if (kv.size() != 2)
                    throw DataError("feature spec: bad keyword line", lineno);
                g.selected[kv[0]] = std::stod(kv[1]);
            }
            spec.keyword_groups.push_back(std::move(g));
        } else {
            throw DataError("feature spec: unexpected line", lineno);
        }
    }
    if (!saw_end) throw DataError("feature spec: missing 'end'");
    return spec;
}

} // namespace reqclass
