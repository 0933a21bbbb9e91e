#include "reqclass/corpus.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "reqclass/error.hpp"
#include "reqclass/rng.hpp"
#include "reqclass/text.hpp"

namespace reqclass {

namespace {

constexpr std::array<std::string_view, kNfrKindCount> kNfrCodes = {
    "A", "FT", "L", "LF", "MN", "O", "PE", "PO", "SC", "SE", "US"};

} // namespace

std::string_view nfr_code(NfrKind k) { return kNfrCodes[static_cast<int>(k)]; }

std::optional<NfrKind> nfr_from_code(std::string_view code) {
    for (int i = 0; i < kNfrKindCount; ++i)
        if (kNfrCodes[i] == code) return static_cast<NfrKind>(i);
    return std::nullopt;
}

std::optional<Label> Label::from_code(std::string_view code) {
    if (code == "F" || code == "FR") return Label::fr();
    if (auto k = nfr_from_code(code)) return Label::nfr(*k);
    return std::nullopt;
}

std::string Label::code() const {
    return fr_ ? "F" : std::string(nfr_code(sub_));
}

Corpus::Corpus(std::vector<Requirement> items) : items_(std::move(items)) {
    std::set<std::string_view> seen;
    for (const auto& r : items_) {
        if (trim(r.text).empty())
            throw DataError("requirement '" + r.id + "' has empty text");
        if (!seen.insert(r.id).second)
            throw DataError("duplicate requirement id '" + r.id + "'");
    }
}

bool operator==(const Corpus& a, const Corpus& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        const auto& x = a.at(i);
        const auto& y = b.at(i);
        if (x.id != y.id || x.project_id != y.project_id || x.text != y.text ||
            !(x.label == y.label))
            return false;
    }
    return true;
}

namespace {

Label parse_label_token(const std::string& tok, int line) {
    auto label = Label::from_code(trim(tok));
    if (!label)
        throw DataError("unknown label token '" + trim(tok) + "'", line);
    return *label;
}

// Splits one data row of the ARFF-like layout: comma-separated fields where
// the text field may be wrapped in single quotes with '' or \' escapes.
std::vector<std::string> split_arff_row(const std::string& row, int line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < row.size(); ++i) {
        char c = row[i];
        if (quoted) {
            if (c == '\\' && i + 1 < row.size() && row[i + 1] == '\'') {
                cur += '\'';
                ++i;
            } else if (c == '\'') {
                if (i + 1 < row.size() && row[i + 1] == '\'') {
                    cur += '\'';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '\'') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw DataError("unterminated quote in record", line);
    fields.push_back(cur);
    return fields;
}

Corpus parse_arff(std::istream& in) {
    std::vector<Requirement> items;
    std::string raw;
    int line = 0;
    int next_id = 1;
    bool in_data = false;
    bool saw_header = false;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string s = trim(raw);
        if (s.empty() || s[0] == '%') continue;
        if (s[0] == '@') {
            saw_header = true;
            if (to_lower(s.substr(0, 5)) == "@data") in_data = true;
            continue;
        }
        if (saw_header && !in_data)
            throw DataError("data row before @data section", line);
        auto fields = split_arff_row(s, line);
        if (fields.size() < 3)
            throw DataError("expected 3 fields (project,text,label), got " +
                                std::to_string(fields.size()),
                            line);
        // Tolerate commas inside unquoted text: label is the last field,
        // project the first, text everything in between.
        std::string project = trim(fields.front());
        std::string label_tok = trim(fields.back());
        std::string text = fields[1];
        for (size_t i = 2; i + 1 < fields.size(); ++i) text += "," + fields[i];
        text = trim(text);
        if (text.empty()) throw DataError("empty text field", line);
        items.push_back(Requirement{"R" + std::to_string(next_id++), project,
                                    text, parse_label_token(label_tok, line)});
    }
    return Corpus(std::move(items));
}

// RFC-style CSV field splitting with double-quote escaping. Returns false at
// end of stream. Handles embedded newlines inside quoted fields.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                     int& line) {
    fields.clear();
    std::string cur;
    bool quoted = false;
    bool any = false;
    int c;
    while ((c = in.get()) != EOF) {
        any = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    cur += '"';
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                cur += static_cast<char>(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c == '\n') {
            ++line;
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            fields.push_back(cur);
            return true;
        } else {
            cur += static_cast<char>(c);
        }
    }
    if (quoted) throw DataError("unterminated quote in record", line);
    if (!any && fields.empty()) return false;
    fields.push_back(cur);
    return true;
}

Corpus parse_csv(std::istream& in) {
    std::vector<Requirement> items;
    std::vector<std::string> fields;
    int line = 1;
    int next_id = 1;
    bool header_done = false;
    while (true) {
        int record_line = line;
        if (!read_csv_record(in, fields, line)) break;
        if (fields.size() == 1 && trim(fields[0]).empty()) continue;
        if (!header_done) {
            header_done = true;
            if (!fields.empty() && to_lower(trim(fields[0])) == "project_id")
                continue; // header row
        }
        if (fields.size() != 3)
            throw DataError("expected 3 columns (project_id,text,label), got " +
                                std::to_string(fields.size()),
                            record_line);
        std::string text = trim(fields[1]);
        if (text.empty()) throw DataError("empty text field", record_line);
        items.push_back(Requirement{"R" + std::to_string(next_id++),
                                    trim(fields[0]), text,
                                    parse_label_token(fields[2], record_line)});
    }
    return Corpus(std::move(items));
}

} // namespace

Corpus parse_corpus(std::istream& in, CorpusFormat format) {
    return format == CorpusFormat::PromiseArff ? parse_arff(in) : parse_csv(in);
}

Corpus load_corpus(const std::string& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file: " + path);
    return parse_corpus(in, format);
}

Corpus load_corpus(const std::string& path) {
    auto lower = to_lower(path);
    auto format = lower.size() >= 5 && lower.substr(lower.size() - 5) == ".arff"
                      ? CorpusFormat::PromiseArff
                      : CorpusFormat::Csv;
    return load_corpus(path, format);
}

void write_corpus_csv(const Corpus& corpus, std::ostream& out) {
    out << "project_id,text,label\n";
    for (const auto& r : corpus) {
        std::string quoted = "\"";
        for (char c : r.text) {
            quoted += c;
            if (c == '"') quoted += '"';
        }
        quoted += '"';
        out << r.project_id << ',' << quoted << ',' << r.label.code() << '\n';
    }
}

std::map<std::string, int> label_counts(const Corpus& corpus) {
    std::map<std::string, int> counts;
    for (const auto& r : corpus) ++counts[r.label.code()];
    return counts;
}

FoldPlan stratified_folds(const Corpus& corpus, int k, int runs,
                          uint64_t seed) {
    if (k < 2) throw UsageError("fold count k must be >= 2");
    if (runs < 1) throw UsageError("runs must be >= 1");
    if (static_cast<size_t>(k) > corpus.size())
        throw UsageError("fold count k exceeds corpus size");

    // Strata keyed by full label code, ordered and processed largest first so
    // the greedy balancing keeps overall fold sizes tight.
    std::map<std::string, std::vector<size_t>> strata;
    for (size_t i = 0; i < corpus.size(); ++i)
        strata[corpus.at(i).label.code()].push_back(i);
    std::vector<const std::pair<const std::string, std::vector<size_t>>*> order;
    for (const auto& s : strata) order.push_back(&s);
    std::stable_sort(order.begin(), order.end(),
                     [](auto* a, auto* b) { return a->second.size() > b->second.size(); });

    FoldPlan plan{k, runs, seed, {}};
    Rng master(seed);
    for (int run = 0; run < runs; ++run) {
        Rng rng = master.fork(static_cast<uint64_t>(run) + 1);
        std::map<std::string, int> fold_of;
        std::vector<int> fold_total(k, 0);
        for (const auto* stratum : order) {
            std::vector<size_t> members = stratum->second;
            rng.shuffle(members);
            std::vector<int> stratum_count(k, 0);
            for (size_t idx : members) {
                // Fold with fewest members of this stratum; break ties by
                // smallest overall size, then lowest index.
                int best = 0;
                for (int f = 1; f < k; ++f) {
                    if (stratum_count[f] < stratum_count[best] ||
                        (stratum_count[f] == stratum_count[best] &&
                         fold_total[f] < fold_total[best]))
                        best = f;
                }
                fold_of[corpus.at(idx).id] = best;
                ++stratum_count[best];
                ++fold_total[best];
            }
        }
        plan.assignment.push_back(std::move(fold_of));
    }
    return plan;
}

} // namespace reqclass
