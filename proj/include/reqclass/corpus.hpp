#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reqclass {

// The eleven NFR subcategories of the PROMISE labeling scheme.
enum class NfrKind { A, FT, L, LF, MN, O, PE, PO, SC, SE, US };

constexpr int kNfrKindCount = 11;

std::string_view nfr_code(NfrKind k);
std::optional<NfrKind> nfr_from_code(std::string_view code);

class Label {
public:
    static Label fr() { return Label(true, NfrKind::A); }
    static Label nfr(NfrKind k) { return Label(false, k); }
    static std::optional<Label> from_code(std::string_view code);

    bool is_fr() const { return fr_; }
    bool is_nfr() const { return !fr_; }
    NfrKind sub() const { return sub_; } // meaningful only when is_nfr()

    // "F" for functional, else the subcategory code.
    std::string code() const;
    // Coarse class name: "FR" or "NFR".
    std::string_view kind_name() const { return fr_ ? "FR" : "NFR"; }

    friend bool operator==(const Label& a, const Label& b) {
        return a.fr_ == b.fr_ && (a.fr_ || a.sub_ == b.sub_);
    }
    friend bool operator<(const Label& a, const Label& b) {
        if (a.fr_ != b.fr_) return a.fr_; // FR sorts first
        if (a.fr_) return false;
        return static_cast<int>(a.sub_) < static_cast<int>(b.sub_);
    }

private:
    Label(bool fr, NfrKind sub) : fr_(fr), sub_(sub) {}
    bool fr_;
    NfrKind sub_;
};

struct Requirement {
    std::string id;
    std::string project_id;
    std::string text;
    Label label;
};

enum class CorpusFormat { PromiseArff, Csv };

class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<Requirement> items);

    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const Requirement& at(size_t i) const { return items_[i]; }
    const std::vector<Requirement>& items() const { return items_; }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    // Subset preserving order; predicate receives each requirement.
    template <typename Pred>
    Corpus filter(Pred&& pred) const {
        std::vector<Requirement> kept;
        for (const auto& r : items_)
            if (pred(r)) kept.push_back(r);
        return Corpus(std::move(kept));
    }

private:
    std::vector<Requirement> items_;
};

bool operator==(const Corpus& a, const Corpus& b);

// Reads either the ARFF-like PROMISE layout ('%' comments, optional @data
// marker, single-quoted text) or the canonical 3-column CSV
// (project_id,text,label). Throws DataError with a line number on malformed
// records and unknown label tokens.
Corpus parse_corpus(std::istream& in, CorpusFormat format);
Corpus load_corpus(const std::string& path, CorpusFormat format);
Corpus load_corpus(const std::string& path); // format from extension

// Canonical CSV: header line, double-quoted text with doubled-quote escaping,
// LF line endings.
void write_corpus_csv(const Corpus& corpus, std::ostream& out);

std::map<std::string, int> label_counts(const Corpus& corpus);

// Per-run assignment requirement-id -> fold index in [0, k).
struct FoldPlan {
    int k = 0;
    int runs = 0;
    uint64_t seed = 0;
    std::vector<std::map<std::string, int>> assignment;

    bool operator==(const FoldPlan&) const = default;
};

// Deterministic stratified folds: within every label stratum the fold sizes
// differ by at most one, and overall fold sizes stay balanced.
FoldPlan stratified_folds(const Corpus& corpus, int k, int runs, uint64_t seed);

} // namespace reqclass
