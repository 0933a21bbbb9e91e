#pragma once

#include <string>
#include <vector>

#include "reqclass/cooccur.hpp"
#include "reqclass/corpus.hpp"
#include "reqclass/entity.hpp"
#include "reqclass/rewrite.hpp"
#include "reqclass/temporal.hpp"

namespace reqclass {

// Stage toggles allow ablation runs; all stages are on by default. The
// co-occurrence index backs the rewrite-rule guards and is typically built
// from the NFR subset of the corpus being processed.
struct PipelineConfig {
    EntityDictionary dictionary;
    std::vector<RewriteRule> rules;
    CooccurrenceIndex cooccurrence;
    bool normalize = true;
    bool blind_entities = true;
    bool temporal_rules = true;
    bool nfr_rules = true;
};

struct AuditEntry {
    std::string requirement_id;
    RuleTrace trace;
};

struct ProcessedRequirement {
    std::string id;
    std::vector<Token> tokens;
    std::string text;
    std::vector<RuleTrace> trace;
};

// Tokenize + POS-tag in one step.
std::vector<Token> analyze(const std::string& text);

// normalize_surface -> tokenize -> pos_tag -> entity_blind ->
// apply_temporal_rules -> apply_nfr_rules -> re-tag.
ProcessedRequirement preprocess_requirement(const Requirement& req,
                                            const PipelineConfig& config);

// Applies the pipeline to every requirement, preserving ids, projects and
// labels. Rule firings are appended to *audit when non-null.
Corpus preprocess_corpus(const Corpus& corpus, const PipelineConfig& config,
                         std::vector<AuditEntry>* audit = nullptr);

} // namespace reqclass
