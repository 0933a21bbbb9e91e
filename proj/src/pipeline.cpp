#include "reqclass/pipeline.hpp"

#include "reqclass/tokenize.hpp"

namespace reqclass {

std::vector<Token> analyze(const std::string& text) {
    return pos_tag(tokenize(text));
}

ProcessedRequirement preprocess_requirement(const Requirement& req,
                                            const PipelineConfig& config) {
    ProcessedRequirement out;
    out.id = req.id;

    std::string text = config.normalize ? normalize_surface(req.text) : req.text;
    std::vector<Token> tokens = analyze(text);

    if (config.blind_entities) tokens = entity_blind(tokens, config.dictionary);
    if (config.temporal_rules) tokens = apply_temporal_rules(std::move(tokens), &out.trace);
    if (config.nfr_rules && !config.rules.empty())
        tokens = apply_nfr_rules(std::move(tokens), config.rules, config.cooccurrence,
                                 &out.trace);

    tokens = pos_tag(std::move(tokens));
    out.tokens = std::move(tokens);
    out.text = detokenize(surfaces(out.tokens));
    if (out.text.empty()) out.text = req.text;
    return out;
}

Corpus preprocess_corpus(const Corpus& corpus, const PipelineConfig& config,
                         std::vector<AuditEntry>* audit) {
    std::vector<Requirement> items;
    items.reserve(corpus.size());
    for (const Requirement& req : corpus.items()) {
        ProcessedRequirement p = preprocess_requirement(req, config);
        if (audit)
            for (auto& t : p.trace) audit->push_back({req.id, std::move(t)});
        Requirement r = req;
        r.text = p.text;
        items.push_back(std::move(r));
    }
    return Corpus(std::move(items));
}

} // namespace reqclass
