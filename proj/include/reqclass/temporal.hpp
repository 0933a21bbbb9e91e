#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reqclass/pos.hpp"

namespace reqclass {

// String-level cleanup applied before tokenization. Expands shorthand like
// "24/7" and "24x7x365" to "24 hours per day 365 days per year", splits
// "everyday" into "every day" and spells out sec/min abbreviations. Running
// it twice gives the same result as running it once.
std::string normalize_surface(const std::string& text);

enum class TemporalKind { Time, Date, Duration, Set };

const char* temporal_kind_name(TemporalKind k);

struct TemporalEntity {
    TemporalKind kind = TemporalKind::Duration;
    std::size_t begin = 0; // token span [begin, end)
    std::size_t end = 0;
    std::string normalized;
};

// Marks durations ("5 seconds"), frequencies ("every day", "24 hours per
// day", "at all times"), clock times and month dates. Matches are
// leftmost-longest and never overlap.
std::vector<TemporalEntity> temporal_tag(const std::vector<Token>& tokens);

struct RuleTrace {
    std::string rule;
    std::string before;
    std::string after;
};

// Rewrites temporal expressions in five ordered passes, re-tagging between
// passes:
//   R1  bound phrase ("no more than", "in", "under", ...) before a duration
//       becomes "within"
//   R2  an entity run containing a frequency collapses to "alltimes"
//   R3  "within" + a second/minute duration collapses to "fast"
//   R4  "timely"/"quick", and positive adjectives just before "time",
//       become "fast"
//   R5  80-99.x percent (+ of/the...) + "time" collapses to "alltimes"
// Each replacement is appended to *trace when trace is non-null.
std::vector<Token> apply_temporal_rules(std::vector<Token> tokens,
                                        std::vector<RuleTrace>* trace = nullptr);

} // namespace reqclass
