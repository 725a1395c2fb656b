#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

// Text preprocessing: case folding, punctuation/digit stripping, whitespace
// tokenization, stopword removal, and rule-based affix stemming, composed in
// that fixed order. All functions are pure; documents can be processed in
// parallel with no cross-document effects.
namespace rulemine::textprep {

using StopwordSet = std::unordered_set<std::string>;

enum class StemmerKind { none, affix_strip };

/// One ordered group of same-kind affix rules. A stripping pass tries the
/// groups in order and removes at most one affix per group.
struct AffixGroup {
    enum class Kind { suffix, prefix };
    Kind kind;
    std::vector<std::string> affixes;  // tried in order, first match wins
};

struct StemRules {
    std::vector<AffixGroup> groups;
    std::size_t min_stem_letters = 3;  // a strip must leave at least this many
    std::string version;               // identifies the rule table in manifests
};

struct PipelineConfig {
    bool enable_case_fold = true;
    bool enable_punct_strip = true;
    bool enable_stopwords = true;
    bool enable_stemming = true;
    StopwordSet base_stopwords;
    StopwordSet extra_stopwords;
    StemmerKind stemmer = StemmerKind::affix_strip;
    StemRules stem_rules;

    /// Full default pipeline: bundled base + extra stopword lists and the
    /// bundled affix rule table.
    static PipelineConfig defaults();
};

// -- pipeline stages ---------------------------------------------------------

/// Unicode simple lowercasing (character count preserved for Latin script).
std::string case_fold(std::string_view text);

/// Replaces every character that is neither a letter nor whitespace with a
/// single space. Digits count as non-letters. Existing whitespace is kept
/// verbatim for the tokenizer to split on.
std::string strip_nonletters(std::string_view text);

/// Splits on whitespace runs; tokens are the maximal non-whitespace runs.
std::vector<std::string> tokenize(std::string_view text);

/// Drops every token contained in base or extra; order otherwise preserved.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopwordSet& base,
                                          const StopwordSet& extra);

/// Reduces a lowercase letter-only token to its stem. StemmerKind::none is
/// the identity. The affix stripper repeats passes over the rule groups
/// until no rule fires, so the result is a fixpoint: stem(stem(t)) == stem(t).
std::string stem_token(std::string_view token, StemmerKind kind, const StemRules& rules);

/// Runs the enabled stages in the fixed order case_fold -> strip_nonletters
/// -> tokenize -> remove_stopwords -> stem_token. An all-stopword document
/// yields an empty list (the document itself is kept by callers).
std::vector<std::string> preprocess_document(std::string_view text,
                                             const PipelineConfig& config);

// -- data loading ------------------------------------------------------------

/// Parses a stopword list: one token per line, '#' comments, entries
/// case-folded on load so the lowercase invariant always holds.
StopwordSet parse_stopword_list(std::string_view text);
StopwordSet load_stopword_file(const std::string& path);

/// Parses an affix rule table (`suffix -lah` / `prefix ber-` lines, '#'
/// comments). Consecutive same-kind lines form one group; group order and
/// in-group order are significant.
StemRules parse_stem_rules(std::string_view text, std::string_view version_tag);
StemRules load_stem_rules_file(const std::string& path);

// Bundled data (embedded at build time from data/).
const StopwordSet& builtin_base_stopwords();
const StopwordSet& builtin_extra_stopwords();
const StemRules& builtin_stem_rules();
std::string_view builtin_base_stopwords_text();
std::string_view builtin_extra_stopwords_text();
std::string_view builtin_stem_rules_text();

}  // namespace rulemine::textprep
