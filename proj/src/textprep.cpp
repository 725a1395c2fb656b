#include "rulemine/textprep.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rulemine/error.hpp"
#include "rulemine/hash.hpp"
#include "rulemine/utf8.hpp"

namespace rulemine::textprep {

namespace detail {
std::string_view base_stopwords_text();
std::string_view extra_stopwords_text();
std::string_view stem_rules_text();
}  // namespace detail

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

// Strips '#' comments and surrounding ASCII whitespace from one line.
std::string_view clean_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t' || line.front() == '\r')) {
        line.remove_prefix(1);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
        line.remove_suffix(1);
    }
    return line;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t pos = 0, line_no = 1;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, nl - pos);
        fn(line, line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
        ++line_no;
    }
}

}  // namespace

std::string case_fold(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = utf8::decode(text, i);
        if (cp == utf8::kInvalid) continue;
        utf8::append(out, utf8::simple_lower(cp));
    }
    return out;
}

std::string strip_nonletters(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = utf8::decode(text, i);
        if (cp == utf8::kInvalid) {
            out.push_back(' ');
        } else if (utf8::is_letter(cp)) {
            utf8::append(out, cp);
        } else if (utf8::is_space(cp)) {
            utf8::append(out, cp);
        } else {
            out.push_back(' ');
        }
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t at = i;
        char32_t cp = utf8::decode(text, i);
        if (cp != utf8::kInvalid && utf8::is_space(cp)) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.append(text.substr(at, i - at));
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopwordSet& base,
                                          const StopwordSet& extra) {
    auto dropped = [&](const std::string& t) {
        return base.count(t) != 0 || extra.count(t) != 0;
    };
    tokens.erase(std::remove_if(tokens.begin(), tokens.end(), dropped), tokens.end());
    return tokens;
}

namespace {

// Tries the group's affixes in order; strips the first one that matches and
// leaves at least min_letters codepoints. Returns true if a strip happened.
bool strip_one(std::string& token, const AffixGroup& group, std::size_t min_letters) {
    for (const std::string& affix : group.affixes) {
        if (affix.size() >= token.size()) continue;
        bool matches = group.kind == AffixGroup::Kind::suffix
                           ? token.ends_with(affix)
                           : token.starts_with(affix);
        if (!matches) continue;
        std::string_view rest = group.kind == AffixGroup::Kind::suffix
                                    ? std::string_view(token).substr(0, token.size() - affix.size())
                                    : std::string_view(token).substr(affix.size());
        if (utf8::length(rest) < min_letters) continue;
        token = std::string(rest);
        return true;
    }
    return false;
}

}  // namespace

std::string stem_token(std::string_view token, StemmerKind kind, const StemRules& rules) {
    if (kind == StemmerKind::none) return std::string(token);
    std::string stem(token);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const AffixGroup& group : rules.groups) {
            changed |= strip_one(stem, group, rules.min_stem_letters);
        }
    }
    return stem;
}

std::vector<std::string> preprocess_document(std::string_view text,
                                             const PipelineConfig& config) {
    std::string folded;
    std::string_view stage = text;
    if (config.enable_case_fold) {
        folded = case_fold(stage);
        stage = folded;
    }
    std::string stripped;
    if (config.enable_punct_strip) {
        stripped = strip_nonletters(stage);
        stage = stripped;
    }
    std::vector<std::string> tokens = tokenize(stage);
    if (config.enable_stopwords) {
        tokens = remove_stopwords(std::move(tokens), config.base_stopwords,
                                  config.extra_stopwords);
    }
    if (config.enable_stemming && config.stemmer != StemmerKind::none) {
        for (std::string& t : tokens) {
            t = stem_token(t, config.stemmer, config.stem_rules);
        }
    }
    return tokens;
}

StopwordSet parse_stopword_list(std::string_view text) {
    StopwordSet set;
    for_each_line(text, [&](std::string_view line, std::size_t) {
        std::string_view entry = clean_line(line);
        if (!entry.empty()) set.insert(case_fold(entry));
    });
    return set;
}

StopwordSet load_stopword_file(const std::string& path) {
    return parse_stopword_list(read_file(path));
}

StemRules parse_stem_rules(std::string_view text, std::string_view version_tag) {
    StemRules rules;
    rules.version = std::string(version_tag) + "-" + fnv1a64_hex(text);
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        std::string_view entry = clean_line(line);
        if (entry.empty()) return;
        std::size_t space = entry.find(' ');
        if (space == std::string_view::npos) {
            throw validation_error("stem rules: malformed line " + std::to_string(line_no) +
                                   " (expected `suffix -xxx` or `prefix xxx-`)");
        }
        std::string_view kind_word = entry.substr(0, space);
        std::string_view affix = clean_line(entry.substr(space + 1));
        AffixGroup::Kind kind;
        if (kind_word == "suffix") {
            kind = AffixGroup::Kind::suffix;
            if (affix.size() < 2 || affix.front() != '-') {
                throw validation_error("stem rules: suffix must be written `-xxx` (line " +
                                       std::to_string(line_no) + ")");
            }
            affix.remove_prefix(1);
        } else if (kind_word == "prefix") {
            kind = AffixGroup::Kind::prefix;
            if (affix.size() < 2 || affix.back() != '-') {
                throw validation_error("stem rules: prefix must be written `xxx-` (line " +
                                       std::to_string(line_no) + ")");
            }
            affix.remove_suffix(1);
        } else {
            throw validation_error("stem rules: unknown rule kind '" + std::string(kind_word) +
                                   "' at line " + std::to_string(line_no));
        }
        if (rules.groups.empty() || rules.groups.back().kind != kind) {
            rules.groups.push_back(AffixGroup{kind, {}});
        }
        rules.groups.back().affixes.push_back(case_fold(affix));
    });
    return rules;
}

StemRules load_stem_rules_file(const std::string& path) {
    return parse_stem_rules(read_file(path), "file:" + path);
}

std::string_view builtin_base_stopwords_text() { return detail::base_stopwords_text(); }
std::string_view builtin_extra_stopwords_text() { return detail::extra_stopwords_text(); }
std::string_view builtin_stem_rules_text() { return detail::stem_rules_text(); }

const StopwordSet& builtin_base_stopwords() {
    static const StopwordSet set = parse_stopword_list(detail::base_stopwords_text());
    return set;
}

const StopwordSet& builtin_extra_stopwords() {
    static const StopwordSet set = parse_stopword_list(detail::extra_stopwords_text());
    return set;
}

const StemRules& builtin_stem_rules() {
    static const StemRules rules = parse_stem_rules(detail::stem_rules_text(), "builtin-v1");
    return rules;
}

PipelineConfig PipelineConfig::defaults() {
    PipelineConfig config;
    config.base_stopwords = builtin_base_stopwords();
    config.extra_stopwords = builtin_extra_stopwords();
    config.stem_rules = builtin_stem_rules();
    return config;
}

}  // namespace rulemine::textprep
