#include <doctest.h>

#include <string>
#include <vector>

#include "rulemine/synthetic.hpp"
#include "rulemine/textprep.hpp"
#include "rulemine/utf8.hpp"

using namespace rulemine::textprep;

namespace {

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

std::string random_word(rulemine::synth::Rng& rng, std::size_t max_len = 12) {
    const std::size_t len = 1 + rng.below(max_len);
    std::string word;
    for (std::size_t i = 0; i < len; ++i) {
        word.push_back(static_cast<char>('a' + rng.below(26)));
    }
    return word;
}

}  // namespace

TEST_CASE("case_fold") {
    CHECK(case_fold("Islam ISLAM islam") == "islam islam islam");
    CHECK(case_fold("") == "");
    CHECK(case_fold("Shalat MALAM") == "shalat malam");
    // non-ASCII Latin and character-count preservation
    CHECK(case_fold("ÉCOLE Ärger") == "école ärger");
    CHECK(rulemine::utf8::length(case_fold("Éé")) == 2);
}

TEST_CASE("strip_nonletters") {
    // every non-letter non-space becomes one space: , <sp> 2 <sp> -> 4 spaces
    CHECK(strip_nonletters("shalat, 2 rakaat!") == "shalat    rakaat ");
    CHECK(strip_nonletters("iman") == "iman");
    CHECK(strip_nonletters("a.b.c") == "a b c");
    CHECK(tokenize(strip_nonletters("a.b.c")).size() == 3);
    CHECK(strip_nonletters("12345") == "     ");
    // non-Latin scripts are outside the supported alphabet
    CHECK(tokenize(strip_nonletters("kitab كتاب")) == std::vector<std::string>{"kitab"});
}

TEST_CASE("tokenize") {
    CHECK(tokenize("shalat malam") == std::vector<std::string>{"shalat", "malam"});
    CHECK(tokenize("   ").empty());
    CHECK(tokenize("").empty());
    CHECK(tokenize("  a \t b\nc ") == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("remove_stopwords") {
    StopwordSet base = {"dan", "yang", "dari"};
    StopwordSet extra = {"rasulullah", "nabi", "shallallahu", "ibnu"};
    CHECK(remove_stopwords({"dan", "shalat", "yang", "malam"}, base, {}) ==
          std::vector<std::string>{"shalat", "malam"});
    CHECK(remove_stopwords({"rasulullah", "nabi", "shallallahu", "ibnu"}, {}, extra).empty());
    std::vector<std::string> tokens = {"iman", "shalat"};
    CHECK(remove_stopwords(tokens, {}, {}) == tokens);
}

TEST_CASE("stem_token reductions") {
    const StemRules& rules = builtin_stem_rules();
    auto stem = [&](const std::string& t) {
        return stem_token(t, StemmerKind::affix_strip, rules);
    };
    CHECK(stem("beriman") == "iman");
    CHECK(stem("berimanlah") == "iman");
    CHECK(stem("keimanan") == "iman");
    CHECK(stem("shalatlah") == "shalat");
    CHECK(stem("iman") == "iman");
    CHECK(stem("bersabda") == "sabda");
    CHECK(stem("membaca") == "baca");
    // too short to strip: remainder would drop under 3 letters
    CHECK(stem("diri") == "diri");
    CHECK(stem("malam") == "malam");
    // identity stemmer
    CHECK(stem_token("berimanlah", StemmerKind::none, rules) == "berimanlah");
}

TEST_CASE("stem_token idempotence on random words") {
    const StemRules& rules = builtin_stem_rules();
    rulemine::synth::Rng rng(42);
    const char* affixes[] = {"ber", "me", "ke", "se", "di", "lah", "kah", "nya", "an", "kan"};
    for (int i = 0; i < 3000; ++i) {
        std::string word = random_word(rng);
        // half the time, gluing affixes on makes rule interactions likelier
        if (rng.below(2) == 0) {
            word = affixes[rng.below(5)] + word;
            word += affixes[5 + rng.below(5)];
        }
        std::string once = stem_token(word, StemmerKind::affix_strip, rules);
        std::string twice = stem_token(once, StemmerKind::affix_strip, rules);
        REQUIRE(!once.empty());
        REQUIRE(twice == once);
    }
}

TEST_CASE("preprocess_document composition") {
    PipelineConfig config = PipelineConfig::defaults();
    CHECK(preprocess_document("Beriman dan shalatlah!", config) ==
          std::vector<std::string>{"iman", "shalat"});
    CHECK(preprocess_document("Rasulullah bersabda", config) ==
          std::vector<std::string>{"sabda"});

    SUBCASE("all-stopword document yields an empty list") {
        CHECK(preprocess_document("dan yang dari", config).empty());
    }

    SUBCASE("identity pipeline is a whitespace split") {
        PipelineConfig off;
        off.enable_case_fold = false;
        off.enable_punct_strip = false;
        off.enable_stopwords = false;
        off.enable_stemming = false;
        off.stemmer = StemmerKind::none;
        CHECK(preprocess_document("Beriman dan SHALATLAH!", off) ==
              std::vector<std::string>{"Beriman", "dan", "SHALATLAH!"});
    }
}

TEST_CASE("stage order: stopwords run before stemming") {
    // "berimanlah" is not itself a stopword, so it survives removal and only
    // then stems to "iman" — even when "iman" is in the stopword list.
    PipelineConfig config = PipelineConfig::defaults();
    config.base_stopwords = {"iman"};
    config.extra_stopwords = {};
    CHECK(preprocess_document("berimanlah", config) == std::vector<std::string>{"iman"});
    // the stopword does apply to a literal occurrence
    CHECK(preprocess_document("iman berimanlah", config) == std::vector<std::string>{"iman"});
}

TEST_CASE("output tokens are lowercase letters only") {
    PipelineConfig config = PipelineConfig::defaults();
    rulemine::synth::Rng rng(7);
    const std::string alphabet =
        "abcXYZ0189 .,!?-_;:()[]üÉß\t\n%$#@~`'\"\\/|=+*éà島水нет";
    for (int i = 0; i < 500; ++i) {
        std::string text;
        const std::size_t len = rng.below(80);
        for (std::size_t k = 0; k < len; ++k) {
            // slice by bytes, then keep only the valid UTF-8 fragments
            text.push_back(alphabet[rng.below(alphabet.size())]);
        }
        for (const std::string& token : preprocess_document(text, config)) {
            REQUIRE(!token.empty());
            std::size_t p = 0;
            while (p < token.size()) {
                char32_t cp = rulemine::utf8::decode(token, p);
                REQUIRE(cp != rulemine::utf8::kInvalid);
                REQUIRE(rulemine::utf8::is_letter(cp));
                REQUIRE(rulemine::utf8::simple_lower(cp) == cp);
            }
        }
    }
}

TEST_CASE("pipeline idempotence") {
    SUBCASE("with stopwords disabled, on random text") {
        PipelineConfig config = PipelineConfig::defaults();
        config.enable_stopwords = false;
        rulemine::synth::Rng rng(99);
        for (int i = 0; i < 1000; ++i) {
            std::string text = random_word(rng) + " " + random_word(rng) + ", " +
                               std::to_string(rng.below(100)) + " " + random_word(rng) + "!";
            auto once = preprocess_document(text, config);
            auto twice = preprocess_document(join(once), config);
            REQUIRE(twice == once);
        }
    }
    SUBCASE("with full defaults, on curated text") {
        PipelineConfig config = PipelineConfig::defaults();
        for (const char* text : {"Beriman dan shalatlah!", "Membaca ayat yang turun",
                                 "Shalat malam itu dua rakaat", "Rasulullah bersabda"}) {
            auto once = preprocess_document(text, config);
            auto twice = preprocess_document(join(once), config);
            REQUIRE(twice == once);
        }
    }
    SUBCASE("with stemmer none") {
        PipelineConfig config = PipelineConfig::defaults();
        config.stemmer = StemmerKind::none;
        config.enable_stemming = false;
        auto once = preprocess_document("Beriman dan shalatlah, 2 rakaat!", config);
        CHECK(preprocess_document(join(once), config) == once);
    }
}

TEST_CASE("stopword list parsing") {
    StopwordSet set = parse_stopword_list("# comment\nDan\n  yang # inline\n\nDARI\n");
    CHECK(set.size() == 3);
    CHECK(set.count("dan") == 1);  // entries are folded to lowercase on load
    CHECK(set.count("yang") == 1);
    CHECK(set.count("dari") == 1);
}

TEST_CASE("builtin data") {
    CHECK(builtin_base_stopwords().count("dan") == 1);
    CHECK(builtin_base_stopwords().count("yang") == 1);
    CHECK(builtin_base_stopwords().count("dari") == 1);
    CHECK(builtin_extra_stopwords().size() == 4);
    CHECK(builtin_extra_stopwords().count("rasulullah") == 1);
    // rule table: three groups (particle suffixes, prefixes, derivational suffixes)
    const StemRules& rules = builtin_stem_rules();
    REQUIRE(rules.groups.size() == 3);
    CHECK(rules.groups[0].kind == AffixGroup::Kind::suffix);
    CHECK(rules.groups[1].kind == AffixGroup::Kind::prefix);
    CHECK(rules.groups[2].kind == AffixGroup::Kind::suffix);
    CHECK(rules.groups[1].affixes.size() == 17);
}

TEST_CASE("stem rule parsing rejects malformed lines") {
    CHECK_THROWS(parse_stem_rules("suffix lah", "t"));     // missing the dash
    CHECK_THROWS(parse_stem_rules("prefix -ber", "t"));    // wrong side
    CHECK_THROWS(parse_stem_rules("circumfix ke-an", "t"));
    CHECK_THROWS(parse_stem_rules("suffix", "t"));
}
