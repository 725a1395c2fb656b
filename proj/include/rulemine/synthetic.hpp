#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Deterministic synthetic corpora for benchmarks and tests. The generator is
// a fixed 64-bit LCG with Zipf-like item weights, so the same spec always
// yields the same documents on every platform.
namespace rulemine::synth {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed ^ 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        std::uint64_t x = state;
        x ^= x >> 33;  // output mix; the raw LCG's low bits are weak
        x *= 0xFF51AFD7ED558CCDull;
        x ^= x >> 33;
        return x;
    }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct CorpusSpec {
    std::size_t documents = 1000;
    std::size_t vocabulary = 500;
    std::size_t min_tokens = 8;   // per document, before dedup
    std::size_t max_tokens = 28;
    double zipf_exponent = 0.6;   // item weight = 1/(rank+1)^exponent
    std::uint64_t seed = 1;
};

/// Letter-only token for a vocabulary rank ("aaaab", "aaaac", ...), so the
/// full preprocessing pipeline passes them through untouched.
std::string token_name(std::size_t rank);

/// One token list per document, Zipf-distributed draws (duplicates allowed,
/// exactly like real text).
std::vector<std::vector<std::string>> token_lists(const CorpusSpec& spec);

/// Writes the corpus as a No,BAB,Hadist,Len CSV usable by the CLI.
void write_corpus_csv(const std::string& path, const std::vector<std::vector<std::string>>& docs);

}  // namespace rulemine::synth
