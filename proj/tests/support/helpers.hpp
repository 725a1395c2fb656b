#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rulemine/synthetic.hpp"
#include "rulemine/transactions.hpp"

// Shared test scaffolding: the committed 4-transaction toy set, scratch
// directories, and small corpus generators.
namespace testsup {

/// The fixed toy transaction set used across the suite:
///   T1={a,b,c}  T2={a,b}  T3={a,c}  T4={b}
/// Hand-computed counts: a=3 b=3 c=2 ab=2 ac=2 bc=1 abc=1.
inline std::vector<std::vector<std::string>> toy_token_lists() {
    return {{"a", "b", "c"}, {"a", "b"}, {"a", "c"}, {"b"}};
}

inline rulemine::TransactionSet toy_tset() {
    auto lists = toy_token_lists();
    return rulemine::TransactionSet::encode(lists, rulemine::Vocabulary::build(lists));
}

/// Fresh scratch directory under the system temp dir; removed on destruction.
class ScratchDir {
public:
    explicit ScratchDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("rulemine_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~ScratchDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

/// Random small corpus over single-letter items, with some empty documents.
inline std::vector<std::vector<std::string>> random_token_lists(rulemine::synth::Rng& rng,
                                                                std::size_t max_docs = 50,
                                                                std::size_t max_vocab = 12) {
    const std::size_t n = 1 + rng.below(max_docs);
    const std::size_t v = 1 + rng.below(max_vocab);
    std::vector<std::vector<std::string>> lists(n);
    for (auto& doc : lists) {
        const std::size_t len = rng.below(v + 2);  // 0 => empty document
        for (std::size_t t = 0; t < len; ++t) {
            doc.push_back(std::string(1, static_cast<char>('a' + rng.below(v))));
        }
    }
    return lists;
}

}  // namespace testsup
