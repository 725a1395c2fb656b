#include "rulemine/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "rulemine/error.hpp"

namespace rulemine::synth {

std::string token_name(std::size_t rank) {
    std::string name(5, 'a');
    for (std::size_t i = 0; i < 5; ++i) {
        name[4 - i] = static_cast<char>('a' + rank % 26);
        rank /= 26;
    }
    return name;
}

std::vector<std::vector<std::string>> token_lists(const CorpusSpec& spec) {
    std::vector<double> cumulative(spec.vocabulary);
    double total = 0.0;
    for (std::size_t i = 0; i < spec.vocabulary; ++i) {
        total += 1.0 / std::pow(static_cast<double>(i + 1), spec.zipf_exponent);
        cumulative[i] = total;
    }

    Rng rng(spec.seed);
    std::vector<std::vector<std::string>> docs(spec.documents);
    for (auto& doc : docs) {
        const std::size_t span = spec.max_tokens - spec.min_tokens + 1;
        const std::size_t len = spec.min_tokens + static_cast<std::size_t>(rng.below(span));
        doc.reserve(len);
        for (std::size_t t = 0; t < len; ++t) {
            const double u = rng.unit() * total;
            const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
            const auto rank = static_cast<std::size_t>(it - cumulative.begin());
            doc.push_back(token_name(std::min(rank, spec.vocabulary - 1)));
        }
    }
    return docs;
}

void write_corpus_csv(const std::string& path,
                      const std::vector<std::vector<std::string>>& docs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write synthetic corpus: " + path);
    out << "No,BAB,Hadist,Len\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
        std::string text;
        for (std::size_t t = 0; t < docs[i].size(); ++t) {
            if (t) text.push_back(' ');
            text += docs[i][t];
        }
        out << (i + 1) << "," << (1 + i % 97) << "," << text << "," << text.size() << "\n";
    }
}

}  // namespace rulemine::synth
