#include "rulemine/apriori.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "rulemine/error.hpp"

namespace rulemine {

namespace {

void check_params(const MiningParams& params) {
    if (!(params.min_support > 0.0) || params.min_support > 1.0) {
        throw validation_error("min_support must be in (0, 1], got " +
                               std::to_string(params.min_support));
    }
}

bool items_less(const std::vector<ItemId>& a, const std::vector<ItemId>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Binary search over a lex-sorted frequent level.
std::size_t find_index(const std::vector<FrequentItemset>& level,
                       const std::vector<ItemId>& items) {
    auto it = std::lower_bound(level.begin(), level.end(), items,
                               [](const FrequentItemset& fi, const std::vector<ItemId>& key) {
                                   return items_less(fi.items, key);
                               });
    if (it == level.end() || it->items != items) return level.size();
    return static_cast<std::size_t>(it - level.begin());
}

std::uint64_t popcount_words(std::span<const std::uint64_t> words) {
    std::uint64_t count = 0;
    for (std::uint64_t w : words) count += static_cast<std::uint64_t>(std::popcount(w));
    return count;
}

}  // namespace

std::uint64_t min_count_threshold(double min_support, std::uint64_t n) {
    const double dn = static_cast<double>(n);
    auto c = static_cast<std::uint64_t>(std::ceil(min_support * dn));
    if (c > n) c = n;
    while (c > 0 && static_cast<double>(c - 1) / dn >= min_support) --c;
    while (c < n && static_cast<double>(c) / dn < min_support) ++c;
    return c;
}

const FrequentItemset* FrequentItemsetTable::find(std::span<const ItemId> items) const {
    auto level_it = by_size.find(items.size());
    if (level_it == by_size.end()) return nullptr;
    const auto& level = level_it->second;
    std::vector<ItemId> key(items.begin(), items.end());
    std::size_t idx = find_index(level, key);
    if (idx == level.size()) return nullptr;
    return &level[idx];
}

std::size_t FrequentItemsetTable::total_itemsets() const {
    std::size_t total = 0;
    for (const auto& [k, level] : by_size) total += level.size();
    return total;
}

std::vector<FrequentItemset> frequent_1_itemsets(const TransactionSet& tset,
                                                 const MiningParams& params) {
    check_params(params);
    if (tset.transaction_count() == 0) {
        throw validation_error("cannot mine an empty transaction set");
    }
    const std::uint64_t n = tset.transaction_count();
    const std::uint64_t threshold = min_count_threshold(params.min_support, n);

    std::vector<FrequentItemset> frequent;
    for (ItemId item = 0; item < tset.vocab_size(); ++item) {
        std::uint64_t count = popcount_words(tset.column(item));
        if (count >= threshold) {
            frequent.push_back({{item}, count, static_cast<double>(count) / static_cast<double>(n)});
        }
    }
    return frequent;
}

std::vector<std::vector<ItemId>> candidate_join(const std::vector<FrequentItemset>& freq_k) {
    std::vector<std::vector<ItemId>> candidates;
    if (freq_k.empty()) return candidates;
    const std::size_t k = freq_k[0].items.size();

    for (std::size_t i = 0; i < freq_k.size(); ++i) {
        const auto& a = freq_k[i].items;
        for (std::size_t j = i + 1; j < freq_k.size(); ++j) {
            const auto& b = freq_k[j].items;
            // lex order means equal prefixes are adjacent; stop once they diverge
            if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
            std::vector<ItemId> candidate(a);
            candidate.push_back(b[k - 1]);
            candidates.push_back(std::move(candidate));
        }
    }
    std::sort(candidates.begin(), candidates.end(), items_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return candidates;
}

std::vector<std::vector<ItemId>> candidate_prune(std::vector<std::vector<ItemId>> candidates,
                                                 const std::vector<FrequentItemset>& freq_k) {
    auto all_subsets_frequent = [&](const std::vector<ItemId>& candidate) {
        std::vector<ItemId> subset(candidate.size() - 1);
        for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
            std::size_t out = 0;
            for (std::size_t i = 0; i < candidate.size(); ++i) {
                if (i != drop) subset[out++] = candidate[i];
            }
            if (find_index(freq_k, subset) == freq_k.size()) return false;
        }
        return true;
    };
    std::erase_if(candidates, [&](const std::vector<ItemId>& c) { return !all_subsets_frequent(c); });
    return candidates;
}

FrequentItemsetTable mine_frequent_itemsets(const TransactionSet& tset,
                                            const MiningParams& params) {
    FrequentItemsetTable table;
    table.params = params;
    table.n = tset.transaction_count();

    auto level1 = frequent_1_itemsets(tset, params);  // validates params and n > 0
    table.threshold = min_count_threshold(params.min_support, table.n);
    table.levels.push_back({1, tset.vocab_size(), level1.size()});

    const std::size_t words = tset.words_per_column();
    const double dn = static_cast<double>(table.n);
    const std::size_t max_size =
        params.max_itemset_size == 0 ? SIZE_MAX : params.max_itemset_size;

    // Intersection bits of the current level's itemsets, reused as the
    // cached prefix intersection when counting the next level.
    std::vector<std::uint64_t> level_bits;
    level_bits.reserve(level1.size() * words);
    for (const auto& fi : level1) {
        auto col = tset.column(fi.items[0]);
        level_bits.insert(level_bits.end(), col.begin(), col.end());
    }

    std::vector<FrequentItemset> current = std::move(level1);
    std::size_t k = 1;
    while (!current.empty() && k < max_size) {
        auto candidates = candidate_prune(candidate_join(current), current);
        if (candidates.empty()) {
            table.by_size[k] = std::move(current);
            current.clear();
            break;
        }

        // Each candidate's first k items are one of the current frequent
        // itemsets (its join prefix); locate it so its bits can be reused.
        std::vector<std::size_t> prefix_index(candidates.size());
        std::vector<ItemId> last_item(candidates.size());
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            std::vector<ItemId> prefix(candidates[c].begin(), candidates[c].end() - 1);
            std::size_t idx = find_index(current, prefix);
            if (idx == current.size()) {
                throw internal_error("mining: candidate prefix missing from the previous level");
            }
            prefix_index[c] = idx;
            last_item[c] = candidates[c].back();
        }

        std::vector<std::uint64_t> counts(candidates.size(), 0);
        const std::int64_t num_candidates = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < num_candidates; ++c) {
            const std::uint64_t* prefix_bits = level_bits.data() + prefix_index[c] * words;
            auto col = tset.column(last_item[c]);
            std::uint64_t count = 0;
            for (std::size_t w = 0; w < words; ++w) {
                count += static_cast<std::uint64_t>(std::popcount(prefix_bits[w] & col[w]));
            }
            counts[c] = count;
        }

        std::vector<FrequentItemset> next;
        std::vector<std::uint64_t> next_bits;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (counts[c] < table.threshold) continue;
            next.push_back({std::move(candidates[c]), counts[c],
                            static_cast<double>(counts[c]) / dn});
            const std::uint64_t* prefix_bits = level_bits.data() + prefix_index[c] * words;
            auto col = tset.column(last_item[c]);
            for (std::size_t w = 0; w < words; ++w) {
                next_bits.push_back(prefix_bits[w] & col[w]);
            }
        }

        table.levels.push_back({k + 1, candidates.size(), next.size()});
        table.by_size[k] = std::move(current);
        current = std::move(next);
        level_bits = std::move(next_bits);
        ++k;
    }
    if (!current.empty()) {
        table.by_size[k] = std::move(current);
    }
    return table;
}

}  // namespace rulemine
