#include "rulemine/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "rulemine/error.hpp"

namespace rulemine::oracle {

namespace {

constexpr std::size_t kMaxVocab = 20;

// Same threshold semantics as the miner, implemented independently: the
// smallest count c whose fraction of n reaches min_support.
std::uint64_t ceiling_threshold(double min_support, std::uint64_t n) {
    std::uint64_t c = 0;
    while (c < n && static_cast<double>(c) / static_cast<double>(n) < min_support) ++c;
    if (c == 0) c = 1;
    return c;
}

std::vector<ItemId> mask_to_items(std::uint32_t mask) {
    std::vector<ItemId> items;
    while (mask) {
        items.push_back(static_cast<ItemId>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return items;
}

}  // namespace

FrequentItemsetTable brute_force_itemsets(const TransactionSet& tset, double min_support,
                                          std::size_t max_size) {
    if (tset.vocab_size() > kMaxVocab) {
        throw validation_error("oracle: refusing vocabulary of " +
                               std::to_string(tset.vocab_size()) + " items (limit " +
                               std::to_string(kMaxVocab) + "); this is a test oracle");
    }
    if (!(min_support > 0.0) || min_support > 1.0) {
        throw validation_error("oracle: min_support must be in (0, 1]");
    }
    if (tset.transaction_count() == 0) {
        throw validation_error("oracle: empty transaction set");
    }

    const std::size_t v = tset.vocab_size();
    const std::uint64_t n = tset.transaction_count();
    const std::uint64_t threshold = ceiling_threshold(min_support, n);
    const std::size_t cap = max_size == 0 ? v : std::min(max_size, v);

    // Row masks make the subset test a single AND; counting is still one
    // pass over the rows per candidate itemset.
    std::vector<std::uint32_t> row_masks;
    row_masks.reserve(n);
    for (const Transaction& row : tset.rows()) {
        std::uint32_t mask = 0;
        for (ItemId item : row.items) mask |= 1u << item;
        row_masks.push_back(mask);
    }

    FrequentItemsetTable table;
    table.params = MiningParams{min_support, max_size};
    table.n = n;
    table.threshold = threshold;

    if (v == 0) return table;
    const std::uint32_t all = (1u << v) - 1;
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size > cap) continue;
        std::uint64_t count = 0;
        for (std::uint32_t row : row_masks) {
            if ((row & mask) == mask) ++count;
        }
        if (count < threshold) continue;
        table.by_size[size].push_back(
            {mask_to_items(mask), count,
             static_cast<double>(count) / static_cast<double>(n)});
    }
    for (auto& [size, level] : table.by_size) {
        std::sort(level.begin(), level.end(),
                  [](const FrequentItemset& a, const FrequentItemset& b) {
                      return a.items < b.items;
                  });
    }
    for (const auto& [size, level] : table.by_size) {
        table.levels.push_back({size, 0, level.size()});
    }
    return table;
}

std::vector<AssociationRule> brute_force_rules(const FrequentItemsetTable& table,
                                               const RuleFilter& filter) {
    std::vector<AssociationRule> rules;
    const double dn = static_cast<double>(table.n);

    auto count_of = [&](const std::vector<ItemId>& items) -> std::uint64_t {
        const FrequentItemset* fi = table.find(items);
        if (fi == nullptr) {
            throw internal_error("oracle: subset support missing from the table");
        }
        return fi->count;
    };

    for (const auto& [size, level] : table.by_size) {
        if (size < 2) continue;
        for (const FrequentItemset& itemset : level) {
            const std::size_t m = itemset.items.size();
            for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
                std::vector<ItemId> antecedent, consequent;
                for (std::size_t i = 0; i < m; ++i) {
                    if (mask & (1u << i)) {
                        antecedent.push_back(itemset.items[i]);
                    } else {
                        consequent.push_back(itemset.items[i]);
                    }
                }
                if (antecedent.size() > filter.max_antecedent_size) continue;
                if (consequent.size() > filter.max_consequent_size) continue;

                AssociationRule rule;
                rule.support = static_cast<double>(itemset.count) / dn;
                rule.antecedent_support = static_cast<double>(count_of(antecedent)) / dn;
                rule.consequent_support = static_cast<double>(count_of(consequent)) / dn;
                rule.confidence = rule.support / rule.antecedent_support;
                rule.lift = rule.confidence / rule.consequent_support;
                if (rule.confidence < filter.min_confidence) continue;
                if (rule.lift < filter.min_lift) continue;
                rule.antecedent = std::move(antecedent);
                rule.consequent = std::move(consequent);
                rules.push_back(std::move(rule));
            }
        }
    }

    // Same presentation order as the miner's rule generator, written out
    // here so the oracle stays self-contained.
    std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
        if (a.confidence != b.confidence) return a.confidence > b.confidence;
        if (a.lift != b.lift) return a.lift > b.lift;
        if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
        return a.consequent < b.consequent;
    });
    if (filter.top_n && rules.size() > *filter.top_n) {
        rules.resize(*filter.top_n);
    }
    return rules;
}

}  // namespace rulemine::oracle
