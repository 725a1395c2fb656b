#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rulemine/transactions.hpp"

// Levelwise Apriori: frequent-1 seed, prefix-join candidate generation,
// antimonotone pruning, bit-vector support counting. Candidate counting
// within a level is partitioned across OpenMP workers; every count is an
// exact popcount into the candidate's own slot, so results are byte-identical
// for any worker count.
namespace rulemine {

struct MiningParams {
    double min_support = 0.02;          // relative, in (0, 1]
    std::size_t max_itemset_size = 0;   // 0 = unbounded
};

struct FrequentItemset {
    std::vector<ItemId> items;  // strictly increasing
    std::uint64_t count = 0;    // absolute support
    double rel_support = 0.0;   // count / n
};

struct LevelStats {
    std::size_t size = 0;        // itemset size k
    std::size_t candidates = 0;  // surviving the join+prune
    std::size_t frequent = 0;
};

struct FrequentItemsetTable {
    std::map<std::size_t, std::vector<FrequentItemset>> by_size;  // lex-sorted per k
    MiningParams params;
    std::uint64_t n = 0;          // transaction count
    std::uint64_t threshold = 0;  // minimal absolute count deemed frequent
    std::vector<LevelStats> levels;

    /// Lookup by exact item vector; nullptr when absent.
    const FrequentItemset* find(std::span<const ItemId> items) const;
    std::size_t total_itemsets() const;
};

/// Smallest absolute count c with c/n >= min_support, computed so that float
/// noise in min_support*n can never shift the boundary.
std::uint64_t min_count_threshold(double min_support, std::uint64_t n);

/// Single items at or above the support threshold, id-sorted.
std::vector<FrequentItemset> frequent_1_itemsets(const TransactionSet& tset,
                                                 const MiningParams& params);

/// Classic F_k join: two lex-sorted k-itemsets sharing their first k-1 items
/// produce their (k+1)-union. Output sorted and duplicate-free.
std::vector<std::vector<ItemId>> candidate_join(const std::vector<FrequentItemset>& freq_k);

/// Keeps a candidate iff every k-subset is frequent (downward closure).
std::vector<std::vector<ItemId>> candidate_prune(std::vector<std::vector<ItemId>> candidates,
                                                 const std::vector<FrequentItemset>& freq_k);

/// Full levelwise mining loop (generate -> prune -> count -> threshold).
FrequentItemsetTable mine_frequent_itemsets(const TransactionSet& tset,
                                            const MiningParams& params);

}  // namespace rulemine
