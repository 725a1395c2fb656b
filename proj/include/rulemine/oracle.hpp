#pragma once

#include <vector>

#include "rulemine/apriori.hpp"
#include "rulemine/rules.hpp"
#include "rulemine/transactions.hpp"

// Brute-force reference implementations used by the test suite to certify
// the optimized miner. Deliberately shares no counting code with it: support
// comes from a naive scan over the row-major transactions, never from the
// column bit vectors.
namespace rulemine::oracle {

/// Enumerates every non-empty itemset up to max_size (0 = unbounded), counts
/// each by scanning rows, and keeps those meeting the ceiling threshold.
/// Refuses vocabularies larger than 20 items (exponential enumeration).
FrequentItemsetTable brute_force_itemsets(const TransactionSet& tset, double min_support,
                                          std::size_t max_size);

/// Enumerates all bipartitions of every frequent itemset, computes the five
/// metrics from the table's counts, applies the filter, ranks, truncates.
std::vector<AssociationRule> brute_force_rules(const FrequentItemsetTable& table,
                                               const RuleFilter& filter);

}  // namespace rulemine::oracle
