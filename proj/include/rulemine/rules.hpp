#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rulemine/apriori.hpp"
#include "rulemine/transactions.hpp"

// Association rules: antecedent -> consequent pairs generated from frequent
// itemsets, scored with support/confidence/lift, ranked, and checked against
// published rule tables.
namespace rulemine {

struct AssociationRule {
    std::vector<ItemId> antecedent;  // strictly increasing, non-empty
    std::vector<ItemId> consequent;  // strictly increasing, non-empty, disjoint
    double antecedent_support = 0.0;
    double consequent_support = 0.0;
    double support = 0.0;
    double confidence = 0.0;  // always support / antecedent_support
    double lift = 0.0;        // always confidence / consequent_support
};

struct RuleFilter {
    double min_confidence = 0.0;
    double min_lift = 0.6;
    std::size_t max_antecedent_size = 1;
    std::size_t max_consequent_size = 1;
    std::optional<std::size_t> top_n;  // applied after ranking
};

/// Every bipartition A -> B of every frequent itemset with |A|,|B| within the
/// filter's size caps, metrics from the table's exact counts, thresholds
/// applied (>= comparisons), ranked, then truncated to top_n if set. A
/// missing subset support is an internal-consistency error: downward closure
/// guarantees its presence.
std::vector<AssociationRule> generate_rules(const FrequentItemsetTable& table,
                                            const RuleFilter& filter);

/// Sorts by confidence desc, then lift desc, then antecedent asc, then
/// consequent asc (item-id order equals token lexicographic order).
std::vector<AssociationRule> rank_rules(std::vector<AssociationRule> rules);

// -- published-table validation ----------------------------------------------

/// One row of a reported rule table (token sets are space-joined strings).
struct ReportedRule {
    int no = 0;
    std::string antecedents;
    std::string consequents;
    double antecedent_support = 0.0;
    double consequent_support = 0.0;
    double support = 0.0;
    double confidence = 0.0;
    double lift = 0.0;
};

struct CellFlag {
    int row_no = 0;
    std::string field;   // "confidence", "lift", "consequent_support", ...
    double reported = 0.0;
    double implied = 0.0;
    double rel_error = 0.0;
    std::string note;
};

struct ValidationReport {
    std::size_t rows = 0;
    std::size_t symmetric_pairs = 0;  // swapped-pair rows whose support/lift matched
    std::vector<CellFlag> flags;
};

/// Recomputes confidence' = support/antecedent_support and
/// lift' = confidence/consequent_support per row, flags any deviation beyond
/// rel_tolerance, and checks swapped antecedent/consequent pairs for shared
/// support and lift. A failed lift identity is attributed to the
/// consequent_support cell when confidence/lift is corroborated by another
/// row's reported support for the same token set; otherwise to the lift cell.
ValidationReport validate_rule_table(const std::vector<ReportedRule>& rows,
                                     double rel_tolerance);

struct RuleFixture {
    std::vector<ReportedRule> rows;
    // cells declared expected-inconsistent via `# expect-inconsistent:` lines
    std::set<std::pair<int, std::string>> expected_flags;
};

/// Reads a rule table in the output CSV schema below. `#` comment lines are
/// allowed; `# expect-inconsistent: row=N field=NAME` declares allowlisted
/// flags. Malformed rows raise validation errors naming the line.
RuleFixture load_rule_fixture(const std::string& path);

// -- output ------------------------------------------------------------------
// Columns: no,antecedents,consequents,antecedent_support,consequent_support,
// support,confidence,lift — fractions with 6 decimals, token sets
// space-joined.

void write_rules_csv(std::ostream& out, const std::vector<AssociationRule>& rules,
                     const Vocabulary& vocab);
void write_rules_json(std::ostream& out, const std::vector<AssociationRule>& rules,
                      const Vocabulary& vocab);
void write_rules_table(std::ostream& out, const std::vector<AssociationRule>& rules,
                       const Vocabulary& vocab);

std::string format_fraction(double value);  // fixed 6 decimals
std::string join_tokens(const std::vector<ItemId>& items, const Vocabulary& vocab);

}  // namespace rulemine
