#include "rulemine/rules.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rulemine/csv.hpp"
#include "rulemine/error.hpp"

namespace rulemine {

namespace {

double rel_deviation(double reported, double implied) {
    double denom = std::max(std::abs(reported), std::abs(implied));
    if (denom == 0.0) return 0.0;
    return std::abs(reported - implied) / denom;
}

bool rule_order(const AssociationRule& a, const AssociationRule& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    if (a.lift != b.lift) return a.lift > b.lift;
    if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
    return a.consequent < b.consequent;
}

}  // namespace

std::vector<AssociationRule> generate_rules(const FrequentItemsetTable& table,
                                            const RuleFilter& filter) {
    std::vector<AssociationRule> rules;
    const double dn = static_cast<double>(table.n);

    auto count_of = [&](const std::vector<ItemId>& items) -> std::uint64_t {
        const FrequentItemset* fi = table.find(items);
        if (fi == nullptr) {
            throw internal_error(
                "rule generation: subset support missing from the frequent-itemset table "
                "(downward closure violated — mining bug)");
        }
        return fi->count;
    };

    std::vector<ItemId> antecedent, consequent;
    for (const auto& [size, level] : table.by_size) {
        if (size < 2) continue;
        for (const FrequentItemset& itemset : level) {
            const std::size_t m = itemset.items.size();
            // Enumerate bipartitions by antecedent bitmask. Size caps keep
            // this cheap; m is bounded by max_itemset_size in practice.
            const std::uint64_t masks = 1ull << m;
            for (std::uint64_t mask = 1; mask + 1 < masks; ++mask) {
                const auto a_size = static_cast<std::size_t>(std::popcount(mask));
                const std::size_t b_size = m - a_size;
                if (a_size > filter.max_antecedent_size) continue;
                if (b_size > filter.max_consequent_size) continue;

                antecedent.clear();
                consequent.clear();
                for (std::size_t i = 0; i < m; ++i) {
                    if (mask & (1ull << i)) {
                        antecedent.push_back(itemset.items[i]);
                    } else {
                        consequent.push_back(itemset.items[i]);
                    }
                }

                AssociationRule rule;
                rule.support = static_cast<double>(itemset.count) / dn;
                rule.antecedent_support = static_cast<double>(count_of(antecedent)) / dn;
                rule.consequent_support = static_cast<double>(count_of(consequent)) / dn;
                rule.confidence = rule.support / rule.antecedent_support;
                rule.lift = rule.confidence / rule.consequent_support;
                if (rule.confidence < filter.min_confidence) continue;
                if (rule.lift < filter.min_lift) continue;
                rule.antecedent = antecedent;
                rule.consequent = consequent;
                rules.push_back(std::move(rule));
            }
        }
    }

    rules = rank_rules(std::move(rules));
    if (filter.top_n && rules.size() > *filter.top_n) {
        rules.resize(*filter.top_n);
    }
    return rules;
}

std::vector<AssociationRule> rank_rules(std::vector<AssociationRule> rules) {
    std::sort(rules.begin(), rules.end(), rule_order);
    return rules;
}

ValidationReport validate_rule_table(const std::vector<ReportedRule>& rows,
                                     double rel_tolerance) {
    ValidationReport report;
    report.rows = rows.size();

    // All reported supports per token set, for cross-row corroboration.
    auto supports_of = [&](const std::string& token_set, int exclude_row,
                           bool exclude_consequent) {
        std::vector<double> values;
        for (const auto& row : rows) {
            if (row.antecedents == token_set &&
                !(row.no == exclude_row && !exclude_consequent)) {
                values.push_back(row.antecedent_support);
            }
            if (row.consequents == token_set &&
                !(row.no == exclude_row && exclude_consequent)) {
                values.push_back(row.consequent_support);
            }
        }
        return values;
    };
    auto corroborated = [&](const std::vector<double>& evidence, double value) {
        return std::any_of(evidence.begin(), evidence.end(), [&](double e) {
            return rel_deviation(e, value) <= rel_tolerance;
        });
    };

    for (const auto& row : rows) {
        if (row.antecedent_support <= 0.0 || row.consequent_support <= 0.0) {
            report.flags.push_back({row.no, "antecedent_support", row.antecedent_support,
                                    0.0, 1.0, "supports must be positive"});
            continue;
        }
        const double conf_implied = row.support / row.antecedent_support;
        const bool conf_ok = rel_deviation(row.confidence, conf_implied) <= rel_tolerance;
        if (!conf_ok) {
            report.flags.push_back({row.no, "confidence", row.confidence, conf_implied,
                                    rel_deviation(row.confidence, conf_implied),
                                    "confidence != support / antecedent_support"});
        }

        const double lift_implied = row.confidence / row.consequent_support;
        const bool lift_ok = rel_deviation(row.lift, lift_implied) <= rel_tolerance;
        if (!lift_ok) {
            // Which cell is wrong, consequent_support or lift? Trust whichever
            // value other rows corroborate for the same token set.
            const double csup_implied = row.confidence / row.lift;
            auto evidence = supports_of(row.consequents, row.no, /*exclude_consequent=*/true);
            if (conf_ok && corroborated(evidence, csup_implied) &&
                !corroborated(evidence, row.consequent_support)) {
                report.flags.push_back(
                    {row.no, "consequent_support", row.consequent_support, csup_implied,
                     rel_deviation(row.consequent_support, csup_implied),
                     "contradicts the row's reported lift; implied value matches the "
                     "token's support reported elsewhere in the table"});
            } else {
                report.flags.push_back({row.no, "lift", row.lift, lift_implied,
                                        rel_deviation(row.lift, lift_implied),
                                        "lift != confidence / consequent_support"});
            }
        }
    }

    // Pair symmetry: swapped antecedent/consequent rows must share support
    // and lift exactly as printed.
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const auto& a = rows[i];
            const auto& b = rows[j];
            if (a.antecedents != b.consequents || a.consequents != b.antecedents) continue;
            bool ok = true;
            if (a.support != b.support) {
                report.flags.push_back({b.no, "support", b.support, a.support,
                                        rel_deviation(b.support, a.support),
                                        "swapped-pair rows " + std::to_string(a.no) + "/" +
                                            std::to_string(b.no) + " disagree on support"});
                ok = false;
            }
            if (a.lift != b.lift) {
                report.flags.push_back({b.no, "lift", b.lift, a.lift,
                                        rel_deviation(b.lift, a.lift),
                                        "swapped-pair rows " + std::to_string(a.no) + "/" +
                                            std::to_string(b.no) + " disagree on lift"});
                ok = false;
            }
            if (ok) report.symmetric_pairs += 1;
        }
    }
    return report;
}

namespace {

double parse_fraction(const std::string& s, std::size_t line, const char* field) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw validation_error("rule table line " + std::to_string(line) + ": field '" +
                               field + "' is not a number: '" + s + "'");
    }
    return value;
}

}  // namespace

RuleFixture load_rule_fixture(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open rule table: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string data = std::move(ss).str();

    RuleFixture fixture;

    // Directive scan (raw lines, before CSV parsing).
    std::istringstream lines(data);
    std::string line;
    while (std::getline(lines, line)) {
        auto pos = line.find("# expect-inconsistent:");
        if (pos == std::string::npos) continue;
        std::string rest = line.substr(pos + std::string("# expect-inconsistent:").size());
        int row = 0;
        char field[64] = {0};
        if (std::sscanf(rest.c_str(), " row=%d field=%63s", &row, field) == 2) {
            fixture.expected_flags.emplace(row, std::string(field));
        } else {
            throw validation_error(path + ": malformed expect-inconsistent directive: " + line);
        }
    }

    csv::ParseOptions opts;
    opts.skip_comment_lines = true;
    auto records = csv::parse(data, opts);
    if (records.empty()) throw validation_error(path + ": empty rule table");

    static const std::vector<std::string> expected_header = {
        "no", "antecedents", "consequents", "antecedent_support",
        "consequent_support", "support", "confidence", "lift"};
    if (records[0].fields != expected_header) {
        throw validation_error(path + ": unexpected header; want `no,antecedents,consequents,"
                               "antecedent_support,consequent_support,support,confidence,lift`");
    }

    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != expected_header.size()) {
            throw validation_error("rule table line " + std::to_string(rec.line) + ": expected " +
                                   std::to_string(expected_header.size()) + " fields, got " +
                                   std::to_string(rec.fields.size()));
        }
        ReportedRule row;
        row.no = static_cast<int>(parse_fraction(rec.fields[0], rec.line, "no"));
        row.antecedents = rec.fields[1];
        row.consequents = rec.fields[2];
        row.antecedent_support = parse_fraction(rec.fields[3], rec.line, "antecedent_support");
        row.consequent_support = parse_fraction(rec.fields[4], rec.line, "consequent_support");
        row.support = parse_fraction(rec.fields[5], rec.line, "support");
        row.confidence = parse_fraction(rec.fields[6], rec.line, "confidence");
        row.lift = parse_fraction(rec.fields[7], rec.line, "lift");
        fixture.rows.push_back(std::move(row));
    }
    return fixture;
}

std::string format_fraction(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string join_tokens(const std::vector<ItemId>& items, const Vocabulary& vocab) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out.push_back(' ');
        out += vocab.token(items[i]);
    }
    return out;
}

void write_rules_csv(std::ostream& out, const std::vector<AssociationRule>& rules,
                     const Vocabulary& vocab) {
    out << "no,antecedents,consequents,antecedent_support,consequent_support,"
           "support,confidence,lift\n";
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        out << csv::join({std::to_string(i + 1), join_tokens(r.antecedent, vocab),
                          join_tokens(r.consequent, vocab),
                          format_fraction(r.antecedent_support),
                          format_fraction(r.consequent_support), format_fraction(r.support),
                          format_fraction(r.confidence), format_fraction(r.lift)})
            << "\n";
    }
}

void write_rules_json(std::ostream& out, const std::vector<AssociationRule>& rules,
                      const Vocabulary& vocab) {
    // Metrics are rounded to the same 6 decimals the CSV prints.
    auto rounded = [](double v) { return std::stod(format_fraction(v)); };
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        arr.push_back({{"no", i + 1},
                       {"antecedents", join_tokens(r.antecedent, vocab)},
                       {"consequents", join_tokens(r.consequent, vocab)},
                       {"antecedent_support", rounded(r.antecedent_support)},
                       {"consequent_support", rounded(r.consequent_support)},
                       {"support", rounded(r.support)},
                       {"confidence", rounded(r.confidence)},
                       {"lift", rounded(r.lift)}});
    }
    out << arr.dump(2) << "\n";
}

void write_rules_table(std::ostream& out, const std::vector<AssociationRule>& rules,
                       const Vocabulary& vocab) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"no", "antecedents", "consequents", "antecedent_support",
                     "consequent_support", "support", "confidence", "lift", ""});
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        cells.push_back({std::to_string(i + 1), join_tokens(r.antecedent, vocab),
                         join_tokens(r.consequent, vocab),
                         format_fraction(r.antecedent_support),
                         format_fraction(r.consequent_support), format_fraction(r.support),
                         format_fraction(r.confidence), format_fraction(r.lift),
                         r.lift < 1.0 ? "negative association" : ""});
    }
    std::vector<std::size_t> widths(cells[0].size(), 0);
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c];
            if (c + 1 < row.size()) {
                out << std::string(widths[c] - row[c].size(), ' ');
            }
        }
        out << "\n";
    }
    if (rules.empty()) out << "(no rules)\n";
}

}  // namespace rulemine
