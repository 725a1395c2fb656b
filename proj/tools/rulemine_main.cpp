#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rulemine/commands.hpp"
#include "rulemine/error.hpp"

namespace {

using rulemine::RunConfig;

// Shared flag wiring for the subcommands that run the pipeline.
struct CliOptions {
    RunConfig config;
    std::string format = "csv";
    std::string delimiter = ",";
    std::string col_len = "Len";
    bool no_len_column = false;
    bool no_stopwords = false;
    std::string stemmer = "affix";
    std::string out_format = "table";
    std::size_t top = 0;

    void add_input_flags(CLI::App* cmd) {
        cmd->add_option("--input", config.input_path, "corpus file (CSV/TSV or JSONL)")
            ->required();
        cmd->add_option("--format", format, "input format: csv|jsonl")
            ->check(CLI::IsMember({"csv", "jsonl"}))
            ->capture_default_str();
        cmd->add_option("--delimiter", delimiter,
                        "CSV delimiter: a single character, or 'tab'")
            ->capture_default_str();
        cmd->add_option("--col-no", config.columns.row_id, "row id column/field name")
            ->capture_default_str();
        cmd->add_option("--col-bab", config.columns.chapter, "chapter column/field name")
            ->capture_default_str();
        cmd->add_option("--col-text", config.columns.text, "text column/field name")
            ->capture_default_str();
        cmd->add_option("--col-len", col_len, "length column/field name")
            ->capture_default_str();
        cmd->add_flag("--no-len-column", no_len_column,
                      "do not look for a length column; recompute lengths");
        cmd->add_flag("--skip-invalid", config.skip_invalid,
                      "count and skip invalid rows instead of failing");
    }

    void add_pipeline_flags(CLI::App* cmd) {
        cmd->add_option("--stemmer", stemmer, "stemmer: none|affix")
            ->check(CLI::IsMember({"none", "affix"}))
            ->capture_default_str();
        cmd->add_option("--stopwords", config.stopwords_file,
                        "base stopword list file (default: bundled Indonesian list)");
        cmd->add_option("--extra-stopwords", config.extra_stopwords_file,
                        "extra stopword list file (default: bundled hadith terms)");
        cmd->add_flag("--no-stopwords", no_stopwords, "disable stopword removal");
        cmd->add_option("--threads", config.threads,
                        "worker threads for mining/preprocessing (0 = default; "
                        "never affects results)");
    }

    void add_mining_flags(CLI::App* cmd) {
        cmd->add_option("--min-support", config.mining.min_support,
                        "minimum relative support in (0,1]")
            ->capture_default_str();
        cmd->add_option("--max-itemset-size", config.mining.max_itemset_size,
                        "cap on frequent itemset size (0 = unbounded)")
            ->capture_default_str();
        cmd->add_option("--min-lift", config.filter.min_lift, "minimum lift")
            ->capture_default_str();
        cmd->add_option("--min-confidence", config.filter.min_confidence,
                        "minimum confidence")
            ->capture_default_str();
        cmd->add_option("--max-antecedent", config.filter.max_antecedent_size,
                        "max antecedent size")
            ->capture_default_str();
        cmd->add_option("--max-consequent", config.filter.max_consequent_size,
                        "max consequent size")
            ->capture_default_str();
        cmd->add_option("--top", top, "keep only the top N rules by confidence");
        cmd->add_option("--out", config.out_path, "output file (default: stdout)");
        cmd->add_option("--out-format", out_format, "rule output format: csv|json|table")
            ->check(CLI::IsMember({"csv", "json", "table"}))
            ->capture_default_str();
        cmd->add_option("--dump-itemsets", config.dump_itemsets_path,
                        "also write the frequent itemsets as CSV");
        cmd->add_option("--dump-tokens", config.dump_tokens_path,
                        "also write the per-document token dump as JSONL");
    }

    void add_out_flag(CLI::App* cmd) {
        cmd->add_option("--out", config.out_path, "output file (default: stdout)");
    }

    RunConfig resolve() {
        config.format = format == "jsonl" ? rulemine::InputFormat::jsonl
                                          : rulemine::InputFormat::csv;
        if (delimiter == "tab" || delimiter == "\\t") {
            config.delimiter = '\t';
        } else if (delimiter.size() == 1) {
            config.delimiter = delimiter[0];
        } else {
            throw rulemine::validation_error("--delimiter must be one character or 'tab'");
        }
        config.columns.length = no_len_column ? std::nullopt
                                              : std::optional<std::string>(col_len);
        config.stopwords_enabled = !no_stopwords;
        config.stemmer = stemmer == "none" ? rulemine::textprep::StemmerKind::none
                                           : rulemine::textprep::StemmerKind::affix_strip;
        if (top > 0) config.filter.top_n = top;
        config.out_format = out_format == "csv"    ? rulemine::OutputFormat::csv
                            : out_format == "json" ? rulemine::OutputFormat::json
                                                   : rulemine::OutputFormat::table;
        return config;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rulemine — mine ranked association rules from a text corpus"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from an INI/TOML file (flags override)");

    CliOptions mine_opts;
    CLI::App* mine = app.add_subcommand(
        "mine", "run the full pipeline: ingest, preprocess, encode, mine, rank");
    mine_opts.add_input_flags(mine);
    mine_opts.add_pipeline_flags(mine);
    mine_opts.add_mining_flags(mine);

    CliOptions prep_opts;
    CLI::App* preprocess = app.add_subcommand(
        "preprocess", "ingest and preprocess only; dump tokens as JSONL");
    prep_opts.add_input_flags(preprocess);
    prep_opts.add_pipeline_flags(preprocess);
    prep_opts.add_out_flag(preprocess);

    std::string fixture_path;
    double tolerance = 5e-4;
    CLI::App* validate = app.add_subcommand(
        "validate-table", "check a rule table CSV for metric self-consistency");
    validate->add_option("--fixture", fixture_path, "rule table CSV to check")->required();
    validate->add_option("--tolerance", tolerance, "relative tolerance")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (mine->parsed()) {
            return rulemine::cmd_mine(mine_opts.resolve(), std::cout, std::cerr);
        }
        if (preprocess->parsed()) {
            return rulemine::cmd_preprocess(prep_opts.resolve(), std::cout, std::cerr);
        }
        return rulemine::cmd_validate_table(fixture_path, tolerance, std::cout, std::cerr);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // parameter errors map to exit 1
    } catch (const rulemine::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
