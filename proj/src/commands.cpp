#include "rulemine/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "rulemine/csv.hpp"
#include "rulemine/error.hpp"
#include "rulemine/hash.hpp"

namespace rulemine {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

// Collects files to write; nothing touches the filesystem until the whole
// command has succeeded, so failures leave no partial outputs.
class OutputSet {
public:
    void add(std::string path, std::string content) {
        files_.emplace_back(std::move(path), std::move(content));
    }

    void commit() {
        std::vector<std::string> written;
        try {
            for (const auto& [path, content] : files_) {
                std::ofstream out(path, std::ios::binary | std::ios::trunc);
                if (!out) throw io_error("cannot write output file: " + path);
                out << content;
                out.flush();
                if (!out) throw io_error("failed writing output file: " + path);
                written.push_back(path);
            }
        } catch (...) {
            std::error_code ec;
            for (const auto& path : written) std::filesystem::remove(path, ec);
            throw;
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

struct PreprocessedCorpus {
    Corpus corpus;
    std::vector<std::vector<std::string>> tokens;  // one list per document
    textprep::PipelineConfig pipeline;
};

PreprocessedCorpus ingest_and_preprocess(const RunConfig& config, std::ostream& log) {
    PreprocessedCorpus result;
    result.corpus = config.format == InputFormat::csv
                        ? load_csv(config.input_path, config.columns, config.skip_invalid,
                                   config.delimiter)
                        : load_jsonl(config.input_path, config.columns, config.skip_invalid);
    log << "[ingest] " << config.input_path << ": accepted=" << result.corpus.report.accepted
        << " skipped=" << result.corpus.report.skipped << "\n";
    for (const auto& [reason, count] : result.corpus.report.skipped_by_reason) {
        log << "[ingest]   skipped " << count << ": " << reason << "\n";
    }
    if (result.corpus.documents.empty()) {
        throw validation_error("empty corpus: no usable documents in " + config.input_path);
    }

    result.pipeline = make_pipeline_config(config);
    const auto& docs = result.corpus.documents;
    result.tokens.resize(docs.size());
    const std::int64_t count = static_cast<std::int64_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
        result.tokens[static_cast<std::size_t>(i)] =
            textprep::preprocess_document(docs[static_cast<std::size_t>(i)].text,
                                          result.pipeline);
    }
    return result;
}

std::string tokens_dump_jsonl(const PreprocessedCorpus& pre) {
    std::string out;
    for (std::size_t i = 0; i < pre.corpus.documents.size(); ++i) {
        json line = {{"row_id", pre.corpus.documents[i].row_id},
                     {"tokens", pre.tokens[i]}};
        out += line.dump();
        out += "\n";
    }
    return out;
}

std::string itemsets_dump_csv(const FrequentItemsetTable& table, const Vocabulary& vocab) {
    std::string out = "size,items,count,rel_support\n";
    for (const auto& [size, level] : table.by_size) {
        for (const FrequentItemset& fi : level) {
            out += csv::join({std::to_string(size), join_tokens(fi.items, vocab),
                              std::to_string(fi.count), format_fraction(fi.rel_support)});
            out += "\n";
        }
    }
    return out;
}

json stopword_source_json(bool enabled, const std::string& file, std::string_view builtin_text,
                          std::size_t count) {
    json j;
    j["enabled"] = enabled;
    if (!enabled) return j;
    if (file.empty()) {
        j["source"] = "builtin";
        j["hash"] = fnv1a64_hex(builtin_text);
    } else {
        j["source"] = file;
        j["hash"] = fnv1a64_hex(read_file(file));
    }
    j["entries"] = count;
    return j;
}

json config_json(const RunConfig& config, const textprep::PipelineConfig& pipeline) {
    json j;
    j["input"] = {{"path", config.input_path},
                  {"format", config.format == InputFormat::csv ? "csv" : "jsonl"},
                  {"delimiter", std::string(1, config.delimiter)},
                  {"columns",
                   {{"no", config.columns.row_id},
                    {"bab", config.columns.chapter},
                    {"text", config.columns.text},
                    {"len", config.columns.length ? json(*config.columns.length) : json()}}},
                  {"skip_invalid", config.skip_invalid}};
    j["pipeline"] = {
        {"case_fold", pipeline.enable_case_fold},
        {"punct_strip", pipeline.enable_punct_strip},
        {"stopwords", stopword_source_json(config.stopwords_enabled, config.stopwords_file,
                                           textprep::builtin_base_stopwords_text(),
                                           pipeline.base_stopwords.size())},
        {"extra_stopwords",
         stopword_source_json(config.stopwords_enabled, config.extra_stopwords_file,
                              textprep::builtin_extra_stopwords_text(),
                              pipeline.extra_stopwords.size())},
        {"stemmer", config.stemmer == textprep::StemmerKind::none ? "none" : "affix"},
        {"stemmer_rules",
         config.stemmer == textprep::StemmerKind::none ? json() : json(pipeline.stem_rules.version)}};
    j["mining"] = {{"min_support", config.mining.min_support},
                   {"max_itemset_size", config.mining.max_itemset_size}};
    j["rules"] = {{"min_confidence", config.filter.min_confidence},
                  {"min_lift", config.filter.min_lift},
                  {"max_antecedent", config.filter.max_antecedent_size},
                  {"max_consequent", config.filter.max_consequent_size},
                  {"top_n", config.filter.top_n ? json(*config.filter.top_n) : json()}};
    j["output"] = {{"path", config.out_path},
                   {"format", config.out_format == OutputFormat::csv    ? "csv"
                              : config.out_format == OutputFormat::json ? "json"
                                                                        : "table"}};
    j["threads"] = config.threads;
    return j;
}

}  // namespace

textprep::PipelineConfig make_pipeline_config(const RunConfig& config) {
    textprep::PipelineConfig pipeline = textprep::PipelineConfig::defaults();
    pipeline.enable_stopwords = config.stopwords_enabled;
    pipeline.stemmer = config.stemmer;
    pipeline.enable_stemming = config.stemmer != textprep::StemmerKind::none;
    if (!config.stopwords_file.empty()) {
        pipeline.base_stopwords = textprep::load_stopword_file(config.stopwords_file);
    }
    if (!config.extra_stopwords_file.empty()) {
        pipeline.extra_stopwords = textprep::load_stopword_file(config.extra_stopwords_file);
    }
    return pipeline;
}

int cmd_mine(const RunConfig& config, std::ostream& out, std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    apply_threads(config.threads);

    PreprocessedCorpus pre = ingest_and_preprocess(config, log);
    Vocabulary vocab = Vocabulary::build(pre.tokens);
    TransactionSet tset = TransactionSet::encode(pre.tokens, vocab);
    const std::size_t n = tset.transaction_count();
    const std::size_t v = tset.vocab_size();
    log << "[encode] n=" << n << " v=" << v << "\n";
    if (v == 0) {
        throw validation_error("empty vocabulary: every document preprocessed to nothing");
    }

    FrequentItemsetTable table = mine_frequent_itemsets(tset, config.mining);
    for (const LevelStats& level : table.levels) {
        log << "[mine] level " << level.size << ": candidates=" << level.candidates
            << " frequent=" << level.frequent << " (n=" << n << ", v=" << v
            << ", threshold=" << table.threshold << ")\n";
    }

    std::vector<AssociationRule> rules = generate_rules(table, config.filter);
    log << "[rules] generated=" << rules.size() << " (n=" << n << ", v=" << v << ")\n";

    std::ostringstream rules_text;
    switch (config.out_format) {
        case OutputFormat::csv: write_rules_csv(rules_text, rules, vocab); break;
        case OutputFormat::json: write_rules_json(rules_text, rules, vocab); break;
        case OutputFormat::table: write_rules_table(rules_text, rules, vocab); break;
    }

    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    json manifest = config_json(config, pre.pipeline);
    manifest["corpus"] = {{"n", n},
                          {"v", v},
                          {"accepted", pre.corpus.report.accepted},
                          {"skipped", pre.corpus.report.skipped}};
    json levels = json::array();
    for (const LevelStats& level : table.levels) {
        levels.push_back({{"size", level.size},
                          {"candidates", level.candidates},
                          {"frequent", level.frequent}});
    }
    manifest["mining"]["threshold_count"] = table.threshold;
    manifest["mining"]["levels"] = levels;
    manifest["mining"]["frequent_itemsets"] = table.total_itemsets();
    manifest["rules"]["generated"] = rules.size();
    manifest["wall_ms"] = wall_ms;

    OutputSet outputs;
    if (!config.dump_tokens_path.empty()) {
        outputs.add(config.dump_tokens_path, tokens_dump_jsonl(pre));
    }
    if (!config.dump_itemsets_path.empty()) {
        outputs.add(config.dump_itemsets_path, itemsets_dump_csv(table, vocab));
    }
    if (config.out_path.empty()) {
        outputs.commit();
        out << rules_text.str();
        log << "[manifest] " << manifest.dump() << "\n";
    } else {
        outputs.add(config.out_path, rules_text.str());
        outputs.add(config.out_path + ".manifest.json", manifest.dump(2) + "\n");
        outputs.commit();
        log << "[out] wrote " << config.out_path << " and " << config.out_path
            << ".manifest.json\n";
    }
    return 0;
}

int cmd_preprocess(const RunConfig& config, std::ostream& out, std::ostream& log) {
    apply_threads(config.threads);
    PreprocessedCorpus pre = ingest_and_preprocess(config, log);
    std::string dump = tokens_dump_jsonl(pre);
    if (config.out_path.empty()) {
        out << dump;
    } else {
        OutputSet outputs;
        outputs.add(config.out_path, std::move(dump));
        outputs.commit();
        log << "[out] wrote " << config.out_path << "\n";
    }
    return 0;
}

int cmd_validate_table(const std::string& fixture_path, double rel_tolerance,
                       std::ostream& out, std::ostream& log) {
    RuleFixture fixture = load_rule_fixture(fixture_path);
    ValidationReport report = validate_rule_table(fixture.rows, rel_tolerance);

    std::set<std::pair<int, std::string>> flagged;
    for (const CellFlag& flag : report.flags) {
        flagged.emplace(flag.row_no, flag.field);
    }

    out << "rule table: " << fixture_path << "\n";
    out << "rows checked: " << report.rows << " (tolerance " << rel_tolerance << ")\n";
    for (const ReportedRule& row : fixture.rows) {
        bool clean = true;
        for (const CellFlag& flag : report.flags) {
            if (flag.row_no != row.no) continue;
            clean = false;
            const bool expected = fixture.expected_flags.count({flag.row_no, flag.field}) > 0;
            char buf[256];
            std::snprintf(buf, sizeof(buf),
                          "row %d: FLAG %s reported=%.6f implied=%.6f rel_err=%.2e%s",
                          flag.row_no, flag.field.c_str(), flag.reported, flag.implied,
                          flag.rel_error, expected ? " [expected]" : "");
            out << buf << "\n";
            out << "         " << flag.note << "\n";
        }
        if (clean) out << "row " << row.no << ": consistent\n";
    }
    out << "symmetry: " << report.symmetric_pairs << " swapped pair(s) consistent\n";

    std::size_t unexpected = 0;
    for (const auto& flag : flagged) {
        if (!fixture.expected_flags.count(flag)) ++unexpected;
    }
    for (const auto& expected : fixture.expected_flags) {
        if (!flagged.count(expected)) {
            log << "[validate] declared-expected flag did not occur: row " << expected.first
                << " field " << expected.second << "\n";
        }
    }
    out << (unexpected == 0 ? "PASS" : "FAIL") << ": " << report.flags.size()
        << " flag(s), " << unexpected << " outside the expected list\n";
    return unexpected == 0 ? 0 : 1;
}

}  // namespace rulemine
