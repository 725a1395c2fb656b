#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rulemine/apriori.hpp"
#include "rulemine/corpus.hpp"
#include "rulemine/rules.hpp"
#include "rulemine/textprep.hpp"

// Command layer: wires ingestion -> preprocessing -> encoding -> mining ->
// rules -> reports behind the CLI. Everything is driven by a RunConfig that
// is serialized into the run manifest, so a manifest alone re-describes the
// run completely.
namespace rulemine {

enum class InputFormat { csv, jsonl };
enum class OutputFormat { csv, json, table };

struct RunConfig {
    // input
    std::string input_path;
    InputFormat format = InputFormat::csv;
    char delimiter = ',';
    ColumnMap columns;
    bool skip_invalid = false;

    // preprocessing
    bool stopwords_enabled = true;
    std::string stopwords_file;        // empty = bundled base list
    std::string extra_stopwords_file;  // empty = bundled extra list
    textprep::StemmerKind stemmer = textprep::StemmerKind::affix_strip;

    // mining + rules
    MiningParams mining;
    RuleFilter filter;

    // output
    std::string out_path;  // empty = stdout
    OutputFormat out_format = OutputFormat::table;
    std::string dump_itemsets_path;
    std::string dump_tokens_path;

    int threads = 0;  // 0 = runtime default; never affects results
};

/// Full pipeline. Writes the ranked rule table (plus optional dumps and the
/// run manifest next to --out), logging one line per mining level. Returns 0;
/// failures throw rulemine::Error and leave no partial output files behind.
int cmd_mine(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Ingestion + preprocessing only; emits the per-document JSONL token dump
/// ({"row_id":..,"tokens":[..]}) to --out or stdout.
int cmd_preprocess(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Checks a published rule table for metric self-consistency. Exit 0 iff
/// every flagged cell was declared expected in the fixture itself.
int cmd_validate_table(const std::string& fixture_path, double rel_tolerance,
                       std::ostream& out, std::ostream& log);

/// Resolved preprocessing configuration for a RunConfig (loads list files).
textprep::PipelineConfig make_pipeline_config(const RunConfig& config);

}  // namespace rulemine
