#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rulemine::csv {

struct Record {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line the record starts on
};

struct ParseOptions {
    char delimiter = ',';
    bool skip_comment_lines = false;  // unquoted lines starting with '#'
};

/// Parses RFC-4180 CSV text: quoted fields may contain delimiters, doubled
/// quotes, and newlines. CRLF and LF both accepted. Wholly empty lines are
/// dropped. Throws rulemine::Error(validation) on quoting errors.
std::vector<Record> parse(std::string_view text, const ParseOptions& opts = {});

/// Quotes a field if it contains the delimiter, a quote, or a newline.
std::string escape(std::string_view field, char delimiter = ',');

/// Joins fields into one CSV line (no trailing newline).
std::string join(const std::vector<std::string>& fields, char delimiter = ',');

}  // namespace rulemine::csv
