#include "rulemine/csv.hpp"

#include "rulemine/error.hpp"

namespace rulemine::csv {

std::vector<Record> parse(std::string_view text, const ParseOptions& opts) {
    std::vector<Record> records;
    Record current;
    std::string field;
    bool in_quotes = false;
    bool record_has_data = false;  // any field char, quote, or delimiter seen
    std::size_t line = 1;
    std::size_t record_line = 1;

    auto begin_data = [&] {
        if (!record_has_data) {
            record_has_data = true;
            record_line = line;
        }
    };
    auto end_record = [&] {
        if (record_has_data) {
            current.fields.push_back(std::move(field));
            current.line = record_line;
            records.push_back(std::move(current));
            current = Record{};
        }
        field.clear();
        record_has_data = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (!in_quotes && !record_has_data && c == '#' && opts.skip_comment_lines) {
            // comment lines are consumed verbatim, never CSV-parsed
            while (i < text.size() && text[i] != '\n') ++i;
            ++line;
            continue;
        }
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
        } else if (c == '"') {
            if (!field.empty()) {
                throw validation_error("csv: stray quote inside unquoted field at line " +
                                       std::to_string(line));
            }
            begin_data();
            in_quotes = true;
        } else if (c == opts.delimiter) {
            begin_data();
            current.fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') continue;
            end_record();
            ++line;
        } else {
            begin_data();
            field.push_back(c);
        }
    }
    if (in_quotes) {
        throw validation_error("csv: unterminated quoted field (record starting at line " +
                               std::to_string(record_line) + ")");
    }
    end_record();
    return records;
}

std::string escape(std::string_view field, char delimiter) {
    bool needs_quotes = false;
    for (char c : field) {
        if (c == delimiter || c == '"' || c == '\n' || c == '\r') {
            needs_quotes = true;
            break;
        }
    }
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join(const std::vector<std::string>& fields, char delimiter) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(delimiter);
        out += escape(fields[i], delimiter);
    }
    return out;
}

}  // namespace rulemine::csv
