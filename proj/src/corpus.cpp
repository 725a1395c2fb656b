#include "rulemine/corpus.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "rulemine/csv.hpp"
#include "rulemine/error.hpp"
#include "rulemine/utf8.hpp"

namespace rulemine {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void require_utf8(const std::string& data, const std::string& path) {
    std::size_t bad = 0;
    if (!utf8::validate(data, &bad)) {
        throw validation_error(path + ": not valid UTF-8 (first bad byte at offset " +
                               std::to_string(bad) + "); re-export the corpus as UTF-8");
    }
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
    // tolerate surrounding spaces and a spreadsheet-style trailing ".0"
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (s.size() >= 2 && s.ends_with(".0")) s.remove_suffix(2);
    if (s.empty()) return std::nullopt;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

bool text_is_blank(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = utf8::decode(text, i);
        if (cp != utf8::kInvalid && !utf8::is_space(cp)) return false;
    }
    return true;
}

// Shared row assembly: validates fields, resolves duplicates/empties, and
// either accepts the record or records the skip reason.
class RowSink {
public:
    RowSink(Corpus& corpus, bool skip_invalid) : corpus_(corpus), skip_invalid_(skip_invalid) {}

    void invalid(const std::string& reason, std::size_t line) {
        if (!skip_invalid_) {
            throw validation_error("line " + std::to_string(line) + ": " + reason);
        }
        corpus_.report.skipped += 1;
        corpus_.report.skipped_by_reason[reason] += 1;
    }

    void row(std::optional<std::uint64_t> row_id, std::optional<std::uint64_t> chapter,
             std::string text, std::optional<std::uint64_t> declared_length,
             std::size_t line) {
        if (!row_id || *row_id == 0) return invalid("row id is not a positive integer", line);
        if (!chapter) return invalid("chapter id is not a non-negative integer", line);
        if (text_is_blank(text)) return invalid("empty text", line);
        if (!seen_ids_.insert(*row_id).second) {
            return invalid("duplicate row id " + std::to_string(*row_id), line);
        }
        DocumentRecord rec;
        rec.row_id = *row_id;
        rec.chapter_id = *chapter;
        rec.declared_length = declared_length ? *declared_length : utf8::length(text);
        rec.text = std::move(text);
        corpus_.documents.push_back(std::move(rec));
        corpus_.report.accepted += 1;
    }

private:
    Corpus& corpus_;
    bool skip_invalid_;
    std::unordered_set<std::uint64_t> seen_ids_;
};

}  // namespace

Corpus load_csv(const std::string& path, const ColumnMap& columns, bool skip_invalid,
                char delimiter) {
    std::string data = read_file(path);
    require_utf8(data, path);

    csv::ParseOptions opts;
    opts.delimiter = delimiter;
    auto records = csv::parse(data, opts);
    if (records.empty()) {
        throw validation_error(path + ": no header row");
    }

    const auto& header = records[0].fields;
    auto column_index = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        return std::nullopt;
    };
    auto require_column = [&](const std::string& name, const char* role) {
        auto idx = column_index(name);
        if (!idx) {
            throw validation_error(path + ": missing mapped column '" + name + "' (role: " +
                                   role + ")");
        }
        return *idx;
    };

    std::size_t idx_no = require_column(columns.row_id, "row id");
    std::size_t idx_bab = require_column(columns.chapter, "chapter");
    std::size_t idx_text = require_column(columns.text, "text");
    // The length column is advisory; a mapped-but-absent column falls back
    // to recomputed character counts instead of erroring.
    std::optional<std::size_t> idx_len;
    if (columns.length) idx_len = column_index(*columns.length);

    Corpus corpus;
    corpus.source_path = path;
    RowSink sink(corpus, skip_invalid);

    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        std::size_t needed = std::max({idx_no, idx_bab, idx_text});
        if (rec.fields.size() <= needed) {
            sink.invalid("row has fewer cells than the mapped columns", rec.line);
            continue;
        }
        std::optional<std::uint64_t> declared;
        if (idx_len && *idx_len < rec.fields.size()) {
            declared = parse_uint(rec.fields[*idx_len]);
        }
        sink.row(parse_uint(rec.fields[idx_no]), parse_uint(rec.fields[idx_bab]),
                 rec.fields[idx_text], declared, rec.line);
    }
    return corpus;
}

Corpus load_jsonl(const std::string& path, const ColumnMap& fields, bool skip_invalid) {
    std::string data = read_file(path);
    require_utf8(data, path);

    Corpus corpus;
    corpus.source_path = path;
    RowSink sink(corpus, skip_invalid);

    std::size_t pos = 0, line_no = 0;
    while (pos < data.size()) {
        std::size_t nl = data.find('\n', pos);
        std::string_view line(data.data() + pos,
                              (nl == std::string::npos ? data.size() : nl) - pos);
        pos = (nl == std::string::npos) ? data.size() : nl + 1;
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty()) continue;

        nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            sink.invalid("line is not a JSON object", line_no);
            continue;
        }

        auto uint_field = [&](const std::string& name) -> std::optional<std::uint64_t> {
            if (!obj.contains(name)) return std::nullopt;
            const auto& v = obj[name];
            if (v.is_number_unsigned()) return v.get<std::uint64_t>();
            if (v.is_number_integer()) {
                auto i = v.get<std::int64_t>();
                if (i < 0) return std::nullopt;
                return static_cast<std::uint64_t>(i);
            }
            if (v.is_string()) return parse_uint(v.get<std::string>());
            return std::nullopt;
        };

        if (!obj.contains(fields.row_id) || !obj.contains(fields.chapter) ||
            !obj.contains(fields.text)) {
            const std::string missing = !obj.contains(fields.row_id)   ? fields.row_id
                                        : !obj.contains(fields.chapter) ? fields.chapter
                                                                        : fields.text;
            if (!skip_invalid) {
                throw validation_error(path + " line " + std::to_string(line_no) +
                                       ": missing field '" + missing + "'");
            }
            sink.invalid("missing field '" + missing + "'", line_no);
            continue;
        }
        if (!obj[fields.text].is_string()) {
            sink.invalid("text field is not a string", line_no);
            continue;
        }
        std::optional<std::uint64_t> declared;
        if (fields.length) declared = uint_field(*fields.length);
        sink.row(uint_field(fields.row_id), uint_field(fields.chapter),
                 obj[fields.text].get<std::string>(), declared, line_no);
    }
    return corpus;
}

}  // namespace rulemine
