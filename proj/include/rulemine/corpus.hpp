#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Corpus ingestion: loads the tabular document export (CSV/TSV or JSONL)
// into an immutable in-memory document list. Single-threaded; the resulting
// Corpus is read-only and safe to share across workers.
namespace rulemine {

struct DocumentRecord {
    std::uint64_t row_id = 0;          // dataset "No"; unique, positive
    std::uint64_t chapter_id = 0;      // dataset "BAB"
    std::string text;                  // dataset "Hadist"; non-empty
    std::uint64_t declared_length = 0; // dataset "Len"; advisory, never trusted
};

struct IngestReport {
    std::size_t accepted = 0;
    std::size_t skipped = 0;
    std::map<std::string, std::size_t> skipped_by_reason;

    std::size_t total() const { return accepted + skipped; }
};

struct Corpus {
    std::vector<DocumentRecord> documents;  // file order
    std::string source_path;
    IngestReport report;
};

/// Maps the four dataset roles onto column/field names. `length` may be
/// empty; when the named length column is absent, declared_length falls back
/// to the text's character count.
struct ColumnMap {
    std::string row_id = "No";
    std::string chapter = "BAB";
    std::string text = "Hadist";
    std::optional<std::string> length = "Len";
};

/// Loads an RFC-4180 CSV export (header row required, UTF-8 only). Invalid
/// rows (empty text, duplicate or unparsable ids, missing cells) abort with
/// a validation error naming the line, or are counted and skipped when
/// skip_invalid is set.
Corpus load_csv(const std::string& path, const ColumnMap& columns, bool skip_invalid,
                char delimiter = ',');

/// Same contract over newline-delimited JSON objects; numeric fields accept
/// JSON numbers or numeric strings.
Corpus load_jsonl(const std::string& path, const ColumnMap& fields, bool skip_invalid);

}  // namespace rulemine
