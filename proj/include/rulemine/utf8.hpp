#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 handling for the preprocessing pipeline. The corpus is
// Indonesian Latin script, so letter classification and lowercasing cover
// ASCII plus the Latin supplement/extension blocks; anything outside those
// ranges is treated as a non-letter and stripped by the pipeline.
namespace rulemine::utf8 {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

/// True iff the whole string is well-formed UTF-8 (rejects overlong forms,
/// surrogates, and codepoints beyond U+10FFFF). On failure *bad_offset, if
/// given, receives the byte offset of the offending sequence.
bool validate(std::string_view s, std::size_t* bad_offset = nullptr);

/// Decodes the codepoint starting at byte offset i and advances i past it.
/// Malformed input yields kInvalid and advances one byte.
char32_t decode(std::string_view s, std::size_t& i);

/// Appends cp to out as UTF-8.
void append(std::string& out, char32_t cp);

/// Number of codepoints in a valid UTF-8 string.
std::size_t length(std::string_view s);

/// Unicode simple lowercase mapping over the supported Latin ranges;
/// identity elsewhere.
char32_t simple_lower(char32_t cp);

/// Letters of the supported Latin ranges (ASCII, Latin-1 supplement,
/// Latin Extended-A/B, Latin Extended Additional).
bool is_letter(char32_t cp);

/// Unicode whitespace (ASCII space/tab/newlines plus the common
/// non-ASCII space codepoints).
bool is_space(char32_t cp);

}  // namespace rulemine::utf8
