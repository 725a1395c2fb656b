#include "rulemine/utf8.hpp"

namespace rulemine::utf8 {

namespace {

// Decodes one codepoint; returns kInvalid on malformed input. `i` always
// advances (by the sequence length on success, by one byte on failure) so
// scanning loops terminate.
char32_t decode_one(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }

    auto cont = [&](std::size_t k) {
        return i + k < s.size() &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    auto bits = [&](std::size_t k) {
        return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
    };

    if ((b0 & 0xE0) == 0xC0) {
        if (!cont(1)) { ++i; return kInvalid; }
        char32_t cp = (static_cast<char32_t>(b0 & 0x1F) << 6) | bits(1);
        i += 2;
        return cp < 0x80 ? kInvalid : cp;  // overlong
    }
    if ((b0 & 0xF0) == 0xE0) {
        if (!cont(1) || !cont(2)) { ++i; return kInvalid; }
        char32_t cp = (static_cast<char32_t>(b0 & 0x0F) << 12) | (bits(1) << 6) | bits(2);
        i += 3;
        if (cp < 0x800) return kInvalid;                   // overlong
        if (cp >= 0xD800 && cp <= 0xDFFF) return kInvalid;  // surrogate
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0) {
        if (!cont(1) || !cont(2) || !cont(3)) { ++i; return kInvalid; }
        char32_t cp = (static_cast<char32_t>(b0 & 0x07) << 18) | (bits(1) << 12) |
                      (bits(2) << 6) | bits(3);
        i += 4;
        if (cp < 0x10000 || cp > 0x10FFFF) return kInvalid;
        return cp;
    }
    ++i;
    return kInvalid;
}

}  // namespace

bool validate(std::string_view s, std::size_t* bad_offset) {
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t at = i;
        if (decode_one(s, i) == kInvalid) {
            if (bad_offset) *bad_offset = at;
            return false;
        }
    }
    return true;
}

char32_t decode(std::string_view s, std::size_t& i) {
    return decode_one(s, i);
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::size_t length(std::string_view s) {
    std::size_t i = 0, count = 0;
    while (i < s.size()) {
        decode_one(s, i);
        ++count;
    }
    return count;
}

char32_t simple_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    // Latin-1 supplement (multiplication sign excluded)
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    // Latin Extended-A: regular upper/lower pairs
    if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177)) {
        return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
        return (cp % 2 == 1) ? cp + 1 : cp;
    }
    if (cp == 0x178) return 0xFF;  // Y with diaeresis
    // Latin Extended Additional: regular pairs
    if ((cp >= 0x1E00 && cp <= 0x1E95) || (cp >= 0x1EA0 && cp <= 0x1EFF)) {
        return (cp % 2 == 0) ? cp + 1 : cp;
    }
    return cp;
}

bool is_letter(char32_t cp) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
    if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;  // Latin-1
    if (cp >= 0x100 && cp <= 0x24F) return true;    // Latin Extended-A/B
    if (cp >= 0x1E00 && cp <= 0x1EFF) return true;  // Latin Extended Additional
    return false;
}

bool is_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

}  // namespace rulemine::utf8
