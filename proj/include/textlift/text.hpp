#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace textlift::text {

struct Codepoint {
    char32_t cp;
    uint32_t byte_offset;
    uint8_t byte_len;
};

bool is_valid_utf8(std::string_view s);

/// Decodes UTF-8 into codepoints with byte spans. Throws a data error
/// ("InvalidUtf8") on malformed input.
std::vector<Codepoint> decode_utf8(std::string_view s);

/// Canonical composition (NFC). Input must be valid UTF-8.
std::string nfc(std::string_view s);

/// Han ideographs plus kana, hangul, and bopomofo: scripts where one
/// codepoint is one retrieval token.
bool is_cjk(char32_t cp);

/// Letters and digits outside the CJK ranges; these form run tokens.
bool is_word_char(char32_t cp);

bool is_space(char32_t cp);

/// Per-codepoint simple lowercasing (no locale tailoring).
std::string fold_case(std::string_view s);

/// Strips trailing whitespace and appends exactly one '\n'.
std::string normalize_trailing(std::string_view s);

std::string trim(std::string_view s);

} // namespace textlift::text
