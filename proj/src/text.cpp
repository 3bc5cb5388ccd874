#include "textlift/text.hpp"

#include "textlift/errors.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

namespace textlift::text {

namespace {

// Returns the decoded codepoint and byte length, or -1 length on error.
int decode_one(std::string_view s, size_t i, char32_t& out) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        out = b0;
        return 1;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return -1;
    }
    if (i + len > s.size())
        return -1;
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80)
            return -1;
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings, surrogates, and out-of-range values.
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
        return -1;
    out = cp;
    return len;
}

} // namespace

bool is_valid_utf8(std::string_view s) {
    size_t i = 0;
    char32_t cp;
    while (i < s.size()) {
        const int len = decode_one(s, i, cp);
        if (len < 0)
            return false;
        i += static_cast<size_t>(len);
    }
    return true;
}

std::vector<Codepoint> decode_utf8(std::string_view s) {
    std::vector<Codepoint> out;
    out.reserve(s.size());
    size_t i = 0;
    char32_t cp;
    while (i < s.size()) {
        const int len = decode_one(s, i, cp);
        if (len < 0)
            throw data_error("InvalidUtf8",
                             "malformed UTF-8 at byte offset " + std::to_string(i));
        out.push_back({cp, static_cast<uint32_t>(i), static_cast<uint8_t>(len)});
        i += static_cast<size_t>(len);
    }
    return out;
}

std::string nfc(std::string_view s) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status))
        throw internal_error("IcuInit", u_errorName(status));
    icu::UnicodeString in = icu::UnicodeString::fromUTF8(
        icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
    icu::UnicodeString out = norm->normalize(in, status);
    if (U_FAILURE(status))
        throw data_error("NormalizationFailed", u_errorName(status));
    std::string utf8;
    out.toUTF8String(utf8);
    return utf8;
}

bool is_cjk(char32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF)      // CJK Unified Ideographs
        || (cp >= 0x3400 && cp <= 0x4DBF)      // Extension A
        || (cp >= 0xF900 && cp <= 0xFAFF)      // Compatibility Ideographs
        || (cp >= 0x20000 && cp <= 0x2EBEF)    // Extensions B-F
        || (cp >= 0x30000 && cp <= 0x3134F)    // Extension G
        || (cp >= 0x3040 && cp <= 0x30FF)      // Hiragana, Katakana
        || (cp >= 0x31F0 && cp <= 0x31FF)      // Katakana Phonetic Ext
        || (cp >= 0xAC00 && cp <= 0xD7AF)      // Hangul Syllables
        || (cp >= 0x1100 && cp <= 0x11FF)      // Hangul Jamo
        || (cp >= 0x3130 && cp <= 0x318F)      // Hangul Compatibility Jamo
        || (cp >= 0x3100 && cp <= 0x312F)      // Bopomofo
        || (cp >= 0x31A0 && cp <= 0x31BF);     // Bopomofo Extended
}

bool is_word_char(char32_t cp) {
    if (is_cjk(cp))
        return false;
    return u_isalnum(static_cast<UChar32>(cp)) != 0;
}

bool is_space(char32_t cp) {
    return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

std::string fold_case(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const auto& c : decode_utf8(s)) {
        const UChar32 low = u_tolower(static_cast<UChar32>(c.cp));
        char buf[U8_MAX_LENGTH];
        int32_t n = 0;
        UBool err = false;
        U8_APPEND(reinterpret_cast<uint8_t*>(buf), n, U8_MAX_LENGTH, low, err);
        if (err)
            throw internal_error("CaseFold", "cannot encode lowered codepoint");
        out.append(buf, static_cast<size_t>(n));
    }
    return out;
}

std::string normalize_trailing(std::string_view s) {
    size_t end = s.size();
    while (end > 0) {
        const char c = s[end - 1];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v')
            --end;
        else
            break;
    }
    std::string out(s.substr(0, end));
    out.push_back('\n');
    return out;
}

std::string trim(std::string_view s) {
    size_t b = 0;
    while (b < s.size() && static_cast<unsigned char>(s[b]) <= ' ')
        ++b;
    size_t e = s.size();
    while (e > b && static_cast<unsigned char>(s[e - 1]) <= ' ')
        --e;
    return std::string(s.substr(b, e - b));
}

} // namespace textlift::text
