#include "memetrack/tokenize.hpp"

#include <cstdint>

namespace memetrack {
namespace {

bool is_unicode_space(std::uint32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680:
        case 0x2000: case 0x2001: case 0x2002: case 0x2003: case 0x2004:
        case 0x2005: case 0x2006: case 0x2007: case 0x2008: case 0x2009:
        case 0x200A: case 0x2028: case 0x2029: case 0x202F: case 0x205F:
        case 0x3000:
            return true;
        default:
            return false;
    }
}

bool is_strippable(char c) {
    switch (c) {
        case '.': case ',': case ';': case ':': case '!': case '?':
        case '(': case ')': case '[': case ']': case '{': case '}':
        case '"': case '\'':
            return true;
        default:
            return false;
    }
}

// Decodes one UTF-8 code point at `i`; advances `i` past it. Malformed bytes
// are passed through as single non-space characters.
std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len = 1;
    std::uint32_t cp = b0;
    if (b0 >= 0xF0) {
        len = 4;
        cp = b0 & 0x07u;
    } else if (b0 >= 0xE0) {
        len = 3;
        cp = b0 & 0x0Fu;
    } else if (b0 >= 0xC0) {
        len = 2;
        cp = b0 & 0x1Fu;
    }
    if (len == 1 || i + len > s.size()) {
        ++i;
        return b0 < 0x80 ? cp : 0xFFFD;
    }
    for (std::size_t k = 1; k < len; ++k) {
        const auto bk = static_cast<unsigned char>(s[i + k]);
        if ((bk & 0xC0u) != 0x80u) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (bk & 0x3Fu);
    }
    i += len;
    return cp;
}

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

TokenSeq tokenize(std::string_view text, const TokenizeConfig& config) {
    TokenSeq out;
    std::size_t i = 0;
    while (i < text.size()) {
        // skip whitespace
        std::size_t start = i;
        std::size_t peek = i;
        std::uint32_t cp = decode_utf8(text, peek);
        if (is_unicode_space(cp)) {
            i = peek;
            continue;
        }
        // scan to next whitespace
        while (peek <= text.size()) {
            i = peek;
            if (peek == text.size()) break;
            std::size_t next = peek;
            cp = decode_utf8(text, next);
            if (is_unicode_space(cp)) break;
            peek = next;
        }
        std::string_view raw = text.substr(start, i - start);
        std::size_t lo = 0;
        std::size_t hi = raw.size();
        while (lo < hi && is_strippable(raw[lo])) ++lo;
        while (hi > lo && is_strippable(raw[hi - 1])) --hi;
        if (lo == hi) continue;
        std::string surface(raw.substr(lo, hi - lo));
        std::string token = surface;
        if (config.fold_case) {
            for (auto& c : token) c = ascii_lower(c);
        }
        out.tokens.push_back(std::move(token));
        out.surface.push_back(std::move(surface));
    }
    return out;
}

std::string join_tokens(const std::vector<std::string>& tokens, std::size_t begin, std::size_t count) {
    std::string key;
    for (std::size_t k = 0; k < count; ++k) {
        if (k > 0) key += ' ';
        key += tokens[begin + k];
    }
    return key;
}

std::vector<std::string> split_key(std::string_view key) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        std::size_t sp = key.find(' ', pos);
        if (sp == std::string_view::npos) {
            out.emplace_back(key.substr(pos));
            break;
        }
        out.emplace_back(key.substr(pos, sp - pos));
        pos = sp + 1;
    }
    return out;
}

}  // namespace memetrack
