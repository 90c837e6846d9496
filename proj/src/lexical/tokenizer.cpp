#include "lexical/tokenizer.hpp"

#include "common/error.hpp"

#include <cctype>
#include <cstdint>

namespace dca::lexical {

namespace {

struct CodePoint {
    char32_t value = 0;
    std::size_t length = 1; // bytes consumed
};

// Permissive UTF-8 decoding; invalid bytes are treated as one-byte points so
// tokenization stays total on arbitrary input.
CodePoint decode_utf8(const std::string& text, std::size_t pos) {
    const auto byte = static_cast<unsigned char>(text[pos]);
    if (byte < 0x80) return {byte, 1};
    std::size_t length = 0;
    char32_t value = 0;
    if ((byte & 0xE0) == 0xC0) { length = 2; value = byte & 0x1F; }
    else if ((byte & 0xF0) == 0xE0) { length = 3; value = byte & 0x0F; }
    else if ((byte & 0xF8) == 0xF0) { length = 4; value = byte & 0x07; }
    else return {byte, 1};
    if (pos + length > text.size()) return {byte, 1};
    for (std::size_t i = 1; i < length; ++i) {
        const auto cont = static_cast<unsigned char>(text[pos + i]);
        if ((cont & 0xC0) != 0x80) return {byte, 1};
        value = (value << 6) | (cont & 0x3F);
    }
    return {value, length};
}

bool is_space_cp(char32_t cp) {
    switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
        return true;
    default:
        return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_unicode_punct_cp(char32_t cp) {
    // General punctuation block (dashes, curly quotes, ellipsis, bullets).
    return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E) ||
           cp == 0x00AB || cp == 0x00BB || cp == 0x00A1 || cp == 0x00BF;
}

bool is_word_cp(char32_t cp) {
    if (cp < 0x80) {
        return std::isalnum(static_cast<int>(cp)) != 0;
    }
    return !is_space_cp(cp) && !is_unicode_punct_cp(cp);
}

bool is_sentence_end_cp(char32_t cp) {
    return cp == U'.' || cp == U'!' || cp == U'?';
}

void append_lowered(std::string& token, const std::string& text, std::size_t pos,
                    std::size_t length) {
    for (std::size_t i = 0; i < length; ++i) {
        char c = text[pos + i];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        token += c;
    }
}

} // namespace

TokenizedUtterance tokenize(const std::string& text) {
    if (text.empty()) {
        throw ValidationError("cannot tokenize empty text");
    }
    TokenizedUtterance result;
    result.raw = text;

    std::string current;
    std::size_t sentence_begin = 0;

    auto flush_token = [&] {
        if (!current.empty()) {
            result.tokens.push_back(current);
            current.clear();
        }
    };
    auto close_sentence = [&] {
        if (result.tokens.size() > sentence_begin) {
            result.sentences.emplace_back(sentence_begin, result.tokens.size());
            sentence_begin = result.tokens.size();
        }
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        const CodePoint cp = decode_utf8(text, pos);
        if (is_word_cp(cp.value)) {
            append_lowered(current, text, pos, cp.length);
        } else {
            flush_token();
            if (is_sentence_end_cp(cp.value)) {
                const std::size_t next = pos + cp.length;
                bool boundary = next >= text.size();
                if (!boundary) {
                    const CodePoint lookahead = decode_utf8(text, next);
                    boundary = is_space_cp(lookahead.value);
                }
                if (boundary) close_sentence();
            }
        }
        pos += cp.length;
    }
    flush_token();
    close_sentence();
    return result;
}

bool is_alphabetic_token(const std::string& token) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    while (pos < token.size()) {
        const CodePoint cp = decode_utf8(token, pos);
        if (cp.value < 0x80 && std::isalpha(static_cast<int>(cp.value)) == 0) {
            return false;
        }
        pos += cp.length;
    }
    return true;
}

} // namespace dca::lexical
