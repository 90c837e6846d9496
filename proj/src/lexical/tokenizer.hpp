#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dca::lexical {

struct TokenizedUtterance {
    std::vector<std::string> tokens;                      // lowercased word tokens
    std::vector<std::pair<std::size_t, std::size_t>> sentences; // [begin, end) token spans
    std::string raw;
};

// Deterministic tokenizer: tokens are maximal runs of word characters
// (letters, digits, non-ASCII code points) between whitespace/punctuation;
// ASCII letters are lowercased. A sentence boundary is a '.', '!' or '?'
// followed by whitespace or end of text.
TokenizedUtterance tokenize(const std::string& text);

// True when every code point of the token is a letter (ASCII or non-ASCII).
bool is_alphabetic_token(const std::string& token);

} // namespace dca::lexical
