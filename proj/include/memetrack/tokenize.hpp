#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace memetrack {

struct TokenizeConfig {
    // Fold tokens to lowercase so sentence-initial capitals do not split a
    // phrase into two keys. The pre-fold spelling is kept per token for
    // display output.
    bool fold_case = true;
};

struct TokenSeq {
    std::vector<std::string> tokens;   // canonical (folded) tokens
    std::vector<std::string> surface;  // original spelling, aligned with tokens
};

// Splits on Unicode whitespace and strips the characters . , ; : ! ? ( ) [ ]
// { } " ' from token edges only; interior punctuation (hyphens, $, _,
// formula markup) is preserved. Empty tokens are dropped. Case folding is
// ASCII-only; non-ASCII bytes pass through untouched.
TokenSeq tokenize(std::string_view text, const TokenizeConfig& config = {});

// Canonical n-gram key: tokens joined with a single space.
std::string join_tokens(const std::vector<std::string>& tokens, std::size_t begin, std::size_t count);

std::vector<std::string> split_key(std::string_view key);

}  // namespace memetrack
