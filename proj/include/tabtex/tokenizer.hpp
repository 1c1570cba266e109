#pragma once

#include <string>
#include <string_view>

#include "tabtex/token.hpp"

namespace tabtex {

enum class TokenizeMode { Structure, Content };

// Lexes LaTeX tabular body text into a token stream.
//
// Content mode emits backslash commands as single tokens, every other
// character as its own token, and a broken-bar delimiter wherever
// whitespace separated two words neither of which is a control word
// (backslash + letters). Whitespace itself never becomes a token and
// delimiters are never leading or trailing.
//
// Structure mode produces the structure ground-truth tokenization; the
// source must begin with the column-specification group.
//
// Throws Error(EmptyInput) when no tokens result and
// Error(UnbalancedBraces) when bare-brace depth goes negative or ends
// nonzero.
TokenStream tokenize(std::string_view source, TokenizeMode mode,
                     std::string sample_id = {});

// Inverse of Content-mode tokenization up to whitespace normalization:
// delimiters become single spaces, other tokens concatenate, and a space
// is re-inserted after a control word when the next token starts with a
// letter so the command name cannot absorb it.
std::string detokenize(const TokenStream& stream);

} // namespace tabtex
