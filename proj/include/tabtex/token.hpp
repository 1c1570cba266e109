#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tabtex {

// Word-boundary delimiter used in content streams (U+00A6 BROKEN BAR).
inline constexpr const char* kDelimiterText = "\xC2\xA6";
// Placeholder standing for one cell's textual payload in structure streams.
inline constexpr const char* kCellText = "CELL";
// Replacement for backslash tokens below the corpus-frequency threshold.
inline constexpr const char* kMaskText = "\\LATEX_TOKEN";

enum class TokenCategory {
    AlphaNumeric,   // single ASCII letter or digit
    LatexToken,     // backslash followed by at least one letter
    LatexSymbol,    // backslash followed by exactly one non-letter character
    NonLatexSymbol, // everything else
    Delimiter,      // the broken-bar word separator
    Placeholder,    // CELL
};

const char* category_name(TokenCategory category);

// Assigns exactly one category to any non-empty token text. Text is read as
// a sequence of Unicode scalar values; only ASCII counts as alphanumeric.
TokenCategory classify(std::string_view token_text);

struct Token {
    std::string text;
    TokenCategory category;

    explicit Token(std::string t) : text(std::move(t)), category(classify(text)) {}
    Token(std::string t, TokenCategory c) : text(std::move(t)), category(c) {}

    bool operator==(const Token& other) const { return text == other.text; }
};

struct TokenStream {
    std::string sample_id;
    std::vector<Token> tokens;

    size_t size() const { return tokens.size(); }
    bool empty() const { return tokens.empty(); }

    std::vector<std::string> texts() const;
};

// Token texts joined by single ASCII spaces. Tokens never contain spaces,
// so parse_stream(serialize_stream(s)) reproduces s exactly.
std::string serialize_stream(const TokenStream& stream);
TokenStream parse_stream(std::string_view line, std::string sample_id = {});

} // namespace tabtex
