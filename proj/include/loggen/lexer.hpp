// Round-trip preserving Java lexer.
//
// The token stream produced here is the single index space shared by
// insertion-position scoring, chunking, masking and evaluation. Comments and
// whitespace never become tokens; they live in the gaps between tokens so the
// original bytes can always be rebuilt.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loggen {

enum class TokenKind {
    Identifier,
    Keyword,
    NumberLiteral,
    StringLiteral,
    CharLiteral,
    Operator,
    Punctuation,
    AnnotationMarker,
};

std::string_view to_string(TokenKind kind);

/// Half-open character range [begin, end) into the source.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const Span&) const = default;
};

struct Token {
    std::string text;
    std::size_t index = 0;
    Span span;
    TokenKind kind = TokenKind::Punctuation;
};

class TokenStream {
  public:
    TokenStream() = default;
    TokenStream(std::string source, std::vector<Token> tokens);

    const std::string& source() const { return source_; }
    const std::vector<Token>& tokens() const { return tokens_; }
    const Token& operator[](std::size_t i) const { return tokens_[i]; }
    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }

    /// Whitespace and comments before token `i`; `gap(size())` is the tail.
    std::string_view gap(std::size_t i) const;

    /// Token texts in index order.
    std::vector<std::string> texts() const;

    /// Rebuilds the source from gaps and token texts.
    std::string reconstruct() const;

  private:
    std::string source_;
    std::vector<Token> tokens_;
};

/// A run of tokens ending at a ";" or "}" terminator. `end` is inclusive.
/// The last span of a stream may be incomplete (no terminator).
struct StatementSpan {
    std::size_t start = 0;
    std::size_t end = 0;
    std::string terminator;
    bool complete = true;

    std::size_t size() const { return end - start + 1; }
    bool operator==(const StatementSpan&) const = default;
};

/// Lexes a Java method (or any Java fragment). Throws Error with
/// ErrorCode::UnterminatedLiteral, located at the opening quote or comment.
TokenStream tokenize(std::string source);

bool is_anchor(std::string_view text);
bool is_statement_terminator(std::string_view text);

std::vector<std::size_t> find_anchors(std::span<const std::string> texts);
std::vector<std::size_t> find_anchors(const TokenStream& stream);

std::vector<StatementSpan> statement_spans(std::span<const std::string> texts);
std::vector<StatementSpan> statement_spans(const TokenStream& stream);

} // namespace loggen
