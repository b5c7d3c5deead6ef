#include "loggen/lexer.hpp"

#include "loggen/error.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace loggen {

namespace {

const std::unordered_set<std::string_view>& keywords() {
    static const std::unordered_set<std::string_view> set = {
        "abstract", "assert",     "boolean",   "break",     "byte",       "case",
        "catch",    "char",       "class",     "const",     "continue",   "default",
        "do",       "double",     "else",      "enum",      "extends",    "final",
        "finally",  "float",      "for",       "goto",      "if",         "implements",
        "import",   "instanceof", "int",       "interface", "long",       "native",
        "new",      "package",    "private",   "protected", "public",     "return",
        "short",    "static",     "strictfp",  "super",     "switch",     "synchronized",
        "this",     "throw",      "throws",    "transient", "try",        "void",
        "volatile", "while",      "true",      "false",     "null",       "var",
        "record",   "yield",      "sealed",    "permits",   "non-sealed",
    };
    return set;
}

// Longest first so that maximal munch picks e.g. ">>>=" over ">>".
constexpr std::string_view kOperators[] = {
    ">>>=", "<<=", ">>=", ">>>", "->", "::", "++", "--", "&&", "||", "==", "!=",
    "<=",   ">=",  "+=",  "-=",  "*=",  "/=", "&=", "|=", "^=", "%=", "<<", ">>", "=",
    ">",    "<",   "!",   "~",   "?",   "+",  "-",  "*",  "/",  "&",  "|",
};

bool is_ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

class Scanner {
  public:
    explicit Scanner(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            if (pos_ >= src_.size())
                break;
            const std::size_t begin = pos_;
            const TokenKind kind = scan_token();
            out.push_back(Token{std::string(src_.substr(begin, pos_ - begin)), out.size(),
                                Span{begin, pos_}, kind});
        }
        return out;
    }

  private:
    char peek(std::size_t k = 0) const {
        return pos_ + k < src_.size() ? src_[pos_ + k] : '\0';
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (is_space(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    ++pos_;
            } else if (c == '/' && peek(1) == '*') {
                const std::size_t open = pos_;
                const std::size_t close = src_.find("*/", pos_ + 2);
                if (close == std::string_view::npos)
                    throw Error(ErrorCode::UnterminatedLiteral, "unterminated block comment",
                                open);
                pos_ = close + 2;
            } else {
                break;
            }
        }
    }

    TokenKind scan_token() {
        const auto c = static_cast<unsigned char>(src_[pos_]);
        if (c == '"')
            return scan_string();
        if (c == '\'')
            return scan_char();
        if (is_digit(c) || (c == '.' && is_digit(static_cast<unsigned char>(peek(1)))))
            return scan_number();
        if (is_ident_start(c)) {
            const std::size_t begin = pos_;
            while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            // `non-sealed` is the only hyphenated keyword.
            if (src_.substr(begin, pos_ - begin) == "non" && src_.substr(pos_, 7) == "-sealed") {
                pos_ += 7;
                return TokenKind::Keyword;
            }
            return keywords().contains(src_.substr(begin, pos_ - begin)) ? TokenKind::Keyword
                                                                          : TokenKind::Identifier;
        }
        if (c == '@') {
            ++pos_;
            return TokenKind::AnnotationMarker;
        }
        switch (c) {
        case '(': case ')': case '{': case '}': case '[': case ']':
        case ';': case ',': case '.':
            ++pos_;
            return TokenKind::Punctuation;
        case ':':
            if (peek(1) == ':') {
                pos_ += 2;
                return TokenKind::Operator;
            }
            ++pos_;
            return TokenKind::Punctuation;
        default:
            break;
        }
        if (src_.substr(pos_, 3) == "...") {
            pos_ += 3;
            return TokenKind::Punctuation;
        }
        for (std::string_view op : kOperators) {
            if (src_.substr(pos_, op.size()) == op) {
                pos_ += op.size();
                return TokenKind::Operator;
            }
        }
        // Stray characters (backslash, '#', '`', ...) become single-char operators.
        ++pos_;
        return TokenKind::Operator;
    }

    TokenKind scan_string() {
        const std::size_t open = pos_;
        if (src_.substr(pos_, 3) == "\"\"\"") {
            pos_ += 3;
            while (pos_ < src_.size()) {
                if (src_[pos_] == '\\') {
                    pos_ += 2;
                } else if (src_.substr(pos_, 3) == "\"\"\"") {
                    pos_ += 3;
                    return TokenKind::StringLiteral;
                } else {
                    ++pos_;
                }
            }
            throw Error(ErrorCode::UnterminatedLiteral, "unterminated text block", open);
        }
        scan_quoted('"', open, "unterminated string literal");
        return TokenKind::StringLiteral;
    }

    TokenKind scan_char() {
        scan_quoted('\'', pos_, "unterminated char literal");
        return TokenKind::CharLiteral;
    }

    void scan_quoted(char quote, std::size_t open, const char* what) {
        ++pos_;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\\') {
                pos_ += 2;
            } else if (c == quote) {
                ++pos_;
                return;
            } else if (c == '\n') {
                break;
            } else {
                ++pos_;
            }
        }
        throw Error(ErrorCode::UnterminatedLiteral, what, open);
    }

    TokenKind scan_number() {
        auto digit_run = [&](auto pred) {
            while (pos_ < src_.size() && (pred(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                ++pos_;
        };
        if (src_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' ||
                                  peek(1) == 'B')) {
            pos_ += 2;
            digit_run([](unsigned char c) { return std::isxdigit(c) != 0; });
        } else {
            digit_run(is_digit);
            if (peek() == '.' && is_digit(static_cast<unsigned char>(peek(1)))) {
                ++pos_;
                digit_run(is_digit);
            } else if (peek() == '.' && !is_ident_start(static_cast<unsigned char>(peek(1))) &&
                       peek(1) != '.') {
                ++pos_; // "1." is a valid double literal
            }
            if (peek() == 'e' || peek() == 'E') {
                const std::size_t save = pos_;
                ++pos_;
                if (peek() == '+' || peek() == '-')
                    ++pos_;
                if (is_digit(static_cast<unsigned char>(peek())))
                    digit_run(is_digit);
                else
                    pos_ = save;
            }
        }
        const char suffix = peek();
        if (suffix == 'l' || suffix == 'L' || suffix == 'f' || suffix == 'F' || suffix == 'd' ||
            suffix == 'D')
            ++pos_;
        return TokenKind::NumberLiteral;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

} // namespace

std::string_view to_string(TokenKind kind) {
    switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::NumberLiteral: return "number-literal";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::CharLiteral: return "char-literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::AnnotationMarker: return "annotation-marker";
    }
    return "unknown";
}

TokenStream::TokenStream(std::string source, std::vector<Token> tokens)
    : source_(std::move(source)), tokens_(std::move(tokens)) {}

std::string_view TokenStream::gap(std::size_t i) const {
    const std::size_t begin = i == 0 ? 0 : tokens_[i - 1].span.end;
    const std::size_t end = i < tokens_.size() ? tokens_[i].span.begin : source_.size();
    return std::string_view(source_).substr(begin, end - begin);
}

std::vector<std::string> TokenStream::texts() const {
    std::vector<std::string> out;
    out.reserve(tokens_.size());
    for (const auto& t : tokens_)
        out.push_back(t.text);
    return out;
}

std::string TokenStream::reconstruct() const {
    std::string out;
    out.reserve(source_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        out += gap(i);
        out += tokens_[i].text;
    }
    out += gap(tokens_.size());
    return out;
}

TokenStream tokenize(std::string source) {
    auto tokens = Scanner(source).run();
    return TokenStream(std::move(source), std::move(tokens));
}

bool is_anchor(std::string_view text) {
    return text == "{" || text == "}" || text == ";" || text == ":";
}

bool is_statement_terminator(std::string_view text) { return text == ";" || text == "}"; }

std::vector<std::size_t> find_anchors(std::span<const std::string> texts) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < texts.size(); ++i)
        if (is_anchor(texts[i]))
            out.push_back(i);
    return out;
}

std::vector<std::size_t> find_anchors(const TokenStream& stream) {
    const auto texts = stream.texts();
    return find_anchors(texts);
}

std::vector<StatementSpan> statement_spans(std::span<const std::string> texts) {
    std::vector<StatementSpan> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (is_statement_terminator(texts[i])) {
            out.push_back({start, i, texts[i], true});
            start = i + 1;
        }
    }
    if (start < texts.size())
        out.push_back({start, texts.size() - 1, "", false});
    return out;
}

std::vector<StatementSpan> statement_spans(const TokenStream& stream) {
    const auto texts = stream.texts();
    return statement_spans(texts);
}

} // namespace loggen
