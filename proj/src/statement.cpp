#include "loggen/statement.hpp"

#include "loggen/error.hpp"
#include "loggen/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace loggen {

namespace {

constexpr std::array<std::pair<std::string_view, Level>, 6> kLevelNames = {{
    {"trace", Level::Trace},
    {"debug", Level::Debug},
    {"info", Level::Info},
    {"warn", Level::Warn},
    {"error", Level::Error},
    {"fatal", Level::Fatal},
}};

bool is_identifier(std::string_view s) {
    if (s.empty())
        return false;
    const auto c = static_cast<unsigned char>(s.front());
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

// Index of the level-naming call identifier, if any.
std::optional<std::size_t> level_call_index(std::span<const std::string> tokens) {
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i)
        if (tokens[i + 1] == "(" && is_identifier(tokens[i]) && level_from_name(tokens[i]))
            return i;
    return std::nullopt;
}

} // namespace

std::string_view to_string(Level level) {
    switch (level) {
    case Level::Trace: return "trace";
    case Level::Debug: return "debug";
    case Level::Info: return "info";
    case Level::Warn: return "warn";
    case Level::Error: return "error";
    case Level::Fatal: return "fatal";
    }
    return "unknown";
}

std::string to_string(std::optional<Level> level) {
    return level ? std::string(to_string(*level)) : std::string("unknown");
}

std::optional<Level> level_from_name(std::string_view name) {
    if (name.size() > 5)
        return std::nullopt;
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const auto& [text, level] : kLevelNames)
        if (lower == text)
            return level;
    return std::nullopt;
}

std::optional<Level> parse_level(std::span<const std::string> tokens) {
    if (auto i = level_call_index(tokens))
        return level_from_name(tokens[*i]);
    return std::nullopt;
}

std::optional<Level> parse_level(std::string_view statement) {
    const auto tokens = statement_tokens(statement);
    return parse_level(tokens);
}

std::vector<std::string> statement_tokens(std::string_view text) {
    try {
        return tokenize(std::string(text)).texts();
    } catch (const loggen::Error&) {
        std::vector<std::string> words;
        std::istringstream in{std::string(text)};
        for (std::string w; in >> w;)
            words.push_back(w);
        return words;
    }
}

LoggingStatement LoggingStatement::parse(std::string_view text) {
    LoggingStatement st;
    st.raw_text = std::string(text);
    st.tokens = statement_tokens(text);
    st.message_tokens = st.tokens;
    if (auto i = level_call_index(st.tokens)) {
        st.level = level_from_name(st.tokens[*i]);
        st.message_tokens[*i] = std::string(kLevelPlaceholder);
    }
    return st;
}

} // namespace loggen
