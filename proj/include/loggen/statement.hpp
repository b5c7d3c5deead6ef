#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace loggen {

/// Log severity, ranked 1 (Trace) to 6 (Fatal).
enum class Level { Trace = 1, Debug, Info, Warn, Error, Fatal };

inline int rank(Level level) { return static_cast<int>(level); }

std::string_view to_string(Level level);
std::string to_string(std::optional<Level> level);  // "unknown" when empty

/// Case-insensitive match of a level call name ("info", "WARN", ...).
std::optional<Level> level_from_name(std::string_view name);

/// The first call name (identifier directly followed by "(") that names a level.
std::optional<Level> parse_level(std::span<const std::string> tokens);
std::optional<Level> parse_level(std::string_view statement);

inline constexpr std::string_view kLevelPlaceholder = "<level>";

struct LoggingStatement {
    std::string raw_text;
    std::vector<std::string> tokens;
    std::optional<Level> level;
    /// `tokens` with the level call name replaced by kLevelPlaceholder.
    std::vector<std::string> message_tokens;

    /// Never throws: text that does not lex falls back to whitespace splitting.
    static LoggingStatement parse(std::string_view text);
};

/// Lexer tokens of a statement, or whitespace-split words if it does not lex.
std::vector<std::string> statement_tokens(std::string_view text);

} // namespace loggen
