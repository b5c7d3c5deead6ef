#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loggen {

enum class ErrorCode {
    UnterminatedLiteral,
    InvalidConfig,
    ShapeMismatch,
    UnknownPolicy,
    BackendUnavailable,
    ProtocolError,
    NoMask,
    EmptyCorpus,
    EmptyModel,
    NoAnchors,
    IndexOutOfRange,
    GenerationEmpty,
    EmptyPositions,
    LengthMismatch,
    EmptyReference,
    EmptyDataset,
    SpanNotDetected,
    PrecedingTokenNotAnchor,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Domain error carried through every module. `location` is a character
/// offset for lexer errors and a 1-based line number for dataset errors.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> location = std::nullopt)
        : std::runtime_error(message), code_(code), location_(location) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> location() const noexcept { return location_; }

  private:
    ErrorCode code_;
    std::optional<std::size_t> location_;
};

} // namespace loggen
