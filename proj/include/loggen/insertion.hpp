#pragma once

#include "loggen/lexer.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace loggen {

/// Where a statement was spliced into a method. The inserted bytes are
/// output[offset, offset + length): a newline, the anchor line's indentation
/// and the statement text.
struct Insertion {
    std::string output;
    std::size_t offset = 0;
    std::size_t length = 0;
};

/// Leading blanks of the line holding `offset`.
std::string line_indent(std::string_view source, std::size_t offset);

/// Inserts `statement` right after token `anchor_index`. Throws IndexOutOfRange.
Insertion insert_statement(const TokenStream& stream, std::size_t anchor_index,
                           std::string_view statement);

/// Inverse of insert_statement.
std::string remove_insertion(const Insertion& insertion);

} // namespace loggen
