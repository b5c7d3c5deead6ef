#include "loggen/insertion.hpp"

#include "loggen/error.hpp"

namespace loggen {

std::string line_indent(std::string_view source, std::size_t offset) {
    std::size_t begin = 0;
    if (offset > 0) {
        const auto nl = source.rfind('\n', offset - 1);
        begin = nl == std::string_view::npos ? 0 : nl + 1;
    }
    std::size_t end = begin;
    while (end < source.size() && (source[end] == ' ' || source[end] == '\t'))
        ++end;
    return std::string(source.substr(begin, end - begin));
}

Insertion insert_statement(const TokenStream& stream, std::size_t anchor_index,
                           std::string_view statement) {
    if (anchor_index >= stream.size())
        throw Error(ErrorCode::IndexOutOfRange,
                    "anchor index " + std::to_string(anchor_index) + " outside stream of " +
                        std::to_string(stream.size()) + " tokens");
    const Token& anchor = stream[anchor_index];
    std::string piece = "\n" + line_indent(stream.source(), anchor.span.begin);
    piece += statement;

    Insertion ins;
    ins.offset = anchor.span.end;
    ins.length = piece.size();
    ins.output.reserve(stream.source().size() + piece.size());
    ins.output.append(stream.source(), 0, ins.offset);
    ins.output += piece;
    ins.output.append(stream.source(), ins.offset);
    return ins;
}

std::string remove_insertion(const Insertion& insertion) {
    std::string out = insertion.output;
    out.erase(insertion.offset, insertion.length);
    return out;
}

} // namespace loggen
