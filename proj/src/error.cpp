#include "loggen/error.hpp"

namespace loggen {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnterminatedLiteral: return "UnterminatedLiteral";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnknownPolicy: return "UnknownPolicy";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::ProtocolError: return "ProtocolError";
    case ErrorCode::NoMask: return "NoMask";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EmptyModel: return "EmptyModel";
    case ErrorCode::NoAnchors: return "NoAnchors";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GenerationEmpty: return "GenerationEmpty";
    case ErrorCode::EmptyPositions: return "EmptyPositions";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyReference: return "EmptyReference";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::SpanNotDetected: return "SpanNotDetected";
    case ErrorCode::PrecedingTokenNotAnchor: return "PrecedingTokenNotAnchor";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace loggen
