#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace racdraw {

enum class ErrorKind {
    DegenerateDirection,
    EmptyGraph,
    CapacityExceeded,
    InvalidEdgeOrientation,
    ZeroLengthSegment,
    LimitExceeded,
    ArithmeticOverflow,
    EmptyDrawing,
    // edge-list parsing
    MissingHeader,
    MalformedLine,
    IdOutOfRange,
    DuplicateEdge,
    SelfLoop,
    // drawing documents
    SchemaMismatch,
    NonIntegerCoordinate,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateDirection: return "DegenerateDirection";
        case ErrorKind::EmptyGraph: return "EmptyGraph";
        case ErrorKind::CapacityExceeded: return "CapacityExceeded";
        case ErrorKind::InvalidEdgeOrientation: return "InvalidEdgeOrientation";
        case ErrorKind::ZeroLengthSegment: return "ZeroLengthSegment";
        case ErrorKind::LimitExceeded: return "LimitExceeded";
        case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
        case ErrorKind::EmptyDrawing: return "EmptyDrawing";
        case ErrorKind::MissingHeader: return "MissingHeader";
        case ErrorKind::MalformedLine: return "MalformedLine";
        case ErrorKind::IdOutOfRange: return "IdOutOfRange";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::SchemaMismatch: return "SchemaMismatch";
        case ErrorKind::NonIntegerCoordinate: return "NonIntegerCoordinate";
    }
    return "Unknown";
}

/// Every failure raised by the library. `line()` is set for text-format errors.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> line = std::nullopt)
        : std::runtime_error(format(message, line)), kind_(kind), line_(line) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    static std::string format(const std::string& message, std::optional<std::size_t> line) {
        if (!line) return message;
        return message + " (line " + std::to_string(*line) + ")";
    }

    ErrorKind kind_;
    std::optional<std::size_t> line_;
};

} // namespace racdraw
