#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qp {

enum class ErrorCode {
    RingMismatch,
    NotAUnit,
    InfiniteRing,
    InvalidRing,
    Parse,
    ShapeMismatch,
    UnsupportedShape,
    NotBleachedInstance,
    PreconditionViolation,
    NotQuasipolar,
    BadSeed,
    PivotNotUnit,
    NoConstantSplit,
    ConstantNotQuasipolar,
    NotIdempotent,
    CarrierTooLarge,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the text parsers; `position` is a 0-based character offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::Parse, what + " (at position " + std::to_string(position) + ")"),
          position_(position),
          message_(what) {}

    std::size_t position() const noexcept { return position_; }
    /// The message without the position suffix.
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

}  // namespace qp
