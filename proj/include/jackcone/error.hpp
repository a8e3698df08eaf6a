#ifndef JACKCONE_ERROR_HPP
#define JACKCONE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace jackcone {

enum class ErrorCode {
    NotAPartition,
    CellOutOfDiagram,
    NonPositiveAlpha,
    LengthExceedsVars,
    DimensionMismatch,
    InsufficientVars,
    InvalidSize,
    NegativeShape,
    NotNested,
    SingularSystem,
    InvalidParams,
    OutOfDomain,
    NotPositiveDefinite,
    NonPositiveT,
    NonHalfInteger,
    RankExceedsDegrees,
    DegreeTooHigh,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (CLI, bindings) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace jackcone

#endif  // JACKCONE_ERROR_HPP
