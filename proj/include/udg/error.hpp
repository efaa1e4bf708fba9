#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace udg {

// Stable error vocabulary. The names returned by errc_name() are part of the
// CLI and C API contract; do not rename them.
enum class Errc {
    InvalidArgument,
    ParseError,
    NegativeRadicand,
    UnfactorableRadicand,
    CoincidentCenters,
    UnsupportedRadicand,
    DisjointCircles,
    DuplicatePoint,
    InvalidGraph,
    GeometryMismatch,
    NotGeometric,
    VertexCollision,
    EmptyGraph,
    SizeMismatch,
    InvalidColoring,
    BudgetExceeded,
    NonFiniteInput,
    UnknownGraph,
    UnknownClaim,
    IoError,
    Internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace udg
