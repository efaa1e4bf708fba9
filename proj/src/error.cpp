#include "udg/error.hpp"

namespace udg {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::UnfactorableRadicand: return "UnfactorableRadicand";
    case Errc::CoincidentCenters: return "CoincidentCenters";
    case Errc::UnsupportedRadicand: return "UnsupportedRadicand";
    case Errc::DisjointCircles: return "DisjointCircles";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::GeometryMismatch: return "GeometryMismatch";
    case Errc::NotGeometric: return "NotGeometric";
    case Errc::VertexCollision: return "VertexCollision";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::InvalidColoring: return "InvalidColoring";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NonFiniteInput: return "NonFiniteInput";
    case Errc::UnknownGraph: return "UnknownGraph";
    case Errc::UnknownClaim: return "UnknownClaim";
    case Errc::IoError: return "IoError";
    case Errc::Internal: return "Internal";
    }
    return "Internal";
}

} // namespace udg
