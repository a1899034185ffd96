#include "chromsum/errors.hpp"

namespace chromsum {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::DegenerateTuple: return "DegenerateTuple";
        case ErrorKind::Domain: return "DomainError";
        case ErrorKind::Dimension: return "DimensionError";
        case ErrorKind::DegenerateAlphabet: return "DegenerateAlphabet";
        case ErrorKind::Bound: return "BoundError";
        case ErrorKind::Budget: return "BudgetError";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::ColorOverlap: return "ColorOverlap";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
        case ErrorKind::Overflow: return "OverflowError";
        case ErrorKind::Parse: return "ParseError";
    }
    return "Unknown";
}

}  // namespace chromsum
