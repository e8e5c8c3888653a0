#include "twofold/numerics.hpp"

namespace twofold {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::SectorMismatch: return "SectorMismatch";
    case ErrorKind::NotBlockDiagonal: return "NotBlockDiagonal";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotPseudoHermitian: return "NotPseudoHermitian";
    case ErrorKind::NonpositiveEnergy: return "NonpositiveEnergy";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InvalidDensity: return "InvalidDensity";
    case ErrorKind::OrderingViolation: return "OrderingViolation";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LastFactor: return "LastFactor";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case ErrorKind::InvalidMember: return "InvalidMember";
    case ErrorKind::SingularA: return "SingularA";
    case ErrorKind::NullTranslation: return "NullTranslation";
    case ErrorKind::BadNormalization: return "BadNormalization";
    case ErrorKind::NotSpecialUnitary: return "NotSpecialUnitary";
    case ErrorKind::ModeConflict: return "ModeConflict";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace twofold
