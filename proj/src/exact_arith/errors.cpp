#include "sgon/errors.hpp"

namespace sgon {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InsufficientApproximation: return "InsufficientApproximation";
    case ErrorKind::AmbiguousSign: return "AmbiguousSign";
    case ErrorKind::NumericallySingular: return "NumericallySingular";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
    case ErrorKind::NotAxisAlignedVR: return "NotAxisAlignedVR";
    case ErrorKind::NotUpperHalfPlane: return "NotUpperHalfPlane";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::CertificateInvalid: return "CertificateInvalid";
    case ErrorKind::TooFewTermsForPrecision: return "TooFewTermsForPrecision";
    case ErrorKind::UnsupportedFieldTower: return "UnsupportedFieldTower";
    case ErrorKind::DegenerateNorm: return "DegenerateNorm";
    case ErrorKind::Internal: return "InternalInvariantViolation";
    }
    return "UnknownError";
}

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::Parse:
    case ErrorKind::Schema:
    case ErrorKind::InvalidArgument:
        return 1;
    case ErrorKind::DegenerateNorm:
    case ErrorKind::Internal:
        return 3;
    default:
        return 2;
    }
}

}  // namespace sgon
