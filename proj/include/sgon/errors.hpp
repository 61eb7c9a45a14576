#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgon {

enum class ErrorKind {
    // input / schema
    Io,
    Parse,
    Schema,
    InvalidArgument,
    // domain
    DivisionByZero,
    InsufficientApproximation,
    AmbiguousSign,
    NumericallySingular,
    SingularBasis,
    DimensionCapExceeded,
    BoxTooLarge,
    NotAxisAlignedVR,
    NotUpperHalfPlane,
    NotReduced,
    CertificateInvalid,
    TooFewTermsForPrecision,
    UnsupportedFieldTower,
    // broken internal invariant
    DegenerateNorm,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// CLI exit code for an error kind: 1 input/schema, 2 domain, 3 internal.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace sgon
