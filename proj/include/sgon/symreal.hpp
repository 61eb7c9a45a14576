#pragma once

#include "sgon/bigfloat.hpp"
#include "sgon/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sgon {

struct Symbol {
    std::string name;
    /// Decimal approximation; its significant digits bound evaluation precision.
    std::string approx;
};

/// Ordered list of reals declared linearly independent over Q. Index 0 is
/// always the constant 1. Independence is trusted, not checked: every exact
/// statement about SymReal values is conditional on it.
class SymbolBasis {
  public:
    /// Validates names and approximations; injects the constant "1" at the
    /// front when absent. Throws Schema.
    static std::shared_ptr<const SymbolBasis> make(std::vector<Symbol> symbols);

    /// 1, sqrt2, sqrt3, sqrt5, sqrt7, pi, e at 100 digits.
    static std::shared_ptr<const SymbolBasis> default_table();

    std::size_t size() const { return symbols_.size(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    /// Significant digits carried by the stored approximation (the constant
    /// symbol is exact and reports a huge count).
    int available_digits(std::size_t i) const;

    /// Value of symbol i at `digits` decimal digits. Throws
    /// InsufficientApproximation when the stored string is too short.
    BigFloat value(std::size_t i, int digits) const;

    bool operator==(const SymbolBasis& other) const;

  private:
    explicit SymbolBasis(std::vector<Symbol> symbols);
    std::vector<Symbol> symbols_;
    std::vector<int> digits_;
};

using SymbolBasisPtr = std::shared_ptr<const SymbolBasis>;

/// A real number given exactly by rational coordinates over a SymbolBasis.
class SymReal {
  public:
    explicit SymReal(SymbolBasisPtr basis);
    SymReal(SymbolBasisPtr basis, std::vector<Rational> coeffs);

    static SymReal constant(SymbolBasisPtr basis, const Rational& value);
    static SymReal symbol(SymbolBasisPtr basis, std::size_t index,
                          const Rational& coeff = 1);

    const SymbolBasisPtr& basis() const { return basis_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
    std::size_t size() const { return coeffs_.size(); }

    bool is_zero() const;
    /// Only the constant coordinate is nonzero.
    bool is_rational() const;

    SymReal& operator+=(const SymReal& o);
    SymReal& operator-=(const SymReal& o);
    SymReal& operator*=(const Rational& r);
    SymReal operator-() const;

    friend SymReal operator+(SymReal a, const SymReal& b) { return a += b; }
    friend SymReal operator-(SymReal a, const SymReal& b) { return a -= b; }
    friend SymReal operator*(SymReal a, const Rational& r) { return a *= r; }
    friend SymReal operator*(const Rational& r, SymReal a) { return a *= r; }

    friend bool operator==(const SymReal& a, const SymReal& b);

    /// Human readable form such as "2*sqrt3 - sqrt5".
    std::string to_string() const;

  private:
    void require_same_basis(const SymReal& o) const;

    SymbolBasisPtr basis_;
    std::vector<Rational> coeffs_;
};

/// Sum of coeff * approx at working precision `digits` + 10 guard digits.
/// Requires digits >= 16; throws InsufficientApproximation if a symbol with
/// a nonzero coefficient carries fewer than `digits` digits.
BigFloat symreal_eval(const SymReal& x, int digits);

/// Sign of x. Exact when x is zero or has a single nonzero coordinate;
/// otherwise numeric at `digits`, raising AmbiguousSign when
/// |x| < 10^(-digits+5).
int symreal_sign(const SymReal& x, int digits = BigFloat::kDefaultDigits);

/// |x| evaluated numerically, with the sign decided by symreal_sign.
BigFloat symreal_abs(const SymReal& x, int digits = BigFloat::kDefaultDigits);

}  // namespace sgon
