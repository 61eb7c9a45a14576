#pragma once

#include "sgon/bigfloat.hpp"
#include "sgon/intmatrix.hpp"
#include "sgon/symreal.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace sgon {

using SymVector = std::vector<SymReal>;
using BigVector = std::vector<BigFloat>;
using BigMatrix = std::vector<BigVector>;

/// Nonsingular n x n matrix A over a symbol basis. The lattice is A Z^n
/// (columns generate); rows drive the rational dimension.
class LatticeBasis {
  public:
    /// rows[i][j] = A_ij. Throws Schema on shape or basis mismatch,
    /// SingularBasis when the coefficient structure forces det A = 0 and
    /// AmbiguousSign when the numeric determinant is indistinguishable from 0.
    static LatticeBasis make(SymbolBasisPtr basis, std::vector<SymVector> rows,
                             int digits = BigFloat::kDefaultDigits);

    std::size_t n() const { return rows_.size(); }
    const SymbolBasisPtr& basis() const { return basis_; }
    const SymReal& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const SymVector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<SymVector>& rows() const { return rows_; }

    /// Exact lattice vector A y.
    SymVector apply(std::span<const Integer> y) const;

    /// Rational coordinates y with A y = x, when x lies in A Q^n.
    std::optional<RatVector> coordinates(const SymVector& x) const;

    /// Indices of the symbols with a nonzero coefficient somewhere in A.
    std::vector<std::size_t> occurring_symbols() const;

  private:
    LatticeBasis(SymbolBasisPtr basis, std::vector<SymVector> rows)
        : basis_(std::move(basis)), rows_(std::move(rows)) {}

    SymbolBasisPtr basis_;
    std::vector<SymVector> rows_;
};

/// Number of nonzero coordinates (exact).
std::size_t zero_norm(const SymVector& x);

/// Sup-norm evaluated at `digits`.
BigFloat sup_norm(const SymVector& x, int digits = BigFloat::kDefaultDigits);

/// |A|: largest absolute entry.
BigFloat height(const LatticeBasis& A, int digits = BigFloat::kDefaultDigits);

BigMatrix numeric_matrix(const LatticeBasis& A, int digits);
/// Gaussian elimination with partial pivoting.
BigFloat numeric_determinant(const BigMatrix& M);
/// Throws NumericallySingular when a pivot vanishes at working precision.
BigMatrix numeric_inverse(const BigMatrix& M);

}  // namespace sgon
