#include "sgon/lattice.hpp"

#include "sgon/errors.hpp"

#include <algorithm>

namespace sgon {

namespace {

// One equation per (row, symbol): A y = 0 over Q iff all of them vanish.
RatMatrix stacked_coefficients(const std::vector<SymVector>& rows, std::size_t m) {
    const std::size_t n = rows.size();
    RatMatrix S;
    S.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < m; ++s) {
            RatVector eq(n);
            bool nonzero = false;
            for (std::size_t j = 0; j < n; ++j) {
                eq[j] = rows[i][j].coeff(s);
                nonzero = nonzero || eq[j] != 0;
            }
            if (nonzero)
                S.push_back(std::move(eq));
        }
    return S;
}

}  // namespace

LatticeBasis LatticeBasis::make(SymbolBasisPtr basis, std::vector<SymVector> rows, int digits) {
    if (!basis)
        fail(ErrorKind::Schema, "lattice basis without a symbol basis");
    const std::size_t n = rows.size();
    if (n == 0)
        fail(ErrorKind::Schema, "lattice dimension must be positive");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            fail(ErrorKind::Schema, "matrix row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n));
        for (const auto& e : rows[i])
            if (!(*e.basis() == *basis) || e.size() != basis->size())
                fail(ErrorKind::Schema, "matrix entry over a different symbol basis");
    }
    RatMatrix S = stacked_coefficients(rows, basis->size());
    if (rank_q(S) < n)
        fail(ErrorKind::SingularBasis, "a rational combination of the columns vanishes");

    LatticeBasis A(std::move(basis), std::move(rows));
    BigFloat det = numeric_determinant(numeric_matrix(A, digits));
    if (abs(det) < pow10(-digits + 5, digits))
        fail(ErrorKind::AmbiguousSign, "determinant indistinguishable from zero at " +
                                           std::to_string(digits) + " digits");
    return A;
}

SymVector LatticeBasis::apply(std::span<const Integer> y) const {
    SymVector x;
    x.reserve(n());
    for (std::size_t i = 0; i < n(); ++i) {
        SymReal s(basis_);
        for (std::size_t j = 0; j < n(); ++j)
            if (y[j] != 0)
                s += rows_[i][j] * Rational(y[j]);
        x.push_back(std::move(s));
    }
    return x;
}

std::optional<RatVector> LatticeBasis::coordinates(const SymVector& x) const {
    const std::size_t m = basis_->size();
    RatMatrix S;
    RatVector rhs;
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t s = 0; s < m; ++s) {
            RatVector eq(n());
            for (std::size_t j = 0; j < n(); ++j)
                eq[j] = rows_[i][j].coeff(s);
            S.push_back(std::move(eq));
            rhs.push_back(x.at(i).coeff(s));
        }
    return solve_q(S, rhs, n());
}

std::vector<std::size_t> LatticeBasis::occurring_symbols() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < basis_->size(); ++s) {
        bool used = false;
        for (const auto& row : rows_)
            for (const auto& e : row)
                used = used || e.coeff(s) != 0;
        if (used)
            out.push_back(s);
    }
    return out;
}

std::size_t zero_norm(const SymVector& x) {
    return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](const SymReal& v) { return !v.is_zero(); }));
}

BigFloat sup_norm(const SymVector& x, int digits) {
    BigFloat best = BigFloat::from_long(0, digits);
    for (const auto& v : x)
        if (!v.is_zero())
            best = max(best, abs(symreal_eval(v, digits)));
    return best;
}

BigFloat height(const LatticeBasis& A, int digits) {
    BigFloat best = BigFloat::from_long(0, digits);
    for (const auto& row : A.rows())
        best = max(best, sup_norm(row, digits));
    return best;
}

BigMatrix numeric_matrix(const LatticeBasis& A, int digits) {
    BigMatrix M(A.n());
    for (std::size_t i = 0; i < A.n(); ++i)
        for (std::size_t j = 0; j < A.n(); ++j)
            M[i].push_back(symreal_eval(A(i, j), digits));
    return M;
}

BigFloat numeric_determinant(const BigMatrix& M) {
    BigMatrix a = M;
    const std::size_t n = a.size();
    BigFloat det = BigFloat::from_long(1, a[0][0].digits());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(a[i][k]) > abs(a[p][k]))
                p = i;
        if (a[p][k].is_zero())
            return BigFloat::from_long(0, det.digits());
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            BigFloat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

BigMatrix numeric_inverse(const BigMatrix& M) {
    const std::size_t n = M.size();
    const int digits = M[0][0].digits();
    BigMatrix a = M;
    BigMatrix inv(n, BigVector(n, BigFloat::from_long(0, digits)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = BigFloat::from_long(1, digits);
    BigFloat scale = BigFloat::from_long(0, digits);
    for (const auto& row : M)
        for (const auto& v : row)
            scale = max(scale, abs(v));
    const BigFloat tiny = scale * pow10(-digits + 5, digits);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(a[i][k]) > abs(a[p][k]))
                p = i;
        if (abs(a[p][k]) <= tiny)
            fail(ErrorKind::NumericallySingular, "pivot vanishes at " + std::to_string(digits) + " digits");
        std::swap(a[p], a[k]);
        std::swap(inv[p], inv[k]);
        BigFloat piv = a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero())
                continue;
            BigFloat f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

}  // namespace sgon
