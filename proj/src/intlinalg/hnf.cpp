#include "sgon/errors.hpp"
#include "sgon/intlinalg.hpp"

#include <algorithm>

namespace sgon {

namespace {

// (col_a, col_b) <- (s col_a + t col_b, u col_a + v col_b), with s v - t u = 1.
void combine_columns(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                     const Integer& u, const Integer& v) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer x = m(i, a);
        Integer y = m(i, b);
        m(i, a) = s * x + t * y;
        m(i, b) = u * x + v * y;
    }
}

// col_a -= f * col_b
void subtract_column(IntMatrix& m, std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, a) -= f * m(i, b);
}

void negate_column(IntMatrix& m, std::size_t a) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, a) = -m(i, a);
}

}  // namespace

HnfResult hnf(const IntMatrix& M) {
    HnfResult r{M, IntMatrix::identity(M.cols()), 0, {}};
    IntMatrix& H = r.H;
    IntMatrix& U = r.U;
    const std::size_t cols = M.cols();
    std::size_t piv = 0;
    for (std::size_t i = 0; i < M.rows() && piv < cols; ++i) {
        for (std::size_t j = piv + 1; j < cols; ++j) {
            if (H(i, j) == 0)
                continue;
            const Integer a = H(i, piv);
            const Integer b = H(i, j);
            if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0) {
                Integer f = b / a;
                subtract_column(H, j, piv, f);
                subtract_column(U, j, piv, f);
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Integer u = -b / g;
            Integer v = a / g;
            combine_columns(H, piv, j, s, t, u, v);
            combine_columns(U, piv, j, s, t, u, v);
        }
        if (H(i, piv) == 0)
            continue;
        if (H(i, piv) < 0) {
            negate_column(H, piv);
            negate_column(U, piv);
        }
        const Integer p = H(i, piv);
        for (std::size_t k = 0; k < piv; ++k) {
            Integer f;
            mpz_fdiv_q(f.get_mpz_t(), H(i, k).get_mpz_t(), p.get_mpz_t());
            if (f != 0) {
                subtract_column(H, k, piv, f);
                subtract_column(U, k, piv, f);
            }
        }
        r.pivot_rows.push_back(i);
        ++piv;
    }
    r.rank = piv;
    return r;
}

std::vector<IntVector> lattice_hnf(const std::vector<IntVector>& vectors, std::size_t dim) {
    if (vectors.empty())
        return {};
    HnfResult h = hnf(IntMatrix::from_columns(vectors, dim));
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < h.rank; ++j)
        out.push_back(h.H.column(j));
    return out;
}

KernelBasis integer_kernel(const IntMatrix& M) {
    HnfResult h = hnf(M);
    KernelBasis k{M.cols(), {}};
    for (std::size_t j = h.rank; j < M.cols(); ++j) {
        IntVector v = make_primitive(h.U.column(j));
        normalize_sign(v);
        k.vectors.push_back(std::move(v));
    }
    return k;
}

Integer determinant(const IntMatrix& M) {
    if (M.rows() != M.cols())
        fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination
    IntMatrix a = M;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

AdjugateDet adjugate_det(const IntMatrix& M) {
    if (M.rows() != M.cols())
        fail(ErrorKind::InvalidArgument, "adjugate of a non-square matrix");
    const std::size_t n = M.rows();
    AdjugateDet out{IntMatrix(n, n), determinant(M)};
    if (n == 1) {
        out.adj(0, 0) = 1;
        return out;
    }
    if (out.det != 0) {
        // adj = det * M^{-1}, from Gauss-Jordan on [M | I]
        RatMatrix aug = to_rational(M);
        for (std::size_t i = 0; i < n; ++i) {
            aug[i].resize(2 * n);
            aug[i][n + i] = 1;
        }
        Rref e = rref(std::move(aug));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational v = e.matrix[i][n + j] * out.det;
                if (v.get_den() != 1)
                    fail(ErrorKind::Internal, "non-integral adjugate entry");
                out.adj(i, j) = v.get_num();
            }
        return out;
    }
    // singular: cofactors, adj(i, j) = (-1)^(i+j) det(M without row j, column i)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j)
                    continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i)
                        continue;
                    minor(mr, mc++) = M(r, c);
                }
                ++mr;
            }
            Integer d = determinant(minor);
            out.adj(i, j) = ((i + j) % 2 == 0) ? d : Integer(-d);
        }
    return out;
}

}  // namespace sgon
