#include "sgon/intmatrix.hpp"

#include "sgon/errors.hpp"

namespace sgon {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            fail(ErrorKind::Schema, "ragged integer matrix row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            fail(ErrorKind::Schema, "ragged integer matrix column " + std::to_string(j));
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = columns[j][i];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> rows) const {
    IntMatrix s(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            s(i, j) = (*this)(rows[i], j);
    return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        fail(ErrorKind::Internal, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
    if (a.cols_ != v.size())
        fail(ErrorKind::Internal, "matrix-vector shape mismatch");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

Integer IntMatrix::sup_norm() const { return sgon::sup_norm(data_); }

std::string IntMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j)
            s += (j ? ", " : "") + (*this)(i, j).get_str();
        s += "]";
    }
    return s + "]";
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), RatVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i][j] = m(i, j);
    return r;
}

Rref rref(RatMatrix m) {
    Rref out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.matrix = std::move(m);
    return out;
}

std::size_t rank_q(const RatMatrix& m) { return rref(m).pivots.size(); }

RatMatrix kernel_q(const RatMatrix& m, std::size_t cols) {
    Rref e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    RatMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.matrix[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> solve_q(const RatMatrix& m, const RatVector& b, std::size_t cols) {
    RatMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i)
        aug[i].push_back(b.at(i));
    Rref e = rref(std::move(aug));
    RatVector x(cols);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == cols)
            return std::nullopt;
        x[e.pivots[r]] = e.matrix[r][cols];
    }
    return x;
}

}  // namespace sgon
