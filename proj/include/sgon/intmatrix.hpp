#pragma once

#include "sgon/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sgon {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix of arbitrary precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    IntVector column(std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix select_rows(std::span<const std::size_t> rows) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, std::span<const Integer> v);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    /// Largest absolute entry.
    Integer sup_norm() const;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

using RatMatrix = std::vector<RatVector>;

RatMatrix to_rational(const IntMatrix& m);

struct Rref {
    RatMatrix matrix;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over Q (canonical for the row space).
Rref rref(RatMatrix m);
std::size_t rank_q(const RatMatrix& m);
/// Basis of {x : m x = 0} over Q, one vector per free column.
RatMatrix kernel_q(const RatMatrix& m, std::size_t cols);
/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<RatVector> solve_q(const RatMatrix& m, const RatVector& b, std::size_t cols);

}  // namespace sgon
