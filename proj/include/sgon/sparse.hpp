#pragma once

#include "sgon/intlinalg.hpp"
#include "sgon/lattice.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sgon {

struct RowTerm {
    SymReal alpha;
    /// Primitive, positive leading entry.
    IntVector f;
};

/// a_i = sum_j alpha_ij f_ij for every row, with the alpha_ij of one row
/// linearly independent over Q. F stacks the f_ij in row order, then j order.
struct RowDecomposition {
    std::vector<std::vector<RowTerm>> rows;
    IntMatrix F;
    /// First row of F belonging to row i of A; offsets[n] = d.
    std::vector<std::size_t> offsets;

    std::size_t d(std::size_t i) const { return rows[i].size(); }
    std::size_t total() const { return offsets.back(); }
    /// Rows of F belonging to the rows of A indexed by I.
    IntMatrix F_rows(std::span<const std::size_t> I) const;
    /// d_I(A).
    std::size_t d_of(std::span<const std::size_t> I) const;
    /// |F(A)|.
    Integer height() const { return F.sup_norm(); }
};

/// Canonical decomposition: for row i, the rows of the reduced row echelon
/// form of its coefficient columns (one vector in Q^n per symbol), each
/// scaled to a primitive integer vector.
RowDecomposition row_decompose(const LatticeBasis& A);

struct RationalDimension {
    std::vector<std::size_t> per_row;
    std::size_t total = 0;
};

RationalDimension rational_dimension(const LatticeBasis& A);

struct NuResult {
    bool is_zero = true;
    /// alpha_i per row when every row is one-dimensional.
    std::vector<SymReal> alphas;
    /// prod |alpha_i|, or 0.
    BigFloat value;
};

NuResult nu(const LatticeBasis& A, int digits = BigFloat::kDefaultDigits);

struct MuEstimate {
    /// Z-basis of the additive group generated by the entries of A.
    std::vector<SymReal> alpha;
    std::size_t rank = 0;
    BigFloat value;
    /// Phi_alpha in standard coordinates, (n * rank) x n; row (i, k) gives
    /// the k-th coordinate of x_i.
    BigMatrix phi;
};

/// Throws NumericallySingular if A^{-1} cannot be formed.
MuEstimate mu_estimate(const LatticeBasis& A, int digits = BigFloat::kDefaultDigits);

struct SparseReport {
    /// Zero-based row indices, increasing.
    std::vector<std::size_t> I;
    std::size_t d_I = 0;
    std::size_t ell = 0;
    std::vector<IntVector> y;
    std::vector<SymVector> x;
    std::vector<BigFloat> x_norms;
    BigFloat lhs;
    BigFloat bound;
    bool bound_satisfied = false;
};

/// One report per I with |I| = n - k and d_I(A) < n, sorted by d_I then
/// lexicographically by I.
std::vector<SparseReport> find_sparse(const LatticeBasis& A, std::size_t k,
                                      int digits = BigFloat::kDefaultDigits);

/// n^{n - d_I/2} |A|^n mu^{d_I}.
BigFloat sparse_bound(const LatticeBasis& A, std::size_t d_I, const BigFloat& mu, int digits);

/// Recomputes both sides at doubled precision: prod |x_i| <= bound (1 + 1e-15).
bool verify_sparse_report(const LatticeBasis& A, const SparseReport& report,
                          int digits = BigFloat::kDefaultDigits);

struct LevelWitness {
    std::size_t level = 0;
    IntVector y;
    SymVector x;
};

struct SparsityLevels {
    std::vector<std::size_t> s;
    /// n linearly independent lattice vectors; witness i realizes s[i].
    std::vector<LevelWitness> witnesses;
};

inline constexpr std::size_t kDefaultDimensionCap = 14;

SparsityLevels sparsity_levels(const LatticeBasis& A, std::size_t cap = kDefaultDimensionCap);

struct RectangularSublattice {
    /// Diagonal, B = A adj(F(A)).
    std::vector<SymVector> B;
    IntMatrix adj;
    Integer det_F;
    Integer index;
    /// (|det A| / nu)^{n-1}.
    BigFloat numeric_index;
    bool cross_check = false;
};

/// Requires d(L) = n; throws NotAxisAlignedVR otherwise.
RectangularSublattice rectangular_sublattice(const LatticeBasis& A,
                                             int digits = BigFloat::kDefaultDigits);

struct SparseMinimum {
    BigFloat value;
    IntVector y;
    SymVector x;
};

struct SparseMinima {
    std::vector<SparseMinimum> minima;
    /// Dimension of the span of k-sparse lattice vectors.
    std::size_t sparse_rank = 0;
    /// Fewer than n minima were found inside the radius.
    bool incomplete = false;
    Integer box;
    std::size_t nodes = 0;
};

inline constexpr std::size_t kMinimaDimensionCap = 8;
inline constexpr std::size_t kDefaultNodeBudget = 20'000'000;

/// Enumerates integer preimages y with |y| <= ceil(radius n |A^{-1}|) and
/// collects k-sparse lattice vectors of sup-norm <= radius.
SparseMinima sparse_minima_oracle(const LatticeBasis& A, std::size_t k, const BigFloat& radius,
                                  std::size_t node_budget = kDefaultNodeBudget,
                                  int digits = BigFloat::kDefaultDigits);

}  // namespace sgon
