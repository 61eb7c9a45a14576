#pragma once

#include "sgon/bigfloat.hpp"
#include "sgon/intmatrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sgon {

struct HnfResult {
    /// H = M * U, lower echelon by columns; zero columns trail.
    IntMatrix H;
    /// Unimodular column transform.
    IntMatrix U;
    std::size_t rank = 0;
    /// Row index of the pivot of each of the first `rank` columns.
    std::vector<std::size_t> pivot_rows;
};

/// Column-style Hermite normal form: pivots positive, and in every pivot row
/// the entries left of the pivot lie in [0, pivot).
HnfResult hnf(const IntMatrix& M);

/// Canonical basis (HNF columns) of the lattice spanned by `vectors`.
std::vector<IntVector> lattice_hnf(const std::vector<IntVector>& vectors, std::size_t dim);

/// Lattice basis of {v in Z^c : M v = 0}.
struct KernelBasis {
    std::size_t cols = 0;
    std::vector<IntVector> vectors;

    std::size_t dimension() const { return vectors.size(); }
};

/// Saturated kernel basis read off the unimodular HNF transform; each vector
/// primitive with positive first nonzero entry.
KernelBasis integer_kernel(const IntMatrix& M);

struct AdjugateDet {
    IntMatrix adj;
    Integer det;
};

Integer determinant(const IntMatrix& M);
/// M * adj = det * I, defined for singular M as well.
AdjugateDet adjugate_det(const IntMatrix& M);

/// Exact LLL reduction (Euclidean Gram) of linearly independent vectors.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis, const Rational& delta = Rational(3, 4));

struct ReducedKernel {
    KernelBasis basis;
    /// Product of the sup-norms of the basis vectors (1 for an empty basis).
    Integer sup_norm_product;
    std::optional<BigFloat> target_bound;
    /// Set when a bound was supplied.
    std::optional<bool> bound_satisfied;
};

/// LLL (delta = 3/4) followed by sorting on (sup-norm, lexicographic) and
/// sign normalization. The sup-norm product never increases; the input
/// ordering is kept when the reduction would not help.
ReducedKernel reduce_kernel_basis(const KernelBasis& K, std::optional<BigFloat> target_bound = std::nullopt);

/// (sqrt(n) * height)^rank, the Siegel sup-norm product bound.
BigFloat siegel_bound(std::size_t n, const Integer& height, std::size_t rank, int digits = 50);

struct SupNormMinima {
    /// Linearly independent lattice vectors realizing the sup-norm successive
    /// minima, in increasing order.
    std::vector<IntVector> vectors;
    Integer sup_norm_product;
    std::size_t nodes_visited = 0;
};

/// Enumerates the lattice spanned by `basis` inside the sup-norm ball of the
/// given radius and greedily extracts independent vectors in order of
/// (sup-norm, lexicographic). Throws BoxTooLarge past `node_budget`.
SupNormMinima sup_norm_minima(const std::vector<IntVector>& basis, std::size_t dim, const Integer& radius,
                              std::size_t node_budget = 5'000'000);

/// Product of sup-norms.
Integer sup_norm_product(const std::vector<IntVector>& vectors);

/// True iff a < b lexicographically.
bool lex_less(const IntVector& a, const IntVector& b);

}  // namespace sgon
