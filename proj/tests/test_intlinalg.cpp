#include "sgon/errors.hpp"
#include "sgon/intlinalg.hpp"
#include "sgon/samples.hpp"
#include "sgon/verify.hpp"

#include <doctest.h>

#include <functional>

using namespace sgon;

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long h) {
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            M(i, j) = uniform(rng, -h, h);
    return M;
}

IntMatrix rows(std::initializer_list<std::initializer_list<long>> data) {
    std::vector<IntVector> v;
    std::size_t cols = 0;
    for (auto r : data) {
        IntVector row;
        for (long x : r)
            row.push_back(x);
        cols = row.size();
        v.push_back(std::move(row));
    }
    return IntMatrix::from_rows(v, cols);
}

Integer laplace_det(const IntMatrix& M) {
    const std::size_t n = M.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return M(0, 0);
    Integer det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = M(r, c);
        det += (j % 2 ? -1 : 1) * M(0, j) * laplace_det(minor);
    }
    return det;
}

IntMatrix columns_of(const std::vector<IntVector>& v, std::size_t dim) { return IntMatrix::from_columns(v, dim); }

// Every integer vector with |entries| <= box satisfying M v = 0.
std::vector<IntVector> kernel_in_box(const IntMatrix& M, long box) {
    const std::size_t c = M.cols();
    std::vector<IntVector> out;
    IntVector v(c, -box);
    for (;;) {
        IntVector image = M * v;
        if (std::all_of(image.begin(), image.end(), [](const Integer& z) { return z == 0; }))
            out.push_back(v);
        std::size_t j = 0;
        while (j < c && v[j] == box)
            v[j++] = -box;
        if (j == c)
            break;
        ++v[j];
    }
    return out;
}

}  // namespace

TEST_CASE("hnf examples") {
    HnfResult id = hnf(IntMatrix::identity(3));
    CHECK(id.H == IntMatrix::identity(3));
    CHECK(id.U == IntMatrix::identity(3));

    HnfResult g = hnf(rows({{2, 3}}));
    CHECK(g.rank == 1);
    CHECK(g.H(0, 0) == 1);
    CHECK(g.H(0, 1) == 0);

    IntMatrix M = rows({{2, 4}, {6, 8}});
    CHECK(laplace_det(M) == -8);
    HnfResult h = hnf(M);
    CHECK(abs(determinant(h.H)) == 8);
}

TEST_CASE("hnf: M U = H, U unimodular, echelon pivots on random matrices") {
    Rng rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 6));
        const std::size_t c = static_cast<std::size_t>(uniform(rng, 1, 6));
        IntMatrix M = random_matrix(rng, r, c, 50);
        if (trial % 5 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j)
                M(r - 1, j) = 2 * M(0, j);
        HnfResult h = hnf(M);
        CHECK(M * h.U == h.H);
        CHECK(abs(laplace_det(h.U)) == 1);
        CHECK(h.rank == rank_q(to_rational(M)));
        std::size_t prev = 0;
        for (std::size_t k = 0; k < h.rank; ++k) {
            const std::size_t p = h.pivot_rows[k];
            if (k > 0)
                CHECK(p > prev);
            prev = p;
            CHECK(h.H(p, k) > 0);
            for (std::size_t i = 0; i < p; ++i)
                CHECK(h.H(i, k) == 0);
            for (std::size_t j = 0; j < k; ++j) {
                CHECK(h.H(p, j) >= 0);
                CHECK(h.H(p, j) < h.H(p, k));
            }
        }
        for (std::size_t k = h.rank; k < c; ++k)
            for (std::size_t i = 0; i < r; ++i)
                CHECK(h.H(i, k) == 0);
    }
}

TEST_CASE("integer kernel examples") {
    KernelBasis k = integer_kernel(rows({{2, 3}}));
    REQUIRE(k.dimension() == 1);
    CHECK(k.vectors[0] == IntVector{3, -2});
    CHECK(integer_kernel(IntMatrix::identity(4)).dimension() == 0);
    KernelBasis f = integer_kernel(rows({{1, 0, 0}, {0, 1, 2}, {1, 0, 0}, {0, 1, 2}}));
    REQUIRE(f.dimension() == 1);
    CHECK(f.vectors[0] == IntVector{0, 2, -1});
}

TEST_CASE("integer kernel is annihilated and saturated") {
    Rng rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t c = static_cast<std::size_t>(uniform(rng, 2, 4));
        const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(c)));
        IntMatrix M = random_matrix(rng, r, c, 3);
        KernelBasis K = integer_kernel(M);
        CHECK(K.dimension() == c - rank_q(to_rational(M)));
        for (const auto& v : K.vectors) {
            IntVector image = M * v;
            CHECK(std::all_of(image.begin(), image.end(), [](const Integer& z) { return z == 0; }));
        }
        if (K.dimension() == 0)
            continue;
        RatMatrix basis = to_rational(columns_of(K.vectors, c));
        for (const auto& w : kernel_in_box(M, 3)) {
            RatVector target(w.begin(), w.end());
            auto coords = solve_q(basis, target, K.dimension());
            REQUIRE(coords.has_value());
            for (const auto& q : *coords)
                CHECK(q.get_den() == 1);
        }
    }
}

TEST_CASE("adjugate and determinant") {
    AdjugateDet id = adjugate_det(IntMatrix::identity(3));
    CHECK(id.det == 1);
    CHECK(id.adj == IntMatrix::identity(3));

    AdjugateDet two = adjugate_det(rows({{1, 2}, {2, 1}}));
    CHECK(two.det == -3);
    CHECK(two.adj == rows({{1, -2}, {-2, 1}}));

    IntMatrix diag(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        diag(i, i) = 5;
    AdjugateDet d = adjugate_det(diag);
    CHECK(d.det == 625);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(d.adj(i, i) == 125);

    Rng rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
        IntMatrix M = random_matrix(rng, n, n, 9);
        if (trial % 4 == 0 && n > 1)
            for (std::size_t j = 0; j < n; ++j)
                M(1, j) = M(0, j);
        AdjugateDet ad = adjugate_det(M);
        CHECK(ad.det == laplace_det(M));
        IntMatrix scaled(n, n);
        for (std::size_t i = 0; i < n; ++i)
            scaled(i, i) = ad.det;
        CHECK(M * ad.adj == scaled);
    }
}

TEST_CASE("reduce_kernel_basis examples") {
    KernelBasis K = integer_kernel(rows({{2, 3}}));
    ReducedKernel red = reduce_kernel_basis(K, siegel_bound(2, 3, 1));
    CHECK(red.basis.vectors == K.vectors);
    CHECK(red.sup_norm_product == 3);
    CHECK(red.bound_satisfied == true);

    ReducedKernel empty = reduce_kernel_basis(integer_kernel(IntMatrix::identity(3)), siegel_bound(3, 1, 3));
    CHECK(empty.basis.dimension() == 0);
    CHECK(empty.sup_norm_product == 1);
    CHECK(empty.bound_satisfied == true);
}

TEST_CASE("reduction preserves the kernel lattice and never increases the product") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 6));
        const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n) - 1));
        IntMatrix B = random_matrix(rng, m, n, 10);
        KernelBasis K = integer_kernel(B);
        ReducedKernel red = reduce_kernel_basis(K);
        CHECK(lattice_hnf(red.basis.vectors, n) == lattice_hnf(K.vectors, n));
        CHECK(red.sup_norm_product <= sup_norm_product(K.vectors));
    }
}

TEST_CASE("LLL keeps the lattice and size-reduces") {
    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 5));
        std::vector<IntVector> basis;
        while (true) {
            basis.clear();
            for (std::size_t i = 0; i < n; ++i) {
                IntVector v;
                for (std::size_t j = 0; j < n; ++j)
                    v.push_back(uniform(rng, -40, 40));
                basis.push_back(v);
            }
            if (laplace_det(columns_of(basis, n)) != 0)
                break;
        }
        std::vector<IntVector> red = lll_reduce(basis);
        CHECK(lattice_hnf(red, n) == lattice_hnf(basis, n));
        CHECK(abs(laplace_det(columns_of(red, n))) == abs(laplace_det(columns_of(basis, n))));
    }
    CHECK_THROWS_AS(lll_reduce({{1, 2}, {2, 4}}), Error);
}

TEST_CASE("Siegel property over 1000 random matrices") {
    BatteryResult r = battery_siegel(41, 1000);
    CHECK(r.violations == 0);
    std::size_t fallback = 0;
    for (const auto& [name, count] : r.counters)
        if (name == "fallback")
            fallback = count;
    CHECK(fallback <= 10);
}

TEST_CASE("2x4 kernel bases meet the bound (sqrt 4 * 10)^2") {
    Rng rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix B = random_matrix(rng, 2, 4, 10);
        B(0, 0) = 10;
        SiegelCase c = siegel_check(B);
        CHECK(c.resolved);
        if (c.rank == 2)
            CHECK(c.bound <= BigFloat::from_long(400, 50) * (BigFloat::from_long(1, 50) + pow10(-30, 50)));
    }
}

TEST_CASE("sup-norm minima agree with brute force") {
    Rng rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix B = random_matrix(rng, 1, 3, 4);
        B(0, 2) = uniform(rng, 1, 4);
        KernelBasis K = integer_kernel(B);
        REQUIRE(K.dimension() == 2);
        const long box = 5;
        SupNormMinima mins = sup_norm_minima(K.vectors, 3, box);

        std::vector<IntVector> found = kernel_in_box(B, box);
        std::vector<Integer> norms;
        for (const auto& v : found)
            if (sup_norm(v) > 0)
                norms.push_back(sup_norm(v));
        std::sort(norms.begin(), norms.end());
        if (norms.empty()) {
            CHECK(mins.vectors.empty());
            continue;
        }
        REQUIRE_FALSE(mins.vectors.empty());
        CHECK(sup_norm(mins.vectors[0]) == norms[0]);
        // second minimum: smallest norm of a vector independent of the first
        const IntVector& v1 = mins.vectors[0];
        Integer second = -1;
        for (const auto& v : found) {
            if (sup_norm(v) == 0)
                continue;
            bool dependent = true;
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = a + 1; b < 3; ++b)
                    dependent = dependent && v[a] * v1[b] - v[b] * v1[a] == 0;
            if (!dependent && (second < 0 || sup_norm(v) < second))
                second = sup_norm(v);
        }
        if (second < 0)
            CHECK(mins.vectors.size() == 1);
        else {
            REQUIRE(mins.vectors.size() == 2);
            CHECK(sup_norm(mins.vectors[1]) == second);
        }
    }
}
