#include "sgon/errors.hpp"
#include "sgon/sparse.hpp"

namespace sgon {

IntMatrix RowDecomposition::F_rows(std::span<const std::size_t> I) const {
    std::vector<std::size_t> picked;
    for (auto i : I)
        for (std::size_t r = offsets[i]; r < offsets[i + 1]; ++r)
            picked.push_back(r);
    return F.select_rows(picked);
}

std::size_t RowDecomposition::d_of(std::span<const std::size_t> I) const {
    std::size_t s = 0;
    for (auto i : I)
        s += d(i);
    return s;
}

RowDecomposition row_decompose(const LatticeBasis& A) {
    const std::size_t n = A.n();
    const std::size_t m = A.basis()->size();
    RowDecomposition out;
    out.offsets.push_back(0);
    std::vector<IntVector> stacked;
    for (std::size_t i = 0; i < n; ++i) {
        // one vector in Q^n per symbol
        RatMatrix cols(m, RatVector(n));
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t j = 0; j < n; ++j)
                cols[s][j] = A(i, j).coeff(s);
        Rref e = rref(cols);
        std::vector<RowTerm> terms;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            IntVector f = primitive_integer_vector(e.matrix[r]);
            // e.matrix[r] = f / c with c = f[pivot] because the pivot entry is 1
            const Integer& c = f[e.pivots[r]];
            std::vector<Rational> alpha(m);
            for (std::size_t s = 0; s < m; ++s)
                alpha[s] = cols[s][e.pivots[r]] / Rational(c);
            terms.push_back({SymReal(A.basis(), std::move(alpha)), f});
            stacked.push_back(std::move(f));
        }
        out.offsets.push_back(out.offsets.back() + terms.size());
        out.rows.push_back(std::move(terms));
    }
    out.F = IntMatrix::from_rows(stacked, n);
    return out;
}

RationalDimension rational_dimension(const LatticeBasis& A) {
    RowDecomposition dec = row_decompose(A);
    RationalDimension r;
    for (std::size_t i = 0; i < A.n(); ++i)
        r.per_row.push_back(dec.d(i));
    r.total = dec.total();
    return r;
}

NuResult nu(const LatticeBasis& A, int digits) {
    RowDecomposition dec = row_decompose(A);
    NuResult r;
    r.value = BigFloat::from_long(0, digits);
    for (std::size_t i = 0; i < A.n(); ++i)
        if (dec.d(i) != 1)
            return r;
    r.is_zero = false;
    r.value = BigFloat::from_long(1, digits);
    for (auto& row : dec.rows) {
        r.value *= symreal_abs(row[0].alpha, digits);
        r.alphas.push_back(row[0].alpha);
    }
    return r;
}

MuEstimate mu_estimate(const LatticeBasis& A, int digits) {
    const std::size_t n = A.n();
    const std::vector<std::size_t> used = A.occurring_symbols();
    const std::size_t m = used.size();

    std::vector<Rational> all;
    for (const auto& row : A.rows())
        for (const auto& e : row)
            for (auto s : used)
                all.push_back(e.coeff(s));
    const Integer den = common_denominator(all);

    // scaled integer coordinates of every entry over the occurring symbols
    std::vector<IntVector> entries;
    for (const auto& row : A.rows())
        for (const auto& e : row) {
            IntVector v(m);
            for (std::size_t t = 0; t < m; ++t) {
                Rational c = e.coeff(used[t]) * den;
                v[t] = c.get_num();
            }
            entries.push_back(std::move(v));
        }
    std::vector<IntVector> gens = lattice_hnf(entries, m);

    MuEstimate r;
    r.rank = gens.size();
    for (const auto& g : gens) {
        std::vector<Rational> c(A.basis()->size());
        for (std::size_t t = 0; t < m; ++t)
            c[used[t]] = Rational(g[t]) / Rational(den);
        r.alpha.emplace_back(A.basis(), std::move(c));
    }

    // coordinates of each entry in the group basis
    RatMatrix G(m, RatVector(r.rank));
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t k = 0; k < r.rank; ++k)
            G[t][k] = gens[k][t];
    const int working = digits + 10;
    BigMatrix S(n * r.rank, BigVector(n, BigFloat::from_long(0, working)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const IntVector& v = entries[i * n + j];
            RatVector rhs(v.begin(), v.end());
            std::optional<RatVector> coords = solve_q(G, rhs, r.rank);
            if (!coords)
                fail(ErrorKind::Internal, "matrix entry outside the group it generates");
            for (std::size_t k = 0; k < r.rank; ++k) {
                if ((*coords)[k].get_den() != 1)
                    fail(ErrorKind::Internal, "non-integral group coordinate");
                S[i * r.rank + k][j] = BigFloat::from_rational((*coords)[k], working);
            }
        }

    BigMatrix inv = numeric_inverse(numeric_matrix(A, digits));
    r.phi.assign(n * r.rank, BigVector(n, BigFloat::from_long(0, working)));
    r.value = BigFloat::from_long(0, working);
    for (std::size_t row = 0; row < n * r.rank; ++row) {
        BigFloat l1 = BigFloat::from_long(0, working);
        for (std::size_t j = 0; j < n; ++j) {
            BigFloat acc = BigFloat::from_long(0, working);
            for (std::size_t t = 0; t < n; ++t)
                acc += S[row][t] * inv[t][j];
            l1 += abs(acc);
            r.phi[row][j] = std::move(acc);
        }
        r.value = max(r.value, l1);
    }
    return r;
}

}  // namespace sgon
