#include "sgon/errors.hpp"
#include "sgon/sparse.hpp"

#include <algorithm>
#include <cmath>

namespace sgon {

namespace {

const BigFloat& slack_factor(int digits) {
    thread_local int cached = -1;
    thread_local BigFloat f;
    if (cached != digits) {
        f = BigFloat::from_long(1, digits) + pow10(-15, digits);
        cached = digits;
    }
    return f;
}

// I of size r from [0, n), lexicographic, skipping prefixes with sum d >= n
void choose(const RowDecomposition& dec, std::size_t n, std::size_t r, std::size_t start,
            std::vector<std::size_t>& cur, std::size_t partial, std::vector<std::vector<std::size_t>>& out) {
    if (partial >= n)
        return;
    if (cur.size() == r) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
        cur.push_back(i);
        choose(dec, n, r, i + 1, cur, partial + dec.d(i), out);
        cur.pop_back();
    }
}

BigFloat product(const std::vector<BigFloat>& v, int digits) {
    BigFloat p = BigFloat::from_long(1, digits);
    for (const auto& x : v)
        p *= x;
    return p;
}

}  // namespace

BigFloat sparse_bound(const LatticeBasis& A, std::size_t d_I, const BigFloat& mu, int digits) {
    const long n = static_cast<long>(A.n());
    BigFloat root_n = sqrt(BigFloat::from_long(n, digits));
    return pow(root_n, 2 * n - static_cast<long>(d_I)) * pow(height(A, digits), n) *
           pow(mu, static_cast<long>(d_I));
}

std::vector<SparseReport> find_sparse(const LatticeBasis& A, std::size_t k, int digits) {
    const std::size_t n = A.n();
    if (k < 1 || k >= n)
        fail(ErrorKind::InvalidArgument, "k must lie in [1, " + std::to_string(n - 1) + "]");
    RowDecomposition dec = row_decompose(A);
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> cur;
    choose(dec, n, n - k, 0, cur, 0, sets);

    std::vector<SparseReport> out;
    if (sets.empty())
        return out;
    const BigFloat mu = mu_estimate(A, digits).value;
    for (const auto& I : sets) {
        SparseReport r;
        r.I = I;
        r.d_I = dec.d_of(I);
        r.ell = n - r.d_I;
        ReducedKernel K = reduce_kernel_basis(integer_kernel(dec.F_rows(I)));
        if (K.basis.dimension() < r.ell)
            fail(ErrorKind::Internal, "kernel smaller than n - d_I");
        for (std::size_t t = 0; t < r.ell; ++t) {
            IntVector y = K.basis.vectors[t];
            SymVector x = A.apply(y);
            if (zero_norm(x) > k)
                fail(ErrorKind::Internal, "kernel vector is not " + std::to_string(k) + "-sparse");
            r.x_norms.push_back(sup_norm(x, digits));
            r.y.push_back(std::move(y));
            r.x.push_back(std::move(x));
        }
        r.lhs = product(r.x_norms, digits);
        r.bound = sparse_bound(A, r.d_I, mu, digits);
        r.bound_satisfied = r.lhs <= r.bound * slack_factor(digits);
        out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), [](const SparseReport& a, const SparseReport& b) {
        if (a.d_I != b.d_I)
            return a.d_I < b.d_I;
        return a.I < b.I;
    });
    return out;
}

bool verify_sparse_report(const LatticeBasis& A, const SparseReport& report, int digits) {
    if (report.ell == 0)
        return true;
    const int twice = 2 * digits;
    std::vector<BigFloat> norms;
    for (const auto& y : report.y) {
        SymVector x = A.apply(y);
        if (!(x == report.x[norms.size()]))
            return false;
        norms.push_back(sup_norm(x, twice));
    }
    BigFloat lhs = product(norms, twice);
    BigFloat rhs = sparse_bound(A, report.d_I, mu_estimate(A, twice).value, twice);
    return lhs <= rhs * slack_factor(twice);
}

RectangularSublattice rectangular_sublattice(const LatticeBasis& A, int digits) {
    const std::size_t n = A.n();
    RowDecomposition dec = row_decompose(A);
    if (dec.total() != n)
        fail(ErrorKind::NotAxisAlignedVR,
             "rational dimension " + std::to_string(dec.total()) + " exceeds n = " + std::to_string(n));
    AdjugateDet ad = adjugate_det(dec.F);
    RectangularSublattice r;
    r.adj = ad.adj;
    r.det_F = ad.det;
    for (std::size_t i = 0; i < n; ++i) {
        SymVector row;
        for (std::size_t j = 0; j < n; ++j) {
            SymReal s(A.basis());
            for (std::size_t t = 0; t < n; ++t)
                if (ad.adj(t, j) != 0)
                    s += A(i, t) * Rational(ad.adj(t, j));
            row.push_back(std::move(s));
        }
        r.B.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool ok = i == j ? r.B[i][j] == dec.rows[i][0].alpha * Rational(ad.det) : r.B[i][j].is_zero();
            if (!ok)
                fail(ErrorKind::Internal, "A adj(F) is not det(F) diag(alpha)");
        }
    Integer abs_det = abs(ad.det);
    mpz_pow_ui(r.index.get_mpz_t(), abs_det.get_mpz_t(), static_cast<unsigned long>(n - 1));

    const BigFloat det_L = abs(numeric_determinant(numeric_matrix(A, digits)));
    const BigFloat nu_L = nu(A, digits).value;
    r.numeric_index = pow(det_L / nu_L, static_cast<long>(n - 1));
    BigFloat exact = BigFloat::from_integer(r.index, digits);
    r.cross_check = abs(r.numeric_index - exact) <= exact * pow10(-20, digits);
    return r;
}

SparseMinima sparse_minima_oracle(const LatticeBasis& A, std::size_t k, const BigFloat& radius,
                                  std::size_t node_budget, int digits) {
    const std::size_t n = A.n();
    if (n > kMinimaDimensionCap)
        fail(ErrorKind::DimensionCapExceeded,
             "n = " + std::to_string(n) + " exceeds " + std::to_string(kMinimaDimensionCap));
    if (k < 1 || k > n)
        fail(ErrorKind::InvalidArgument, "k must lie in [1, " + std::to_string(n) + "]");
    if (radius.sign() <= 0)
        fail(ErrorKind::InvalidArgument, "radius must be positive");

    BigMatrix inv = numeric_inverse(numeric_matrix(A, digits));
    BigFloat inv_norm = BigFloat::from_long(0, digits);
    for (const auto& row : inv) {
        BigFloat s = BigFloat::from_long(0, digits);
        for (const auto& v : row)
            s += abs(v);
        inv_norm = max(inv_norm, s);
    }
    SparseMinima out;
    out.box = (radius * BigFloat::from_long(static_cast<long>(n), digits) * inv_norm).ceil();
    {
        Integer side = 2 * out.box + 1;
        Integer total;
        mpz_pow_ui(total.get_mpz_t(), side.get_mpz_t(), static_cast<unsigned long>(n));
        if (total > Integer(static_cast<unsigned long>(node_budget)))
            fail(ErrorKind::BoxTooLarge, "box |y| <= " + out.box.get_str() + " has " + total.get_str() +
                                             " points, budget " + std::to_string(node_budget));
        out.nodes = total.get_ui();
    }
    const long Y = out.box.get_si();

    // integer equations: row i of A y vanishes iff every equation of row i does
    struct Eq {
        std::size_t row;
        std::vector<__int128> c;
    };
    std::vector<Eq> eqs;
    const std::size_t m = A.basis()->size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < m; ++s) {
            std::vector<Rational> coeffs;
            for (std::size_t j = 0; j < n; ++j)
                coeffs.push_back(A(i, j).coeff(s));
            if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; }))
                continue;
            Integer den = common_denominator(coeffs);
            Eq e{i, {}};
            for (auto& q : coeffs) {
                Integer z = Rational(q * den).get_num();
                if (!z.fits_slong_p() || abs(z) * (Y + 1) * static_cast<long>(n) > Integer(1) << 90)
                    fail(ErrorKind::BoxTooLarge, "coefficients too large for box enumeration");
                e.c.push_back(z.get_si());
            }
            eqs.push_back(std::move(e));
        }

    std::vector<std::vector<long double>> An(n, std::vector<long double>(n));
    {
        BigMatrix M = numeric_matrix(A, digits);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                An[i][j] = static_cast<long double>(M[i][j].to_double());
    }
    const long double r_ld = static_cast<long double>(radius.to_double());
    const long double r_loose = r_ld * (1.0L + 1e-9L) + 1e-9L;

    // odometer with incremental sums, last coordinate fastest
    std::vector<long> y(n, -Y);
    std::vector<__int128> eq_val(eqs.size(), 0);
    std::vector<long double> xv(n, 0.0L);
    auto add_column = [&](std::size_t j, long delta) {
        for (std::size_t e = 0; e < eqs.size(); ++e)
            eq_val[e] += eqs[e].c[j] * static_cast<__int128>(delta);
        for (std::size_t i = 0; i < n; ++i)
            xv[i] += An[i][j] * static_cast<long double>(delta);
    };
    for (std::size_t j = 0; j < n; ++j)
        add_column(j, -Y);

    std::vector<IntVector> candidates;
    std::vector<char> row_nonzero(n);
    while (true) {
        // only one of y, -y: first nonzero entry positive
        std::size_t lead = 0;
        while (lead < n && y[lead] == 0)
            ++lead;
        if (lead < n && y[lead] > 0) {
            std::fill(row_nonzero.begin(), row_nonzero.end(), 0);
            for (std::size_t e = 0; e < eqs.size(); ++e)
                if (eq_val[e] != 0)
                    row_nonzero[eqs[e].row] = 1;
            std::size_t nz = static_cast<std::size_t>(std::count(row_nonzero.begin(), row_nonzero.end(), 1));
            if (nz <= k) {
                bool inside = true;
                for (std::size_t i = 0; i < n && inside; ++i)
                    inside = !row_nonzero[i] || std::fabs(xv[i]) <= r_loose;
                if (inside)
                    candidates.emplace_back(y.begin(), y.end());
            }
        }
        std::size_t j = n;
        while (j > 0 && y[j - 1] == Y) {
            add_column(j - 1, -2 * Y);
            y[j - 1] = -Y;
            --j;
        }
        if (j == 0)
            break;
        ++y[j - 1];
        add_column(j - 1, 1);
    }

    struct Scored {
        BigFloat value;
        IntVector y;
        SymVector x;
    };
    std::vector<Scored> scored;
    for (auto& c : candidates) {
        SymVector x = A.apply(c);
        BigFloat v = sup_norm(x, digits);
        if (v <= radius)
            scored.push_back({std::move(v), std::move(c), std::move(x)});
    }
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.value != b.value)
            return a.value < b.value;
        return lex_less(a.y, b.y);
    });
    RatMatrix chosen;
    for (auto& s : scored) {
        if (out.minima.size() == n)
            break;
        RatMatrix trial = chosen;
        trial.emplace_back(s.y.begin(), s.y.end());
        if (rank_q(trial) == trial.size()) {
            chosen = std::move(trial);
            out.minima.push_back({std::move(s.value), std::move(s.y), std::move(s.x)});
        }
    }
    SparsityLevels levels = sparsity_levels(A);
    out.sparse_rank = static_cast<std::size_t>(
        std::count_if(levels.s.begin(), levels.s.end(), [k](std::size_t s) { return s <= k; }));
    out.incomplete = out.minima.size() < n;
    return out;
}

}  // namespace sgon
