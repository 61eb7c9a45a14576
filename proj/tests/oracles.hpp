#pragma once

#include "sgon/cli.hpp"
#include "sgon/lattice.hpp"
#include "sgon/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using namespace sgon;

inline std::string fixture(const std::string& name) { return std::string(SGON_FIXTURES) + "/" + name + ".json"; }

inline LatticeBasis load_lattice(const std::string& name) { return parse_lattice_file(fixture(name)); }
inline Tau load_tau(const std::string& name) { return parse_tau_file(fixture(name)); }

/// c0 + sum coeff * symbol, over the default table unless a basis is given.
inline SymReal sym(const Rational& c0, const std::map<std::string, Rational>& terms = {},
                   SymbolBasisPtr basis = SymbolBasis::default_table()) {
    SymReal x = SymReal::constant(basis, c0);
    for (const auto& [name, c] : terms)
        x += SymReal::symbol(basis, *basis->index_of(name), c);
    return x;
}

inline LatticeBasis lattice(std::vector<SymVector> rows) {
    return LatticeBasis::make(SymbolBasis::default_table(), std::move(rows));
}

/// Direct MPFR square root, independent of the stored symbol table.
inline BigFloat root(long v, int digits) { return sqrt(BigFloat::from_long(v, digits)); }

/// x_i = 0 tested through integer equations, one per (coordinate, symbol).
struct ZeroTest {
    std::size_t n = 0;
    std::vector<std::vector<std::vector<std::int64_t>>> eq;  // eq[i][s][j]

    explicit ZeroTest(const LatticeBasis& A) : n(A.n()) {
        const std::size_t m = A.basis()->size();
        eq.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t s = 0; s < m; ++s) {
                std::vector<Rational> c;
                for (std::size_t j = 0; j < n; ++j)
                    c.push_back(A(i, j).coeff(s));
                if (std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; }))
                    continue;
                Integer den = 1;
                for (const auto& q : c)
                    den = lcm(den, Integer(q.get_den()));
                std::vector<std::int64_t> row;
                for (const auto& q : c)
                    row.push_back(Rational(q * den).get_num().get_si());
                eq[i].push_back(std::move(row));
            }
        }
    }

    std::size_t support(const std::vector<std::int64_t>& y) const {
        std::size_t z = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool zero = true;
            for (const auto& row : eq[i]) {
                std::int64_t acc = 0;
                for (std::size_t j = 0; j < n; ++j)
                    acc += row[j] * y[j];
                if (acc != 0) {
                    zero = false;
                    break;
                }
            }
            z += !zero;
        }
        return z;
    }
};

/// Incremental row echelon form modulo the Mersenne prime 2^61 - 1.
class ModEchelon {
  public:
    static constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;

    explicit ModEchelon(std::size_t n) : n_(n) {}

    std::size_t rank() const { return rows_.size(); }

    bool insert(const std::vector<std::int64_t>& y) {
        std::vector<std::uint64_t> v(n_);
        for (std::size_t j = 0; j < n_; ++j)
            v[j] = reduce(y[j]);
        return insert_mod(std::move(v));
    }

    bool insert_mod(std::vector<std::uint64_t> v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p] == 0)
                continue;
            const std::uint64_t f = v[p];
            for (std::size_t j = 0; j < n_; ++j)
                v[j] = sub(v[j], mul(f, rows_[r][j]));
        }
        std::size_t p = 0;
        while (p < n_ && v[p] == 0)
            ++p;
        if (p == n_)
            return false;
        const std::uint64_t inv = power(v[p], kP - 2);
        for (auto& e : v)
            e = mul(e, inv);
        for (auto& row : rows_) {
            const std::uint64_t f = row[p];
            if (f != 0)
                for (std::size_t j = 0; j < n_; ++j)
                    row[j] = sub(row[j], mul(f, v[j]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }

  private:
    static std::uint64_t reduce(std::int64_t x) {
        const __int128 r = static_cast<__int128>(x) % static_cast<__int128>(kP);
        return static_cast<std::uint64_t>(r < 0 ? r + kP : r);
    }
    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kP);
    }
    static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kP - b; }
    static std::uint64_t power(std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1)
                r = mul(r, a);
        return r;
    }

    std::size_t n_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Successive sparsity levels from every integer preimage with |y_j| <= box.
/// Levels that the box cannot certify are reported as 0.
inline std::vector<std::size_t> brute_force_levels(const LatticeBasis& A, std::int64_t box = 10) {
    const std::size_t n = A.n();
    ZeroTest zt(A);
    std::vector<ModEchelon> by_support(n + 1, ModEchelon(n));
    std::vector<std::int64_t> y(n, -box);
    for (;;) {
        std::size_t lead = 0;
        while (lead < n && y[lead] == 0)
            ++lead;
        if (lead < n && y[lead] > 0) {
            const std::size_t z = zt.support(y);
            if (by_support[z].rank() < n)
                by_support[z].insert(y);
        }
        std::size_t j = 0;
        while (j < n && y[j] == box)
            y[j++] = -box;
        if (j == n)
            break;
        ++y[j];
    }
    std::vector<std::size_t> levels(n, 0);
    ModEchelon acc(n);
    for (std::size_t s = 1; s <= n; ++s) {
        for (const auto& row : by_support[s].rows())
            acc.insert_mod(row);
        for (std::size_t i = 0; i < acc.rank(); ++i)
            if (levels[i] == 0)
                levels[i] = s;
    }
    return levels;
}

/// j(tau) = E4^3 / Delta with E4 from divisor sums and Delta = q prod (1 - q^n)^24,
/// in long double.
inline std::complex<long double> eisenstein_j(long double x, long double y, int terms = 60) {
    using C = std::complex<long double>;
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    const C q = std::exp(C(-two_pi * y, two_pi * x));
    C e4 = 1, delta = q, qn = 1;
    for (int k = 1; k <= terms; ++k) {
        qn *= q;
        long double s3 = 0;
        for (int d = 1; d <= k; ++d)
            if (k % d == 0)
                s3 += std::pow(static_cast<long double>(d), 3);
        e4 += 240.0L * s3 * qn;
        delta *= std::pow(C(1) - qn, 24);
    }
    return e4 * e4 * e4 / delta;
}

inline long double to_ld(const QuadNum& x) {
    return std::stold(quad_eval(x, 30).to_string(25));
}

}  // namespace oracle
