#include "sgon/errors.hpp"
#include "sgon/intlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sgon {

namespace {

Rational dot(const RatVector& a, const IntVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Integer round_half_up(const Rational& x) {
    Rational shifted = x + Rational(1, 2);
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return f;
}

struct Gso {
    std::vector<RatVector> mu;
    std::vector<Rational> norms;  // |b*_i|^2
};

Gso gram_schmidt(const std::vector<IntVector>& b) {
    const std::size_t k = b.size();
    Gso g{std::vector<RatVector>(k, RatVector(k)), std::vector<Rational>(k)};
    std::vector<RatVector> star(k);
    for (std::size_t i = 0; i < k; ++i) {
        star[i].assign(b[i].begin(), b[i].end());
        for (std::size_t j = 0; j < i; ++j) {
            g.mu[i][j] = dot(star[j], b[i]) / g.norms[j];
            for (std::size_t t = 0; t < star[i].size(); ++t)
                star[i][t] -= g.mu[i][j] * star[j][t];
        }
        g.norms[i] = dot(star[i], star[i]);
        if (g.norms[i] == 0)
            fail(ErrorKind::Internal, "LLL input vectors are linearly dependent");
    }
    return g;
}

}  // namespace

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Integer sup_norm_product(const std::vector<IntVector>& vectors) {
    Integer p = 1;
    for (const auto& v : vectors)
        p *= sup_norm(v);
    return p;
}

std::vector<IntVector> lll_reduce(std::vector<IntVector> b, const Rational& delta) {
    const std::size_t n = b.size();
    if (n < 2) {
        if (n == 1)
            (void)gram_schmidt(b);
        return b;
    }
    Gso g = gram_schmidt(b);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            Integer q = round_half_up(g.mu[k][jj]);
            if (q == 0)
                continue;
            for (std::size_t t = 0; t < b[k].size(); ++t)
                b[k][t] -= q * b[jj][t];
            g.mu[k][jj] -= q;
            for (std::size_t i = 0; i < jj; ++i)
                g.mu[k][i] -= q * g.mu[jj][i];
        }
        const Rational& m = g.mu[k][k - 1];
        if (g.norms[k] >= (delta - m * m) * g.norms[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            g = gram_schmidt(b);
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return b;
}

ReducedKernel reduce_kernel_basis(const KernelBasis& K, std::optional<BigFloat> target_bound) {
    auto order = [](std::vector<IntVector> vs) {
        for (auto& v : vs)
            normalize_sign(v);
        std::stable_sort(vs.begin(), vs.end(), [](const IntVector& a, const IntVector& b) {
            Integer na = sup_norm(a);
            Integer nb = sup_norm(b);
            if (na != nb)
                return na < nb;
            return lex_less(a, b);
        });
        return vs;
    };
    std::vector<IntVector> original = order(K.vectors);
    std::vector<IntVector> reduced = order(lll_reduce(K.vectors));
    Integer p_orig = sup_norm_product(original);
    Integer p_red = sup_norm_product(reduced);

    ReducedKernel out;
    out.basis.cols = K.cols;
    out.basis.vectors = p_red <= p_orig ? std::move(reduced) : std::move(original);
    out.sup_norm_product = std::min(p_red, p_orig);
    if (target_bound) {
        BigFloat lhs = BigFloat::from_integer(out.sup_norm_product, target_bound->digits());
        out.bound_satisfied = lhs <= *target_bound;
        out.target_bound = std::move(target_bound);
    }
    return out;
}

BigFloat siegel_bound(std::size_t n, const Integer& height, std::size_t rank, int digits) {
    BigFloat base = sqrt(BigFloat::from_long(static_cast<long>(n), digits)) * BigFloat::from_integer(height, digits);
    return pow(base, static_cast<long>(rank));
}

SupNormMinima sup_norm_minima(const std::vector<IntVector>& basis, std::size_t dim, const Integer& radius,
                              std::size_t node_budget) {
    SupNormMinima out;
    out.sup_norm_product = 1;
    if (basis.empty())
        return out;
    const std::vector<IntVector> b = lll_reduce(basis);
    const std::size_t k = b.size();

    // Floating Gram-Schmidt is enough to bound the search; membership in the
    // sup-norm box is decided exactly afterwards.
    std::vector<std::vector<long double>> mu(k, std::vector<long double>(k, 0.0L));
    std::vector<long double> norms(k);
    {
        Gso g = gram_schmidt(b);
        for (std::size_t i = 0; i < k; ++i) {
            norms[i] = static_cast<long double>(g.norms[i].get_d());
            for (std::size_t j = 0; j < i; ++j)
                mu[i][j] = static_cast<long double>(g.mu[i][j].get_d());
        }
    }
    const long double r = static_cast<long double>(radius.get_d());
    const long double bound = r * r * static_cast<long double>(dim) * (1.0L + 1e-9L) + 1e-9L;

    std::vector<IntVector> found;
    std::vector<long> x(k, 0);
    std::vector<long double> partial(k + 1, 0.0L);

    // depth-first over levels k-1 .. 0
    auto recurse = [&](auto&& self, std::size_t level) -> void {
        if (++out.nodes_visited > node_budget)
            fail(ErrorKind::BoxTooLarge, "sup-norm enumeration exceeded " + std::to_string(node_budget) + " nodes");
        long double center = 0.0L;
        for (std::size_t j = level + 1; j < k; ++j)
            center -= static_cast<long double>(x[j]) * mu[j][level];
        long double room = bound - partial[level + 1];
        if (room < 0)
            return;
        long double half = std::sqrt(room / norms[level]);
        long lo = static_cast<long>(std::ceil(center - half - 1e-9L));
        long hi = static_cast<long>(std::floor(center + half + 1e-9L));
        for (long v = lo; v <= hi; ++v) {
            x[level] = v;
            long double d = static_cast<long double>(v) - center;
            partial[level] = partial[level + 1] + d * d * norms[level];
            if (partial[level] > bound)
                continue;
            if (level > 0) {
                self(self, level - 1);
                continue;
            }
            IntVector w(dim);
            bool nonzero = false;
            for (std::size_t i = 0; i < k; ++i) {
                if (x[i] == 0)
                    continue;
                nonzero = true;
                for (std::size_t t = 0; t < dim; ++t)
                    w[t] += b[i][t] * x[i];
            }
            if (!nonzero || sup_norm(w) > radius)
                continue;
            normalize_sign(w);
            found.push_back(std::move(w));
        }
        x[level] = 0;
    };
    recurse(recurse, k - 1);

    std::sort(found.begin(), found.end(), [](const IntVector& a, const IntVector& c) {
        Integer na = sup_norm(a);
        Integer nc = sup_norm(c);
        if (na != nc)
            return na < nc;
        return lex_less(a, c);
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());

    RatMatrix chosen;
    for (auto& v : found) {
        if (out.vectors.size() == k)
            break;
        RatMatrix trial = chosen;
        trial.emplace_back(v.begin(), v.end());
        if (rank_q(trial) == trial.size()) {
            chosen = std::move(trial);
            out.sup_norm_product *= sup_norm(v);
            out.vectors.push_back(v);
        }
    }
    return out;
}

}  // namespace sgon
