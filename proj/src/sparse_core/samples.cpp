#include "sgon/errors.hpp"
#include "sgon/samples.hpp"

namespace sgon {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

SymReal random_scalar(Rng& rng, const SymbolBasisPtr& basis, bool allow_zero) {
    for (;;) {
        SymReal x(basis);
        const long terms = uniform(rng, 0, 2);
        for (long t = 0; t < terms || (!allow_zero && x.is_zero()); ++t) {
            std::size_t sym = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(basis->size()) - 1));
            x += SymReal::symbol(basis, sym, random_rational(rng, 5, 3));
        }
        if (allow_zero || !x.is_zero())
            return x;
    }
}

// one irrational direction: c * symbol
SymReal random_direction(Rng& rng, const SymbolBasisPtr& basis) {
    Rational c;
    do
        c = random_rational(rng, 4, 3);
    while (c == 0);
    std::size_t sym = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(basis->size()) - 1));
    return SymReal::symbol(basis, sym, c);
}

}  // namespace

LatticeBasis random_lattice(Rng& rng, std::size_t n) {
    const SymbolBasisPtr basis = SymbolBasis::default_table();
    for (;;) {
        std::vector<SymVector> rows(n);
        const long kind = uniform(rng, 0, 3);
        for (std::size_t i = 0; i < n; ++i) {
            // kinds 0, 1: every row one-dimensional; 2: some rows; 3: generic
            bool aligned = kind <= 1 || (kind == 2 && uniform(rng, 0, 2) != 0);
            if (aligned) {
                SymReal alpha = random_direction(rng, basis);
                for (std::size_t j = 0; j < n; ++j)
                    rows[i].push_back(alpha * Rational(uniform(rng, -3, 3)));
            } else {
                for (std::size_t j = 0; j < n; ++j)
                    rows[i].push_back(uniform(rng, 0, 1) ? SymReal::constant(basis, uniform(rng, -5, 5))
                                                         : random_scalar(rng, basis, true));
            }
        }
        try {
            return LatticeBasis::make(basis, std::move(rows));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularBasis && e.kind() != ErrorKind::AmbiguousSign)
                throw;
        }
    }
}

}  // namespace sgon
