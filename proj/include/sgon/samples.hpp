#pragma once

#include "sgon/lattice.hpp"
#include "sgon/planar.hpp"

#include <cstddef>
#include <random>

namespace sgon {

using Rng = std::mt19937_64;

/// Rational num/den with |num| <= max_num and 1 <= den <= max_den.
Rational random_rational(Rng& rng, long max_num, long max_den);

/// a, b with rational and surd parts of denominator <= 20.
Tau random_tau(Rng& rng, long D);
/// Virtually rectangular with irrational a: a - b t = r, a + b/t = s.
Tau random_vr_tau(Rng& rng, long D);
/// a rational and b^2 rational.
Tau random_cm_tau(Rng& rng, long D);

/// Exact points of the fundamental domain on one boundary piece or strictly
/// inside, away from the boundary.
Tau random_boundary_tau(Rng& rng, Segment segment, long D);

/// Mixed rational and symbolic entries over the default symbol table.
/// Roughly half are built as diag(alpha) F, so that d(L) = n.
LatticeBasis random_lattice(Rng& rng, std::size_t n);

}  // namespace sgon
