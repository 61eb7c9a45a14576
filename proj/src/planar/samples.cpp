#include "sgon/errors.hpp"
#include "sgon/samples.hpp"

namespace sgon {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

// rational in [lo, hi] with denominator <= max_den
Rational rational_between(Rng& rng, const Rational& lo, const Rational& hi, long max_den) {
    for (;;) {
        long den = uniform(rng, 1, max_den);
        Rational scaled_lo = lo * den;
        Rational scaled_hi = hi * den;
        Integer first, last;
        mpz_cdiv_q(first.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
        mpz_fdiv_q(last.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
        if (first > last)
            continue;
        long num = uniform(rng, first.get_si(), last.get_si());
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
}

QuadNum rat(const Rational& r, long D) { return QuadNum::rational(r, D); }

// positive element in [lo, hi], either rational or c sqrt D
QuadNum positive_between(Rng& rng, const Rational& lo, const Rational& hi, long D) {
    if (D == 1 || coin(rng))
        return rat(rational_between(rng, lo, hi, 12), D);
    // c^2 D in [lo^2, hi^2]
    for (;;) {
        Rational c = rational_between(rng, Rational(1, 100), hi, 12);
        Rational c2D = c * c * D;
        if (c2D >= lo * lo && c2D <= hi * hi)
            return QuadNum(0, c, D);
    }
}

}  // namespace

Rational random_rational(Rng& rng, long max_num, long max_den) {
    Rational r(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
    r.canonicalize();
    return r;
}

Tau random_tau(Rng& rng, long D) {
    for (;;) {
        Rational a1 = uniform(rng, 0, 4) == 0 ? Rational(0) : random_rational(rng, 20, 20);
        QuadNum a(random_rational(rng, 20, 20), a1, D);
        QuadNum b(random_rational(rng, 40, 20), random_rational(rng, 20, 20), D);
        if (quad_sign(b) > 0)
            return Tau(a, b);
    }
}

Tau random_vr_tau(Rng& rng, long D) {
    if (D == 1)
        fail(ErrorKind::InvalidArgument, "irrational a needs D > 1");
    for (;;) {
        Rational r = random_rational(rng, 10, 6);
        Rational s = random_rational(rng, 10, 6);
        QuadNum t(random_rational(rng, 6, 4), random_rational(rng, 6, 4), D);
        if (r == s || t.is_rational() || t.is_zero())
            continue;
        QuadNum b = rat(s - r, D) * t / (t * t + rat(1, D));
        if (quad_sign(b) < 0) {
            // swapping r and s flips the sign of b
            std::swap(r, s);
            b = -b;
        }
        QuadNum a = rat(r, D) + b * t;
        if (a.is_rational())
            continue;
        return Tau(a, b);
    }
}

Tau random_cm_tau(Rng& rng, long D) {
    for (;;) {
        Rational a = random_rational(rng, 20, 20);
        Rational c = random_rational(rng, 20, 12);
        if (c <= 0)
            continue;
        QuadNum b = (D == 1 || coin(rng)) ? rat(c, D) : QuadNum(0, c, D);
        return Tau(rat(a, D), b);
    }
}

Tau random_boundary_tau(Rng& rng, Segment segment, long D) {
    switch (segment) {
    case Segment::LeftEdge:
        for (;;) {
            QuadNum b = positive_between(rng, Rational(87, 100), Rational(3), D);
            if (quad_compare(b * b, rat(Rational(3, 4), D)) >= 0)
                return Tau(rat(Rational(1, 2), D), b);
        }
    case Segment::ImaginaryAxis:
        return Tau(rat(0, D), positive_between(rng, Rational(1), Rational(3), D));
    case Segment::UnitArc:
        for (;;) {
            // (1 - x^2 + 2 x i)/(1 + x^2) with x = s sqrt D, x^2 in [1/3, 1]
            Rational s = rational_between(rng, Rational(1, 30), Rational(1), 30);
            Rational x2 = s * s * D;
            if (x2 < Rational(1, 3) || x2 > 1)
                continue;
            Rational den = 1 + x2;
            QuadNum a = rat((1 - x2) / den, D);
            QuadNum b = D == 1 ? rat(2 * s / den, D) : QuadNum(0, 2 * s / den, D);
            return Tau(a, b);
        }
    case Segment::Interior:
        for (;;) {
            Rational a = rational_between(rng, Rational(1, 10), Rational(2, 5), 20);
            if (coin(rng))
                a = -a;
            QuadNum b = positive_between(rng, Rational(11, 10), Rational(2), D);
            return Tau(rat(a, D), b);
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown segment");
}

}  // namespace sgon
