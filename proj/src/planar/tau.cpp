#include "sgon/errors.hpp"
#include "sgon/planar.hpp"

namespace sgon {

namespace {

QuadNum lift(const QuadNum& x, long D) {
    if (x.D() == D)
        return x;
    if (!x.is_rational())
        fail(ErrorKind::UnsupportedFieldTower,
             "a and b lie in Q(sqrt " + std::to_string(x.D()) + ") and Q(sqrt " + std::to_string(D) + ")");
    return QuadNum::rational(x.p(), D);
}

long common_field(const QuadNum& a, const QuadNum& b) {
    if (a.D() == b.D())
        return a.D();
    if (a.is_rational())
        return b.D();
    if (b.is_rational())
        return a.D();
    fail(ErrorKind::UnsupportedFieldTower,
         "a and b lie in Q(sqrt " + std::to_string(a.D()) + ") and Q(sqrt " + std::to_string(b.D()) + ")");
}

QuadNum from_int(const Integer& z, long D) { return QuadNum::rational(Rational(z), D); }

const Rational kHalf(1, 2);

}  // namespace

Tau::Tau(QuadNum a, QuadNum b) {
    const long D = common_field(a, b);
    a_ = lift(a, D);
    b_ = lift(b, D);
    if (quad_sign(b_) <= 0)
        fail(ErrorKind::NotUpperHalfPlane, "imaginary part " + b_.to_string() + " is not positive");
}

std::string Tau::to_string() const { return "(" + a_.to_string() + ") + (" + b_.to_string() + ")i"; }

Sl2 operator*(const Sl2& x, const Sl2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Tau mobius(const Sl2& g, const Tau& tau) {
    const long D = tau.D();
    const QuadNum& a = tau.a();
    const QuadNum& b = tau.b();
    QuadNum num_re = from_int(g.a, D) * a + from_int(g.b, D);
    QuadNum den_re = from_int(g.c, D) * a + from_int(g.d, D);
    QuadNum b2 = b * b;
    QuadNum N = den_re * den_re + b2 * Rational(g.c * g.c);
    QuadNum re = (num_re * den_re + b2 * Rational(g.a * g.c)) / N;
    QuadNum im = b / N;
    if (g.det() != 1)
        im *= Rational(g.det());
    return Tau(re, im);
}

bool in_fundamental_domain(const Tau& tau) {
    const QuadNum half = QuadNum::rational(kHalf, tau.D());
    const QuadNum one = QuadNum::rational(1, tau.D());
    if (quad_compare(tau.a(), -half) <= 0 || quad_compare(tau.a(), half) > 0)
        return false;
    int c = quad_compare(tau.norm(), one);
    if (c < 0)
        return false;
    return c > 0 || quad_sign(tau.a()) >= 0;
}

ReductionResult reduce_to_fundamental(const Tau& input) {
    const long D = input.D();
    const QuadNum half = QuadNum::rational(kHalf, D);
    const QuadNum one = QuadNum::rational(1, D);
    const Sl2 S{0, -1, 1, 0};
    ReductionResult r{input, Sl2{}, 0};
    auto translate = [&](const Integer& m) {
        r.tau = Tau(r.tau.a() - from_int(m, D), r.tau.b());
        r.transform = Sl2{1, -m, 0, 1} * r.transform;
        ++r.steps;
    };
    auto invert = [&] {
        r.tau = mobius(S, r.tau);
        r.transform = S * r.transform;
        ++r.steps;
    };
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 100000)
            fail(ErrorKind::Internal, "reduction did not terminate");
        const Integer m = -quad_floor(half - r.tau.a());
        if (m != 0)
            translate(m);
        if (quad_compare(r.tau.norm(), one) < 0)
            invert();
        else
            break;
    }
    if (r.tau.a() == -half)
        translate(-1);
    if (quad_compare(r.tau.norm(), one) == 0 && quad_sign(r.tau.a()) < 0)
        invert();
    if (!in_fundamental_domain(r.tau) || !(mobius(r.transform, input) == r.tau))
        fail(ErrorKind::Internal, "reduction left the fundamental domain");
    return r;
}

std::string to_string(Segment s) {
    switch (s) {
    case Segment::LeftEdge:
        return "LeftEdge";
    case Segment::UnitArc:
        return "UnitArc";
    case Segment::ImaginaryAxis:
        return "ImaginaryAxis";
    case Segment::Interior:
        return "Interior";
    }
    return "Interior";
}

RegionInfo region_classify(const Tau& tau) {
    if (!in_fundamental_domain(tau))
        fail(ErrorKind::NotReduced, tau.to_string() + " is outside the fundamental domain");
    const long D = tau.D();
    RegionInfo r;
    QuadNum b2 = tau.b() * tau.b();
    r.left_edge = tau.a() == QuadNum::rational(kHalf, D) && quad_compare(b2, QuadNum::rational(Rational(3, 4), D)) >= 0;
    r.unit_arc = tau.norm() == QuadNum::rational(1, D);
    r.imaginary_axis = tau.a().is_zero();
    if (r.imaginary_axis)
        r.segment = Segment::ImaginaryAxis;
    else if (r.left_edge)
        r.segment = Segment::LeftEdge;
    else if (r.unit_arc)
        r.segment = Segment::UnitArc;
    r.wr = r.unit_arc;
    r.rectangular = r.imaginary_axis;
    r.j_real = r.left_edge || r.unit_arc || r.imaginary_axis;
    return r;
}

}  // namespace sgon
