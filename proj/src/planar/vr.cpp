#include "sgon/errors.hpp"
#include "sgon/planar.hpp"

#include <array>

namespace sgon {

namespace {

Integer denominator(const Rational& r) { return r.get_den(); }

QuadNum rat(const Rational& r, long D) { return QuadNum::rational(r, D); }

Rational require_rational(const QuadNum& x, const std::string& what) {
    if (!x.is_rational())
        fail(ErrorKind::CertificateInvalid, what + " = " + x.to_string() + " is not rational");
    return x.p();
}

struct Root {
    Rational r;
    QuadNum t;
    Rational s;
};

Root root_from_u(const Tau& tau, const Rational& u) {
    const long D = tau.D();
    Rational r = tau.a().p() - u;
    QuadNum t = (tau.a() - rat(r, D)) / tau.b();
    QuadNum s = tau.a() + tau.b() / t;
    return {r, t, require_rational(s, "a + b/t")};
}

}  // namespace

std::string to_string(VRKind k) {
    switch (k) {
    case VRKind::RationalA:
        return "RationalA";
    case VRKind::IrrationalA:
        return "IrrationalA";
    case VRKind::NotVR:
        return "NotVR";
    }
    return "NotVR";
}

VRCertificate vr_decide(const Tau& tau) {
    VRCertificate c;
    const long D = tau.D();
    const QuadNum& a = tau.a();
    if (a.is_rational()) {
        c.kind = VRKind::RationalA;
        c.q = denominator(a.p());
        c.delta = Rational(c.q);
        return c;
    }
    // a1 u^2 + B1 u - a1 (a1^2 D + B0) = 0 with u = a0 - r
    const Rational& a1 = a.q();
    const QuadNum b2 = tau.b() * tau.b();
    const Rational& B0 = b2.p();
    const Rational& B1 = b2.q();
    const Rational C = a1 * (a1 * a1 * D + B0);
    c.discriminant = B1 * B1 + 4 * a1 * C;
    Rational root;
    if (!is_rational_square(c.discriminant, &root)) {
        c.kind = VRKind::NotVR;
        return c;
    }
    Root x = root_from_u(tau, (-B1 + root) / (2 * a1));
    Root y = root_from_u(tau, (-B1 - root) / (2 * a1));
    // smaller |r| first, then t > 0
    bool swap = abs(y.r) < abs(x.r) || (abs(y.r) == abs(x.r) && quad_sign(x.t) < 0 && quad_sign(y.t) > 0);
    if (swap)
        std::swap(x, y);
    c.kind = VRKind::IrrationalA;
    c.r = x.r;
    c.t = x.t;
    c.s = x.s;
    c.v = denominator(c.r);
    c.w = denominator(c.s);
    c.r_other = y.r;
    c.t_other = y.t;
    QuadNum t2p1 = c.t * c.t + rat(1, D);
    QuadNum delta = quad_abs(tau.b()) * rat(Rational(c.v * c.w), D) * t2p1 / quad_abs(c.t);
    c.delta = require_rational(delta, "|b| v w (t^2 + 1) / |t|");
    if (!(a - tau.b() * c.t == rat(c.r, D)))
        fail(ErrorKind::Internal, "a - b t differs from r");
    return c;
}

IsogenyDegree isogeny_degree(const Tau& tau, const VRCertificate& cert) {
    const long D = tau.D();
    IsogenyDegree out;
    switch (cert.kind) {
    case VRKind::NotVR:
        fail(ErrorKind::CertificateInvalid, "no isogeny degree for a lattice that is not virtually rectangular");
    case VRKind::RationalA: {
        if (!tau.a().is_rational() || denominator(tau.a().p()) != cert.q)
            fail(ErrorKind::CertificateInvalid, "a is not rational with denominator " + cert.q.get_str());
        out.delta = Rational(cert.q);
        // Z + Z tau has basis (1, 0), (a, b); the sublattice is spanned by (1, 0) and (0, q b)
        out.det_lattice = tau.b();
        out.det_sublattice = tau.b() * Rational(cert.q);
        break;
    }
    case VRKind::IrrationalA: {
        const QuadNum& t = cert.t;
        if (t.is_zero())
            fail(ErrorKind::CertificateInvalid, "t = 0");
        if (!(tau.a() - tau.b() * t == rat(cert.r, D)))
            fail(ErrorKind::CertificateInvalid, "a - b t != r");
        Rational s = require_rational(tau.a() + tau.b() / t, "a + b/t");
        if (s != cert.s || denominator(s) != cert.w || denominator(cert.r) != cert.v)
            fail(ErrorKind::CertificateInvalid, "certificate denominators do not match");
        QuadNum t2p1 = t * t + rat(1, D);
        out.delta = require_rational(quad_abs(tau.b()) * rat(Rational(cert.v * cert.w), D) * t2p1 / quad_abs(t),
                                     "|b| v w (t^2 + 1) / |t|");
        if (out.delta != cert.delta)
            fail(ErrorKind::CertificateInvalid, "stated delta differs from the exact evaluation");
        // rotated lattice up to scale: columns (1, t) and (r, t s)
        const Integer u = cert.r.get_num();
        const Integer qn = s.get_num();
        out.det_lattice = quad_abs(t * rat(s, D) - t * rat(cert.r, D));
        // orthogonal vectors: -u c1 + v c2 = (0, t (v s - u)), -qn c1 + w c2 = (w r - qn, 0)
        QuadNum vert = t * rat(Rational(cert.v) * s - Rational(u), D);
        Rational horiz = Rational(cert.w) * cert.r - Rational(qn);
        out.det_sublattice = quad_abs(vert * horiz);
        break;
    }
    }
    out.constructive_index = require_rational(out.det_sublattice / out.det_lattice, "det R / det L");
    out.match = out.constructive_index == out.delta;
    return out;
}

GeodesicClass geodesic_classify(const Tau& tau) {
    GeodesicClass g;
    const QuadNum& a = tau.a();
    if (a.is_rational()) {
        g.shape = GeodesicShape::Vertical;
        g.x = a;
        g.closed_at_infinity = true;
        g.endpoints.push_back(a.p());
        return g;
    }
    g.shape = GeodesicShape::Semicircle;
    g.x = a;
    const QuadNum S = tau.norm();
    g.p = S.q() / a.q();
    g.q = g.p * a.p() - S.p();
    g.discriminant = g.p * g.p - 4 * g.q;
    Rational root;
    if (is_rational_square(g.discriminant, &root)) {
        g.closed_at_infinity = true;
        g.endpoints = {(g.p - root) / 2, (g.p + root) / 2};
    }
    QuadNum check = S - a * g.p + rat(g.q, tau.D());
    if (!check.is_zero())
        fail(ErrorKind::Internal, "tau is not on the computed semicircle");
    return g;
}

CMReport cm_analyze(const Tau& tau) {
    const long D = tau.D();
    CMReport out;
    const QuadNum b2 = tau.b() * tau.b();
    out.is_cm = tau.a().is_rational() && b2.is_rational();
    if (out.is_cm) {
        const std::array<Rational, 5> qs = {Rational(1), Rational(1, 2), Rational(2), Rational(3), Rational(1, 3)};
        for (const auto& q : qs) {
            TSample s;
            s.q = q;
            s.t = tau.b() * q;
            s.a_minus_bt = tau.a() - tau.b() * s.t;
            s.a_plus_b_over_t = tau.a() + tau.b() / s.t;
            s.verified = s.a_minus_bt.is_rational() && s.a_plus_b_over_t.is_rational();
            out.t_family.push_back(std::move(s));
        }
        return out;
    }
    VRCertificate c = vr_decide(tau);
    if (c.kind == VRKind::IrrationalA && c.t_other) {
        out.root_product = c.t * *c.t_other;
        out.uniqueness_verified = *out.root_product == rat(-1, D);
    }
    return out;
}

}  // namespace sgon
