#include "oracles.hpp"

#include "sgon/errors.hpp"
#include "sgon/planar.hpp"
#include "sgon/samples.hpp"
#include "sgon/verify.hpp"

#include <doctest.h>

using namespace sgon;
using oracle::load_tau;

namespace {

QuadNum q(const char* p, long D, const char* s = "0") { return QuadNum(parse_rational(p), parse_rational(s), D); }

Tau tau(const char* a, const char* b, long D = 1) { return Tau(q(a, D), q(b, D)); }

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

constexpr long kFields[] = {2, 3, 5, 7};

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Internal;
}

long double j_over_1728(const JInvariant& j) { return std::stold(j.re.to_string(30)) / 1728.0L; }

}  // namespace

TEST_CASE("tau must lie in the upper half plane of one field") {
    CHECK(kind_of([] { tau("0", "-1"); }) == ErrorKind::NotUpperHalfPlane);
    CHECK(kind_of([] { tau("0", "0"); }) == ErrorKind::NotUpperHalfPlane);
    CHECK(kind_of([] { Tau(q("0", 2, "1"), q("0", 3, "1")); }) == ErrorKind::UnsupportedFieldTower);
}

TEST_CASE("reduction examples") {
    ReductionResult r = reduce_to_fundamental(tau("5/2", "1"));
    CHECK(r.tau == tau("1/2", "1"));
    CHECK(r.transform == Sl2{1, -2, 0, 1});

    ReductionResult half = reduce_to_fundamental(tau("1/2", "1/2"));
    CHECK(half.tau == tau("0", "1"));
    CHECK(mobius(half.transform, tau("1/2", "1/2")) == tau("0", "1"));

    CHECK(reduce_to_fundamental(tau("0", "1/2")).tau == tau("0", "2"));
    CHECK(reduce_to_fundamental(tau("-1/2", "1")).tau == tau("1/2", "1"));
}

TEST_CASE("reduction lands in the domain, matches its transform, and is idempotent") {
    Rng rng(201);
    for (int trial = 0; trial < 400; ++trial) {
        const long D = kFields[uniform(rng, 0, 3)];
        Tau t = random_tau(rng, D);
        if (trial % 3 == 0)
            t = mobius(Sl2{1, uniform(rng, -9, 9), 0, 1}, mobius(Sl2{0, -1, 1, 0}, t));
        ReductionResult r = reduce_to_fundamental(t);
        CHECK(in_fundamental_domain(r.tau));
        CHECK(r.transform.det() == 1);
        CHECK(mobius(r.transform, t) == r.tau);
        ReductionResult again = reduce_to_fundamental(r.tau);
        CHECK(again.tau == r.tau);
        CHECK(again.steps == 0);
    }
}

TEST_CASE("region classification") {
    RegionInfo i = region_classify(tau("0", "1"));
    CHECK(i.segment == Segment::ImaginaryAxis);
    CHECK(i.imaginary_axis);
    CHECK(i.unit_arc);
    CHECK(i.wr);
    CHECK(i.rectangular);
    CHECK(i.j_real);

    RegionInfo corner = region_classify(Tau(q("1/2", 3), q("0", 3, "1/2")));
    CHECK(corner.left_edge);
    CHECK(corner.unit_arc);
    CHECK(corner.segment == Segment::LeftEdge);

    RegionInfo inner = region_classify(tau("1/3", "2"));
    CHECK(inner.segment == Segment::Interior);
    CHECK_FALSE(inner.j_real);

    CHECK(kind_of([] { region_classify(tau("0", "1/2")); }) == ErrorKind::NotReduced);
}

TEST_CASE("vr_decide examples") {
    VRCertificate half = vr_decide(load_tau("tau_half"));
    CHECK(half.kind == VRKind::RationalA);
    CHECK(half.q == 2);
    CHECK(half.delta == 2);

    VRCertificate diag = vr_decide(load_tau("tau_sqrt2_diagonal"));
    REQUIRE(diag.kind == VRKind::IrrationalA);
    CHECK(diag.t == q("1", 2, "1"));
    CHECK(diag.r == -1);
    CHECK(diag.s == 1);
    CHECK(diag.v == 1);
    CHECK(diag.w == 1);
    CHECK(diag.delta == 2);

    VRCertificate no = vr_decide(load_tau("tau_sqrt2_plus_i"));
    CHECK(no.kind == VRKind::NotVR);
    CHECK(no.discriminant == 12);
}

TEST_CASE("isogeny degree examples") {
    Tau t = load_tau("tau_sqrt2_diagonal");
    IsogenyDegree d = isogeny_degree(t, vr_decide(t));
    CHECK(d.delta == 2);
    CHECK(d.constructive_index == 2);
    CHECK(d.match);

    Tau s = load_tau("tau_sqrt2_sqrt2");
    VRCertificate c = vr_decide(s);
    CHECK(c.t == q("1", 2, "1"));
    CHECK(c.r == -2);
    CHECK(c.s == 2);
    IsogenyDegree ds = isogeny_degree(s, c);
    CHECK(ds.delta == 4);
    CHECK(ds.match);

    Tau r = tau("3/7", "5/3");
    IsogenyDegree dr = isogeny_degree(r, vr_decide(r));
    CHECK(dr.delta == 7);
    CHECK(dr.constructive_index == 7);

    CHECK(kind_of([&] { isogeny_degree(t, vr_decide(load_tau("tau_sqrt2_plus_i"))); }) ==
          ErrorKind::CertificateInvalid);
    VRCertificate forged = vr_decide(t);
    forged.r = 5;
    CHECK(kind_of([&] { isogeny_degree(t, forged); }) == ErrorKind::CertificateInvalid);
}

TEST_CASE("certificates are sound on random VR points") {
    Rng rng(203);
    for (int trial = 0; trial < 300; ++trial) {
        const long D = kFields[uniform(rng, 0, 3)];
        Tau t = random_vr_tau(rng, D);
        VRCertificate c = vr_decide(t);
        REQUIRE(c.kind == VRKind::IrrationalA);
        CHECK(t.a() - t.b() * c.t == QuadNum::rational(c.r, D));
        CHECK(t.a() + t.b() / c.t == QuadNum::rational(c.s, D));
        CHECK(c.v == c.r.get_den());
        CHECK(c.w == c.s.get_den());
        IsogenyDegree d = isogeny_degree(t, c);
        CHECK(d.match);
        CHECK(d.delta > 0);
    }
}

TEST_CASE("geodesic examples") {
    GeodesicClass g = geodesic_classify(load_tau("tau_sqrt2_diagonal"));
    CHECK(g.shape == GeodesicShape::Semicircle);
    CHECK(g.p == 0);
    CHECK(g.q == -1);
    CHECK(g.closed_at_infinity);
    CHECK(g.endpoints == std::vector<Rational>{-1, 1});

    GeodesicClass n = geodesic_classify(load_tau("tau_sqrt2_plus_i"));
    CHECK(n.p == 0);
    CHECK(n.q == -3);
    CHECK_FALSE(n.closed_at_infinity);

    GeodesicClass v = geodesic_classify(tau("1/3", "5"));
    CHECK(v.shape == GeodesicShape::Vertical);
    CHECK(v.x == q("1/3", 1));
    CHECK(v.closed_at_infinity);
}

TEST_CASE("semicircles pass through tau") {
    Rng rng(205);
    for (int trial = 0; trial < 200; ++trial) {
        const long D = kFields[uniform(rng, 0, 3)];
        Tau t = random_tau(rng, D);
        GeodesicClass g = geodesic_classify(t);
        if (g.shape == GeodesicShape::Vertical) {
            CHECK(t.a().is_rational());
            continue;
        }
        CHECK(t.norm() - QuadNum::rational(g.p, D) * t.a() + QuadNum::rational(g.q, D) == QuadNum(D));
        CHECK(g.closed_at_infinity == is_rational_square(Rational(g.p * g.p - 4 * g.q)));
    }
}

TEST_CASE("VR agrees with closed geodesics on 500 random points") {
    BatteryResult r = battery_vr_geodesic(207, 500);
    CHECK(r.violations == 0);
    for (const auto& f : r.failures)
        MESSAGE(f);
}

TEST_CASE("CM examples") {
    CMReport cm = cm_analyze(Tau(q("0", 2), q("0", 2, "1")));
    CHECK(cm.is_cm);
    bool found = false;
    for (const auto& s : cm.t_family)
        if (s.t == q("0", 2, "1")) {
            found = true;
            CHECK(s.a_minus_bt == q("-2", 2));
            CHECK(s.a_plus_b_over_t == q("1", 2));
            CHECK(s.verified);
        }
    CHECK(found);

    CMReport non = cm_analyze(load_tau("tau_sqrt2_diagonal"));
    CHECK_FALSE(non.is_cm);
    REQUIRE(non.root_product.has_value());
    CHECK(*non.root_product == q("-1", 2));
    CHECK(non.uniqueness_verified == true);

    CHECK(cm_analyze(tau("1/3", "2")).is_cm);
}

TEST_CASE("CM families and uniqueness on random samples") {
    BatteryResult r = battery_cm(209, 50);
    CHECK(r.violations == 0);
    for (const auto& f : r.failures)
        MESSAGE(f);
}

TEST_CASE("j-invariant golden values") {
    JInvariant i = j_invariant(load_tau("tau_i"), 10, 30);
    CHECK(abs(i.re - BigFloat::from_long(1728, 30)) < pow10(-9, 30));
    CHECK(abs(i.im) < pow10(-9, 30));

    JInvariant rho = j_invariant(load_tau("tau_rho"), 20, 30);
    CHECK(rho.reduced == Tau(q("1/2", 3), q("0", 3, "1/2")));
    CHECK(abs(rho.re) < pow10(-9, 30));
    CHECK(abs(rho.im) < pow10(-9, 30));

    JInvariant two = j_invariant(load_tau("tau_2i"), 15, 50);
    CHECK(abs(two.re - BigFloat::from_long(287496, 50)) < pow10(-6, 50));
    const auto oracle_two = oracle::eisenstein_j(0, 2);
    CHECK(std::abs(oracle_two.real() - 287496.0L) < 1e-6L);
}

TEST_CASE("j-invariant argument checks") {
    Tau i = load_tau("tau_i");
    CHECK(kind_of([&] { j_invariant(i, 0, 30); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { j_invariant(i, 10, 8); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { j_invariant(i, kJTableTerms + 1, 30); }) == ErrorKind::TooFewTermsForPrecision);
    CHECK(j_coefficient(1) == 196884);
    CHECK(j_coefficient(2) == 21493760);
    CHECK(j_coefficient(3) == 864299970);
}

TEST_CASE("j-invariant matches the Eisenstein series oracle") {
    Rng rng(211);
    for (int trial = 0; trial < 60; ++trial) {
        const long D = kFields[uniform(rng, 0, 3)];
        Tau t = random_tau(rng, D);
        JInvariant j = j_invariant(t, 20, 30);
        const auto expected = oracle::eisenstein_j(oracle::to_ld(j.reduced.a()), oracle::to_ld(j.reduced.b()));
        const long double scale = std::max(1.0L, std::abs(expected));
        CHECK(std::abs(std::stold(j.re.to_string(30)) - expected.real()) < 1e-12L * scale);
        CHECK(std::abs(std::stold(j.im.to_string(30)) - expected.imag()) < 1e-12L * scale);
    }
}

TEST_CASE("j is real on the boundary, in the segment ranges, and complex inside") {
    Rng rng(213);
    for (Segment seg : {Segment::LeftEdge, Segment::UnitArc, Segment::ImaginaryAxis, Segment::Interior}) {
        for (int trial = 0; trial < 50; ++trial) {
            const long D = kFields[uniform(rng, 0, 3)];
            Tau t = random_boundary_tau(rng, seg, D);
            CAPTURE(t.to_string());
            RegionInfo region = region_classify(t);
            if (seg == Segment::UnitArc)
                CHECK(region.unit_arc);
            else
                CHECK(region.segment == seg);
            JInvariant j = j_invariant(t, 20, 40);
            const long double J = j_over_1728(j);
            if (seg == Segment::Interior) {
                CHECK(abs(j.im) > pow10(-4, 40));
                CHECK_FALSE(region.j_real);
                continue;
            }
            CHECK(abs(j.im) < pow10(-8, 40));
            if (seg == Segment::LeftEdge)
                CHECK(J <= 1e-12L);
            if (seg == Segment::UnitArc) {
                CHECK(J >= -1e-12L);
                CHECK(J <= 1 + 1e-12L);
                CHECK(region.wr);
            }
            if (seg == Segment::ImaginaryAxis) {
                CHECK(J >= 1 - 1e-12L);
                CHECK(region.rectangular);
            }
        }
    }
}
