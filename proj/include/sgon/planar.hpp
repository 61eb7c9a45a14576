#pragma once

#include "sgon/bigfloat.hpp"
#include "sgon/quadnum.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sgon {

/// tau = a + b i with a, b in one real quadratic field and b > 0.
class Tau {
  public:
    /// Throws UnsupportedFieldTower if the fields differ and
    /// NotUpperHalfPlane unless b > 0.
    Tau(QuadNum a, QuadNum b);

    const QuadNum& a() const { return a_; }
    const QuadNum& b() const { return b_; }
    long D() const { return a_.D(); }
    /// |tau|^2
    QuadNum norm() const { return a_ * a_ + b_ * b_; }

    friend bool operator==(const Tau& x, const Tau& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    std::string to_string() const;

  private:
    QuadNum a_;
    QuadNum b_;
};

/// [[a, b], [c, d]] acting by tau -> (a tau + b) / (c tau + d).
struct Sl2 {
    Integer a = 1, b = 0, c = 0, d = 1;

    Integer det() const { return a * d - b * c; }
    friend Sl2 operator*(const Sl2& x, const Sl2& y);
    friend bool operator==(const Sl2&, const Sl2&) = default;
};

Tau mobius(const Sl2& g, const Tau& tau);

/// -1/2 < a <= 1/2, |tau| >= 1, and a >= 0 on the unit circle.
bool in_fundamental_domain(const Tau& tau);

struct ReductionResult {
    Tau tau;
    Sl2 transform;
    std::size_t steps = 0;
};

ReductionResult reduce_to_fundamental(const Tau& tau);

enum class Segment { LeftEdge, UnitArc, ImaginaryAxis, Interior };
std::string to_string(Segment s);

struct RegionInfo {
    bool left_edge = false;
    bool unit_arc = false;
    bool imaginary_axis = false;
    /// ImaginaryAxis, then LeftEdge, then UnitArc take precedence.
    Segment segment = Segment::Interior;
    bool wr = false;
    bool rectangular = false;
    bool j_real = false;
};

/// Throws NotReduced outside the fundamental domain.
RegionInfo region_classify(const Tau& tau);

enum class VRKind { RationalA, IrrationalA, NotVR };
std::string to_string(VRKind k);

struct VRCertificate {
    VRKind kind = VRKind::NotVR;
    /// RationalA: denominator of a.
    Integer q;
    /// IrrationalA: a - b t = r and a + b/t = s.
    Rational r;
    QuadNum t;
    Rational s;
    Integer v;
    Integer w;
    Rational delta;
    /// The other root of the quadratic, when the discriminant is a square.
    std::optional<Rational> r_other;
    std::optional<QuadNum> t_other;
    /// Discriminant of the quadratic in u = a0 - r (IrrationalA and NotVR).
    Rational discriminant;

    bool is_vr() const { return kind != VRKind::NotVR; }
};

VRCertificate vr_decide(const Tau& tau);

struct IsogenyDegree {
    Rational delta;
    Rational constructive_index;
    bool match = false;
    /// Determinants of the unscaled rotated lattice and its orthogonal sublattice.
    QuadNum det_lattice;
    QuadNum det_sublattice;
};

/// Throws CertificateInvalid when cert is not VR or its identities fail.
IsogenyDegree isogeny_degree(const Tau& tau, const VRCertificate& cert);

enum class GeodesicShape { Vertical, Semicircle };

struct GeodesicClass {
    GeodesicShape shape = GeodesicShape::Vertical;
    /// Vertical: x = a.
    QuadNum x;
    /// Semicircle X^2 + Y^2 - p X + q = 0.
    Rational p;
    Rational q;
    Rational discriminant;
    bool closed_at_infinity = false;
    std::vector<Rational> endpoints;
};

GeodesicClass geodesic_classify(const Tau& tau);

struct TSample {
    Rational q;
    QuadNum t;
    QuadNum a_minus_bt;
    QuadNum a_plus_b_over_t;
    bool verified = false;
};

struct CMReport {
    bool is_cm = false;
    std::vector<TSample> t_family;
    /// Non-CM VR with irrational a: t * t' for the two roots.
    std::optional<QuadNum> root_product;
    std::optional<bool> uniqueness_verified;
};

CMReport cm_analyze(const Tau& tau);

struct JInvariant {
    BigFloat re;
    BigFloat im;
    BigFloat error_bound;
    Tau reduced;
    int terms = 0;
};

inline constexpr int kJTableTerms = 20;

/// Coefficient c_k of the q-expansion, 1 <= k <= kJTableTerms + 4.
const Integer& j_coefficient(int k);

/// q-expansion at the reduced representative. Throws
/// TooFewTermsForPrecision when terms exceeds the shipped table.
JInvariant j_invariant(const Tau& tau, int terms, int digits);

}  // namespace sgon
