#include "sgon/quadnum.hpp"

#include "sgon/errors.hpp"

namespace sgon {

bool is_squarefree(long n) {
    if (n <= 0)
        return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % (f * f) == 0)
            return false;
    return true;
}

QuadNum::QuadNum(Rational p, Rational q, long D) : p_(std::move(p)), q_(std::move(q)), D_(D) {
    if (!is_squarefree(D_))
        fail(ErrorKind::InvalidArgument, "field discriminant " + std::to_string(D_) + " is not squarefree");
    p_.canonicalize();
    q_.canonicalize();
    if (D_ == 1) {
        p_ += q_;
        q_ = 0;
    }
}

void QuadNum::require_same_field(const QuadNum& o) const {
    if (D_ == o.D_)
        return;
    fail(ErrorKind::UnsupportedFieldTower,
         "mixing Q(sqrt " + std::to_string(D_) + ") and Q(sqrt " + std::to_string(o.D_) + ")");
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    require_same_field(o);
    p_ += o.p_;
    q_ += o.q_;
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    require_same_field(o);
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    require_same_field(o);
    Rational np = p_ * o.p_ + q_ * o.q_ * D_;
    Rational nq = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(np);
    q_ = std::move(nq);
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
    require_same_field(o);
    return *this *= quad_inv(o);
}

QuadNum& QuadNum::operator*=(const Rational& r) {
    p_ *= r;
    q_ *= r;
    return *this;
}

bool operator==(const QuadNum& a, const QuadNum& b) {
    a.require_same_field(b);
    return a.p_ == b.p_ && a.q_ == b.q_;
}

std::string QuadNum::to_string() const {
    if (q_ == 0)
        return sgon::to_string(p_);
    std::string surd = "sqrt" + std::to_string(D_);
    Rational mag = abs(q_);
    std::string qs = mag == 1 ? surd : "(" + sgon::to_string(mag) + ")*" + surd;
    if (p_ == 0)
        return (q_ < 0 ? "-" : "") + qs;
    return sgon::to_string(p_) + (q_ < 0 ? " - " : " + ") + qs;
}

QuadNum quad_inv(const QuadNum& x) {
    if (x.is_zero())
        fail(ErrorKind::DivisionByZero, "inverse of zero in Q(sqrt " + std::to_string(x.D()) + ")");
    Rational n = x.norm();
    if (n == 0)
        fail(ErrorKind::DegenerateNorm, "zero norm for nonzero " + x.to_string());
    return QuadNum(x.p() / n, -x.q() / n, x.D());
}

int quad_sign(const QuadNum& x) {
    int sp = sgn(x.p());
    int sq = x.D() == 1 ? 0 : sgn(x.q());
    if (sq == 0)
        return sp;
    if (sp == 0 || sp == sq)
        return sq;
    // opposite signs: compare p^2 with q^2 D
    Rational lhs = x.p() * x.p();
    Rational rhs = x.q() * x.q() * x.D();
    if (lhs > rhs)
        return sp;
    if (lhs < rhs)
        return sq;
    return 0;
}

int quad_compare(const QuadNum& x, const QuadNum& y) { return quad_sign(x - y); }

QuadNum quad_abs(const QuadNum& x) { return quad_sign(x) < 0 ? -x : x; }

Integer quad_floor(const QuadNum& x) {
    // floor(p) + floor(q sqrt D) is within 1 of the answer; adjust exactly.
    Integer fp;
    mpz_fdiv_q(fp.get_mpz_t(), x.p().get_num_mpz_t(), x.p().get_den_mpz_t());
    Integer fs = 0;
    if (x.q() != 0) {
        Rational sq = x.q() * x.q() * x.D();
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), sq.get_num_mpz_t(), sq.get_den_mpz_t());
        Integer root;
        mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
        // root = floor(|q| sqrt D); for negative q use -ceil
        if (x.q() > 0)
            fs = root;
        else
            fs = (root * root == sq) ? Integer(-root) : Integer(-root - 1);
    }
    Integer f = fp + fs;
    auto as_quad = [&](const Integer& z) { return QuadNum::rational(Rational(z), x.D()); };
    while (quad_compare(x, as_quad(f)) < 0)
        f -= 1;
    while (quad_compare(x, as_quad(f + 1)) >= 0)
        f += 1;
    return f;
}

BigFloat quad_eval(const QuadNum& x, int digits) {
    BigFloat v = BigFloat::from_rational(x.p(), digits);
    if (x.q() != 0)
        v += BigFloat::from_rational(x.q(), digits) * sqrt(BigFloat::from_long(x.D(), digits));
    return v;
}

}  // namespace sgon
