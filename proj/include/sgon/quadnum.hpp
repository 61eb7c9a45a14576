#pragma once

#include "sgon/bigfloat.hpp"
#include "sgon/rational.hpp"

#include <string>

namespace sgon {

/// Exact element p + q*sqrt(D) of the real quadratic field Q(sqrt D).
/// D is a squarefree positive integer; D = 1 is the pure rational mode, in
/// which the surd part is folded into p and always zero.
class QuadNum {
  public:
    QuadNum() : QuadNum(1) {}
    explicit QuadNum(long D) : QuadNum(Rational(0), Rational(0), D) {}
    QuadNum(Rational p, Rational q, long D);

    static QuadNum rational(const Rational& p, long D) { return QuadNum(p, 0, D); }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    long D() const { return D_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_rational() const { return q_ == 0; }

    QuadNum conj() const { return QuadNum(p_, -q_, D_); }
    /// Field norm p^2 - q^2 D.
    Rational norm() const { return p_ * p_ - q_ * q_ * D_; }

    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o);
    QuadNum& operator*=(const Rational& r);
    QuadNum operator-() const { return QuadNum(-p_, -q_, D_); }

    friend QuadNum operator+(QuadNum a, const QuadNum& b) { return a += b; }
    friend QuadNum operator-(QuadNum a, const QuadNum& b) { return a -= b; }
    friend QuadNum operator*(QuadNum a, const QuadNum& b) { return a *= b; }
    friend QuadNum operator/(QuadNum a, const QuadNum& b) { return a /= b; }
    friend QuadNum operator*(QuadNum a, const Rational& r) { return a *= r; }
    friend QuadNum operator*(const Rational& r, QuadNum a) { return a *= r; }

    friend bool operator==(const QuadNum& a, const QuadNum& b);

    std::string to_string() const;

  private:
    void require_same_field(const QuadNum& o) const;

    Rational p_;
    Rational q_;
    long D_;
};

/// Multiplicative inverse (p - q sqrt D) / (p^2 - q^2 D). Throws
/// DivisionByZero for x = 0.
QuadNum quad_inv(const QuadNum& x);

/// Exact sign of p + q sqrt D (no floating point).
int quad_sign(const QuadNum& x);

/// -1, 0, +1 as x <, =, > y.
int quad_compare(const QuadNum& x, const QuadNum& y);

QuadNum quad_abs(const QuadNum& x);

/// Exact floor as an integer.
Integer quad_floor(const QuadNum& x);

BigFloat quad_eval(const QuadNum& x, int digits);

/// True if n is squarefree and positive.
bool is_squarefree(long n);

}  // namespace sgon
