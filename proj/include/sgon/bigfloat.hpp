#pragma once

#include "sgon/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace sgon {

/// Arbitrary precision binary float (MPFR) carrying its own precision.
/// Binary operations produce a result at the larger operand precision, so no
/// global default precision is ever consulted.
class BigFloat {
  public:
    static constexpr int kDefaultDigits = 50;

    explicit BigFloat(int digits = kDefaultDigits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_string(std::string_view text, int digits);
    static BigFloat from_rational(const Rational& r, int digits);
    static BigFloat from_integer(const Integer& z, int digits);
    static BigFloat from_long(long v, int digits);
    static BigFloat pi(int digits);

    /// Decimal digits this value was created with (rounded down from bits).
    int digits() const;
    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    BigFloat operator-() const;

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return mpfr_equal_p(a.v_, b.v_) != 0;
    }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Nearest integer (ties away from zero).
    Integer round() const;
    Integer floor() const;
    Integer ceil() const;

    /// Scientific/general rendering with `sig` significant digits.
    std::string to_string(int sig) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat pow(const BigFloat& x, long n);
BigFloat max(const BigFloat& a, const BigFloat& b);
/// 10^e at the given precision.
BigFloat pow10(long e, int digits);

/// Binary precision holding `digits` decimal digits plus a few guard bits.
int bits_for_digits(int digits);

}  // namespace sgon
