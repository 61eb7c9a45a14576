#include "sgon/bigfloat.hpp"

#include "sgon/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace sgon {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

void raise_to(mpfr_ptr x, mpfr_prec_t bits) {
    if (mpfr_get_prec(x) < bits)
        mpfr_prec_round(x, bits, MPFR_RNDN);
}

}  // namespace

int bits_for_digits(int digits) {
    return static_cast<int>(std::ceil(std::max(digits, 1) * kLog2Of10)) + 4;
}

BigFloat::BigFloat(int digits) {
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_string(std::string_view text, int digits) {
    BigFloat r(digits);
    std::string s(text);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        fail(ErrorKind::Schema, "not a decimal number: '" + s + "'");
    return r;
}

BigFloat BigFloat::from_rational(const Rational& q, int digits) {
    BigFloat r(digits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_integer(const Integer& z, int digits) {
    BigFloat r(digits);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_long(long v, int digits) {
    BigFloat r(digits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(int digits) {
    BigFloat r(digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

int BigFloat::digits() const {
    return static_cast<int>(static_cast<double>(mpfr_get_prec(v_) - 4) / kLog2Of10);
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    raise_to(v_, mpfr_get_prec(o.v_));
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    raise_to(v_, mpfr_get_prec(o.v_));
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    raise_to(v_, mpfr_get_prec(o.v_));
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.is_zero())
        fail(ErrorKind::DivisionByZero, "floating point division by zero");
    raise_to(v_, mpfr_get_prec(o.v_));
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_) != 0)
        return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0)
        return std::partial_ordering::less;
    if (c > 0)
        return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

Integer BigFloat::round() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDNA);
    return z;
}

Integer BigFloat::floor() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
}

Integer BigFloat::ceil() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
    return z;
}

std::string BigFloat::to_string(int sig) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", std::max(sig, 1), v_);
    std::unique_ptr<char, decltype(&mpfr_free_str)> guard(buf, &mpfr_free_str);
    return std::string(buf);
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x);
    mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x);
    mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x) {
    BigFloat r(x);
    mpfr_exp(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x);
    mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x);
    mpfr_cos(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& x) {
    BigFloat r(x);
    mpfr_sin(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat& x, long n) {
    BigFloat r(x);
    mpfr_pow_si(r.raw(), r.raw(), n, MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return (a < b) ? b : a; }

BigFloat pow10(long e, int digits) {
    BigFloat r = BigFloat::from_long(10, digits);
    return pow(r, e);
}

}  // namespace sgon
