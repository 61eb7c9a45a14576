#include "sgon/rational.hpp"

#include "sgon/errors.hpp"

#include <algorithm>
#include <cctype>

namespace sgon {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string strip(std::string_view s) {
    auto b = s.find_first_not_of(" \t\n\r");
    auto e = s.find_last_not_of(" \t\n\r");
    if (b == std::string_view::npos)
        return {};
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Integer parse_integer(std::string_view text) {
    auto s = strip(text);
    if (!is_integer_literal(s))
        fail(ErrorKind::Schema, "not an integer: '" + std::string(text) + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    auto s = strip(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        auto num = parse_integer(s.substr(0, slash));
        auto den = parse_integer(s.substr(slash + 1));
        if (den == 0)
            fail(ErrorKind::Schema, "zero denominator in '" + s + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+'))
            whole.erase(0, 1);
        if (whole.empty())
            whole = "0";
        if (!is_integer_literal(whole) || (!frac.empty() && !is_integer_literal(frac)) ||
            frac.find_first_of("+-") != std::string::npos)
            fail(ErrorKind::Schema, "not a rational: '" + std::string(text) + "'");
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Integer num(whole + frac, 10);
        Rational r(neg ? Integer(-num) : num, den);
        r.canonicalize();
        return r;
    }
    return Rational(parse_integer(s));
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

int sign(const Rational& r) { return sgn(r); }
int sign(const Integer& z) { return sgn(z); }

Integer common_denominator(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

std::vector<Integer> make_primitive(std::vector<Integer> v) {
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> values) {
    Integer l = common_denominator(values);
    std::vector<Integer> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.emplace_back(v.get_num() * (l / v.get_den()));
    return make_primitive(std::move(out));
}

void normalize_sign(std::vector<Integer>& v) {
    for (const auto& x : v) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto& y : v)
                y = -y;
        return;
    }
}

Integer sup_norm(std::span<const Integer> v) {
    Integer m = 0;
    for (const auto& x : v)
        if (abs(x) > m)
            m = abs(x);
    return m;
}

bool is_rational_square(const Rational& r, Rational* root) {
    if (r < 0)
        return false;
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(r.get_den_mpz_t()) == 0)
        return false;
    if (root != nullptr) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
        *root = Rational(n, d);
        root->canonicalize();
    }
    return true;
}

}  // namespace sgon
