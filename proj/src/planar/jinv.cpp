#include "sgon/errors.hpp"
#include "sgon/planar.hpp"

#include <array>

namespace sgon {

namespace {

// j(tau) = 1/Q + 744 + sum c_k Q^k
constexpr std::array<const char*, kJTableTerms + 4> kCoefficients = {
    "196884",
    "21493760",
    "864299970",
    "20245856256",
    "333202640600",
    "4252023300096",
    "44656994071935",
    "401490886656000",
    "3176440229784420",
    "22567393309593600",
    "146211911499519294",
    "874313719685775360",
    "4872010111798142520",
    "25497827389410525184",
    "126142916465781843075",
    "593121772421445058560",
    "2662842413150775245160",
    "11459912788444786513920",
    "47438786801234168813250",
    "189449976248893390028800",
    "731811377318137519245696",
    "2740630712513624654929920",
    "9971041659937182693533820",
    "35307453186561427099877376",
};

struct Complex {
    BigFloat re;
    BigFloat im;
};

Complex mul(const Complex& x, const Complex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

}  // namespace

const Integer& j_coefficient(int k) {
    static const std::array<Integer, kCoefficients.size()> table = [] {
        std::array<Integer, kCoefficients.size()> t;
        for (std::size_t i = 0; i < kCoefficients.size(); ++i)
            t[i] = Integer(kCoefficients[i]);
        return t;
    }();
    if (k < 1 || k > static_cast<int>(table.size()))
        fail(ErrorKind::InvalidArgument, "no stored coefficient c_" + std::to_string(k));
    return table[static_cast<std::size_t>(k - 1)];
}

JInvariant j_invariant(const Tau& tau, int terms, int digits) {
    if (terms < 1)
        fail(ErrorKind::InvalidArgument, "at least one series term is required");
    if (terms > kJTableTerms)
        fail(ErrorKind::TooFewTermsForPrecision,
             std::to_string(terms) + " terms requested, table holds " + std::to_string(kJTableTerms));
    if (digits < 16)
        fail(ErrorKind::InvalidArgument, "precision must be at least 16 digits");
    const int working = digits + 10;
    ReductionResult red = reduce_to_fundamental(tau);
    const BigFloat a = quad_eval(red.tau.a(), working);
    const BigFloat b = quad_eval(red.tau.b(), working);
    const BigFloat two_pi = BigFloat::pi(working) * BigFloat::from_long(2, working);
    const BigFloat modulus = exp(-(two_pi * b));
    const BigFloat angle = two_pi * a;
    const Complex Q{modulus * cos(angle), modulus * sin(angle)};
    const BigFloat inv_mod = exp(two_pi * b);

    Complex sum{inv_mod * cos(angle), -(inv_mod * sin(angle))};
    sum.re += BigFloat::from_long(744, working);
    Complex power = Q;
    for (int k = 1; k <= terms; ++k) {
        BigFloat c = BigFloat::from_integer(j_coefficient(k), working);
        sum.re += c * power.re;
        sum.im += c * power.im;
        power = mul(power, Q);
    }
    BigFloat bound = BigFloat::from_long(2, working) * BigFloat::from_integer(j_coefficient(terms + 1), working) *
                     pow(modulus, terms + 1);
    return {std::move(sum.re), std::move(sum.im), std::move(bound), red.tau, terms};
}

}  // namespace sgon
