#include "sgon/verify.hpp"

#include "sgon/errors.hpp"
#include "sgon/sparse.hpp"

#include <array>

namespace sgon {

namespace {

constexpr std::size_t kMaxFailureNotes = 5;

void note(BatteryResult& r, const std::string& what) {
    ++r.violations;
    if (r.failures.size() < kMaxFailureNotes)
        r.failures.push_back(what);
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

constexpr std::array<long, 4> kFields = {2, 3, 5, 7};

}  // namespace

SiegelCase siegel_check(const IntMatrix& B) {
    SiegelCase c;
    c.B = B;
    const std::size_t n = B.cols();
    c.rank = rank_q(to_rational(B));
    c.bound = siegel_bound(n, B.sup_norm(), c.rank);
    KernelBasis K = integer_kernel(B);
    ReducedKernel red = reduce_kernel_basis(K, c.bound);
    c.reduced_product = red.sup_norm_product;
    c.reduced_ok = red.bound_satisfied.value_or(true);
    c.resolved = c.reduced_ok;
    if (!c.reduced_ok) {
        Integer radius = 0;
        for (const auto& v : red.basis.vectors)
            radius = std::max(radius, sup_norm(v));
        SupNormMinima mins = sup_norm_minima(red.basis.vectors, n, radius);
        c.fallback_product = mins.sup_norm_product;
        c.resolved = mins.vectors.size() == K.dimension() &&
                     BigFloat::from_integer(mins.sup_norm_product, c.bound.digits()) <= c.bound;
    }
    return c;
}

BatteryResult battery_vr_geodesic(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed);
    BatteryResult r{"vr_vs_geodesic", trials, 0, {}, {}};
    std::size_t vr = 0, closed = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const long D = kFields[static_cast<std::size_t>(uniform(rng, 0, 3))];
        const long pick = uniform(rng, 0, 2);
        Tau tau = pick == 0 ? random_tau(rng, D) : pick == 1 ? random_vr_tau(rng, D) : random_cm_tau(rng, D);
        VRCertificate cert = vr_decide(tau);
        GeodesicClass geo = geodesic_classify(tau);
        vr += cert.is_vr();
        closed += geo.closed_at_infinity;
        if (cert.is_vr() != geo.closed_at_infinity)
            note(r, "disagreement at " + tau.to_string());
        if (cert.is_vr()) {
            try {
                if (!isogeny_degree(tau, cert).match)
                    note(r, "constructive index differs from delta at " + tau.to_string());
            } catch (const Error& e) {
                note(r, std::string(e.what()) + " at " + tau.to_string());
            }
        }
    }
    r.counters = {{"vr", vr}, {"closed", closed}};
    return r;
}

BatteryResult battery_siegel(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed);
    BatteryResult r{"siegel", trials, 0, {}, {}};
    std::size_t fallback = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 6));
        const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n) - 1));
        IntMatrix B(m, n);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < n; ++b)
                B(a, b) = uniform(rng, -10, 10);
        if (B.sup_norm() == 0)
            B(0, 0) = 1;
        SiegelCase c = siegel_check(B);
        fallback += !c.reduced_ok;
        if (!c.resolved)
            note(r, "unresolved Siegel bound for " + B.to_string());
    }
    r.counters = {{"fallback", fallback}};
    return r;
}

BatteryResult battery_virt_rect(std::uint64_t seed, std::size_t trials, std::size_t max_n) {
    Rng rng(seed);
    BatteryResult r{"virtual_rectangularity", trials, 0, {}, {}};
    std::size_t rectangular = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(max_n)));
        LatticeBasis A = random_lattice(rng, n);
        const bool full = rational_dimension(A).total == n;
        NuResult v = nu(A);
        const bool nu_nonzero = !v.is_zero && v.value.sign() > 0;
        SparsityLevels s = sparsity_levels(A);
        bool all_one = true;
        for (auto level : s.s)
            all_one = all_one && level == 1;
        rectangular += full;
        if (full != nu_nonzero || full != all_one)
            note(r, "d = n: " + std::to_string(full) + ", nu != 0: " + std::to_string(nu_nonzero) +
                        ", all s_i = 1: " + std::to_string(all_one) + " (n = " + std::to_string(n) + ")");
    }
    r.counters = {{"d_equals_n", rectangular}};
    return r;
}

BatteryResult battery_cm(std::uint64_t seed, std::size_t trials) {
    Rng rng(seed);
    BatteryResult r{"cm", 2 * trials, 0, {}, {}};
    for (std::size_t i = 0; i < trials; ++i) {
        const long D = kFields[static_cast<std::size_t>(uniform(rng, 0, 3))];
        Tau tau = random_cm_tau(rng, D);
        CMReport rep = cm_analyze(tau);
        std::size_t verified = 0;
        std::vector<QuadNum> distinct;
        for (const auto& s : rep.t_family) {
            bool seen = false;
            for (const auto& t : distinct)
                seen = seen || t == s.t;
            if (s.verified && !seen) {
                ++verified;
                distinct.push_back(s.t);
            }
        }
        if (!rep.is_cm || verified < 5)
            note(r, "CM sample " + tau.to_string() + " verified " + std::to_string(verified) + " values of t");
    }
    for (std::size_t i = 0; i < trials; ++i) {
        const long D = kFields[static_cast<std::size_t>(uniform(rng, 0, 3))];
        Tau tau = random_vr_tau(rng, D);
        CMReport rep = cm_analyze(tau);
        if (rep.is_cm || !rep.uniqueness_verified.value_or(false))
            note(r, "non-CM sample " + tau.to_string() + " fails t t' = -1");
    }
    return r;
}

std::vector<BatteryResult> verify_suite(std::uint64_t seed) {
    return {battery_vr_geodesic(seed), battery_siegel(seed + 1), battery_virt_rect(seed + 2), battery_cm(seed + 3)};
}

}  // namespace sgon
