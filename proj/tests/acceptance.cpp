#include "oracles.hpp"

#include "sgon/samples.hpp"
#include "sgon/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

using namespace sgon;
using oracle::load_lattice;
using oracle::load_tau;
using oracle::sym;

namespace {

constexpr int kDigits = 60;
constexpr long kIndexRelTol = -20;
constexpr long kJExactTol = -9;
constexpr long kJ2iTol = -6;
constexpr long kBoundaryImTol = -8;
constexpr long kInteriorImMin = -4;
constexpr long double kSegmentSlack = 1e-12L;
constexpr int kJTerms = 20;
constexpr std::uint64_t kSeed = 20240607;
constexpr long kFields[] = {2, 3, 5, 7};

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::vector<IntVector> canonical_rows(const IntMatrix& F) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < F.rows(); ++i) {
        IntVector r(F.row(i).begin(), F.row(i).end());
        normalize_sign(r);
        rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end(), lex_less);
    return rows;
}

Verdict rational_dimensions() {
    Verdict v;
    const auto l1 = rational_dimension(load_lattice("lambda1"));
    const auto l2 = rational_dimension(load_lattice("lambda2"));
    const auto a = rational_dimension(load_lattice("a_matrix"));
    v.require(l1.total == 3, "d(Lambda_1) = " + std::to_string(l1.total));
    v.require(l2.total == 2, "d(Lambda_2) = " + std::to_string(l2.total));
    v.require(a.total == 7, "d(A) = " + std::to_string(a.total));
    v.require(a.per_row == std::vector<std::size_t>{2, 2, 3}, "per-row dimensions of A");
    v.detail = v.pass ? "d = 3, 2, 7; rows (2, 2, 3)" : v.detail;
    return v;
}

Verdict f_golden() {
    Verdict v;
    const IntMatrix golden = IntMatrix::from_rows(
        {{1, 0, 0}, {0, 1, 2}, {1, 0, 0}, {0, 1, 2}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    const RowDecomposition dec = row_decompose(load_lattice("a_matrix"));
    v.require(dec.F.rows() == 7 && dec.F.cols() == 3, "F(A) is not 7 x 3");
    v.require(canonical_rows(dec.F) == canonical_rows(golden), "row set differs from the golden F(A)");
    v.detail = v.pass ? "7 x 3 row set matches" : v.detail;
    return v;
}

Verdict sparse_vector() {
    Verdict v;
    const LatticeBasis A = load_lattice("a_matrix");
    const auto& b = A.basis();
    const SymVector expected = {sym(0, {}, b), sym(0, {}, b), sym(0, {{"sqrt3", 2}, {"sqrt5", -1}}, b)};
    const auto reports = find_sparse(A, 2, kDigits);
    v.require(!reports.empty(), "no report for k = 2");
    for (const auto& r : reports) {
        v.require(r.ell >= 1 && r.x[0] == expected, "x differs from (0, 0, 2 sqrt3 - sqrt5)");
        v.require(r.bound_satisfied && verify_sparse_report(A, r), "bound check fails");
    }
    v.require(find_sparse(A, 1, kDigits).empty(), "k = 1 returned vectors");
    const auto brute = oracle::brute_force_levels(A);
    v.require(brute[0] == 1, "oracle s_1 = " + std::to_string(brute[0]));
    v.detail = v.pass ? "x = (0, 0, 2*sqrt3 - sqrt5), bound holds; k = 1 empty, oracle s_1 = 1" : v.detail;
    return v;
}

Verdict virt_rect_equivalence() {
    Verdict v;
    Rng rng(kSeed + 4);
    std::size_t violations = 0;
    const std::size_t trials = 200;
    for (std::size_t t = 0; t < trials; ++t) {
        const LatticeBasis A = random_lattice(rng, static_cast<std::size_t>(pick(rng, 2, 6)));
        const bool full = rational_dimension(A).total == A.n();
        const bool nonzero = !nu(A, kDigits).is_zero;
        const auto s = sparsity_levels(A).s;
        const bool ones = std::all_of(s.begin(), s.end(), [](std::size_t x) { return x == 1; });
        violations += !(full == nonzero && nonzero == ones);
    }
    v.require(violations == 0, std::to_string(violations) + " violations");
    v.detail = v.pass ? std::to_string(trials) + " lattices, 0 violations" : v.detail;
    return v;
}

Verdict main2_index() {
    Verdict v;
    struct Case {
        const char* name;
        unsigned long n, d;
    };
    for (Case c : {Case{"ex_main2_n3_d2", 3, 2}, Case{"ex_main2_n3_d3", 3, 3}, Case{"ex_main2_n4_d2", 4, 2},
                   Case{"ex_main2_n5_d2", 5, 2}}) {
        Integer expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), c.d, c.n - 1);
        const auto r = rectangular_sublattice(load_lattice(c.name), kDigits);
        v.require(r.index == expected, std::string(c.name) + " index " + r.index.get_str());
    }

    const LatticeBasis A = load_lattice("lambda2");
    const auto r = rectangular_sublattice(A, kDigits);
    v.require(r.index == 3, "Lambda_2 index " + r.index.get_str());
    for (std::size_t j = 0; j < A.n(); ++j) {
        SymVector column;
        for (std::size_t i = 0; i < A.n(); ++i)
            column.push_back(r.B[i][j]);
        const auto y = A.coordinates(column);
        const bool integral =
            y && std::all_of(y->begin(), y->end(), [](const Rational& q) { return q.get_den() == 1; });
        v.require(integral, "column " + std::to_string(j) + " of B is not a lattice vector");
    }
    const BigFloat det = abs(numeric_determinant(numeric_matrix(A, kDigits)));
    const BigFloat numeric = pow(det / nu(A, kDigits).value, static_cast<long>(A.n() - 1));
    const BigFloat exact = BigFloat::from_integer(r.index, kDigits);
    v.require(abs(numeric - exact) <= pow10(kIndexRelTol, kDigits) * exact, "numeric index cross-check");
    v.detail = v.pass ? "indices 4, 9, 8, 16; Lambda_2 index 3, columns in lattice, cross-check < 1e-20" : v.detail;
    return v;
}

Verdict siegel() {
    Verdict v;
    const BatteryResult r = battery_siegel(kSeed + 6, 1000);
    std::size_t fallback = 0;
    for (const auto& [name, count] : r.counters)
        if (name == "fallback")
            fallback = count;
    v.require(r.violations == 0, std::to_string(r.violations) + " unresolved");
    v.detail = v.pass ? std::to_string(r.trials) + " matrices, 0 unresolved (" + std::to_string(fallback) +
                            " resolved by enumeration)"
                      : v.detail;
    return v;
}

Verdict planar_golden() {
    Verdict v;
    const VRCertificate half = vr_decide(load_tau("tau_half"));
    v.require(half.is_vr() && half.delta == 2, "a = 1/2");

    const Tau diag_tau = load_tau("tau_sqrt2_diagonal");
    const VRCertificate diag = vr_decide(diag_tau);
    v.require(diag.kind == VRKind::IrrationalA && diag.t == QuadNum(1, 1, 2) && diag.delta == 2,
              "sqrt2/2 + sqrt2/2 i certificate");
    if (diag.is_vr()) {
        const IsogenyDegree deg = isogeny_degree(diag_tau, diag);
        v.require(deg.constructive_index == 2 && deg.match, "constructive index");
    }
    const VRCertificate no = vr_decide(load_tau("tau_sqrt2_plus_i"));
    v.require(no.kind == VRKind::NotVR && no.discriminant == 12, "sqrt2 + i");
    v.detail = v.pass ? "delta 2; t = 1 + sqrt2, delta 2 = index; NotVR with discriminant 12" : v.detail;
    return v;
}

Verdict vr_geodesic() {
    Verdict v;
    Rng rng(kSeed + 8);
    std::size_t disagreements = 0;
    const std::size_t trials = 500;
    for (std::size_t t = 0; t < trials; ++t) {
        const long D = kFields[pick(rng, 0, 3)];
        const Tau tau = pick(rng, 0, 1) ? random_vr_tau(rng, D) : random_tau(rng, D);
        disagreements += vr_decide(tau).is_vr() != geodesic_classify(tau).closed_at_infinity;
    }
    v.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    v.detail = v.pass ? std::to_string(trials) + " points, 0 disagreements" : v.detail;
    return v;
}

Verdict cm_behaviour() {
    Verdict v;
    Rng rng(kSeed + 9);
    std::size_t bad_cm = 0, bad_non = 0;
    for (int s = 0; s < 50; ++s) {
        const Tau tau = random_cm_tau(rng, kFields[pick(rng, 0, 3)]);
        std::set<std::string> distinct;
        for (const auto& sample : cm_analyze(tau).t_family) {
            const QuadNum lhs = tau.a() - tau.b() * sample.t;
            const QuadNum rhs = tau.a() + tau.b() / sample.t;
            if (sample.t == sample.q * tau.b() && lhs.is_rational() && rhs.is_rational())
                distinct.insert(sample.t.to_string());
        }
        bad_cm += distinct.size() < 5;
    }
    for (int s = 0; s < 50; ++s) {
        const Tau tau = random_vr_tau(rng, kFields[pick(rng, 0, 3)]);
        const VRCertificate c = vr_decide(tau);
        const bool ok = c.kind == VRKind::IrrationalA && c.t_other &&
                        c.t * *c.t_other == QuadNum::rational(-1, c.t.D());
        bad_non += !ok;
    }
    v.require(bad_cm == 0, std::to_string(bad_cm) + " CM samples with fewer than 5 certificates");
    v.require(bad_non == 0, std::to_string(bad_non) + " non-CM samples with t t' != -1");
    v.detail = v.pass ? "50 CM samples with >= 5 t = q b; 50 non-CM with t t' = -1" : v.detail;
    return v;
}

Verdict j_invariant_values() {
    Verdict v;
    const JInvariant i = j_invariant(load_tau("tau_i"), 10, kDigits);
    v.require(abs(i.re - BigFloat::from_long(1728, kDigits)) < pow10(kJExactTol, kDigits), "|j(i) - 1728|");
    const JInvariant rho = j_invariant(load_tau("tau_rho"), kJTerms, kDigits);
    v.require(abs(rho.re) < pow10(kJExactTol, kDigits) && abs(rho.im) < pow10(kJExactTol, kDigits), "|j(rho)|");
    const JInvariant two = j_invariant(load_tau("tau_2i"), 10, kDigits);
    v.require(abs(two.re - BigFloat::from_long(287496, kDigits)) < pow10(kJ2iTol, kDigits), "|j(2i) - 287496|");

    Rng rng(kSeed + 10);
    std::size_t bad = 0;
    for (Segment seg : {Segment::LeftEdge, Segment::UnitArc, Segment::ImaginaryAxis, Segment::Interior}) {
        for (int s = 0; s < 50; ++s) {
            const JInvariant j = j_invariant(random_boundary_tau(rng, seg, kFields[pick(rng, 0, 3)]), kJTerms, 40);
            const long double J = std::stold(j.re.to_string(30)) / 1728.0L;
            bool ok = true;
            switch (seg) {
            case Segment::Interior: ok = abs(j.im) > pow10(kInteriorImMin, 40); break;
            case Segment::LeftEdge: ok = J <= kSegmentSlack; break;
            case Segment::UnitArc: ok = J >= -kSegmentSlack && J <= 1 + kSegmentSlack; break;
            case Segment::ImaginaryAxis: ok = J >= 1 - kSegmentSlack; break;
            }
            if (seg != Segment::Interior)
                ok = ok && abs(j.im) < pow10(kBoundaryImTol, 40);
            bad += !ok;
        }
    }
    v.require(bad == 0, std::to_string(bad) + " boundary or interior samples out of range");
    v.detail = v.pass ? "j(i), j(rho), j(2i) within tolerance; 150 boundary and 50 interior samples in range" : v.detail;
    return v;
}

Verdict oracle_agreement() {
    Verdict v;
    std::size_t checked = 0;
    for (const char* name : {"lambda1", "lambda2", "a_matrix", "ex_main2_n3_d2", "ex_main2_n3_d3", "ex_main2_n4_d2",
                             "ex_main2_n5_d2", "arith_sqrt2_plane", "arith_sqrt2_rectangular", "arith_sqrt2_space"}) {
        const LatticeBasis A = load_lattice(name);
        if (A.n() > 5)
            continue;
        v.require(sparsity_levels(A).s == oracle::brute_force_levels(A, 10), std::string(name) + " disagrees");
        ++checked;
    }
    v.require(sparsity_levels(load_lattice("lambda1")).s == std::vector<std::size_t>{1, 2}, "s(Lambda_1)");
    v.detail = v.pass ? std::to_string(checked) + " fixtures agree; s(Lambda_1) = (1, 2)" : v.detail;
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"rational dimensions", rational_dimensions},
        {"F(A) golden", f_golden},
        {"sparse vector", sparse_vector},
        {"virtual rectangularity equivalence", virt_rect_equivalence},
        {"rectangular sublattice index", main2_index},
        {"Siegel bound", siegel},
        {"planar golden values", planar_golden},
        {"VR and closed geodesics", vr_geodesic},
        {"CM behaviour", cm_behaviour},
        {"j-invariant", j_invariant_values},
        {"sparsity levels oracle", oracle_agreement},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2zu %-36s %s  %s (%.1fs)\n", i + 1, criteria[i].first, v.pass ? "PASS" : "FAIL",
                    v.detail.c_str(), secs);
        failed += !v.pass;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                total);
    return failed == 0 ? 0 : 1;
}
