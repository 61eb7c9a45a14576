#pragma once

#include "sgon/intlinalg.hpp"
#include "sgon/samples.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sgon {

struct BatteryResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t violations = 0;
    /// Counters specific to the battery, e.g. how many cases needed a fallback.
    std::vector<std::pair<std::string, std::size_t>> counters;
    /// Human readable description of the first few violations.
    std::vector<std::string> failures;

    bool ok() const { return violations == 0; }
};

struct SiegelCase {
    IntMatrix B;
    std::size_t rank = 0;
    BigFloat bound;
    Integer reduced_product;
    bool reduced_ok = false;
    /// Set when the reduced basis missed and enumeration was needed.
    std::optional<Integer> fallback_product;
    bool resolved = false;
};

/// Reduced kernel basis of B against (sqrt(n) |B|)^rank, with the sup-norm
/// minima enumeration as fallback.
SiegelCase siegel_check(const IntMatrix& B);

/// vr_decide against geodesic_classify on random points over Q(sqrt D),
/// D in {2, 3, 5, 7}; every VR certificate is also checked by isogeny_degree.
BatteryResult battery_vr_geodesic(std::uint64_t seed, std::size_t trials = 500);

/// Random m x n integer matrices, m < n <= 6, entries in [-10, 10].
BatteryResult battery_siegel(std::uint64_t seed, std::size_t trials = 1000);

/// d(L) = n, nu(L) != 0 and s_1 = ... = s_n = 1 agree on random lattices.
BatteryResult battery_virt_rect(std::uint64_t seed, std::size_t trials = 200, std::size_t max_n = 6);

/// CM samples verify five t = q b; non-CM VR samples satisfy t t' = -1.
BatteryResult battery_cm(std::uint64_t seed, std::size_t trials = 50);

std::vector<BatteryResult> verify_suite(std::uint64_t seed);

}  // namespace sgon
