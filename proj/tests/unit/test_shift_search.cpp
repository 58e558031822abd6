#include <cmath>

#include "doctest.h"
#include "zetaline/shift_search.hpp"

using namespace zetaline;

namespace {

// Circle distance computed independently of the library.
double naive_discrepancy(const std::vector<std::int64_t>& primes, const std::vector<double>& angles, double T) {
    double worst = 0.0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const double x = std::fmod(T * std::log(static_cast<double>(primes[i])) - angles[i], 2.0 * M_PI);
        const double y = x < 0 ? x + 2.0 * M_PI : x;
        worst = std::max(worst, std::min(y, 2.0 * M_PI - y));
    }
    return worst;
}

}  // namespace

TEST_CASE("discrepancy matches a direct computation") {
    const std::vector<std::int64_t> primes{2, 3, 5, 7};
    const std::vector<double> angles{M_PI, M_PI, 0.5, 6.0};
    const auto targets = make_phase_targets(primes, angles);
    for (double T : {0.0, 1.0, 123.456, 98765.4321}) CHECK(discrepancy(targets, T) == doctest::Approx(naive_discrepancy(primes, angles, T)));
}

TEST_CASE("shift search is at least as good as a dense scan") {
    const std::vector<std::int64_t> primes{2, 3, 5};
    const std::vector<double> angles{M_PI, M_PI, M_PI};
    const auto best = search_shift(make_phase_targets(primes, angles), 1000.0, 10'000'000);
    double scan = 1e9;
    for (double T = 0.0; T <= 1000.0; T += 1e-3) scan = std::min(scan, naive_discrepancy(primes, angles, T));
    CHECK(best.T >= 0.0);
    CHECK(best.T <= 1000.0);
    CHECK(best.discrepancy == doctest::Approx(naive_discrepancy(primes, angles, best.T)));
    CHECK(best.discrepancy <= scan + 1e-9);
}

TEST_CASE("extremal targets follow the sign pattern") {
    const auto inv = phase_targets(0.3, 30, TargetSide::ForInverse);
    const auto dir = phase_targets(0.3, 30, TargetSide::ForDirect);
    REQUIRE(inv.primes.size() == 10);
    for (std::size_t i = 0; i < inv.primes.size(); ++i) {
        const double d = std::abs(inv.angles[i] - dir.angles[i]);
        CHECK(std::min(d, 2.0 * M_PI - d) == doctest::Approx(M_PI));
    }
}

TEST_CASE("search prime count grows with the range") {
    CHECK(search_prime_count(1e4) <= search_prime_count(1e6));
    CHECK(search_prime_count(1e6) <= search_prime_count(1e8));
    CHECK(search_prime_count(1e4) >= 2);
}
