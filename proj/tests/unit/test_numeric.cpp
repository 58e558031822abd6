#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "zetaline/numeric.hpp"
#include "zetaline/quadrature.hpp"

using namespace zetaline;

namespace {

bool trial_division_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("prime table agrees with trial division") {
    const PrimeTable t(5000);
    std::size_t count = 0;
    for (std::int64_t n = 0; n <= 5000; ++n) {
        CHECK(t.is_prime(n) == trial_division_prime(n));
        if (trial_division_prime(n)) ++count;
    }
    CHECK(t.size() == count);
    CHECK(t.count_upto(100) == 25);
    CHECK(t.log(0) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("arithmetic functions") {
    for (std::int64_t n = 1; n <= 300; ++n) {
        std::int64_t coprime = 0;
        for (std::int64_t k = 1; k <= n; ++k) coprime += std::gcd(n, k) == 1;
        CHECK(euler_phi(n) == coprime);
        std::int64_t prod = 1;
        for (const auto& pk : factorize(n))
            for (int j = 0; j < pk.k; ++j) prod *= pk.p;
        CHECK(prod == n);
    }
    // sum_{d | n} mu(d) = [n = 1]
    for (std::int64_t n = 1; n <= 200; ++n) {
        int s = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) s += mobius(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
    CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)));
    CHECK(von_mangoldt(12) == 0.0);
}

TEST_CASE("characters mod 4 and 12") {
    const auto chars4 = characters_mod(4);
    CHECK(chars4.size() == 2);
    for (std::int64_t D : {5, 12}) {
        const auto chars = characters_mod(D);
        CHECK(static_cast<std::int64_t>(chars.size()) == euler_phi(D));
        for (const auto& chi : chars) {
            for (std::int64_t a = 1; a < D; ++a)
                for (std::int64_t b = 1; b < D; ++b)
                    CHECK(std::abs(chi(a * b) - chi(a) * chi(b)) < 1e-12);
        }
    }
}

TEST_CASE("SplitMix64 reproduces the reference stream") {
    SplitMix64 g(1);
    for (auto want : oracle::kSplitMixSeed1) CHECK(g.next() == want);
}

TEST_CASE("adaptive quadrature") {
    auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
    CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
    auto inf = integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, 1e-12);
    CHECK(inf.value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0, 1e-8), DomainError);
}
