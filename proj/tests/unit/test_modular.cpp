#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "zetaline/modular.hpp"

using namespace zetaline;

TEST_CASE("tau against the eta-product expansion") {
    const TauTable t(10000);
    const std::int64_t n_small = static_cast<std::int64_t>(std::size(oracle::kTau)) - 1;
    for (std::int64_t n = 1; n <= n_small; ++n) {
        INFO("n = " << n);
        CHECK(t(n) == static_cast<Int128>(oracle::kTau[n]));
    }
    CHECK(t.str(9973) == oracle::kTau9973);
    CHECK(t.str(10000) == oracle::kTau10000);
    int bad = 0;
    for (std::int64_t p : shared_primes(10000)->primes())
        if (p <= 10000 && !t.deligne_holds(p)) ++bad;
    CHECK(bad == oracle::kDeligneViolations10000);
    CHECK(t.normalized(2) == doctest::Approx(-24.0 / std::pow(2.0, 5.5)));
    CHECK_THROWS_AS(TauTable(0), DomainError);
}

TEST_CASE("tau table CSV") {
    const TauTable t(12);
    const std::string path = "tau_table_test.csv";
    t.write_csv(path);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().rfind("n,tau\n1,1\n2,-24\n", 0) == 0);
    std::remove(path.c_str());
}

TEST_CASE("Hecke recursion matches Chebyshev polynomials") {
    for (double theta : {0.3, 1.1, 2.9}) {
        const double a = 2.0 * std::cos(theta);
        const auto c = hecke_extend(a, 7, 12);
        REQUIRE(c.size() == 13);
        for (int k = 0; k <= 12; ++k)
            CHECK(c[static_cast<std::size_t>(k)] == doctest::Approx(std::sin((k + 1) * theta) / std::sin(theta)).epsilon(1e-11));
    }
    CHECK_THROWS_AS(hecke_extend(2.5, 7, 4), DomainError);
}

TEST_CASE("Sato-Tate inverse CDF against mpmath root finding") {
    for (const auto& [u, want] : oracle::kSatoTateInverseCdf) CHECK(sato_tate_inverse_cdf(u) == doctest::Approx(want).epsilon(1e-13));
    CHECK(sato_tate_inverse_cdf(0.0) == 0.0);
    CHECK(sato_tate_inverse_cdf(1.0) == doctest::Approx(constants::pi));
}

TEST_CASE("Sato-Tate constant and sample") {
    CHECK(sato_tate_alpha().value == doctest::Approx(oracle::kSatoTateAlpha).epsilon(1e-12));
    CHECK(oracle::kSatoTateAlpha == doctest::Approx(8.0 / (3.0 * constants::pi)).epsilon(1e-15));
    const auto a = sato_tate_sample(5, 1000);
    const auto b = sato_tate_sample(5, 1000);
    CHECK(a.angles == b.angles);
    CHECK(a.primes.size() == 168);
    for (double th : a.angles) {
        CHECK(th >= 0.0);
        CHECK(th <= constants::pi);
    }
    CHECK(a.a_of(2) == doctest::Approx(2.0 * std::cos(a.angles[0])));
    CHECK(a.a_of(4) == 0.0);
}

TEST_CASE("Catalan numbers from binomials") {
    for (int k = 1; k <= 15; ++k) {
        double binom = 1.0;
        for (int j = 1; j <= k; ++j) binom = binom * (k + j) / j;
        CHECK(catalan(k) == static_cast<std::int64_t>(std::llround(binom / (k + 1))));
    }
    CHECK_THROWS_AS(catalan(0), DomainError);
}

TEST_CASE("exponent table") {
    const auto t = exponent_table(0.5);
    REQUIRE(t.pairs.size() == 3);
    CHECK(t.pairs[0].lower == doctest::Approx(1.5));
    CHECK(t.pairs[0].upper == doctest::Approx(0.5));
    CHECK(t.pairs[1].lower == doctest::Approx(23.0 / 12.0));
    CHECK(t.pairs[2].lower == doctest::Approx(1.0 + oracle::kSatoTateAlpha));
    REQUIRE(t.catalan_exponents.size() == 4);
    CHECK(t.catalan_exponents[3].second == 14);
}

TEST_CASE("sup-norm constants need a finite prime-sum constant") {
    const auto c = sato_tate_sup_constants(0.1, 0.0, 0.0);
    CHECK(c.alpha == doctest::Approx(oracle::kSatoTateAlpha));
    CHECK(c.inf_max == doctest::Approx(std::exp(-0.1) / 4.0));
    CHECK(c.sup_min == doctest::Approx(4.0 * std::exp(0.1)));
    CHECK_THROWS_AS(sato_tate_sup_constants(std::nan(""), 0.0, 0.0), DomainError);
}
