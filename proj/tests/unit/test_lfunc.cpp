#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "zetaline/extremal.hpp"
#include "zetaline/lfunc.hpp"

using namespace zetaline;

TEST_CASE("Hecke factor extrema against a dense circle scan") {
    for (const auto& row : oracle::kHeckeLocal) {
        const auto f = EulerFactor::hecke(static_cast<std::int64_t>(row[0]), row[1]);
        const auto e = local_extrema(f);
        INFO("p = " << row[0] << ", a = " << row[1]);
        // the oracle is -log|1 - a z + z^2| = log|f_p(z)|
        CHECK(e.min_log == doctest::Approx(row[2]).epsilon(1e-9));
        CHECK(e.max_log == doctest::Approx(row[3]).epsilon(1e-9));
        CHECK(local_max_log(f) == doctest::Approx(row[3]).epsilon(1e-9));
    }
}

TEST_CASE("geometric factors are exact") {
    const auto f = EulerFactor::geometric(3, Complex(0.5, 0.0));
    CHECK(f.exact());
    const Complex z(0.2, 0.1);
    CHECK(std::abs(f.eval(z) - 1.0 / (1.0 - 0.5 * z)) < 1e-15);
}

TEST_CASE("vanishing factor and truncation errors") {
    // (1 - z)^2 vanishes at z = 1, well outside |z| = 1/2
    const auto ok = EulerFactor::hecke(2, 2.0);
    CHECK_NOTHROW(local_extrema(ok));
    // a(p) = p places the zero of 1 - a z exactly on the circle
    CHECK_THROWS_AS(local_extrema(EulerFactor::from_coeffs(2, {1.0, -2.0}, 0.0)), ZeroOnCircleError);
    CHECK_THROWS_AS(local_extrema(EulerFactor::from_coeffs(2, {1.0, 0.1}, 1e-6)), PrecisionError);
}

TEST_CASE("lambda sums for the constant series") {
    const auto l = lambda_sums(MultiplicativeSeries::ones(), 1000);
    REQUIRE(l.lambda0.has_value());
    CHECK(*l.lambda0 == doctest::Approx(oracle::kOnesLambda0P1000).epsilon(1e-12));
    CHECK(l.lambda1 == doctest::Approx(oracle::kOnesLambda1P1000).epsilon(1e-12));
    CHECK(l.tail_estimate == doctest::Approx(1.0 / (1000.0 * std::log(1000.0))));
}

TEST_CASE("growth fits against an independent least-squares fit") {
    const auto s = MultiplicativeSeries::ones();
    const auto w = alpha_beta_fit(s, 1000000, GrowthConvention::LambdaWeighted);
    CHECK(w.alpha == doctest::Approx(oracle::kOnesFitWeightedAlpha).epsilon(1e-9));
    CHECK(w.beta == doctest::Approx(oracle::kOnesFitWeightedBeta).epsilon(1e-9));
    const auto p = alpha_beta_fit(s, 1000000, GrowthConvention::PrimeSum);
    CHECK(p.alpha == doctest::Approx(oracle::kOnesFitPrimeAlpha).epsilon(1e-9));
    CHECK(p.beta == doctest::Approx(oracle::kOnesFitPrimeBeta).epsilon(1e-9));
    const auto pinned = alpha_beta_fit(s, 1000000, GrowthConvention::PrimeSum, 1.0);
    CHECK(pinned.alpha == 1.0);
    CHECK(pinned.beta == doctest::Approx(growth_partial_sum(s, 1000000, GrowthConvention::PrimeSum) -
                                         std::log(std::log(1e6))));
    CHECK(std::abs(pinned.beta - constants::mertens) < 2e-3);
    CHECK_THROWS_AS(alpha_beta_fit(s, 10, GrowthConvention::PrimeSum), DomainError);
}

TEST_CASE("residue constants") {
    CHECK(beta_from_residue(1.0) == doctest::Approx(constants::gamma));
    const double pi3 = constants::pi * constants::pi * constants::pi;
    CHECK(std::exp(-beta_from_residue(1.0 / (12.0 * constants::pi))) / 4.0 ==
          doctest::Approx(oracle::kWeight12Residue).epsilon(1e-13));
    CHECK(std::exp(-beta_from_residue(1.0 / (2.0 * pi3))) / 4.0 == doctest::Approx(oracle::kPiCubedResidue).epsilon(1e-13));
    CHECK_THROWS_AS(beta_from_residue(0.0), DomainError);
}

TEST_CASE("modulus factors against divisor sums") {
    for (std::int64_t D : {1, 3, 4, 5, 12, 30}) {
        double coprime = 0.0, sqfree = 0.0;
        for (std::int64_t k = 1; k <= D; ++k) coprime += std::gcd(D, k) == 1;
        for (std::int64_t d = 1; d <= D; ++d)
            if (D % d == 0 && std::abs(mobius(d)) == 1) sqfree += 1.0 / static_cast<double>(d);
        const auto [direct, inverse] = theorem13_constants(D, 0.1);
        const auto [d1, i1] = theorem13_constants(1, 0.1);
        INFO("D = " << D);
        CHECK(inverse / i1 == doctest::Approx(static_cast<double>(D) / coprime).epsilon(1e-12));
        CHECK(direct / d1 == doctest::Approx(sqfree).epsilon(1e-12));
    }
}

TEST_CASE("series constructors") {
    CHECK(std::abs(MultiplicativeSeries::character_magnitude(12).a_p(3)) == 0.0);
    CHECK(std::abs(MultiplicativeSeries::character_magnitude(12).a_p(5)) == 1.0);
    CHECK(std::abs(MultiplicativeSeries::prime_class_indicator(4, 1).a_p(13)) == 1.0);
    CHECK(std::abs(MultiplicativeSeries::prime_class_indicator(4, 1).a_p(7)) == 0.0);
    const auto csv = MultiplicativeSeries::from_csv(ZETALINE_TEST_DATA "/coeffs.csv");
    CHECK(csv.abs_coefficient(2, 2) == doctest::Approx(0.25));
    CHECK(std::abs(csv.a_p(3) + 1.0) < 1e-15);
    CHECK(std::abs(csv.a_p(5)) == 0.0);
    CHECK_THROWS_AS(MultiplicativeSeries::from_csv(ZETALINE_TEST_DATA "/malformed.csv"), DomainError);
    CHECK_THROWS_AS(MultiplicativeSeries::from_csv(ZETALINE_TEST_DATA "/missing.csv"), PathError);
}

TEST_CASE("sum of squared coefficients of the constant series is zeta(2)") {
    CHECK(sum_sq_coefficients(MultiplicativeSeries::ones(), 1000000) == doctest::Approx(constants::zeta2).epsilon(1e-6));
}

TEST_CASE("predicted infima conventions") {
    const auto p = predicted_infima(1.0, 0.3, 0.1, -0.2, 0.5);
    CHECK(p.direct == doctest::Approx(std::exp(0.1 - 0.3) / 4.0 * 0.5));
    CHECK(p.inverse == doctest::Approx(std::exp(-0.2 - 0.3) / 4.0 * 0.5));
    const auto w = lambda_weighted_infima(1.0, constants::gamma, constants::zeta2, 0.1);
    CHECK(w.direct == doctest::Approx(oracle::kTheorem3Zeta01 * 10.0).epsilon(1e-12));
    CHECK(w.inverse == doctest::Approx(oracle::kTheorem3Inverse01 * 10.0).epsilon(1e-12));
}

TEST_CASE("general extremal product reduces to the zeta case") {
    const GeneralExtremalSeries g(MultiplicativeSeries::ones(), 0.2, 1000);
    REQUIRE(g.has_closed_form());
    const Complex s(1.0, 0.05);
    CHECK(g.log_abs_closed(s) == doctest::Approx(log_abs_zeta_delta_closed(s, 0.2)).epsilon(1e-12));
    CHECK_THROWS_AS(g.log_value(Complex(1.0, 0.0)), PrecisionError);
}
