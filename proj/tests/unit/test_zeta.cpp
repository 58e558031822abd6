#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "zetaline/zeta.hpp"

using namespace zetaline;

namespace {

DirichletCharacter chi4() {
    for (const auto& chi : characters_mod(4))
        if (!chi.is_principal()) return chi;
    throw Error("no character");
}

}  // namespace

TEST_CASE("zeta against mpmath") {
    for (const auto& row : oracle::kZeta) {
        const Complex s(row[0], row[1]);
        const Complex want(row[2], row[3]);
        INFO("s = " << row[0] << " + " << row[1] << "i");
        CHECK(std::abs(zeta(s) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("Dirichlet L for the character mod 4 against mpmath") {
    const auto chi = chi4();
    for (const auto& row : oracle::kDirichletChi4) {
        const Complex want(row[2], row[3]);
        CHECK(std::abs(dirichlet_l(Complex(row[0], row[1]), chi) - want) <= 1e-10);
    }
}

TEST_CASE("pole handling at s = 1") {
    CHECK_THROWS_AS(zeta(Complex(1.0, 0.0)), PoleError);
    CHECK(std::abs(inverse_zeta(Complex(1.0, 0.0))) == 0.0);
    CHECK(std::abs(zeta_times_s_minus_one(Complex(1.0, 0.0)) - 1.0) < 1e-12);
    // (s - 1) zeta(s) = 1 + gamma (s - 1) + O((s - 1)^2)
    const Complex h(0.0, 1e-4);
    CHECK(std::abs(zeta_times_s_minus_one(1.0 + h) - (1.0 + constants::gamma * h)) < 1e-7);
}

TEST_CASE("windowed series matches pointwise evaluation") {
    const SeriesWindow w(PeriodicCoefficients::ones(), 1.0, 5000.0, 5000.5);
    for (double t : {5000.0, 5000.13, 5000.37, 5000.5}) {
        const Complex direct = zeta(Complex(1.0, t));
        CHECK(std::abs(w.value(t) - direct) < 1e-9);
        CHECK(w.log_abs(t) == doctest::Approx(std::log(std::abs(direct))).epsilon(1e-9));
    }
    const SeriesWindow wl(PeriodicCoefficients::from_character(chi4()), 1.0, 499.9, 500.1);
    const Complex want(oracle::kDirichletChi4[3][2], oracle::kDirichletChi4[3][3]);
    CHECK(std::abs(wl.value(500.0) - want) < 1e-9);
}

TEST_CASE("log zeta from the prime sum") {
    const Complex s(2.0, 1.0);
    const auto v = log_zeta_prime_sum(s, 100000);
    CHECK(std::abs(v.value - log_zeta(s)) <= v.tail_bound + 1e-12);
}

TEST_CASE("Bessel sequence against series") {
    const auto J = bessel_j_sequence(1.5, 6);
    // J_0(1.5), J_3(1.5) from the power series
    auto series = [](int n, double z) {
        double sum = 0.0, term = std::pow(z / 2.0, n) / std::tgamma(n + 1.0);
        for (int k = 0; k < 30; ++k) {
            sum += term;
            term *= -(z * z / 4.0) / ((k + 1.0) * (k + 1.0 + n));
        }
        return sum;
    };
    CHECK(J[0] == doctest::Approx(series(0, 1.5)).epsilon(1e-13));
    CHECK(J[3] == doctest::Approx(series(3, 1.5)).epsilon(1e-12));
}
