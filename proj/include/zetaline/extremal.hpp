#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zetaline/numeric.hpp"
#include "zetaline/zeta.hpp"

namespace zetaline {

// (-1)^floor(x / 2pi), x >= 0.
int epsilon_sign(double x);
// 2 if the fractional part of x lies in (1/2, 1), else 0.
double eta_weight(double x);
// max(0, -sin x).
double sin_minus(double x);

// Integral of sin_minus(x/2)/x^2 over (0, inf): exact panels plus an averaged tail.
NormResult sin_minus_kernel_integral(double tol = 1e-10);

enum class ExtremalMode {
    Direct,          // prod (1 - eps_p p^{-s})^{-1}
    ReciprocalPair,  // zeta(2s) divided by the direct product
};

// Sign pattern eps_p = epsilon_sign(delta log p) on primes up to a cutoff.
class ExtremalSeries {
public:
    ExtremalSeries(double delta, std::int64_t cutoff, ExtremalMode mode = ExtremalMode::Direct);

    double delta() const { return delta_; }
    std::int64_t cutoff() const { return cutoff_; }
    ExtremalMode mode() const { return mode_; }
    const PrimeTable& table() const { return *table_; }
    std::size_t prime_count() const { return count_; }
    const std::vector<signed char>& signs() const { return signs_; }
    int sign_at(std::size_t i) const { return signs_[i]; }

private:
    double delta_;
    std::int64_t cutoff_;
    ExtremalMode mode_;
    std::shared_ptr<const PrimeTable> table_;
    std::size_t count_;
    std::vector<signed char> signs_;
};

// Truncated product; value holds log of the product, tail_bound bounds sum_{p>P} p^{-sigma}.
SeriesValue log_zeta_delta_product(Complex s, const ExtremalSeries& series);
SeriesValue zeta_delta_product(Complex s, const ExtremalSeries& series);

struct SpecialFnValue {
    Complex value;
    std::string path_note;
    double err = 0.0;
};

// gamma + log 4 - integral_0^z tanh(pi w)/w dw along the straight segment.
SpecialFnValue theta_fn(Complex z);
// Real part of theta_fn(z); exact constant on the imaginary segment |Im z| < 1/2.
double theta_real(Complex z);

// log s + 2 sum_n integral_{n-1/2}^{n} e^{-s t}/t dt.
SpecialFnValue psi_fn(double sigma);

// log of the extremal product via the special-function closed form.
SpecialFnValue log_zeta_delta_closed(Complex s, double delta);
Complex zeta_delta_closed(Complex s, double delta);
// log|zeta_delta(s)| via the closed form (only the real part of Theta is needed).
double log_abs_zeta_delta_closed(Complex s, double delta);

// (delta pi^2 e^{-gamma}/24, delta e^{-gamma}/4)
std::pair<double, double> lemma4_constants(double delta);

}  // namespace zetaline
