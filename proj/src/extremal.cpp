#include "zetaline/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "zetaline/quadrature.hpp"

namespace zetaline {

int epsilon_sign(double x) {
    if (x < 0.0) throw DomainError("epsilon_sign requires x >= 0");
    const double k = std::floor(x / constants::two_pi);
    return std::fmod(k, 2.0) == 0.0 ? 1 : -1;
}

double eta_weight(double x) {
    if (x < 0.0) throw DomainError("eta_weight requires x >= 0");
    const double frac = x - std::floor(x);
    return frac > 0.5 ? 2.0 : 0.0;
}

double sin_minus(double x) { return std::max(0.0, -std::sin(x)); }

NormResult sin_minus_kernel_integral(double tol) {
    // sin(x/2) < 0 exactly on (2pi(2k+1), 2pi(2k+2)); elsewhere the integrand is 0.
    const int periods = 100000;
    const double X = 2.0 * constants::two_pi * periods;
    NormResult total{0.0, 0.0, 0, true};
    const double panel_tol = tol / (2.0 * periods);
    for (int k = periods - 1; k >= 0; --k) {
        const double a = constants::two_pi * (2 * k + 1);
        const double b = constants::two_pi * (2 * k + 2);
        auto r = integrate([](double x) { return -std::sin(0.5 * x) / (x * x); }, a, b, panel_tol);
        total.value += r.value;
        total.error_estimate += r.error_estimate;
        total.evaluations += r.evaluations;
        total.converged = total.converged && r.converged;
    }
    // Beyond X the kernel averages to 1/pi; the remainder is O(X^{-2}).
    total.value += 1.0 / (constants::pi * X);
    total.error_estimate += 2.0 / (X * X);
    total.converged = total.converged && total.error_estimate <= tol;
    return total;
}

ExtremalSeries::ExtremalSeries(double delta, std::int64_t cutoff, ExtremalMode mode)
    : delta_(delta), cutoff_(cutoff), mode_(mode) {
    if (delta < 0.0) throw DomainError("delta must be >= 0");
    if (cutoff < 2) throw DomainError("prime cutoff must be >= 2");
    table_ = shared_primes(cutoff);
    count_ = table_->count_upto(cutoff);
    signs_.resize(count_);
    for (std::size_t i = 0; i < count_; ++i) signs_[i] = static_cast<signed char>(epsilon_sign(delta * table_->log(i)));
}

SeriesValue log_zeta_delta_product(Complex s, const ExtremalSeries& series) {
    const double sigma = s.real();
    const double logP = std::log(static_cast<double>(series.cutoff()));
    if (sigma < 1.0 + 1.0 / logP)
        throw PrecisionError("truncated extremal product requires sigma >= 1 + 1/log P");
    const auto& tab = series.table();
    const bool pair = series.mode() == ExtremalMode::ReciprocalPair;
    Complex sum = 0.0;
    for (std::size_t i = series.prime_count(); i-- > 0;) {
        const Complex ps = std::exp(-s * tab.log(i));
        const double e = series.sign_at(i);
        // direct: -log(1 - e p^{-s}); pair: -log(1 + e p^{-s})
        sum += -std::log(1.0 - (pair ? -e : e) * ps);
    }
    const double P = static_cast<double>(series.cutoff());
    const double tail = std::pow(P, 1.0 - sigma) / ((sigma - 1.0) * logP);
    return {sum, tail};
}

SeriesValue zeta_delta_product(Complex s, const ExtremalSeries& series) {
    auto lv = log_zeta_delta_product(s, series);
    return {std::exp(lv.value), lv.tail_bound};
}

namespace {

// tanh for complex argument, stable for large real parts.
Complex stable_tanh(Complex w) {
    const double x = w.real(), y = w.imag();
    if (std::abs(x) > 20.0) return {x > 0 ? 1.0 : -1.0, 0.0};
    const double d = std::cosh(2.0 * x) + std::cos(2.0 * y);
    return {std::sinh(2.0 * x) / d, std::sin(2.0 * y) / d};
}

// tanh(pi w)/w with its Taylor series near 0.
Complex tanh_kernel(Complex w) {
    if (std::abs(w) < 0.05) {
        const Complex u = constants::pi * w;
        const Complex u2 = u * u;
        return constants::pi * (1.0 + u2 * (-1.0 / 3.0 + u2 * (2.0 / 15.0 + u2 * (-17.0 / 315.0 +
                                u2 * (62.0 / 2835.0 - u2 * 1382.0 / 155925.0)))));
    }
    return stable_tanh(constants::pi * w) / w;
}

// Distance from the segment [0, z] to the nearest pole i(k + 1/2).
double pole_clearance(Complex z) {
    double best = 1e300;
    const int kmax = static_cast<int>(std::abs(z)) + 2;
    const double len2 = std::norm(z);
    for (int k = -kmax - 1; k <= kmax; ++k) {
        const Complex pole(0.0, k + 0.5);
        double tau = len2 > 0.0 ? (pole * std::conj(z)).real() / len2 : 0.0;
        tau = std::clamp(tau, 0.0, 1.0);
        best = std::min(best, std::abs(pole - tau * z));
    }
    return best;
}

constexpr double kThetaZero = constants::gamma + 2.0 * constants::log2;

}  // namespace

SpecialFnValue theta_fn(Complex z) {
    if (z == Complex(0.0, 0.0)) return {kThetaZero, "origin", 0.0};
    if (z.real() == 0.0) {
        const double y = z.imag();
        if (std::abs(y) >= 0.5) throw PathError("imaginary-axis path crosses a pole of tanh(pi w)/w");
        // w = i v: tanh(pi w)/w dw = i tan(pi v)/v dv
        auto f = [](double v) {
            if (std::abs(v) < 0.05) {
                const double u2 = constants::pi * constants::pi * v * v;
                return constants::pi * (1.0 + u2 * (1.0 / 3.0 + u2 * (2.0 / 15.0 + u2 * (17.0 / 315.0 +
                                        u2 * (62.0 / 2835.0 + u2 * 1382.0 / 155925.0)))));
            }
            return std::tan(constants::pi * v) / v;
        };
        auto r = integrate(f, std::min(0.0, y), std::max(0.0, y), 1e-13);
        const double I = (y >= 0.0 ? r.value : -r.value);
        return {Complex(kThetaZero, -I), "imaginary axis, real quadrature", r.error_estimate};
    }
    if (pole_clearance(z) < 0.05) throw PathError("straight path passes within 0.05 of a pole");
    auto g = [z](double tau) { return tanh_kernel(z * tau) * z; };
    auto r = integrate_complex(g, 0.0, 1.0, 1e-13);
    return {kThetaZero - r.value, "straight segment", r.error_estimate};
}

double theta_real(Complex z) {
    if (z.real() == 0.0 && std::abs(z.imag()) <= 0.5) return kThetaZero;
    return theta_fn(z).value.real();
}

SpecialFnValue psi_fn(double sigma) {
    if (!(sigma > 0.0)) throw DomainError("psi_fn requires sigma > 0");
    auto f = [sigma](double t) { return std::exp(-sigma * t) / t; };
    double sum = 0.0, err = 0.0;
    int n = 1;
    std::vector<double> panels;
    for (;; ++n) {
        const double a = n - 0.5;
        if (std::exp(-sigma * a) < 1e-16 && n > 1) break;
        auto r = integrate(f, a, static_cast<double>(n), 1e-15 * std::exp(-sigma * a) / a + 1e-300);
        panels.push_back(r.value);
        err += r.error_estimate;
    }
    for (auto it = panels.rbegin(); it != panels.rend(); ++it) sum += *it;
    // Dropped panels: each is below e^{-sigma(n-1/2)} / (2(n-1/2)).
    const double a = n - 0.5;
    const double tail = std::exp(-sigma * a) / (2.0 * a * (1.0 - std::exp(-sigma)));
    return {std::log(sigma) + 2.0 * sum, "panels n-1/2..n up to n=" + std::to_string(n - 1), 2.0 * (err + tail)};
}

SpecialFnValue log_zeta_delta_closed(Complex s, double delta) {
    if (!(delta > 0.0)) throw DomainError("delta must be positive");
    if (s.real() < 1.0) throw DomainError("closed form requires Re s >= 1");
    auto th = theta_fn((s - 1.0) / delta);
    const Complex v = -std::log(delta) + th.value + std::log(zeta_times_s_minus_one(s));
    const double model_err = (std::abs(s) + 1.0) * std::exp(-1.0 / std::sqrt(delta));
    return {v, "closed form; " + th.path_note, th.err + model_err};
}

Complex zeta_delta_closed(Complex s, double delta) { return std::exp(log_zeta_delta_closed(s, delta).value); }

double log_abs_zeta_delta_closed(Complex s, double delta) {
    if (!(delta > 0.0)) throw DomainError("delta must be positive");
    if (s.real() < 1.0) throw DomainError("closed form requires Re s >= 1");
    return -std::log(delta) + theta_real((s - 1.0) / delta) + std::log(std::abs(zeta_times_s_minus_one(s)));
}

std::pair<double, double> lemma4_constants(double delta) {
    if (delta < 0.0 || delta > 1.0) throw DomainError("lemma4_constants requires 0 <= delta <= 1");
    const double eg = std::exp(-constants::gamma);
    return {delta * constants::pi * constants::pi * eg / 24.0, delta * eg / 4.0};
}

}  // namespace zetaline
