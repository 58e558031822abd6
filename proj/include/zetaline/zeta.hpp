#pragma once

#include <cstdint>
#include <vector>

#include "zetaline/numeric.hpp"

namespace zetaline {

// Euler-Maclaurin parameters for pointwise evaluation.
struct EvalParams {
    int em_terms = 50;          // N: main sum runs over n < N
    int bernoulli_order = 8;    // K: number of Bernoulli correction terms
    double target_abs_err = 1e-11;

    // N = max(50, ceil(3|t|)), K = 8, target 1e-11.
    static EvalParams defaults_for(Complex s);
};

struct EvalResult {
    Complex value;
    double error_bound = 0.0;
};

struct SeriesValue {
    Complex value;
    double tail_bound = 0.0;
};

// Dirichlet coefficients that repeat with period D: c(n) = coeff[n mod D].
class PeriodicCoefficients {
public:
    PeriodicCoefficients(std::int64_t period, std::vector<Complex> coeff);
    static PeriodicCoefficients ones();
    static PeriodicCoefficients from_character(const DirichletCharacter& chi);

    std::int64_t period() const { return period_; }
    Complex operator()(std::int64_t n) const { return coeff_[static_cast<std::size_t>(n % period_)]; }
    const std::vector<Complex>& coeff() const { return coeff_; }
    // Sum over one period; nonzero means a pole at s = 1.
    Complex period_sum() const { return period_sum_; }
    bool has_pole() const;

private:
    std::int64_t period_;
    std::vector<Complex> coeff_;
    Complex period_sum_;
};

// B_{2k}/(2k)! for k = 1..kMaxBernoulli.
inline constexpr int kMaxBernoulli = 22;
double bernoulli_ratio(int k);

// (e^z - 1)/z, accurate near z = 0.
Complex expm1_over(Complex z);

// Euler-Maclaurin evaluation of sum c(n) n^{-s}, main sum over n <= M*D, tails at a + M*D.
EvalResult periodic_series_em(Complex s, const PeriodicCoefficients& c, std::int64_t M, int K);

EvalResult zeta_eval(Complex s, const EvalParams& params);
Complex zeta(Complex s, const EvalParams& params);
Complex zeta(Complex s);

// zeta(s)(s-1): entire, equals 1 at s = 1.
Complex zeta_times_s_minus_one(Complex s);

// 1/zeta(s), with 1/zeta(1) = 0. Raises AnomalyError if |zeta| < 1e-13.
Complex inverse_zeta(Complex s);

// log zeta(s) for Re s > 1.
Complex log_zeta(Complex s);

SeriesValue log_zeta_prime_sum(Complex s, std::int64_t N);

Complex dirichlet_l(Complex s, const DirichletCharacter& chi, const EvalParams& params);
Complex dirichlet_l(Complex s, const DirichletCharacter& chi);

Complex mollifier(Complex s, std::int64_t X);

// (s-1) - gamma (s-1)^2, valid for |s-1| <= 1/4.
Complex inv_zeta_taylor(Complex s);

// Bessel J_0..J_order(z) by Miller backward recurrence, z >= 0.
std::vector<double> bessel_j_sequence(double z, int order);

// Batch evaluator of sum c(n) n^{-s} for s = sigma + it, t in [t_lo, t_hi].
// The finite main sum is expanded once in Chebyshev polynomials of t
// (Jacobi-Anger), so each point afterwards costs O(order + D*K).
class SeriesWindow {
public:
    SeriesWindow(PeriodicCoefficients coeffs, double sigma, double t_lo, double t_hi, double target_err = 1e-12);

    Complex value(double t) const;
    double log_abs(double t) const;
    double error_bound() const { return error_bound_; }
    std::int64_t terms() const { return M_ * coeffs_.period(); }
    int chebyshev_order() const { return static_cast<int>(cheb_.size()) - 1; }
    int bernoulli_order() const { return K_; }

private:
    Complex tail(Complex s) const;

    PeriodicCoefficients coeffs_;
    double sigma_;
    double t_lo_, t_hi_, center_, half_;
    std::int64_t M_ = 0;
    int K_ = 0;
    std::vector<Complex> cheb_;
    double error_bound_ = 0.0;
};

}  // namespace zetaline
