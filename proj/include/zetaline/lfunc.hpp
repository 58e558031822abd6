#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetaline/numeric.hpp"
#include "zetaline/zeta.hpp"

namespace zetaline {

inline constexpr int kEulerFactorOrder = 32;

// Local factor f_p(z) = sum_k a(p^k) z^k. Geometric and Hecke factors keep their exact
// rational form (numerator/denominator polynomials in z); other factors are truncated.
struct EulerFactor {
    std::int64_t p = 2;
    std::vector<Complex> coeffs;       // a(p^0) = 1, a(p^1), ..., a(p^K)
    std::vector<Complex> numerator;    // exact form, empty if unavailable
    std::vector<Complex> denominator;
    double tail_bound = 0.0;           // sum_{k>K} |a(p^k)| p^{-k} of the evaluation used

    Complex eval(Complex z) const;
    bool exact() const { return !denominator.empty(); }

    static EulerFactor geometric(std::int64_t p, Complex a, int K = kEulerFactorOrder);
    static EulerFactor hecke(std::int64_t p, double a, int K = kEulerFactorOrder);
    static EulerFactor from_coeffs(std::int64_t p, std::vector<Complex> coeffs, double tail_bound);
};

struct LocalExtrema {
    double min_log = 0.0;  // min over |z| = 1/p of log|f_p(z)|
    double max_log = 0.0;
};

// Circle sampling (4096 points) plus golden-section refinement.
LocalExtrema local_extrema(const EulerFactor& factor);
double local_max_log(const EulerFactor& factor);

enum class SeriesKind { CompletelyMultiplicative, General, PositiveCoefficients };

// Multiplicative coefficients given by a rule producing the Euler factor at each prime.
class MultiplicativeSeries {
public:
    using PrimeRule = std::function<Complex(std::int64_t p)>;
    using FactorRule = std::function<EulerFactor(std::int64_t p)>;

    static MultiplicativeSeries completely_multiplicative(std::string name, PrimeRule a_p);
    static MultiplicativeSeries general(std::string name, FactorRule rule, SeriesKind kind = SeriesKind::General);
    static MultiplicativeSeries ones();
    static MultiplicativeSeries zero();
    // |chi(p)| coefficients: 1 off the modulus, 0 on its prime divisors.
    static MultiplicativeSeries character_magnitude(std::int64_t modulus);
    // Indicator of the primes p = residue mod modulus (completely multiplicative).
    static MultiplicativeSeries prime_class_indicator(std::int64_t modulus, std::int64_t residue);
    // a single nontrivial factor 1/(1 - a p^{-s}) at one prime.
    static MultiplicativeSeries single_prime(std::int64_t p, Complex a);
    // Hecke factors (1 - a_p z + z^2)^{-1} with a_p supplied per prime.
    static MultiplicativeSeries hecke(std::string name, std::function<double(std::int64_t)> a_p);
    // CSV rows "p,a1,a2,...": a(p^k) for listed primes; unlisted primes have trivial factor.
    static MultiplicativeSeries from_csv(const std::string& path);

    const std::string& name() const { return name_; }
    SeriesKind kind() const { return kind_; }
    EulerFactor factor(std::int64_t p) const;
    Complex a_p(std::int64_t p) const;
    double abs_coefficient(std::int64_t p, int k) const;

    // Primes where |a(p)| != 1, if finitely many (enables closed-form anchoring to zeta).
    const std::optional<std::vector<std::int64_t>>& exceptional_primes() const { return exceptional_; }
    void set_exceptional_primes(std::vector<std::int64_t> primes) { exceptional_ = std::move(primes); }

private:
    std::string name_;
    SeriesKind kind_ = SeriesKind::General;
    PrimeRule prime_rule_;
    FactorRule factor_rule_;
    std::optional<std::vector<std::int64_t>> exceptional_;
};

struct LambdaSums {
    std::optional<double> lambda0;  // empty if some factor vanishes on its circle
    double lambda1 = 0.0;
    double tail_estimate = 0.0;
    std::string lambda0_error;
};

LambdaSums lambda_sums(const MultiplicativeSeries& series, std::int64_t P, int threads = 1);

enum class GrowthConvention {
    PrimeSum,        // sum_{p <= N} |a(p)|/p
    LambdaWeighted,  // sum_{n <= N} Lambda(n) |a(n)| / (n log n)
};

struct GrowthFit {
    double alpha = 0.0;
    double beta = 0.0;
    std::int64_t N_used = 0;
    double residual = 0.0;
};

// Least squares over N^{j/8}, j = 4..8. With fixed_alpha, beta is read off at N itself.
GrowthFit alpha_beta_fit(const MultiplicativeSeries& series, std::int64_t N, GrowthConvention convention,
                         std::optional<double> fixed_alpha = std::nullopt);

// Partial sum used by alpha_beta_fit at a single cutoff.
double growth_partial_sum(const MultiplicativeSeries& series, std::int64_t N, GrowthConvention convention);

// beta = gamma + log r for a simple pole with residue r.
double beta_from_residue(double r);

struct PredictedInfima {
    double direct = 0.0;
    double inverse = 0.0;
};

// Prime-sum convention: direct = e^{lambda0 - beta}/4 delta^alpha, inverse = e^{lambda1 - beta}/4 delta^alpha.
PredictedInfima predicted_infima(double alpha, double beta, double lambda0, double lambda1, double delta);

// Lambda-weighted convention: direct = S2 e^{-beta}/4 delta^alpha, inverse = e^{-beta}/4 delta^alpha,
// with S2 = sum |a(n)|^2 / n^2.
PredictedInfima lambda_weighted_infima(double alpha, double beta, double sum_sq, double delta);

// sum_n |a(n)|^2/n^2 through the Euler product over p <= N.
double sum_sq_coefficients(const MultiplicativeSeries& series, std::int64_t N);

// Extremal rotation prod_p (1 - eps_p |a(p)| p^{-s})^{-1} of a completely multiplicative series.
class GeneralExtremalSeries {
public:
    GeneralExtremalSeries(const MultiplicativeSeries& series, double delta, std::int64_t P);

    double delta() const { return delta_; }
    std::int64_t cutoff() const { return P_; }
    // Truncated product (requires sigma >= 1 + 1/log P).
    SeriesValue log_value(Complex s) const;
    // Closed form anchored to the extremal zeta product; needs finitely many |a(p)| != 1.
    double log_abs_closed(Complex s) const;
    bool has_closed_form() const { return closed_; }
    const std::vector<double>& signed_magnitudes() const { return b_; }

private:
    double delta_;
    std::int64_t P_;
    std::shared_ptr<const PrimeTable> table_;
    std::vector<double> b_;  // eps_p |a(p)| for p <= P
    bool closed_ = false;
    std::vector<std::pair<std::int64_t, double>> exceptional_;  // (p, |a(p)|)
};

// (direct, inverse) normalized constants for L(s, chi) with chi mod D.
std::pair<double, double> theorem13_constants(std::int64_t D, double delta);

// Sup-norm constants (inf max, sup min) from the same data: e^{lambda0-beta}/4 and 4 e^{beta-lambda1}.
std::pair<double, double> sup_norm_constants(double beta, double lambda0, double lambda1);

}  // namespace zetaline
