#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zetaline/lfunc.hpp"
#include "zetaline/numeric.hpp"

namespace zetaline {

using Int128 = __int128;

std::string to_string(Int128 v);

// Ramanujan tau(1..N) as exact integers, from (E4^3 - E6^2)/1728.
class TauTable {
public:
    explicit TauTable(std::int64_t N);

    std::int64_t size() const { return N_; }
    Int128 operator()(std::int64_t n) const;
    std::string str(std::int64_t n) const { return to_string((*this)(n)); }
    double value(std::int64_t n) const { return static_cast<double>((*this)(n)); }
    // tau(n) / n^{11/2}
    double normalized(std::int64_t n) const;
    // Exact test |tau(p)| <= 2 p^{11/2}, i.e. tau(p)^2 <= 4 p^11.
    bool deligne_holds(std::int64_t p) const;

    void write_csv(const std::string& path) const;

private:
    std::int64_t N_;
    std::vector<Int128> tau_;  // index 0 unused
};

// a(p^k), k = 0..K, from a(p^{k+1}) = a_p a(p^k) - a(p^{k-1}).
std::vector<double> hecke_extend(double a_p, std::int64_t p, int K);

struct SatoTateSample {
    std::uint64_t seed = 0;
    std::int64_t P = 0;
    std::vector<std::int64_t> primes;
    std::vector<double> angles;  // theta_p in [0, pi]

    double a(std::size_t i) const;  // 2 cos theta_p
    // a(p) for a prime p <= P (0 beyond the sample range).
    double a_of(std::int64_t p) const;
};

// theta_p drawn from (2/pi) sin^2 theta by inverse CDF: theta - sin theta cos theta = pi u.
SatoTateSample sato_tate_sample(std::uint64_t seed, std::int64_t P);
double sato_tate_inverse_cdf(double u);

// 2 (2/pi) integral_{-1}^{1} |t| sqrt(1 - t^2) dt by quadrature.
NormResult sato_tate_alpha();

std::int64_t catalan(int k);

enum class CoefficientSource { TauNormalized, SatoTate, DirichletMagnitude, Ones };

struct CoefficientOptions {
    std::uint64_t seed = 1;
    std::int64_t modulus = 4;  // for DirichletMagnitude
};

MultiplicativeSeries coefficient_series(CoefficientSource source, std::int64_t N, const CoefficientOptions& opts = {});
GrowthFit coefficient_alpha(CoefficientSource source, std::int64_t N, const CoefficientOptions& opts = {});

struct ExponentPair {
    std::string label;
    double lower = 0.0;  // exponent of the lower bound delta^lower
    double upper = 0.0;
};

struct ExponentTable {
    std::vector<ExponentPair> pairs;
    std::vector<std::pair<int, std::int64_t>> catalan_exponents;  // (k, C(k)), k = 1..4
};

ExponentTable exponent_table(double p = 0.5);

struct SupConstants {
    double inf_max = 0.0;  // coefficient of delta^{alpha}
    double sup_min = 0.0;  // coefficient of delta^{-alpha}
    double alpha = 0.0;
};

// Sup-norm constants for a Sato-Tate-type form with prime-sum constant B (required).
SupConstants sato_tate_sup_constants(double B, double lambda0, double lambda1);

// Input to the two-sided short-interval bound check at sigma = 1.
struct BoundSeries {
    std::string name;
    double alpha = 0.0;
    // Builds log|A(1+it)| valid on [t_lo, t_hi].
    std::function<std::function<double(double)>(double, double)> log_abs;
};

// Primes p = 1 mod 4: |A| = sqrt|zeta L(chi_4) (1 - 2^{-s}) prod_{p = 3 mod 4} (1 - p^{-2s})|.
BoundSeries split_prime_bound_series(std::int64_t fit_N = 1000000);
// Hecke product over p <= P with Sato-Tate angles drawn from seed.
BoundSeries sato_tate_bound_series(std::uint64_t seed, std::int64_t P = 100000);
// alpha from the prime-sum fit; rejects alpha >= 1 - fit tolerance.
BoundSeries bound_series_from(const MultiplicativeSeries& series, std::int64_t fit_N,
                              std::function<std::function<double(double)>(double, double)> log_abs);

struct BoundRow {
    double delta;
    double T;
    double integral;
    double lower;
    double upper;
    bool ok;
};

struct BoundReport {
    std::string name;
    double alpha = 0.0;
    double c = 0.0;
    double C = 0.0;
    double calibration_delta = 0.0;
    std::vector<BoundRow> rows;
    int violations = 0;
};

struct BoundCheckOptions {
    std::vector<double> deltas{0.1, 0.2, 0.4};
    int T_samples = 20;
    double T_lo = 10.0;
    double T_hi = 1.0e4;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    int threads = 1;
};

// c, C frozen at the largest delta; rows for every (delta, T).
BoundReport theorem19_check(const BoundSeries& series, const BoundCheckOptions& opts = {});

}  // namespace zetaline
