#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "zetaline/error.hpp"

namespace zetaline {

using Complex = std::complex<double>;

namespace constants {
inline constexpr double gamma = 0.57721566490153286060651209;
inline constexpr double pi = 3.14159265358979323846264338;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double log2 = 0.69314718055994530941723212;
inline constexpr double zeta2 = pi * pi / 6.0;
inline constexpr double mertens = 0.26149721284764278375542683;
// Stieltjes constant gamma_1.
inline constexpr double stieltjes1 = -0.07281584548367672486058638;
}  // namespace constants

// Complete list of primes up to a limit with cached natural logarithms.
class PrimeTable {
public:
    explicit PrimeTable(std::int64_t limit);

    std::int64_t limit() const { return limit_; }
    std::size_t size() const { return primes_.size(); }
    const std::vector<std::int64_t>& primes() const { return primes_; }
    const std::vector<double>& logs() const { return logs_; }
    std::int64_t prime(std::size_t i) const { return primes_[i]; }
    double log(std::size_t i) const { return logs_[i]; }

    // Number of primes <= x (x may exceed limit only up to limit).
    std::size_t count_upto(std::int64_t x) const;
    bool is_prime(std::int64_t n) const;

private:
    std::int64_t limit_;
    std::vector<std::int64_t> primes_;
    std::vector<double> logs_;
};

PrimeTable sieve_primes(std::int64_t limit);

// Process-wide cache of prime tables: returns a table with limit >= requested.
std::shared_ptr<const PrimeTable> shared_primes(std::int64_t limit);

struct PrimePower {
    std::int64_t p;
    int k;
};

std::vector<PrimePower> factorize(std::int64_t n);
double von_mangoldt(std::int64_t n);
int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);

// Value table of a Dirichlet character on residues 0..D-1.
class DirichletCharacter {
public:
    DirichletCharacter(std::int64_t modulus, std::vector<Complex> values, bool principal);

    std::int64_t modulus() const { return modulus_; }
    const std::vector<Complex>& values() const { return values_; }
    bool is_principal() const { return principal_; }
    bool is_real() const;
    Complex operator()(std::int64_t n) const;

private:
    std::int64_t modulus_;
    std::vector<Complex> values_;
    bool principal_;
};

std::vector<DirichletCharacter> characters_mod(std::int64_t D);
DirichletCharacter principal_character(std::int64_t D);

// SplitMix64 generator: fixed output sequence for a given seed on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Result of a quadrature or norm computation.
struct NormResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

}  // namespace zetaline
