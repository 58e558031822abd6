#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zetaline/numeric.hpp"

namespace zetaline {

enum class TargetSide {
    ForInverse,  // p^{-iT} ~ eps_p
    ForDirect,   // p^{-iT} ~ -eps_p
};

// Desired values of (T log p) mod 2pi for a set of primes.
struct PhaseTargets {
    std::vector<std::int64_t> primes;
    std::vector<double> angles;  // canonical, in [0, 2pi)
    double tolerance = 0.0;
};

PhaseTargets make_phase_targets(std::vector<std::int64_t> primes, std::vector<double> angles, double tolerance = 0.0);
PhaseTargets phase_targets(double delta, std::int64_t P, TargetSide which);

// Max over primes of the circle distance between T log p and its target angle.
double discrepancy(const PhaseTargets& targets, double T);

struct ShiftCandidate {
    double T = 0.0;
    double discrepancy = 0.0;
    std::optional<NormResult> achieved_norm;
    bool converged = true;
    long evaluations = 0;
};

struct TracePoint {
    double T;
    double discrepancy;
};

struct SearchOptions {
    long budget = 2'000'000'000;  // maximum number of coarse grid points
    int keep = 1;                 // number of refined candidates returned
    int threads = 1;
};

// Best shifts in [T_lo, T_hi], ordered by (discrepancy, T).
std::vector<ShiftCandidate> search_shifts(const PhaseTargets& targets, double T_lo, double T_hi,
                                          const SearchOptions& opts, std::vector<TracePoint>* trace = nullptr);
ShiftCandidate search_shift(const PhaseTargets& targets, double T_max, long budget);

struct SegmentResult {
    double T_lo = 0.0;
    double T_hi = 0.0;
    int prime_count = 0;
    ShiftCandidate best;
    double ratio = 0.0;
};

struct EmpiricalResult {
    ShiftCandidate best;  // norm is over [T - delta/2, T + delta/2]
    double predicted = 0.0;
    double ratio = 0.0;
    std::vector<SegmentResult> segments;
    std::vector<TracePoint> trace;
};

struct EmpiricalOptions {
    int candidates_per_segment = 4;
    int threads = 1;
    double T_min = 10.0;
};

// Searches shifts up to T_max that align small primes with the extremal sign
// pattern, then measures the plain L1 norm of zeta (direct) or 1/zeta (inverse).
EmpiricalResult empirical_infimum(double delta, TargetSide which, double T_max, const EmpiricalOptions& opts = {});

// Number of leading primes targeted when searching up to T_hi.
int search_prime_count(double T_hi);

}  // namespace zetaline
