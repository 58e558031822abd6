#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetaline/report.hpp"

namespace zetaline {

// Zero / empty fields fall back to per-suite defaults.
struct RunConfig {
    std::vector<double> deltas;
    double sigma = 1.0;
    std::vector<double> t_max;          // search accepts several levels; other commands use the largest
    int t_samples = 0;
    std::int64_t prime_limit = 0;
    double tol = 0.0;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string mode;                   // search/scan: direct | inverse, or a norm mode
    std::vector<std::int64_t> primes;   // search with explicit targets
    std::vector<double> targets;        // target angles, same length as primes (or one shared)
    std::int64_t modulus = 4;           // scan dirichlet
};

const std::vector<std::string>& verify_suites();

// Runs one named suite; rows are check,predicted,observed,tolerance,pass.
Report run_verify(const std::string& suite, const RunConfig& cfg);

// Norm table with columns target,mode,sigma,T,delta,value,err,predicted,ratio.
Report run_scan(const std::string& target, const RunConfig& cfg);

// Shift search (explicit targets or extremal sign pattern); includes a discrepancy trace section.
Report run_search(const RunConfig& cfg);

}  // namespace zetaline
