#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetaline/numeric.hpp"

namespace zetaline {

enum class NormMode { L1, Lp, NegLp, LogL1, Sup, Min };

enum class TargetKind {
    Zeta,
    InverseZeta,
    DirichletL,
    ZetaDelta,               // extremal product via its closed form
    ZetaTwoSOverZetaDelta,   // zeta(2s) / zeta_delta(s)
    Constant,
    Generic,
};

// log|A(sigma + it)| as a function of t.
using LogAbsFn = std::function<double(double)>;

// Handle to an evaluable Dirichlet series. Norms only need log|A|.
struct Target {
    TargetKind kind = TargetKind::Zeta;
    std::optional<DirichletCharacter> chi;
    double extremal_delta = 0.0;
    double constant = 1.0;
    // Generic targets: factory producing log|A(sigma+it)| on [t_lo, t_hi].
    std::function<LogAbsFn(double sigma, double t_lo, double t_hi)> factory;
    std::string label;

    static Target zeta();
    static Target inverse_zeta();
    static Target dirichlet(const DirichletCharacter& chi);
    static Target zeta_delta(double delta);
    static Target zeta_two_s_over_zeta_delta(double delta);
    static Target constant_value(double c);
    static Target generic(std::string label, std::function<LogAbsFn(double, double, double)> factory);

    std::string name() const;
    // Whether zeta's pole at s=1 is a factor of this target (numerator or denominator).
    bool touches_pole() const;
};

// Builds the log-modulus evaluator on [t_lo, t_hi]; batch-friendly (windowed series for large t).
LogAbsFn make_log_abs(const Target& target, double sigma, double t_lo, double t_hi);

struct NormRequest {
    Target target = Target::zeta();
    double T = 0.0;
    double delta = 0.1;
    double sigma = 1.0;
    NormMode mode = NormMode::L1;
    double p = 1.0;
    bool normalized = false;
    double tol = 1e-10;
    std::vector<double> breakpoints;
};

NormResult interval_norm(const NormRequest& req);

// log((1/delta) int |f|) - (1/delta) int log|f|; nonnegative up to quadrature error.
double jensen_gap(const NormRequest& req);

struct Residual {
    double value = 0.0;       // observed minus predicted
    double observed = 0.0;    // normalized log-integral
    double predicted = 0.0;
    double error_estimate = 0.0;
};

enum class ResidualKind { Inverse, Direct };

// Normalized log-integral of |zeta_delta|^{-1} (Inverse) or |zeta(2s)/zeta_delta(s)| (Direct)
// over [-delta/2, delta/2] on Re s = 1, minus its predicted constant.
Residual theorem6_residual(double delta, ResidualKind which);

// int_0^delta |zeta(1 + i(t - delta/2))|^{-1} dt
NormResult example1_value(double delta);
// 4 int_{-1/2}^{1/2} |t^2 - 1/6|^{1/4} |t|^{1/2} dt
NormResult example2_ratio();
double example2_integrand(double t);

// Predicted infima of the plain L1 norms of zeta and 1/zeta over an interval of length delta.
std::pair<double, double> theorem3_predictions(double delta);
// (inf_T max |zeta|, sup_T min |zeta|) predictions.
std::pair<double, double> sup_norm_predictions(double delta);

std::string to_string(NormMode m);
NormMode parse_norm_mode(const std::string& s);

}  // namespace zetaline
