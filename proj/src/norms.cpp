#include "zetaline/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "zetaline/extremal.hpp"
#include "zetaline/quadrature.hpp"
#include "zetaline/zeta.hpp"

namespace zetaline {

Target Target::zeta() {
    Target t;
    t.kind = TargetKind::Zeta;
    return t;
}

Target Target::inverse_zeta() {
    Target t;
    t.kind = TargetKind::InverseZeta;
    return t;
}

Target Target::dirichlet(const DirichletCharacter& chi) {
    Target t;
    t.kind = TargetKind::DirichletL;
    t.chi = chi;
    return t;
}

Target Target::zeta_delta(double delta) {
    Target t;
    t.kind = TargetKind::ZetaDelta;
    t.extremal_delta = delta;
    return t;
}

Target Target::zeta_two_s_over_zeta_delta(double delta) {
    Target t;
    t.kind = TargetKind::ZetaTwoSOverZetaDelta;
    t.extremal_delta = delta;
    return t;
}

Target Target::constant_value(double c) {
    Target t;
    t.kind = TargetKind::Constant;
    t.constant = c;
    return t;
}

Target Target::generic(std::string label, std::function<LogAbsFn(double, double, double)> factory) {
    Target t;
    t.kind = TargetKind::Generic;
    t.label = std::move(label);
    t.factory = std::move(factory);
    return t;
}

std::string Target::name() const {
    switch (kind) {
        case TargetKind::Zeta: return "zeta";
        case TargetKind::InverseZeta: return "inverse_zeta";
        case TargetKind::DirichletL: return "dirichlet_l_mod_" + std::to_string(chi ? chi->modulus() : 0);
        case TargetKind::ZetaDelta: return "zeta_delta";
        case TargetKind::ZetaTwoSOverZetaDelta: return "zeta_2s_over_zeta_delta";
        case TargetKind::Constant: return "constant";
        case TargetKind::Generic: return label.empty() ? "generic" : label;
    }
    return "unknown";
}

bool Target::touches_pole() const {
    return kind == TargetKind::Zeta || kind == TargetKind::InverseZeta ||
           (kind == TargetKind::DirichletL && chi && chi->is_principal());
}

namespace {

// log|zeta(s)| near the pole, from the regular function zeta(s)(s-1).
double log_abs_zeta_near_one(Complex s) {
    return std::log(std::abs(zeta_times_s_minus_one(s))) - std::log(std::abs(s - 1.0));
}

}  // namespace

LogAbsFn make_log_abs(const Target& target, double sigma, double t_lo, double t_hi) {
    const double tmax = std::max(std::abs(t_lo), std::abs(t_hi));
    switch (target.kind) {
        case TargetKind::Zeta:
        case TargetKind::InverseZeta: {
            const double sign = target.kind == TargetKind::Zeta ? 1.0 : -1.0;
            if (tmax < 2.0) {
                return [sigma, sign](double t) { return sign * log_abs_zeta_near_one(Complex(sigma, t)); };
            }
            auto win = std::make_shared<SeriesWindow>(PeriodicCoefficients::ones(), sigma, t_lo, t_hi);
            return [win, sign](double t) { return sign * win->log_abs(t); };
        }
        case TargetKind::DirichletL: {
            if (!target.chi) throw DomainError("Dirichlet target requires a character");
            const auto chi = *target.chi;
            if (chi.is_principal() && tmax < 2.0) {
                return [sigma, chi](double t) {
                    const Complex s(sigma, t);
                    double v = log_abs_zeta_near_one(s);
                    for (const auto& pk : factorize(chi.modulus()))
                        v += std::log(std::abs(1.0 - std::exp(-s * std::log(static_cast<double>(pk.p)))));
                    return v;
                };
            }
            auto win =
                std::make_shared<SeriesWindow>(PeriodicCoefficients::from_character(chi), sigma, t_lo, t_hi);
            return [win](double t) { return win->log_abs(t); };
        }
        case TargetKind::ZetaDelta: {
            const double d = target.extremal_delta;
            return [sigma, d](double t) { return log_abs_zeta_delta_closed(Complex(sigma, t), d); };
        }
        case TargetKind::ZetaTwoSOverZetaDelta: {
            const double d = target.extremal_delta;
            return [sigma, d](double t) {
                const Complex s(sigma, t);
                return std::log(std::abs(zeta(2.0 * s))) - log_abs_zeta_delta_closed(s, d);
            };
        }
        case TargetKind::Constant: {
            const double v = std::log(std::abs(target.constant));
            return [v](double) { return v; };
        }
        case TargetKind::Generic:
            if (!target.factory) throw DomainError("generic target requires an evaluator factory");
            return target.factory(sigma, t_lo, t_hi);
    }
    throw DomainError("unknown target kind");
}

namespace {

void validate(const NormRequest& req) {
    if (!(req.delta > 0.0) || req.delta > 2.0) throw DomainError("norm interval length must be in (0, 2]");
    if (req.sigma < 1.0) throw DomainError("norms require sigma >= 1");
    if (!(req.tol > 0.0)) throw DomainError("tolerance must be positive");
    if ((req.mode == NormMode::Lp || req.mode == NormMode::NegLp) && !(req.p > 0.0))
        throw DomainError("Lp exponent must be positive");
    const double a = req.T, b = req.T + req.delta;
    if (req.target.touches_pole() && req.sigma == 1.0 && a <= 0.0 && b >= 0.0 &&
        req.target.kind != TargetKind::InverseZeta)
        throw DomainError("interval contains the pole at s = 1");
}

std::vector<double> effective_breakpoints(const NormRequest& req) {
    std::vector<double> bp = req.breakpoints;
    const double a = req.T, b = req.T + req.delta;
    if (req.target.touches_pole() && req.sigma == 1.0 && a < 0.0 && b > 0.0) bp.push_back(0.0);
    return bp;
}

NormResult extremum(const LogAbsFn& g, double a, double b, bool want_max) {
    const int n = 2048;
    const double h = (b - a) / n;
    double best = want_max ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    int best_k = 0;
    for (int k = 0; k <= n; ++k) {
        const double v = g(a + h * k);
        if (want_max ? v > best : v < best) {
            best = v;
            best_k = k;
        }
    }
    const double sampled = best;
    long evals = n + 1;
    if (std::isfinite(best)) {
        // Golden-section polish on the neighbouring bracket.
        double lo = a + h * std::max(0, best_k - 1);
        double hi = a + h * std::min(n, best_k + 1);
        const double r = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
        auto score = [&](double x) { return want_max ? g(x) : -g(x); };
        double f1 = score(x1), f2 = score(x2);
        evals += 2;
        while (hi - lo > 1e-13 * (1.0 + std::abs(hi))) {
            if (f1 > f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - r * (hi - lo);
                f1 = score(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + r * (hi - lo);
                f2 = score(x2);
            }
            ++evals;
        }
        const double polished = want_max ? std::max(f1, f2) : -std::max(f1, f2);
        if (want_max ? polished > best : polished < best) best = polished;
    }
    const double value = std::exp(best);
    const double err = std::isfinite(best) ? std::abs(value - std::exp(sampled)) : 0.0;
    return {value, err, evals, true};
}

}  // namespace

NormResult interval_norm(const NormRequest& req) {
    validate(req);
    const double a = req.T, b = req.T + req.delta;
    const LogAbsFn g = make_log_abs(req.target, req.sigma, a, b);
    if (req.mode == NormMode::Sup || req.mode == NormMode::Min) return extremum(g, a, b, req.mode == NormMode::Sup);

    const auto bp = effective_breakpoints(req);
    std::function<double(double)> f;
    switch (req.mode) {
        case NormMode::L1: f = [&g](double t) { return std::exp(g(t)); }; break;
        case NormMode::Lp: f = [&g, p = req.p](double t) { return std::exp(p * g(t)); }; break;
        case NormMode::NegLp:
            f = [&g, p = req.p](double t) {
                const double v = g(t);
                if (v == -std::numeric_limits<double>::infinity())
                    throw AnomalyError("negative-power norm of a target vanishing on the interval");
                return std::exp(-p * v);
            };
            break;
        case NormMode::LogL1: f = g; break;
        default: break;
    }
    NormResult r = integrate(f, a, b, req.tol, bp);
    if (!req.normalized) return r;
    r.value /= req.delta;
    r.error_estimate /= req.delta;
    if (req.mode == NormMode::Lp || req.mode == NormMode::NegLp) {
        const double inv_p = 1.0 / req.p;
        const double root = std::pow(r.value, inv_p);
        r.error_estimate = inv_p * root / std::max(r.value, 1e-300) * r.error_estimate;
        r.value = root;
    }
    return r;
}

double jensen_gap(const NormRequest& req) {
    NormRequest l1 = req;
    l1.mode = NormMode::L1;
    l1.normalized = true;
    NormRequest lg = req;
    lg.mode = NormMode::LogL1;
    lg.normalized = true;
    const auto m1 = interval_norm(l1);
    const auto m2 = interval_norm(lg);
    return std::log(m1.value) - m2.value;
}

Residual theorem6_residual(double delta, ResidualKind which) {
    if (!(delta > 0.0) || delta > 0.5) throw DomainError("theorem6_residual requires 0 < delta <= 0.5");
    NormRequest req;
    req.T = -0.5 * delta;
    req.delta = delta;
    req.sigma = 1.0;
    req.mode = NormMode::LogL1;
    req.normalized = true;
    req.tol = 1e-13;
    Residual out;
    const double base = std::log(delta) - 2.0 * constants::log2 - constants::gamma;
    if (which == ResidualKind::Inverse) {
        req.target = Target::zeta_delta(delta);
        const auto r = interval_norm(req);
        out.observed = -r.value;
        out.predicted = base;
        out.error_estimate = r.error_estimate;
    } else {
        req.target = Target::zeta_two_s_over_zeta_delta(delta);
        const auto r = interval_norm(req);
        out.observed = r.value;
        out.predicted = base + std::log(constants::zeta2);
        out.error_estimate = r.error_estimate;
    }
    out.value = out.observed - out.predicted;
    return out;
}

NormResult example1_value(double delta) {
    if (!(delta > 0.0) || delta > 0.3) throw DomainError("example1_value requires 0 < delta <= 0.3");
    auto f = [delta](double t) { return std::abs(inverse_zeta(Complex(1.0, t - 0.5 * delta))); };
    return integrate(f, 0.0, delta, 1e-14, {0.5 * delta});
}

double example2_integrand(double t) { return std::pow(std::abs(t * t - 1.0 / 6.0), 0.25) * std::sqrt(std::abs(t)); }

NormResult example2_ratio() {
    const double r = 1.0 / std::sqrt(6.0);
    auto res = integrate(example2_integrand, -0.5, 0.5, 1e-12, {-r, 0.0, r});
    res.value *= 4.0;
    res.error_estimate *= 4.0;
    return res;
}

std::pair<double, double> theorem3_predictions(double delta) {
    if (!(delta > 0.0) || delta > 1.0) throw DomainError("theorem3_predictions requires 0 < delta <= 1");
    const double eg = std::exp(-constants::gamma);
    return {constants::pi * constants::pi * eg / 24.0 * delta * delta, eg / 4.0 * delta * delta};
}

std::pair<double, double> sup_norm_predictions(double delta) {
    if (!(delta > 0.0) || delta > 1.0) throw DomainError("sup_norm_predictions requires 0 < delta <= 1");
    return {std::exp(-constants::gamma) * constants::pi * constants::pi * delta / 24.0,
            4.0 * std::exp(constants::gamma) / delta};
}

std::string to_string(NormMode m) {
    switch (m) {
        case NormMode::L1: return "L1";
        case NormMode::Lp: return "Lp";
        case NormMode::NegLp: return "negLp";
        case NormMode::LogL1: return "logL1";
        case NormMode::Sup: return "sup";
        case NormMode::Min: return "min";
    }
    return "?";
}

NormMode parse_norm_mode(const std::string& s) {
    if (s == "L1" || s == "l1") return NormMode::L1;
    if (s == "Lp" || s == "lp") return NormMode::Lp;
    if (s == "negLp" || s == "neglp") return NormMode::NegLp;
    if (s == "logL1" || s == "logl1") return NormMode::LogL1;
    if (s == "sup") return NormMode::Sup;
    if (s == "min") return NormMode::Min;
    throw UsageError("unknown norm mode: " + s);
}

}  // namespace zetaline
