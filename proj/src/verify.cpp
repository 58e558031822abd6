#include "zetaline/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "zetaline/extremal.hpp"
#include "zetaline/lfunc.hpp"
#include "zetaline/modular.hpp"
#include "zetaline/norms.hpp"
#include "zetaline/parallel.hpp"
#include "zetaline/shift_search.hpp"
#include "zetaline/zeta.hpp"

namespace zetaline {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kBigOMargin = 1.3;

std::vector<double> or_default(const std::vector<double>& v, std::vector<double> d) { return v.empty() ? d : v; }
int or_default(int v, int d) { return v > 0 ? v : d; }
double or_default(double v, double d) { return v > 0.0 ? v : d; }
std::int64_t or_default(std::int64_t v, std::int64_t d) { return v > 0 ? v : d; }
int threads_of(const RunConfig& c) { return c.threads > 0 ? c.threads : default_threads(); }
double max_of(const std::vector<double>& v, double d) { return v.empty() ? d : *std::max_element(v.begin(), v.end()); }

std::string num(double x) { return format_cell(x); }

std::vector<double> random_points(std::uint64_t seed, int n, double lo, double hi) {
    SplitMix64 rng(seed);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (auto& x : out) x = lo + rng.uniform() * (hi - lo);
    return out;
}

NormResult norm_of(const Target& target, double T, double delta, double sigma, NormMode mode, double p = 1.0,
                   bool normalized = false, double tol = 1e-10) {
    NormRequest req;
    req.target = target;
    req.T = T;
    req.delta = delta;
    req.sigma = sigma;
    req.mode = mode;
    req.p = p;
    req.normalized = normalized;
    req.tol = tol;
    return interval_norm(req);
}

// ---------------------------------------------------------------------------

Report suite_special_fns(const RunConfig& cfg) {
    Report r = Report::checks("verify", "special-fns", cfg.seed);
    const double h = 1e-4;
    for (double s : {0.5, 1.0, 2.0, 5.0}) {
        const double d = (psi_fn(s + h).value.real() - psi_fn(s - h).value.real()) / (2.0 * h);
        const double want = std::tanh(s / 4.0) / s;
        r.add_check("psi_derivative_sigma=" + num(s), want, d, 1e-6, std::abs(d - want) <= 1e-6);
    }
    const double lim = std::log(constants::pi) - constants::gamma;
    const double p001 = psi_fn(0.01).value.real();
    r.add_check("psi_limit_sigma=0.01", lim, p001, 0.1, std::abs(p001 - lim) <= 0.1);
    for (double sigma : {1.01, 1.1}) {
        for (double delta : {0.1, 0.5}) {
            const double x = (sigma - 1.0) / delta;
            const double th = theta_fn(Complex(x, 0.0)).value.real();
            const double want = std::log(4.0 * constants::pi) - psi_fn(4.0 * constants::pi * x).value.real();
            r.add_check("theta_psi_bridge_sigma=" + num(sigma) + "_delta=" + num(delta), want, th, 1e-6,
                        std::abs(th - want) <= 1e-6);
        }
    }
    return r;
}

Report suite_sin_kernel(const RunConfig& cfg) {
    Report r = Report::checks("verify", "sin-kernel", cfg.seed);
    const NormResult v = sin_minus_kernel_integral(or_default(cfg.tol, 1e-10));
    const double want = (constants::gamma + constants::log2 - 1.0) / 4.0;
    r.add_check("sin_minus_kernel_integral", want, v.value, 1e-6, std::abs(v.value - want) <= 1e-6);
    return r;
}

Report suite_theorem6(const RunConfig& cfg) {
    Report r = Report::checks("verify", "theorem6", cfg.seed);
    auto deltas = or_default(cfg.deltas, {0.4, 0.2, 0.1});
    std::sort(deltas.begin(), deltas.end(), std::greater<>());
    for (auto kind : {ResidualKind::Inverse, ResidualKind::Direct}) {
        const std::string tag = kind == ResidualKind::Inverse ? "inverse" : "direct";
        std::vector<Residual> res;
        for (double d : deltas) res.push_back(theorem6_residual(d, kind));
        // Big-O constant frozen at the largest delta, with the 30% margin allowed on the decay rate.
        const double C = kBigOMargin * std::abs(res.front().value) / (deltas.front() * deltas.front());
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            const double bound = C * deltas[i] * deltas[i];
            r.add_check("residual_" + tag + "_delta=" + num(deltas[i]), res[i].predicted, res[i].observed, bound,
                        std::abs(res[i].value) <= bound * (1.0 + 1e-9));
        }
        for (std::size_t i = 0; i + 1 < deltas.size(); ++i) {
            const double ratio = res[i].value / res[i + 1].value;
            const double expect = (deltas[i] / deltas[i + 1]) * (deltas[i] / deltas[i + 1]);
            r.add_check("decay_" + tag + "_" + num(deltas[i]) + "/" + num(deltas[i + 1]), expect, ratio, 1.0,
                        ratio >= expect - 1.0 && ratio <= expect + 1.0);
        }
    }
    return r;
}

Report suite_flatness(const RunConfig& cfg) {
    Report r = Report::checks("verify", "flatness", cfg.seed);
    auto deltas = or_default(cfg.deltas, {0.4, 0.2, 0.1});
    std::sort(deltas.begin(), deltas.end(), std::greater<>());
    const std::vector<double> xs{-0.9, -0.5, 0.0, 0.5, 0.9};
    std::vector<double> dev;
    for (double d : deltas) {
        const double level = -std::log(d) + constants::gamma + 2.0 * constants::log2;
        double worst = 0.0;
        for (double x : xs) worst = std::max(worst, std::abs(log_abs_zeta_delta_closed(Complex(1.0, x * d / 2.0), d) - level));
        dev.push_back(worst);
    }
    const double C = kBigOMargin * dev.front() / (deltas.front() * deltas.front());
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double bound = C * deltas[i] * deltas[i];
        r.add_check("flatness_delta=" + num(deltas[i]), bound, dev[i], bound, dev[i] <= bound * (1.0 + 1e-9));
    }
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i) {
        const double ratio = dev[i] / dev[i + 1];
        const double expect = (deltas[i] / deltas[i + 1]) * (deltas[i] / deltas[i + 1]);
        r.add_check("flatness_decay_" + num(deltas[i]) + "/" + num(deltas[i + 1]), expect, ratio, 0.3 * expect,
                    std::abs(ratio - expect) <= 0.3 * expect);
    }
    r.meta.emplace_back("C", num(C));
    return r;
}

Report suite_theorem3(const RunConfig& cfg) {
    Report r = Report::checks("verify", "theorem3", cfg.seed);
    const auto deltas = or_default(cfg.deltas, {0.1, 0.2});
    const int n = or_default(cfg.t_samples, 50);
    const double T_hi = max_of(cfg.t_max, 1e4);
    const double sigma = cfg.sigma;
    const double tol = or_default(cfg.tol, 1e-10);
    const auto Ts = random_points(cfg.seed, n, 10.0, T_hi);
    struct Sample {
        double T, delta, zeta_l1, inv_l1, gap_zeta, gap_inv;
    };
    std::vector<std::pair<double, double>> jobs;
    for (double d : deltas)
        for (double T : Ts) jobs.emplace_back(T, d);
    auto samples = parallel_map<Sample>(jobs.size(), threads_of(cfg), [&](std::size_t i) {
        const auto [T, d] = jobs[i];
        NormRequest req;
        req.T = T;
        req.delta = d;
        req.sigma = sigma;
        req.tol = tol;
        req.target = Target::zeta();
        const double z = interval_norm(req).value;
        const double gz = jensen_gap(req);
        req.target = Target::inverse_zeta();
        const double iz = interval_norm(req).value;
        const double gi = jensen_gap(req);
        return Sample{T, d, z, iz, gz, gi};
    });
    Table tab;
    tab.columns = {"T", "delta", "zeta_l1", "inverse_l1", "jensen_zeta", "jensen_inverse"};
    double min_gap = INFINITY;
    for (double d : deltas) {
        const auto [pi, pii] = theorem3_predictions(d);
        double min_z = INFINITY, min_i = INFINITY;
        int viol_z = 0, viol_i = 0;
        for (const auto& s : samples) {
            if (s.delta != d) continue;
            min_z = std::min(min_z, s.zeta_l1);
            min_i = std::min(min_i, s.inv_l1);
            if (s.zeta_l1 < 0.9 * pi) ++viol_z;
            if (s.inv_l1 < 0.9 * pii) ++viol_i;
        }
        r.add_check("lower_bound_zeta_delta=" + num(d), 0.9 * pi, min_z, 0.0, viol_z == 0);
        r.add_check("lower_bound_inverse_delta=" + num(d), 0.9 * pii, min_i, 0.0, viol_i == 0);
    }
    for (const auto& s : samples) {
        min_gap = std::min({min_gap, s.gap_zeta, s.gap_inv});
        tab.add({s.T, s.delta, s.zeta_l1, s.inv_l1, s.gap_zeta, s.gap_inv});
    }
    r.add_check("jensen_gap_min", 0.0, min_gap, 1e-9, min_gap >= -1e-9);
    r.sections.emplace_back("samples", std::move(tab));
    r.meta.emplace_back("sigma", num(sigma));
    return r;
}

// Closed-form extremal norms against the normalized constants, error C delta^3 frozen at the largest delta.
void extremal_constant_rows(Report& r, const std::vector<double>& deltas_in, const std::string& tag,
                            const std::function<double(double)>& observed, const std::function<double(double)>& predicted) {
    auto deltas = deltas_in;
    std::sort(deltas.begin(), deltas.end(), std::greater<>());
    std::vector<double> obs, err;
    for (double d : deltas) {
        obs.push_back(observed(d));
        err.push_back(std::abs(obs.back() - predicted(d)));
    }
    const double C = kBigOMargin * err.front() / std::pow(deltas.front(), 3);
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double bound = std::max(C * std::pow(deltas[i], 3), 1e-12);
        r.add_check(tag + "_delta=" + num(deltas[i]), predicted(deltas[i]), obs[i], bound, err[i] <= bound * (1.0 + 1e-9));
    }
}

Report suite_theorem7(const RunConfig& cfg) {
    Report r = Report::checks("verify", "theorem7", cfg.seed);
    const auto deltas = or_default(cfg.deltas, {0.4, 0.2, 0.1});
    const double eg = std::exp(-constants::gamma);
    for (double p : {0.5, 1.0, 2.0}) {
        extremal_constant_rows(
            r, deltas, "extremal_inverse_p=" + num(p),
            [&](double d) { return norm_of(Target::zeta_delta(d), -d / 2, d, 1.0, NormMode::NegLp, p, true, 1e-12).value; },
            [&](double d) { return eg / 4.0 * d; });
        extremal_constant_rows(
            r, deltas, "extremal_direct_p=" + num(p),
            [&](double d) {
                return norm_of(Target::zeta_two_s_over_zeta_delta(d), -d / 2, d, 1.0, NormMode::Lp, p, true, 1e-12).value;
            },
            [&](double d) { return constants::pi * constants::pi * eg / 24.0 * d; });
    }
    // Random shifts: every normalized norm sits above the infimum and is monotone in p.
    const int n = or_default(cfg.t_samples, 20);
    const double T_hi = max_of(cfg.t_max, 1e4);
    const auto Ts = random_points(cfg.seed, n, 10.0, T_hi);
    const double d = deltas.back();
    struct Row {
        double lp[3], nlp[3];
    };
    const double ps[3] = {0.5, 1.0, 2.0};
    auto rows = parallel_map<Row>(Ts.size(), threads_of(cfg), [&](std::size_t i) {
        Row row{};
        for (int k = 0; k < 3; ++k) {
            row.lp[k] = norm_of(Target::zeta(), Ts[i], d, cfg.sigma, NormMode::Lp, ps[k], true).value;
            row.nlp[k] = norm_of(Target::zeta(), Ts[i], d, cfg.sigma, NormMode::NegLp, ps[k], true).value;
        }
        return row;
    });
    const double pd = constants::pi * constants::pi * eg / 24.0 * d, pi_ = eg / 4.0 * d;
    double min_lp = INFINITY, min_nlp = INFINITY, worst_mono = -INFINITY;
    for (const auto& row : rows) {
        for (int k = 0; k < 3; ++k) {
            min_lp = std::min(min_lp, row.lp[k]);
            min_nlp = std::min(min_nlp, row.nlp[k]);
        }
        for (int k = 0; k < 2; ++k) {
            worst_mono = std::max(worst_mono, (row.lp[k] - row.lp[k + 1]) / row.lp[k + 1]);
            worst_mono = std::max(worst_mono, (row.nlp[k] - row.nlp[k + 1]) / row.nlp[k + 1]);
        }
    }
    r.add_check("lower_bound_lp_delta=" + num(d), 0.9 * pd, min_lp, 0.0, min_lp >= 0.9 * pd);
    r.add_check("lower_bound_neg_lp_delta=" + num(d), 0.9 * pi_, min_nlp, 0.0, min_nlp >= 0.9 * pi_);
    r.add_check("power_mean_monotone", 0.0, worst_mono, 1e-9, worst_mono <= 1e-9);
    return r;
}

Report suite_theorem8(const RunConfig& cfg) {
    Report r = Report::checks("verify", "theorem8", cfg.seed);
    const auto deltas = or_default(cfg.deltas, {0.4, 0.2, 0.1});
    extremal_constant_rows(
        r, deltas, "extremal_min",
        [](double d) { return norm_of(Target::zeta_delta(d), -d / 2, d, 1.0, NormMode::Min).value * d; },
        [](double) { return 4.0 * std::exp(constants::gamma); });
    extremal_constant_rows(
        r, deltas, "extremal_max",
        [](double d) { return norm_of(Target::zeta_two_s_over_zeta_delta(d), -d / 2, d, 1.0, NormMode::Sup).value; },
        [](double d) { return sup_norm_predictions(d).first; });
    const int n = or_default(cfg.t_samples, 20);
    const double T_hi = max_of(cfg.t_max, 1e4);
    const auto Ts = random_points(cfg.seed, n, 10.0, T_hi);
    const double d = *std::min_element(deltas.begin(), deltas.end());
    const auto [pmax, pmin] = sup_norm_predictions(d);
    struct Row {
        double mx, mn, mean;
    };
    auto rows = parallel_map<Row>(Ts.size(), threads_of(cfg), [&](std::size_t i) {
        return Row{norm_of(Target::zeta(), Ts[i], d, cfg.sigma, NormMode::Sup).value,
                   norm_of(Target::zeta(), Ts[i], d, cfg.sigma, NormMode::Min).value,
                   norm_of(Target::zeta(), Ts[i], d, cfg.sigma, NormMode::L1).value / d};
    });
    double min_max = INFINITY, max_min = 0.0;
    int bracket_fail = 0;
    for (const auto& row : rows) {
        min_max = std::min(min_max, row.mx);
        max_min = std::max(max_min, row.mn);
        if (!(row.mn <= row.mean * (1 + 1e-9) && row.mean <= row.mx * (1 + 1e-9))) ++bracket_fail;
    }
    r.add_check("lower_bound_max_delta=" + num(d), 0.9 * pmax, min_max, 0.0, min_max >= 0.9 * pmax);
    r.add_check("upper_bound_min_delta=" + num(d), pmin / 0.9, max_min, 0.0, max_min <= pmin / 0.9);
    r.add_check("min_mean_max_bracketing", 0.0, bracket_fail, 0.0, bracket_fail == 0);
    return r;
}

double divisor_factor_oracle(std::int64_t D) {
    // sum_{d | D} |mu(d)| / d
    double s = 0.0;
    for (std::int64_t d = 1; d <= D; ++d)
        if (D % d == 0 && mobius(d) != 0) s += 1.0 / static_cast<double>(d);
    return s;
}

double totient_ratio_oracle(std::int64_t D) {
    std::int64_t count = 0;
    for (std::int64_t n = 1; n <= D; ++n)
        if (gcd(n, D) == 1) ++count;
    return static_cast<double>(D) / static_cast<double>(count);
}

void modulus_factor_rows(Report& r, const std::vector<std::int64_t>& Ds) {
    for (std::int64_t D : Ds) {
        const auto base = theorem13_constants(1, 0.1);
        const auto c = theorem13_constants(D, 0.1);
        const double fi = c.second / base.second, fd = c.first / base.first;
        const double wi = totient_ratio_oracle(D), wd = divisor_factor_oracle(D);
        r.add_check("modulus_inverse_factor_D=" + std::to_string(D), wi, fi, 1e-12, std::abs(fi - wi) <= 1e-12);
        r.add_check("modulus_direct_factor_D=" + std::to_string(D), wd, fd, 1e-12, std::abs(fd - wd) <= 1e-12);
    }
}

Report suite_theorem13(const RunConfig& cfg) {
    Report r = Report::checks("verify", "theorem13", cfg.seed);
    std::vector<std::int64_t> Ds{3, 4, 5, 12};
    if (!cfg.primes.empty()) Ds = cfg.primes;
    modulus_factor_rows(r, Ds);
    const double d = or_default(cfg.deltas, {0.1}).front();
    const int n = or_default(cfg.t_samples, 10);
    const double T_hi = max_of(cfg.t_max, 1e3);
    const auto Ts = random_points(cfg.seed, n, 10.0, T_hi);
    for (std::int64_t D : Ds) {
        const auto chis = characters_mod(D);
        const DirichletCharacter& chi = chis.size() > 1 ? chis[1] : chis[0];
        const auto [cd, ci] = theorem13_constants(D, d);
        auto vals = parallel_map<std::pair<double, double>>(Ts.size(), threads_of(cfg), [&](std::size_t i) {
            const Target t = Target::dirichlet(chi);
            return std::make_pair(norm_of(t, Ts[i], d, cfg.sigma, NormMode::Lp, 1.0, true).value,
                                  norm_of(t, Ts[i], d, cfg.sigma, NormMode::NegLp, 1.0, true).value);
        });
        double mn_d = INFINITY, mn_i = INFINITY;
        for (const auto& v : vals) {
            mn_d = std::min(mn_d, v.first);
            mn_i = std::min(mn_i, v.second);
        }
        r.add_check("lower_bound_direct_D=" + std::to_string(D), 0.9 * cd, mn_d, 0.0, mn_d >= 0.9 * cd);
        r.add_check("lower_bound_inverse_D=" + std::to_string(D), 0.9 * ci, mn_i, 0.0, mn_i >= 0.9 * ci);
    }
    return r;
}

Report suite_examples(const RunConfig& cfg) {
    Report r = Report::checks("verify", "examples", cfg.seed);
    const NormResult v1 = example1_value(0.1), v2 = example1_value(0.2);
    for (auto [d, v] : {std::pair{0.1, v1.value}, std::pair{0.2, v2.value}}) {
        const double tol = 2.0 * std::pow(d, 4);
        r.add_check("inverse_zeta_near_pole_delta=" + num(d), d * d / 4.0, v, tol, std::abs(v - d * d / 4.0) <= tol);
    }
    const double ratio = v2.value / v1.value;
    r.add_check("inverse_zeta_near_pole_scaling", 4.0, ratio, 0.4, std::abs(ratio - 4.0) <= 0.4);
    const NormResult e2 = example2_ratio();
    r.add_check("quartic_root_integral_range", 0.93, e2.value, 0.03, e2.value > 0.90 && e2.value < 0.96);
    r.add_check("quartic_root_integral_below_0.9518", 0.9518, e2.value, 0.0, e2.value < 0.9518);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", e2.value);
    r.meta.emplace_back("quartic_root_integral_6_digits", buf);
    return r;
}

Report suite_framework(const RunConfig& cfg) {
    Report r = Report::checks("verify", "framework", cfg.seed);
    const std::int64_t N = or_default(cfg.prime_limit, std::int64_t{1000000});
    const auto ones = MultiplicativeSeries::ones();
    const int th = threads_of(cfg);

    const GrowthFit lw = alpha_beta_fit(ones, N, GrowthConvention::LambdaWeighted);
    r.add_check("ones_alpha_lambda_weighted", 1.0, lw.alpha, 0.02, std::abs(lw.alpha - 1.0) <= 0.02);
    r.add_check("ones_beta_lambda_weighted", constants::gamma, lw.beta, 0.05, std::abs(lw.beta - constants::gamma) <= 0.05);
    const GrowthFit ps = alpha_beta_fit(ones, N, GrowthConvention::PrimeSum);
    r.add_check("ones_alpha_prime_sum", 1.0, ps.alpha, 0.02, std::abs(ps.alpha - 1.0) <= 0.02);

    // Prime-sum calibration with the growth exponent pinned at its known value.
    const GrowthFit pinned = alpha_beta_fit(ones, N, GrowthConvention::PrimeSum, 1.0);
    const LambdaSums ls = lambda_sums(ones, N, th);
    const double calib = pinned.beta - ls.lambda1;
    r.add_check("calibration_beta_minus_lambda1", constants::gamma, calib, 1e-3, std::abs(calib - constants::gamma) <= 1e-3);
    const auto pi = predicted_infima(1.0, pinned.beta, ls.lambda0.value_or(kNaN), ls.lambda1, 0.1);
    const auto l4 = lemma4_constants(0.1);
    r.add_check("prime_sum_direct_constant", l4.first, pi.direct, 1e-3 * l4.first,
                std::abs(pi.direct - l4.first) <= 1e-3 * l4.first);
    r.add_check("prime_sum_inverse_constant", l4.second, pi.inverse, 1e-3 * l4.second,
                std::abs(pi.inverse - l4.second) <= 1e-3 * l4.second);
    const std::int64_t N_small = std::max<std::int64_t>(N / 10, 1000);
    const LambdaSums ls_small = lambda_sums(ones, N_small, th);
    const double dl = std::max(std::abs(ls_small.lambda1 - ls.lambda1),
                               std::abs(ls_small.lambda0.value_or(0) - ls.lambda0.value_or(0)));
    r.add_check("lambda_tail_consistency", 0.0, dl, 5.0 * ls_small.tail_estimate, dl <= 5.0 * ls_small.tail_estimate);

    double worst = 0.0;
    for (std::int64_t p : {2, 3, 7, 101}) {
        for (double a : {0.5, 1.0, 1.7}) {
            const LocalExtrema e = local_extrema(EulerFactor::geometric(p, a));
            const double x = a / static_cast<double>(p);
            worst = std::max({worst, std::abs(e.max_log + std::log1p(-x)), std::abs(e.min_log + std::log1p(x))});
        }
    }
    r.add_check("local_extrema_closed_form", 0.0, worst, 1e-9, worst <= 1e-9);

    const double beta1 = beta_from_residue(1.0);
    const double s2 = sum_sq_coefficients(ones, N);
    const auto lwi = lambda_weighted_infima(1.0, beta1, s2, 1.0);
    const double want11 = constants::pi * constants::pi * std::exp(-constants::gamma) / 24.0;
    r.add_check("lambda_weighted_direct_constant", want11, lwi.direct, 1e-6, std::abs(lwi.direct - want11) <= 1e-6);

    modulus_factor_rows(r, {3, 4, 5, 12});

    const double c16 = std::exp(-beta_from_residue(1.0 / (12.0 * constants::pi))) / 4.0;
    const double w16 = 3.0 * constants::pi * std::exp(-constants::gamma);
    r.add_check("residue_constant_weight12", w16, c16, 1e-10, std::abs(c16 - w16) <= 1e-10);
    const double pi3 = constants::pi * constants::pi * constants::pi;
    const double c17 = std::exp(-beta_from_residue(1.0 / (2.0 * pi3))) / 4.0;
    const double w17 = pi3 * std::exp(-constants::gamma) / 2.0;
    r.add_check("residue_constant_pi_cubed", w17, c17, 1e-10, std::abs(c17 - w17) <= 1e-10);

    const GrowthFit chi3 = alpha_beta_fit(MultiplicativeSeries::character_magnitude(3), N, GrowthConvention::LambdaWeighted);
    const double w3 = constants::gamma + std::log(2.0 / 3.0);
    r.add_check("mod3_beta_lambda_weighted", w3, chi3.beta, 0.05, std::abs(chi3.beta - w3) <= 0.05);

    // Extremal rotation of the mod-4 magnitudes on the line, via the closed form anchored to zeta.
    const double delta = 0.2;
    const auto mag4 = MultiplicativeSeries::character_magnitude(4);
    const GrowthFit f4 = alpha_beta_fit(mag4, N, GrowthConvention::LambdaWeighted);
    auto ges = std::make_shared<GeneralExtremalSeries>(mag4, delta, 1000);
    const Target inv = Target::generic("inverse_extremal_mod4", [ges](double sigma, double, double) -> LogAbsFn {
        return [ges, sigma](double t) { return -ges->log_abs_closed(Complex(sigma, t)); };
    });
    const double obs = norm_of(inv, -delta / 2, delta, 1.0, NormMode::L1, 1.0, false, 1e-12).value;
    const double pred = std::exp(-f4.beta) / 4.0 * std::pow(delta, f4.alpha) * delta;
    r.add_check("extremal_mod4_inverse_l1", pred, obs, 0.15 * pred, std::abs(obs - pred) <= 0.15 * pred);
    return r;
}

Report suite_modular(const RunConfig& cfg) {
    Report r = Report::checks("verify", "modular", cfg.seed);
    const std::int64_t N = or_default(cfg.prime_limit, std::int64_t{10000});
    const TauTable tau(std::min<std::int64_t>(N, 20000));
    r.add_check("tau_2", -24, tau.value(2), 0.0, tau(2) == -24);
    r.add_check("tau_3", 252, tau.value(3), 0.0, tau(3) == 252);
    r.add_check("tau_6", -6048, tau.value(6), 0.0, tau(6) == -6048);

    SplitMix64 rng(cfg.seed);
    int mult_fail = 0, pairs = 0;
    while (pairs < 20) {
        const std::int64_t m = 2 + static_cast<std::int64_t>(rng.uniform() * 200);
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.uniform() * static_cast<double>(tau.size() / m - 1));
        if (m * n > tau.size() || gcd(m, n) != 1) continue;
        ++pairs;
        if (tau(m * n) != tau(m) * tau(n)) ++mult_fail;
    }
    r.add_check("tau_multiplicative_pairs", 0, mult_fail, 0.0, mult_fail == 0);

    const auto table = shared_primes(tau.size());
    int deligne_fail = 0;
    for (std::size_t i = 0; i < table->count_upto(tau.size()); ++i)
        if (!tau.deligne_holds(table->prime(i))) ++deligne_fail;
    r.add_check("deligne_bound_violations", 0, deligne_fail, 0.0, deligne_fail == 0);

    double hecke_err = 0.0;
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
        const auto h = hecke_extend(a, 2, 10);
        // Power-series inverse of 1 - a x + x^2.
        const double den[3] = {1.0, -a, 1.0};
        std::vector<double> c(11, 0.0);
        for (int k = 0; k <= 10; ++k) {
            double acc = k == 0 ? 1.0 : 0.0;
            for (int j = 1; j <= std::min(k, 2); ++j) acc -= den[j] * c[k - j];
            c[k] = acc / den[0];
        }
        for (int k = 0; k <= 10; ++k) hecke_err = std::max(hecke_err, std::abs(h[k] - c[k]));
    }
    r.add_check("hecke_recursion_vs_division", 0.0, hecke_err, 1e-12, hecke_err <= 1e-12);

    const double st = 8.0 / (3.0 * constants::pi);
    const double sta = sato_tate_alpha().value;
    r.add_check("sato_tate_alpha", st, sta, 1e-9, std::abs(sta - st) <= 1e-9);

    const std::int64_t want_cat[4] = {1, 2, 5, 14};
    for (int k = 1; k <= 4; ++k)
        r.add_check("catalan_" + std::to_string(k), static_cast<double>(want_cat[k - 1]), static_cast<double>(catalan(k)), 0.0,
                    catalan(k) == want_cat[k - 1]);
    bool cat_rec = true;
    for (int k = 1; k < 15; ++k) cat_rec = cat_rec && catalan(k + 1) * (k + 2) == catalan(k) * 2 * (2 * k + 1);
    r.add_check("catalan_recurrence", 1, cat_rec ? 1 : 0, 0.0, cat_rec);

    std::vector<std::pair<std::int64_t, double>> trend;
    for (std::int64_t n : {std::int64_t{1000}, std::int64_t{3000}, tau.size()})
        trend.emplace_back(n, coefficient_alpha(CoefficientSource::TauNormalized, n).alpha);
    const double a_last = trend.back().second;
    r.add_check("tau_alpha_N=" + std::to_string(tau.size()), st, a_last, 0.2, a_last >= 0.6 && a_last <= 1.0);
    for (const auto& [n, a] : trend) r.meta.emplace_back("tau_alpha_N=" + std::to_string(n), num(a));
    r.add_check("tau_alpha_trend", st, a_last, std::abs(trend.front().second - st),
                std::abs(a_last - st) < std::abs(trend.front().second - st));

    // Level-alpha tests on one seed fail with probability alpha; judge the sampler by the failure
    // count over consecutive seeds instead (binomial tail below 0.2% at these thresholds).
    const std::int64_t P = 100000;
    constexpr int kSeeds = 20;
    int ks_fail = 0, mean_fail = 0, abs_fail = 0;
    Table st_tab;
    st_tab.columns = {"seed", "mean", "mean_abs", "ks", "ks_bound"};
    for (int j = 0; j < kSeeds; ++j) {
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(j);
        const auto sample = sato_tate_sample(seed, P);
        const double cnt = static_cast<double>(sample.primes.size());
        double mean = 0.0, mean_abs = 0.0;
        std::vector<double> xs;
        for (std::size_t i = 0; i < sample.primes.size(); ++i) {
            mean += sample.a(i) / cnt;
            mean_abs += std::abs(sample.a(i)) / cnt;
            xs.push_back(std::cos(sample.angles[i]));
        }
        std::sort(xs.begin(), xs.end());
        double ks = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double t = xs[i];
            const double G = 0.5 + (t * std::sqrt(std::max(0.0, 1.0 - t * t)) + std::asin(t)) / constants::pi;
            ks = std::max({ks, (i + 1) / cnt - G, G - i / cnt});
        }
        const double ks_bound = 1.63 / std::sqrt(cnt);
        if (ks > ks_bound) ++ks_fail;
        if (std::abs(mean) > 3.0 / std::sqrt(cnt)) ++mean_fail;
        if (std::abs(mean_abs - st) > 3.0 * std::sqrt(1.0 - st * st) / std::sqrt(cnt)) ++abs_fail;
        st_tab.add({static_cast<std::int64_t>(seed), mean, mean_abs, ks, ks_bound});
    }
    r.add_check("sato_tate_ks_failures_of_" + std::to_string(kSeeds), 0, ks_fail, 2, ks_fail <= 2);
    r.add_check("sato_tate_mean_failures_of_" + std::to_string(kSeeds), 0, mean_fail, 1, mean_fail <= 1);
    r.add_check("sato_tate_mean_abs_failures_of_" + std::to_string(kSeeds), 0, abs_fail, 1, abs_fail <= 1);
    r.sections.emplace_back("sato_tate_seeds", std::move(st_tab));
    const GrowthFit stf = coefficient_alpha(CoefficientSource::SatoTate, P, {cfg.seed, 4});
    r.add_check("sato_tate_sample_alpha", st, stf.alpha, 0.05, std::abs(stf.alpha - st) <= 0.05);

    const ExponentTable et = exponent_table(0.5);
    const double want_pairs[3][2] = {{1.5, 0.5}, {23.0 / 12.0, 1.0 / 12.0}, {1.0 + st, 1.0 - st}};
    for (std::size_t i = 0; i < 3; ++i) {
        const double e = std::max(std::abs(et.pairs[i].lower - want_pairs[i][0]), std::abs(et.pairs[i].upper - want_pairs[i][1]));
        r.add_check("exponents_" + et.pairs[i].label, want_pairs[i][0], et.pairs[i].lower, 1e-15, e <= 1e-15);
    }
    return r;
}

Report suite_bounds(const RunConfig& cfg) {
    Report r = Report::checks("verify", "bounds", cfg.seed);
    BoundCheckOptions opts;
    opts.deltas = or_default(cfg.deltas, {0.1, 0.2, 0.4});
    opts.T_samples = or_default(cfg.t_samples, 20);
    opts.T_hi = max_of(cfg.t_max, 1e4);
    opts.seed = cfg.seed;
    opts.threads = threads_of(cfg);
    const std::int64_t P = or_default(cfg.prime_limit, std::int64_t{100000});
    const BoundSeries series[2] = {split_prime_bound_series(), sato_tate_bound_series(cfg.seed, P)};
    const double expect_alpha[2] = {0.5, 8.0 / (3.0 * constants::pi)};
    Table tab;
    tab.columns = {"series", "delta", "T", "integral", "lower", "upper", "ok"};
    for (int k = 0; k < 2; ++k) {
        const BoundReport rep = theorem19_check(series[k], opts);
        r.add_check(rep.name + "_alpha", expect_alpha[k], rep.alpha, 0.05, std::abs(rep.alpha - expect_alpha[k]) <= 0.05);
        r.add_check(rep.name + "_violations", 0, rep.violations, 0.0, rep.violations == 0);
        r.meta.emplace_back(rep.name + "_c", num(rep.c));
        r.meta.emplace_back(rep.name + "_C", num(rep.C));
        for (const auto& row : rep.rows) tab.add({rep.name, row.delta, row.T, row.integral, row.lower, row.upper, row.ok});
    }
    try {
        bound_series_from(MultiplicativeSeries::ones(), 1000000, nullptr);
        r.add_check("ones_series_rejected", 1, 0, 0.0, false);
    } catch (const DomainError&) {
        r.add_check("ones_series_rejected", 1, 1, 0.0, true);
    }
    r.sections.emplace_back("rows", std::move(tab));
    return r;
}

TargetSide side_of(const std::string& mode) {
    if (mode.empty() || mode == "direct") return TargetSide::ForDirect;
    if (mode == "inverse") return TargetSide::ForInverse;
    throw UsageError("search mode must be direct or inverse");
}

Report suite_search(const RunConfig& cfg) {
    Report r = Report::checks("verify", "search", cfg.seed);
    const double delta = or_default(cfg.deltas, {0.3}).front();
    auto levels = or_default(cfg.t_max, {1e4, 1e6, 1e8});
    std::sort(levels.begin(), levels.end());
    EmpiricalOptions eo;
    eo.threads = threads_of(cfg);
    const TargetSide side = side_of(cfg.mode);
    const EmpiricalResult res = empirical_infimum(delta, side, levels.back(), eo);
    std::vector<double> ratios;
    for (double L : levels) {
        double best = INFINITY;
        for (const auto& s : res.segments)
            if (s.T_hi <= L * (1 + 1e-12)) best = std::min(best, s.ratio);
        ratios.push_back(best);
        r.meta.emplace_back("ratio_T_max=" + num(L), num(best));
    }
    r.add_check("ratio_T_max=" + num(levels.back()), 2.5, ratios.back(), 0.0, ratios.back() <= 2.5);
    double worst_increase = -INFINITY;
    for (std::size_t i = 0; i + 1 < ratios.size(); ++i) worst_increase = std::max(worst_increase, ratios[i + 1] - ratios[i]);
    if (ratios.size() < 2) worst_increase = 0.0;
    r.add_check("ratio_nonincreasing", 0.0, worst_increase, 0.0, worst_increase <= 0.0);
    double min_ratio = INFINITY;
    for (const auto& s : res.segments) min_ratio = std::min(min_ratio, s.ratio);
    r.add_check("never_below_infimum", 0.9, min_ratio, 0.0, min_ratio >= 0.9);
    const auto targets = make_phase_targets({2, 3, 5}, {constants::pi, constants::pi, constants::pi});
    const ShiftCandidate c = search_shift(targets, 1e6, 2'000'000'000);
    r.add_check("discrepancy_2_3_5_pi", 0.2, c.discrepancy, 0.0, c.discrepancy <= 0.2);
    Table seg;
    seg.columns = {"T_lo", "T_hi", "prime_count", "T", "discrepancy", "achieved", "ratio"};
    for (const auto& s : res.segments)
        seg.add({s.T_lo, s.T_hi, static_cast<std::int64_t>(s.prime_count), s.best.T, s.best.discrepancy,
                 s.best.achieved_norm ? s.best.achieved_norm->value : kNaN, s.ratio});
    r.sections.emplace_back("segments", std::move(seg));
    return r;
}

using SuiteFn = Report (*)(const RunConfig&);

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> t{
        {"special-fns", suite_special_fns}, {"sin-kernel", suite_sin_kernel}, {"theorem6", suite_theorem6},
        {"flatness", suite_flatness},       {"theorem3", suite_theorem3},     {"theorem7", suite_theorem7},
        {"theorem8", suite_theorem8},       {"theorem13", suite_theorem13},   {"examples", suite_examples},
        {"framework", suite_framework},     {"modular", suite_modular},       {"bounds", suite_bounds},
        {"search", suite_search},
    };
    return t;
}

// Predicted value for a scan row, by target and norm convention.
double scan_prediction(const std::string& target, NormMode mode, double delta, double factor_direct, double factor_inverse) {
    const double eg = std::exp(-constants::gamma);
    const double big = constants::pi * constants::pi * eg / 24.0 * factor_direct;  // infimum of |A| per unit length
    const double small = eg / 4.0 * factor_inverse;                               // infimum of |A|^{-1} per unit length
    const bool inverse_target = target == "inverse_zeta";
    const double up = inverse_target ? small : big;     // constant for norms of |target|
    const double down = inverse_target ? big : small;   // constant for norms of |target|^{-1}
    switch (mode) {
        case NormMode::L1: return up * delta * delta;
        case NormMode::Lp: return up * delta;
        case NormMode::NegLp: return down * delta;
        case NormMode::Sup: return up * delta;
        case NormMode::Min: return 1.0 / (down * delta);
        case NormMode::LogL1: return kNaN;
    }
    return kNaN;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, fn] : suite_table()) v.push_back(k);
        return v;
    }();
    return names;
}

Report run_verify(const std::string& suite, const RunConfig& cfg) {
    const auto& t = suite_table();
    auto it = t.find(suite);
    if (it == t.end()) throw UsageError("unknown suite: " + suite);
    return it->second(cfg);
}

Report run_scan(const std::string& target, const RunConfig& cfg) {
    Report r;
    r.command = "scan";
    r.name = target;
    r.seed = cfg.seed;
    r.table.columns = {"target", "mode", "sigma", "T", "delta", "value", "err", "predicted", "ratio"};
    const auto deltas = or_default(cfg.deltas, {0.1, 0.2, 0.3, 0.4, 0.5});
    if (target == "zeta_delta") {
        for (double d : deltas) {
            const double pred = 4.0 * std::exp(constants::gamma) / d;
            for (double x : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
                const double t = x * d / 2.0;
                const double v = std::exp(log_abs_zeta_delta_closed(Complex(1.0, t), d));
                r.table.add({target, std::string("pointwise"), 1.0, t, d, v, kNaN, pred, v / pred});
            }
        }
        return r;
    }
    Target tg;
    double fd = 1.0, fi = 1.0;
    std::string label = target;
    if (target == "zeta") {
        tg = Target::zeta();
    } else if (target == "inverse_zeta") {
        tg = Target::inverse_zeta();
    } else if (target == "dirichlet") {
        const auto chis = characters_mod(cfg.modulus);
        tg = Target::dirichlet(chis.size() > 1 ? chis[1] : chis[0]);
        const auto base = theorem13_constants(1, 1.0), c = theorem13_constants(cfg.modulus, 1.0);
        fd = c.first / base.first;
        fi = c.second / base.second;
        label = "dirichlet_mod_" + std::to_string(cfg.modulus);
    } else {
        throw UsageError("unknown scan target: " + target + " (zeta, inverse_zeta, dirichlet, zeta_delta)");
    }
    const NormMode mode = cfg.mode.empty() ? NormMode::L1 : parse_norm_mode(cfg.mode);
    const bool normalized = mode == NormMode::Lp || mode == NormMode::NegLp;
    const int n = or_default(cfg.t_samples, 10);
    const auto Ts = random_points(cfg.seed, n, 10.0, max_of(cfg.t_max, 1e4));
    const double tol = or_default(cfg.tol, 1e-10);
    std::vector<std::pair<double, double>> jobs;
    for (double d : deltas)
        for (double T : Ts) jobs.emplace_back(d, T);
    auto vals = parallel_map<NormResult>(jobs.size(), threads_of(cfg), [&](std::size_t i) {
        return norm_of(tg, jobs[i].second, jobs[i].first, cfg.sigma, mode, 1.0, normalized, tol);
    });
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const double pred = scan_prediction(target, mode, jobs[i].first, fd, fi);
        r.table.add({label, to_string(mode), cfg.sigma, jobs[i].second, jobs[i].first, vals[i].value,
                     vals[i].error_estimate, pred, vals[i].value / pred});
    }
    return r;
}

Report run_search(const RunConfig& cfg) {
    Report r;
    r.command = "search";
    r.seed = cfg.seed;
    Table trace_tab;
    trace_tab.columns = {"T", "discrepancy"};
    auto levels = or_default(cfg.t_max, {1e6});
    std::sort(levels.begin(), levels.end());
    const int th = threads_of(cfg);
    if (!cfg.primes.empty()) {
        std::vector<double> angles = cfg.targets;
        if (angles.empty()) angles.assign(cfg.primes.size(), 0.0);
        if (angles.size() == 1) angles.assign(cfg.primes.size(), angles.front());
        if (angles.size() != cfg.primes.size()) throw UsageError("--targets must give one angle or one per prime");
        const PhaseTargets pt = make_phase_targets(cfg.primes, angles);
        r.name = "targets";
        r.table.columns = {"T_max", "T", "discrepancy", "converged", "evaluations"};
        SearchOptions so;
        so.threads = th;
        std::vector<TracePoint> trace;
        for (double L : levels) {
            auto c = search_shifts(pt, 0.0, L, so, &trace);
            if (c.empty()) throw ConvergenceError("shift search produced no candidate");
            r.table.add({L, c.front().T, c.front().discrepancy, c.front().converged,
                         static_cast<std::int64_t>(c.front().evaluations)});
        }
        for (const auto& p : trace) trace_tab.add({p.T, p.discrepancy});
        r.sections.emplace_back("trace", std::move(trace_tab));
        return r;
    }
    r.name = "extremal";
    r.table.columns = {"delta", "mode", "T_max", "T", "discrepancy", "prime_count", "achieved", "predicted", "ratio"};
    const auto deltas = or_default(cfg.deltas, {0.3});
    std::vector<std::string> modes{cfg.mode.empty() ? std::string("direct") : cfg.mode};
    if (cfg.mode == "both") modes = {"direct", "inverse"};
    Table seg;
    seg.columns = {"delta", "mode", "T_lo", "T_hi", "prime_count", "T", "discrepancy", "achieved", "ratio"};
    EmpiricalOptions eo;
    eo.threads = th;
    for (double d : deltas) {
        for (const auto& m : modes) {
            const EmpiricalResult res = empirical_infimum(d, side_of(m), levels.back(), eo);
            for (double L : levels) {
                const SegmentResult* best = nullptr;
                for (const auto& s : res.segments)
                    if (s.T_hi <= L * (1 + 1e-12) && (!best || s.ratio < best->ratio)) best = &s;
                if (!best) continue;
                r.table.add({d, m, L, best->best.T, best->best.discrepancy, static_cast<std::int64_t>(best->prime_count),
                             best->best.achieved_norm->value, res.predicted, best->ratio});
            }
            for (const auto& s : res.segments)
                seg.add({d, m, s.T_lo, s.T_hi, static_cast<std::int64_t>(s.prime_count), s.best.T, s.best.discrepancy,
                         s.best.achieved_norm->value, s.ratio});
            for (const auto& p : res.trace) trace_tab.add({p.T, p.discrepancy});
        }
    }
    r.sections.emplace_back("segments", std::move(seg));
    r.sections.emplace_back("trace", std::move(trace_tab));
    return r;
}

}  // namespace zetaline
