#include "zetaline/zeta.hpp"

#include <array>
#include <cmath>
#include <string>

namespace zetaline {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

// e^{-i t L} with the phase reduced in extended precision.
inline Complex unit_phase(long double t, long double L) {
    const long double x = std::fmod(t * L, kTwoPiL);
    const double a = static_cast<double>(x);
    return {std::cos(a), -std::sin(a)};
}

// n^{-s} for real log n given in extended precision.
inline Complex power_minus_s(double sigma, double t, long double L) {
    return std::exp(-sigma * static_cast<double>(L)) * unit_phase(t, L);
}

std::array<double, kMaxBernoulli + 2> make_bernoulli_ratios() {
    // B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}
    std::array<double, kMaxBernoulli + 2> out{};
    const long double two_pi = kTwoPiL;
    for (int k = 1; k <= kMaxBernoulli + 1; ++k) {
        long double z2k;
        if (k == 1) {
            z2k = 1.644934066848226436472415166646025189L;
        } else if (k == 2) {
            z2k = 1.082323233711138191516003696541167903L;
        } else {
            z2k = 0.0L;
            for (int n = 1000; n >= 1; --n) z2k += std::pow(static_cast<long double>(n), -2.0L * k);
            z2k += std::pow(1000.5L, 1.0L - 2.0L * k) / (2.0L * k - 1.0L);
        }
        const long double mag = 2.0L * z2k / std::pow(two_pi, 2.0L * k);
        out[k] = static_cast<double>((k % 2 == 1) ? mag : -mag);
    }
    return out;
}

const std::array<double, kMaxBernoulli + 2>& bernoulli_table() {
    static const auto table = make_bernoulli_ratios();
    return table;
}

struct TailTerms {
    Complex regular;  // everything except the pole part
    Complex pole;     // sum c_a Y_a^{1-s} / D, to be divided by (s-1)
    double error = 0.0;
};

// Euler-Maclaurin tail of sum_{m>=0} c_a (a + (M+m) D)^{-s} over all classes a.
TailTerms class_tails(Complex s, const PeriodicCoefficients& c, std::int64_t M, int K, bool pole_free) {
    const auto& B = bernoulli_table();
    const std::int64_t D = c.period();
    const double sigma = s.real();
    const double t = s.imag();
    TailTerms out{};
    for (std::int64_t a = 1; a <= D; ++a) {
        const Complex ca = c(a);
        if (ca == Complex(0.0, 0.0)) continue;
        const std::int64_t Y = a + M * D;
        const long double LY = std::log(static_cast<long double>(Y));
        const Complex Ys = power_minus_s(sigma, t, LY);
        const double Yd = static_cast<double>(Y);
        Complex reg = 0.5 * Ys;
        if (pole_free) {
            reg += -static_cast<double>(LY) * expm1_over((1.0 - s) * static_cast<double>(LY)) / static_cast<double>(D);
        } else {
            out.pole += ca * Yd * Ys / static_cast<double>(D);
        }
        const double r = static_cast<double>(D) / Yd;
        Complex P = s;  // s (s+1) ... (s+2k-2)
        double rpow = r;
        Complex corr = 0.0;
        for (int k = 1; k <= K; ++k) {
            corr += B[k] * P * rpow;
            P *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
            rpow *= r * r;
        }
        reg += corr * Ys;
        out.regular += ca * reg;
        const double next = std::abs(B[K + 1]) * std::abs(P) * rpow * std::abs(Ys) * std::abs(s + (2.0 * K + 1.0)) /
                            (sigma + 2.0 * K + 1.0);
        out.error += std::abs(ca) * next;
    }
    return out;
}

struct SplitSum {
    Complex regular;
    Complex pole;
    double error;
};

SplitSum split_series(Complex s, const PeriodicCoefficients& c, std::int64_t M, int K) {
    if (M < 1) throw DomainError("Euler-Maclaurin cutoff must be >= 1");
    if (K < 1 || K > kMaxBernoulli) throw DomainError("Bernoulli order out of range");
    const bool pole_free = !c.has_pole();
    const std::int64_t nmax = M * c.period();
    const double sigma = s.real();
    const double t = s.imag();
    Complex sum = 0.0;
    for (std::int64_t n = nmax; n >= 1; --n) {
        const Complex cn = c(n);
        if (cn == Complex(0.0, 0.0)) continue;
        sum += cn * power_minus_s(sigma, t, std::log(static_cast<long double>(n)));
    }
    auto tail = class_tails(s, c, M, K, pole_free);
    return {sum + tail.regular, tail.pole, tail.error};
}

}  // namespace

double bernoulli_ratio(int k) {
    if (k < 1 || k > kMaxBernoulli + 1) throw DomainError("Bernoulli index out of range");
    return bernoulli_table()[k];
}

Complex expm1_over(Complex z) {
    if (std::abs(z) < 0.1) {
        // sum z^j/(j+1)!
        Complex term = 1.0, sum = 1.0;
        for (int j = 1; j < 16; ++j) {
            term *= z / static_cast<double>(j + 1);
            sum += term;
        }
        return sum;
    }
    return (std::exp(z) - 1.0) / z;
}

PeriodicCoefficients::PeriodicCoefficients(std::int64_t period, std::vector<Complex> coeff)
    : period_(period), coeff_(std::move(coeff)), period_sum_(0.0) {
    if (period_ < 1 || static_cast<std::int64_t>(coeff_.size()) != period_)
        throw DomainError("periodic coefficient table must have length equal to the period");
    for (const auto& v : coeff_) period_sum_ += v;
}

PeriodicCoefficients PeriodicCoefficients::ones() { return PeriodicCoefficients(1, {Complex(1.0, 0.0)}); }

PeriodicCoefficients PeriodicCoefficients::from_character(const DirichletCharacter& chi) {
    return PeriodicCoefficients(chi.modulus(), chi.values());
}

bool PeriodicCoefficients::has_pole() const {
    double scale = 0.0;
    for (const auto& v : coeff_) scale += std::abs(v);
    return std::abs(period_sum_) > 1e-12 * scale;
}

EvalResult periodic_series_em(Complex s, const PeriodicCoefficients& c, std::int64_t M, int K) {
    auto parts = split_series(s, c, M, K);
    if (c.has_pole()) {
        if (s == Complex(1.0, 0.0)) throw PoleError("series has a pole at s = 1");
        return {parts.regular + parts.pole / (s - 1.0), parts.error};
    }
    return {parts.regular, parts.error};
}

EvalParams EvalParams::defaults_for(Complex s) {
    EvalParams p;
    p.em_terms = static_cast<int>(std::max(50.0, std::ceil(3.0 * std::abs(s.imag()))));
    p.bernoulli_order = 8;
    p.target_abs_err = 1e-11;
    return p;
}

namespace {

void check_zeta_params(Complex s, const EvalParams& params) {
    if (params.em_terms < 10) throw DomainError("em_terms must be >= 10");
    if (params.bernoulli_order < 1 || params.bernoulli_order > 10)
        throw DomainError("bernoulli_order must be in [1, 10]");
    if (s.real() < 0.5) throw DomainError("zeta requires Re s >= 0.5");
    if (std::abs(s.imag()) > 1e6) throw DomainError("zeta requires |Im s| <= 1e6");
}

}  // namespace

EvalResult zeta_eval(Complex s, const EvalParams& params) {
    check_zeta_params(s, params);
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
    auto r = periodic_series_em(s, PeriodicCoefficients::ones(), params.em_terms - 1, params.bernoulli_order);
    if (r.error_bound > params.target_abs_err)
        throw ConvergenceError("Euler-Maclaurin error bound " + std::to_string(r.error_bound) +
                               " exceeds target; increase em_terms");
    return r;
}

Complex zeta(Complex s, const EvalParams& params) { return zeta_eval(s, params).value; }

Complex zeta(Complex s) { return zeta(s, EvalParams::defaults_for(s)); }

Complex zeta_times_s_minus_one(Complex s) {
    const auto params = EvalParams::defaults_for(s);
    check_zeta_params(s, params);
    auto parts = split_series(s, PeriodicCoefficients::ones(), params.em_terms - 1, params.bernoulli_order);
    return parts.regular * (s - 1.0) + parts.pole;
}

Complex inverse_zeta(Complex s) {
    if (s == Complex(1.0, 0.0)) return 0.0;
    const Complex z1 = zeta_times_s_minus_one(s);
    const Complex sm1 = s - 1.0;
    if (std::abs(z1) < 1e-13 * std::abs(sm1)) throw AnomalyError("|zeta(s)| below 1e-13; refusing to invert");
    return sm1 / z1;
}

Complex log_zeta(Complex s) {
    if (s.real() <= 1.0) throw DomainError("log_zeta requires Re s > 1");
    return std::log(zeta(s));
}

SeriesValue log_zeta_prime_sum(Complex s, std::int64_t N) {
    if (s.real() <= 1.0) throw DomainError("log_zeta_prime_sum requires Re s > 1");
    if (N < 2) throw DomainError("cutoff must be >= 2");
    auto table = shared_primes(N);
    const double sigma = s.real();
    const double t = s.imag();
    Complex sum = 0.0;
    const std::size_t count = table->count_upto(N);
    for (std::size_t i = count; i-- > 0;) {
        const std::int64_t p = table->prime(i);
        const long double Lp = std::log(static_cast<long double>(p));
        std::int64_t pk = p;
        for (int k = 1;; ++k) {
            sum += power_minus_s(sigma, t, k * Lp) / static_cast<double>(k);
            if (pk > N / p) break;
            pk *= p;
        }
    }
    const double Nd = static_cast<double>(N);
    const double tail = 2.0 * std::pow(Nd, 1.0 - sigma) / ((sigma - 1.0) * std::log(Nd));
    return {sum, tail};
}

Complex dirichlet_l(Complex s, const DirichletCharacter& chi, const EvalParams& params) {
    if (params.bernoulli_order < 1 || params.bernoulli_order > 10)
        throw DomainError("bernoulli_order must be in [1, 10]");
    if (chi.is_principal() && s == Complex(1.0, 0.0)) throw PoleError("principal L-function has a pole at s = 1");
    const auto c = PeriodicCoefficients::from_character(chi);
    const std::int64_t D = chi.modulus();
    const std::int64_t M = std::max<std::int64_t>(10, (params.em_terms + D - 1) / D);
    auto r = periodic_series_em(s, c, M, params.bernoulli_order);
    if (r.error_bound > params.target_abs_err)
        throw ConvergenceError("Dirichlet L error bound exceeds target; increase em_terms");
    return r.value;
}

Complex dirichlet_l(Complex s, const DirichletCharacter& chi) {
    return dirichlet_l(s, chi, EvalParams::defaults_for(s));
}

Complex mollifier(Complex s, std::int64_t X) {
    if (X < 2) throw DomainError("mollifier requires X >= 2");
    // Linear sieve for the Moebius function on [1, X).
    std::vector<int> mu(static_cast<std::size_t>(X), 1);
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(X), false);
    for (std::int64_t i = 2; i < X; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (std::int64_t p : primes) {
            if (i * p >= X) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    Complex sum = 0.0;
    for (std::int64_t n = X - 1; n >= 1; --n) {
        if (mu[n] == 0) continue;
        sum += static_cast<double>(mu[n]) * power_minus_s(s.real(), s.imag(), std::log(static_cast<long double>(n)));
    }
    return sum;
}

Complex inv_zeta_taylor(Complex s) {
    const Complex u = s - 1.0;
    if (std::abs(u) > 0.25) throw DomainError("inv_zeta_taylor requires |s-1| <= 1/4");
    return u - constants::gamma * u * u;
}

namespace {

int bessel_order_needed(double z) { return static_cast<int>(std::ceil(z + 10.0 * std::cbrt(z) + 15.0)); }

void bessel_fill(double z, int order, double* out) {
    for (int j = 0; j <= order; ++j) out[j] = 0.0;
    if (z == 0.0) {
        out[0] = 1.0;
        return;
    }
    int m = order + 16;
    if (m % 2 == 1) ++m;
    const double inv = 1.0 / z;
    double above = 0.0, cur = 1e-30, norm = 2.0 * cur;
    for (int k = m; k >= 1; --k) {
        const double below = 2.0 * k * inv * cur - above;
        above = cur;
        cur = below;
        const int idx = k - 1;
        if (idx <= order) out[idx] = cur;
        if (idx % 2 == 0) norm += (idx == 0 ? cur : 2.0 * cur);
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            above *= 1e-250;
            norm *= 1e-250;
            for (int j = idx; j <= order; ++j) out[j] *= 1e-250;
        }
    }
    const double scale = 1.0 / norm;
    for (int j = 0; j <= order; ++j) out[j] *= scale;
}

}  // namespace

std::vector<double> bessel_j_sequence(double z, int order) {
    if (z < 0.0 || order < 0) throw DomainError("bessel_j_sequence requires z >= 0, order >= 0");
    const int work = std::max(order, bessel_order_needed(z));
    std::vector<double> out(static_cast<std::size_t>(work) + 1);
    bessel_fill(z, work, out.data());
    out.resize(static_cast<std::size_t>(order) + 1);
    return out;
}

SeriesWindow::SeriesWindow(PeriodicCoefficients coeffs, double sigma, double t_lo, double t_hi, double target_err)
    : coeffs_(std::move(coeffs)), sigma_(sigma), t_lo_(t_lo), t_hi_(t_hi) {
    if (!(t_lo <= t_hi)) throw DomainError("window requires t_lo <= t_hi");
    if (sigma < 0.5) throw DomainError("window requires sigma >= 0.5");
    if (std::max(std::abs(t_lo), std::abs(t_hi)) > 1e9) throw DomainError("window requires |t| <= 1e9");
    center_ = 0.5 * (t_lo + t_hi);
    half_ = 0.5 * (t_hi - t_lo);

    // Choose the class cutoff M and Bernoulli order K from the worst-case tail bound.
    const double tmax = std::max(std::abs(t_lo), std::abs(t_hi));
    const Complex s_worst(sigma, tmax);
    const bool pole_free = !coeffs_.has_pole();
    std::int64_t M = std::max<std::int64_t>(8, static_cast<std::int64_t>(std::ceil(tmax / constants::two_pi)));
    int K = 0;
    double tail_err = 0.0;
    for (int attempt = 0; attempt < 200 && K == 0; ++attempt) {
        for (int k = 1; k <= kMaxBernoulli - 1; ++k) {
            const double e = class_tails(s_worst, coeffs_, M, k, pole_free).error;
            if (e <= 0.5 * target_err) {
                K = k;
                tail_err = e;
                break;
            }
        }
        if (K == 0) M = static_cast<std::int64_t>(std::ceil(M * 1.25)) + 1;
    }
    if (K == 0) throw ConvergenceError("window: could not meet the target error");
    M_ = M;
    K_ = K;

    const std::int64_t nmax = M_ * coeffs_.period();
    const double zmax = half_ * std::log(static_cast<double>(nmax));
    const int order = bessel_order_needed(zmax);
    std::vector<Complex> acc(static_cast<std::size_t>(order) + 1, Complex(0.0, 0.0));
    std::vector<double> J(static_cast<std::size_t>(order) + 1);
    double coeff_mass = 0.0;
    int block_order = 0;
    const std::int64_t block = 1024;
    for (std::int64_t n = 1; n <= nmax; ++n) {
        if ((n - 1) % block == 0) {
            const std::int64_t nend = std::min(nmax, n + block - 1);
            block_order = std::min(order, bessel_order_needed(half_ * std::log(static_cast<double>(nend))));
        }
        const Complex c = coeffs_(n);
        if (c == Complex(0.0, 0.0)) continue;
        const long double L = std::log(static_cast<long double>(n));
        const Complex cn = c * power_minus_s(sigma_, center_, L);
        coeff_mass += std::abs(cn);
        bessel_fill(half_ * static_cast<double>(L), block_order, J.data());
        for (int j = 0; j <= block_order; ++j) acc[j] += cn * J[j];
    }
    cheb_.resize(acc.size());
    Complex mi_pow(1.0, 0.0);
    const Complex minus_i(0.0, -1.0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
        cheb_[j] = (j == 0 ? 1.0 : 2.0) * mi_pow * acc[j];
        mi_pow *= minus_i;
    }
    error_bound_ = tail_err + 1e-15 * coeff_mass * (1.0 + order);
}

Complex SeriesWindow::tail(Complex s) const {
    const bool pole_free = !coeffs_.has_pole();
    auto parts = class_tails(s, coeffs_, M_, K_, pole_free);
    if (pole_free) return parts.regular;
    if (s == Complex(1.0, 0.0)) throw PoleError("series has a pole at s = 1");
    return parts.regular + parts.pole / (s - 1.0);
}

Complex SeriesWindow::value(double t) const {
    if (t < t_lo_ - 1e-9 * (1.0 + std::abs(t_lo_)) || t > t_hi_ + 1e-9 * (1.0 + std::abs(t_hi_)))
        throw DomainError("window evaluation outside [t_lo, t_hi]");
    const double x = half_ > 0.0 ? std::clamp((t - center_) / half_, -1.0, 1.0) : 0.0;
    Complex b1 = 0.0, b2 = 0.0;
    for (std::size_t k = cheb_.size() - 1; k >= 1; --k) {
        const Complex b0 = cheb_[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    const Complex main = cheb_[0] + x * b1 - b2;
    return main + tail(Complex(sigma_, t));
}

double SeriesWindow::log_abs(double t) const { return std::log(std::abs(value(t))); }

}  // namespace zetaline
