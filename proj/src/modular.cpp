#include "zetaline/modular.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetaline/norms.hpp"
#include "zetaline/parallel.hpp"
#include "zetaline/quadrature.hpp"

namespace zetaline {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_small(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Four primes just below 2^31; their product exceeds 2^123.
std::vector<u64> crt_moduli() {
    std::vector<u64> out;
    for (u64 n = (1ULL << 31) - 1; out.size() < 4; --n)
        if (is_prime_small(n)) out.push_back(n);
    return out;
}

std::vector<u64> convolve(const std::vector<u64>& a, const std::vector<u64>& b, u64 m) {
    const std::size_t n = a.size();
    std::vector<u64> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        u128 acc = 0;
        for (std::size_t i = 0; i <= k; ++i) acc += static_cast<u128>(a[i]) * b[k - i];
        c[k] = static_cast<u64>(acc % m);
    }
    return c;
}

// Delta coefficients 0..N modulo m.
std::vector<u64> delta_mod(std::int64_t N, u64 m) {
    const std::size_t n = static_cast<std::size_t>(N) + 1;
    std::vector<u64> s3(n, 0), s5(n, 0);
    for (std::size_t d = 1; d < n; ++d) {
        const u64 d3 = powmod(d, 3, m), d5 = powmod(d, 5, m);
        for (std::size_t k = d; k < n; k += d) {
            s3[k] = (s3[k] + d3) % m;
            s5[k] = (s5[k] + d5) % m;
        }
    }
    std::vector<u64> e4(n), e6(n);
    e4[0] = 1;
    e6[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        e4[k] = mulmod(240, s3[k], m);
        e6[k] = (m - mulmod(504, s5[k], m)) % m;
    }
    const auto e4sq = convolve(e4, e4, m);
    const auto e4cube = convolve(e4sq, e4, m);
    const auto e6sq = convolve(e6, e6, m);
    const u64 inv1728 = powmod(1728, m - 2, m);
    std::vector<u64> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = mulmod((e4cube[k] + m - e6sq[k]) % m, inv1728, m);
    return out;
}

}  // namespace

std::string to_string(Int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

TauTable::TauTable(std::int64_t N) : N_(N) {
    if (N < 1 || N > 20000) throw DomainError("tau table size must lie in [1, 20000]");
    const auto mods = crt_moduli();
    std::vector<std::vector<u64>> residues;
    for (u64 m : mods) residues.push_back(delta_mod(N, m));
    // Garner reconstruction, then the symmetric representative.
    u128 M = 1;
    for (u64 m : mods) M *= m;
    tau_.assign(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t n = 1; n <= N; ++n) {
        u128 x = residues[0][n];
        u128 prod = mods[0];
        for (std::size_t j = 1; j < mods.size(); ++j) {
            const u64 m = mods[j];
            const u64 xm = static_cast<u64>(x % m);
            const u64 diff = (residues[j][n] + m - xm) % m;
            const u64 inv = powmod(static_cast<u64>(prod % m), m - 2, m);
            x += prod * mulmod(diff, inv, m);
            prod *= m;
        }
        tau_[n] = x > M / 2 ? -static_cast<Int128>(M - x) : static_cast<Int128>(x);
    }
}

Int128 TauTable::operator()(std::int64_t n) const {
    if (n < 1 || n > N_) throw DomainError("tau index out of range");
    return tau_[n];
}

double TauTable::normalized(std::int64_t n) const {
    return value(n) / std::pow(static_cast<double>(n), 5.5);
}

bool TauTable::deligne_holds(std::int64_t p) const {
    using boost::multiprecision::cpp_int;
    const Int128 t = (*this)(p);
    const bool neg = t < 0;
    u128 u = neg ? static_cast<u128>(-(t + 1)) + 1 : static_cast<u128>(t);
    cpp_int tau_abs = static_cast<u64>(u >> 64);
    tau_abs <<= 64;
    tau_abs += static_cast<u64>(u);
    cpp_int bound = 4;
    for (int i = 0; i < 11; ++i) bound *= p;
    return tau_abs * tau_abs <= bound;
}

void TauTable::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw PathError("cannot write " + path);
    out << "n,tau\n";
    for (std::int64_t n = 1; n <= N_; ++n) out << n << ',' << str(n) << '\n';
}

std::vector<double> hecke_extend(double a_p, std::int64_t p, int K) {
    if (std::abs(a_p) > 2.0) throw DomainError("Hecke eigenvalue must satisfy |a_p| <= 2");
    if (p < 2 || K < 0) throw DomainError("hecke_extend needs p >= 2 and K >= 0");
    std::vector<double> a(static_cast<std::size_t>(K) + 1);
    a[0] = 1.0;
    if (K >= 1) a[1] = a_p;
    for (int k = 1; k < K; ++k) a[k + 1] = a_p * a[k] - a[k - 1];
    return a;
}

double sato_tate_inverse_cdf(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return constants::pi;
    const double target = constants::pi * u;
    double lo = 0.0, hi = constants::pi, th = target;
    for (int it = 0; it < 30; ++it) {
        const double g = th - std::sin(th) * std::cos(th) - target;
        if (g > 0.0) hi = th; else lo = th;
        if (std::abs(g) <= 1e-15) break;
        const double dg = 2.0 * std::sin(th) * std::sin(th);
        double next = dg > 0.0 ? th - g / dg : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        th = next;
    }
    return th;
}

double SatoTateSample::a(std::size_t i) const { return 2.0 * std::cos(angles[i]); }

double SatoTateSample::a_of(std::int64_t p) const {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p) return 0.0;
    return a(static_cast<std::size_t>(it - primes.begin()));
}

SatoTateSample sato_tate_sample(std::uint64_t seed, std::int64_t P) {
    if (P < 2 || P > 1000000) throw DomainError("Sato-Tate sample range must lie in [2, 1e6]");
    const auto table = shared_primes(P);
    SatoTateSample s;
    s.seed = seed;
    s.P = P;
    const std::size_t n = table->count_upto(P);
    s.primes.assign(table->primes().begin(), table->primes().begin() + n);
    s.angles.resize(n);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) s.angles[i] = sato_tate_inverse_cdf(rng.uniform());
    return s;
}

NormResult sato_tate_alpha() {
    auto f = [](double t) { return std::abs(t) * std::sqrt(std::max(0.0, 1.0 - t * t)); };
    NormResult r = integrate(f, -1.0, 1.0, 1e-13, {0.0});
    const double scale = 4.0 / constants::pi;
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

std::int64_t catalan(int k) {
    if (k < 1 || k > 15) throw DomainError("catalan index must lie in [1, 15]");
    std::int64_t c = 1;
    for (int j = 0; j < k; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
    return c;
}

MultiplicativeSeries coefficient_series(CoefficientSource source, std::int64_t N, const CoefficientOptions& opts) {
    switch (source) {
        case CoefficientSource::TauNormalized: {
            auto table = std::make_shared<TauTable>(N);
            return MultiplicativeSeries::hecke("tau_normalized", [table](std::int64_t p) {
                return p <= table->size() ? table->normalized(p) : 0.0;
            });
        }
        case CoefficientSource::SatoTate: {
            auto sample = std::make_shared<SatoTateSample>(sato_tate_sample(opts.seed, N));
            return MultiplicativeSeries::hecke("sato_tate_" + std::to_string(opts.seed),
                                               [sample](std::int64_t p) { return sample->a_of(p); });
        }
        case CoefficientSource::DirichletMagnitude:
            return MultiplicativeSeries::character_magnitude(opts.modulus);
        case CoefficientSource::Ones:
            return MultiplicativeSeries::ones();
    }
    throw DomainError("unknown coefficient source");
}

GrowthFit coefficient_alpha(CoefficientSource source, std::int64_t N, const CoefficientOptions& opts) {
    return alpha_beta_fit(coefficient_series(source, N, opts), N, GrowthConvention::PrimeSum);
}

ExponentTable exponent_table(double p) {
    const double ap = std::abs(p);
    const double st = 8.0 / (3.0 * constants::pi);
    ExponentTable t;
    t.pairs.push_back({"power_mean", 1.0 + ap, 1.0 - ap});
    t.pairs.push_back({"weight12_cusp_form", 23.0 / 12.0, 1.0 / 12.0});
    t.pairs.push_back({"sato_tate", 1.0 + st, 1.0 - st});
    for (int k = 1; k <= 4; ++k) t.catalan_exponents.emplace_back(k, catalan(k));
    return t;
}

SupConstants sato_tate_sup_constants(double B, double lambda0, double lambda1) {
    if (!std::isfinite(B)) throw DomainError("prime-sum constant B must be supplied");
    const auto [lo, hi] = sup_norm_constants(B, lambda0, lambda1);
    return {lo, hi, 8.0 / (3.0 * constants::pi)};
}

// ---------------------------------------------------------------------------

BoundSeries bound_series_from(const MultiplicativeSeries& series, std::int64_t fit_N,
                              std::function<std::function<double(double)>(double, double)> log_abs) {
    const GrowthFit fit = alpha_beta_fit(series, fit_N, GrowthConvention::PrimeSum);
    // The fit is accurate to about 0.02; a series within that of 1 is treated as alpha = 1.
    if (fit.alpha >= 0.98)
        throw DomainError("two-sided bound needs coefficient growth alpha < 1 (fitted " + std::to_string(fit.alpha) + ")");
    return {series.name(), fit.alpha, std::move(log_abs)};
}

BoundSeries split_prime_bound_series(std::int64_t fit_N) {
    const auto series = MultiplicativeSeries::prime_class_indicator(4, 1);
    constexpr std::int64_t kInertCutoff = 100000;
    auto table = shared_primes(kInertCutoff);
    auto inert = std::make_shared<std::vector<double>>();
    for (std::size_t i = 0; i < table->count_upto(kInertCutoff); ++i)
        if (table->prime(i) % 4 == 3) inert->push_back(table->log(i));
    const DirichletCharacter chi4 = characters_mod(4).at(1);
    auto factory = [inert, chi4](double t_lo, double t_hi) -> std::function<double(double)> {
        auto lz = make_log_abs(Target::zeta(), 1.0, t_lo, t_hi);
        auto ll = make_log_abs(Target::dirichlet(chi4), 1.0, t_lo, t_hi);
        return [lz, ll, inert](double t) {
            const Complex s(1.0, t);
            double v = lz(t) + ll(t) + std::log(std::abs(1.0 - std::exp(-s * constants::log2)));
            for (double lp : *inert) v += std::log(std::abs(1.0 - std::exp(-2.0 * s * lp)));
            return 0.5 * v;
        };
    };
    return bound_series_from(series, fit_N, factory);
}

BoundSeries sato_tate_bound_series(std::uint64_t seed, std::int64_t P) {
    auto sample = std::make_shared<SatoTateSample>(sato_tate_sample(seed, P));
    const auto series = MultiplicativeSeries::hecke("sato_tate_" + std::to_string(seed),
                                                    [sample](std::int64_t p) { return sample->a_of(p); });
    auto logs = std::make_shared<std::vector<double>>();
    for (auto p : sample->primes) logs->push_back(std::log(static_cast<double>(p)));
    auto factory = [sample, logs](double, double) -> std::function<double(double)> {
        return [sample, logs](double t) {
            double v = 0.0;
            for (std::size_t i = 0; i < logs->size(); ++i) {
                const double inv_p = std::exp(-(*logs)[i]);
                const Complex w = std::polar(inv_p, -t * (*logs)[i]);
                v -= std::log(std::abs(1.0 - sample->a(i) * w + w * w));
            }
            return v;
        };
    };
    return bound_series_from(series, P, factory);
}

BoundReport theorem19_check(const BoundSeries& series, const BoundCheckOptions& opts) {
    if (opts.deltas.empty() || opts.T_samples < 1) throw DomainError("bound check needs deltas and T samples");
    if (!(series.alpha < 1.0)) throw DomainError("two-sided bound needs alpha < 1");
    for (double d : opts.deltas)
        if (!(d > 0.0 && d <= 2.0)) throw DomainError("delta must lie in (0, 2]");
    const double dmax = *std::max_element(opts.deltas.begin(), opts.deltas.end());
    SplitMix64 rng(opts.seed);
    std::vector<double> Ts(opts.T_samples);
    for (auto& T : Ts) T = opts.T_lo + rng.uniform() * (opts.T_hi - opts.T_lo);

    // integrals[i][j]: T index i, delta index j
    auto integrals = parallel_map<std::vector<double>>(Ts.size(), opts.threads, [&](std::size_t i) {
        const double T = Ts[i];
        auto la = series.log_abs(T, T + dmax);
        std::vector<double> row;
        for (double d : opts.deltas) {
            const NormResult r = integrate([&](double t) { return std::exp(la(t)); }, T, T + d, opts.tol);
            row.push_back(r.value);
        }
        return row;
    });

    BoundReport rep;
    rep.name = series.name;
    rep.alpha = series.alpha;
    rep.calibration_delta = dmax;
    const std::size_t jcal = static_cast<std::size_t>(
        std::max_element(opts.deltas.begin(), opts.deltas.end()) - opts.deltas.begin());
    rep.c = INFINITY;
    rep.C = 0.0;
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        rep.c = std::min(rep.c, integrals[i][jcal] / std::pow(dmax, 1.0 + series.alpha));
        rep.C = std::max(rep.C, integrals[i][jcal] / std::pow(dmax, 1.0 - series.alpha));
    }
    for (std::size_t j = 0; j < opts.deltas.size(); ++j) {
        const double d = opts.deltas[j];
        const double lower = rep.c * std::pow(d, 1.0 + series.alpha);
        const double upper = rep.C * std::pow(d, 1.0 - series.alpha);
        for (std::size_t i = 0; i < Ts.size(); ++i) {
            const double I = integrals[i][j];
            // Calibration rows meet the bounds by construction; allow for rounding there.
            const double slack = 1e-12 * std::abs(I);
            const bool ok = I >= lower - slack && I <= upper + slack;
            rep.rows.push_back({d, Ts[i], I, lower, upper, ok});
            if (!ok) ++rep.violations;
        }
    }
    return rep;
}

}  // namespace zetaline
