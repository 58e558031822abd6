#include "zetaline/lfunc.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zetaline/extremal.hpp"
#include "zetaline/parallel.hpp"

namespace zetaline {

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

constexpr int kCircleSamples = 4096;

struct CircleScan {
    double min_log;
    double max_log;
    double min_modulus;
};

double golden_minimize(const std::function<double(double)>& g, double a, double b, double& x_best) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - r * (b - a), d = a + r * (b - a);
    double gc = g(c), gd = g(d);
    for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
        if (gc < gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - r * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + r * (b - a);
            gd = g(d);
        }
    }
    x_best = gc < gd ? c : d;
    return std::min(gc, gd);
}

// Refines the three best sampled local minima of g over the periodic grid.
double refine_min(const std::vector<double>& samples, const std::function<double(double)>& g) {
    const int n = static_cast<int>(samples.size());
    const double h = constants::two_pi / n;
    std::vector<int> locals;
    for (int i = 0; i < n; ++i) {
        const double prev = samples[(i + n - 1) % n], next = samples[(i + 1) % n];
        if (samples[i] <= prev && samples[i] <= next) locals.push_back(i);
    }
    std::sort(locals.begin(), locals.end(), [&](int a, int b) { return samples[a] < samples[b]; });
    if (locals.size() > 3) locals.resize(3);
    double best = *std::min_element(samples.begin(), samples.end());
    for (int i : locals) {
        double x;
        best = std::min(best, golden_minimize(g, (i - 1) * h, (i + 1) * h, x));
    }
    return best;
}

CircleScan scan_circle(const EulerFactor& f) {
    const double r = 1.0 / static_cast<double>(f.p);
    auto modulus = [&](double th) { return std::abs(f.eval(std::polar(r, th))); };
    std::vector<double> lo(kCircleSamples), hi(kCircleSamples);
    double min_mod = INFINITY;
    for (int i = 0; i < kCircleSamples; ++i) {
        const double m = modulus(constants::two_pi * i / kCircleSamples);
        min_mod = std::min(min_mod, m);
        lo[i] = std::log(m);
        hi[i] = -lo[i];
    }
    CircleScan out{};
    out.min_modulus = min_mod;
    if (min_mod <= 0.0) {
        out.min_log = -INFINITY;
    } else {
        out.min_log = refine_min(lo, [&](double th) { return std::log(modulus(th)); });
        out.min_modulus = std::min(min_mod, std::exp(out.min_log));
    }
    out.max_log = -refine_min(hi, [&](double th) { return -std::log(modulus(th)); });
    return out;
}

bool trivial_factor(const EulerFactor& f) {
    if (f.exact()) return false;
    for (std::size_t k = 1; k < f.coeffs.size(); ++k)
        if (f.coeffs[k] != 0.0) return false;
    return true;
}

void check_tail(const EulerFactor& f) {
    if (f.tail_bound > 1e-12)
        throw PrecisionError("Euler factor at p=" + std::to_string(f.p) + " has truncation tail above 1e-12");
}

}  // namespace

Complex EulerFactor::eval(Complex z) const {
    if (exact()) return horner(numerator, z) / horner(denominator, z);
    return horner(coeffs, z);
}

EulerFactor EulerFactor::geometric(std::int64_t p, Complex a, int K) {
    if (p < 2) throw DomainError("Euler factor needs a prime p >= 2");
    EulerFactor f;
    f.p = p;
    f.coeffs.resize(K + 1);
    f.coeffs[0] = 1.0;
    for (int k = 1; k <= K; ++k) f.coeffs[k] = f.coeffs[k - 1] * a;
    if (a != 0.0) {
        f.numerator = {1.0};
        f.denominator = {1.0, -a};
    }
    return f;
}

EulerFactor EulerFactor::hecke(std::int64_t p, double a, int K) {
    if (p < 2) throw DomainError("Euler factor needs a prime p >= 2");
    EulerFactor f;
    f.p = p;
    f.coeffs.resize(K + 1);
    f.coeffs[0] = 1.0;
    if (K >= 1) f.coeffs[1] = a;
    for (int k = 2; k <= K; ++k) f.coeffs[k] = a * f.coeffs[k - 1] - f.coeffs[k - 2];
    f.numerator = {1.0};
    f.denominator = {1.0, -a, 1.0};
    return f;
}

EulerFactor EulerFactor::from_coeffs(std::int64_t p, std::vector<Complex> coeffs, double tail_bound) {
    if (p < 2) throw DomainError("Euler factor needs a prime p >= 2");
    if (coeffs.empty() || coeffs[0] != 1.0) throw DomainError("Euler factor coefficients must start with 1");
    if (!(tail_bound >= 0.0)) throw DomainError("Euler factor tail bound must be non-negative");
    EulerFactor f;
    f.p = p;
    f.coeffs = std::move(coeffs);
    f.tail_bound = tail_bound;
    return f;
}

LocalExtrema local_extrema(const EulerFactor& factor) {
    check_tail(factor);
    if (trivial_factor(factor)) return {0.0, 0.0};
    const CircleScan scan = scan_circle(factor);
    if (scan.min_modulus <= 10.0 * std::max(factor.tail_bound, 1e-12))
        throw ZeroOnCircleError("Euler factor at p=" + std::to_string(factor.p) + " vanishes on |z|=1/p");
    return {scan.min_log, scan.max_log};
}

double local_max_log(const EulerFactor& factor) {
    check_tail(factor);
    if (trivial_factor(factor)) return 0.0;
    return scan_circle(factor).max_log;
}

// ---------------------------------------------------------------------------

MultiplicativeSeries MultiplicativeSeries::completely_multiplicative(std::string name, PrimeRule a_p) {
    MultiplicativeSeries s;
    s.name_ = std::move(name);
    s.kind_ = SeriesKind::CompletelyMultiplicative;
    s.prime_rule_ = std::move(a_p);
    return s;
}

MultiplicativeSeries MultiplicativeSeries::general(std::string name, FactorRule rule, SeriesKind kind) {
    MultiplicativeSeries s;
    s.name_ = std::move(name);
    s.kind_ = kind;
    s.factor_rule_ = std::move(rule);
    return s;
}

MultiplicativeSeries MultiplicativeSeries::ones() {
    auto s = completely_multiplicative("ones", [](std::int64_t) { return Complex(1.0); });
    s.exceptional_ = std::vector<std::int64_t>{};
    return s;
}

MultiplicativeSeries MultiplicativeSeries::zero() {
    return completely_multiplicative("zero", [](std::int64_t) { return Complex(0.0); });
}

MultiplicativeSeries MultiplicativeSeries::character_magnitude(std::int64_t modulus) {
    if (modulus < 1) throw DomainError("character modulus must be >= 1");
    auto s = completely_multiplicative("character_magnitude_" + std::to_string(modulus), [modulus](std::int64_t p) {
        return Complex(modulus % p == 0 ? 0.0 : 1.0);
    });
    std::vector<std::int64_t> ex;
    for (const auto& pk : factorize(modulus)) ex.push_back(pk.p);
    s.exceptional_ = ex;
    return s;
}

MultiplicativeSeries MultiplicativeSeries::prime_class_indicator(std::int64_t modulus, std::int64_t residue) {
    if (modulus < 1) throw DomainError("modulus must be >= 1");
    const std::int64_t r = ((residue % modulus) + modulus) % modulus;
    return completely_multiplicative(
        "primes_" + std::to_string(r) + "_mod_" + std::to_string(modulus),
        [modulus, r](std::int64_t p) { return Complex(p % modulus == r ? 1.0 : 0.0); });
}

MultiplicativeSeries MultiplicativeSeries::single_prime(std::int64_t p0, Complex a) {
    auto s = completely_multiplicative("single_prime_" + std::to_string(p0),
                                       [p0, a](std::int64_t p) { return p == p0 ? a : Complex(0.0); });
    return s;
}

MultiplicativeSeries MultiplicativeSeries::hecke(std::string name, std::function<double(std::int64_t)> a_p) {
    auto s = general(std::move(name), [a_p](std::int64_t p) { return EulerFactor::hecke(p, a_p(p)); });
    s.prime_rule_ = [a_p](std::int64_t p) { return Complex(a_p(p)); };
    return s;
}

MultiplicativeSeries MultiplicativeSeries::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PathError("cannot open coefficient file: " + path);
    auto table = std::make_shared<std::vector<std::pair<std::int64_t, std::vector<Complex>>>>();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.empty()) continue;
        if (lineno == 1 && !cells[0].empty() && !std::isdigit(static_cast<unsigned char>(cells[0][0]))) continue;
        try {
            const std::int64_t p = std::stoll(cells[0]);
            std::vector<Complex> c{1.0};
            for (std::size_t i = 1; i < cells.size(); ++i) c.emplace_back(std::stod(cells[i]));
            table->emplace_back(p, std::move(c));
        } catch (const std::exception&) {
            throw DomainError(path + ":" + std::to_string(lineno) + ": malformed coefficient row");
        }
    }
    std::sort(table->begin(), table->end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto s = general("csv:" + path, [table](std::int64_t p) {
        auto it = std::lower_bound(table->begin(), table->end(), p,
                                   [](const auto& row, std::int64_t q) { return row.first < q; });
        if (it == table->end() || it->first != p) return EulerFactor::from_coeffs(p, {1.0}, 0.0);
        return EulerFactor::from_coeffs(p, it->second, 0.0);
    });
    return s;
}

EulerFactor MultiplicativeSeries::factor(std::int64_t p) const {
    if (factor_rule_) return factor_rule_(p);
    return EulerFactor::geometric(p, prime_rule_(p));
}

Complex MultiplicativeSeries::a_p(std::int64_t p) const {
    if (prime_rule_) return prime_rule_(p);
    const EulerFactor f = factor(p);
    return f.coeffs.size() > 1 ? f.coeffs[1] : Complex(0.0);
}

double MultiplicativeSeries::abs_coefficient(std::int64_t p, int k) const {
    if (k == 0) return 1.0;
    if (kind_ == SeriesKind::CompletelyMultiplicative) return std::pow(std::abs(prime_rule_(p)), k);
    const EulerFactor f = factor(p);
    return k < static_cast<int>(f.coeffs.size()) ? std::abs(f.coeffs[k]) : 0.0;
}

// ---------------------------------------------------------------------------

LambdaSums lambda_sums(const MultiplicativeSeries& series, std::int64_t P, int threads) {
    if (P < 2) throw DomainError("lambda_sums needs P >= 2");
    const auto table = shared_primes(P);
    const std::size_t n = table->count_upto(P);
    struct Term {
        double l0, l1;
        bool zero;
    };
    const bool cm = series.kind() == SeriesKind::CompletelyMultiplicative;
    auto terms = parallel_map<Term>(n, threads, [&](std::size_t i) -> Term {
        const std::int64_t p = table->prime(i);
        const double pd = static_cast<double>(p);
        if (cm) {
            const double a = std::abs(series.a_p(p));
            if (a >= pd) throw DomainError("geometric factor needs |a(p)| < p");
            const double ap = a / pd;
            return {-std::log1p(ap) + ap, ap + std::log1p(-ap), false};
        }
        const EulerFactor f = series.factor(p);
        const double ap = (f.coeffs.size() > 1 ? std::abs(f.coeffs[1]) : 0.0) / pd;
        const double M = local_max_log(f);
        try {
            const LocalExtrema e = local_extrema(f);
            return {e.min_log + ap, ap - M, false};
        } catch (const ZeroOnCircleError&) {
            return {0.0, ap - M, true};
        }
    });
    LambdaSums out;
    double l0 = 0.0, l1 = 0.0;
    std::int64_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
        l1 += terms[i].l1;
        l0 += terms[i].l0;
        if (terms[i].zero && bad == 0) bad = table->prime(i);
    }
    out.lambda1 = l1;
    if (bad == 0) {
        out.lambda0 = l0;
    } else {
        out.lambda0_error = "Euler factor at p=" + std::to_string(bad) + " vanishes on its circle";
    }
    const double Pd = static_cast<double>(P);
    out.tail_estimate = 1.0 / (Pd * std::log(Pd));
    return out;
}

double growth_partial_sum(const MultiplicativeSeries& series, std::int64_t N, GrowthConvention convention) {
    const auto table = shared_primes(N);
    const std::size_t n = table->count_upto(N);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t p = table->prime(i);
        if (convention == GrowthConvention::PrimeSum) {
            sum += series.abs_coefficient(p, 1) / static_cast<double>(p);
            continue;
        }
        std::int64_t q = p;
        for (int k = 1;; ++k) {
            sum += series.abs_coefficient(p, k) / (k * static_cast<double>(q));
            if (q > N / p) break;
            q *= p;
        }
    }
    return sum;
}

GrowthFit alpha_beta_fit(const MultiplicativeSeries& series, std::int64_t N, GrowthConvention convention,
                         std::optional<double> fixed_alpha) {
    if (N < 1000) throw DomainError("alpha_beta_fit needs N >= 1000");
    // One pass over all contributions, then prefix sums at the sample cutoffs.
    const auto table = shared_primes(N);
    const std::size_t count = table->count_upto(N);
    std::vector<std::pair<std::int64_t, double>> contrib;
    contrib.reserve(count + 256);
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t p = table->prime(i);
        if (convention == GrowthConvention::PrimeSum) {
            contrib.emplace_back(p, series.abs_coefficient(p, 1) / static_cast<double>(p));
            continue;
        }
        std::int64_t q = p;
        for (int k = 1;; ++k) {
            contrib.emplace_back(q, series.abs_coefficient(p, k) / (k * static_cast<double>(q)));
            if (q > N / p) break;
            q *= p;
        }
    }
    std::sort(contrib.begin(), contrib.end());
    std::vector<double> xs, ys;
    std::size_t idx = 0;
    double acc = 0.0;
    for (int j = 4; j <= 8; ++j) {
        const auto Nj = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(N), j / 8.0) + 1e-9));
        while (idx < contrib.size() && contrib[idx].first <= Nj) acc += contrib[idx++].second;
        xs.push_back(std::log(std::log(static_cast<double>(Nj))));
        ys.push_back(acc);
    }
    GrowthFit fit;
    fit.N_used = N;
    if (fixed_alpha) {
        fit.alpha = *fixed_alpha;
        fit.beta = ys.back() - fit.alpha * xs.back();
        return fit;
    }
    const double m = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / m;
        my += ys[i] / m;
    }
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    fit.alpha = sxy / sxx;
    fit.beta = my - fit.alpha * mx;
    fit.residual = std::abs(ys.back() - (fit.alpha * xs.back() + fit.beta));
    return fit;
}

double beta_from_residue(double r) {
    if (!(r > 0.0)) throw DomainError("residue must be positive");
    return constants::gamma + std::log(r);
}

PredictedInfima predicted_infima(double alpha, double beta, double lambda0, double lambda1, double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("delta must lie in (0, 1]");
    const double scale = std::pow(delta, alpha) / 4.0;
    return {std::exp(lambda0 - beta) * scale, std::exp(lambda1 - beta) * scale};
}

PredictedInfima lambda_weighted_infima(double alpha, double beta, double sum_sq, double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("delta must lie in (0, 1]");
    const double inv = std::exp(-beta) / 4.0 * std::pow(delta, alpha);
    return {sum_sq * inv, inv};
}

double sum_sq_coefficients(const MultiplicativeSeries& series, std::int64_t N) {
    const auto table = shared_primes(N);
    const std::size_t n = table->count_upto(N);
    double log_prod = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t p = table->prime(i);
        const double pd = static_cast<double>(p);
        if (series.kind() == SeriesKind::CompletelyMultiplicative) {
            const double a = std::abs(series.a_p(p));
            log_prod -= std::log1p(-a * a / (pd * pd));
        } else {
            const EulerFactor f = series.factor(p);
            double local = 0.0, w = 1.0;
            for (const auto& c : f.coeffs) {
                local += std::norm(c) * w;
                w /= pd * pd;
            }
            log_prod += std::log(local);
        }
    }
    return std::exp(log_prod);
}

// ---------------------------------------------------------------------------

GeneralExtremalSeries::GeneralExtremalSeries(const MultiplicativeSeries& series, double delta, std::int64_t P)
    : delta_(delta), P_(P) {
    if (series.kind() != SeriesKind::CompletelyMultiplicative)
        throw DomainError("extremal rotation needs a completely multiplicative series");
    if (!(delta > 0.0)) throw DomainError("delta must be positive");
    if (P < 2) throw DomainError("cutoff must be >= 2");
    table_ = shared_primes(P);
    const std::size_t n = table_->count_upto(P);
    b_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        b_[i] = epsilon_sign(delta * table_->log(i)) * std::abs(series.a_p(table_->prime(i)));
    if (series.exceptional_primes()) {
        closed_ = true;
        for (std::int64_t p : *series.exceptional_primes()) exceptional_.emplace_back(p, std::abs(series.a_p(p)));
    }
}

SeriesValue GeneralExtremalSeries::log_value(Complex s) const {
    const double sigma = s.real();
    const double logP = std::log(static_cast<double>(P_));
    if (sigma < 1.0 + 1.0 / logP)
        throw PrecisionError("truncated product needs sigma >= 1 + 1/log P");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < b_.size(); ++i) {
        if (b_[i] == 0.0) continue;
        const Complex w = b_[i] * std::exp(-s * table_->log(i));
        acc -= std::log(1.0 - w);
    }
    double amax = 0.0;
    for (double b : b_) amax = std::max(amax, std::abs(b));
    const double tail = amax * std::pow(static_cast<double>(P_), 1.0 - sigma) / ((sigma - 1.0) * logP);
    return {acc, tail};
}

double GeneralExtremalSeries::log_abs_closed(Complex s) const {
    if (!closed_) throw DomainError("closed form needs finitely many primes with |a(p)| != 1");
    double v = log_abs_zeta_delta_closed(s, delta_);
    for (const auto& [p, a] : exceptional_) {
        const double eps = epsilon_sign(delta_ * std::log(static_cast<double>(p)));
        const Complex w = eps * std::exp(-s * std::log(static_cast<double>(p)));
        v += std::log(std::abs(1.0 - w)) - std::log(std::abs(1.0 - a * w));
    }
    return v;
}

std::pair<double, double> theorem13_constants(std::int64_t D, double delta) {
    if (D < 1) throw DomainError("modulus must be >= 1");
    double direct_factor = 1.0;
    for (const auto& pk : factorize(D)) direct_factor *= 1.0 + 1.0 / static_cast<double>(pk.p);
    const double inverse_factor = static_cast<double>(D) / static_cast<double>(euler_phi(D));
    const double eg = std::exp(-constants::gamma);
    return {constants::pi * constants::pi * eg / 24.0 * direct_factor * delta, eg / 4.0 * inverse_factor * delta};
}

std::pair<double, double> sup_norm_constants(double beta, double lambda0, double lambda1) {
    return {std::exp(lambda0 - beta) / 4.0, 4.0 * std::exp(beta - lambda1)};
}

}  // namespace zetaline
