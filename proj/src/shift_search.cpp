#include "zetaline/shift_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetaline/extremal.hpp"
#include "zetaline/norms.hpp"
#include "zetaline/parallel.hpp"

namespace zetaline {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

double canonical_angle(double a) {
    long double x = std::fmod(static_cast<long double>(a), kTwoPiL);
    if (x < 0) x += kTwoPiL;
    if (x >= kTwoPiL) x -= kTwoPiL;
    return static_cast<double>(x);
}

bool better(const ShiftCandidate& a, const ShiftCandidate& b) {
    if (std::abs(a.discrepancy - b.discrepancy) > 1e-12) return a.discrepancy < b.discrepancy;
    return a.T < b.T;
}

struct GridHit {
    double value;
    std::int64_t k;
};

// Coarse scan of grid points k in [k0, k1] (T_k = T_lo + k step). Keeps the `keep`
// best local minima by grid discrepancy.
std::vector<GridHit> scan_chunk(const PhaseTargets& tg, double T_lo, double step, std::int64_t k0, std::int64_t k1,
                                std::int64_t kmax, std::size_t keep) {
    const std::size_t np = tg.primes.size();
    std::vector<long double> logs(np);
    for (std::size_t i = 0; i < np; ++i) logs[i] = std::log(static_cast<long double>(tg.primes[i]));
    std::vector<double> phase(np), inc(np);
    auto resync = [&](std::int64_t k) {
        const long double T = static_cast<long double>(T_lo) + static_cast<long double>(step) * k;
        for (std::size_t i = 0; i < np; ++i) {
            long double x = std::fmod(T * logs[i] - tg.angles[i], kTwoPiL);
            if (x < 0) x += kTwoPiL;
            phase[i] = static_cast<double>(x);
        }
    };
    for (std::size_t i = 0; i < np; ++i)
        inc[i] = static_cast<double>(std::fmod(static_cast<long double>(step) * logs[i], kTwoPiL));
    const double two_pi = constants::two_pi;
    const double pi = constants::pi;

    std::vector<GridHit> best;  // sorted ascending by (value, k)
    double threshold = std::numeric_limits<double>::infinity();
    auto offer = [&](double v, std::int64_t k) {
        if (v >= threshold && best.size() >= keep) return;
        GridHit h{v, k};
        auto pos = std::upper_bound(best.begin(), best.end(), h, [](const GridHit& x, const GridHit& y) {
            return x.value < y.value || (x.value == y.value && x.k < y.k);
        });
        best.insert(pos, h);
        if (best.size() > keep) best.pop_back();
        if (best.size() >= keep) threshold = best.back().value;
    };

    const std::int64_t start = std::max<std::int64_t>(k0 - 1, 0);
    const std::int64_t stop = std::min<std::int64_t>(k1 + 1, kmax);
    resync(start);
    const double inf = std::numeric_limits<double>::infinity();
    double prev2 = inf, prev1 = inf;  // D at k-2, k-1
    for (std::int64_t k = start; k <= stop; ++k) {
        if (((k - start) & 0xFFFF) == 0 && k != start) resync(k);
        double d = 0.0;
        bool early = false;
        for (std::size_t i = 0; i < np; ++i) {
            double x = phase[i];
            if (x > pi) x = two_pi - x;
            if (x > d) {
                d = x;
                if (d >= threshold && best.size() >= keep) {
                    early = true;
                    break;
                }
            }
        }
        if (early) d = inf;
        // prev1 sits at k-1: a local minimum if no neighbour is strictly lower.
        const std::int64_t km1 = k - 1;
        if (km1 >= k0 && km1 <= k1 && prev1 < inf && prev1 <= prev2 && prev1 <= d) offer(prev1, km1);
        prev2 = prev1;
        prev1 = d;
        for (std::size_t i = 0; i < np; ++i) {
            double x = phase[i] + inc[i];
            if (x >= two_pi) x -= two_pi;
            phase[i] = x;
        }
    }
    // Right boundary of the whole grid.
    if (stop == kmax && kmax >= k0 && kmax <= k1 && prev1 < inf && prev1 <= prev2) offer(prev1, kmax);
    return best;
}

ShiftCandidate refine(const PhaseTargets& tg, double T0, double lo, double hi) {
    ShiftCandidate c{T0, discrepancy(tg, T0), std::nullopt, true, 1};
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = discrepancy(tg, x1), f2 = discrepancy(tg, x2);
    c.evaluations += 2;
    while (b - a > 1e-13 * (1.0 + std::abs(b))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = discrepancy(tg, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = discrepancy(tg, x2);
        }
        ++c.evaluations;
    }
    const double x = f1 < f2 ? x1 : x2;
    const double fx = std::min(f1, f2);
    if (fx < c.discrepancy) {
        c.T = x;
        c.discrepancy = fx;
    }
    return c;
}

}  // namespace

PhaseTargets make_phase_targets(std::vector<std::int64_t> primes, std::vector<double> angles, double tolerance) {
    if (primes.size() != angles.size()) throw DomainError("one target angle per prime is required");
    std::vector<std::size_t> order(primes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return primes[a] < primes[b]; });
    PhaseTargets t;
    t.tolerance = tolerance;
    for (std::size_t i : order) {
        if (primes[i] < 2) throw DomainError("targets must be attached to primes");
        t.primes.push_back(primes[i]);
        t.angles.push_back(canonical_angle(angles[i]));
    }
    return t;
}

PhaseTargets phase_targets(double delta, std::int64_t P, TargetSide which) {
    if (delta < 0.0) throw DomainError("delta must be >= 0");
    auto table = shared_primes(std::max<std::int64_t>(P, 2));
    PhaseTargets t;
    const std::size_t n = table->count_upto(P);
    for (std::size_t i = 0; i < n; ++i) {
        const int e = epsilon_sign(delta * table->log(i));
        const bool zero_target = (which == TargetSide::ForInverse) ? (e == 1) : (e == -1);
        t.primes.push_back(table->prime(i));
        t.angles.push_back(zero_target ? 0.0 : constants::pi);
    }
    return t;
}

double discrepancy(const PhaseTargets& targets, double T) {
    long double worst = 0.0L;
    for (std::size_t i = 0; i < targets.primes.size(); ++i) {
        const long double L = std::log(static_cast<long double>(targets.primes[i]));
        long double x = std::fmod(static_cast<long double>(T) * L - targets.angles[i], kTwoPiL);
        if (x < 0) x += kTwoPiL;
        if (x > kPiL) x = kTwoPiL - x;
        worst = std::max(worst, x);
    }
    return static_cast<double>(worst);
}

std::vector<ShiftCandidate> search_shifts(const PhaseTargets& targets, double T_lo, double T_hi,
                                          const SearchOptions& opts, std::vector<TracePoint>* trace) {
    if (targets.primes.empty() || targets.primes.size() > 12)
        throw DomainError("shift search supports 1 to 12 primes");
    if (!(T_lo >= 0.0) || !(T_hi > T_lo) || T_hi > 1e9) throw DomainError("shift search requires 0 <= T_lo < T_hi <= 1e9");
    const double lmax = std::log(static_cast<double>(targets.primes.back()));
    const double step = constants::pi / (4.0 * lmax);
    std::int64_t kmax = static_cast<std::int64_t>(std::floor((T_hi - T_lo) / step));
    bool complete = true;
    if (kmax + 1 > opts.budget) {
        kmax = opts.budget - 1;
        complete = false;
    }
    const std::size_t keep_grid = static_cast<std::size_t>(std::max(1, opts.keep)) * 8;
    const int threads = std::max(1, opts.threads);
    const std::int64_t nchunks = std::min<std::int64_t>(threads, kmax + 1);
    auto parts = parallel_map<std::vector<GridHit>>(static_cast<std::size_t>(nchunks), threads, [&](std::size_t c) {
        const std::int64_t k0 = (kmax + 1) * static_cast<std::int64_t>(c) / nchunks;
        const std::int64_t k1 = (kmax + 1) * static_cast<std::int64_t>(c + 1) / nchunks - 1;
        return scan_chunk(targets, T_lo, step, k0, k1, kmax, keep_grid);
    });
    std::vector<GridHit> hits;
    for (auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
    std::sort(hits.begin(), hits.end(),
              [](const GridHit& x, const GridHit& y) { return x.value < y.value || (x.value == y.value && x.k < y.k); });
    if (hits.size() > keep_grid) hits.resize(keep_grid);

    std::vector<ShiftCandidate> out;
    const double T_end = T_lo + step * static_cast<double>(kmax);
    for (const auto& h : hits) {
        const double Tk = T_lo + step * static_cast<double>(h.k);
        auto c = refine(targets, Tk, std::max(T_lo, Tk - step), std::min(T_end, Tk + step));
        c.converged = complete;
        if (trace) trace->push_back({c.T, c.discrepancy});
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), better);
    if (out.size() > static_cast<std::size_t>(std::max(1, opts.keep))) out.resize(static_cast<std::size_t>(opts.keep));
    long evals = kmax + 1;
    for (auto& c : out) c.evaluations += evals;
    return out;
}

ShiftCandidate search_shift(const PhaseTargets& targets, double T_max, long budget) {
    SearchOptions opts;
    opts.budget = budget;
    opts.keep = 1;
    auto r = search_shifts(targets, 0.0, T_max, opts);
    if (r.empty()) throw ConvergenceError("shift search produced no candidate");
    return r.front();
}

int search_prime_count(double T_hi) {
    // Largest k whose expected best discrepancy pi (T log p_k / 2pi)^{-1/k} is <= 0.35.
    auto table = shared_primes(1000);
    int best = 2;
    for (int k = 2; k <= 12; ++k) {
        const double lp = table->log(static_cast<std::size_t>(k - 1));
        const double expected = constants::pi * std::pow(T_hi * lp / constants::two_pi, -1.0 / k);
        if (expected <= 0.35) best = k;
    }
    return best;
}

EmpiricalResult empirical_infimum(double delta, TargetSide which, double T_max, const EmpiricalOptions& opts) {
    if (delta < 0.05 || delta > 1.0) throw DomainError("empirical_infimum requires 0.05 <= delta <= 1");
    if (!(T_max > opts.T_min + delta)) throw DomainError("T_max too small");
    std::vector<std::pair<double, double>> segments;
    double lo = opts.T_min;
    double hi = std::min(T_max, 1e4);
    segments.emplace_back(lo, hi);
    while (hi < T_max) {
        lo = hi;
        hi = std::min(T_max, hi * 10.0);
        segments.emplace_back(lo, hi);
    }
    const auto pred = theorem3_predictions(delta);
    const double predicted = which == TargetSide::ForDirect ? pred.first : pred.second;
    EmpiricalResult res;
    res.predicted = predicted;
    res.ratio = std::numeric_limits<double>::infinity();
    for (const auto& [a, b] : segments) {
        const int k = search_prime_count(b);
        auto table = shared_primes(1000);
        const auto all = phase_targets(delta, table->prime(static_cast<std::size_t>(k - 1)), which);
        SearchOptions so;
        so.keep = opts.candidates_per_segment;
        so.threads = opts.threads;
        auto cands = search_shifts(all, a + delta, b, so, &res.trace);
        SegmentResult seg;
        seg.T_lo = a;
        seg.T_hi = b;
        seg.prime_count = k;
        seg.ratio = std::numeric_limits<double>::infinity();
        auto measured = parallel_map<ShiftCandidate>(cands.size(), opts.threads, [&](std::size_t i) {
            ShiftCandidate c = cands[i];
            NormRequest req;
            req.target = which == TargetSide::ForDirect ? Target::zeta() : Target::inverse_zeta();
            req.T = c.T - 0.5 * delta;
            req.delta = delta;
            req.sigma = 1.0;
            req.mode = NormMode::L1;
            req.tol = 1e-10;
            c.achieved_norm = interval_norm(req);
            return c;
        });
        for (const auto& c : measured) {
            const double ratio = c.achieved_norm->value / predicted;
            if (ratio < seg.ratio || (ratio == seg.ratio && c.T < seg.best.T)) {
                seg.ratio = ratio;
                seg.best = c;
            }
        }
        if (seg.ratio < res.ratio) {
            res.ratio = seg.ratio;
            res.best = seg.best;
        }
        res.segments.push_back(seg);
    }
    return res;
}

}  // namespace zetaline
