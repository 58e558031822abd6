#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "zetaline/numeric.hpp"

namespace zetaline {

struct QuadOptions {
    double abs_tol = 1e-10;
    int max_subdivisions = 20000;
};

template <class T>
struct Integral {
    T value{};
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

namespace detail {

// 15-point Kronrod nodes on [0,1] (symmetric) with embedded 7-point Gauss rule.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& z) { return std::abs(z); }

template <class T>
struct Panel {
    double a, b;
    T value;
    double error;
    double abs_mass;  // integral of |f| estimate, for the roundoff floor
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gauss_kronrod15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T fc = f(c);
    T kron = fc * kWgk[7];
    T gauss = fc * kWg[3];
    double mass = magnitude(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const T f1 = f(c - dx);
        const T f2 = f(c + dx);
        kron += (f1 + f2) * kWgk[j];
        mass += (magnitude(f1) + magnitude(f2)) * kWgk[j];
        if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
    }
    kron *= h;
    gauss *= h;
    return {a, b, kron, magnitude(kron - gauss), std::abs(h) * mass};
}

}  // namespace detail

// Global adaptive Gauss-Kronrod (7/15) quadrature on [a, b]. Interior breakpoints
// seed the initial panels; the panel with the largest error is bisected until the
// summed error estimate drops below opts.abs_tol. Deterministic.
template <class T, class F>
Integral<T> integrate_adaptive(const F& f, double a, double b, const std::vector<double>& breakpoints,
                               const QuadOptions& opts) {
    if (!(a < b)) throw DomainError("integration requires a < b");
    std::vector<double> cuts{a};
    std::vector<double> bp = breakpoints;
    std::sort(bp.begin(), bp.end());
    for (double x : bp)
        if (x > cuts.back() && x < b) cuts.push_back(x);
    cuts.push_back(b);

    std::priority_queue<detail::Panel<T>> heap;
    Integral<T> out;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto pnl = detail::gauss_kronrod15<T>(f, cuts[i], cuts[i + 1]);
        out.evaluations += 15;
        total_err += pnl.error;
        heap.push(pnl);
    }
    int splits = 0;
    while (total_err > opts.abs_tol && splits < opts.max_subdivisions && !heap.empty()) {
        auto worst = heap.top();
        // Stop once the worst panel is at the rounding floor; further bisection cannot help.
        if (worst.error <= 1e-14 * worst.abs_mass) break;
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted in floating point
        heap.pop();
        auto left = detail::gauss_kronrod15<T>(f, worst.a, mid);
        auto right = detail::gauss_kronrod15<T>(f, mid, worst.b);
        out.evaluations += 30;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }
    // Re-sum in a fixed left-to-right order for reproducibility.
    std::vector<detail::Panel<T>> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    T sum{};
    double err = 0.0;
    for (const auto& pnl : panels) {
        sum += pnl.value;
        err += pnl.error;
    }
    out.value = sum;
    out.error_estimate = err;
    out.converged = err <= opts.abs_tol;
    return out;
}

// Real-valued integral with optional breakpoints.
NormResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     const std::vector<double>& breakpoints = {}, int max_subdivisions = 20000);

// Complex-valued integral with optional breakpoints.
Integral<Complex> integrate_complex(const std::function<Complex(double)>& f, double a, double b, double tol,
                                    const std::vector<double>& breakpoints = {});

// Integral over [a, inf) through the map t = a + u/(1-u).
NormResult integrate_to_infinity(const std::function<double(double)>& f, double a, double tol);

}  // namespace zetaline
