#include "zetaline/quadrature.hpp"

namespace zetaline {

NormResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     const std::vector<double>& breakpoints, int max_subdivisions) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    QuadOptions opts{tol, max_subdivisions};
    auto r = integrate_adaptive<double>(f, a, b, breakpoints, opts);
    return {r.value, r.error_estimate, r.evaluations, r.converged};
}

Integral<Complex> integrate_complex(const std::function<Complex(double)>& f, double a, double b, double tol,
                                    const std::vector<double>& breakpoints) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    return integrate_adaptive<Complex>(f, a, b, breakpoints, QuadOptions{tol, 20000});
}

NormResult integrate_to_infinity(const std::function<double(double)>& f, double a, double tol) {
    auto g = [&](double u) {
        const double w = 1.0 - u;
        if (w <= 0.0) return 0.0;
        return f(a + u / w) / (w * w);
    };
    return integrate(g, 0.0, 1.0, tol);
}

}  // namespace zetaline
