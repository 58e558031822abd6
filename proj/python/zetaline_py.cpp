#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetaline/error.hpp"
#include "zetaline/extremal.hpp"
#include "zetaline/lfunc.hpp"
#include "zetaline/modular.hpp"
#include "zetaline/norms.hpp"
#include "zetaline/numeric.hpp"
#include "zetaline/report.hpp"
#include "zetaline/shift_search.hpp"
#include "zetaline/verify.hpp"
#include "zetaline/zeta.hpp"

namespace py = pybind11;
using namespace zetaline;

namespace {

py::dict norm_dict(const NormResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["error_estimate"] = r.error_estimate;
    d["evaluations"] = r.evaluations;
    d["converged"] = r.converged;
    return d;
}

Target make_target(const std::string& name, double delta, std::int64_t modulus) {
    if (name == "zeta") return Target::zeta();
    if (name == "inverse_zeta") return Target::inverse_zeta();
    if (name == "zeta_delta") return Target::zeta_delta(delta);
    if (name == "zeta_2s_over_zeta_delta") return Target::zeta_two_s_over_zeta_delta(delta);
    if (name == "dirichlet") {
        for (const auto& chi : characters_mod(modulus))
            if (!chi.is_principal() && chi.is_real()) return Target::dirichlet(chi);
        throw DomainError("no real non-principal character for this modulus");
    }
    throw DomainError("unknown target: " + name);
}

DirichletCharacter real_character(std::int64_t modulus) {
    for (const auto& chi : characters_mod(modulus))
        if (!chi.is_principal() && chi.is_real()) return chi;
    throw DomainError("no real non-principal character for this modulus");
}

RunConfig run_config(const py::dict& kw) {
    RunConfig c;
    for (auto item : kw) {
        const auto key = py::cast<std::string>(item.first);
        const py::handle v = item.second;
        if (key == "deltas") c.deltas = py::cast<std::vector<double>>(v);
        else if (key == "sigma") c.sigma = py::cast<double>(v);
        else if (key == "t_max") c.t_max = py::cast<std::vector<double>>(v);
        else if (key == "t_samples") c.t_samples = py::cast<int>(v);
        else if (key == "prime_limit") c.prime_limit = py::cast<std::int64_t>(v);
        else if (key == "tol") c.tol = py::cast<double>(v);
        else if (key == "seed") c.seed = py::cast<std::uint64_t>(v);
        else if (key == "threads") c.threads = py::cast<int>(v);
        else if (key == "mode") c.mode = py::cast<std::string>(v);
        else if (key == "primes") c.primes = py::cast<std::vector<std::int64_t>>(v);
        else if (key == "targets") c.targets = py::cast<std::vector<double>>(v);
        else if (key == "modulus") c.modulus = py::cast<std::int64_t>(v);
        else throw UsageError("unknown option: " + key);
    }
    return c;
}

std::string render(const Report& r, const std::string& format) {
    if (format == "json") return to_json(r);
    if (format == "csv") return to_csv(r);
    throw UsageError("format must be csv or json");
}

}  // namespace

PYBIND11_MODULE(_zetaline, m) {
    m.doc() = "Short-interval norms of zeta and L-functions on the line Re(s) = 1";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PoleError>(m, "PoleError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<PathError>(m, "PathError", base.ptr());
    py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
    py::register_exception<ZeroOnCircleError>(m, "ZeroOnCircleError", base.ptr());
    py::register_exception<AnomalyError>(m, "AnomalyError", base.ptr());
    py::register_exception<UsageError>(m, "UsageError", base.ptr());

    m.attr("EULER_GAMMA") = constants::gamma;

    // Pointwise values.
    m.def("zeta", [](Complex s) { return zeta(s); }, py::arg("s"));
    m.def("inverse_zeta", &inverse_zeta, py::arg("s"));
    m.def("dirichlet_l", [](Complex s, std::int64_t modulus) { return dirichlet_l(s, real_character(modulus)); },
          py::arg("s"), py::arg("modulus") = 4, "L(s, chi) for the real non-principal character chi mod modulus");
    m.def("zeta_delta", &zeta_delta_closed, py::arg("s"), py::arg("delta"));
    m.def("log_abs_zeta_delta", &log_abs_zeta_delta_closed, py::arg("s"), py::arg("delta"));
    m.def("zeta_delta_product", [](Complex s, double delta, std::int64_t cutoff) {
        const auto v = zeta_delta_product(s, ExtremalSeries(delta, cutoff));
        return py::make_tuple(v.value, v.tail_bound);
    }, py::arg("s"), py::arg("delta"), py::arg("cutoff"));

    // Special functions.
    m.def("theta", [](Complex z) { return theta_fn(z).value; }, py::arg("z"));
    m.def("psi", [](double sigma) { return psi_fn(sigma).value.real(); }, py::arg("sigma"));
    m.def("sin_kernel_integral", [](double tol) { return norm_dict(sin_minus_kernel_integral(tol)); },
          py::arg("tol") = 1e-10);
    m.def("lemma4_constants", &lemma4_constants, py::arg("delta"));

    // Norms.
    m.def("interval_norm", [](const std::string& target, double T, double delta, double sigma, const std::string& mode,
                              double p, bool normalized, double tol, std::int64_t modulus) {
        NormRequest req;
        req.target = make_target(target, delta, modulus);
        req.T = T;
        req.delta = delta;
        req.sigma = sigma;
        req.mode = parse_norm_mode(mode);
        req.p = p;
        req.normalized = normalized;
        req.tol = tol;
        return norm_dict(interval_norm(req));
    }, py::arg("target"), py::arg("T"), py::arg("delta"), py::arg("sigma") = 1.0, py::arg("mode") = "l1",
       py::arg("p") = 1.0, py::arg("normalized") = false, py::arg("tol") = 1e-10, py::arg("modulus") = 4);
    m.def("theorem3_predictions", &theorem3_predictions, py::arg("delta"),
          "(inf ||zeta||_1, inf ||1/zeta||_1) predictions over an interval of length delta");
    m.def("sup_norm_predictions", &sup_norm_predictions, py::arg("delta"));
    m.def("example1_value", [] (double delta) { return norm_dict(example1_value(delta)); }, py::arg("delta"));
    m.def("example2_ratio", [] { return norm_dict(example2_ratio()); });

    // Shift search.
    m.def("search_shift", [](std::vector<std::int64_t> primes, std::vector<double> angles, double T_max, long budget) {
        const auto c = search_shift(make_phase_targets(std::move(primes), std::move(angles)), T_max, budget);
        return py::make_tuple(c.T, c.discrepancy);
    }, py::arg("primes"), py::arg("angles"), py::arg("T_max"), py::arg("budget") = 100'000'000L);
    m.def("discrepancy", [](std::vector<std::int64_t> primes, std::vector<double> angles, double T) {
        return discrepancy(make_phase_targets(std::move(primes), std::move(angles)), T);
    }, py::arg("primes"), py::arg("angles"), py::arg("T"));

    // General multiplicative series.
    py::class_<MultiplicativeSeries>(m, "MultiplicativeSeries")
        .def_static("ones", &MultiplicativeSeries::ones)
        .def_static("character_magnitude", &MultiplicativeSeries::character_magnitude, py::arg("modulus"))
        .def_static("prime_class_indicator", &MultiplicativeSeries::prime_class_indicator, py::arg("modulus"),
                    py::arg("residue"))
        .def_static("single_prime", &MultiplicativeSeries::single_prime, py::arg("p"), py::arg("a"))
        .def_static("from_csv", &MultiplicativeSeries::from_csv, py::arg("path"))
        .def("a_p", &MultiplicativeSeries::a_p, py::arg("p"));
    m.def("lambda_sums", [](const MultiplicativeSeries& s, std::int64_t P) {
        const auto l = lambda_sums(s, P);
        py::dict d;
        d["lambda0"] = l.lambda0 ? py::cast(*l.lambda0) : py::none();
        d["lambda1"] = l.lambda1;
        d["tail_estimate"] = l.tail_estimate;
        d["lambda0_error"] = l.lambda0_error;
        return d;
    }, py::arg("series"), py::arg("P"));
    m.def("alpha_beta_fit", [](const MultiplicativeSeries& s, std::int64_t N, const std::string& convention,
                               std::optional<double> fixed_alpha) {
        const auto conv = convention == "prime_sum"          ? GrowthConvention::PrimeSum
                          : convention == "lambda_weighted" ? GrowthConvention::LambdaWeighted
                                                            : throw DomainError("unknown convention: " + convention);
        const auto f = alpha_beta_fit(s, N, conv, fixed_alpha);
        return py::make_tuple(f.alpha, f.beta);
    }, py::arg("series"), py::arg("N"), py::arg("convention") = "prime_sum", py::arg("fixed_alpha") = py::none());
    m.def("beta_from_residue", &beta_from_residue, py::arg("r"));
    m.def("predicted_infima", [](double alpha, double beta, double l0, double l1, double delta) {
        const auto p = predicted_infima(alpha, beta, l0, l1, delta);
        return py::make_tuple(p.direct, p.inverse);
    }, py::arg("alpha"), py::arg("beta"), py::arg("lambda0"), py::arg("lambda1"), py::arg("delta"));
    m.def("theorem13_constants", &theorem13_constants, py::arg("modulus"), py::arg("delta"));

    // Modular coefficients.
    m.def("tau", [](std::int64_t n) { return py::int_(py::str(TauTable(std::max<std::int64_t>(n, 1)).str(n))); },
          py::arg("n"));
    m.def("tau_table", [](std::int64_t N) {
        const TauTable t(N);
        py::list out;
        for (std::int64_t n = 1; n <= N; ++n) out.append(py::int_(py::str(t.str(n))));
        return out;
    }, py::arg("N"));
    m.def("catalan", &catalan, py::arg("k"));
    m.def("sato_tate_alpha", [] { return sato_tate_alpha().value; });
    m.def("sato_tate_inverse_cdf", &sato_tate_inverse_cdf, py::arg("u"));
    m.def("sato_tate_angles", [](std::uint64_t seed, std::int64_t P) {
        const auto s = sato_tate_sample(seed, P);
        return py::make_tuple(s.primes, s.angles);
    }, py::arg("seed"), py::arg("P"));

    // Suites and reports.
    m.def("verify_suites", &verify_suites);
    m.def("run_verify", [](const std::string& suite, const std::string& format, const py::kwargs& kw) {
        const auto r = run_verify(suite, run_config(kw));
        return py::make_tuple(r.passed(), render(r, format));
    }, py::arg("suite"), py::arg("format") = "csv", "returns (passed, report text)");
    m.def("run_scan", [](const std::string& target, const std::string& format, const py::kwargs& kw) {
        return render(run_scan(target, run_config(kw)), format);
    }, py::arg("target"), py::arg("format") = "csv");
    m.def("run_search", [](const std::string& format, const py::kwargs& kw) {
        return render(run_search(run_config(kw)), format);
    }, py::arg("format") = "csv");
}
