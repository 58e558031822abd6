#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zetaline/error.hpp"
#include "zetaline/numeric.hpp"
#include "zetaline/verify.hpp"

namespace {

using zetaline::UsageError;

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

// Locale-independent number parsing; accepts multiples of pi such as "pi", "2pi", "pi/2".
double parse_number(const std::string& raw) {
    const std::string s = trim(raw);
    const auto pi_pos = s.find("pi");
    if (pi_pos != std::string::npos) {
        double mult = 1.0, div = 1.0;
        const std::string pre = s.substr(0, pi_pos);
        const std::string post = s.substr(pi_pos + 2);
        if (pre == "-") mult = -1.0;
        else if (!pre.empty()) mult = parse_number(pre.back() == '*' ? pre.substr(0, pre.size() - 1) : pre);
        if (!post.empty()) {
            if (post[0] != '/') throw UsageError("cannot parse number: " + s);
            div = parse_number(post.substr(1));
        }
        return mult * zetaline::constants::pi / div;
    }
    double v = 0.0;
    const char* b = s.data();
    const char* e = b + s.size();
    if (!s.empty() && *b == '+') ++b;
    auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc() || res.ptr != e) throw UsageError("cannot parse number: " + s);
    return v;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    if (trim(s).empty()) return out;
    for (const auto& tok : split(s, ',')) out.push_back(parse_number(tok));
    return out;
}

// "a,b,c" or "lo:hi:step".
std::vector<double> parse_grid(const std::string& s) {
    if (s.find(':') == std::string::npos) return parse_list(s);
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw UsageError("delta grid must be lo:hi:step");
    const double lo = parse_number(parts[0]), hi = parse_number(parts[1]), step = parse_number(parts[2]);
    if (!(step > 0.0) || hi < lo) throw UsageError("delta grid needs lo <= hi and step > 0");
    std::vector<double> out;
    const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
    for (int i = 0; i <= n; ++i) out.push_back(lo + i * step);
    return out;
}

std::int64_t parse_int(const std::string& s) {
    const double v = parse_number(s);
    if (v != std::floor(v) || std::abs(v) > 9.0e15) throw UsageError("expected an integer: " + s);
    return static_cast<std::int64_t>(v);
}

struct Flags {
    std::string delta, delta_grid, t_max, primes, targets, mode, format = "csv", output, config;
    std::string sigma, t_samples, prime_limit, tol, seed, threads, modulus;
};

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return kv;
}

zetaline::RunConfig build_config(Flags& f, CLI::App& app) {
    if (!f.config.empty()) {
        static const std::map<std::string, std::string Flags::*> fields{
            {"delta", &Flags::delta},         {"delta-grid", &Flags::delta_grid}, {"sigma", &Flags::sigma},
            {"t-max", &Flags::t_max},         {"t-samples", &Flags::t_samples},   {"prime-limit", &Flags::prime_limit},
            {"tol", &Flags::tol},             {"seed", &Flags::seed},             {"threads", &Flags::threads},
            {"output", &Flags::output},       {"format", &Flags::format},         {"primes", &Flags::primes},
            {"targets", &Flags::targets},     {"mode", &Flags::mode},             {"modulus", &Flags::modulus},
        };
        for (const auto& [k, v] : read_config(f.config)) {
            auto it = fields.find(k);
            if (it == fields.end()) throw UsageError("unknown config key: " + k);
            // Command-line flags take precedence over the file.
            if (app.get_option("--" + k)->count() == 0) f.*(it->second) = v;
        }
    }
    zetaline::RunConfig c;
    c.deltas = !f.delta.empty() ? parse_list(f.delta) : parse_grid(f.delta_grid);
    for (double d : c.deltas)
        if (!(d > 0.0 && d <= 2.0)) throw UsageError("delta values must lie in (0, 2]");
    if (!f.sigma.empty()) c.sigma = parse_number(f.sigma);
    if (!(c.sigma >= 1.0)) throw UsageError("sigma must be >= 1");
    c.t_max = parse_list(f.t_max);
    for (double t : c.t_max)
        if (!(t > 10.0 && t <= 1e9)) throw UsageError("t-max values must lie in (10, 1e9]");
    if (!f.t_samples.empty()) c.t_samples = static_cast<int>(parse_int(f.t_samples));
    if (!f.prime_limit.empty()) c.prime_limit = parse_int(f.prime_limit);
    if (c.prime_limit < 0 || c.prime_limit > 100000000) throw UsageError("prime-limit must lie in [0, 1e8]");
    if (!f.tol.empty()) c.tol = parse_number(f.tol);
    if (c.tol < 0.0) throw UsageError("tol must be positive");
    if (!f.seed.empty()) c.seed = static_cast<std::uint64_t>(parse_int(f.seed));
    if (!f.threads.empty()) c.threads = static_cast<int>(parse_int(f.threads));
    if (!f.modulus.empty()) c.modulus = parse_int(f.modulus);
    if (c.modulus < 1 || c.modulus > 10000) throw UsageError("modulus must lie in [1, 10000]");
    c.mode = f.mode;
    for (double p : parse_list(f.primes)) c.primes.push_back(static_cast<std::int64_t>(p));
    c.targets = parse_list(f.targets);
    if (f.format != "csv" && f.format != "json") throw UsageError("format must be csv or json");
    return c;
}

void emit(const zetaline::Report& r, const Flags& f) {
    if (f.output.empty() || f.output == "-") {
        f.format == "json" ? zetaline::write_json(r, std::cout) : zetaline::write_csv(r, std::cout);
        return;
    }
    std::ofstream out(f.output, std::ios::binary);
    if (!out) throw UsageError("cannot write output file: " + f.output);
    f.format == "json" ? zetaline::write_json(r, out) : zetaline::write_csv(r, out);
}

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--delta", f.delta, "interval length(s), comma separated");
    sub->add_option("--delta-grid", f.delta_grid, "list a,b,c or range lo:hi:step");
    sub->add_option("--sigma", f.sigma, "real part of s (default 1)");
    sub->add_option("--t-max", f.t_max, "upper end of the T range; search accepts a list (default per command)");
    sub->add_option("--t-samples", f.t_samples, "number of random T samples (default per suite)");
    sub->add_option("--prime-limit", f.prime_limit, "prime cutoff for sums and products (default per suite)");
    sub->add_option("--tol", f.tol, "absolute quadrature tolerance (default 1e-10)");
    sub->add_option("--seed", f.seed, "seed for T sampling and Sato-Tate angles (default 1)");
    sub->add_option("--threads", f.threads, "worker threads (default: hardware concurrency)");
    sub->add_option("--output", f.output, "output file (default stdout)");
    sub->add_option("--format", f.format, "csv or json (default csv)");
    sub->add_option("--config", f.config, "key=value file; command-line flags take precedence");
    sub->add_option("--primes", f.primes, "search: primes to align, e.g. 2,3,5; theorem13: moduli");
    sub->add_option("--targets", f.targets, "search: target angles, e.g. pi or 0,pi,pi/2");
    sub->add_option("--mode", f.mode, "search: direct|inverse|both; scan: l1|lp|neglp|logl1|sup|min");
    sub->add_option("--modulus", f.modulus, "scan dirichlet: character modulus (default 4)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Short-interval norms of zeta and L-functions on the line Re(s) = 1"};
    app.require_subcommand(1);
    Flags f;
    std::string suite, target;

    std::string suites_help = "suite name:";
    for (const auto& s : zetaline::verify_suites()) suites_help += " " + s;
    auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 iff every check passes");
    verify->add_option("suite", suite, suites_help)->required();
    add_common(verify, f);
    auto* scan = app.add_subcommand("scan", "tabulate norms over the delta grid and T samples");
    scan->add_option("target", target, "zeta | inverse_zeta | dirichlet | zeta_delta")->required();
    add_common(scan, f);
    auto* search = app.add_subcommand("search", "search shifts T aligning small primes with target phases");
    add_common(search, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        CLI::App& active = verify->parsed() ? *verify : scan->parsed() ? *scan : *search;
        const zetaline::RunConfig cfg = build_config(f, active);
        if (verify->parsed()) {
            const auto r = zetaline::run_verify(suite, cfg);
            emit(r, f);
            return r.passed() ? 0 : 1;
        }
        if (scan->parsed()) {
            emit(zetaline::run_scan(target, cfg), f);
            return 0;
        }
        emit(zetaline::run_search(cfg), f);
        return 0;
    } catch (const zetaline::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const zetaline::DomainError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
