#include "zetaline/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace zetaline {

PrimeTable::PrimeTable(std::int64_t limit) : limit_(limit) {
    if (limit < 2 || limit > 100'000'000) {
        throw DomainError("prime limit out of range [2, 1e8]: " + std::to_string(limit));
    }
    // Odd-only sieve: index i represents 2i+1.
    const std::int64_t half = (limit - 1) / 2 + 1;
    std::vector<bool> composite(static_cast<std::size_t>(half), false);
    for (std::int64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (composite[i]) continue;
        const std::int64_t p = 2 * i + 1;
        for (std::int64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
    }
    primes_.reserve(static_cast<std::size_t>(1.3 * limit / std::log(static_cast<double>(limit))) + 8);
    primes_.push_back(2);
    for (std::int64_t i = 1; i < half; ++i) {
        if (!composite[i] && 2 * i + 1 <= limit) primes_.push_back(2 * i + 1);
    }
    logs_.resize(primes_.size());
    for (std::size_t i = 0; i < primes_.size(); ++i) logs_[i] = std::log(static_cast<double>(primes_[i]));
}

std::size_t PrimeTable::count_upto(std::int64_t x) const {
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

bool PrimeTable::is_prime(std::int64_t n) const {
    if (n > limit_) throw DomainError("is_prime beyond table limit");
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeTable sieve_primes(std::int64_t limit) { return PrimeTable(limit); }

std::shared_ptr<const PrimeTable> shared_primes(std::int64_t limit) {
    static std::mutex mu;
    static std::shared_ptr<const PrimeTable> cached;
    std::lock_guard<std::mutex> lock(mu);
    if (!cached || cached->limit() < limit) {
        cached = std::make_shared<const PrimeTable>(std::max<std::int64_t>(limit, 1000));
    }
    return cached;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::vector<PrimePower> factorize(std::int64_t n) {
    if (n < 1) throw DomainError("factorize requires n >= 1");
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.push_back({p, k});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

double von_mangoldt(std::int64_t n) {
    if (n < 1) throw DomainError("von_mangoldt requires n >= 1");
    if (n == 1) return 0.0;
    auto f = factorize(n);
    return f.size() == 1 ? std::log(static_cast<double>(f[0].p)) : 0.0;
}

int mobius(std::int64_t n) {
    if (n < 1) throw DomainError("mobius requires n >= 1");
    auto f = factorize(n);
    for (const auto& pk : f)
        if (pk.k > 1) return 0;
    return (f.size() % 2 == 0) ? 1 : -1;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw DomainError("euler_phi requires n >= 1");
    std::int64_t r = n;
    for (const auto& pk : factorize(n)) r = r / pk.p * (pk.p - 1);
    return r;
}

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::vector<Complex> values, bool principal)
    : modulus_(modulus), values_(std::move(values)), principal_(principal) {
    if (modulus_ < 1 || static_cast<std::int64_t>(values_.size()) != modulus_)
        throw DomainError("character value table must have length equal to the modulus");
}

bool DirichletCharacter::is_real() const {
    return std::all_of(values_.begin(), values_.end(), [](const Complex& z) { return z.imag() == 0.0; });
}

Complex DirichletCharacter::operator()(std::int64_t n) const {
    std::int64_t r = n % modulus_;
    if (r < 0) r += modulus_;
    return values_[static_cast<std::size_t>(r)];
}

namespace {

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::int64_t primitive_root_prime(std::int64_t p) {
    if (p == 2) return 1;
    auto f = factorize(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& q : f) {
            if (powmod(g, (p - 1) / q.p, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw DomainError("no primitive root");
}

// exp(2 pi i m / n) with exact values at multiples of a quarter turn.
Complex root_of_unity(std::int64_t m, std::int64_t n) {
    m %= n;
    if (m < 0) m += n;
    if (m == 0) return {1.0, 0.0};
    if (4 * m == n) return {0.0, 1.0};
    if (2 * m == n) return {-1.0, 0.0};
    if (4 * m == 3 * n) return {0.0, -1.0};
    const double a = constants::two_pi * static_cast<double>(m) / static_cast<double>(n);
    return {std::cos(a), std::sin(a)};
}

// One cyclic factor of (Z/qZ)^*: discrete log of each residue mod q (-1 for non-units).
struct CyclicComponent {
    std::int64_t q;
    std::int64_t order;
    std::vector<std::int64_t> dlog;
};

std::vector<CyclicComponent> unit_group_components(std::int64_t D) {
    std::vector<CyclicComponent> comps;
    for (const auto& pk : factorize(D)) {
        std::int64_t q = 1;
        for (int i = 0; i < pk.k; ++i) q *= pk.p;
        if (pk.p == 2) {
            if (pk.k == 1) continue;  // trivial group
            if (pk.k == 2) {
                CyclicComponent c{q, 2, std::vector<std::int64_t>(q, -1)};
                c.dlog[1] = 0;
                c.dlog[3] = 1;
                comps.push_back(std::move(c));
                continue;
            }
            // (Z/2^k)^* = <-1> x <5>
            const std::int64_t ord5 = q / 4;
            CyclicComponent sign{q, 2, std::vector<std::int64_t>(q, -1)};
            CyclicComponent five{q, ord5, std::vector<std::int64_t>(q, -1)};
            std::int64_t x = 1;
            for (std::int64_t b = 0; b < ord5; ++b) {
                sign.dlog[x] = 0;
                five.dlog[x] = b;
                sign.dlog[q - x] = 1;
                five.dlog[q - x] = b;
                x = x * 5 % q;
            }
            comps.push_back(std::move(sign));
            comps.push_back(std::move(five));
            continue;
        }
        std::int64_t g = primitive_root_prime(pk.p);
        if (pk.k > 1 && powmod(g, pk.p - 1, pk.p * pk.p) == 1) g += pk.p;
        const std::int64_t order = q / pk.p * (pk.p - 1);
        CyclicComponent c{q, order, std::vector<std::int64_t>(q, -1)};
        std::int64_t x = 1;
        for (std::int64_t e = 0; e < order; ++e) {
            c.dlog[x] = e;
            x = x * g % q;
        }
        comps.push_back(std::move(c));
    }
    return comps;
}

}  // namespace

std::vector<DirichletCharacter> characters_mod(std::int64_t D) {
    if (D < 1 || D > 10'000) throw DomainError("characters_mod requires 1 <= D <= 1e4");
    const auto comps = unit_group_components(D);
    std::vector<DirichletCharacter> out;
    std::vector<std::int64_t> idx(comps.size(), 0);
    while (true) {
        std::vector<Complex> vals(static_cast<std::size_t>(D), Complex(0.0, 0.0));
        for (std::int64_t n = 0; n < D; ++n) {
            if (gcd(n, D) != 1) continue;
            Complex v(1.0, 0.0);
            for (std::size_t j = 0; j < comps.size(); ++j) {
                const auto& c = comps[j];
                const std::int64_t e = c.dlog[n % c.q];
                v *= root_of_unity(idx[j] * e, c.order);
            }
            if (D == 1) v = 1.0;
            vals[n] = v;
        }
        if (D == 1) vals[0] = 1.0;
        const bool principal = std::all_of(idx.begin(), idx.end(), [](std::int64_t k) { return k == 0; });
        out.emplace_back(D, std::move(vals), principal);
        std::size_t j = 0;
        while (j < comps.size()) {
            if (++idx[j] < comps[j].order) break;
            idx[j] = 0;
            ++j;
        }
        if (j == comps.size()) break;
    }
    return out;
}

DirichletCharacter principal_character(std::int64_t D) {
    if (D < 1) throw DomainError("modulus must be >= 1");
    std::vector<Complex> vals(static_cast<std::size_t>(D));
    for (std::int64_t n = 0; n < D; ++n) vals[n] = (gcd(n, D) == 1) ? 1.0 : 0.0;
    if (D == 1) vals[0] = 1.0;
    return DirichletCharacter(D, std::move(vals), true);
}

}  // namespace zetaline
