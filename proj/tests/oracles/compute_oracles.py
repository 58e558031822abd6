"""Regenerates tests/oracles/oracles.hpp from independent reference computations.

Every value here comes from mpmath, exact integer arithmetic or a brute-force
numpy scan; nothing imports the library under test.

    python3 tests/oracles/compute_oracles.py > tests/oracles/oracles.hpp
"""

import math

import mpmath as mp
import numpy as np

mp.mp.dps = 30
GAMMA = mp.euler


def fmt(x):
    return repr(float(x))


def sieve(n):
    s = np.ones(n + 1, dtype=bool)
    s[:2] = False
    for i in range(2, int(n**0.5) + 1):
        if s[i]:
            s[i * i :: i] = False
    return np.nonzero(s)[0]


# ---------------------------------------------------------------- special functions


def theta(z):
    z = mp.mpc(z)
    f = lambda u: mp.tanh(mp.pi * z * u) / u if u != 0 else mp.pi * z
    return GAMMA + mp.log(4) - mp.quad(f, [0, 1])


def psi(sigma):
    sigma = mp.mpf(sigma)
    tail = mp.nsum(lambda n: mp.e1(sigma * (n - mp.mpf(1) / 2)) - mp.e1(sigma * n), [1, mp.inf])
    return mp.log(sigma) + 2 * tail


def log_abs_zeta_delta(s, delta):
    s = mp.mpc(s)
    return -mp.log(delta) + mp.re(theta((s - 1) / delta)) + mp.log(abs(mp.zeta(s) * (s - 1)))


def inverse_zeta_near_pole(delta):
    f = lambda t: 1 / abs(mp.zeta(mp.mpc(1, t - delta / 2)))
    return mp.quad(f, [0, delta / 2, delta])


def quartic_root_integral():
    r = 1 / mp.sqrt(6)
    f = lambda t: abs(t * t - mp.mpf(1) / 6) ** mp.mpf(0.25) * abs(t) ** mp.mpf(0.5)
    return 4 * mp.quad(f, [-0.5, -r, 0, r, 0.5])


def zeta_l1(T, delta):
    f = lambda t: abs(mp.zeta(mp.mpc(1, t)))
    return mp.quad(f, [T, T + delta / 2, T + delta])


# ---------------------------------------------------------------- tau via eta^24


def tau_table(N):
    """Coefficients of q prod (1 - q^n)^24 up to q^N.

    eta^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2} (Jacobi); raise to the eighth power
    by Kronecker substitution into Python big integers.
    """
    M = N  # need coefficients of prod up to q^{N-1}
    e3 = [0] * M
    k = 0
    while k * (k + 1) // 2 < M:
        e3[k * (k + 1) // 2] += (-1) ** k * (2 * k + 1)
        k += 1
    bits = 160  # |coefficient| of partial products stays far below 2^159

    def pack(c):
        v = 0
        for x in reversed(c):
            v = (v << bits) + x
        return v

    def unpack(v, n):
        out = []
        mask = (1 << bits) - 1
        half = 1 << (bits - 1)
        for _ in range(n):
            d = v & mask
            if d >= half:
                d -= 1 << bits
            out.append(d)
            v = (v - d) >> bits
        return out

    def mul(a, b):
        return unpack(pack(a) * pack(b), M)

    e6 = mul(e3, e3)
    e12 = mul(e6, e6)
    e24 = mul(e12, e12)
    return [0] + e24[: N]  # tau(n) = coefficient of q^{n-1} in prod


# ---------------------------------------------------------------- misc references


def splitmix64(seed, n):
    out = []
    s = seed
    m = (1 << 64) - 1
    for _ in range(n):
        s = (s + 0x9E3779B97F4A7C15) & m
        z = s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & m
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & m
        out.append(z ^ (z >> 31))
    return out


def sato_tate_icdf(u):
    return mp.findroot(lambda t: t - mp.sin(t) * mp.cos(t) - mp.pi * u, (mp.mpf(0), mp.pi), solver="anderson")


def hecke_scan(p, a, n=1_000_000):
    z = np.exp(1j * np.linspace(0, 2 * np.pi, n, endpoint=False)) / p
    m = np.abs(1 - a * z + z * z)
    return float(np.min(-np.log(m))), float(np.max(-np.log(m)))


def growth_fit(N, weighted):
    primes = sieve(N)
    items = []
    for p in primes:
        p = int(p)
        if not weighted:
            items.append((p, 1.0 / p))
            continue
        q, k = p, 1
        while q <= N:
            items.append((q, 1.0 / (k * q)))
            q *= p
            k += 1
    items.sort()
    qs = np.array([q for q, _ in items])
    cs = np.cumsum([c for _, c in items])
    xs, ys = [], []
    for j in range(4, 9):
        Nj = int(math.floor(N ** (j / 8) + 1e-9))
        idx = np.searchsorted(qs, Nj, side="right")
        xs.append(math.log(math.log(Nj)))
        ys.append(cs[idx - 1])
    alpha, beta = np.polyfit(xs, ys, 1)
    return alpha, beta


def dirichlet_chi4(s):
    return mp.dirichlet(s, [0, 1, 0, -1])


def main():
    lines = [
        "#pragma once",
        "",
        "// Generated by compute_oracles.py (mpmath / exact integers / brute-force scans).",
        "",
        "#include <cstdint>",
        "#include <utility>",
        "",
        "namespace oracle {",
        "",
    ]

    def const(name, v):
        lines.append(f"inline constexpr double {name} = {fmt(v)};")

    def cpair_table(name, rows):
        lines.append(f"inline constexpr double {name}[][4] = {{")
        for r in rows:
            lines.append("    {" + ", ".join(fmt(x) for x in r) + "},")
        lines.append("};")

    # zeta and L values: (sigma, t, re, im)
    zrows = []
    for s in [(2, 0), (1, 1), (1, 10), (1, 100), (1, 1000), (1, 12345.5), (1.5, 7), (1.01, 0.3), (0.5, 14)]:
        v = mp.zeta(mp.mpc(*s))
        zrows.append((s[0], s[1], mp.re(v), mp.im(v)))
    cpair_table("kZeta", zrows)
    lrows = []
    for s in [(1, 0), (1, 10), (2, 3), (1, 500)]:
        v = dirichlet_chi4(mp.mpc(*s))
        lrows.append((s[0], s[1], mp.re(v), mp.im(v)))
    cpair_table("kDirichletChi4", lrows)

    trows = []
    for z in [(0.1, 0), (1, 0), (3, 0), (0.3, 0.2), (0, 0.3), (2, 1.7)]:
        v = theta(mp.mpc(*z))
        trows.append((z[0], z[1], mp.re(v), mp.im(v)))
    cpair_table("kTheta", trows)

    lines.append("inline constexpr std::pair<double, double> kPsi[] = {")
    for s in [0.05, 0.5, 1, 2, 5, 20]:
        lines.append(f"    {{{fmt(s)}, {fmt(psi(s))}}},")
    lines.append("};")

    # (sigma, t, delta, log|zeta_delta|)
    lines.append("inline constexpr double kLogAbsZetaDelta[][4] = {")
    for s, d in [((1, 0.03), 0.1), ((1.02, -0.1), 0.3), ((1, 0.15), 0.4), ((1.3, 2.0), 0.2)]:
        lines.append(f"    {{{fmt(s[0])}, {fmt(s[1])}, {fmt(d)}, {fmt(log_abs_zeta_delta(mp.mpc(*s), d))}}},")
    lines.append("};")

    const("kSinKernelClosed", (GAMMA + mp.log(2) - 1) / 4)
    const("kInverseZetaNearPole01", inverse_zeta_near_pole(mp.mpf("0.1")))
    const("kInverseZetaNearPole02", inverse_zeta_near_pole(mp.mpf("0.2")))
    const("kQuarticRootIntegral", quartic_root_integral())
    const("kZetaL1T100", zeta_l1(mp.mpf(100), mp.mpf("0.1")))
    const("kZetaL1T1000", zeta_l1(mp.mpf(1000), mp.mpf("0.25")))
    const("kTheorem3Zeta01", mp.pi**2 * mp.exp(-GAMMA) * mp.mpf("0.01") / 24)
    const("kTheorem3Inverse01", mp.exp(-GAMMA) * mp.mpf("0.01") / 4)
    const("kWeight12Residue", 3 * mp.pi * mp.exp(-GAMMA))
    const("kPiCubedResidue", mp.pi**3 * mp.exp(-GAMMA) / 2)
    const("kSatoTateAlpha", mp.quad(lambda t: abs(2 * mp.cos(t)) * 2 / mp.pi * mp.sin(t) ** 2, [0, mp.pi / 2, mp.pi]))
    lines.append("inline constexpr std::pair<double, double> kSatoTateInverseCdf[] = {")
    for u in [0.1, 0.25, 0.5, 0.9]:
        lines.append(f"    {{{fmt(u)}, {fmt(sato_tate_icdf(mp.mpf(u)))}}},")
    lines.append("};")

    # Local extrema of -log|1 - a z + z^2| on |z| = 1/p: (p, a, min, max)
    lines.append("inline constexpr double kHeckeLocal[][4] = {")
    for p, a in [(2, 1.3), (3, -0.4), (5, 2.0), (2, 0.0)]:
        mn, mx = hecke_scan(p, a)
        lines.append(f"    {{{p}, {fmt(a)}, {fmt(mn)}, {fmt(mx)}}},")
    lines.append("};")

    # lambda sums for a = 1 over p <= 1000, summed straight from the definition.
    ps = [int(p) for p in sieve(1000)]
    l0 = sum(-math.log1p(1 / p) + 1 / p for p in ps)
    l1 = sum(1 / p + math.log1p(-1 / p) for p in ps)
    const("kOnesLambda0P1000", l0)
    const("kOnesLambda1P1000", l1)

    a, b = growth_fit(10**6, True)
    const("kOnesFitWeightedAlpha", a)
    const("kOnesFitWeightedBeta", b)
    a, b = growth_fit(10**6, False)
    const("kOnesFitPrimeAlpha", a)
    const("kOnesFitPrimeBeta", b)

    lines.append("inline constexpr std::uint64_t kSplitMixSeed1[] = {")
    lines.append("    " + ", ".join(f"{x}ULL" for x in splitmix64(1, 4)) + ",")
    lines.append("};")

    tau = tau_table(10000)
    lines.append("inline constexpr std::int64_t kTau[] = {")
    row = []
    for n in range(0, 301):
        row.append(str(tau[n]) + "LL")
        if len(row) == 6:
            lines.append("    " + ", ".join(row) + ",")
            row = []
    if row:
        lines.append("    " + ", ".join(row) + ",")
    lines.append("};")
    for n in [9973, 10000]:
        lines.append(f'inline constexpr const char* kTau{n} = "{tau[n]}";')
    bad = sum(1 for p in sieve(10000) if tau[int(p)] ** 2 > 4 * int(p) ** 11)
    lines.append(f"inline constexpr int kDeligneViolations10000 = {bad};")

    lines += ["", "}  // namespace oracle", ""]
    print("\n".join(lines))


if __name__ == "__main__":
    main()
