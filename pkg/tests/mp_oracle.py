"""High-precision direct double sums, independent of the library code paths."""

import mpmath as mp


def thermal_weights(n, length):
    n = mp.mpf(n)
    return [(n / (n + 1)) ** m / (n + 1) for m in range(length)]


def pats_weights(n, M, length):
    n = mp.mpf(n)
    out = []
    for l in range(length):
        if l < M:
            out.append(mp.mpf(0))
        else:
            out.append(mp.binomial(l, M) * n ** (l - M) / (n + 1) ** (l + 1))
    return out


def distance_degrees(xi, eta, dps=40):
    """(P_HS, P_B, P_RE) of the product of two diagonal modes."""
    with mp.workdps(dps):
        a, b = len(xi), len(eta)
        purity = sum(x * x for x in xi) * sum(e * e for e in eta)
        hs2 = fid = cross = 0
        for N in range(a + b - 1):
            mus = [xi[n] * eta[N - n] for n in range(max(0, N - b + 1), min(N, a - 1) + 1)]
            p = sum(mus)
            hs2 += p * p / (N + 1)
            fid += sum(mp.sqrt(m) for m in mus) ** 2 / (N + 1)
            if p > 0:
                cross += p * mp.log(p / (N + 1))
        S = -sum(x * mp.log(x) for x in xi if x > 0) - sum(e * mp.log(e) for e in eta if e > 0)
        s_min = -S - cross
        return float(purity - hs2), float(1 - mp.sqrt(fid)), float(s_min / (1 + s_min))
