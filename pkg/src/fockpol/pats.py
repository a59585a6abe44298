"""Photon-added thermal states (PATS) and their polarization.

Adding ``M`` photons to a thermal mode with mean occupancy ``n`` gives the
diagonal state with weights ``C(l, M) n^(l-M) / (n+1)^(l+1)`` for ``l >= M``.
Setting ``n = 0`` recovers the Fock state ``|M>``; ``M = 0`` is thermal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .distances import PolarizationReport, p_bures_series, p_re
from .exceptions import DomainError, TruncationOverflow
from .numerics import legendre, log_binomial_array
from .state import DEFAULT_POLICY, ModeDistribution, ProductDiagonal, manifold_spectrum
from .stokes import stokes_degrees, summary_from_moments
from .thermal import thermal_entropy


@dataclass(frozen=True)
class PatsSpec:
    """Thermal mean occupancy ``n`` and number of added photons ``M``."""

    n: float
    M: int

    def __post_init__(self):
        if not (self.n >= 0 and math.isfinite(self.n)):
            raise DomainError(f"thermal occupancy must be finite and nonnegative, got {self.n}")
        if self.M < 0 or int(self.M) != self.M:
            raise DomainError(f"added photon number must be a nonnegative integer, got {self.M}")
        object.__setattr__(self, "M", int(self.M))

    @property
    def q(self):
        return self.n / (self.n + 1)


@dataclass(frozen=True)
class TwoModePats:
    h: PatsSpec
    v: PatsSpec

    @classmethod
    def of(cls, n1, M, n2, S):
        return cls(PatsSpec(n1, M), PatsSpec(n2, S))

    def swapped(self):
        return TwoModePats(self.v, self.h)


def _log_weights(spec, l):
    l = np.asarray(l, dtype=float)
    n, M = spec.n, spec.M
    return (log_binomial_array(l, M) + xlogy(l - M, n) - (l + 1) * math.log1p(n))


def pats_support(spec, policy=DEFAULT_POLICY):
    """Number of stored entries so that the ratio-test tail bound is below tolerance.

    Past the mode, consecutive weights shrink by ``r_l = q (l+1) / (l+1-M)``,
    which decreases towards ``q``; the tail after ``l`` is at most
    ``w_l r_l / (1 - r_l)``.
    """
    n, M = spec.n, spec.M
    if n == 0:
        return M + 1
    q = spec.q
    size = M + 64
    while True:
        hi = min(size, policy.n_max_cap + 1)
        l = np.arange(M, hi, dtype=float)
        r = q * (l + 1) / (l + 1 - M)
        with np.errstate(divide="ignore", invalid="ignore"):
            bound = np.exp(_log_weights(spec, l)) * r / (1 - r)
        ok = np.flatnonzero((r < 1) & (bound < policy.tail_tol))
        if ok.size:
            l_end = int(l[ok[0]])
            return l_end + 1
        if hi > policy.n_max_cap:
            raise TruncationOverflow(
                f"PATS(n={n}, M={M}) needs more than {policy.n_max_cap} photons")
        size *= 2


def _tail_bound(spec, length):
    if spec.n == 0:
        return 0.0
    l = length - 1
    r = spec.q * (l + 1) / (l + 1 - spec.M)
    return float(np.exp(_log_weights(spec, l)) * r / (1 - r))


def pats_moments(spec):
    """Closed-form ``(<N>, <N^2>)``."""
    n, M = spec.n, spec.M
    mean = M * (n + 1) + n
    second = n * (M + 1) * ((M + 2) * n + 2 * M + 1) + M * M
    return float(mean), float(second)


def pats_mode(spec, policy=DEFAULT_POLICY):
    """Truncated photon-number distribution of a PATS (log-domain weights)."""
    length = pats_support(spec, policy)
    l = np.arange(length, dtype=float)
    probs = np.zeros(length)
    probs[spec.M:] = np.exp(_log_weights(spec, l[spec.M:]))
    return ModeDistribution(probs, _tail_bound(spec, length), pats_moments(spec),
                            f"pats(n={spec.n}, M={spec.M})")


def pats_purity(spec):
    """``Tr rho^2`` through the Legendre-polynomial closed form.

    With ``q = n/(n+1)``: ``(1-q)/(1+q) = 1/(2n+1)`` and
    ``(1+q^2)/(1-q^2) = 1 + 2n^2/(2n+1)``.
    """
    n, M = spec.n, spec.M
    return (1.0 / (2 * n + 1)) ** (M + 1) * legendre(M, 1 + 2 * n * n / (2 * n + 1))


def pats_entropy(spec, policy=DEFAULT_POLICY):
    """``(M+1) S_thermal(n) - sum_l w_l ln C(l, M)``, the last sum truncated."""
    if spec.n == 0:
        return 0.0
    dist = pats_mode(spec, policy)
    l = np.arange(spec.M, dist.probs.size, dtype=float)
    weighted = math.fsum(dist.probs[spec.M:] * log_binomial_array(l, spec.M))
    return (spec.M + 1) * thermal_entropy(spec.n) - weighted


def two_mode_pats_pn(tp, N):
    """Probability of ``N`` photons in total for a PATS pair (scalar ``N``)."""
    N = int(N)
    if N < 0:
        raise DomainError("photon number must be nonnegative")
    M, S = tp.h.M, tp.v.M
    if N < M + S:
        return 0.0
    l = np.arange(M, N - S + 1, dtype=float)
    logs = _log_weights(tp.h, l) + _log_weights(tp.v, N - l)
    return math.fsum(np.exp(logs))


def two_mode_pats_pn_array(tp, n_max):
    """``p_N`` for ``N = 0..n_max``."""
    return np.array([two_mode_pats_pn(tp, N) for N in range(n_max + 1)])


def fock_pn(n1, M, S, N):
    """Manifold probability for PATS(n1, M) times the Fock state ``|S>``."""
    N = int(N)
    if N < M + S:
        return 0.0
    k = N - S
    return math.exp(math.lgamma(k + 1) - math.lgamma(M + 1) - math.lgamma(k - M + 1)
                    + xlogy(k - M, n1) - (k + 1) * math.log1p(n1))


def two_mode_state(tp, policy=DEFAULT_POLICY):
    return ProductDiagonal(pats_mode(tp.h, policy), pats_mode(tp.v, policy))


def p_hs_pats(tp, policy=DEFAULT_POLICY):
    """Hilbert-Schmidt degree: product of Legendre purities minus ``sum p_N^2/(N+1)``."""
    purity = pats_purity(tp.h) * pats_purity(tp.v)
    n_max = pats_support(tp.h, policy) + pats_support(tp.v, policy) - 2
    p = two_mode_pats_pn_array(tp, n_max)
    n = np.arange(p.size, dtype=float)
    return purity - math.fsum(p**2 / (n + 1))


def fock_degrees(M, S):
    """All five degrees of the two-mode Fock state ``|M, S>``."""
    if M < 0 or S < 0:
        raise DomainError("photon numbers must be nonnegative")
    N = M + S
    if N == 0:
        d1 = d2 = None
    else:
        d1 = abs(M - S) / N
        d2 = abs(M - S) / math.sqrt(N * (N + 2))
    return PolarizationReport(
        p1=d1,
        p2=d2,
        p_hs=N / (N + 1),
        p_bures=1 - math.sqrt(1 / (N + 1)),
        p_re=1 - 1 / (1 + math.log(N + 1)),
        n_max_used=N,
        tail_bound=0.0,
    )


def pats_degrees(tp, policy=DEFAULT_POLICY):
    """All five degrees of a PATS pair.

    Stokes degrees use the closed-form moments, the HS degree the Legendre
    closed form, Bures the manifold series and RE the closed-form entropy.
    """
    d1, d2 = stokes_degrees(summary_from_moments(pats_moments(tp.h), pats_moments(tp.v)))
    state = two_mode_state(tp, policy)
    ms = manifold_spectrum(state)
    entropy = pats_entropy(tp.h, policy) + pats_entropy(tp.v, policy)
    return PolarizationReport(
        p1=d1,
        p2=d2,
        p_hs=p_hs_pats(tp, policy),
        p_bures=p_bures_series(ms),
        p_re=p_re(ms, entropy),
        n_max_used=ms.n_max,
        tail_bound=ms.tail,
    )
