"""Closed forms for the product of two single-mode thermal states."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distances import PolarizationReport
from .exceptions import DomainError, TruncationOverflow, VacuumUndefined
from .numerics import xlnx
from .state import DEFAULT_POLICY, ModeDistribution

# below these gaps the closed forms switch to their expansions
PN_SWITCH = 1e-7
CLOSED_SWITCH = 1e-5


@dataclass(frozen=True)
class ThermalPair:
    """Mean occupancies of the H and V thermal modes."""

    n1: float
    n2: float

    def __post_init__(self):
        if not (self.n1 >= 0 and self.n2 >= 0):
            raise DomainError(f"mean occupancies must be nonnegative, got {self.n1}, {self.n2}")
        if not (math.isfinite(self.n1) and math.isfinite(self.n2)):
            raise DomainError("mean occupancies must be finite")

    @property
    def q1(self):
        return self.n1 / (self.n1 + 1)

    @property
    def q2(self):
        return self.n2 / (self.n2 + 1)

    def swapped(self):
        return ThermalPair(self.n2, self.n1)


def thermal_support(nbar, policy=DEFAULT_POLICY):
    """Smallest number of stored entries whose geometric tail ``q^L`` is below tolerance."""
    if nbar == 0:
        return 1
    q = nbar / (nbar + 1)
    length = max(1, math.ceil(math.log(policy.tail_tol) / math.log(q)))
    while q**length >= policy.tail_tol:
        length += 1
    if length - 1 > policy.n_max_cap:
        raise TruncationOverflow(
            f"thermal mode with nbar={nbar} needs {length - 1} photons, cap is {policy.n_max_cap}")
    return length


def thermal_mode(nbar, policy=DEFAULT_POLICY):
    """Geometric photon-number distribution with mean ``nbar``."""
    if not nbar >= 0:
        raise DomainError(f"mean occupancy must be nonnegative, got {nbar}")
    length = thermal_support(nbar, policy)
    q = nbar / (nbar + 1)
    m = np.arange(length, dtype=float)
    probs = q**m / (nbar + 1)
    tail = q**length
    return ModeDistribution(probs, tail, (float(nbar), nbar * (2 * nbar + 1)), f"thermal({nbar})")


def _pn_limit(q, N):
    return (N + 1) * (1 - q) ** 2 * q**N


def _pn_exact(tp, N):
    """Geometric-sum form, written with expm1/log1p to survive close ratios."""
    qa, qb = max(tp.q1, tp.q2), min(tp.q1, tp.q2)
    na, nb = max(tp.n1, tp.n2), min(tp.n1, tp.n2)
    A = 1.0 / ((tp.n1 + 1) * (tp.n2 + 1))
    # qa - qb without cancellation
    gap_ratio = (na - nb) / ((na + 1) * (nb + 1)) / qa
    with np.errstate(divide="ignore"):
        log_ratio = np.log1p(-gap_ratio)
    partial = -np.expm1((N + 1) * log_ratio) / gap_ratio
    return A * qa**N * partial


def thermal_pn(tp, N):
    """Probability of ``N`` photons in total; ``N`` may be an integer array."""
    N = np.asarray(N)
    if np.any(N < 0):
        raise DomainError("photon number must be nonnegative")
    q1, q2 = tp.q1, tp.q2
    if q1 == 0 and q2 == 0:
        out = np.where(N == 0, 1.0, 0.0)
    elif abs(q1 - q2) < PN_SWITCH:
        out = _pn_limit((q1 + q2) / 2, N.astype(float))
    else:
        out = _pn_exact(tp, N.astype(float))
    return float(out) if out.ndim == 0 else out


def thermal_pn_array(tp, policy=DEFAULT_POLICY):
    """``p_N`` for every ``N`` up to where the total tail is below tolerance."""
    length = thermal_support(max(tp.n1, tp.n2), policy)
    return thermal_pn(tp, np.arange(2 * length - 1))


def _hs_taylor(tp):
    c = tp.n1 + tp.n2 + 1
    d = tp.n1 - tp.n2
    return d * d / (2 * c**4)


def _hs_closed(tp):
    # (2n1+1)(2n2+1) = c^2 - d^2, so the log argument is 1 / (1 - d^2/c^2)
    c = tp.n1 + tp.n2 + 1
    d = tp.n1 - tp.n2
    x = (d / c) ** 2
    return 1.0 / ((2 * tp.n1 + 1) * (2 * tp.n2 + 1)) + math.log1p(-x) / (d * d)


def p_hs_thermal(tp):
    """Hilbert-Schmidt degree of the two-mode thermal state."""
    if abs(tp.n1 - tp.n2) < CLOSED_SWITCH:
        return _hs_taylor(tp)
    return _hs_closed(tp)


def _bures_gap(tp):
    """``|sqrt(n1(n2+1)) - sqrt(n2(n1+1))|`` via the difference of squares."""
    n1, n2 = tp.n1, tp.n2
    return abs(n1 - n2) / (math.sqrt(n1 * (n2 + 1)) + math.sqrt(n2 * (n1 + 1)))


def _bures_series(tp):
    y = _bures_gap(tp) ** 2
    return 1.0 - math.sqrt(1.0 - y / 2 + y * y / 3)


def _bures_closed(tp):
    # the log argument L obeys L^2 = 1 + gap^2, hence 2 ln L = log1p(gap^2)
    D = _bures_gap(tp)
    two_log_L = math.log1p(D * D)
    return 1.0 - math.sqrt(two_log_L) / D


def p_bures_thermal(tp):
    """Bures degree of the two-mode thermal state."""
    if tp.n1 == tp.n2:
        return 0.0
    if abs(tp.n1 - tp.n2) < CLOSED_SWITCH:
        return _bures_series(tp)
    return _bures_closed(tp)


def p1_thermal(tp):
    if tp.n1 + tp.n2 == 0:
        raise VacuumUndefined("first-order Stokes degree is undefined for the vacuum")
    return abs(tp.n1 - tp.n2) / (tp.n1 + tp.n2)


def p2_thermal(tp):
    n1, n2 = tp.n1, tp.n2
    if n1 + n2 == 0:
        raise VacuumUndefined("second-order Stokes degree is undefined for the vacuum")
    return abs(n1 - n2) / math.sqrt(2 * n1 * n1 + 2 * n2 * n2 + 2 * n1 * n2 + 3 * n1 + 3 * n2)


def thermal_entropy(n):
    """Von Neumann entropy ``(n+1) ln(n+1) - n ln n`` of a thermal mode."""
    if n < 0:
        raise DomainError(f"mean occupancy must be nonnegative, got {n}")
    return (n + 1) * math.log1p(n) - xlnx(n)


def min_relative_entropy_thermal(tp, policy=DEFAULT_POLICY):
    p = thermal_pn_array(tp, policy)
    n = np.arange(p.size, dtype=float)
    cross = math.fsum(xlnx(p)) - math.fsum(p * np.log(n + 1))
    s_min = -thermal_entropy(tp.n1) - thermal_entropy(tp.n2) - cross
    return s_min if s_min > 0 else 0.0


def p_re_thermal(tp, policy=DEFAULT_POLICY):
    """Relative-entropy degree from closed-form ``p_N`` and mode entropies."""
    s_min = min_relative_entropy_thermal(tp, policy)
    return s_min / (1.0 + s_min)


def thermal_degrees(tp, policy=DEFAULT_POLICY):
    """All five degrees of a thermal pair from the closed forms."""
    if tp.n1 + tp.n2 == 0:
        d1 = d2 = None
    else:
        d1, d2 = p1_thermal(tp), p2_thermal(tp)
    length = thermal_support(max(tp.n1, tp.n2), policy)
    return PolarizationReport(
        p1=d1,
        p2=d2,
        p_hs=p_hs_thermal(tp),
        p_bures=p_bures_thermal(tp),
        p_re=p_re_thermal(tp, policy),
        n_max_used=2 * length - 2,
        tail_bound=2 * policy.tail_tol if length > 1 else 0.0,
    )
