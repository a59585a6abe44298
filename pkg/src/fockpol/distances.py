"""Distance-type degrees of polarization: Hilbert-Schmidt, Bures, relative entropy.

All three act on the block-diagonal sector through the manifold spectrum.
Because that sector commutes with every SU(2)-invariant state, each
distance reduces to a classical expression in ``p[N]`` and ``mu[N][n]``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass

import numpy as np

from .exceptions import DomainError, NegativeEntropy
from .numerics import clamped_sqrt, xlnx
from .state import UnpolarizedWeights, manifold_spectrum, von_neumann_entropy
from .stokes import stokes_degrees, stokes_summary

NEG_ENTROPY_TOL = 1e-9


class Measure(enum.Enum):
    HS = "HS"
    RE = "RE"
    BURES = "Bures"


@dataclass(frozen=True)
class PolarizationReport:
    """All five degrees for one state plus truncation diagnostics.

    ``p1`` and ``p2`` are ``None`` for the vacuum.
    """

    p1: float | None
    p2: float | None
    p_hs: float
    p_bures: float
    p_re: float
    n_max_used: int = 0
    tail_bound: float = 0.0

    def as_dict(self):
        d = asdict(self)
        if self.p1 is None:
            d["stokes_undefined"] = "vacuum"
        return d

    def values(self):
        """Degrees in the fixed order ``P1, P2, P_HS, P_B, P_RE``."""
        return (self.p1, self.p2, self.p_hs, self.p_bures, self.p_re)


def p_hs_series(ms):
    """``sum mu^2 - sum p_N^2 / (N+1)``."""
    n = np.arange(ms.p.size, dtype=float)
    if ms.mu is None:
        purity = math.fsum(ms.p**2)
    else:
        purity = math.fsum(float(np.dot(row, row)) for row in ms.mu)
    return purity - math.fsum(ms.p**2 / (n + 1))


def _root_sums(ms):
    if ms.mu is None:
        return np.sqrt(ms.p)
    return np.array([np.sqrt(row).sum() for row in ms.mu])


def bures_fidelity(ms):
    """Maximal fidelity with the unpolarized set, ``sum (sum_n sqrt mu)^2 / (N+1)``."""
    n = np.arange(ms.p.size, dtype=float)
    return math.fsum(_root_sums(ms) ** 2 / (n + 1))


def p_bures_series(ms):
    """``1 - sqrt(max fidelity)``, clamped to ``[0, 1]`` against round-off."""
    value = 1.0 - clamped_sqrt(bures_fidelity(ms))
    if -1e-12 <= value < 0:
        return 0.0
    return value


def min_relative_entropy(ms, entropy):
    """``-S(rho_b) - sum p_N ln(p_N / (N+1))`` for the given block entropy."""
    n = np.arange(ms.p.size, dtype=float)
    cross = math.fsum(xlnx(ms.p)) - math.fsum(ms.p * np.log(n + 1))
    s_min = -entropy - cross
    if s_min < -NEG_ENTROPY_TOL:
        raise NegativeEntropy(f"minimal relative entropy {s_min!r} is negative; "
                              "entropy and spectrum are inconsistent")
    return s_min if s_min > 0 else 0.0


def p_re(ms, entropy):
    """Relative-entropy degree ``S_min / (1 + S_min)``.

    ``entropy`` is the von Neumann entropy of the block-diagonal sector, so
    closed-form entropies can be supplied by the caller.
    """
    s_min = min_relative_entropy(ms, entropy)
    return s_min / (1.0 + s_min)


def p_re_state(state):
    """Relative-entropy degree with the entropy computed from the state."""
    ms = manifold_spectrum(state)
    entropy = ms.block_entropy() if ms.is_pure else von_neumann_entropy(state)
    return p_re(ms, entropy)


def closest_unpolarized(ms, measure):
    """Weights of the closest SU(2)-invariant state under ``measure``.

    HS and RE share the optimum ``pi_N = p_N``.  For Bures the fidelity
    ``(sum_N sqrt(pi_N) a_N)^2`` with ``a_N = sum_n sqrt(mu_N,n) / sqrt(N+1)``
    is maximised by ``pi_N`` proportional to ``a_N^2`` (Cauchy-Schwarz).
    """
    measure = Measure(measure)
    if measure in (Measure.HS, Measure.RE):
        w = np.array(ms.p, dtype=float)
    else:
        n = np.arange(ms.p.size, dtype=float)
        w = _root_sums(ms) ** 2 / (n + 1)
    total = math.fsum(w)
    if not total > 0:
        raise DomainError("spectrum carries no probability")
    return UnpolarizedWeights(w / total)


def pure_degrees(weights):
    """``(p_hs, p_bures, p_re)`` of a pure state with manifold weights ``|c_N|^2``."""
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0) or abs(math.fsum(w) - 1.0) > 1e-12:
        raise DomainError("weights must lie on the probability simplex")
    n = np.arange(w.size, dtype=float)
    hs = math.fsum(w**2 * n / (n + 1))
    bures = 1.0 - clamped_sqrt(math.fsum(w / (n + 1)))
    s = math.fsum(w * np.log(n + 1))
    return hs, max(bures, 0.0), s / (1.0 + s)


def degrees(state):
    """:class:`PolarizationReport` for any supported state via the general series."""
    ms = manifold_spectrum(state)
    if ms.is_pure:
        # Stokes moments are not determined by |c_N|^2 alone
        d1 = d2 = None
        entropy = ms.block_entropy()
    else:
        d1, d2 = stokes_degrees(stokes_summary(state))
        entropy = von_neumann_entropy(state)
    return PolarizationReport(
        p1=d1,
        p2=d2,
        p_hs=p_hs_series(ms),
        p_bures=p_bures_series(ms),
        p_re=p_re(ms, entropy),
        n_max_used=ms.n_max,
        tail_bound=ms.tail,
    )
