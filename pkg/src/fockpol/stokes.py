"""Stokes-operator degrees of polarization for Fock-diagonal product states.

For a product of diagonal modes ``<S_1> = <S_2> = 0`` and ``<S_3>`` is the
occupancy difference, so both degrees depend only on the first two
photon-number moments of each mode.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .exceptions import DomainError, VacuumUndefined
from .state import ProductDiagonal, mode_moment

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StokesSummary:
    """Expectation values ``<S_0>``, ``<S_3>`` and ``<S^2>``."""

    s0: float
    s3: float
    s_sq: float


def mode_moments(dist):
    """``(<N>, <N^2>)`` of one mode, closed form when the family provides it."""
    if dist.moments is not None:
        return dist.moments
    return mode_moment(dist, 1), mode_moment(dist, 2)


def summary_from_moments(h, v):
    """Stokes summary from ``(mean, second moment)`` pairs of the two modes."""
    nh, nh2 = h
    nv, nv2 = v
    s_sq = 2.0 * (nh * nv + nh + nv) + nh2 + nv2
    return StokesSummary(nh + nv, nh - nv, s_sq)


def stokes_summary(state):
    if not isinstance(state, ProductDiagonal):
        raise DomainError("Stokes summaries are defined here for product states only")
    return summary_from_moments(mode_moments(state.h), mode_moments(state.v))


def _summary(obj):
    return obj if isinstance(obj, StokesSummary) else stokes_summary(obj)


def p1(state):
    """First-order Stokes degree ``|<S_3>| / <S_0>``.

    Accepts a state or a precomputed :class:`StokesSummary`.  Raises
    :class:`VacuumUndefined` at the vacuum instead of returning the
    spurious limit value 1.
    """
    s = _summary(state)
    if s.s0 == 0:
        raise VacuumUndefined("first-order Stokes degree is undefined for the vacuum")
    return abs(s.s3) / s.s0


def p2(state):
    """Second-order Stokes degree ``|<S_3>| / sqrt(<S^2>)``."""
    s = _summary(state)
    if s.s_sq == 0:
        raise VacuumUndefined("second-order Stokes degree is undefined for the vacuum")
    return abs(s.s3) / math.sqrt(s.s_sq)


def stokes_degrees(state):
    """``(p1, p2)``, or ``(None, None)`` for the vacuum.

    Logs a warning when the expected ordering ``p2 <= p1`` is broken.
    """
    s = _summary(state)
    if s.s0 == 0:
        return None, None
    d1, d2 = p1(s), p2(s)
    if d2 > d1 + 1e-12:
        log.warning("Stokes ordering violated: p2=%r > p1=%r", d2, d1)
    return d1, d2
