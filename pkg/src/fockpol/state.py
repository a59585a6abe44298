"""Fock-diagonal two-mode states and their excitation-manifold structure.

A two-mode state is either a product ``rho_H (x) rho_V`` of two diagonal
single-mode states, or a pure state expanded over total-photon-number
manifolds (only the weights ``|c_N|^2`` are kept, phases never enter).

The manifold with total photon number ``N`` is spanned by ``|n, N-n>``,
``n = 0..N``.  For a product state its eigenvalues are
``mu[N][n] = xi[n] * eta[N-n]`` and ``p[N] = sum_n mu[N][n]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .numerics import shannon_entropy

NORM_TOL = 1e-12


@dataclass(frozen=True)
class TruncationPolicy:
    """How far photon-number distributions are extended.

    ``tail_tol`` bounds the probability mass that is dropped per mode and
    ``n_max_cap`` is the largest photon number ever stored.
    """

    tail_tol: float = 1e-12
    n_max_cap: int = 4096

    def __post_init__(self):
        if not self.tail_tol > 0:
            raise DomainError("tail_tol must be positive")
        if self.n_max_cap < 1:
            raise DomainError("n_max_cap must be at least 1")


DEFAULT_POLICY = TruncationPolicy()


def _frozen_array(values):
    arr = np.array(values, dtype=float)
    if arr.ndim != 1:
        raise DomainError("expected a one-dimensional sequence")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ModeDistribution:
    """Photon-number distribution of one mode.

    Attributes:
        probs: ``probs[m]`` is the probability of ``m`` photons.
        tail_mass: upper bound on the probability beyond ``len(probs) - 1``.
        moments: exact ``(<N>, <N^2>)`` when the state family has closed
            forms; ``None`` means moments come from direct sums.
        label: short description used in reports.
    """

    probs: np.ndarray
    tail_mass: float = 0.0
    moments: tuple[float, float] | None = None
    label: str = "custom"

    def __post_init__(self):
        probs = _frozen_array(self.probs)
        object.__setattr__(self, "probs", probs)
        if probs.size == 0:
            raise DomainError("a mode distribution needs at least one entry")
        if np.any(probs < 0):
            raise DomainError("probabilities must be nonnegative")
        if self.tail_mass < 0:
            raise DomainError("tail_mass must be nonnegative")
        total = math.fsum(probs) + self.tail_mass
        if abs(total - 1.0) > NORM_TOL:
            raise DomainError(f"probabilities sum to {total!r}, expected 1")

    @property
    def n_max(self):
        return self.probs.size - 1

    @classmethod
    def fock(cls, n):
        """Point mass at ``n`` photons."""
        if n < 0 or int(n) != n:
            raise DomainError(f"Fock photon number must be a nonnegative integer, got {n}")
        n = int(n)
        probs = np.zeros(n + 1)
        probs[n] = 1.0
        return cls(probs, 0.0, (float(n), float(n * n)), f"fock({n})")

    @classmethod
    def from_probs(cls, probs, normalize=False, label="custom"):
        """Build a distribution from raw weights.

        With ``normalize=True`` the weights are rescaled to sum to one.
        """
        arr = np.asarray(probs, dtype=float)
        if normalize:
            total = math.fsum(arr)
            if not total > 0:
                raise DomainError("weights must have positive total")
            arr = arr / total
        # trailing zeros carry no information
        nz = np.flatnonzero(arr)
        if nz.size:
            arr = arr[: nz[-1] + 1]
        return cls(arr, 0.0, None, label)


@dataclass(frozen=True, eq=False)
class ProductDiagonal:
    """Product ``rho_H (x) rho_V`` of two Fock-diagonal modes."""

    h: ModeDistribution
    v: ModeDistribution

    def swapped(self):
        return ProductDiagonal(self.v, self.h)

    @property
    def tail_bound(self):
        return self.h.tail_mass + self.v.tail_mass


@dataclass(frozen=True, eq=False)
class PureExpansion:
    """Pure state ``sum_N c_N |Psi_N>`` stored through ``|c_N|^2``."""

    weights: np.ndarray
    tail_mass: float = 0.0

    def __post_init__(self):
        w = _frozen_array(self.weights)
        object.__setattr__(self, "weights", w)
        if np.any(w < 0):
            raise DomainError("weights must be nonnegative")
        total = math.fsum(w) + self.tail_mass
        if abs(total - 1.0) > NORM_TOL:
            raise DomainError(f"weights sum to {total!r}, expected 1")

    @property
    def tail_bound(self):
        return self.tail_mass


TwoModeState = ProductDiagonal | PureExpansion


@dataclass(frozen=True, eq=False)
class ManifoldSpectrum:
    """Manifold probabilities ``p[N]`` and per-manifold eigenvalues ``mu[N]``.

    ``mu`` is a tuple whose ``N``-th entry has length ``N + 1``; it is
    ``None`` for pure expansions, where manifold ``N`` carries the single
    eigenvalue ``p[N]``.
    """

    p: np.ndarray
    mu: tuple | None = None
    tail: float = 0.0

    def __post_init__(self):
        p = _frozen_array(self.p)
        object.__setattr__(self, "p", p)
        if np.any(p < 0):
            raise DomainError("manifold probabilities must be nonnegative")
        if self.mu is not None:
            rows = []
            if len(self.mu) != p.size:
                raise DomainError("mu must have one row per manifold")
            for N, row in enumerate(self.mu):
                row = _frozen_array(row)
                if row.size != N + 1:
                    raise DomainError(f"manifold {N} needs {N + 1} eigenvalues, got {row.size}")
                if np.any(row < 0):
                    raise DomainError("eigenvalues must be nonnegative")
                if abs(math.fsum(row) - p[N]) > NORM_TOL:
                    raise DomainError(f"eigenvalues of manifold {N} do not sum to p[{N}]")
                rows.append(row)
            object.__setattr__(self, "mu", tuple(rows))

    @property
    def n_max(self):
        return self.p.size - 1

    @property
    def is_pure(self):
        return self.mu is None

    @classmethod
    def from_mu(cls, mu, tail=0.0):
        rows = [np.asarray(r, dtype=float) for r in mu]
        p = np.array([math.fsum(r) for r in rows])
        return cls(p, tuple(rows), tail)

    def rows(self):
        """Iterate over ``(N, eigenvalues)`` pairs, also for pure expansions."""
        if self.mu is not None:
            yield from enumerate(self.mu)
            return
        for N, pN in enumerate(self.p):
            row = np.zeros(N + 1)
            row[0] = pN
            yield N, row

    def block_entropy(self):
        """Von Neumann entropy of the block-diagonal sector, ``-sum mu ln mu``."""
        if self.mu is None:
            return shannon_entropy(self.p)
        return math.fsum(shannon_entropy(row) for row in self.mu)


@dataclass(frozen=True, eq=False)
class UnpolarizedWeights:
    """Weights ``pi[N]`` of an SU(2)-invariant state ``sum_N pi_N P_N / (N+1)``."""

    pi: np.ndarray

    def __post_init__(self):
        pi = _frozen_array(self.pi)
        object.__setattr__(self, "pi", pi)
        if np.any(pi < 0):
            raise DomainError("unpolarized weights must be nonnegative")
        if abs(math.fsum(pi) - 1.0) > NORM_TOL:
            raise DomainError("unpolarized weights must sum to 1")

    def spectrum(self):
        """Spectrum of the SU(2)-invariant state itself."""
        rows = [np.full(N + 1, w / (N + 1)) for N, w in enumerate(self.pi)]
        return ManifoldSpectrum(self.pi, tuple(rows))


def manifold_spectrum(state):
    """Excitation-manifold decomposition of a two-mode state.

    For a product state the grid ``mu[N][n] = xi[n] * eta[N-n]`` is zero
    padded where the truncated supports do not reach, so every stored
    pair ``(n, N-n)`` appears exactly once.
    """
    if isinstance(state, PureExpansion):
        return ManifoldSpectrum(state.weights, None, state.tail_mass)
    if not isinstance(state, ProductDiagonal):
        raise TypeError(f"unsupported state type {type(state).__name__}")
    xi, eta = state.h.probs, state.v.probs
    a, b = xi.size, eta.size
    rows = []
    for N in range(a + b - 1):
        lo, hi = max(0, N - b + 1), min(N, a - 1)
        row = np.zeros(N + 1)
        row[lo : hi + 1] = xi[lo : hi + 1] * eta[N - hi : N - lo + 1][::-1]
        rows.append(row)
    p = np.array([math.fsum(r) for r in rows])
    return ManifoldSpectrum(p, tuple(rows), state.tail_bound)


def mode_moment(dist, order):
    """``<N^j>`` of a single mode by direct summation, ``j`` in {1, 2}."""
    if order not in (1, 2):
        raise DomainError(f"only first and second moments are supported, got order {order}")
    m = np.arange(dist.probs.size, dtype=float)
    return math.fsum(dist.probs * m**order)


def moment_error_bound(dist, order):
    """Crude bound on the truncation error of :func:`mode_moment`."""
    return dist.tail_mass * float(dist.n_max + 1) ** order


def von_neumann_entropy(state):
    """Von Neumann entropy of a two-mode state.

    Additive over the product factors; a pure expansion has entropy 0.
    """
    if isinstance(state, PureExpansion):
        return 0.0
    return shannon_entropy(state.h.probs) + shannon_entropy(state.v.probs)
