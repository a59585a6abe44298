"""Brute-force verifiers for the closed forms and series.

The distance objectives are evaluated straight from their definitions for
commuting diagonal states and minimised numerically over the unpolarized
simplex with a projected Newton method.  Nothing here calls the
analytic optimum formulas.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, NoConvergence
from .state import ManifoldSpectrum, UnpolarizedWeights

MAX_ORACLE_NMAX = 32


class Objective(enum.Enum):
    HS = "HS"
    BURES_FIDELITY = "BuresFidelity"
    REL_ENTROPY = "RelEntropy"


@dataclass(frozen=True)
class SimplexProblem:
    objective: Objective
    spectrum: ManifoldSpectrum

    def __post_init__(self):
        object.__setattr__(self, "objective", Objective(self.objective))
        if self.spectrum.n_max > MAX_ORACLE_NMAX:
            raise DomainError(f"oracle is limited to n_max <= {MAX_ORACLE_NMAX}, "
                              f"got {self.spectrum.n_max}")

    @property
    def n_max(self):
        return self.spectrum.n_max


def project_simplex(v):
    """Euclidean projection onto ``{x >= 0, sum x = 1}`` (sort-based)."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    idx = np.arange(1, v.size + 1)
    rho = np.nonzero(u - css / idx > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def _padded(ms):
    """Eigenvalues as an ``(n_max+1, n_max+1)`` array, row ``N`` zero beyond ``n = N``."""
    size = ms.p.size
    grid = np.zeros((size, size))
    for N, row in ms.rows():
        grid[N, : N + 1] = row
    return grid


class _Problem:
    """Objective value and gradient in ``pi`` for one spectrum."""

    def __init__(self, objective, ms):
        self.objective = objective
        self.mu = _padded(ms)
        size = ms.p.size
        self.dim = np.arange(1, size + 1, dtype=float)
        self.mask = np.tri(size, dtype=bool)
        self.p = self.mu.sum(axis=1)
        self.root = np.sqrt(self.mu)
        if objective is Objective.HS:
            self.barrier = np.zeros(size, dtype=bool)
        elif objective is Objective.BURES_FIDELITY:
            self.barrier = self.root.sum(axis=1) > 0
        else:
            self.barrier = self.p > 0
        mu_pos = self.mu[self.mu > 0]
        self.neg_entropy = float(np.sum(mu_pos * np.log(mu_pos)))

    def sigma(self, pi):
        return np.where(self.mask, (pi / self.dim)[:, None], 0.0)

    def value(self, pi):
        """Objective to minimise: HS distance, ``-sqrt(F)`` or relative entropy."""
        if self.objective is Objective.HS:
            diff = np.where(self.mask, self.mu - self.sigma(pi), 0.0)
            return float(np.sum(diff**2))
        if self.objective is Objective.BURES_FIDELITY:
            return -float(np.sum(np.sqrt(self.mu * self.sigma(pi))))
        sig = self.sigma(pi)
        occupied = self.mu > 0
        if np.any(sig[occupied] <= 0):
            return math.inf
        return self.neg_entropy - float(np.sum(self.mu[occupied] * np.log(sig[occupied])))

    def grad(self, pi):
        if self.objective is Objective.HS:
            # d/dpi_N sum_n (mu - pi/(N+1))^2 summed over the N+1 entries
            return -2.0 * self.p / self.dim + 2.0 * pi / self.dim
        if self.objective is Objective.BURES_FIDELITY:
            a = self.root.sum(axis=1) / np.sqrt(self.dim)
            g = np.zeros_like(pi)
            pos = pi > 0
            g[pos] = -a[pos] / (2.0 * np.sqrt(pi[pos]))
            g[~pos & (a > 0)] = -1e12
            return g
        g = np.zeros_like(pi)
        pos = pi > 0
        g[pos] = -self.p[pos] / pi[pos]
        g[~pos & (self.p > 0)] = -1e12
        return g

    def hess(self, pi):
        """Diagonal of the Hessian (the objectives are separable in ``pi``)."""
        if self.objective is Objective.HS:
            return 2.0 / self.dim
        safe = np.where(pi > 0, pi, np.inf)
        if self.objective is Objective.BURES_FIDELITY:
            a = self.root.sum(axis=1) / np.sqrt(self.dim)
            return a / (4.0 * safe**1.5)
        return self.p / safe**2


def project_simplex_scaled(z, h):
    """Minimise ``sum h (x - z)^2`` over the simplex, for positive weights ``h``.

    The solution is ``x = max(z - theta / h, 0)``; ``theta`` is found by
    bisection on the monotone mass function.
    """
    def mass(theta):
        return float(np.sum(np.maximum(z - theta / h, 0.0)))

    lo = float(np.min((z - 1.0) * h))
    hi = float(np.max(z * h))
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mass(mid) > 1.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-17 * max(1.0, abs(mid)):
            break
    x = np.maximum(z - 0.5 * (lo + hi) / h, 0.0)
    return x / x.sum()


def _kkt_residual(prob, pi):
    g = prob.grad(pi)
    scale = max(1.0, float(np.max(np.abs(g))))
    return float(np.max(np.abs(pi - project_simplex(pi - g / scale))))


def minimize_over_unpolarized(problem, tol=1e-11, max_iter=10_000):
    """Numerically minimise a distance objective over the unpolarized simplex.

    Returns ``(value, weights)``.  ``value`` is the HS distance, the Bures
    distance ``1 - sqrt(F)`` or the relative entropy at the optimum.

    All three objectives are separable in ``pi``, so the Hessian is
    diagonal; each iteration takes a projected Newton step (projection in
    the Hessian metric) with Armijo backtracking, and stops once the KKT
    residual ``|pi - proj(pi - g/|g|)|`` is below ``tol``.
    """
    prob = _Problem(problem.objective, problem.spectrum)
    size = prob.p.size
    pi = np.full(size, 1.0 / size)
    f = prob.value(pi)
    for _ in range(max_iter):
        if _kkt_residual(prob, pi) < tol:
            break
        g = prob.grad(pi)
        h = np.clip(prob.hess(pi), 1e-12, 1e16)
        d = project_simplex_scaled(pi - g / h, h) - pi
        slope = float(np.dot(g, d))
        if slope >= 0:
            break
        # components with infinite slope at zero must stay strictly positive
        shrinking = prob.barrier & (d < 0)
        t = min(1.0, 0.99 * float(np.min(pi[shrinking] / -d[shrinking]))) if shrinking.any() else 1.0
        while True:
            trial = pi + t * d
            f_trial = prob.value(trial)
            if f_trial <= f + 1e-4 * t * slope:
                break
            t *= 0.5
            if t < 1e-30:
                break
        if t < 1e-30 or np.array_equal(trial, pi):
            break
        pi, f = trial, f_trial
    else:
        raise NoConvergence(f"{problem.objective.value} oracle did not converge "
                            f"in {max_iter} iterations")
    pi = np.maximum(pi, 0.0)
    pi = pi / pi.sum()
    f = prob.value(pi)
    if problem.objective is Objective.BURES_FIDELITY:
        f = 1.0 + f
    return f, UnpolarizedWeights(pi)


def objective_value(objective, ms, weights):
    """Evaluate a distance at given unpolarized weights, without optimising.

    Same conventions as :func:`minimize_over_unpolarized`.
    """
    prob = _Problem(Objective(objective), ms)
    pi = np.asarray(getattr(weights, "pi", weights), dtype=float)
    f = prob.value(pi)
    if prob.objective is Objective.BURES_FIDELITY:
        return 1.0 + f
    return f


def convolve_distributions(a, b):
    """Manifold probabilities ``p_N = sum_n a_n b_(N-n)`` by direct summation."""
    xa, xb = a.probs, b.probs
    out = np.zeros(xa.size + xb.size - 1)
    for n, an in enumerate(xa):
        if an:
            out[n : n + xb.size] += an * xb
    return out


def random_spectrum(rng, n_max, concentration=1.0):
    """Random normalised spectrum: Dirichlet manifold weights and in-manifold splits."""
    p = rng.dirichlet(np.full(n_max + 1, concentration))
    rows = [p[N] * rng.dirichlet(np.full(N + 1, concentration)) for N in range(n_max + 1)]
    return ManifoldSpectrum.from_mu(rows)


def truncated_spectrum(ms, n_max):
    """First ``n_max + 1`` manifolds, renormalised to unit mass."""
    rows = [row for N, row in ms.rows() if N <= n_max]
    total = math.fsum(float(np.sum(r)) for r in rows)
    return ManifoldSpectrum.from_mu([r / total for r in rows])


def tv_distance(a, b):
    a = np.asarray(getattr(a, "pi", a), dtype=float)
    b = np.asarray(getattr(b, "pi", b), dtype=float)
    size = max(a.size, b.size)
    a = np.pad(a, (0, size - a.size))
    b = np.pad(b, (0, size - b.size))
    return 0.5 * float(np.sum(np.abs(a - b)))
