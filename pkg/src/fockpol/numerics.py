"""Special functions and guarded elementary operations."""

import math

import numpy as np
from scipy.special import gammaln

from .exceptions import DomainError


def legendre(L, x):
    """Legendre polynomial of degree ``L`` evaluated at ``x >= 1``.

    Uses the Bonnet recurrence ``(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}``.
    On ``x >= 1`` every term is positive, so the recurrence is stable.
    """
    L = int(L)
    if L < 0:
        raise DomainError(f"Legendre degree must be nonnegative, got {L}")
    if x < 1.0:
        raise DomainError(f"Legendre argument must be >= 1, got {x}")
    if x == 1.0:
        return 1.0
    p_prev, p = 1.0, float(x)
    if L == 0:
        return p_prev
    for k in range(1, L):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    return p


def log_binomial(n, k):
    """Natural log of the binomial coefficient C(n, k)."""
    if k < 0 or n < 0 or k > n:
        raise DomainError(f"log_binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return 0.0
    # exact integer path while the coefficient is still small
    if n <= 60:
        return math.log(math.comb(n, k))
    return float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))


def log_binomial_array(n, k):
    """Vectorised ``ln C(n, k)`` with ``-inf`` outside the support."""
    n = np.asarray(n, dtype=float)
    k = np.asarray(k, dtype=float)
    out = np.full(np.broadcast(n, k).shape, -np.inf)
    ok = (k >= 0) & (k <= n)
    nb, kb = np.broadcast_arrays(n, k)
    out[ok] = gammaln(nb[ok] + 1) - gammaln(kb[ok] + 1) - gammaln(nb[ok] - kb[ok] + 1)
    return out


def xlnx(x):
    """``x ln x`` with the continuous extension ``0 ln 0 = 0``.

    Accepts scalars or arrays; raises :class:`DomainError` on negative input.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError("xlnx is undefined for negative arguments")
    out = np.zeros_like(arr)
    pos = arr > 0
    out[pos] = arr[pos] * np.log(arr[pos])
    if out.ndim == 0:
        return float(out)
    return out


def shannon_entropy(probs):
    """``-sum p ln p`` over a probability vector (zeros contribute nothing)."""
    return float(-np.sum(xlnx(np.asarray(probs, dtype=float))))


def log1p_ratio(y):
    """``ln(1 + y) / y``, continuous at ``y = 0`` where it equals 1."""
    if y < 1e-4:
        # alternating series; remainder below y**5/6 < 1e-20
        return 1.0 - y / 2 + y * y / 3 - y**3 / 4 + y**4 / 5
    return math.log1p(y) / y


def clamped_sqrt(x, guard=1e-14):
    """Square root that maps round-off negatives in ``[-guard, 0)`` to 0."""
    if x < 0:
        if x < -guard:
            raise DomainError(f"square root of {x} is not a round-off negative")
        return 0.0
    return math.sqrt(x)
