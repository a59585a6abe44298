"""Self-verification: closed forms and series against brute-force oracles."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import oracle
from .distances import closest_unpolarized, min_relative_entropy, p_bures_series, p_hs_series
from .pats import (
    PatsSpec,
    TwoModePats,
    fock_degrees,
    pats_entropy,
    pats_mode,
    pats_moments,
    pats_purity,
    two_mode_pats_pn,
    two_mode_state,
)
from .state import ModeDistribution, ProductDiagonal, TruncationPolicy, manifold_spectrum
from .thermal import ThermalPair, p_bures_thermal, p_hs_thermal, thermal_mode, thermal_pn

LEVELS = {"fast": 12, "full": 32}

# direct sums weight the dropped tail by l^2 (moments) or by its square root
# (Bures), so oracle-side distributions are cut much deeper than the default
ORACLE_POLICY = TruncationPolicy(tail_tol=1e-16)


@dataclass(frozen=True)
class CheckResult:
    name: str
    worst: float
    tol: float
    passed: bool

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<32s} worst={self.worst:.3e}  tol={self.tol:.1e}"


def _check_thermal_pn(n_max):
    worst = 0.0
    for n1, n2 in [(1, 2), (0.5, 3), (2, 2), (0, 1)]:
        tp = ThermalPair(n1, n2)
        conv = oracle.convolve_distributions(thermal_mode(n1), thermal_mode(n2))
        N = np.arange(n_max + 1)
        worst = max(worst, float(np.max(np.abs(thermal_pn(tp, N) - conv[: n_max + 1]))))
    return worst


def _check_closed_forms():
    policy = ORACLE_POLICY
    grid = [0, 0.5, 1, 2, 5, 10]
    worst = 0.0
    for a in grid:
        for b in grid:
            tp = ThermalPair(a, b)
            ms = manifold_spectrum(ProductDiagonal(thermal_mode(a, policy), thermal_mode(b, policy)))
            worst = max(worst, abs(p_hs_series(ms) - p_hs_thermal(tp)),
                        abs(p_bures_series(ms) - p_bures_thermal(tp)))
    return worst


def _oracle_cases(n_max, seed, count):
    rng = np.random.default_rng(seed)
    cases = [oracle.random_spectrum(rng, n_max) for _ in range(count)]
    for state in (ProductDiagonal(thermal_mode(2), thermal_mode(1)),
                  two_mode_state(TwoModePats.of(1, 2, 1, 1))):
        ms = manifold_spectrum(state)
        cases.append(oracle.truncated_spectrum(ms, min(n_max, ms.n_max)))
    return cases


def _check_oracle(n_max, seed, count):
    worst_value = worst_tv = 0.0
    for ms in _oracle_cases(n_max, seed, count):
        analytic = {
            "HS": p_hs_series(ms),
            "BuresFidelity": p_bures_series(ms),
            "RelEntropy": min_relative_entropy(ms, ms.block_entropy()),
        }
        measure = {"HS": "HS", "BuresFidelity": "Bures", "RelEntropy": "RE"}
        for obj, ref in analytic.items():
            value, weights = oracle.minimize_over_unpolarized(oracle.SimplexProblem(obj, ms))
            worst_value = max(worst_value, abs(value - ref))
            worst_tv = max(worst_tv, oracle.tv_distance(weights, closest_unpolarized(ms, measure[obj])))
    return worst_value, worst_tv


def _check_pats():
    worst = 0.0
    for n in (0.1, 1, 2):
        for M in (0, 1, 2, 4):
            spec = PatsSpec(n, M)
            dist = pats_mode(spec, ORACLE_POLICY)
            probs = dist.probs
            l = np.arange(probs.size, dtype=float)
            worst = max(
                worst,
                abs(pats_purity(spec) - math.fsum(probs**2)),
                abs(pats_moments(spec)[0] - math.fsum(probs * l)),
                abs(pats_moments(spec)[1] - math.fsum(probs * l * l)) / max(1.0, pats_moments(spec)[1]),
                abs(pats_entropy(spec) - float(-np.sum(probs[probs > 0] * np.log(probs[probs > 0])))),
            )
            for S in (0, 1, 2, 4):
                tp = TwoModePats(spec, PatsSpec(n, S))
                conv = oracle.convolve_distributions(dist, pats_mode(tp.v, ORACLE_POLICY))
                for N in range(min(40, conv.size)):
                    worst = max(worst, abs(two_mode_pats_pn(tp, N) - conv[N]))
    return worst


def _check_fock():
    worst = 0.0
    for N in range(1, 21):
        for M in range(N + 1):
            S = N - M
            rep = fock_degrees(M, S)
            series = ProductDiagonal(ModeDistribution.fock(M), ModeDistribution.fock(S))
            ms = manifold_spectrum(series)
            worst = max(worst, abs(rep.p_hs - p_hs_series(ms)), abs(rep.p_bures - p_bures_series(ms)))
            if not (rep.p_hs >= rep.p_bures and rep.p_hs >= rep.p_re and rep.p1 >= rep.p2):
                worst = math.inf
    return worst


def _hs_witness():
    """Gap between the interior HS maximum and the endpoint at n2 = 1."""
    eps = np.arange(0, 10.0001, 0.25)
    values = np.array([p_hs_thermal(ThermalPair(1 + e, 1)) for e in eps])
    k = int(np.argmax(values))
    interior = 0 < k < eps.size - 1
    drop = values[k] - values[-1]
    # residual is zero when the witness is present
    return 0.0 if interior and drop > 0 else 1.0


def run_checks(level="fast", tol_scale=1.0, seed=0):
    """Run the verification suite; returns a list of :class:`CheckResult`."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {sorted(LEVELS)}")
    n_max = LEVELS[level]
    count = 5 if level == "fast" else 20
    value_res, tv_res = _check_oracle(n_max, seed, count)
    checks = [
        ("thermal_pn_vs_convolution", _check_thermal_pn(n_max), 1e-12),
        ("closed_form_vs_series", _check_closed_forms(), 1e-8),
        ("oracle_values", value_res, 1e-7),
        ("oracle_weights_tv", tv_res, 1e-6),
        ("pats_identities", _check_pats(), 1e-9),
        ("fock_limits", _check_fock(), 1e-12),
    ]
    if level == "full":
        checks.append(("hs_nonmonotonic_witness", _hs_witness(), 0.5))
    return [CheckResult(name, worst, tol * tol_scale, worst < tol * tol_scale)
            for name, worst, tol in checks]
