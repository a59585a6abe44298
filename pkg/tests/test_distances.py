import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fockpol.distances import (
    Measure,
    closest_unpolarized,
    degrees,
    min_relative_entropy,
    p_bures_series,
    p_hs_series,
    p_re,
    p_re_state,
    pure_degrees,
)
from fockpol.exceptions import DomainError, NegativeEntropy
from fockpol.oracle import objective_value, random_spectrum
from fockpol.state import (
    ManifoldSpectrum,
    ModeDistribution,
    ProductDiagonal,
    PureExpansion,
    UnpolarizedWeights,
    manifold_spectrum,
)
from fockpol.pats import TwoModePats, two_mode_state
from fockpol.thermal import thermal_mode

from conftest import DEEP
from mp_oracle import distance_degrees, thermal_weights

# (P_HS, P_B, P_RE) from 40-digit direct double sums (tests/mp_oracle.py)
MP_THERMAL_2_1 = (0.0021281455290954949937, 0.017283171723557682795, 0.064136832080521127149)
MP_PATS_12_12 = (0.0094294568917339836407, 0.24518318943419616892, 0.38357800177442457949)
MP_PATS_12_11 = (0.012498094802621551593, 0.23042231689680014898, 0.36820466486838782222)

weights = st.lists(st.floats(0.0, 1.0), min_size=1, max_size=7).filter(lambda v: sum(v) > 0.1)


def _product(a, b):
    return ProductDiagonal(ModeDistribution.from_probs(a, normalize=True),
                           ModeDistribution.from_probs(b, normalize=True))


@pytest.mark.parametrize("N", [0, 1, 2, 5, 20])
def test_pure_point_mass_gives_fock_triple(N):
    w = np.zeros(N + 1)
    w[N] = 1.0
    hs, b, re = pure_degrees(w)
    assert hs == pytest.approx(N / (N + 1), abs=1e-15)
    assert b == pytest.approx(1 - 1 / math.sqrt(N + 1), abs=1e-15)
    assert re == pytest.approx(1 - 1 / (1 + math.log(N + 1)), abs=1e-15)


def test_pure_two_manifold_example():
    hs, b, re = pure_degrees([0.5, 0.5])
    assert hs == pytest.approx(0.125, abs=1e-15)
    assert b == pytest.approx(1 - math.sqrt(0.75), abs=1e-15)
    s = 0.5 * math.log(2)
    assert re == pytest.approx(s / (1 + s), abs=1e-15)


@given(st.lists(st.floats(0.0, 1.0), min_size=1, max_size=10).filter(lambda v: sum(v) > 0.1))
def test_pure_closed_form_matches_series(raw):
    w = np.asarray(raw) / math.fsum(raw)
    w = w / math.fsum(w)
    ms = ManifoldSpectrum(w)
    hs, b, re = pure_degrees(w)
    assert p_hs_series(ms) == pytest.approx(hs, abs=1e-13)
    assert p_bures_series(ms) == pytest.approx(b, abs=1e-13)
    assert p_re(ms, ms.block_entropy()) == pytest.approx(re, abs=1e-13)
    rep = degrees(PureExpansion(w))
    assert rep.p1 is None and rep.p2 is None


def test_pure_degrees_rejects_bad_weights():
    with pytest.raises(DomainError):
        pure_degrees([0.5, 0.6])


def test_unpolarized_input_gives_zero(rng):
    for _ in range(5):
        pi = rng.dirichlet(np.ones(8))
        ms = UnpolarizedWeights(pi / math.fsum(pi)).spectrum()
        assert p_hs_series(ms) == pytest.approx(0.0, abs=1e-15)
        assert p_bures_series(ms) == pytest.approx(0.0, abs=1e-12)
        assert p_re(ms, ms.block_entropy()) == pytest.approx(0.0, abs=1e-12)


@given(weights, weights)
def test_ranges_and_swap_invariance(a, b):
    state = _product(a, b)
    rep = degrees(state)
    assert 0.0 <= rep.p_hs < 1.0
    assert 0.0 <= rep.p_bures <= 1.0
    assert 0.0 <= rep.p_re < 1.0
    swapped = degrees(state.swapped())
    for x, y in zip(rep.values(), swapped.values()):
        if x is None:
            assert y is None
        else:
            assert x == pytest.approx(y, abs=1e-13)


@given(weights, weights)
def test_relative_entropy_nonnegative(a, b):
    state = _product(a, b)
    ms = manifold_spectrum(state)
    assert min_relative_entropy(ms, ms.block_entropy()) >= 0.0


@given(st.integers(0, 30), st.integers(0, 30))
def test_fock_ordering(M, S):
    rep = degrees(ProductDiagonal(ModeDistribution.fock(M), ModeDistribution.fock(S)))
    assert rep.p_hs >= rep.p_bures
    assert rep.p_hs >= rep.p_re


def test_closest_weights_attain_the_degree(rng):
    ms = random_spectrum(rng, 8)
    for measure, obj, value in [("HS", "HS", p_hs_series(ms)),
                                ("Bures", "BuresFidelity", p_bures_series(ms)),
                                ("RE", "RelEntropy", min_relative_entropy(ms, ms.block_entropy()))]:
        w = closest_unpolarized(ms, measure)
        assert objective_value(obj, ms, w) == pytest.approx(value, abs=1e-13)
        # any other unpolarized state is no closer
        other = UnpolarizedWeights(np.full(ms.p.size, 1.0 / ms.p.size))
        assert objective_value(obj, ms, other) >= value - 1e-13


def test_measure_enum():
    assert Measure("Bures") is Measure.BURES
    with pytest.raises(ValueError):
        Measure("trace")


def test_negative_entropy_detected():
    ms = manifold_spectrum(_product([1, 1], [1, 1]))
    with pytest.raises(NegativeEntropy):
        min_relative_entropy(ms, 10.0)
    # tiny inconsistencies are clamped
    assert min_relative_entropy(ms, ms.block_entropy() + 1e-12) >= 0.0


def test_thermal_series_against_high_precision():
    state = ProductDiagonal(thermal_mode(2.0, DEEP), thermal_mode(1.0, DEEP))
    rep = degrees(state)
    for got, want in zip((rep.p_hs, rep.p_bures, rep.p_re), MP_THERMAL_2_1):
        assert got == pytest.approx(want, abs=1e-10)


@pytest.mark.parametrize("tp,want", [(TwoModePats.of(1, 2, 1, 2), MP_PATS_12_12),
                                     (TwoModePats.of(1, 2, 1, 1), MP_PATS_12_11)])
def test_pats_series_against_high_precision(tp, want):
    rep = degrees(two_mode_state(tp, DEEP))
    for got, ref in zip((rep.p_hs, rep.p_bures, rep.p_re), want):
        assert got == pytest.approx(ref, abs=1e-10)


def test_live_high_precision_oracle():
    # a short run of the mpmath oracle itself, on a small thermal pair
    ref = distance_degrees(thermal_weights(0.5, 60), thermal_weights(0.25, 50))
    state = ProductDiagonal(thermal_mode(0.5, DEEP), thermal_mode(0.25, DEEP))
    ms = manifold_spectrum(state)
    assert p_hs_series(ms) == pytest.approx(ref[0], abs=1e-12)
    assert p_bures_series(ms) == pytest.approx(ref[1], abs=1e-10)
    assert p_re_state(state) == pytest.approx(ref[2], abs=1e-12)
