import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fockpol.exceptions import DomainError
from fockpol.state import (
    ManifoldSpectrum,
    ModeDistribution,
    ProductDiagonal,
    PureExpansion,
    TruncationPolicy,
    UnpolarizedWeights,
    manifold_spectrum,
    mode_moment,
    moment_error_bound,
    von_neumann_entropy,
)

probs = st.lists(st.floats(0.0, 1.0), min_size=1, max_size=8).filter(lambda v: sum(v) > 0.1)


def _dist(weights):
    return ModeDistribution.from_probs(weights, normalize=True)


def test_mode_distribution_validates():
    with pytest.raises(DomainError):
        ModeDistribution([0.5, 0.4])
    with pytest.raises(DomainError):
        ModeDistribution([1.2, -0.2])
    with pytest.raises(DomainError):
        ModeDistribution([])
    d = ModeDistribution([0.5, 0.4], tail_mass=0.1)
    assert d.n_max == 1


def test_from_probs_trims_trailing_zeros():
    d = ModeDistribution.from_probs([0.25, 0.75, 0.0, 0.0])
    assert d.n_max == 1


def test_fock_distribution():
    d = ModeDistribution.fock(3)
    assert d.probs.tolist() == [0, 0, 0, 1]
    assert d.moments == (3.0, 9.0)
    with pytest.raises(DomainError):
        ModeDistribution.fock(-1)


def test_truncation_policy_validates():
    with pytest.raises(DomainError):
        TruncationPolicy(tail_tol=0.0)
    with pytest.raises(DomainError):
        TruncationPolicy(n_max_cap=0)


def test_manifold_spectrum_by_hand():
    # xi = (0.5, 0.5), eta = (0.25, 0.75)
    ms = manifold_spectrum(ProductDiagonal(_dist([1, 1]), _dist([1, 3])))
    assert ms.p.tolist() == pytest.approx([0.125, 0.5, 0.375])
    assert ms.mu[1].tolist() == pytest.approx([0.375, 0.125])
    assert ms.mu[2].tolist() == pytest.approx([0.0, 0.375, 0.0])


@given(probs, probs)
def test_manifold_rows_sum_to_p(a, b):
    ms = manifold_spectrum(ProductDiagonal(_dist(a), _dist(b)))
    assert math.fsum(ms.p) == pytest.approx(1.0, abs=1e-12)
    for N, row in ms.rows():
        assert row.size == N + 1
        assert math.fsum(row) == pytest.approx(ms.p[N], abs=1e-12)


@given(probs, probs)
def test_manifold_matches_double_loop(a, b):
    h, v = _dist(a), _dist(b)
    ms = manifold_spectrum(ProductDiagonal(h, v))
    for n, x in enumerate(h.probs):
        for m, y in enumerate(v.probs):
            assert ms.mu[n + m][n] == pytest.approx(x * y, abs=1e-15)


def test_spectrum_validation():
    with pytest.raises(DomainError):
        ManifoldSpectrum([0.5, 0.5], ([0.5], [0.1, 0.1]))
    with pytest.raises(DomainError):
        ManifoldSpectrum([1.0], ([0.5, 0.5],))


def test_pure_spectrum_rows_and_entropy():
    ms = manifold_spectrum(PureExpansion([0.5, 0.5]))
    assert ms.is_pure
    rows = dict(ms.rows())
    assert rows[1].tolist() == [0.5, 0.0]
    assert ms.block_entropy() == pytest.approx(math.log(2))


def test_unpolarized_weights_spectrum():
    w = UnpolarizedWeights([0.2, 0.8])
    ms = w.spectrum()
    assert ms.mu[1].tolist() == pytest.approx([0.4, 0.4])
    with pytest.raises(DomainError):
        UnpolarizedWeights([0.2, 0.7])


def test_mode_moments():
    d = _dist([1, 2, 1])
    assert mode_moment(d, 1) == pytest.approx(1.0)
    assert mode_moment(d, 2) == pytest.approx(1.5)
    with pytest.raises(DomainError):
        mode_moment(d, 3)
    assert moment_error_bound(ModeDistribution([0.5, 0.5 - 1e-9], 1e-9), 2) == pytest.approx(4e-9)


def test_von_neumann_entropy():
    state = ProductDiagonal(_dist([1, 1]), _dist([1, 1, 1, 1]))
    assert von_neumann_entropy(state) == pytest.approx(math.log(8))
    assert von_neumann_entropy(PureExpansion([0.5, 0.5])) == 0.0


def test_unsupported_state_type():
    with pytest.raises(TypeError):
        manifold_spectrum(np.eye(2))
