"""Quantum degrees of polarization for Fock-diagonal two-mode states."""

from .distances import (
    Measure,
    PolarizationReport,
    closest_unpolarized,
    degrees,
    p_bures_series,
    p_hs_series,
    p_re,
    p_re_state,
    pure_degrees,
)
from .exceptions import (
    DomainError,
    FockPolError,
    NegativeEntropy,
    NoConvergence,
    TruncationOverflow,
    VacuumUndefined,
)
from .pats import PatsSpec, TwoModePats, fock_degrees, pats_degrees, pats_mode
from .state import (
    ManifoldSpectrum,
    ModeDistribution,
    ProductDiagonal,
    PureExpansion,
    TruncationPolicy,
    UnpolarizedWeights,
    manifold_spectrum,
    mode_moment,
    von_neumann_entropy,
)
from .stokes import StokesSummary, p1, p2, stokes_summary
from .thermal import ThermalPair, thermal_degrees, thermal_mode

__version__ = "0.1.0"
