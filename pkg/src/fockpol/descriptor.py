"""JSON state descriptors and family-aware evaluation.

Accepted shapes::

    {"kind": "thermal", "n1": ..., "n2": ...}
    {"kind": "pats", "n1": ..., "M": ..., "n2": ..., "S": ...}
    {"kind": "fock", "M": ..., "S": ...}
    {"kind": "custom", "xi": [...], "eta": [...]}
"""

from __future__ import annotations

import json

from .distances import degrees
from .exceptions import DomainError, FockPolError
from .pats import TwoModePats, fock_degrees, pats_degrees, two_mode_state
from .state import DEFAULT_POLICY, ModeDistribution, ProductDiagonal
from .thermal import ThermalPair, thermal_degrees, thermal_mode

_FIELDS = {
    "thermal": ("n1", "n2"),
    "pats": ("n1", "M", "n2", "S"),
    "fock": ("M", "S"),
    "custom": ("xi", "eta"),
}


class ParseError(FockPolError, ValueError):
    """A state descriptor is malformed."""


def load_descriptor(text):
    try:
        desc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    check_descriptor(desc)
    return desc


def check_descriptor(desc):
    if not isinstance(desc, dict):
        raise ParseError("descriptor must be a JSON object")
    kind = desc.get("kind")
    if kind not in _FIELDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {sorted(_FIELDS)}")
    missing = [k for k in _FIELDS[kind] if k not in desc]
    if missing:
        raise ParseError(f"{kind} descriptor is missing {missing}")
    extra = set(desc) - set(_FIELDS[kind]) - {"kind"}
    if extra:
        raise ParseError(f"{kind} descriptor has unexpected fields {sorted(extra)}")


def _integer(desc, key):
    value = desc[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
        raise ParseError(f"{key} must be an integer, got {value!r}")
    return int(value)


def _real(desc, key):
    value = desc[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{key} must be a number, got {value!r}")
    return float(value)


def family(desc):
    """Typed parameters for a descriptor: ThermalPair, TwoModePats, (M, S) or ProductDiagonal."""
    check_descriptor(desc)
    kind = desc["kind"]
    try:
        if kind == "thermal":
            return ThermalPair(_real(desc, "n1"), _real(desc, "n2"))
        if kind == "pats":
            return TwoModePats.of(_real(desc, "n1"), _integer(desc, "M"),
                                  _real(desc, "n2"), _integer(desc, "S"))
        if kind == "fock":
            M, S = _integer(desc, "M"), _integer(desc, "S")
            if M < 0 or S < 0:
                raise DomainError("photon numbers must be nonnegative")
            return M, S
        return ProductDiagonal(ModeDistribution.from_probs(desc["xi"]),
                               ModeDistribution.from_probs(desc["eta"]))
    except (DomainError, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def build_state(desc, policy=DEFAULT_POLICY):
    """Two-mode product state described by ``desc``."""
    params = family(desc)
    if isinstance(params, ThermalPair):
        return ProductDiagonal(thermal_mode(params.n1, policy), thermal_mode(params.n2, policy))
    if isinstance(params, TwoModePats):
        return two_mode_state(params, policy)
    if isinstance(params, tuple):
        return ProductDiagonal(ModeDistribution.fock(params[0]), ModeDistribution.fock(params[1]))
    return params


def evaluate(desc, policy=DEFAULT_POLICY):
    """Polarization report, using closed forms whenever the family has them."""
    params = family(desc)
    if isinstance(params, ThermalPair):
        return thermal_degrees(params, policy)
    if isinstance(params, TwoModePats):
        return pats_degrees(params, policy)
    if isinstance(params, tuple):
        return fock_degrees(*params)
    return degrees(params)
