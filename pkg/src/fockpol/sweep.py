"""Parameter sweeps in the occupancy gap ``epsilon = n1 - n2``."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .pats import TwoModePats, pats_degrees
from .state import DEFAULT_POLICY
from .thermal import ThermalPair, thermal_degrees

HEADER = ("epsilon", "P1", "P2", "P_HS", "P_B", "P_RE")


@dataclass(frozen=True)
class SweepConfig:
    family: str
    n2: float
    epsilon_grid: tuple
    M: int = 0
    S: int = 0
    output: str | None = None

    def __post_init__(self):
        if self.family not in ("thermal", "pats"):
            raise DomainError(f"family must be 'thermal' or 'pats', got {self.family!r}")
        if self.n2 < 0:
            raise DomainError("n2 must be nonnegative")
        grid = tuple(float(e) for e in self.epsilon_grid)
        if not grid:
            raise DomainError("epsilon grid is empty")
        if grid[0] < 0 or any(b <= a for a, b in zip(grid, grid[1:])):
            raise DomainError("epsilon grid must be nonnegative and strictly increasing")
        object.__setattr__(self, "epsilon_grid", grid)


def epsilon_range(stop, step, start=0.0):
    """Evenly spaced grid ``start, start+step, ..., stop`` (inclusive)."""
    if step <= 0:
        raise DomainError("step must be positive")
    count = int(round((stop - start) / step)) + 1
    return tuple(start + step * k for k in range(count))


def sweep_point(config, eps, policy=DEFAULT_POLICY):
    n1 = config.n2 + eps
    if config.family == "thermal":
        return thermal_degrees(ThermalPair(n1, config.n2), policy)
    return pats_degrees(TwoModePats.of(n1, config.M, config.n2, config.S), policy)


def sweep_rows(config, policy=DEFAULT_POLICY):
    """One ``(epsilon, report)`` pair per grid point, in grid order."""
    return [(eps, sweep_point(config, eps, policy)) for eps in config.epsilon_grid]


def sweep_table(config, policy=DEFAULT_POLICY):
    """Sweep as a float array with NaN for undefined Stokes entries."""
    rows = []
    for eps, rep in sweep_rows(config, policy):
        rows.append([eps] + [np.nan if v is None else v for v in rep.values()])
    return np.array(rows)


def _cell(value):
    return "" if value is None else format(value, ".17g")


def write_csv(rows, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(HEADER)
    for eps, rep in rows:
        writer.writerow([_cell(eps)] + [_cell(v) for v in rep.values()])


def to_csv(rows):
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def read_csv(stream):
    """Parse a sweep CSV back into a list of dicts (``None`` for empty cells)."""
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != HEADER:
        raise DomainError(f"unexpected CSV header {reader.fieldnames}")
    return [{k: (float(v) if v != "" else None) for k, v in row.items()} for row in reader]
