"""
Polarization of two thermal modes
=================================

Two thermal modes with mean occupancies n1 and n2 are unpolarized exactly
when n1 == n2.  Here we open the gap ``eps = n1 - n2`` at fixed n2 = 1 and
watch the five degrees grow.  The Hilbert-Schmidt degree is the odd one
out: it peaks at an intermediate gap and then decays.
"""

import numpy as np

from fockpol.sweep import HEADER, SweepConfig, epsilon_range, sweep_table
from fockpol.thermal import ThermalPair, thermal_degrees

# equal occupancies: every degree vanishes (the vacuum has no Stokes degrees)
for n in (0.0, 0.5, 5.0):
    print(f"n1 = n2 = {n}:", thermal_degrees(ThermalPair(n, n)).as_dict())

# sweep the gap on a quarter-step grid
table = sweep_table(SweepConfig("thermal", 1.0, epsilon_range(10, 0.25)))
print()
print("  ".join(f"{h:>9s}" for h in HEADER))
for row in table[::4]:
    print("  ".join(f"{v:9.5f}" for v in row))

# the Hilbert-Schmidt column has a single interior maximum
hs = table[:, 3]
k = int(np.argmax(hs))
print(f"\nHS maximum {hs[k]:.6f} at eps = {table[k, 0]}, HS(eps=10) = {hs[-1]:.6f}")
