"""
Adding photons to thermal light
===============================

A photon-added thermal state (PATS) is a thermal mode with M extra photons
pushed in by the creation operator.  Compared with the bare thermal pair,
the Stokes degree P1 drops while the distance-based degrees rise.
"""

from fockpol.pats import PatsSpec, TwoModePats, pats_degrees, pats_mode, pats_moments
from fockpol.thermal import ThermalPair, thermal_degrees

# a single mode first: the photon-number distribution moves away from zero
spec = PatsSpec(1.0, 2)
probs = pats_mode(spec).probs
print("PATS(n=1, M=2) weights for l = 0..8:", [round(float(w), 4) for w in probs[:9]])
print("closed-form <N>, <N^2>:", pats_moments(spec))

# two modes, symmetric and asymmetric photon addition, n2 = 1
print(f"\n{'eps':>5s} {'case':>10s} {'P1':>8s} {'P_B':>8s} {'P_RE':>8s}")
for eps in (0.5, 2.0, 5.0, 10.0):
    th = thermal_degrees(ThermalPair(1 + eps, 1))
    print(f"{eps:5.1f} {'thermal':>10s} {th.p1:8.4f} {th.p_bures:8.4f} {th.p_re:8.4f}")
    for M, S in ((2, 2), (1, 2)):
        rep = pats_degrees(TwoModePats.of(1 + eps, M, 1, S))
        print(f"{eps:5.1f} {f'M={M},S={S}':>10s} {rep.p1:8.4f} {rep.p_bures:8.4f} {rep.p_re:8.4f}")

# with an uneven addition the Stokes ordering flips for very small gaps
for eps in (0.0, 0.25, 0.5):
    pats = pats_degrees(TwoModePats.of(1 + eps, 1, 1, 2)).p1
    th = thermal_degrees(ThermalPair(1 + eps, 1)).p1
    print(f"eps={eps}: P1 pats={pats:.4f}  thermal={th if th is None else round(th, 4)}")
