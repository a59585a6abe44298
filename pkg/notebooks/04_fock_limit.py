"""
Fock states and the vacuum
==========================

A two-mode Fock state |M, S> sits in a single excitation manifold, so
every distance degree depends on N = M + S alone while the Stokes degrees
see only the imbalance.  Setting the thermal occupancy of a PATS to zero
lands exactly on these values.
"""

from fockpol.pats import TwoModePats, fock_degrees, pats_degrees

print(f"{'M':>3s} {'S':>3s} {'P1':>7s} {'P2':>7s} {'P_HS':>7s} {'P_B':>7s} {'P_RE':>7s}")
for M, S in ((1, 0), (2, 1), (2, 2), (5, 0), (10, 10)):
    rep = fock_degrees(M, S)
    print(f"{M:3d} {S:3d} " + " ".join(f"{v:7.4f}" for v in rep.values()))

# PATS with zero thermal occupancy
rep = pats_degrees(TwoModePats.of(0.0, 3, 0.0, 1))
print("\nPATS(n=0, M=3) x PATS(n=0, S=1):", [round(v, 6) for v in rep.values()])

# the vacuum has no Stokes degrees at all
print("vacuum:", fock_degrees(0, 0).as_dict())
