"""
Checking the optimum against brute force
========================================

The closest unpolarized state has a closed form for each distance.  This
script minimises the distances numerically over the unpolarized simplex
and compares both the distance value and the optimal weights.
"""

import numpy as np

from fockpol.distances import closest_unpolarized, min_relative_entropy, p_bures_series, p_hs_series
from fockpol.oracle import SimplexProblem, minimize_over_unpolarized, random_spectrum, tv_distance

rng = np.random.default_rng(7)
ms = random_spectrum(rng, 10)

analytic = {
    "HS": (p_hs_series(ms), "HS"),
    "BuresFidelity": (p_bures_series(ms), "Bures"),
    "RelEntropy": (min_relative_entropy(ms, ms.block_entropy()), "RE"),
}
for objective, (value, measure) in analytic.items():
    found, weights = minimize_over_unpolarized(SimplexProblem(objective, ms))
    tv = tv_distance(weights, closest_unpolarized(ms, measure))
    print(f"{objective:>14s}: analytic {value:.12f}  numeric {found:.12f}  weights TV {tv:.1e}")
