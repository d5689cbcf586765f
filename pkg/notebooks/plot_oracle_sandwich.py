"""
Checking the bounds against the convex roof
===========================================

For mixed states the exact measures are convex roofs and hard to compute.
Any pure-state decomposition gives an upper bound, so sampling
decompositions gives a cheap consistency check: lower bound <= sampled upper
bound.
"""

import numpy as np

from gmebounds import coherence, gme, oracle, states

# Random low-rank states are rarely close enough to any pure state for the
# GME bounds to be non-zero, but the l1 bound usually is.
rng = np.random.default_rng(3)
for i in range(4):
    rho = states.random_density((2, 2, 2), rank=2, rng=rng)
    # take rho's dominant eigenvector as the reference state
    _, vecs = np.linalg.eigh(rho.matrix)
    phi = states.from_amplitudes((2, 2, 2), vecs[:, -1])
    g = gme.gme_bounds(rho, phi)
    c = coherence.coherence_bounds(rho, phi)
    print(f"state {i}: F = {g.fidelity:.3f}")
    for m in oracle.GME_MEASURES:
        up = oracle.convex_roof_upper(rho, m, trials=60, seed=i)
        print(f"   {m:>13}: {g.bounds[m]:.4f} <= {up:.4f}")
    up = oracle.convex_roof_upper(rho, "l1", trials=60, seed=i)
    print(f"   {'l1':>13}: {c.bounds['l1']:.4f} <= {up:.4f}")

# A noisy GHZ state: the sandwich is much tighter.
phi = states.ghz(3)
rho = states.white_noise_mix(phi, 0.9)
lb = gme.gme_bounds(rho, phi).bounds["cren"]
print("noisy GHZ3:", round(lb, 4), "<=", round(oracle.convex_roof_upper(rho, "cren", trials=60), 4))
