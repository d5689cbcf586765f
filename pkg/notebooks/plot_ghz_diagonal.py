"""
GHZ-diagonal states: when the bound is tight
============================================

For states diagonal in the GHZ basis the genuine negativity is known in
closed form, max(2 F_max - 1, 0). The fidelity bound with the best GHZ
reference state reproduces it exactly.
"""

import numpy as np

from gmebounds import gme, oracle, states
from gmebounds.tensor import fidelity_pure

rng = np.random.default_rng(7)
basis = states.ghz_basis(3)
profile = gme.profile_phi(basis[0])   # every GHZ basis state shares it

print(f"{'F_max':>8} {'bound':>10} {'exact':>10}")
for _ in range(8):
    p = rng.dirichlet(np.full(8, 0.4))
    rho = states.ghz_diagonal(p)
    fids = np.array([fidelity_pure(rho, b) for b in basis])
    phi = basis[int(np.argmax(fids))]
    lb = gme.gme_bounds(rho, phi, profile).bounds["cren"]
    print(f"{fids.max():8.4f} {lb:10.6f} {oracle.ghz_diagonal_analytic(p):10.6f}")

# Picking a non-optimal GHZ reference only loosens the bound.
p = np.array([0.8, 0.1, 0.1, 0, 0, 0, 0, 0])
rho = states.ghz_diagonal(p)
print("best phi :", gme.gme_bounds(rho, basis[0]).bounds["cren"])
print("other phi:", gme.gme_bounds(rho, basis[1]).bounds["cren"])
