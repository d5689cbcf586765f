"""
The W state under white noise
=============================

Mixing the three-qubit W state with the maximally mixed state,
rho(p) = p |W><W| + (1 - p) I/8, the fidelity is (7p + 1)/8. Since the W
state has s1' = 2/3, GME is certified once F > 2/3, i.e. p > 13/21.
"""

import numpy as np

from gmebounds import gme, repro, states

phi = states.w_state(3)
profile = gme.profile_phi(phi)
print("s1' =", profile.s1_prime)
print("threshold p =", 13 / 21)

curve = repro.fig3(step=0.05)
for p, fid, S, lb in curve:
    bar = "#" * int(round(lb * 40))
    print(f"p={p:4.2f}  F={fid:.4f}  N_GME >= {lb:.4f} {bar}")

# Closed form for comparison.
p = np.array([c[0] for c in curve])
closed = np.maximum(((7 * p + 1) / 8) / (2 / 3) - 1, 0)
print("max deviation from closed form:", np.max(np.abs(closed - [c[3] for c in curve])))
