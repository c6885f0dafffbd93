"""Laguerre polynomials and the overlap of photon-added coherent states.

Adding k photons to |alpha> and |-alpha> makes the two states *more*
distinguishable: their overlap exp(-2|alpha|^2) L_k(|alpha|^2) / L_k(-|alpha|^2)
drops faster than the bare coherent overlap and even changes sign past the
first root of L_k.
"""
import math

import numpy as np

from ecslab import fock
from ecslab.laguerre import laguerre, overlap_p

# The recurrence is stable where the factorial sum is not.
print("L_30(20) by recurrence:", laguerre(30, 20.0))

print("\n|alpha|^2   k=0        k=1        k=2        k=4")
for x in [0.1, 0.5, 1.0, 2.0, 3.0]:
    a = math.sqrt(x)
    print(f"{x:8.2f}  " + "  ".join(f"{overlap_p(a, k):+.6f}" for k in (0, 1, 2, 4)))

# The same numbers from brute force on a truncated Fock space.
a, k = 1.0, 2
trunc = fock.auto_truncation(a, k)
u = fock.create(fock.coherent(a, trunc), k).normalize()
v = fock.create(fock.coherent(-a, trunc), k).normalize()
print(f"\nFock-space overlap for |alpha|^2=1, k=2: {fock.inner_mode(u, v).real:+.12f}")
print(f"closed form:                            {overlap_p(a, k):+.12f}")
print("weight in top two levels:", np.sum(np.abs(u.amps[-2:]) ** 2))
