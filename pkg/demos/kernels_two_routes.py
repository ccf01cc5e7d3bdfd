"""Compact kernel formulas against their brute-force exponential sums.

Every closed form ships with a `_direct` oracle that sums exponentials
over the defining index set.  The compact route costs O(1) per point
instead of O(n^3)+ and agrees to rounding, including on the removable
singularities where a coordinate is an integer.
"""

import time

import numpy as np

from fcctrig import generate_Hn_star
from fcctrig.kernels import (
    dirichlet,
    dirichlet_direct,
    dirichlet_product,
    phi_n_star,
    phi_n_star_direct,
)

rng = np.random.default_rng(11)
pts = rng.uniform(-1, 1, size=(4000, 4))
pts -= pts.mean(axis=1, keepdims=True)
# push some points onto the singular set of the sine ratios
pts[:200, 0] = np.round(pts[:200, 0])
pts[:200] -= pts[:200].mean(axis=1, keepdims=True)

for n in (3, 6, 9):
    t0 = time.perf_counter()
    fast = dirichlet(n, pts)
    t1 = time.perf_counter()
    slow = dirichlet_direct(n, pts)
    t2 = time.perf_counter()
    prod = dirichlet_product(n, pts)
    err = max(np.abs(fast - slow).max(), np.abs(prod - slow).max())
    terms = len(generate_Hn_star(n))
    print(
        f"D_{n}: compact {t1 - t0:6.3f}s  direct {t2 - t1:6.3f}s "
        f"({terms} terms)  max err {err:.2e}"
    )

print()
for n in (2, 4, 6):
    a = phi_n_star(n, pts)
    b = phi_n_star_direct(n, pts)
    print(f"Phi*_{n}: compact vs weighted sum, max err {np.abs(a - b).max():.2e}")

# cardinal values on the node lattice: 1 exactly on the class of 0
n = 3
idx = generate_Hn_star(n)
nodes = idx.astype(float) / (4 * n)
vals = phi_n_star(n, nodes)
at_zero = vals[np.all(idx == 0, axis=1)][0]
off = vals[~np.all(idx == 0, axis=1)]
print(f"\nPhi*_{n} at its own nodes: value at 0 = {at_zero:.6f}, "
      f"max |elsewhere| = {np.abs(off).max():.2e}")
