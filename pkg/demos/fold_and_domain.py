"""Fold arbitrary points into the fundamental rhombic dodecahedron.

Shows the homogeneous coordinate convention, the half-open membership
test, and that folding is a lattice translation (exponentials with valid
frequencies cannot tell the difference).
"""

import numpy as np

from fcctrig import (
    fold_to_omega_H,
    from_homogeneous,
    in_omega_H,
    phi,
    to_homogeneous,
)

rng = np.random.default_rng(7)

# random zero-sum points, deliberately far outside the domain
t = rng.uniform(-4, 4, size=(5, 4))
t -= t.mean(axis=1, keepdims=True)

folded = fold_to_omega_H(t)
print("point -> folded representative")
for a, b in zip(t, folded):
    print(f"  {np.round(a, 3)} -> {np.round(b, 3)}")
print("all folded points inside:", bool(in_omega_H(folded).all()))

# the move is a lattice vector: valid exponentials agree before and after
k = np.array([6, 2, -2, -6])
err = np.abs(phi(k, t) - phi(k, folded)).max()
print(f"max |phi_k(t) - phi_k(fold t)| = {err:.2e}")

# round trip between homogeneous and Cartesian coordinates
x = from_homogeneous(folded)
back = to_homogeneous(x)
print(f"coordinate round trip error: {np.abs(back - folded).max():.2e}")

# the domain is half open: opposite boundary points get one representative
edge = np.array([0.5, -0.5, 0.0, 0.0])
print("t1 - t2 = +1 kept:", bool(in_omega_H(edge)))
print("t1 - t2 = -1 folded to the kept side:", fold_to_omega_H(-edge).tolist())
