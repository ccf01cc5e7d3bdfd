"""Maps between the homogeneous tetrahedron and its R^3 realizations.

Three coordinatizations of the same simplex show up:

* homogeneous: 0 <= t1-t2, t2-t3, t3-t4 and t1-t4 <= 1 (zero-sum t);
* regular (corner) coordinates: 0 <= x3 <= x2 <= x1 <= 1, reached by
  x_i = t_i - t_4, node indices become (k1,k2,k3)/n with
  0 <= k3 <= k2 <= k1 <= n;
* Cartesian: the image of the homogeneous simplex under the lattice
  projection, cut out by 0 <= x3 +- x2 <= 1 and 0 <= x2 +- x1 <= 1.

The interpolation and cubature operators live on the homogeneous form;
this module moves data to and from the other two.
"""

from __future__ import annotations

import numpy as np

from .interpolation import interp_Ln_star
from .lattice import hindex


def index_h_to_regular(j) -> tuple:
    """Reduced index (j_i - j_4)/4, i = 1..3; exact on valid frequency indices."""
    j = hindex(j)
    return tuple(int((j[i] - j[3]) // 4) for i in range(3))


def index_regular_to_h(k) -> np.ndarray:
    """Inverse of index_h_to_regular."""
    k = np.asarray(k, dtype=np.int64)
    if k.shape != (3,):
        raise ValueError("regular index needs 3 components")
    s = int(k.sum())
    return np.array([4 * k[0] - s, 4 * k[1] - s, 4 * k[2] - s, -s], dtype=np.int64)


def point_h_to_regular(t) -> np.ndarray:
    """x_i = t_i - t_4 maps the homogeneous simplex onto 0 <= x3 <= x2 <= x1 <= 1."""
    t = np.asarray(t, dtype=float)
    return t[..., :3] - t[..., 3:]


def point_regular_to_h(x) -> np.ndarray:
    """Homogenize regular coordinates: append t_4 = -(x1+x2+x3)/4."""
    x = np.asarray(x, dtype=float)
    t4 = -x.sum(axis=-1, keepdims=True) / 4.0
    return np.concatenate([x + t4, t4], axis=-1)


def in_tetra_H(t, tol: float = 1e-12) -> np.ndarray:
    """Closed homogeneous simplex membership."""
    t = np.asarray(t, dtype=float)
    g1 = t[..., 0] - t[..., 1]
    g2 = t[..., 1] - t[..., 2]
    g3 = t[..., 2] - t[..., 3]
    top = t[..., 0] - t[..., 3]
    return (g1 >= -tol) & (g2 >= -tol) & (g3 >= -tol) & (top <= 1.0 + tol)


def in_tetra_regular(x, tol: float = 1e-12) -> np.ndarray:
    """Closed corner-simplex membership, 0 <= x3 <= x2 <= x1 <= 1."""
    x = np.asarray(x, dtype=float)
    return (
        (x[..., 2] >= -tol)
        & (x[..., 1] >= x[..., 2] - tol)
        & (x[..., 0] >= x[..., 1] - tol)
        & (x[..., 0] <= 1.0 + tol)
    )


def in_tetra_cartesian(x, tol: float = 1e-12) -> np.ndarray:
    """Membership in the Cartesian image: 0 <= x3 +- x2 <= 1, 0 <= x2 +- x1 <= 1."""
    x = np.asarray(x, dtype=float)
    ok = np.ones(x.shape[:-1], dtype=bool)
    for expr in (
        x[..., 2] - x[..., 1],
        x[..., 2] + x[..., 1],
        x[..., 1] - x[..., 0],
        x[..., 1] + x[..., 0],
    ):
        ok &= (expr >= -tol) & (expr <= 1.0 + tol)
    return ok


def regular_interpolate(f3, n: int, x) -> np.ndarray:
    """Cosine interpolation driven entirely in regular coordinates.

    f3 is sampled at the nodes (k1,k2,k3)/n; x may be a single point or an
    array (..., 3).
    """

    def f(t):
        return f3(point_h_to_regular(t))

    interp = interp_Ln_star(f, n)
    return interp(point_regular_to_h(x))
