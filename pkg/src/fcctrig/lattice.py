"""Core geometry of the face-centered cubic lattice.

Points of R^3 are represented in homogeneous coordinates: quadruples
t = (t1, t2, t3, t4) summing to zero.  The generator matrix A of the fcc
lattice, the lifting matrix U and the integer matrix H are stored as module
constants and satisfy U^T U = I and A = U^T H exactly.

Frequencies live in the set ``H`` of integer zero-sum quadruples whose
components are pairwise congruent mod 4; the exponential attached to a
frequency k is phi(k, t) = exp(i*pi/2 * k.t).

The fundamental domain Omega_H is the rhombic dodecahedron in homogeneous
coordinates, half open: -1 < t_i - t_j <= 1 for all i < j.
"""

from __future__ import annotations

import numpy as np

# fcc generator matrix, det A = 2
A_MATRIX = np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]], dtype=np.int64)

# integer lift of the lattice into the zero-sum hyperplane of R^4
H_MATRIX = np.array(
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]], dtype=np.int64
)

# orthonormal columns; A = U^T H
U_MATRIX = 0.5 * np.array(
    [[-1, 1, 1], [1, -1, 1], [1, 1, -1], [-1, -1, -1]], dtype=float
)

_A_INV = np.linalg.inv(A_MATRIX.astype(float))


def homo_point(values) -> np.ndarray:
    """Build homogeneous coordinates from 4 reals, shape (..., 4).

    The input is re-projected onto the zero-sum hyperplane by subtracting
    the coordinate mean, so small drift from composed arithmetic cannot
    accumulate.
    """
    t = np.asarray(values, dtype=float)
    if t.shape[-1] != 4:
        raise ValueError("homogeneous points need 4 components")
    return t - t.mean(axis=-1, keepdims=True)


def is_hindex(values) -> bool:
    """True if values is a frequency index: integer, zero-sum, congruent mod 4."""
    k = np.asarray(values)
    if k.shape != (4,) or not np.issubdtype(k.dtype, np.integer):
        return False
    if int(k.sum()) != 0:
        return False
    r = np.mod(k - k[0], 4)
    return bool(np.all(r == 0))


def hindex(values) -> np.ndarray:
    """Validate and return a frequency index as an int64 array of shape (4,)."""
    k = np.asarray(values)
    if k.shape != (4,):
        raise ValueError("frequency index needs exactly 4 components")
    ki = np.asarray(k, dtype=np.int64)
    if not np.array_equal(ki, np.asarray(k)):
        raise ValueError("frequency index must be integer")
    if not is_hindex(ki):
        raise ValueError(f"{tuple(ki)} is not a valid frequency index")
    return ki


def to_homogeneous(x) -> np.ndarray:
    """Map Cartesian (..., 3) to homogeneous (..., 4) via t = U x."""
    x = np.asarray(x, dtype=float)
    return x @ U_MATRIX.T


def from_homogeneous(t) -> np.ndarray:
    """Map homogeneous (..., 4) to Cartesian (..., 3) via x = U^T t."""
    t = np.asarray(t, dtype=float)
    return t @ U_MATRIX


def in_omega_H(t) -> np.ndarray:
    """Membership in the half-open fundamental domain.

    Exact floating point comparisons on purpose: the half-open convention
    -1 < t_i - t_j <= 1 tiles space without overlap, and callers that need
    tolerance should use in_closed_omega_H.  Node membership decisions must
    be made on integer indices, never on the floats produced here.
    """
    t = np.asarray(t, dtype=float)
    ok = np.ones(t.shape[:-1], dtype=bool)
    for i in range(4):
        for j in range(i + 1, 4):
            d = t[..., i] - t[..., j]
            ok &= (d > -1.0) & (d <= 1.0)
    return ok


def in_closed_omega_H(t, tol: float = 1e-12) -> np.ndarray:
    """Membership in the closure, |t_i - t_j| <= 1 within tol."""
    t = np.asarray(t, dtype=float)
    ok = np.ones(t.shape[:-1], dtype=bool)
    for i in range(4):
        for j in range(i + 1, 4):
            d = np.abs(t[..., i] - t[..., j])
            ok &= d <= 1.0 + tol
    return ok


# Offsets v in {-1,0}^3: the reduction below first lands in A[0,1)^3, and
# Omega_H is covered by that cell's neighbors with nonpositive offsets.
_FOLD_SHIFTS = np.array(
    [[i, j, k] for i in (-1, 0) for j in (-1, 0) for k in (-1, 0)],
    dtype=np.int64,
)


def fold_to_omega_H(t) -> np.ndarray:
    """Translate t by the lattice into the fundamental domain.

    Works through Cartesian coordinates: subtract floor(A^-1 x) to land in
    the unit cell A[0,1)^3, then test the 8 candidate translates by A v,
    v in {-1,0}^3.  Exactly one candidate passes the half-open membership
    test, which makes the fold idempotent and translation invariant.
    """
    t = homo_point(t)
    x = from_homogeneous(t)
    u = x @ _A_INV.T
    x0 = x - np.floor(u) @ A_MATRIX.T
    # candidates, shape (..., 8, 4)
    cand = x0[..., None, :] + (_FOLD_SHIFTS @ A_MATRIX.T).astype(float)
    tc = to_homogeneous(cand)
    hit = in_omega_H(tc)
    idx = np.argmax(hit, axis=-1)
    if not np.all(np.take_along_axis(hit, idx[..., None], axis=-1)):
        raise RuntimeError("fold failed to locate a fundamental-domain translate")
    out = np.take_along_axis(tc, idx[..., None, None], axis=-2)
    return homo_point(out[..., 0, :])


def phi(k, t) -> np.ndarray:
    """Exponential phi_k(t) = exp(i*pi/2 * k.t) for k in H, t (..., 4)."""
    k = hindex(k)
    t = np.asarray(t, dtype=float)
    return np.exp(0.5j * np.pi * (t @ k.astype(float)))
