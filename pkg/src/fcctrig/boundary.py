"""Boundary stratification of the closed fundamental domain.

A boundary point of the rhombic dodecahedron has t_i - t_j = 1 for at
least one pair; collecting the left slots into I and the right slots into
J labels the face/edge/vertex stratum.  Points whose (I, J) labels are
nonempty are identified with binom(|I|+|J|, |I|) lattice-congruent partners
on the boundary, obtained by permuting the slots in I and J.

Coordinate labels in I and J are 1-based.  Classification of node points
must go through the integer index routines; the float routines exist for
user-supplied evaluation points and use tolerances.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .lattice import homo_point, hindex, in_closed_omega_H
from .symmetry import GROUP


def classify(t, tol: float = 1e-9):
    """Stratum label (I, J) of a point of the closed domain.

    I = {i : t_i - t_j = 1 for some j}, J = {j : t_i - t_j = 1 for some i},
    both empty exactly when t is interior.  Equality is tested with abs
    tolerance tol.
    """
    t = homo_point(t)
    if t.shape != (4,):
        raise ValueError("classify expects a single point")
    if not in_closed_omega_H(t, tol=tol):
        raise ValueError("point lies outside the closed fundamental domain")
    I, J = set(), set()
    for i in range(4):
        for j in range(4):
            if i != j and abs(t[i] - t[j] - 1.0) <= tol:
                I.add(i + 1)
                J.add(j + 1)
    return frozenset(I), frozenset(J)


def classify_index(k, n: int):
    """Integer-exact stratum label of the node k/(4n); k must lie in H_n*."""
    k = hindex(k)
    d = k[:, None] - k[None, :]
    if np.any(np.abs(d) > 4 * n):
        raise ValueError("index outside the closed node set for this degree")
    hit = d == 4 * n
    I = frozenset(int(i) + 1 for i in np.nonzero(hit.any(axis=1))[0])
    J = frozenset(int(j) + 1 for j in np.nonzero(hit.any(axis=0))[0])
    return I, J


def _moving_only(labels):
    """Group elements permuting only the given 1-based slots."""
    fixed = [m for m in range(4) if (m + 1) not in labels]
    return [p for p in GROUP if all(p.images[m] == m for m in fixed)]


def congruent_orbit(t, tol: float = 1e-9):
    """All distinct boundary partners of t congruent to it mod the lattice.

    Computed by permuting the slots named in I and J; interior points give
    [t].  The count equals binom(|I|+|J|, |I|) on the open stratum.
    """
    t = homo_point(t)
    I, J = classify(t, tol=tol)
    out = []
    for p in _moving_only(I | J):
        s = p.apply(t)
        if not any(np.max(np.abs(s - q)) < 1e-10 for q in out):
            out.append(s)
    return out


def congruent_orbit_index(k, n: int):
    """Exact variant of congruent_orbit for a node index k in H_n*."""
    k = hindex(k)
    I, J = classify_index(k, n)
    seen, out = set(), []
    for p in _moving_only(I | J):
        s = tuple(int(v) for v in p.apply(k))
        if s not in seen:
            seen.add(s)
            out.append(s)
    return out


def orbit_count(I, J) -> int:
    """Expected orbit size for an open-stratum label."""
    return comb(len(I) + len(J), len(I))
