"""Frequency and node index sets with their strata and weights.

All sets are enumerated through the reduced coordinates k'_i = (k_i - k_4)/4,
which identify the frequency set with Z^3; membership conditions become
small box constraints there, so generation is exact integer arithmetic with
no scanning of a large bounding region.

Weights are exact rationals (Fraction); they convert to float only when a
quadrature sum is actually formed.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from .boundary import classify_index
from .lattice import hindex

TETRA_WEIGHTS = {"interior": 24, "face": 12, "edge1": 6, "edge2": 4, "vertex": 1}

_C_WEIGHTS = {
    (0, 0): Fraction(1),
    (1, 1): Fraction(1, 2),
    (1, 2): Fraction(1, 3),
    (2, 1): Fraction(1, 3),
    (1, 3): Fraction(1, 4),
    (3, 1): Fraction(1, 4),
    (2, 2): Fraction(1, 6),
}


def _from_reduced(kp: np.ndarray) -> np.ndarray:
    """Map reduced rows (..., 3) back to frequency rows (..., 4)."""
    kp = np.asarray(kp, dtype=np.int64)
    s = kp.sum(axis=-1, keepdims=True)
    return np.concatenate([4 * kp - s, -s], axis=-1)


def to_reduced(k) -> np.ndarray:
    """Reduced coordinates ((k_i - k_4)/4 for i = 1..3) of one or many indices."""
    k = np.asarray(k, dtype=np.int64)
    return (k[..., :3] - k[..., 3:]) // 4


def _reduced_box(lo: int, hi: int) -> np.ndarray:
    r = np.arange(lo, hi + 1, dtype=np.int64)
    g = np.stack(np.meshgrid(r, r, r, indexing="ij"), axis=-1)
    return g.reshape(-1, 3)


def _lexsort_rows(rows: np.ndarray) -> np.ndarray:
    order = np.lexsort(rows.T[::-1])
    return rows[order]


def generate_Hn(n: int) -> np.ndarray:
    """The 4n^3 interpolation frequencies: -4n < k_i - k_j <= 4n, half open."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    kp = _reduced_box(-n + 1, n)
    keep = np.ones(len(kp), dtype=bool)
    for i in range(3):
        for j in range(i + 1, 3):
            d = kp[:, i] - kp[:, j]
            keep &= (d > -n) & (d <= n)
    return _lexsort_rows(_from_reduced(kp[keep]))


def generate_Hn_star(n: int) -> np.ndarray:
    """The symmetric node/frequency set: |k_i - k_j| <= 4n; (n+1)^4 - n^4 members."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    kp = _reduced_box(-n, n)
    keep = np.ones(len(kp), dtype=bool)
    for i in range(3):
        for j in range(i + 1, 3):
            keep &= np.abs(kp[:, i] - kp[:, j]) <= n
    return _lexsort_rows(_from_reduced(kp[keep]))


def generate_Hn_circ(n: int) -> np.ndarray:
    """Strictly interior nodes, |k_i - k_j| < 4n; equals the star set of n-1."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return np.zeros((1, 4), dtype=np.int64)
    return generate_Hn_star(n - 1)


def stratum_of_index(k, n: int):
    """(|I|, |J|) of the node k/(4n); (0, 0) for interior nodes."""
    I, J = classify_index(k, n)
    return len(I), len(J)


def weight_c(k, n: int) -> Fraction:
    """Quadrature weight of a symmetric-rule node, 1 over binom(|I|+|J|, |I|)."""
    return _C_WEIGHTS[stratum_of_index(k, n)]


def stratum_counts(n: int) -> dict:
    """Map (|I|, |J|) -> number of nodes in that stratum of the star set."""
    counts = {}
    for k in generate_Hn_star(n):
        lab = stratum_of_index(k, n)
        counts[lab] = counts.get(lab, 0) + 1
    return counts


def tetra_stratum(k, n: int) -> str:
    """Stratum of a monotone index within the tetrahedral node set.

    Classified from the explicit inequality chains: which of the four face
    conditions k1 = k2, k2 = k3, k3 = k4, k1 = k4 + 4n hold determines
    interior, face, the two edge types, or vertex.
    """
    k = hindex(k)
    k1, k2, k3, k4 = (int(v) for v in k)
    if not (k1 >= k2 >= k3 >= k4):
        raise ValueError("tetrahedral index must be non-increasing")
    if k1 > k4 + 4 * n:
        raise ValueError("index outside the tetrahedral set for this degree")
    d = k1 == k4 + 4 * n
    eq12, eq23, eq34 = k1 == k2, k2 == k3, k3 == k4
    neq = int(eq12) + int(eq23) + int(eq34)
    if neq == 0:
        return "face" if d else "interior"
    if neq == 3:
        return "vertex"
    if eq12 and eq34:
        return "vertex" if d else "edge1"
    if neq == 2:
        return "vertex" if d else "edge2"
    # exactly one equality
    if d:
        return "edge1" if eq23 else "edge2"
    return "face"


def weight_lambda(k, n: int) -> int:
    return TETRA_WEIGHTS[tetra_stratum(k, n)]


def lambda_nodes(n: int) -> np.ndarray:
    """Tetrahedral index set: monotone members of the star set, binom(n+3,3) rows."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    rows = [
        (a, b, c)
        for a in range(n + 1)
        for b in range(a + 1)
        for c in range(b + 1)
    ]
    return _from_reduced(np.array(rows, dtype=np.int64).reshape(-1, 3))


def lambda_circ_nodes(n: int) -> np.ndarray:
    """Strictly interior tetrahedral indices, binom(n-1,3) rows (empty for n < 4)."""
    rows = [
        (a, b, c)
        for a in range(1, n)
        for b in range(1, a)
        for c in range(1, b)
    ]
    if not rows:
        return np.zeros((0, 4), dtype=np.int64)
    return _from_reduced(np.array(rows, dtype=np.int64))


def lambda_weights(n: int) -> np.ndarray:
    return np.array([weight_lambda(k, n) for k in lambda_nodes(n)], dtype=np.int64)


def generate_Lambda_n(n: int) -> list:
    """Tetrahedral indices with their stratum labels."""
    return [
        (tuple(int(v) for v in k), tetra_stratum(k, n)) for k in lambda_nodes(n)
    ]
