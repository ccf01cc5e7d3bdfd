"""Discrete inner products, cubature rules, Fourier partial sums.

Function arguments are vectorized callables: they receive an array of
points with shape (..., 4) (or (..., 3) for the regular-tetrahedron rule)
and return values of shape (...).  Use ``one`` for the constant function.

The continuous inner product is realized as a tensor trapezoidal rule over
the lattice unit cell A[0,1)^3 in lattice coordinates.  For H-periodic
integrands this equals the normalized integral over the dodecahedron, and
for trigonometric polynomials it is exact once the per-axis order exceeds
the bandwidth, so the oracle values in the tests are exact up to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._parallel import map_chunks
from .indexsets import (
    generate_Hn,
    generate_Hn_star,
    lambda_circ_nodes,
    lambda_nodes,
    lambda_weights,
    to_reduced,
    weight_c,
)
from .kernels import dirichlet
from .lattice import A_MATRIX, to_homogeneous


def one(t) -> np.ndarray:
    """The constant function 1 in the vectorized calling convention."""
    return np.ones(np.asarray(t).shape[:-1])


def _node_points(idx: np.ndarray, n: int) -> np.ndarray:
    return idx.astype(float) / (4.0 * n)


def inner_n(f, g, n: int) -> complex:
    """Plain node average over the half-open set: (1/4n^3) sum f conj(g)."""
    pts = _node_points(generate_Hn(n), n)
    vals = np.asarray(f(pts)) * np.conj(np.asarray(g(pts)))
    return complex(vals.sum() / (4 * n**3))


def inner_n_star(f, g, n: int) -> complex:
    """Weighted node sum over the symmetric set with the boundary weights c."""
    idx = generate_Hn_star(n)
    pts = _node_points(idx, n)
    w = np.array([float(weight_c(k, n)) for k in idx])
    vals = np.asarray(f(pts)) * np.conj(np.asarray(g(pts))) * w
    return complex(vals.sum() / (4 * n**3))


def inner_tetra(f, g, n: int) -> complex:
    """Tetrahedral inner product: (1/4n^3) sum lambda_j f conj(g)."""
    idx = lambda_nodes(n)
    pts = _node_points(idx, n)
    w = lambda_weights(n).astype(float)
    vals = np.asarray(f(pts)) * np.conj(np.asarray(g(pts))) * w
    return complex(vals.sum() / (4 * n**3))


def inner_tetra_interior(f, g, n: int) -> complex:
    """Interior tetrahedral inner product: (6/n^3) sum over strictly interior nodes."""
    idx = lambda_circ_nodes(n)
    if len(idx) == 0:
        return 0j
    pts = _node_points(idx, n)
    vals = np.asarray(f(pts)) * np.conj(np.asarray(g(pts)))
    return complex(vals.sum() * 6.0 / n**3)


def cubature_dodeca(f, n: int) -> complex:
    """Symmetric-node rule for the normalized dodecahedron integral.

    Exact for trigonometric polynomials of degree up to 2n - 1.
    """
    return inner_n_star(f, one, n)


def cubature_tetra(f, n: int) -> complex:
    """Tetrahedral-node rule; exact on the symmetrized space of degree 2n - 1."""
    return inner_tetra(f, one, n)


def cubature_tetra_regular(f3, n: int) -> complex:
    """Same rule in regular-tetrahedron coordinates.

    Nodes are (k1, k2, k3)/n with 0 <= k3 <= k2 <= k1 <= n; weights carry
    over from the homogeneous rule through the index map.
    """
    idx = lambda_nodes(n)
    xs = to_reduced(idx).astype(float) / n
    w = lambda_weights(n).astype(float)
    vals = np.asarray(f3(xs)) * w
    return complex(vals.sum() / (4 * n**3))


def unit_cell_points(q: int) -> np.ndarray:
    """Homogeneous coordinates of the q^3 lattice-cell grid points.

    The grid is {0, 1/q, ..., (q-1)/q}^3 in lattice coordinates, mapped by
    the generator matrix; it is a fundamental-cell sampling, left-closed so
    trapezoidal weights are all equal.
    """
    if q < 2:
        raise ValueError("quadrature order must be at least 2")
    r = np.arange(q, dtype=float) / q
    u = np.stack(np.meshgrid(r, r, r, indexing="ij"), axis=-1).reshape(-1, 3)
    return to_homogeneous(u @ A_MATRIX.T.astype(float))


def continuous_inner(f, g, quad_order: int) -> complex:
    """Normalized continuous inner product over the fundamental domain.

    Computed as the mean of f conj(g) over the unit-cell grid; exact for
    H-periodic trigonometric integrands of per-axis degree < quad_order.
    """
    pts = unit_cell_points(quad_order)
    vals = np.asarray(f(pts)) * np.conj(np.asarray(g(pts)))
    return complex(vals.mean())


@dataclass(frozen=True)
class FourierCoeffs:
    """Coefficient table of a degree-n partial sum, keyed by index tuple."""

    degree: int
    values: dict


def fourier_coeffs(f, n: int, quad_order: int | None = None) -> FourierCoeffs:
    """Coefficients of f against the star frequency set via the cell grid."""
    if quad_order is None:
        quad_order = 4 * n + 4
    pts = unit_cell_points(quad_order)
    fv = np.asarray(f(pts), dtype=complex)
    kk = generate_Hn_star(n)
    e = np.exp(0.5j * np.pi * (pts @ kk.astype(float).T))
    coeffs = np.conj(e).T @ fv / len(pts)
    values = {
        tuple(int(v) for v in k): complex(c) for k, c in zip(kk, coeffs)
    }
    return FourierCoeffs(degree=n, values=values)


def partial_sum(coeffs: FourierCoeffs, t) -> np.ndarray:
    """Evaluate sum c_k phi_k(t) for a coefficient table."""
    t = np.asarray(t, dtype=float)
    kk = np.array(sorted(coeffs.values.keys()), dtype=float)
    cc = np.array([coeffs.values[tuple(int(v) for v in k)] for k in kk])
    return np.exp(0.5j * np.pi * (t @ kk.T)) @ cc


def lebesgue_Sn(n: int, grid_per_axis: int = 17, quad_order: int = 64) -> float:
    """Grid estimate of the partial-sum operator norm.

    Maximum over a t-grid of the mean of |D_n(t - s)| over a quadrature
    grid in s.  Both grids sample the unit cell, so this is a lower
    estimate of the true norm.  Cost grows as (grid * quad)^3; the
    defaults suit n up to about 8 on a workstation, smaller grids are fine
    for quick looks.
    """
    tg = unit_cell_points(grid_per_axis)
    sg = unit_cell_points(quad_order)
    step = max(1, int(2**22 // max(len(sg), 1)))
    chunks = [tg[i : i + step] for i in range(0, len(tg), step)]

    def worst(chunk):
        diffs = chunk[:, None, :] - sg[None, :, :]
        return float(np.abs(dirichlet(n, diffs)).mean(axis=1).max())

    return max(map_chunks(worst, chunks))
