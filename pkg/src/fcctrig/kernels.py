"""Dirichlet and interpolation kernels, compact and direct forms.

Every kernel with a closed form also has a ``*_direct`` companion that sums
exponentials over the defining index set in fixed lexicographic order.  The
compact forms are the production path; the direct forms are the oracles the
tests compare against.  All kernels accept arrays of points of shape
(..., 4) and broadcast.

Singularity policy: the compact forms are built from ratios
sin(m*pi*x)/sin(pi*x) whose denominators vanish at integer x, which node
arguments hit constantly.  The ratio is evaluated after reducing x by its
nearest integer a, sin(m*pi*x)/sin(pi*x) = (-1)^(a(m-1)) sin(m*pi*d)/sin(pi*d)
with d = x - a, and the analytic limit m is substituted where
|sin(pi*d)| < 1e-8.  The reduction loses no accuracy near large integers,
where the naive form does.
"""

from __future__ import annotations

import numpy as np

from .indexsets import generate_Hn, generate_Hn_star, stratum_of_index, weight_c

SING_TOL = 1e-8


def sine_ratio(m: int, x) -> np.ndarray:
    """sin(m*pi*x)/sin(pi*x) with the removable singularities filled in."""
    x = np.asarray(x, dtype=float)
    a = np.round(x)
    d = x - a
    sgn = np.where((a.astype(np.int64) * (m - 1)) % 2 == 0, 1.0, -1.0)
    s = np.sin(np.pi * d)
    singular = np.abs(s) < SING_TOL
    num = np.sin(m * np.pi * d)
    ratio = np.where(singular, float(m), num / np.where(singular, 1.0, s))
    return sgn * ratio


def K_n(n: int, t) -> np.ndarray:
    """Geometric kernel sum_{j=0}^{n} exp(2*pi*i*j*t) in product form."""
    t = np.asarray(t, dtype=float)
    return np.exp(1j * np.pi * n * t) * sine_ratio(n + 1, t)


def theta_n(n: int, t) -> np.ndarray:
    """Product of the four coordinate sine ratios; theta_0 vanishes identically."""
    t = np.asarray(t, dtype=float)
    return np.prod(sine_ratio(n, t), axis=-1)


def dirichlet(n: int, t) -> np.ndarray:
    """Dirichlet kernel of the star set in compact form, theta_{n+1} - theta_n."""
    return theta_n(n + 1, t) - theta_n(n, t)


def dirichlet_product(n: int, t) -> np.ndarray:
    """Dirichlet kernel as prod K_n(t_j) - prod (K_n(t_j) - 1)."""
    t = np.asarray(t, dtype=float)
    kt = K_n(n, t)
    return np.prod(kt, axis=-1) - np.prod(kt - 1.0, axis=-1)


def dirichlet_direct(n: int, t) -> np.ndarray:
    """Oracle: explicit exponential sum over the star frequency set."""
    t = np.asarray(t, dtype=float)
    kk = generate_Hn_star(n).astype(float)
    return np.exp(0.5j * np.pi * (t @ kk.T)).sum(axis=-1)


def phi_n_fund(n: int, t) -> np.ndarray:
    """Fundamental interpolation kernel of the half-open node set.

    Mean of the 4n^3 exponentials; there is no shorter closed form, so the
    sum itself is the production path.
    """
    t = np.asarray(t, dtype=float)
    kk = generate_Hn(n).astype(float)
    return np.exp(0.5j * np.pi * (t @ kk.T)).sum(axis=-1) / (4 * n**3)


def edge_sum(n: int, t) -> np.ndarray:
    """Exponential sum over the two edge strata of the star set, compact form.

    Equals sum of phi_k over the nodes with (|I|, |J|) in {(1,2), (2,1)}:
    2 * sum_nu sine_ratio(n-1, t_nu) * sum_{j != nu} cos(n*pi*(2 t_j + t_nu)).
    """
    t = np.asarray(t, dtype=float)
    total = 0.0
    for nu in range(4):
        sr = sine_ratio(n - 1, t[..., nu])
        inner = 0.0
        for j in range(4):
            if j != nu:
                inner = inner + np.cos(n * np.pi * (2.0 * t[..., j] + t[..., nu]))
        total = total + sr * inner
    return 2.0 * total


def edge_sum_direct(n: int, t) -> np.ndarray:
    """Oracle for edge_sum: sum exponentials over the two edge strata."""
    t = np.asarray(t, dtype=float)
    rows = [
        k
        for k in generate_Hn_star(n)
        if stratum_of_index(k, n) in ((1, 2), (2, 1))
    ]
    if not rows:
        return np.zeros(t.shape[:-1], dtype=complex)
    kk = np.array(rows, dtype=float)
    return np.exp(0.5j * np.pi * (t @ kk.T)).sum(axis=-1)


def phi_n_star(n: int, t) -> np.ndarray:
    """Fundamental kernel of the symmetric node set, compact real form.

    (1/4n^3) [ (D_n + D_{n-1})/2 - edge_sum/6 - (1/2) sum_j cos(2 pi n t_j)
               - (1/3) sum_{mu<nu} cos(2 pi n (t_mu + t_nu)) ].
    """
    t = np.asarray(t, dtype=float)
    body = 0.5 * (dirichlet(n, t) + dirichlet(n - 1, t))
    body = body - edge_sum(n, t) / 6.0
    c2 = 0.0
    for j in range(4):
        c2 = c2 + np.cos(2.0 * np.pi * n * t[..., j])
    c3 = 0.0
    for mu in range(4):
        for nu in range(mu + 1, 4):
            c3 = c3 + np.cos(2.0 * np.pi * n * (t[..., mu] + t[..., nu]))
    body = body - 0.5 * c2 - c3 / 3.0
    return body / (4 * n**3)


def phi_n_star_direct(n: int, t) -> np.ndarray:
    """Oracle: weighted exponential sum over the star set."""
    t = np.asarray(t, dtype=float)
    kk = generate_Hn_star(n)
    w = np.array([float(weight_c(k, n)) for k in kk])
    e = np.exp(0.5j * np.pi * (t @ kk.astype(float).T))
    return (e * w).sum(axis=-1) / (4 * n**3)


# production form / summation oracle, keyed by kernel name
FAST = {
    "dirichlet": dirichlet,
    "dirichlet_product": dirichlet_product,
    "edge_sum": edge_sum,
    "phi_star": phi_n_star,
}
REFERENCE = {
    "dirichlet": dirichlet_direct,
    "dirichlet_product": dirichlet_direct,
    "edge_sum": edge_sum_direct,
    "phi_star": phi_n_star_direct,
}
