import numpy as np
import pytest

from fcctrig.indexsets import (
    generate_Hn,
    generate_Hn_star,
    lambda_circ_nodes,
    lambda_nodes,
    weight_lambda,
)
from fcctrig.kernels import dirichlet
from fcctrig.lattice import phi
from fcctrig.transforms import (
    continuous_inner,
    cubature_dodeca,
    cubature_tetra,
    cubature_tetra_regular,
    fourier_coeffs,
    inner_n,
    inner_n_star,
    inner_tetra,
    inner_tetra_interior,
    lebesgue_Sn,
    one,
    partial_sum,
    unit_cell_points,
)
from fcctrig.trigbasis import tc, tc_orthogonality_value, ts


def phi_f(k):
    kk = np.asarray(k, dtype=float)
    return lambda t: np.exp(0.5j * np.pi * (np.asarray(t) @ kk))


def pick(rng, arr, m):
    idx = rng.choice(len(arr), size=min(m, len(arr)), replace=False)
    return [tuple(int(v) for v in arr[i]) for i in idx]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_inner_n_orthonormal_on_half_open_set(n):
    rng = np.random.default_rng(30)
    H = generate_Hn(n)
    for k in pick(rng, H, 6):
        for m in pick(rng, H, 6):
            got = inner_n(phi_f(k), phi_f(m), n)
            want = 1.0 if k == m else 0.0
            assert abs(got - want) < 1e-10


@pytest.mark.parametrize("n", [1, 2, 3])
def test_inner_n_star_orthonormal_on_half_open_set(n):
    # the weighted symmetric rule reproduces the same orthonormality
    rng = np.random.default_rng(31)
    H = generate_Hn(n)
    for k in pick(rng, H, 6):
        for m in pick(rng, H, 6):
            got = inner_n_star(phi_f(k), phi_f(m), n)
            want = 1.0 if k == m else 0.0
            assert abs(got - want) < 1e-10


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cubature_dodeca_exact_to_degree(n):
    # the rule integrates every phi_k with k in the star set of 2n - 1
    # exactly: integral 1 at k = 0, otherwise 0
    rng = np.random.default_rng(32)
    big = generate_Hn_star(2 * n - 1)
    for k in pick(rng, big, 25) + [(0, 0, 0, 0)]:
        got = cubature_dodeca(phi_f(k), n)
        want = 1.0 if k == (0, 0, 0, 0) else 0.0
        assert abs(got - want) < 1e-10, k


@pytest.mark.parametrize("n", [1, 2, 3])
def test_inner_n_aliasing_of_congruent_frequencies(n):
    # frequencies differing by 4n times a zero-sum integer vector share every
    # node value, so the discrete product sees them as equal
    rng = np.random.default_rng(36)
    shifts = [(1, 0, 0, -1), (1, -2, 1, 0), (2, -1, -1, 0)]
    for k in pick(rng, generate_Hn(n), 4):
        for v in shifts:
            m = tuple(k[i] + 4 * n * v[i] for i in range(4))
            assert abs(inner_n(phi_f(m), phi_f(k), n) - 1.0) < 1e-10
            assert abs(inner_n(phi_f(k), phi_f(m), n) - 1.0) < 1e-10


@pytest.mark.parametrize("n", [2, 3])
def test_cubature_dodeca_exactness_boundary(n):
    # one degree past the guarantee: this frequency is congruent to zero on
    # the node grid, so the rule returns 1 while the true integral is 0
    m = (4 * n, 0, 0, -4 * n)
    assert abs(cubature_dodeca(phi_f(m), n) - 1.0) < 1e-10


def test_inner_products_conjugate_symmetry():
    def f(t):
        t = np.asarray(t)
        return np.exp(2j * np.pi * t[..., 0]) + 0.4 * t[..., 1]

    def g(t):
        t = np.asarray(t)
        return np.cos(2 * np.pi * t[..., 2]) - 1.3j * t[..., 3]

    for ip, n in [
        (inner_n, 2),
        (inner_n_star, 2),
        (inner_tetra, 2),
        (inner_tetra_interior, 4),
    ]:
        assert abs(ip(f, g, n) - np.conj(ip(g, f, n))) < 1e-12


def test_partial_sum_is_kernel_convolution():
    # S_n f(t) equals the continuous pairing of f with the degree-n kernel
    # centered at t; both sides are evaluated with the same quadrature
    n, q = 2, 16

    def f(s):
        s = np.asarray(s)
        return np.exp(np.sin(2.0 * np.pi * s[..., 0])) * np.cos(
            2.0 * np.pi * (s[..., 1] - s[..., 2])
        )

    coeffs = fourier_coeffs(f, n, q)
    rng = np.random.default_rng(37)
    t = rng.uniform(-1.0, 1.0, size=(5, 4))
    t -= t.mean(axis=1, keepdims=True)
    for tv in t:
        direct = partial_sum(coeffs, tv)
        conv = continuous_inner(f, lambda s: dirichlet(n, tv - np.asarray(s)), q)
        assert abs(direct - conv) < 1e-9


@pytest.mark.parametrize("n, tol", [(2, 1e-2), (3, 1e-4), (4, 1e-6)])
def test_cubature_dodeca_converges_for_smooth_periodic(n, tol):
    # analytic and lattice-periodic but not a polynomial: the rule converges
    # spectrally to the continuous integral
    def f(t):
        return np.exp(np.sin(2.0 * np.pi * t[..., 0])) * np.cos(
            2.0 * np.pi * (t[..., 1] - t[..., 2])
        )

    ref = continuous_inner(f, one, 48)
    got = cubature_dodeca(f, n)
    assert abs(got - ref) < tol


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cubature_tetra_matches_symmetrized_dodeca(n):
    # for fully symmetric integrands the tetra rule equals the dodeca rule
    def f(t):
        return np.cos(2.0 * np.pi * t).sum(axis=-1) + 0.3 * np.cos(
            np.pi * t
        ).prod(axis=-1)

    a = cubature_tetra(f, n)
    b = cubature_dodeca(f, n)
    assert abs(a - b) < 1e-10


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tc_discrete_orthogonality(n):
    # diagonal is 1/lambda_k: boundary indices of the tetrahedral set alias
    # with their congruent partners and the norm grows accordingly
    rng = np.random.default_rng(33)
    lam = lambda_nodes(n)
    for k in pick(rng, lam, 8):
        for m in pick(rng, lam, 8):
            got = inner_tetra(lambda t: tc(k, t), lambda t: tc(m, t), n)
            want = 1.0 / weight_lambda(k, n) if k == m else 0.0
            assert abs(got - want) < 1e-10


@pytest.mark.parametrize("n", [4, 5])
def test_ts_discrete_orthogonality(n):
    rng = np.random.default_rng(34)
    circ = lambda_circ_nodes(n)
    for k in pick(rng, circ, 6):
        for m in pick(rng, circ, 6):
            got = inner_tetra_interior(
                lambda t: ts(k, t), lambda t: ts(m, t), n
            )
            want = 1.0 / 24.0 if k == m else 0.0
            assert abs(got - want) < 1e-10


def test_inner_tetra_interior_empty_is_zero():
    assert inner_tetra_interior(one, one, 2) == 0j


@pytest.mark.parametrize("n", [2, 3])
def test_cubature_tetra_regular_matches_homogeneous(n):
    # the same rule expressed in the two coordinate systems
    def f3(x):
        return np.sin(np.pi * x[..., 0]) + x[..., 1] * x[..., 2]

    def f4(t):
        x = t[..., :3] - t[..., 3:]
        return f3(x)

    a = cubature_tetra_regular(f3, n)
    b = cubature_tetra(f4, n)
    assert abs(a - b) < 1e-12


def test_unit_cell_points_shape_and_zero_sum():
    pts = unit_cell_points(5)
    assert pts.shape == (125, 4)
    assert np.abs(pts.sum(axis=1)).max() < 1e-12
    with pytest.raises(ValueError):
        unit_cell_points(1)


def test_continuous_inner_orthonormality():
    # the grid rule integrates phi_k phi_m-bar exactly once the order
    # clears the bandwidth
    ks = [(0, 0, 0, 0), (4, 0, 0, -4), (6, 2, -2, -6), (3, -1, -1, -1)]
    for k in ks:
        for m in ks:
            got = continuous_inner(phi_f(k), phi_f(m), 16)
            want = 1.0 if k == m else 0.0
            assert abs(got - want) < 1e-12


def test_continuous_tc_norm():
    for k in [(0, 0, 0, 0), (3, -1, -1, -1), (4, 4, -4, -4), (6, 2, -2, -6)]:
        got = continuous_inner(lambda t: tc(k, t), lambda t: tc(k, t), 16)
        assert abs(got - float(tc_orthogonality_value(k))) < 1e-12


@pytest.mark.parametrize("n", [1, 2])
def test_fourier_coeffs_recover_polynomial(n):
    rng = np.random.default_rng(35)
    kk = generate_Hn_star(n)
    coef = {
        tuple(int(v) for v in k): complex(*rng.standard_normal(2)) for k in kk
    }

    def f(t):
        acc = 0j
        for k, c in coef.items():
            acc = acc + c * phi(np.asarray(k), t)
        return acc

    got = fourier_coeffs(f, n)
    assert got.degree == n
    assert set(got.values) == set(coef)
    err = max(abs(got.values[k] - coef[k]) for k in coef)
    assert err < 1e-10
    # and the partial sum rebuilds the function
    t = rng.uniform(-0.5, 0.5, size=(40, 4))
    t -= t.mean(axis=1, keepdims=True)
    assert np.abs(partial_sum(got, t) - f(t)).max() < 1e-9


def test_partial_sum_projection_idempotent():
    # S_n of a degree-n polynomial is the polynomial itself
    rng = np.random.default_rng(36)
    n = 2

    def f(t):
        return np.exp(np.sin(2.0 * np.pi * t[..., 0]) + np.cos(2.0 * np.pi * t[..., 3]))

    c1 = fourier_coeffs(f, n)
    c2 = fourier_coeffs(lambda t: partial_sum(c1, t), n)
    err = max(abs(c1.values[k] - c2.values[k]) for k in c1.values)
    assert err < 1e-10


def test_lebesgue_Sn_small():
    # coarse grids keep this cheap; the norm estimate exceeds 1 and grows
    # with the degree
    vals = [lebesgue_Sn(n, grid_per_axis=5, quad_order=16) for n in (1, 2, 3)]
    assert vals[0] > 1.0
    assert vals[0] < vals[1] < vals[2]
