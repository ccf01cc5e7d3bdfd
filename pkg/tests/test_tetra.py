import numpy as np
import pytest

from fcctrig.indexsets import lambda_nodes, to_reduced
from fcctrig.interpolation import interp_Ln_star, tetra_grid
from fcctrig.tetra import (
    in_tetra_H,
    in_tetra_cartesian,
    in_tetra_regular,
    index_h_to_regular,
    index_regular_to_h,
    point_h_to_regular,
    point_regular_to_h,
    regular_interpolate,
)


def test_index_maps_round_trip():
    for n in (1, 2, 3):
        for j in lambda_nodes(n):
            k3 = index_h_to_regular(j)
            back = index_regular_to_h(k3)
            assert tuple(int(v) for v in back) == tuple(int(v) for v in j)
            assert k3 == tuple(int(v) for v in to_reduced(j))


def test_index_regular_to_h_validates():
    with pytest.raises(ValueError):
        index_regular_to_h([1, 2])


def test_point_maps_round_trip():
    rng = np.random.default_rng(60)
    t = rng.uniform(-1, 1, size=(50, 4))
    t -= t.mean(axis=1, keepdims=True)
    assert np.abs(point_regular_to_h(point_h_to_regular(t)) - t).max() < 1e-12
    x = rng.uniform(0, 1, size=(50, 3))
    assert np.abs(point_h_to_regular(point_regular_to_h(x)) - x).max() < 1e-12


def test_membership_consistency_across_charts():
    from fcctrig.lattice import from_homogeneous

    rng = np.random.default_rng(61)
    x = rng.uniform(-0.3, 1.3, size=(500, 3))
    t = point_regular_to_h(x)
    assert np.array_equal(in_tetra_regular(x), in_tetra_H(t))
    # the Cartesian region is the projection of the homogeneous simplex
    assert np.array_equal(in_tetra_cartesian(from_homogeneous(t)), in_tetra_H(t))


def test_tetra_grid_is_inside():
    pts = tetra_grid(6)
    assert in_tetra_H(pts).all()
    assert in_tetra_regular(point_h_to_regular(pts)).all()


def test_node_points_inside_regular_simplex():
    n = 3
    xs = to_reduced(lambda_nodes(n)).astype(float) / n
    assert in_tetra_regular(xs).all()
    assert (xs >= 0).all() and (xs <= 1).all()


def test_cartesian_region_vertices():
    verts = np.array(
        [
            [0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0],
            [0.5, 0.5, 0.5],
            [-0.5, 0.5, 0.5],
        ]
    )
    assert in_tetra_cartesian(verts).all()
    outside = np.array([[0.6, 0.5, 0.5], [0.0, 0.0, 1.1], [0.0, -0.1, 0.0]])
    assert not in_tetra_cartesian(outside).any()


def test_regular_interpolate_matches_homogeneous_route():
    n = 3

    def f3(x):
        return np.cos(np.pi * x[..., 0]) + x[..., 1] * (1.0 - x[..., 2])

    rng = np.random.default_rng(62)
    x = rng.uniform(0, 1, size=(40, 3))
    x = x[in_tetra_regular(x)]
    got = regular_interpolate(f3, n, x)

    def f4(t):
        return f3(point_h_to_regular(t))

    I = interp_Ln_star(f4, n)
    want = I(point_regular_to_h(x))
    assert np.abs(got - want).max() < 1e-12


def test_regular_interpolate_hits_node_data():
    n = 2

    def f3(x):
        return np.sin(x[..., 0] + 2.0 * x[..., 1]) + x[..., 2]

    xs = to_reduced(lambda_nodes(n)).astype(float) / n
    got = regular_interpolate(f3, n, xs)
    assert np.abs(got - f3(xs)).max() < 1e-9
