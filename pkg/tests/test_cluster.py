import pytest

from genfrieze.cluster import (all_ind_objects, ar_triangle, ext1_dim, suspend, tau,
                               tau_inverse)
from genfrieze.polygon import Diagonal, is_diagonal


def test_tau_examples():
    assert tau(Diagonal(1, 4), 6) == Diagonal(0, 3)
    assert tau(Diagonal(0, 2), 10) == Diagonal(1, 9)


@pytest.mark.parametrize("N", range(6, 13))
def test_tau_is_periodic_bijection(N):
    objs = all_ind_objects(N)
    assert sorted(tau(c, N) for c in objs) == sorted(objs)
    for c in objs:
        x = c
        for _ in range(N):
            x = tau(x, N)
        assert x == c
        assert tau_inverse(tau(c, N), N) == c


def test_suspend_is_tau():
    for c in all_ind_objects(10):
        assert suspend(c, 10) == tau(c, 10)
    assert suspend(Diagonal(1, 4), 6) == Diagonal(0, 3)
    # Serre functor as suspend twice
    assert suspend(suspend(Diagonal(2, 5), 6), 6) == Diagonal(0, 3)


def test_ext1():
    assert ext1_dim(Diagonal(1, 4), Diagonal(0, 3), 6) == 1
    assert ext1_dim(Diagonal(0, 2), Diagonal(2, 4), 6) == 0
    objs = all_ind_objects(9)
    for m in objs:
        assert ext1_dim(m, m, 9) == 0
        for s in objs:
            assert ext1_dim(m, s, 9) == ext1_dim(s, m, 9)


def test_ar_triangle_examples():
    mesh = ar_triangle(Diagonal(1, 4), 6)
    assert mesh.start == Diagonal(0, 3)
    assert mesh.middle == (Diagonal(0, 4), Diagonal(1, 3))
    assert mesh.end == Diagonal(1, 4)

    mesh = ar_triangle(Diagonal(0, 2), 6)
    assert mesh.start == Diagonal(1, 5)
    assert mesh.middle == (Diagonal(2, 5),)


@pytest.mark.parametrize("N", range(6, 13))
def test_mesh_shape(N):
    objs = all_ind_objects(N)
    starts = []
    for c in objs:
        mesh = ar_triangle(c, N)
        assert mesh.start == tau(c, N)
        short = (c.b - c.a) % N in (2, N - 2)
        assert len(mesh.middle) == (1 if short else 2)
        for b in mesh.middle:
            assert is_diagonal(b.a, b.b, N)
        starts.append(mesh.start)
    # each object starts exactly one mesh and ends exactly one
    assert sorted(starts) == sorted(objs)


def test_object_counts():
    assert len(all_ind_objects(10)) == 35
    assert len(all_ind_objects(6)) == 9
    assert len(set(all_ind_objects(11))) == len(all_ind_objects(11)) == 11 * 8 // 2
    with pytest.raises(ValueError):
        all_ind_objects(5)
