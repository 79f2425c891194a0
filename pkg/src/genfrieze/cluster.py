"""Combinatorial model of the cluster category of type A_n.

Indecomposable objects are the diagonals of the (n+3)-gon, an object is a
tuple of diagonals (a multiset; the empty tuple is the zero object), and
the AR translation shifts both endpoints back by one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polygon import Diagonal, all_diagonals, crosses, is_diagonal, make_diagonal

MIN_VERTICES = 6


def check_category_size(N: int) -> None:
    if N < MIN_VERTICES:
        raise ValueError(f"the cluster category needs n >= 3, i.e. N >= {MIN_VERTICES}; got N={N}")


def tau(c: Diagonal, N: int) -> Diagonal:
    """AR translation: ``{i, j} -> {i-1, j-1}``."""
    return make_diagonal(c[0] - 1, c[1] - 1, N)


def tau_inverse(c: Diagonal, N: int) -> Diagonal:
    return make_diagonal(c[0] + 1, c[1] + 1, N)


# The Serre functor is suspend twice; in this 2-Calabi-Yau setting the
# suspension coincides with tau.  Kept as a named alias so call sites say
# which functor they mean.
suspend = tau


def ext1_dim(m: Diagonal, s: Diagonal, N: int) -> int:
    return 1 if crosses(m, s, N) else 0


@dataclass(frozen=True)
class MeshTriangle:
    """AR triangle ``start -> middle -> end`` with ``start = tau(end)``."""

    start: Diagonal
    middle: tuple[Diagonal, ...]
    end: Diagonal


def ar_triangle(c: Diagonal, N: int) -> MeshTriangle:
    i, j = c
    middle = []
    for a, b in ((i - 1, j), (i, j - 1)):
        if is_diagonal(a, b, N):
            middle.append(make_diagonal(a, b, N))
    return MeshTriangle(tau(c, N), tuple(sorted(middle)), c)


def all_ind_objects(N: int) -> list[Diagonal]:
    check_category_size(N)
    return all_diagonals(N)
