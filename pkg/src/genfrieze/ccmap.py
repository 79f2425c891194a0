"""The modified Caldero-Chapoton map of a dissection and its mesh behaviour."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .cluster import ar_triangle, check_category_size
from .gmodule import g_module, mesh_is_split
from .grassmann import chi_total
from .polygon import Diagonal, Dissection, all_diagonals, crosses, is_diagonal, make_diagonal


class FriezeViolation(RuntimeError):
    """A mesh difference outside {0, 1}; only an implementation bug can cause it."""


class NotCrossing(ValueError):
    pass


def rho(D: Dissection, x) -> int:
    """Sum of Euler characteristics of all submodule Grassmannians of ``G(x)``.

    ``x`` is an iterable of diagonals; the empty object has value 1.
    """
    check_category_size(D.N)
    return chi_total(g_module(D, tuple(x)))


def rho_table(D: Dissection) -> dict[Diagonal, int]:
    """``rho`` on every indecomposable object."""
    check_category_size(D.N)
    return {c: chi_total(g_module(D, (c,))) for c in all_diagonals(D.N)}


def rho_from_table(table: dict[Diagonal, int], x) -> int:
    return prod(table[c] for c in x)


@dataclass(frozen=True)
class MeshReport:
    c: Diagonal
    difference: int
    split: bool


def mesh_report(D: Dissection, c: Diagonal, table: dict[Diagonal, int] | None = None) -> MeshReport:
    if table is None:
        table = rho_table(D)
    mesh = ar_triangle(c, D.N)
    diff = table[mesh.start] * table[mesh.end] - rho_from_table(table, mesh.middle)
    if diff not in (0, 1):
        raise FriezeViolation(f"mesh ending at {c} in dissection [{D}] has difference {diff}")
    return MeshReport(c, diff, mesh_is_split(D, c))


def extension_terms(m: Diagonal, s: Diagonal, N: int) -> tuple[tuple, tuple]:
    """The two middle terms of the non-split extensions between crossing ``m`` and ``s``.

    The four endpoints form a quadrilateral; each middle term is a pair of
    opposite sides, with polygon edges dropped as zero objects.
    """
    if not crosses(m, s, N):
        raise NotCrossing(f"{m} and {s} do not cross")
    i, j = m
    k, l = s
    # k lies strictly between i and j going ccw, l on the other side
    if not (0 < (k - i) % N < (j - i) % N):
        k, l = l, k

    def obj(pairs):
        return tuple(sorted(make_diagonal(a, b, N) for a, b in pairs if is_diagonal(a, b, N)))

    return obj(((i, k), (j, l))), obj(((i, l), (j, k)))


def extension_check(D: Dissection, m: Diagonal, s: Diagonal,
                    table: dict[Diagonal, int] | None = None) -> bool:
    """``rho(m) == rho(a) + rho(b)`` for the extension middles ``a``, ``b`` of ``m`` by ``s``."""
    if s not in D.diagonals:
        raise ValueError(f"{s} is not a diagonal of the dissection")
    a, b = extension_terms(m, s, D.N)
    if table is None:
        table = rho_table(D)
    return table[m] == rho_from_table(table, a) + rho_from_table(table, b)
