"""Integer generalised friezes from a dissection by propagation across pieces.

For a fixed vertex ``i`` the row ``m(i, .)`` is 0 at ``i``, 1 on every
other vertex of a piece through ``i``, and on a piece reached across a
dissection diagonal ``(k, l)`` each new vertex gets ``m(i, k) + m(i, l)``.
"""

from __future__ import annotations

from math import prod

from .cluster import ar_triangle
from .polygon import Diagonal, Dissection, bfs_pieces, piece_adjacency, pieces


def m_row(D: Dissection, i: int, order: str = "bfs") -> list[int]:
    """Values ``m(i, j)`` for ``j = 0 .. N-1``.

    ``order`` picks the tie-break among pieces at equal distance from ``i``:
    ``"bfs"`` visits neighbours in sorted order, ``"reverse"`` in reverse.
    Both must give the same row.
    """
    ps = pieces(D)
    adj = piece_adjacency(D)
    if order == "reverse":
        adj = {p: list(reversed(nb)) for p, nb in adj.items()}
    elif order != "bfs":
        raise ValueError(f"unknown order {order!r}")
    roots = [idx for idx, p in enumerate(ps) if i in p]
    if order == "reverse":
        roots.reverse()

    row: list[int | None] = [None] * D.N
    row[i] = 0
    for idx, parent, shared in bfs_pieces(adj, roots):
        if parent is None:
            for j in ps[idx]:
                if j != i:
                    row[j] = 1
            continue
        k, l = shared
        value = row[k] + row[l]
        for j in ps[idx]:
            if j != k and j != l:
                row[j] = value
    return row


def m_matrix(D: Dissection) -> list[list[int]]:
    return [m_row(D, i) for i in range(D.N)]


def m_value(D: Dissection, x, table: list[list[int]] | None = None) -> int:
    """Value on an object: product over its diagonal summands (empty object -> 1)."""
    if table is None:
        table = m_matrix(D)
    return prod(table[d[0]][d[1]] for d in x)


def mesh_difference_m(D: Dissection, c: Diagonal, table: list[list[int]] | None = None) -> int:
    if table is None:
        table = m_matrix(D)
    mesh = ar_triangle(c, D.N)
    return (m_value(D, (mesh.start,), table) * m_value(D, (mesh.end,), table)
            - m_value(D, mesh.middle, table))
