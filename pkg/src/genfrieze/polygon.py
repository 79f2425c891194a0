"""Combinatorics of a convex N-gon: diagonals, crossings, dissections, pieces.

Vertices are ``0 .. N-1`` in counterclockwise order.  Everything here is
decided by cyclic-interval arithmetic; no coordinates are involved.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple


class DissectionError(ValueError):
    """Base class for invalid diagonals or dissections.

    ``code`` is a short stable identifier used by the text-format parser.
    """

    code = "invalid"


class DegenerateDiagonal(DissectionError):
    code = "degenerate"


class DuplicateDiagonal(DissectionError):
    code = "duplicate"


class CrossingDiagonals(DissectionError):
    code = "crossing"


class MalformedDissection(DissectionError):
    code = "malformed"


class Diagonal(NamedTuple):
    """Unordered vertex pair, stored with ``a < b``."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


def is_diagonal(a: int, b: int, N: int) -> bool:
    d = (b - a) % N
    return d not in (0, 1, N - 1)


def make_diagonal(a: int, b: int, N: int) -> Diagonal:
    """Normalised diagonal joining ``a`` and ``b`` (taken mod ``N``).

    Raises DegenerateDiagonal if the vertices coincide or are adjacent.
    """
    a %= N
    b %= N
    if not is_diagonal(a, b, N):
        raise DegenerateDiagonal(f"{a}-{b} is not a diagonal of the {N}-gon")
    return Diagonal(a, b) if a < b else Diagonal(b, a)


def in_open_interval(x: int, a: int, b: int, N: int) -> bool:
    """True iff ``x`` lies strictly inside the ccw arc from ``a`` to ``b``."""
    return 0 < (x - a) % N < (b - a) % N


def crosses(d1: Diagonal, d2: Diagonal, N: int) -> bool:
    a, b = d1
    inside = in_open_interval(d2[0], a, b, N) + in_open_interval(d2[1], a, b, N)
    if inside != 1:
        return False
    # a shared endpoint sits on the boundary of the interval, never inside it
    return d2[0] not in (a, b) and d2[1] not in (a, b)


def all_diagonals(N: int) -> list[Diagonal]:
    return [Diagonal(a, b) for a in range(N) for b in range(a + 2, N) if is_diagonal(a, b, N)]


@dataclass(frozen=True)
class Dissection:
    """A set of pairwise non-crossing diagonals of the ``N``-gon."""

    N: int
    diagonals: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.N < 4:
            raise MalformedDissection(f"polygon needs at least 4 vertices, got {self.N}")
        object.__setattr__(self, "diagonals", frozenset(self.diagonals))
        validate(self)

    @classmethod
    def from_pairs(cls, N: int, pairs: Iterable[tuple[int, int]]) -> "Dissection":
        diags = []
        for a, b in pairs:
            d = make_diagonal(a, b, N)
            if d in diags:
                raise DuplicateDiagonal(f"diagonal {d} listed twice")
            diags.append(d)
        return cls(N, frozenset(diags))

    @classmethod
    def parse(cls, text: str, N: int) -> "Dissection":
        """Parse the ``a-b,c-d`` text format.  An empty string is the empty dissection."""
        text = text.strip()
        if not text:
            return cls(N)
        pairs = []
        for token in text.split(","):
            parts = token.strip().split("-")
            if len(parts) != 2:
                raise MalformedDissection(f"cannot parse diagonal token {token!r}")
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise MalformedDissection(f"cannot parse diagonal token {token!r}") from None
        for a, b in pairs:
            if not (0 <= a < N and 0 <= b < N):
                raise MalformedDissection(f"vertex out of range in {a}-{b} for the {N}-gon")
        return cls.from_pairs(N, pairs)

    @cached_property
    def sorted_diagonals(self) -> tuple[Diagonal, ...]:
        return tuple(sorted(self.diagonals))

    @property
    def n(self) -> int:
        """Rank of the type A category, ``N - 3``."""
        return self.N - 3

    def __contains__(self, d) -> bool:
        return d in self.diagonals

    def __len__(self) -> int:
        return len(self.diagonals)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.sorted_diagonals)

    def is_triangulation(self) -> bool:
        return len(self.diagonals) == self.N - 3


def validate(D: Dissection) -> None:
    N = D.N
    for d in D.diagonals:
        if not (isinstance(d, tuple) and len(d) == 2 and 0 <= d[0] < d[1] < N):
            raise MalformedDissection(f"{d!r} is not a normalised diagonal of the {N}-gon")
        if not is_diagonal(d[0], d[1], N):
            raise DegenerateDiagonal(f"{d[0]}-{d[1]} is a polygon edge")
    diags = sorted(D.diagonals)
    for x in range(len(diags)):
        for y in range(x + 1, len(diags)):
            if crosses(diags[x], diags[y], N):
                raise CrossingDiagonals(f"{diags[x]} crosses {diags[y]}")


def pieces(D: Dissection) -> list[tuple[int, ...]]:
    """The polygons into which ``D`` cuts the N-gon.

    Each piece is its vertex tuple in ccw order starting at its smallest
    vertex; the list is sorted.
    """
    out = []
    stack = [(tuple(range(D.N)), list(D.sorted_diagonals))]
    while stack:
        verts, diags = stack.pop()
        if not diags:
            out.append(verts)
            continue
        x, y = diags[0]
        ix, iy = sorted((verts.index(x), verts.index(y)))
        left = verts[ix:iy + 1]
        right = verts[iy:] + verts[:ix + 1]
        left_set = set(left)
        ldiags, rdiags = [], []
        for d in diags[1:]:
            (ldiags if d[0] in left_set and d[1] in left_set else rdiags).append(d)
        stack.append((left, ldiags))
        stack.append((right, rdiags))
    return sorted(tuple(sorted(p)) for p in out)


def piece_sides(piece: tuple[int, ...], N: int) -> list[tuple[int, int]]:
    """Sides of a piece as normalised vertex pairs (edges and diagonals alike)."""
    k = len(piece)
    return [tuple(sorted((piece[t], piece[(t + 1) % k]))) for t in range(k)]


def piece_adjacency(D: Dissection) -> dict[int, list[tuple[int, Diagonal]]]:
    """Dual tree of the dissection.

    Keys index into ``pieces(D)``; each value lists ``(neighbour, shared
    diagonal)`` pairs.
    """
    ps = pieces(D)
    owner: dict[Diagonal, list[int]] = {d: [] for d in D.diagonals}
    for idx, p in enumerate(ps):
        for side in piece_sides(p, D.N):
            d = Diagonal(*side)
            if d in owner:
                owner[d].append(idx)
    adj: dict[int, list[tuple[int, Diagonal]]] = {idx: [] for idx in range(len(ps))}
    for d in sorted(owner):
        p, q = owner[d]
        adj[p].append((q, d))
        adj[q].append((p, d))
    return adj


def _dissections_rec(N: int, diags: list[Diagonal]):
    chosen: list[Diagonal] = []

    def rec(start: int):
        yield tuple(chosen)
        for t in range(start, len(diags)):
            d = diags[t]
            if any(crosses(d, c, N) for c in chosen):
                continue
            chosen.append(d)
            yield from rec(t + 1)
            chosen.pop()

    yield from rec(0)


def iter_dissections(N: int, triangulations_only: bool = False):
    """Yield every dissection of the N-gon in a fixed order (the empty one first)."""
    for ds in _dissections_rec(N, all_diagonals(N)):
        if triangulations_only and len(ds) != N - 3:
            continue
        yield Dissection(N, frozenset(ds))


def enumerate_dissections(N: int) -> list[Dissection]:
    return list(iter_dissections(N))


def enumerate_triangulations(N: int) -> list[Dissection]:
    return list(iter_dissections(N, triangulations_only=True))


def random_dissection(N: int, seed: int) -> Dissection:
    """Deterministic pseudo-random dissection.

    Diagonals are visited in a shuffled order and each is kept with
    probability 1/2 when it crosses nothing kept so far.
    """
    rng = random.Random(seed)
    diags = all_diagonals(N)
    rng.shuffle(diags)
    kept: list[Diagonal] = []
    for d in diags:
        if rng.random() < 0.5 and not any(crosses(d, c, N) for c in kept):
            kept.append(d)
    return Dissection(N, frozenset(kept))


def bfs_pieces(adj: dict[int, list[tuple[int, Diagonal]]], roots: Iterable[int]):
    """Breadth-first order over the dual tree: yields ``(piece, parent, shared diagonal)``.

    Roots are yielded with parent ``None``.
    """
    roots = list(roots)
    seen = set(roots)
    queue = deque(roots)
    for r in roots:
        yield r, None, None
    while queue:
        p = queue.popleft()
        for q, d in adj[p]:
            if q not in seen:
                seen.add(q)
                queue.append(q)
                yield q, p, d
