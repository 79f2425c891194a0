"""The module ``G(c) = C(R, Sigma c)`` as string words over the dissection.

An arc ``c`` contributes one basis vector for every dissection diagonal it
crosses.  Consecutive crossings that share a polygon vertex are joined by
an arrow; crossings that share no vertex split the word.  Arrows turn
counterclockwise around their shared vertex, which reads as: walking the
arc from its smaller endpoint, the arrow points forward when the shared
vertex is on the left.

Words are tuples ``(letters, signs)`` where ``signs[k]`` is ``+1`` for an
arrow ``letters[k] -> letters[k+1]`` and ``-1`` for the opposite arrow.
A module is a tuple of words kept in a canonical sorted order.
"""

from __future__ import annotations

from collections import Counter

from .cluster import ar_triangle, tau
from .polygon import Diagonal, Dissection, in_open_interval

FORWARD = 1
BACKWARD = -1

StringWord = tuple  # (tuple[Diagonal, ...], tuple[int, ...])
GModule = tuple  # tuple[StringWord, ...]


def crossing_sequence(D: Dissection, arc: Diagonal) -> list[Diagonal]:
    """Diagonals of ``D`` crossed by ``arc``, in order from its smaller endpoint.

    Every crossed diagonal has one endpoint on each side of the arc; the
    right-side endpoints advance and the left-side endpoints retreat as we
    walk along the arc, which gives the sort key.
    """
    a, b = arc
    N = D.N
    keyed = []
    for d in D.sorted_diagonals:
        x, y = d
        if x == a or x == b or y == a or y == b:
            continue
        xin = in_open_interval(x, a, b, N)
        yin = in_open_interval(y, a, b, N)
        if xin == yin:
            continue
        right, left = (x, y) if xin else (y, x)
        keyed.append((((right - a) % N, (a - left) % N), d))
    keyed.sort()
    return [d for _, d in keyed]


def shared_vertex(d1: Diagonal, d2: Diagonal):
    common = set(d1) & set(d2)
    return next(iter(common)) if common else None


def string_of_arc(D: Dissection, arc: Diagonal, handedness: int = 1) -> list[StringWord]:
    """Words of ``G(arc)``.

    ``handedness=-1`` flips every arrow; the resulting module is the
    opposite-orientation model and has the same submodule counts.
    """
    a, b = arc
    seq = crossing_sequence(D, arc)
    words = []
    letters: list[Diagonal] = []
    signs: list[int] = []
    for d in seq:
        if letters:
            v = shared_vertex(letters[-1], d)
            if v is None:
                words.append((tuple(letters), tuple(signs)))
                letters, signs = [], []
            else:
                on_right = in_open_interval(v, a, b, D.N)
                signs.append(handedness * (BACKWARD if on_right else FORWARD))
        letters.append(d)
    if letters:
        words.append((tuple(letters), tuple(signs)))
    return words


def reverse_word(word: StringWord) -> StringWord:
    letters, signs = word
    return tuple(reversed(letters)), tuple(-s for s in reversed(signs))


def canonical_word(word: StringWord) -> StringWord:
    return min(word, reverse_word(word))


def make_module(words) -> GModule:
    return tuple(sorted(words))


def g_module(D: Dissection, x, handedness: int = 1) -> GModule:
    """``G`` of an object given as an iterable of diagonals (empty -> zero module)."""
    words = []
    for c in x:
        words.extend(string_of_arc(D, c, handedness))
    return make_module(words)


def direct_sum(*modules: GModule) -> GModule:
    return make_module(w for m in modules for w in m)


def dim_vec(M: GModule) -> dict[Diagonal, int]:
    counts: Counter = Counter()
    for letters, _ in M:
        counts.update(letters)
    return dict(counts)


def is_isomorphic(M1: GModule, M2: GModule) -> bool:
    """Word multisets agree up to reversing individual words."""
    return Counter(map(canonical_word, M1)) == Counter(map(canonical_word, M2))


def mesh_is_split(D: Dissection, c: Diagonal) -> bool:
    """Whether ``G`` of the AR triangle ending at ``c`` is a split short exact sequence.

    When ``c`` or ``tau(c)`` lies in ``D`` the image sequence is not short
    exact at all, so it does not split.
    """
    start = tau(c, D.N)
    if c in D.diagonals or start in D.diagonals:
        return False
    mesh = ar_triangle(c, D.N)
    return is_isomorphic(g_module(D, mesh.middle), g_module(D, (mesh.start, mesh.end)))


def format_module(M: GModule) -> list[str]:
    """Each word as ``a-b>c-d<e-f`` text."""
    out = []
    for letters, signs in M:
        parts = [str(letters[0])]
        for s, d in zip(signs, letters[1:]):
            parts.append(">" if s == FORWARD else "<")
            parts.append(str(d))
        out.append("".join(parts))
    return out


def parse_module(lines) -> GModule:
    words = []
    for text in lines:
        letters, signs = [], []
        token = ""
        for ch in text + "\0":
            if ch in "<>\0":
                lo, hi = (int(t) for t in token.split("-"))
                letters.append(Diagonal(min(lo, hi), max(lo, hi)))
                token = ""
                if ch != "\0":
                    signs.append(FORWARD if ch == ">" else BACKWARD)
            else:
                token += ch
        words.append((tuple(letters), tuple(signs)))
    return make_module(words)
