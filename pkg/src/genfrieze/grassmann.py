"""Euler characteristics of submodule Grassmannians of string modules.

The count of successor-closed subsets of letter positions with a given
dimension vector is the Euler characteristic of the corresponding
Grassmannian.  ``chi_via_fq`` recomputes the same numbers without that
shortcut: it counts subrepresentations over finite fields and reads the
Euler characteristic off the point-count polynomial at ``q = 1``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import prod

from .gmodule import FORWARD, GModule, dim_vec


class UnsupportedField(ValueError):
    pass


class InsufficientSamples(ValueError):
    pass


def dv_key(counts) -> tuple:
    """Hashable dimension vector: sorted ``(diagonal, multiplicity)`` pairs, zeros dropped."""
    items = counts.items() if hasattr(counts, "items") else counts
    return tuple(sorted((d, k) for d, k in items if k))


def dv_add(e: tuple, f: tuple) -> tuple:
    total = Counter(dict(e))
    total.update(dict(f))
    return dv_key(total)


def _masks(signs: tuple) -> tuple[int, int]:
    fwd = bwd = 0
    for k, s in enumerate(signs):
        if s == FORWARD:
            fwd |= 1 << k
        else:
            bwd |= 1 << k
    return fwd, bwd


def successor_closed_masks(signs: tuple):
    """Bitmasks of successor-closed position sets of a word with these arrow signs.

    Bit ``k`` of ``fwd`` means an arrow from position ``k`` to ``k+1``; bit
    ``k`` of ``bwd`` means an arrow from ``k+1`` to ``k``.
    """
    length = len(signs) + 1
    fwd, bwd = _masks(signs)
    for S in range(1 << length):
        if ((S & fwd) << 1) & ~S:
            continue
        if (S >> 1) & bwd & ~S:
            continue
        yield S


@lru_cache(maxsize=None)
def _word_table(word) -> dict:
    letters, signs = word
    table: Counter = Counter()
    for S in successor_closed_masks(signs):
        table[dv_key(Counter(d for k, d in enumerate(letters) if S >> k & 1))] += 1
    return dict(table)


def convolve(t1: dict, t2: dict) -> dict:
    out: Counter = Counter()
    for e, x in t1.items():
        for f, y in t2.items():
            out[dv_add(e, f)] += x * y
    return dict(out)


def chi_table(M: GModule) -> dict:
    """Map dimension vector -> number of successor-closed subsets with that vector."""
    table = {(): 1}
    for word in M:
        table = convolve(table, _word_table(word))
    return table


@lru_cache(maxsize=None)
def count_closed(signs: tuple) -> int:
    # two-state transfer: (count ending outside S, count ending inside S)
    out_, in_ = 1, 1
    for s in signs:
        if s == FORWARD:
            out_, in_ = out_, out_ + in_
        else:
            out_, in_ = out_ + in_, in_
    return out_ + in_


def chi_total(M: GModule) -> int:
    return prod(count_closed(signs) for _, signs in M)


# --- finite-field oracle -------------------------------------------------

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)

# modulus coefficients, lowest degree first, for the non-prime fields
_MODULI = {4: (2, (1, 1, 1)), 8: (2, (1, 1, 0, 1)), 9: (3, (1, 0, 1))}


@lru_cache(maxsize=None)
def field_tables(q: int) -> tuple[tuple, tuple]:
    """Addition and multiplication tables of the ``q``-element field.

    Elements are ``0 .. q-1``; in ``GF(p^k)`` element ``x`` encodes the
    polynomial whose base-``p`` digits are its coefficients.
    """
    if q not in SUPPORTED_Q:
        raise UnsupportedField(f"q={q} is not one of {SUPPORTED_Q}")
    if q not in _MODULI:
        add = tuple(tuple((x + y) % q for y in range(q)) for x in range(q))
        mul = tuple(tuple((x * y) % q for y in range(q)) for x in range(q))
        return add, mul
    p, modulus = _MODULI[q]
    k = len(modulus) - 1

    def digits(x):
        return [(x // p ** t) % p for t in range(k)]

    def encode(ds):
        return sum(c * p ** t for t, c in enumerate(ds))

    def polymul(x, y):
        prodc = [0] * (2 * k - 1)
        for s, a in enumerate(digits(x)):
            for t, b in enumerate(digits(y)):
                prodc[s + t] = (prodc[s + t] + a * b) % p
        for deg in range(2 * k - 2, k - 1, -1):
            c = prodc[deg]
            if c:
                for t in range(k + 1):
                    prodc[deg - k + t] = (prodc[deg - k + t] - c * modulus[t]) % p
        return encode(prodc[:k])

    add = tuple(tuple(encode([(a + b) % p for a, b in zip(digits(x), digits(y))])
                      for y in range(q)) for x in range(q))
    mul = tuple(tuple(polymul(x, y) for y in range(q)) for x in range(q))
    return add, mul


@lru_cache(maxsize=None)
def subspaces(m: int, k: int, q: int) -> tuple[frozenset, ...]:
    """All ``k``-dimensional subspaces of ``F_q^m``, each as the frozenset of its vectors."""
    add, mul = field_tables(q)
    zero = (0,) * m
    found = []
    for pivots in combinations(range(m), k):
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, m) if c not in pivots]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * m for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            span = {zero}
            for row in rows:
                span = {_axpy(add, mul, coef, row, v) for v in span for coef in range(q)}
            found.append(frozenset(span))
    return tuple(found)


def _axpy(add, mul, coef, row, v):
    return tuple(add[x][mul[coef][y]] for x, y in zip(v, row))


def _representation(M: GModule):
    """Per-diagonal basis positions and arrow maps of the module's coefficient quiver.

    Returns ``(dims, arrows)``: ``dims[d]`` is the dimension at ``d`` and
    ``arrows`` maps ``(source, target)`` to the list of ``(source basis
    index, target basis index)`` pairs carrying an identity entry.
    """
    index: dict = {}
    dims: Counter = Counter()
    arrows: dict = {}
    for w, (letters, signs) in enumerate(M):
        for pos, d in enumerate(letters):
            index[w, pos] = dims[d]
            dims[d] += 1
        for pos, s in enumerate(signs):
            src, tgt = (pos, pos + 1) if s == FORWARD else (pos + 1, pos)
            key = (letters[src], letters[tgt])
            arrows.setdefault(key, []).append((index[w, src], index[w, tgt]))
    return dict(dims), arrows


def _apply(entries, vec, dim_target):
    # each basis index occurs in at most one entry, so no sums are needed
    out = [0] * dim_target
    for s, t in entries:
        out[t] = vec[s]
    return tuple(out)


def count_subreps_fq(M: GModule, e, q: int) -> int:
    """Number of subrepresentations of ``M`` over ``F_q`` with dimension vector ``e``."""
    field_tables(q)
    e = dict(e)
    dims, arrows = _representation(M)
    for d, k in e.items():
        if k and (d not in dims or k > dims[d]):
            return 0
    order = sorted(dims)
    position = {d: t for t, d in enumerate(order)}
    checks: dict[int, list] = {t: [] for t in range(len(order))}
    for (src, tgt), entries in arrows.items():
        later = max(position[src], position[tgt])
        checks[later].append((src, tgt, entries))
    choices = [subspaces(dims[d], e.get(d, 0), q) for d in order]
    chosen: dict = {}

    def stable(t):
        for src, tgt, entries in checks[t]:
            target = chosen[tgt]
            for v in chosen[src]:
                if _apply(entries, v, dims[tgt]) not in target:
                    return False
        return True

    def rec(t):
        if t == len(order):
            return 1
        total = 0
        d = order[t]
        for U in choices[t]:
            chosen[d] = U
            if stable(t):
                total += rec(t + 1)
        del chosen[d]
        return total

    return rec(0)


def interpolate_at(points: list[tuple[int, int]], x: int) -> Fraction:
    """Value at ``x`` of the unique polynomial of degree < len(points) through ``points``."""
    total = Fraction(0)
    for s, (xs, ys) in enumerate(points):
        term = Fraction(ys)
        for t, (xt, _) in enumerate(points):
            if t != s:
                term *= Fraction(x - xt, xs - xt)
        total += term
    return total


def chi_via_fq(M: GModule, e) -> int:
    e = dict(e)
    dims = dim_vec(M)
    degree = sum(k * (dims.get(d, 0) - k) for d, k in e.items() if k <= dims.get(d, 0))
    if degree + 1 > len(SUPPORTED_Q):
        raise InsufficientSamples(
            f"need {degree + 1} sample fields, only {len(SUPPORTED_Q)} supported")
    qs = SUPPORTED_Q[:degree + 1]
    value = interpolate_at([(q, count_subreps_fq(M, e, q)) for q in qs], 1)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral interpolated Euler characteristic {value}")
    return int(value)
