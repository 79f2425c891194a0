import pytest
from hypothesis import given, strategies as st

from brute import chords, chords_cross, noncrossing_subsets
from genfrieze.polygon import (CrossingDiagonals, DegenerateDiagonal, Diagonal, Dissection,
                               DuplicateDiagonal, MalformedDissection, all_diagonals, crosses,
                               enumerate_dissections, enumerate_triangulations, make_diagonal,
                               piece_adjacency, pieces, random_dissection)


def D(text, N):
    return Dissection.parse(text, N)


class TestMakeDiagonal:
    def test_normalises(self):
        assert make_diagonal(1, 4, 6) == Diagonal(1, 4)
        assert make_diagonal(4, 1, 6) == Diagonal(1, 4)
        assert make_diagonal(11, 4, 10) == Diagonal(1, 4)

    @pytest.mark.parametrize("a,b", [(0, 1), (1, 0), (0, 5), (3, 3)])
    def test_degenerate(self, a, b):
        with pytest.raises(DegenerateDiagonal):
            make_diagonal(a, b, 6)


class TestCrosses:
    @pytest.mark.parametrize("d1,d2,N,expected", [
        ((1, 4), (0, 3), 6, True),
        ((0, 2), (2, 4), 6, False),
        ((1, 5), (0, 4), 8, True),
        ((0, 3), (0, 3), 6, False),
        ((0, 3), (4, 7), 8, False),
    ])
    def test_examples(self, d1, d2, N, expected):
        assert crosses(Diagonal(*d1), Diagonal(*d2), N) is expected

    @pytest.mark.parametrize("N", range(4, 13))
    def test_matches_alternation_oracle(self, N):
        diags = all_diagonals(N)
        assert sorted(diags) == chords(N)
        for d1 in diags:
            for d2 in diags:
                assert crosses(d1, d2, N) == chords_cross(d1, d2)
                assert crosses(d1, d2, N) == crosses(d2, d1, N)
                if set(d1) & set(d2):
                    assert not crosses(d1, d2, N)


class TestParse:
    def test_round_trip(self):
        d = D("4-7,0-3", 8)
        assert str(d) == "0-3,4-7"
        assert D(str(d), 8) == d

    def test_empty(self):
        assert len(D("", 6)) == 0

    @pytest.mark.parametrize("text,exc,code", [
        ("0-1", DegenerateDiagonal, "degenerate"),
        ("0-3,3-0", DuplicateDiagonal, "duplicate"),
        ("1-4,0-3", CrossingDiagonals, "crossing"),
        ("0-9", MalformedDissection, "malformed"),
        ("0:3", MalformedDissection, "malformed"),
    ])
    def test_errors_have_distinct_codes(self, text, exc, code):
        with pytest.raises(exc) as info:
            D(text, 6)
        assert info.value.code == code


class TestPieces:
    def test_empty(self):
        assert pieces(D("", 6)) == [(0, 1, 2, 3, 4, 5)]

    def test_single_diagonal(self):
        assert pieces(D("0-3", 6)) == [(0, 1, 2, 3), (0, 3, 4, 5)]

    def test_fan(self):
        assert pieces(D("0-2,0-3,0-4", 6)) == [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5)]

    @pytest.mark.parametrize("N", [5, 6, 7, 8])
    def test_tiling_invariants(self, N):
        for dis in enumerate_dissections(N):
            ps = pieces(dis)
            assert len(ps) == len(dis) + 1
            assert sum(len(p) - 2 for p in ps) == N - 2
            side_use = {}
            for p in ps:
                for t in range(len(p)):
                    side = tuple(sorted((p[t], p[(t + 1) % len(p)])))
                    side_use[side] = side_use.get(side, 0) + 1
            for side, k in side_use.items():
                assert k == (2 if side in dis.diagonals else 1)
            for v in range(N):
                assert side_use[tuple(sorted((v, (v + 1) % N)))] == 1


class TestAdjacency:
    def test_single(self):
        adj = piece_adjacency(D("0-3", 6))
        assert adj == {0: [(1, Diagonal(0, 3))], 1: [(0, Diagonal(0, 3))]}

    def test_fan_is_path(self):
        adj = piece_adjacency(D("0-2,0-3,0-4", 6))
        assert sorted(len(v) for v in adj.values()) == [1, 1, 2, 2]

    @pytest.mark.parametrize("N", [6, 7, 8])
    def test_tree(self, N):
        for dis in enumerate_dissections(N):
            adj = piece_adjacency(dis)
            edges = sum(len(v) for v in adj.values()) // 2
            assert edges == len(dis)
            seen, stack = {0}, [0]
            while stack:
                for q, _ in adj[stack.pop()]:
                    if q not in seen:
                        seen.add(q)
                        stack.append(q)
            assert len(seen) == len(adj)


class TestEnumeration:
    @pytest.mark.parametrize("N,count", [(4, 3), (5, 11), (6, 45), (7, 197), (8, 903)])
    def test_dissection_counts(self, N, count):
        found = enumerate_dissections(N)
        assert len(found) == count
        assert {frozenset(d.diagonals) for d in found} == {
            frozenset(s) for s in noncrossing_subsets(N)}

    @pytest.mark.parametrize("N,count", [(4, 2), (5, 5), (6, 14), (7, 42), (8, 132)])
    def test_triangulation_counts(self, N, count):
        found = enumerate_triangulations(N)
        assert len(found) == count
        assert all(len(d) == N - 3 for d in found)
        assert all(all(len(p) == 3 for p in pieces(d)) for d in found)

    def test_deterministic(self):
        assert [str(d) for d in enumerate_dissections(7)] == [str(d) for d in enumerate_dissections(7)]


class TestRandom:
    def test_deterministic(self):
        assert random_dissection(10, 0) == random_dissection(10, 0)

    @given(st.integers(min_value=0, max_value=10**6))
    def test_hexagon_membership(self, seed):
        assert random_dissection(6, seed) in set(enumerate_dissections(6))

    @given(st.integers(min_value=4, max_value=14), st.integers(min_value=0, max_value=10**6))
    def test_valid(self, N, seed):
        d = random_dissection(N, seed)
        Dissection(N, d.diagonals)
