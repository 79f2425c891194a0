import pytest

from genfrieze.cluster import all_ind_objects, ar_triangle, tau
from genfrieze.gmodule import (BACKWARD, FORWARD, crossing_sequence, dim_vec, direct_sum,
                               format_module, g_module, is_isomorphic, make_module,
                               mesh_is_split, parse_module, string_of_arc)
from genfrieze.grassmann import chi_total
from genfrieze.polygon import Diagonal, Dissection, crosses, enumerate_dissections, \
    enumerate_triangulations

FAN = Dissection.parse("0-2,0-3,0-4", 6)
SNAKE = Dissection.parse("1-3,1-4,0-4", 6)
SPLIT8 = Dissection.parse("0-3,4-7", 8)
ONE = Dissection.parse("0-3", 6)
a, b, c = Diagonal(0, 2), Diagonal(0, 3), Diagonal(0, 4)


def separates(d, start, other, N):
    """``d`` cuts ``start`` off from ``other``: both endpoints of ``other`` lie weakly on the far side."""
    x, y = d

    def side(v):
        if v in d:
            return 0
        return 1 if 0 < (v - x) % N < (y - x) % N else -1

    s = side(start)
    return s != 0 and all(side(v) in (0, -s) for v in other)


class TestCrossingSequence:
    def test_examples(self):
        assert crossing_sequence(FAN, Diagonal(1, 4)) == [a, b]
        assert crossing_sequence(ONE, Diagonal(0, 3)) == []
        assert crossing_sequence(SPLIT8, Diagonal(1, 5)) == [Diagonal(0, 3), Diagonal(4, 7)]

    @pytest.mark.parametrize("N", [6, 7, 8, 9])
    def test_separation_order(self, N):
        for dis in enumerate_dissections(N):
            for arc in all_ind_objects(N):
                seq = crossing_sequence(dis, arc)
                assert set(seq) == {d for d in dis.diagonals if crosses(d, arc, N)}
                for p in range(len(seq)):
                    for q in range(p + 1, len(seq)):
                        assert separates(seq[p], arc.a, seq[q], N)


class TestStrings:
    def test_fan_word(self):
        words = string_of_arc(FAN, Diagonal(1, 4))
        assert len(words) == 1
        letters, signs = words[0]
        assert letters == (a, b) and len(set(signs)) == 1
        assert chi_total(make_module(words)) == 3

    def test_snake_word_alternates(self):
        (letters, signs), = string_of_arc(SNAKE, Diagonal(2, 5))
        assert len(letters) == 3
        assert signs[0] == -signs[1]
        assert chi_total(g_module(SNAKE, [Diagonal(2, 5)])) == 5

    def test_disjoint_words(self):
        words = string_of_arc(SPLIT8, Diagonal(1, 5))
        assert [len(w[0]) for w in words] == [1, 1]
        assert chi_total(make_module(words)) == 4

    @pytest.mark.parametrize("N", [6, 7, 8, 9])
    def test_word_validity_and_dims(self, N):
        for dis in enumerate_dissections(N):
            for arc in all_ind_objects(N):
                M = g_module(dis, [arc])
                for letters, signs in M:
                    assert len(signs) == len(letters) - 1
                    assert len(set(letters)) == len(letters)
                    for x, y in zip(letters, letters[1:]):
                        assert set(x) & set(y)
                dv = dim_vec(M)
                assert set(dv.values()) <= {1}
                assert set(dv) == {d for d in dis.diagonals if crosses(d, arc, N)}

    @pytest.mark.parametrize("N", [6, 7, 8])
    def test_global_orientation_is_consistent(self, N):
        # every pair of diagonals is joined in the same direction by every arc
        for dis in enumerate_dissections(N):
            direction = {}
            for arc in all_ind_objects(N):
                for letters, signs in g_module(dis, [arc]):
                    for x, y, s in zip(letters, letters[1:], signs):
                        src, tgt = (x, y) if s == FORWARD else (y, x)
                        assert direction.setdefault(frozenset((x, y)), (src, tgt)) == (src, tgt)

    @pytest.mark.parametrize("N", [6, 7, 8])
    def test_opposite_handedness(self, N):
        for dis in enumerate_dissections(N):
            for arc in all_ind_objects(N):
                M = g_module(dis, [arc])
                flipped = g_module(dis, [arc], handedness=-1)
                assert chi_total(M) == chi_total(flipped)
                for (l1, s1), (l2, s2) in zip(sorted(M), sorted(flipped)):
                    assert l1 == l2 and s1 == tuple(-s for s in s2)


class TestGModule:
    @pytest.mark.parametrize("N", [6, 7, 8])
    def test_vanishes_on_dissection(self, N):
        for dis in enumerate_dissections(N):
            for r in dis.diagonals:
                assert g_module(dis, [r]) == ()

    def test_additive(self):
        x, y = Diagonal(1, 4), Diagonal(2, 5)
        assert g_module(SNAKE, [x, y]) == direct_sum(g_module(SNAKE, [x]), g_module(SNAKE, [y]))
        assert g_module(ONE, [x]) == (((b,), ()),)
        assert g_module(ONE, []) == ()

    def test_dim_vec(self):
        assert dim_vec(()) == {}
        M = g_module(ONE, [Diagonal(1, 4), Diagonal(2, 5)])
        assert dim_vec(M) == {b: 2}

    def test_isomorphism(self):
        M = g_module(FAN, [Diagonal(1, 4)])
        assert is_isomorphic(M, M)
        fwd = (((a, b), (FORWARD,)),)
        rev = (((b, a), (BACKWARD,)),)
        assert is_isomorphic(fwd, rev)
        assert not is_isomorphic(fwd, (((a,), ()), ((b,), ())))
        assert not is_isomorphic(fwd, (((a, b), (BACKWARD,)),))

    def test_text_round_trip(self):
        M = g_module(SNAKE, [Diagonal(2, 5), Diagonal(0, 2)])
        lines = format_module(M)
        assert lines == ["1-3>1-4<0-4", "1-4<1-3"]
        assert parse_module(lines) == M


class TestSplitness:
    def test_examples(self):
        assert mesh_is_split(ONE, Diagonal(1, 4)) is False
        assert mesh_is_split(ONE, Diagonal(2, 5)) is True

    @pytest.mark.parametrize("N", [6, 7, 8, 9])
    def test_triangulations_never_split(self, N):
        for dis in enumerate_triangulations(N):
            for c in all_ind_objects(N):
                assert not mesh_is_split(dis, c)

    @pytest.mark.parametrize("N", [6, 7, 8])
    def test_case_tau_in_dissection(self, N):
        for dis in enumerate_dissections(N):
            for c in all_ind_objects(N):
                if tau(c, N) in dis.diagonals:
                    assert g_module(dis, [tau(c, N)]) == ()
                    mesh = ar_triangle(c, N)
                    diff = (chi_total(g_module(dis, [c]))
                            - chi_total(g_module(dis, mesh.middle)))
                    assert diff == 1
