from collections import deque
from math import comb

import pytest

from monopath.coherence import is_coherent_subdivision
from monopath.errors import CapExceeded
from monopath.subdivisions import (
    OrderedPartition,
    SubdivisionFace,
    atoms_below,
    enumerate_proper_partitions,
    expected_max_incoherency,
    face_census,
    flip_neighbors,
    incoherency,
    incoherency_table,
    max_incoherency_census,
    refines,
    refines_geometric,
    sigma_words,
    subdivision_faces,
)
from monopath.words import (
    Composition,
    LambdaWord,
    compositions,
    enumerate_words,
    is_non_nesting,
    multinomial_count,
    nesting_count,
)


def W(text, lam=None):
    return LambdaWord.parse(text, lam)


def P(text, lam=None):
    return OrderedPartition.parse(text, lam)


def count_by_blocks(lam):
    """Oracle: ordered set partitions of the letter positions, counted up to relabelling."""
    lam = Composition(lam)
    seen = set()

    def rec(rem, prefix):
        if not any(rem):
            seen.add(tuple(prefix))
            return
        for mask in range(1, 1 << lam.d):
            block = tuple(i + 1 for i in range(lam.d) if mask >> i & 1)
            if all(rem[a - 1] for a in block):
                for a in block:
                    rem[a - 1] -= 1
                rec(rem, prefix + [block])
                for a in block:
                    rem[a - 1] += 1

    rec(list(lam.parts), [])
    return len(seen)


class TestOrderedPartition:
    def test_parse_and_str(self):
        rho = P("1|1,2|2|1,2|1")
        assert rho.composition == Composition((4, 3))
        assert str(rho) == "1|1,2|2|1,2|1"
        assert str(P("2,1|1")) == "1,2|1"

    def test_improper(self):
        with pytest.raises(ValueError):
            P("1,1")
        with pytest.raises(ValueError):
            P("1|2", (2, 1))
        with pytest.raises(ValueError):
            P("1|x")

    def test_atom_word(self):
        w = W("12121")
        assert OrderedPartition.from_word(w).word() == w
        with pytest.raises(ValueError):
            P("1,2|1").word()


class TestEnumerate:
    def test_examples(self):
        assert sorted(str(r) for r in enumerate_proper_partitions((1, 1))) == ["1,2", "1|2", "2|1"]
        assert [str(r) for r in enumerate_proper_partitions((2,))] == ["1|1"]
        got = {str(r) for r in enumerate_proper_partitions((2, 1))}
        assert got == {"1|1|2", "1|2|1", "2|1|1", "1|1,2", "1,2|1"}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_and_atoms(self, n):
        for lam in compositions(n):
            parts = list(enumerate_proper_partitions(lam))
            assert len(parts) == len(set(parts)) == count_by_blocks(lam)
            atoms = {r.word() for r in parts if r.is_atom()}
            assert atoms == set(enumerate_words(lam))

    def test_cap(self):
        with pytest.raises(CapExceeded):
            next(enumerate_proper_partitions((2, 2), cap=3))


class TestFaces:
    def test_incoherent_partition(self):
        faces = subdivision_faces(P("1|1,2|2|1,2|1", (4, 3)))
        assert faces == [
            SubdivisionFace((0, 0), (1,)),
            SubdivisionFace((1, 0), (1, 2)),
            SubdivisionFace((2, 1), (2,)),
            SubdivisionFace((2, 2), (1, 2)),
            SubdivisionFace((3, 3), (1,)),
        ]

    def test_atom_is_path(self):
        w = W("12121")
        faces = subdivision_faces(OrderedPartition.from_word(w))
        assert len(faces) == w.n and all(f.dimension() == 1 for f in faces)

    def test_square(self):
        assert subdivision_faces(P("1,2")) == [SubdivisionFace((0, 0), (1, 2))]

    @pytest.mark.parametrize("parts", [(2, 2), (3, 1, 1), (2, 1, 2)])
    def test_inside_box(self, parts):
        for rho in enumerate_proper_partitions(parts):
            for f in subdivision_faces(rho):
                top = list(f.base)
                for r in f.directions:
                    top[r - 1] += 1
                assert all(0 <= t <= p for t, p in zip(top, parts))


class TestRefines:
    def test_examples(self):
        assert refines(P("1|2|1|2|1|2|1"), P("1|1,2|2|1,2|1"))
        rho = P("1|1,2|2|1,2|1")
        assert refines(rho, rho)
        assert not refines(P("1|2"), P("2|1"))
        assert not refines(P("2|1"), P("1|2"))
        assert not refines(P("1,2"), P("1|2"))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_partial_order_and_geometry(self, n):
        for lam in compositions(n):
            omega = list(enumerate_proper_partitions(lam))
            rel = {(a, b): refines(a, b) for a in omega for b in omega}
            for (a, b), r in rel.items():
                assert r == refines_geometric(a, b)
                if r and a != b:
                    assert not rel[b, a]
            up = {a: {b for b in omega if rel[a, b]} for a in omega}
            for a in omega:
                assert a in up[a]
                for b in up[a]:
                    assert up[b] <= up[a]

    def test_partial_order_n6_sample(self):
        omega = list(enumerate_proper_partitions((2, 2, 2)))
        for a in omega[::7]:
            for b in omega:
                if refines(a, b) and a != b:
                    assert not refines(b, a)

    def test_atoms_below(self):
        rho = P("1|1,2|2|1,2|1", (4, 3))
        atoms = atoms_below(rho)
        assert len(atoms) == 4
        assert all(refines(a, rho) for a in atoms)
        assert [str(a) for a in atoms if is_coherent_subdivision(a).coherent] == ["1|2|1|2|1|2|1"]


class TestFlips:
    def test_examples(self):
        assert flip_neighbors(W("1122")) == [W("1212")]
        assert flip_neighbors(W("1212")) == [W("2112"), W("1122"), W("1221")]
        assert flip_neighbors(W("11")) == []

    def test_neighbor_count(self):
        for w in enumerate_words((2, 2, 1)):
            distinct = sum(a != b for a, b in zip(w.letters, w.letters[1:]))
            assert len(flip_neighbors(w)) == distinct

    @pytest.mark.parametrize("n", range(1, 9))
    def test_connected(self, n):
        for lam in compositions(n):
            start = next(iter(enumerate_words(lam))).letters
            seen = {start}
            queue = deque([start])
            while queue:
                cur = list(queue.popleft())
                for k in range(n - 1):
                    if cur[k] != cur[k + 1]:
                        nxt = cur[:]
                        nxt[k], nxt[k + 1] = nxt[k + 1], nxt[k]
                        nxt = tuple(nxt)
                        if nxt not in seen:
                            seen.add(nxt)
                            queue.append(nxt)
            assert len(seen) == multinomial_count(lam)


class TestIncoherency:
    @pytest.mark.parametrize("text, expected", [("12121", 0), ("1221", 1), ("123321", 3)])
    def test_examples(self, text, expected):
        assert incoherency(W(text)) == expected

    @pytest.mark.parametrize("n", range(1, 9))
    def test_zero_iff_non_nesting(self, n):
        for lam in compositions(n):
            table = incoherency_table(lam)
            assert len(table) == multinomial_count(lam)
            for t, v in table.items():
                assert (v == 0) == is_non_nesting(t)

    def test_table_matches_single_source(self):
        table = incoherency_table((2, 2, 2))
        for t, v in table.items():
            assert incoherency(t) == v

    def test_census_small(self):
        best, attainers = max_incoherency_census(2)
        assert best == 1
        assert {str(w) for w in attainers} >= {"1,2,2,1", "2,1,1,2"}
        best, attainers = max_incoherency_census(3)
        assert best == expected_max_incoherency(3) == 3
        assert {w.letters for w in attainers} >= set(sigma_words(3))

    def test_census_d4(self):
        best, attainers = max_incoherency_census(4)
        assert best == comb(4, 2)
        assert {w.letters for w in attainers} >= set(sigma_words(4))

    @pytest.mark.parametrize("d", [2, 3])
    def test_at_least_nestings(self, d):
        for t, v in incoherency_table((2,) * d).items():
            assert v >= nesting_count(t)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            incoherency(W("12121"), cap=4)
        with pytest.raises(CapExceeded):
            max_incoherency_census(5)


class TestFaceCensus:
    def test_d2(self):
        assert face_census((2, 2)) == {2: 4, 1: 3}

    def test_d3(self):
        assert face_census((2, 2, 2)) == {3: 30, 2: 42, 1: 13}
