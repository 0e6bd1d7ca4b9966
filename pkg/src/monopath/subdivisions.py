"""Proper ordered partitions of M_lam, their subdivisions, and flips of words.

An ordered partition is proper when no block repeats a letter.  Ordered by
refinement these form the poset of induced subdivisions of the lower part
of the lifted pile; the all-singleton partitions are the words.  A flip
swaps two adjacent distinct letters, and the incoherency of a word is its
flip distance to the nearest non-nesting word.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from ._caps import DEFAULT_BFS_CAP, word_cap
from .errors import CapExceeded
from .words import (
    Composition,
    LambdaWord,
    _letters,
    as_composition,
    is_non_nesting,
    iter_letter_tuples,
)


@dataclass(frozen=True)
class OrderedPartition:
    blocks: tuple[tuple[int, ...], ...]
    composition: Composition

    def __post_init__(self):
        blocks = tuple(tuple(sorted(int(a) for a in b)) for b in self.blocks)
        lam = as_composition(self.composition)
        counts = [0] * lam.d
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if len(set(b)) != len(b):
                raise ValueError(f"block {b} repeats a letter; the partition is not proper")
            for a in b:
                if not 1 <= a <= lam.d:
                    raise ValueError(f"letter {a} outside alphabet 1..{lam.d}")
                counts[a - 1] += 1
        if tuple(counts) != lam.parts:
            raise ValueError(f"blocks cover multiplicities {tuple(counts)}, not {lam.parts}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "composition", lam)

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    @classmethod
    def parse(cls, text: str, lam=None) -> "OrderedPartition":
        """Parse ``"1|1,2|2|1,2|1"``; the composition is inferred if not given."""
        try:
            blocks = [tuple(int(a) for a in part.split(",")) for part in text.replace(" ", "").split("|")]
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        if lam is None:
            flat = [a for b in blocks for a in b]
            lam = tuple(flat.count(i) for i in range(1, max(flat) + 1))
        return cls(tuple(blocks), as_composition(lam))

    @classmethod
    def from_word(cls, w: LambdaWord) -> "OrderedPartition":
        return cls(tuple((a,) for a in w.letters), w.composition)

    def is_atom(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def word(self) -> LambdaWord:
        if not self.is_atom():
            raise ValueError(f"{self} has a block with more than one letter")
        return LambdaWord(tuple(b[0] for b in self.blocks), self.composition)


def enumerate_proper_partitions(lam, cap=None):
    """Every proper ordered partition of M_lam exactly once."""
    lam = as_composition(lam)
    limit = word_cap(cap)
    if lam.n > limit:
        raise CapExceeded(f"n = {lam.n} exceeds the enumeration cap {limit}")
    remaining = list(lam.parts)
    prefix = []

    def rec(left):
        if left == 0:
            yield OrderedPartition(tuple(prefix), lam)
            return
        avail = [i + 1 for i, r in enumerate(remaining) if r]
        for size in range(1, len(avail) + 1):
            for block in combinations(avail, size):
                for a in block:
                    remaining[a - 1] -= 1
                prefix.append(block)
                yield from rec(left - size)
                prefix.pop()
                for a in block:
                    remaining[a - 1] += 1

    yield from rec(lam.n)


@dataclass(frozen=True)
class SubdivisionFace:
    base: tuple[int, ...]
    directions: tuple[int, ...]

    def dimension(self) -> int:
        return len(self.directions)

    def contains(self, other: "SubdivisionFace") -> bool:
        """Whether the closed unit-cube face ``other`` lies inside this one."""
        for t, (b, o) in enumerate(zip(self.base, other.base)):
            if t + 1 in self.directions:
                if t + 1 in other.directions:
                    if o != b:
                        return False
                elif o not in (b, b + 1):
                    return False
            elif t + 1 in other.directions or o != b:
                return False
        return True


def subdivision_faces(rho: OrderedPartition) -> list[SubdivisionFace]:
    """Faces sum_{i<j} e_{B_i} + sum_{r in B_j} [0, e_r] of the pile, one per block."""
    base = [0] * rho.composition.d
    out = []
    for block in rho.blocks:
        out.append(SubdivisionFace(tuple(base), block))
        for a in block:
            base[a - 1] += 1
    return out


def refines(rho1: OrderedPartition, rho2: OrderedPartition) -> bool:
    """True iff each block of rho2 is the union of a run of consecutive blocks of rho1."""
    if rho1.composition != rho2.composition:
        raise ValueError("partitions of different multisets")
    blocks = iter(rho1.blocks)
    for target in rho2.blocks:
        left = set(target)
        while left:
            b = next(blocks, None)
            if b is None or not left.issuperset(b):
                return False
            left.difference_update(b)
    return next(blocks, None) is None


def refines_geometric(rho1: OrderedPartition, rho2: OrderedPartition) -> bool:
    """Containment of the union of rho1's faces in the union of rho2's faces."""
    big = subdivision_faces(rho2)
    return all(any(g.contains(f) for g in big) for f in subdivision_faces(rho1))


def flip_neighbors(w) -> list[LambdaWord]:
    letters = list(_letters(w))
    lam = w.composition if isinstance(w, LambdaWord) else None
    out = []
    for k in range(len(letters) - 1):
        if letters[k] != letters[k + 1]:
            s = letters[:]
            s[k], s[k + 1] = s[k + 1], s[k]
            out.append(LambdaWord.from_letters(s, lam))
    return out


def _flip_codes(letters):
    for k in range(len(letters) - 1):
        if letters[k] != letters[k + 1]:
            s = list(letters)
            s[k], s[k + 1] = s[k + 1], s[k]
            yield tuple(s)


def _encode(letters, base):
    code = 0
    for a in letters:
        code = code * base + a
    return code


def incoherency(w, cap=None) -> int:
    """Minimum number of flips turning ``w`` into a non-nesting word (BFS)."""
    letters = tuple(_letters(w))
    limit = word_cap(cap, DEFAULT_BFS_CAP)
    if len(letters) > limit:
        raise CapExceeded(f"n = {len(letters)} exceeds the BFS cap {limit}")
    base = max(letters) + 1
    seen = {_encode(letters, base)}
    queue = deque([(letters, 0)])
    while queue:
        cur, dist = queue.popleft()
        if is_non_nesting(cur):
            return dist
        for nxt in _flip_codes(cur):
            code = _encode(nxt, base)
            if code not in seen:
                seen.add(code)
                queue.append((nxt, dist + 1))
    raise AssertionError("flip graph has no non-nesting word")


def incoherency_table(lam, cap=None) -> dict[tuple[int, ...], int]:
    """Incoherency of every word, by one BFS started from all non-nesting words."""
    lam = as_composition(lam)
    limit = word_cap(cap, DEFAULT_BFS_CAP)
    if lam.n > limit:
        raise CapExceeded(f"n = {lam.n} exceeds the BFS cap {limit}")
    dist = {}
    queue = deque()
    for t in iter_letter_tuples(lam, limit):
        if is_non_nesting(t):
            dist[t] = 0
            queue.append(t)
    while queue:
        cur = queue.popleft()
        for nxt in _flip_codes(cur):
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    return dist


def sigma_words(d: int) -> list[tuple[int, ...]]:
    """The words sigma_1 ... sigma_d sigma_d ... sigma_1 for every permutation sigma."""
    return [s + s[::-1] for s in permutations(range(1, d + 1))]


def max_incoherency_census(d: int, cap=None):
    """Maximum incoherency over all words for lam = (2, ..., 2) and the words attaining it."""
    if d > 4 and cap is None:
        raise CapExceeded(f"d = {d} is beyond the census range d <= 4")
    lam = Composition((2,) * d)
    table = incoherency_table(lam, cap)
    best = max(table.values())
    attainers = sorted(t for t, v in table.items() if v == best)
    return best, [LambdaWord(t, lam) for t in attainers]


def expected_max_incoherency(d: int) -> int:
    return comb(d, 2)


def atoms_below(rho: OrderedPartition) -> list[OrderedPartition]:
    """All-singleton refinements of ``rho``: each block opened up in every order."""
    out = [()]
    for block in rho.blocks:
        out = [prefix + tuple((a,) for a in order) for prefix in out for order in permutations(block)]
    return [OrderedPartition(blocks, rho.composition) for blocks in out]


def face_census(lam, cap=None) -> dict[int, int]:
    """Coherent proper ordered partitions counted by the dimension of their face."""
    from .coherence import is_coherent_subdivision

    counts: dict[int, int] = {}
    for rho in enumerate_proper_partitions(lam, cap):
        verdict = is_coherent_subdivision(rho)
        if verdict.coherent:
            counts[verdict.dimension] = counts.get(verdict.dimension, 0) + 1
    return counts
