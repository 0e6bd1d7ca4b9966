"""Compositions, lambda-permutations and their monotone lattice paths.

A composition ``lam = (lam_1, ..., lam_d)`` of ``n`` fixes the multiset
M_lam holding letter ``i`` with multiplicity ``lam_i``.  Its permutations
(``LambdaWord``) encode the monotone lattice paths from the origin to
``lam`` with unit coordinate steps.  Letters are 1-based throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

from ._caps import word_cap
from .errors import CapExceeded


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def d(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse ``"2,2,2"`` (whitespace tolerated)."""
        try:
            parts = tuple(int(tok) for tok in text.replace(" ", "").split(","))
        except ValueError:
            raise ValueError(f"cannot parse composition {text!r}") from None
        return cls(parts)

    def multiset(self) -> tuple[int, ...]:
        """The sorted multiset M_lam, i.e. the word 1..1 2..2 ... d..d."""
        return tuple(i + 1 for i, p in enumerate(self.parts) for _ in range(p))


def as_composition(lam) -> Composition:
    if isinstance(lam, Composition):
        return lam
    if isinstance(lam, str):
        return Composition.parse(lam)
    return Composition(tuple(lam))


def compositions(n: int) -> Iterator[Composition]:
    """All 2**(n-1) compositions of ``n``."""
    for mask in range(1 << (n - 1)):
        parts, run = [], 1
        for b in range(n - 1):
            if mask >> b & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(tuple(parts))


@dataclass(frozen=True)
class LambdaWord:
    letters: tuple[int, ...]
    composition: Composition

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        lam = as_composition(self.composition)
        counts = [0] * lam.d
        for a in letters:
            if not 1 <= a <= lam.d:
                raise ValueError(f"letter {a} outside alphabet 1..{lam.d}")
            counts[a - 1] += 1
        if tuple(counts) != lam.parts:
            raise ValueError(
                f"letter multiplicities {tuple(counts)} do not match composition {lam.parts}"
            )
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "composition", lam)

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def d(self) -> int:
        return self.composition.d

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return ",".join(map(str, self.letters))

    @classmethod
    def _trusted(cls, letters: tuple[int, ...], lam: Composition) -> "LambdaWord":
        # skips validation; callers guarantee the multiplicities
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        object.__setattr__(w, "composition", lam)
        return w

    @classmethod
    def from_letters(cls, letters: Sequence[int], lam=None) -> "LambdaWord":
        """Build a word, inferring the composition from letter counts if not given."""
        letters = tuple(int(a) for a in letters)
        if lam is None:
            if not letters:
                raise ValueError("empty word")
            d = max(letters)
            lam = tuple(letters.count(i) for i in range(1, d + 1))
        return cls(letters, as_composition(lam))

    @classmethod
    def parse(cls, text: str, lam=None) -> "LambdaWord":
        """Parse ``"1,2,1"``; ``"121"`` is accepted when every letter is a single digit."""
        text = text.strip().replace(" ", "")
        if "," in text:
            tokens = text.split(",")
        else:
            tokens = list(text)
        try:
            letters = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"cannot parse word {text!r}") from None
        if lam is not None and "," not in text and as_composition(lam).d > 9:
            raise ValueError("contiguous-digit words need d <= 9; use commas")
        return cls.from_letters(letters, lam)


@dataclass(frozen=True)
class LatticePath:
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.points)
        if not pts or any(c != 0 for c in pts[0]):
            raise ValueError("a lattice path starts at the origin")
        for a, b in zip(pts, pts[1:]):
            step = [y - x for x, y in zip(a, b)]
            if sorted(step) != [0] * (len(step) - 1) + [1]:
                raise ValueError(f"step {a} -> {b} is not a unit coordinate step")
        object.__setattr__(self, "points", pts)

    @property
    def end(self) -> tuple[int, ...]:
        return self.points[-1]


def _letters(w) -> tuple[int, ...]:
    return w.letters if isinstance(w, LambdaWord) else tuple(w)


def multinomial_count(lam) -> int:
    lam = as_composition(lam)
    return factorial(lam.n) // prod(factorial(p) for p in lam.parts)


def coherent_count_formula(lam) -> int:
    """Number of coherent lifted paths, n!/(n-d+1)!."""
    lam = as_composition(lam)
    return factorial(lam.n) // factorial(lam.n - lam.d + 1)


def _lex_permutations(seq: list[int]) -> Iterator[tuple[int, ...]]:
    # next-permutation on a sorted multiset; each distinct arrangement once
    a = sorted(seq)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def iter_letter_tuples(lam, cap=None) -> Iterator[tuple[int, ...]]:
    """Like :func:`enumerate_words` but yields bare letter tuples (no validation)."""
    lam = as_composition(lam)
    limit = word_cap(cap)
    if lam.n > limit:
        raise CapExceeded(f"n = {lam.n} exceeds the enumeration cap {limit}")
    return _lex_permutations(list(lam.multiset()))


def enumerate_words(lam, cap=None) -> Iterator[LambdaWord]:
    """Yield every lambda-permutation once, in lexicographic order."""
    lam = as_composition(lam)
    for letters in iter_letter_tuples(lam, cap):
        yield LambdaWord._trusted(letters, lam)


def is_non_nesting(w) -> bool:
    """True unless some consecutive pair of equal letters encloses a repeated letter.

    Single left-to-right pass: ``inner`` is the largest start position of a
    consecutive equal-letter pair already closed.  A pair (i, l) of letter a
    is nesting exactly when such an inner pair starts after i.
    """
    last = {}
    inner = -1
    for pos, a in enumerate(_letters(w)):
        i = last.get(a)
        if i is not None:
            if inner > i:
                return False
            if i > inner:
                inner = i
        last[a] = pos
    return True


def nesting_count(w) -> int:
    """Number of quadruples i<j<k<l with w_i = w_l, w_j = w_k and no w_i in [j, k].

    For each inner pair (j, k) and each outer letter a absent from [j, k],
    the count gains (#a before j) * (#a after k).
    """
    letters = _letters(w)
    n = len(letters)
    alphabet = sorted(set(letters))
    # prefix[a][t] = occurrences of a in letters[:t]
    prefix = {}
    for a in alphabet:
        row = [0] * (n + 1)
        for t, b in enumerate(letters):
            row[t + 1] = row[t] + (b == a)
        prefix[a] = row
    total = 0
    for j in range(n):
        for k in range(j + 1, n):
            if letters[j] != letters[k]:
                continue
            for a in alphabet:
                if a == letters[j]:
                    continue
                row = prefix[a]
                if row[k + 1] - row[j]:
                    continue
                total += row[j] * (row[n] - row[k + 1])
    return total


def nesting_quadruples(w) -> list[tuple[int, int, int, int]]:
    """All nesting quadruples (0-based), by exhaustive O(n^4) scan."""
    s = _letters(w)
    n = len(s)
    out = []
    for i in range(n):
        for l in range(i + 3, n):
            if s[i] != s[l]:
                continue
            for j in range(i + 1, l):
                for k in range(j + 1, l):
                    if s[j] == s[k] and s[i] not in s[j:k + 1]:
                        out.append((i, j, k, l))
    return out


def word_to_path(w) -> LatticePath:
    letters = _letters(w)
    d = w.d if isinstance(w, LambdaWord) else max(letters)
    v = [0] * d
    points = [tuple(v)]
    for a in letters:
        v[a - 1] += 1
        points.append(tuple(v))
    return LatticePath(tuple(points))
