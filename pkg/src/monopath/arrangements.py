"""The deformed braid arrangements x_i - x_j = -lam_i+1, ..., lam_j-1 (i < j).

Characteristic polynomials are exact integer coefficient lists, constant
term first.  The finite-field count is a brute-force scan of the whole
grid (F_q)^d and serves as an independent check of the closed form.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

import numpy as np

from ._caps import DEFAULT_GRID_CAP
from .errors import NestingWord, NotPrime, TooLarge
from .words import (
    LambdaWord,
    _letters,
    as_composition,
    is_non_nesting,
    iter_letter_tuples,
)


@dataclass(frozen=True)
class DeformedArrangement:
    d: int
    hyperplanes: tuple[tuple[int, int, int], ...]

    def __len__(self):
        return len(self.hyperplanes)

    def side(self, x, k) -> int:
        """Sign of (x_i - x_j) - s for the k-th hyperplane (i, j, s)."""
        i, j, s = self.hyperplanes[k]
        diff = x[i - 1] - x[j - 1] - s
        return (diff > 0) - (diff < 0)


def build_arrangement(lam) -> DeformedArrangement:
    lam = as_composition(lam)
    hyps = sorted(
        (i + 1, j + 1, s)
        for i in range(lam.d)
        for j in range(i + 1, lam.d)
        for s in range(-lam[i] + 1, lam[j])
    )
    return DeformedArrangement(lam.d, tuple(hyps))


# -- polynomials as coefficient lists, constant term first ------------------

def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_eval(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def char_poly_closed(lam) -> list[int]:
    """q * prod_{j=n-d+1}^{n-1} (q - j), expanded."""
    lam = as_composition(lam)
    p = [0, 1]
    for j in range(lam.n - lam.d + 1, lam.n):
        p = poly_mul(p, [-j, 1])
    return p


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def char_poly_finite_field(lam, q: int, cap: int = DEFAULT_GRID_CAP) -> int:
    """Count points of (F_q)^d off every hyperplane, reduced mod q."""
    lam = as_composition(lam)
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q <= lam.n:
        raise ValueError(f"need q > n = {lam.n}, got {q}")
    if q ** lam.d > cap:
        raise TooLarge(f"grid of size {q}^{lam.d} exceeds cap {cap}")
    grids = np.meshgrid(*([np.arange(q, dtype=np.int64)] * lam.d), indexing="ij")
    ok = np.ones(grids[0].shape, dtype=bool)
    for i in range(lam.d):
        for j in range(i + 1, lam.d):
            diff = (grids[i] - grids[j]) % q
            for s in range(-lam[i] + 1, lam[j]):
                ok &= diff != s % q
    return int(ok.sum())


def region_count(lam) -> int:
    """Regions via Zaslavsky: (-1)^d chi(-1)."""
    lam = as_composition(lam)
    return (-1) ** lam.d * poly_eval(char_poly_closed(lam), -1)


@lru_cache(maxsize=None)
def stirling2(d: int, r: int) -> int:
    if d < 0 or r < 0:
        raise ValueError("Stirling numbers need non-negative arguments")
    if d == r:
        return 1
    if r == 0 or r > d:
        return 0
    return r * stirling2(d - 1, r) + stirling2(d - 1, r - 1)


def catalan_face_count(d: int, k: int) -> int:
    """Lower faces of dimension d-k of the monotone path polytope for lam = (2,...,2)."""
    if not 1 <= k <= d:
        raise ValueError(f"need 1 <= k <= d, got k={k}, d={d}")
    return sum(
        factorial(r - 1) * stirling2(d, r) * comb(r, k) * comb(r + k, k - 1)
        for r in range(k, d + 1)
    )


@dataclass(frozen=True, eq=False)
class CosetLabel:
    """A coset (j_1, ..., j_d) + <(1, ..., 1)> in Z_{n+1}^d."""

    representative: tuple[int, ...]
    modulus: int

    def canonical(self) -> tuple[int, ...]:
        # translate so the first coordinate is 0
        r0 = self.representative[0]
        return tuple((j - r0) % self.modulus for j in self.representative)

    def __eq__(self, other):
        if not isinstance(other, CosetLabel):
            return NotImplemented
        return self.modulus == other.modulus and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.modulus, self.canonical()))

    def has_distinct_coordinates(self) -> bool:
        reps = [j % self.modulus for j in self.representative]
        return len(set(reps)) == len(reps)

    def __str__(self):
        return f"{self.representative}+H mod {self.modulus}"


def coset_map(w) -> CosetLabel:
    """First positions (1-based) of each letter, as a coset mod n+1."""
    letters = _letters(w)
    if not is_non_nesting(letters):
        raise NestingWord(f"{','.join(map(str, letters))} is nesting")
    d = w.d if isinstance(w, LambdaWord) else max(letters)
    first = {}
    for pos, a in enumerate(letters, start=1):
        first.setdefault(a, pos)
    return CosetLabel(tuple(first[i] for i in range(1, d + 1)), len(letters) + 1)


def distinct_coordinate_cosets(n: int, d: int) -> set[CosetLabel]:
    """All cosets of Z_{n+1}^d / H whose coordinates are pairwise distinct."""
    return {
        CosetLabel((0,) + rest, n + 1)
        for rest in permutations(range(1, n + 1), d - 1)
    }


def verify_coset_bijection(lam, cap=None) -> bool:
    lam = as_composition(lam)
    labels = [coset_map_letters(t, lam) for t in iter_letter_tuples(lam, cap) if is_non_nesting(t)]
    image = set(labels)
    return len(image) == len(labels) and image == distinct_coordinate_cosets(lam.n, lam.d)


def coset_map_letters(letters, lam) -> CosetLabel:
    first = {}
    for pos, a in enumerate(letters, start=1):
        first.setdefault(a, pos)
    return CosetLabel(tuple(first[i] for i in range(1, lam.d + 1)), lam.n + 1)
