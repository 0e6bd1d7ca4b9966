"""Exact geometry of the lifted pile of cubes and its monotone path averages.

Box points ``x`` are lifted to ``(x, |x|^2)``.  The average of a monotone
edge path is taken with respect to the projection summing the first d
coordinates; for lower paths every edge has length one.  All coordinates
are integers or ``Fraction`` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import prod
from typing import Sequence

from ._caps import DEFAULT_BOX_CAP, DEFAULT_PERMUTATION_CAP, word_cap
from .coherence import is_coherent_path
from .errors import CapExceeded, NestingWord, NotSwappable, OutOfBox
from .words import LambdaWord, as_composition, iter_letter_tuples, word_to_path

RationalVector = tuple[Fraction, ...]


def lift(x: Sequence[int], lam=None) -> RationalVector:
    """(x, x_1^2 + ... + x_d^2); with ``lam`` given, ``x`` must lie in the box."""
    if lam is not None:
        lam = as_composition(lam)
        if len(x) != lam.d or any(not 0 <= xi <= p for xi, p in zip(x, lam.parts)):
            raise OutOfBox(f"{tuple(x)} is not in the box of {lam.parts}")
    return tuple(Fraction(v) for v in x) + (Fraction(sum(v * v for v in x)),)


def pile_vertices(lam, cap: int = DEFAULT_BOX_CAP) -> list[tuple[int, ...]]:
    lam = as_composition(lam)
    size = prod(p + 1 for p in lam.parts)
    if size > cap:
        raise CapExceeded(f"box has {size} lattice points, cap is {cap}")
    return list(product(*(range(p + 1) for p in lam.parts)))


@dataclass(frozen=True)
class LiftedPath:
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for p in self.points:
            if p[-1] != sum(v * v for v in p[:-1]):
                raise ValueError(f"{p} is not on the lifting paraboloid")


def lifted_path(w: LambdaWord) -> LiftedPath:
    return LiftedPath(tuple(p + (sum(v * v for v in p),) for p in word_to_path(w).points))


def _average(points) -> RationalVector:
    # (1/L) * sum_k len_k (P_{k-1} + P_k) / 2, len_k the projected edge length
    dim = len(points[0])
    acc = [0] * dim
    total = 0
    for a, b in zip(points, points[1:]):
        step = sum(b[:-1]) - sum(a[:-1])
        total += step
        for t in range(dim):
            acc[t] += step * (a[t] + b[t])
    return tuple(Fraction(v, 2 * total) for v in acc)


def path_integral(gamma: LiftedPath) -> RationalVector:
    """Average point I of a monotone path, exactly."""
    return _average(gamma.points)


def word_integral(w: LambdaWord) -> RationalVector:
    """I of the lifted path of ``w``, skipping the intermediate path objects."""
    d = w.d
    v = [0] * d
    f = 0
    acc = [0] * (d + 1)
    for a in w.letters[:-1]:
        f += 2 * v[a - 1] + 1
        v[a - 1] += 1
        for t in range(d):
            acc[t] += v[t]
        acc[d] += f
    # endpoints (origin and lam) enter with weight 1/2: scale everything by 2
    end = w.composition.parts
    n = w.n
    acc = [2 * x + e for x, e in zip(acc, end + (sum(p * p for p in end),))]
    return tuple(Fraction(x, 2 * n) for x in acc)


def swap_formula(w: LambdaWord, k: int) -> RationalVector:
    """(1/n) (e_j - e_i + (2 m_j - 2 m_i) e_{d+1}) for the swap at 1-based position k."""
    i, j = w.letters[k - 1], w.letters[k]
    m = [0] * w.d
    for a in w.letters[:k - 1]:
        m[a - 1] += 1
    vec = [0] * (w.d + 1)
    vec[j - 1] += 1
    vec[i - 1] -= 1
    vec[w.d] = 2 * m[j - 1] - 2 * m[i - 1]
    return tuple(Fraction(x, w.n) for x in vec)


def swapped(w: LambdaWord, k: int) -> LambdaWord:
    s = list(w.letters)
    s[k - 1], s[k] = s[k], s[k - 1]
    return LambdaWord(tuple(s), w.composition)


def swap_difference(w: LambdaWord, k: int) -> RationalVector:
    """I(w') - I(w) where w' swaps the ascending pair at 1-based positions k, k+1."""
    if not 1 <= k < w.n:
        raise NotSwappable(f"position {k} has no right neighbour in a word of length {w.n}")
    if w.letters[k - 1] >= w.letters[k]:
        raise NotSwappable(f"positions {k}, {k + 1} hold {w.letters[k - 1]}, {w.letters[k]}")
    before = path_integral(lifted_path(w))
    after = path_integral(lifted_path(swapped(w, k)))
    diff = tuple(b - a for a, b in zip(before, after))
    expected = swap_formula(w, k)
    if diff != expected:
        raise AssertionError(f"swap difference {diff} != {expected}")
    return diff


@dataclass(frozen=True)
class ZonotopeSpec:
    generators: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, int, int, int] | None, ...]
    s: Fraction
    scale: Fraction

    def pair_generators(self):
        return [g for g, lab in zip(self.generators, self.labels) if lab is not None]


def default_height(lam) -> int:
    lam = as_composition(lam)
    return 2 * lam.n * sum(p * p for p in lam.parts)


def zonotope_generators(lam, s=None) -> ZonotopeSpec:
    """Segments e_j - e_i + (2l - 2k) e_{d+1} for i < j, k < lam_i, l < lam_j, then s e_{d+1}."""
    lam = as_composition(lam)
    s = Fraction(default_height(lam) if s is None else s)
    if s <= 0:
        raise ValueError("the vertical summand must be positive")
    d = lam.d
    gens, labels = [], []
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            for k in range(lam[i - 1]):
                for l in range(lam[j - 1]):
                    g = [0] * (d + 1)
                    g[j - 1], g[i - 1], g[d] = 1, -1, 2 * l - 2 * k
                    gens.append(tuple(g))
                    labels.append((i, j, k, l))
    vertical = [0] * (d + 1)
    vertical[d] = s
    gens.append(tuple(vertical))
    labels.append(None)
    return ZonotopeSpec(tuple(gens), tuple(labels), s, Fraction(1, lam.n))


def upper_facet_paths(lam, cap: int = DEFAULT_PERMUTATION_CAP):
    """Average points of the d! monotone edge paths on the upper facet.

    Each path visits box corners in the order given by a permutation sigma,
    stepping by lam_{sigma_t} e_{sigma_t}.
    """
    lam = as_composition(lam)
    if lam.d > cap:
        raise CapExceeded(f"d = {lam.d} exceeds the permutation cap {cap}")
    out = []
    for sigma in permutations(range(1, lam.d + 1)):
        x = [0] * lam.d
        pts = [tuple(x) + (0,)]
        for a in sigma:
            x[a - 1] = lam[a - 1]
            pts.append(tuple(x) + (sum(v * v for v in x),))
        out.append((sigma, _average(pts)))
    return out


def on_upper_hyperplane(lam, point) -> bool:
    lam = as_composition(lam)
    return sum(p * x for p, x in zip(lam.parts, point)) == point[lam.d]


def vertex_certificate(w: LambdaWord, cap=None) -> bool:
    """Check the witness functional of ``w`` is strictly minimised at I(w) among all words."""
    verdict = is_coherent_path(w)
    if not verdict.coherent:
        raise NestingWord(f"{w} is nesting, so it has no witness functional")
    lam = w.composition
    limit = word_cap(cap)
    if lam.n > limit:
        raise CapExceeded(f"n = {lam.n} exceeds the enumeration cap {limit}")
    c = verdict.functional
    target = c(word_integral(w))
    for letters in iter_letter_tuples(lam, limit):
        if letters == w.letters:
            continue
        if c(word_integral(LambdaWord(letters, lam))) <= target:
            return False
    return True
