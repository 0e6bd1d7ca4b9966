"""Coherence of lifted monotone paths and of induced subdivisions.

A functional ``c(x) = a_1 x_1 + ... + a_d x_d + x_{d+1} / 2`` on the lifted
pile is recorded by its shifted coefficients ``a'_i = a_i + 1/2``.  Along
the lifted path of a word, the k-th edge raises ``c`` by ``a'_{w_k} + m``,
where ``m`` counts earlier copies of ``w_k``.  The path selected by a
generic ``c`` is the unique word for which these increments increase.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .constraints import Constraint, DifferenceConstraintSystem, FeasibilityResult, feasibility
from .errors import NonGenericFunctional
from .words import LambdaWord, _letters, as_composition

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class GenericFunctional:
    aprime: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "aprime", tuple(a if isinstance(a, Fraction) else Fraction(a) for a in self.aprime)
        )

    @property
    def d(self) -> int:
        return len(self.aprime)

    def coefficients(self) -> tuple[Fraction, ...]:
        """(a_1, ..., a_d, a_{d+1}) with a_{d+1} = 1/2."""
        return tuple(a - HALF for a in self.aprime) + (HALF,)

    def __call__(self, x) -> Fraction:
        return sum((a * xi for a, xi in zip(self.coefficients(), x)), Fraction(0))

    def values(self, lam) -> list[tuple[Fraction, int, int]]:
        """The n numbers a'_i + m as ``(value, letter, m)`` triples."""
        lam = as_composition(lam)
        self._check_dim(lam)
        return [(a + m, i + 1, m) for i, (a, p) in enumerate(zip(self.aprime, lam.parts))
                for m in range(p)]

    def is_generic(self, lam) -> bool:
        vals = [v for v, _, _ in self.values(lam)]
        return len(set(vals)) == len(vals)

    def _check_dim(self, lam):
        if lam.d != self.d:
            raise ValueError(f"functional has {self.d} coefficients, composition has {lam.d} parts")


def delta_sequence(w: LambdaWord, c: GenericFunctional) -> tuple[Fraction, ...]:
    """Edge increments of ``c`` along the lifted path of ``w``."""
    c._check_dim(w.composition)
    seen = [0] * w.d
    out = []
    for a in w.letters:
        out.append(c.aprime[a - 1] + seen[a - 1])
        seen[a - 1] += 1
    return tuple(out)


def word_of_functional(c: GenericFunctional, lam) -> LambdaWord:
    """The word whose increment sequence under ``c`` is strictly increasing."""
    lam = as_composition(lam)
    vals = sorted(c.values(lam))
    for (x, i, m), (y, j, l) in zip(vals, vals[1:]):
        if x == y:
            raise NonGenericFunctional((i, m), (j, l), x)
    return LambdaWord(tuple(i for _, i, _ in vals), lam)


def region_of_point(c: GenericFunctional, lam) -> LambdaWord:
    """Label of the region of the deformed arrangement containing ``c'``.

    Two generic points get the same word exactly when they lie in the same
    region; the word is always non-nesting.
    """
    return word_of_functional(c, lam)


def path_coherence_system(w) -> DifferenceConstraintSystem:
    """y_1 < ... < y_n, and y_k = y_j + 1 for consecutive copies j < k of a letter."""
    letters = _letters(w)
    n = len(letters)
    # chain listed right to left so one relaxation pass settles it
    cons = [Constraint(k, k + 1, 0, True) for k in range(n - 2, -1, -1)]
    last = {}
    for k, a in enumerate(letters):
        j = last.get(a)
        if j is not None:
            cons.append(Constraint(k, j, 1, False))
            cons.append(Constraint(j, k, -1, False))
        last[a] = k
    sys = DifferenceConstraintSystem(n)
    sys.constraints = cons
    return sys


class PathCoherence(NamedTuple):
    coherent: bool
    functional: GenericFunctional | None
    result: FeasibilityResult

    def __bool__(self):
        return self.coherent


def is_coherent_path(w: LambdaWord, witness: bool = True) -> PathCoherence:
    """Decide coherence by feasibility; on success also return a functional selecting ``w``.

    The functional takes a'_i = y at the first position of letter i, where y
    is the witness of the path system.  ``witness=False`` skips building and
    checking it.
    """
    res = feasibility(path_coherence_system(w), dimension=False)
    if not res.feasible or not witness:
        return PathCoherence(res.feasible, None, res)
    y, scale = res.potentials, res.scale
    first = {}
    for k, a in enumerate(w.letters):
        first.setdefault(a, y[k])
    scaled = [first[i] for i in range(1, w.d + 1)]
    # the values a'_i + m, times scale, keyed for sorting
    vals = sorted((a + m * scale, i + 1) for i, (a, p) in enumerate(zip(scaled, w.composition.parts))
                  for m in range(p))
    if any(x[0] == z[0] for x, z in zip(vals, vals[1:])):
        c = _perturb(GenericFunctional(tuple(Fraction(a, scale) for a in scaled)), w)
    elif tuple(i for _, i in vals) != w.letters:
        raise AssertionError(f"witness functional does not select {w}")
    else:
        c = GenericFunctional(tuple(Fraction(a, scale) for a in scaled))
    return PathCoherence(True, c, res)


def _perturb(c: GenericFunctional, w: LambdaWord) -> GenericFunctional:
    # only reached if witness-derived values tie; keep it only if the order survives
    n = w.n
    eps = Fraction(1, 2 * (n + 1) ** 2)
    moved = GenericFunctional(tuple(a + (i + 1) * eps for i, a in enumerate(c.aprime)))
    delta = delta_sequence(w, moved)
    if any(x >= y for x, y in zip(delta, delta[1:])):
        raise ValueError(f"perturbing the witness for {w} broke the edge order")
    if word_of_functional(moved, w.composition) != w:
        raise AssertionError(f"witness functional does not select {w}")
    return moved


def _expressions(rho):
    """Replace the t-th copy of letter i (left to right) by the pair (i, t)."""
    seen = {}
    out = []
    for block in rho.blocks:
        row = []
        for i in block:
            t = seen.get(i, 0)
            row.append((i, t))
            seen[i] = t + 1
        out.append(row)
    return out


def subdivision_coherence_system(rho, pairwise: bool = False) -> DifferenceConstraintSystem:
    """System in x_1..x_d deciding whether an ordered partition is coherent.

    Expressions in one block are equal; the first expression of each block
    is strictly below the first of the next block.  ``pairwise=True`` adds a
    strict constraint for every pair across every two blocks instead.
    """
    lam = as_composition(rho.composition)
    sys = DifferenceConstraintSystem(lam.d)
    rows = _expressions(rho)
    for row in rows:
        i0, t0 = row[0]
        for i, t in row[1:]:
            # x_i + t == x_i0 + t0
            sys.add_eq(i - 1, i0 - 1, t0 - t)
    if pairwise:
        for j, lo in enumerate(rows):
            for hi in rows[j + 1:]:
                for i, t in lo:
                    for k, s in hi:
                        sys.add_lt(i - 1, k - 1, s - t)
    else:
        for lo, hi in zip(rows, rows[1:]):
            (i, t), (k, s) = lo[0], hi[0]
            # x_i + t < x_k + s
            sys.add_lt(i - 1, k - 1, s - t)
    return sys


class SubdivisionCoherence(NamedTuple):
    coherent: bool
    dimension: int | None
    result: FeasibilityResult

    def __bool__(self):
        return self.coherent


def is_coherent_subdivision(rho) -> SubdivisionCoherence:
    """Coherence of an ordered partition and the dimension of its face of the arrangement."""
    res = feasibility(subdivision_coherence_system(rho))
    return SubdivisionCoherence(res.feasible, res.dimension, res)
