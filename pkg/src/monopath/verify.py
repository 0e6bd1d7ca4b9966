"""Batch verification suites run by ``monopath verify``.

Each suite returns a list of :class:`Check` records; a suite passes when
every record does.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, prod
from typing import NamedTuple

from .arrangements import (
    catalan_face_count,
    char_poly_closed,
    char_poly_finite_field,
    distinct_coordinate_cosets,
    is_prime,
    poly_eval,
    region_count,
    verify_coset_bijection,
)
from .coherence import is_coherent_path, is_coherent_subdivision, word_of_functional
from .geometry import on_upper_hyperplane, swap_formula, upper_facet_paths, vertex_certificate, word_integral
from .subdivisions import (
    OrderedPartition,
    atoms_below,
    face_census,
    incoherency_table,
    sigma_words,
)
from .words import (
    Composition,
    LambdaWord,
    coherent_count_formula,
    compositions,
    enumerate_words,
    is_non_nesting,
    iter_letter_tuples,
    nesting_count,
)


class Check(NamedTuple):
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def as_dict(self):
        return {"name": self.name, "expected": _jsonable(self.expected),
                "actual": _jsonable(self.actual), "passed": self.passed}


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def census(lam) -> int:
    return sum(1 for t in iter_letter_tuples(lam) if is_non_nesting(t))


def suite_counts(max_n=8):
    checks = []
    for n in range(1, max_n + 1):
        for lam in compositions(n):
            found = census(lam)
            checks.append(Check(f"census {lam}", coherent_count_formula(lam), found))
            checks.append(Check(f"regions {lam}", coherent_count_formula(lam), region_count(lam)))
            total = prod(factorial(p) for p in lam.parts)
            fraction = Fraction(found * total, factorial(n))
            checks.append(Check(f"fraction {lam}", Fraction(total, factorial(n - lam.d + 1)), fraction))
    for d in range(1, 5):
        lam = Composition((2,) * d)
        fraction = Fraction(census(lam) * 2 ** d, factorial(2 * d))
        checks.append(Check(f"fraction (2,)*{d}", Fraction(2 ** d, factorial(d + 1)), fraction))
    return checks


def suite_coherence(max_n=8):
    checks = []
    for n in range(1, max_n + 1):
        for lam in compositions(n):
            bad = sum(
                1 for w in enumerate_words(lam)
                if is_coherent_path(w, witness=False).coherent != is_non_nesting(w.letters)
            )
            checks.append(Check(f"feasibility vs nesting {lam}", 0, bad))
    for text, expected in (("12121", True), ("12211", False)):
        checks.append(Check(f"word {text}", expected, is_coherent_path(LambdaWord.parse(text)).coherent))
    return checks


def suite_roundtrip(max_n=7):
    checks = []
    for n in range(1, max_n + 1):
        for lam in compositions(n):
            bad = 0
            for w in enumerate_words(lam):
                if not is_non_nesting(w.letters):
                    continue
                c = is_coherent_path(w).functional
                if word_of_functional(c, lam) != w:
                    bad += 1
            checks.append(Check(f"round trip {lam}", 0, bad))
    return checks


def suite_charpoly(max_n=5, max_d=3, max_q=23):
    checks = []
    for n in range(1, max_n + 1):
        for lam in compositions(n):
            if lam.d > max_d:
                continue
            poly = char_poly_closed(lam)
            for q in range(n + 1, max_q + 1):
                if is_prime(q):
                    checks.append(Check(f"chi {lam} q={q}", poly_eval(poly, q), char_poly_finite_field(lam, q)))
    return checks


def suite_faces():
    checks = []
    for d in (2, 3):
        got = face_census(Composition((2,) * d))
        want = {k: catalan_face_count(d, k) for k in range(1, d + 1)}
        checks.append(Check(f"face census d={d}", want, got))
        checks.append(Check(f"euler d={d}", 1, sum((-1) ** (d - k) * got.get(k, 0) for k in range(1, d + 1))))
    return checks


def suite_swap(max_n=7):
    checks = []
    for n in range(1, max_n + 1):
        for lam in compositions(n):
            bad = 0
            cache = {}
            for w in enumerate_words(lam):
                cache[w.letters] = word_integral(w)
            for w in enumerate_words(lam):
                for k in range(1, n):
                    if w.letters[k - 1] < w.letters[k]:
                        s = list(w.letters)
                        s[k - 1], s[k] = s[k], s[k - 1]
                        diff = tuple(b - a for a, b in zip(cache[w.letters], cache[tuple(s)]))
                        bad += diff != swap_formula(w, k)
            checks.append(Check(f"swap identity {lam}", 0, bad))
    return checks


def suite_vertices():
    checks = []
    for parts in ((2, 1), (2, 2), (2, 2, 2), (3, 2, 1)):
        lam = Composition(parts)
        words = [w for w in enumerate_words(lam) if is_non_nesting(w.letters)]
        ok = sum(vertex_certificate(w) for w in words)
        checks.append(Check(f"vertex certificates {parts}", len(words), ok))
    return checks


def suite_upper():
    checks = []
    for parts in ((2, 2, 2), (3, 2, 1)):
        paths = upper_facet_paths(parts)
        checks.append(Check(f"upper facet {parts}", len(paths), sum(on_upper_hyperplane(parts, I) for _, I in paths)))
    return checks


def suite_incoherency(max_d=4):
    checks = []
    for d in range(2, max_d + 1):
        lam = Composition((2,) * d)
        table = incoherency_table(lam)
        best = max(table.values())
        checks.append(Check(f"max incoherency d={d}", comb(d, 2), best))
        checks.append(Check(f"w_sigma attain d={d}", True, all(table[t] == best for t in sigma_words(d))))
        if d <= 3:
            bad = sum(1 for t, v in table.items() if v < nesting_count(t))
            checks.append(Check(f"incoherency >= nestings d={d}", 0, bad))
    return checks


def suite_coset(max_n=7):
    checks = []
    for n in range(1, max_n + 1):
        for lam in compositions(n):
            checks.append(Check(f"coset bijection {lam}", True, verify_coset_bijection(lam)))
            checks.append(Check(f"coset count {lam}", coherent_count_formula(lam),
                                len(distinct_coordinate_cosets(n, lam.d))))
    return checks


def suite_atoms():
    rho = OrderedPartition.parse("1|1,2|2|1,2|1", (4, 3))
    coherent_atoms = [str(a) for a in atoms_below(rho) if is_coherent_subdivision(a).coherent]
    return [
        Check("(1|12|2|12|1) coherent", False, is_coherent_subdivision(rho).coherent),
        Check("coherent atoms below", ["1|2|1|2|1|2|1"], coherent_atoms),
    ]


SUITES = {
    "counts": suite_counts,
    "coherence": suite_coherence,
    "roundtrip": suite_roundtrip,
    "charpoly": suite_charpoly,
    "faces": suite_faces,
    "swap": suite_swap,
    "vertices": suite_vertices,
    "upper": suite_upper,
    "incoherency": suite_incoherency,
    "coset": suite_coset,
    "atoms": suite_atoms,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()
