"""Exact feasibility for systems of difference constraints.

Every constraint reads ``x[u] - x[v] <= offset`` (or ``<`` when strict)
with an integer offset.  Strict constraints are removed by scaling: with
``V`` variables, offsets are multiplied by ``V + 1`` and strict ones are
tightened by one.  A simple cycle has at most ``V`` edges, so the scaled
system has a negative cycle exactly when the original has a cycle of
negative total offset, or of zero offset through a strict edge.  Dividing
the scaled potentials by ``V + 1`` then gives a rational witness that meets
strict constraints strictly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple


class Constraint(NamedTuple):
    u: int
    v: int
    offset: int
    strict: bool = False

    def holds(self, x) -> bool:
        diff = x[self.u] - x[self.v]
        return diff < self.offset if self.strict else diff <= self.offset

    def __str__(self):
        op = "<" if self.strict else "<="
        return f"x[{self.u}] - x[{self.v}] {op} {self.offset}"


@dataclass
class DifferenceConstraintSystem:
    num_vars: int
    constraints: list[Constraint] = field(default_factory=list)

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        for c in self.constraints:
            self._check(c.u, c.v)

    def _check(self, u, v):
        if not (0 <= u < self.num_vars and 0 <= v < self.num_vars):
            raise IndexError(f"variable index out of range 0..{self.num_vars - 1}")

    def add(self, u: int, v: int, offset: int, strict: bool = False):
        """Add ``x[u] - x[v] <= offset`` (``<`` if strict)."""
        self._check(u, v)
        self.constraints.append(Constraint(u, v, int(offset), bool(strict)))
        return self

    def add_lt(self, u, v, offset=0):
        return self.add(u, v, offset, True)

    def add_le(self, u, v, offset=0):
        return self.add(u, v, offset, False)

    def add_eq(self, u, v, offset=0):
        """Add ``x[u] - x[v] == offset`` as two opposite non-strict constraints."""
        self.add(u, v, offset)
        return self.add(v, u, -offset)


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of :func:`feasibility`.

    ``potentials`` are the integer solutions of the scaled system; the
    rational witness is ``potentials / scale``.
    """

    feasible: bool
    potentials: tuple[int, ...] | None = None
    scale: int = 1
    certificate: tuple[Constraint, ...] | None = None
    dimension: int | None = None

    def __bool__(self):
        return self.feasible

    @cached_property
    def witness(self) -> tuple[Fraction, ...] | None:
        if self.potentials is None:
            return None
        return tuple(Fraction(x, self.scale) for x in self.potentials)


def _strong_components(num, adj) -> int:
    # Kosaraju, iterative; returns the number of strongly connected components
    order, seen = [], [False] * num
    for s in range(num):
        if seen[s]:
            continue
        seen[s] = True
        stack = [(s, iter(adj[s]))]
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append((nxt, iter(adj[nxt])))
                    break
            else:
                stack.pop()
                order.append(node)
    radj = [[] for _ in range(num)]
    for a in range(num):
        for b in adj[a]:
            radj[b].append(a)
    comp = [False] * num
    count = 0
    for s in reversed(order):
        if comp[s]:
            continue
        count += 1
        comp[s] = True
        stack = [s]
        while stack:
            node = stack.pop()
            for nxt in radj[node]:
                if not comp[nxt]:
                    comp[nxt] = True
                    stack.append(nxt)
    return count


def feasibility(system: DifferenceConstraintSystem, dimension: bool = True) -> FeasibilityResult:
    """Decide a difference-constraint system exactly.

    Returns a witness (normalised so its smallest entry is 0) when feasible,
    otherwise a certificate cycle of constraints whose offsets sum to a
    negative number, or to zero with at least one strict edge.

    The dimension of the solution set is the number of classes of variables
    whose differences are forced: the strongly connected components of the
    tight edges under the witness potentials.  Pass ``dimension=False`` to
    skip that step.
    """
    nv = system.num_vars
    scale = nv + 1
    cons = system.constraints
    # relax along edge v -> u: dist[u] <= dist[v] + w
    edges = [(c.u, c.v, c.offset * scale - c.strict) for c in cons]
    dist = [0] * nv
    pred = [-1] * nv
    for _ in range(nv):
        changed = False
        for idx, (u, v, w) in enumerate(edges):
            nd = dist[v] + w
            if nd < dist[u]:
                dist[u] = nd
                pred[u] = idx
                changed = True
        if not changed:
            break
    else:
        last = -1
        for idx, (u, v, w) in enumerate(edges):
            nd = dist[v] + w
            if nd < dist[u]:
                dist[u] = nd
                pred[u] = idx
                last = u
        if last >= 0:
            return FeasibilityResult(False, certificate=_extract_cycle(last, pred, cons, nv))

    lo = min(dist)
    dim = None
    if dimension:
        adj = [[] for _ in range(nv)]
        for u, v, w in edges:
            if dist[v] + w == dist[u]:
                adj[v].append(u)
        dim = _strong_components(nv, adj)
    return FeasibilityResult(True, tuple(x - lo for x in dist), scale, dimension=dim)


def _extract_cycle(x, pred, cons, nv):
    for _ in range(nv):
        x = cons[pred[x]].v
    start, cycle = x, []
    while True:
        c = cons[pred[x]]
        cycle.append(c)
        x = c.v
        if x == start:
            break
    cycle.reverse()
    return tuple(cycle)


def cycle_is_infeasible(cycle) -> bool:
    """Check that a certificate really is a closed forbidden cycle."""
    if not cycle:
        return False
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        # x[a.u] - x[a.v] then x[b.u] - x[b.v] chains through a.u == b.v
        if a.u != b.v:
            return False
    total = sum(c.offset for c in cycle)
    return total < 0 or (total == 0 and any(c.strict for c in cycle))
