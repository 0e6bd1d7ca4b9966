from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from monopath.constraints import (
    Constraint,
    DifferenceConstraintSystem,
    cycle_is_infeasible,
    feasibility,
)


def lp_feasible(system):
    """Oracle: maximise a common slack t <= 1 on the strict rows with an LP."""
    nv = system.num_vars
    rows, rhs = [], []
    for c in system.constraints:
        row = np.zeros(nv + 1)
        row[c.u] += 1
        row[c.v] -= 1
        row[nv] = 1.0 if c.strict else 0.0
        rows.append(row)
        rhs.append(c.offset)
    if not rows:
        return True
    cost = np.zeros(nv + 1)
    cost[nv] = -1
    bounds = [(None, None)] * nv + [(0, 1)]
    res = linprog(cost, A_ub=np.array(rows), b_ub=np.array(rhs), bounds=bounds, method="highs")
    if res.status == 2:
        return False
    assert res.status == 0
    has_strict = any(c.strict for c in system.constraints)
    return (not has_strict) or -res.fun > 1e-9


def forced_classes(system):
    """Oracle for the dimension: Floyd-Warshall on the unscaled offsets."""
    nv = system.num_vars
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(nv)] for i in range(nv)]
    for c in system.constraints:
        # x[u] <= x[v] + offset: edge v -> u
        dist[c.v][c.u] = min(dist[c.v][c.u], c.offset)
    for k in range(nv):
        for i in range(nv):
            for j in range(nv):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    parent = list(range(nv))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i in range(nv):
        for j in range(nv):
            if dist[i][j] + dist[j][i] == 0:
                parent[find(i)] = find(j)
    return len({find(i) for i in range(nv)})


@st.composite
def systems(draw):
    nv = draw(st.integers(1, 5))
    cons = draw(st.lists(
        st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1), st.integers(-3, 3), st.booleans()),
        max_size=8,
    ))
    sys = DifferenceConstraintSystem(nv)
    for u, v, c, s in cons:
        sys.add(u, v, c, s)
    if draw(st.booleans()) and nv > 1:
        sys.add_eq(0, 1, draw(st.integers(-2, 2)))
    return sys


def test_chain_with_equality():
    sys = DifferenceConstraintSystem(2).add_lt(0, 1).add_eq(1, 0, 1)
    res = feasibility(sys)
    assert res.feasible
    assert res.witness == (0, 1)
    assert res.dimension == 1


def test_nesting_obstruction():
    # y1 < y2 < y3 < y4, y4 = y1 + 1, y3 = y2 + 1
    sys = DifferenceConstraintSystem(4)
    for k in range(3):
        sys.add_lt(k, k + 1)
    sys.add_eq(3, 0, 1).add_eq(2, 1, 1)
    res = feasibility(sys)
    assert not res.feasible
    assert cycle_is_infeasible(list(res.certificate))


def test_empty_system():
    res = feasibility(DifferenceConstraintSystem(3))
    assert res.feasible and res.dimension == 3
    assert res.witness == (0, 0, 0)


def test_self_loops():
    assert feasibility(DifferenceConstraintSystem(1).add_lt(0, 0, 1)).feasible
    res = feasibility(DifferenceConstraintSystem(1).add_lt(0, 0, 0))
    assert not res.feasible
    assert res.certificate == (Constraint(0, 0, 0, True),)


def test_index_checked():
    with pytest.raises(IndexError):
        DifferenceConstraintSystem(2).add(0, 2, 1)


@settings(max_examples=400, deadline=None)
@given(systems())
def test_against_lp_oracle(sys):
    res = feasibility(sys)
    assert res.feasible == lp_feasible(sys)
    if res.feasible:
        x = res.witness
        assert all(isinstance(v, Fraction) for v in x)
        assert all(c.holds(x) for c in sys.constraints)
        assert min(x) == 0
        assert res.dimension == forced_classes(sys)
    else:
        assert cycle_is_infeasible(list(res.certificate))
        assert set(res.certificate) <= set(sys.constraints)
