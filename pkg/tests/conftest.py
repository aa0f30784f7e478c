"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own code paths: the
determinant oracle is cofactor expansion, and the orbit oracle is a naive
frozenset sweep with its own reading of the move rules.
"""

import itertools

import pytest

from vogankm import catalog, validate


def cofactor_det(m):
    """Brute-force cofactor-expansion determinant (exact, no elimination)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for c in range(n):
        sub = [row[:c] + row[c + 1:] for row in m[1:]]
        total += (-1) ** c * m[0][c] * cofactor_det(sub)
    return total


def naive_orbit_partition(a, automorphisms=(), fixed=None):
    """Partition all paintings of ``fixed`` into move-closure classes.

    Independent implementation: paintings are frozensets, the flip at a
    painted vertex i toggles every other fixed j with a[i][j] odd, and
    closures are computed by sweep-until-stable breadth-first growth.
    """
    n = len(a)
    fixed = sorted(fixed if fixed is not None else range(n))
    classes = []
    seen = set()
    for r in range(len(fixed) + 1):
        for combo in itertools.combinations(fixed, r):
            start = frozenset(combo)
            if start in seen:
                continue
            orb = {start}
            frontier = [start]
            while frontier:
                nxt = []
                for p in frontier:
                    for i in p:
                        q = set(p)
                        for j in fixed:
                            if j != i and a[i][j] % 2 != 0:
                                q.symmetric_difference_update({j})
                        cand = frozenset(q)
                        if cand not in orb:
                            orb.add(cand)
                            nxt.append(cand)
                    for perm in automorphisms:
                        cand = frozenset(perm[x] for x in p)
                        if cand not in orb:
                            orb.add(cand)
                            nxt.append(cand)
                frontier = nxt
            seen |= orb
            classes.append(orb)
    return classes


@pytest.fixture(scope="session")
def e10():
    return catalog.lookup("E10")


@pytest.fixture
def a2():
    return validate([[2, -1], [-1, 2]], "A2")


@pytest.fixture
def a3_path():
    return validate([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], "A3")
