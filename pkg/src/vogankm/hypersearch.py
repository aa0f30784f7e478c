"""Search for hyperbolic diagrams by one-vertex extension and by census.

The extension step follows the classical recipe: append one vertex to a base
diagram, wire it to the old vertices in every way consistent with the GCM
axioms and a label bound, then keep exactly the results that classify as
hyperbolic.  Results are deduplicated up to diagram isomorphism via the
canonical form in _iso and returned in canonical-key order, so output is
deterministic regardless of enumeration internals.

The label bound loses nothing for rank >= 3: an edge with entry product > 4
is already a rank-2 hyperbolic subdiagram, which disqualifies any larger
diagram containing it.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional

from . import _iso
from .exceptions import NotSymmetrizable, RankBoundExceeded
from .gcm import GeneralizedCartanMatrix, classify, validate

CENSUS_RANK_BOUND = 8


def _is_hyperbolic(a) -> bool:
    try:
        return classify(validate(a)).hyperbolic
    except NotSymmetrizable:
        return False


def _dedup_canonical(matrices: Iterable[tuple[tuple[int, ...], ...]]) -> list[GeneralizedCartanMatrix]:
    by_key = {}
    for a in matrices:
        key = _iso.canonical_key(a)
        by_key.setdefault(key, a)
    return [validate(by_key[k]) for k in sorted(by_key)]


def extend(base: GeneralizedCartanMatrix, max_label: int) -> list[GeneralizedCartanMatrix]:
    """All hyperbolic one-vertex extensions of base, up to isomorphism.

    The new vertex gets off-diagonal entry pairs from [-max_label, -1] on a
    nonempty subset of base vertices (zero-symmetry on the rest).  Keeping
    the result indecomposable and hyperbolic is left to the classifier.
    """
    r = base.n
    pair_choices = [(0, 0)] + [
        (-p, -q) for p in range(1, max_label + 1) for q in range(1, max_label + 1)
    ]
    survivors = []
    for wiring in itertools.product(pair_choices, repeat=r):
        if all(p == (0, 0) for p in wiring):
            continue
        a = [list(row) + [0] for row in base.a] + [[0] * (r + 1)]
        a[r][r] = 2
        for j, (new_old, old_new) in enumerate(wiring):
            a[r][j] = new_old
            a[j][r] = old_new
        a = tuple(tuple(row) for row in a)
        if _is_hyperbolic(a):
            survivors.append(a)
    return _dedup_canonical(survivors)


def census(rank: int, max_label: int) -> list[GeneralizedCartanMatrix]:
    """All connected hyperbolic GCMs of the given rank with entries bounded
    by max_label, up to isomorphism; exact and deterministic.

    Candidate count grows like (max_label^2 + 1)^C(rank,2): instant through
    rank 4, minutes at rank 5 with labels beyond 1, and the hard rank bound
    exists because rank 6+ at full label width is out of desk reach."""
    if rank > CENSUS_RANK_BOUND:
        raise RankBoundExceeded(
            f"census rank {rank} exceeds the exhaustive bound {CENSUS_RANK_BOUND}"
        )
    pairs = list(itertools.combinations(range(rank), 2))
    pair_choices = [(0, 0)] + [
        (-p, -q) for p in range(1, max_label + 1) for q in range(1, max_label + 1)
    ]
    survivors = []
    for assignment in itertools.product(pair_choices, repeat=len(pairs)):
        a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for (i, j), (aij, aji) in zip(pairs, assignment):
            a[i][j] = aij
            a[j][i] = aji
        a = tuple(tuple(row) for row in a)
        if _is_hyperbolic(a):
            survivors.append(a)
    return _dedup_canonical(survivors)


def contains_isomorphic(results: Iterable[GeneralizedCartanMatrix],
                        target: GeneralizedCartanMatrix) -> Optional[GeneralizedCartanMatrix]:
    """First result isomorphic to target, or None."""
    want = _iso.canonical_key(target.a)
    for g in results:
        if _iso.canonical_key(g.a) == want:
            return g
    return None
