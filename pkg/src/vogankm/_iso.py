"""Permutation search on labeled Dynkin diagrams (small ranks).

Automorphisms and canonical forms work directly on the Cartan matrix: a
permutation p is label-preserving when a[p(i)][p(j)] = a[i][j] for all i, j.
Both searches backtrack vertex by vertex, pruning candidates by a cheap
row invariant (the multiset of incident entry pairs).
"""

from __future__ import annotations

from typing import Optional

Matrix = tuple[tuple[int, ...], ...]


def _row_invariant(a: Matrix, i: int):
    return tuple(sorted((a[i][j], a[j][i]) for j in range(len(a)) if j != i))


def automorphisms(a: Matrix) -> list[tuple[int, ...]]:
    """All label-preserving vertex permutations, in lexicographic order."""
    n = len(a)
    inv = [_row_invariant(a, i) for i in range(n)]
    out: list[tuple[int, ...]] = []
    perm: list[int] = []
    used = [False] * n

    def extend(t: int):
        if t == n:
            out.append(tuple(perm))
            return
        for c in range(n):
            if used[c] or inv[c] != inv[t]:
                continue
            ok = True
            for s in range(t):
                if a[c][perm[s]] != a[t][s] or a[perm[s]][c] != a[s][t]:
                    ok = False
                    break
            if ok:
                used[c] = True
                perm.append(c)
                extend(t + 1)
                perm.pop()
                used[c] = False

    extend(0)
    return out


def canonical_key(a: Matrix) -> tuple[int, ...]:
    """Minimum adjacency-matrix string of a over all vertex relabelings.

    Cells are flattened in staircase order: assigning the t-th vertex appends
    exactly the newly determined cells (row t against columns 0..t, then
    column t against rows 0..t-1).  That makes the flattening grow by a fixed
    chunk per assignment, so a partial permutation can be pruned as soon as
    its prefix exceeds the best complete key seen so far.
    """
    n = len(a)
    best: Optional[tuple[int, ...]] = None
    perm: list[int] = []
    used = [False] * n

    def chunk(c: int, t: int) -> tuple[int, ...]:
        row = tuple(a[c][perm[s]] for s in range(t))
        col = tuple(a[perm[s]][c] for s in range(t))
        return row + (a[c][c],) + col

    def extend(t: int, prefix: tuple[int, ...]):
        nonlocal best
        if t == n:
            if best is None or prefix < best:
                best = prefix
            return
        cands = sorted((chunk(c, t), c) for c in range(n) if not used[c])
        for piece, c in cands:
            grown = prefix + piece
            if best is not None and grown > best[: len(grown)]:
                continue
            used[c] = True
            perm.append(c)
            extend(t + 1, grown)
            perm.pop()
            used[c] = False

    extend(0, ())
    assert best is not None
    return best


def are_isomorphic(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b):
        return False
    return canonical_key(a) == canonical_key(b)
