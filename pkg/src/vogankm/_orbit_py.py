"""Pure-Python orbit kernel.

Paintings live in a compact k-bit mask space (bit t = t-th sigma-fixed
vertex).  Moves are (a) a flip-XOR per painted bit and (b) bit permutations
given as flattened byte lookup tables; see kernels.byte_tables for the table
layout shared with the compiled backend.
"""

from __future__ import annotations

from array import array


def _apply_tables(mask: int, tables, base: int, nb: int) -> int:
    out = 0
    for b in range(nb):
        out |= tables[base + b * 256 + ((mask >> (8 * b)) & 0xFF)]
    return out


def closure(k, start, flips, n_perms, nb, tables):
    """All masks reachable from start; sorted ascending."""
    seen = {start}
    stack = [start]
    while stack:
        m = stack.pop()
        rest = m
        while rest:
            low = rest & -rest
            c = m ^ flips[low.bit_length() - 1]
            if c not in seen:
                seen.add(c)
                stack.append(c)
            rest ^= low
        for p in range(n_perms):
            c = _apply_tables(m, tables, p * nb * 256, nb)
            if c not in seen:
                seen.add(c)
                stack.append(c)
    return sorted(seen)


def partition_all(k, flips, n_perms, nb, tables):
    """Class id per mask over the full 2^k painting space.

    Ids are assigned in order of each class's smallest mask, so the result
    is deterministic and independent of traversal internals.
    """
    size = 1 << k
    cls = array("i", [-1]) * size
    next_id = 0
    for s in range(size):
        if cls[s] != -1:
            continue
        cid = next_id
        next_id += 1
        cls[s] = cid
        stack = [s]
        while stack:
            m = stack.pop()
            rest = m
            while rest:
                low = rest & -rest
                c = m ^ flips[low.bit_length() - 1]
                if cls[c] == -1:
                    cls[c] = cid
                    stack.append(c)
                rest ^= low
            for p in range(n_perms):
                c = _apply_tables(m, tables, p * nb * 256, nb)
                if cls[c] == -1:
                    cls[c] = cid
                    stack.append(c)
    return cls
