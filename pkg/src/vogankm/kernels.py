"""Orbit-kernel selection: compiled Cython core with pure-Python fallback.

The closure/partition inner loop dominates runtime once the painting space
grows past ~2^16, so it is compiled when the extension built; everything
else in the library stays pure.  Set VOGANKM_PURE=1 to force the fallback
(used by the benchmark and the test suite to exercise both paths).
"""

from __future__ import annotations

import os
from array import array

from . import _orbit_py

if os.environ.get("VOGANKM_PURE") == "1":
    _impl = _orbit_py
else:
    try:
        from . import _orbitcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _orbit_py


def backend_name() -> str:
    return "cython" if _impl.__name__.endswith("_orbitcore") else "python"


def byte_tables(k: int, perms) -> tuple[int, int, array]:
    """Flatten bit permutations into byte lookup tables.

    Layout: tables[p*nb*256 + b*256 + byte] = image of (byte << 8b) under
    perm p, with nb = ceil(k/8) bytes per mask.  Applying a permutation is
    then an OR of nb table lookups in either backend.
    """
    nb = max(1, (k + 7) // 8)
    flat = array("I", [0]) * (max(1, len(perms)) * nb * 256)
    for p, perm in enumerate(perms):
        for b in range(nb):
            base = p * nb * 256 + b * 256
            for byte in range(256):
                m = 0
                for bit in range(8):
                    src = b * 8 + bit
                    if byte >> bit & 1 and src < k:
                        m |= 1 << perm[src]
                flat[base + byte] = m
    return len(perms), nb, flat


def closure(k: int, start: int, flips, perms) -> list[int]:
    """Masks reachable from start under flip moves and bit permutations."""
    n_perms, nb, tables = byte_tables(k, perms)
    return list(_impl.closure(k, start, array("I", flips), n_perms, nb, tables))


def partition_all(k: int, flips, perms):
    """Array of class ids (one per mask in range(2^k)), smallest-mask order."""
    n_perms, nb, tables = byte_tables(k, perms)
    return _impl.partition_all(k, array("I", flips), n_perms, nb, tables)
