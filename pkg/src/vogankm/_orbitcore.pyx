# cython: language_level=3
"""Compiled orbit kernel: closure and full partition over bitmask paintings.

Mirrors _orbit_py exactly; see kernels.byte_tables for the permutation
table layout.  Masks fit in 32 bits (the fixed-vertex bound is 24).
"""

from libc.stdlib cimport free, malloc

from array import array

cimport cython


cdef inline unsigned int _apply(unsigned int mask, const unsigned int[::1] tables,
                                Py_ssize_t base, int nb) nogil:
    cdef unsigned int out = 0
    cdef int b
    for b in range(nb):
        out |= tables[base + (<Py_ssize_t> b << 8) + ((mask >> (8 * b)) & 0xFF)]
    return out


@cython.boundscheck(False)
@cython.wraparound(False)
def closure(int k, unsigned int start, const unsigned int[::1] flips,
            int n_perms, int nb, const unsigned int[::1] tables):
    """All masks reachable from start; sorted ascending."""
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << k
    cdef unsigned char* seen = <unsigned char*> malloc(size)
    cdef unsigned int* stack = <unsigned int*> malloc(size * sizeof(unsigned int))
    if seen == NULL or stack == NULL:
        free(seen)
        free(stack)
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(size):
        seen[i] = 0
    cdef Py_ssize_t top = 0
    cdef unsigned int m, c, rest
    cdef int t, p
    seen[start] = 1
    stack[top] = start
    top += 1
    cdef Py_ssize_t count = 1
    while top > 0:
        top -= 1
        m = stack[top]
        rest = m
        while rest:
            t = _ctz(rest)
            c = m ^ flips[t]
            if not seen[c]:
                seen[c] = 1
                count += 1
                stack[top] = c
                top += 1
            rest &= rest - 1
        for p in range(n_perms):
            c = _apply(m, tables, (<Py_ssize_t> p) * nb * 256, nb)
            if not seen[c]:
                seen[c] = 1
                count += 1
                stack[top] = c
                top += 1
    out = array("I", bytes(0)) if count == 0 else array("I", [0]) * count
    cdef unsigned int[::1] view = out
    cdef Py_ssize_t w = 0
    for i in range(size):
        if seen[i]:
            view[w] = <unsigned int> i
            w += 1
    free(seen)
    free(stack)
    return out


cdef inline int _ctz(unsigned int x) nogil:
    cdef int t = 0
    while not (x & 1):
        x >>= 1
        t += 1
    return t


@cython.boundscheck(False)
@cython.wraparound(False)
def partition_all(int k, const unsigned int[::1] flips,
                  int n_perms, int nb, const unsigned int[::1] tables):
    """Class id per mask over the full 2^k space, smallest-mask order."""
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << k
    out = array("i", [-1]) * size
    cdef int[::1] cls = out
    cdef unsigned int* stack = <unsigned int*> malloc(size * sizeof(unsigned int))
    if stack == NULL:
        raise MemoryError()
    cdef Py_ssize_t s, top
    cdef unsigned int m, c, rest
    cdef int t, p, next_id = 0
    for s in range(size):
        if cls[s] != -1:
            continue
        cls[s] = next_id
        top = 0
        stack[top] = <unsigned int> s
        top += 1
        while top > 0:
            top -= 1
            m = stack[top]
            rest = m
            while rest:
                t = _ctz(rest)
                c = m ^ flips[t]
                if cls[c] == -1:
                    cls[c] = next_id
                    stack[top] = c
                    top += 1
                rest &= rest - 1
            for p in range(n_perms):
                c = _apply(m, tables, (<Py_ssize_t> p) * nb * 256, nb)
                if cls[c] == -1:
                    cls[c] = next_id
                    stack[top] = c
                    top += 1
        next_id += 1
    free(stack)
    return out
