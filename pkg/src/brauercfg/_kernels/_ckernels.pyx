# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled Cayley-table kernels.  Same contract as ``_pykernels``."""

from array import array

from cpython cimport array as carray


cdef class Table:
    cdef readonly int n
    cdef int[::1] flat

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        self.n = len(rows)
        self.flat = array("i", [x for r in rows for x in r])


def prepare_table(rows):
    return Table(rows)


def closure(Table table, seed, gens):
    cdef int n = table.n
    cdef int[::1] t = table.flat
    cdef carray.array member_buf = array("b", bytes(n))
    cdef carray.array queue_buf = array("i", bytes(4 * n))
    cdef signed char[::1] member = member_buf
    cdef int[::1] queue = queue_buf
    cdef carray.array gen_buf = array("i", list(gens))
    cdef int[::1] g = gen_buf
    cdef int ng = len(gen_buf)
    cdef int head = 0, tail = 0, x, y, k, s
    for s in seed:
        if not member[s]:
            member[s] = 1
            queue[tail] = s
            tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        for k in range(ng):
            y = t[x * n + g[k]]
            if not member[y]:
                member[y] = 1
                queue[tail] = y
                tail += 1
    return frozenset(queue_buf[:tail])


def associativity_violation(Table table):
    cdef int n = table.n
    cdef int[::1] t = table.flat
    cdef int a, b, c, ab
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            for c in range(n):
                if t[ab * n + c] != t[a * n + t[b * n + c]]:
                    return (a, b, c)
    return None
