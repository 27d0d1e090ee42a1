# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see _pykernels.py for the contracts."""
from itertools import permutations

from libc.stdlib cimport free, malloc


cdef inline bint _triple_ok(int* T, int n, int a, int b, int c) noexcept nogil:
    cdef int ab = T[a * n + b]
    if ab < 0:
        return True
    cdef int left = T[ab * n + c]
    if left < 0:
        return True
    cdef int bc = T[b * n + c]
    if bc < 0:
        return True
    cdef int right = T[a * n + bc]
    return right < 0 or left == right


cdef bint _cell_ok(int* T, int n, int x, int y) noexcept nogil:
    cdef int a, b, c, v
    for c in range(n):
        if not _triple_ok(T, n, x, y, c):
            return False
    for a in range(n):
        if not _triple_ok(T, n, a, x, y):
            return False
    for a in range(n):
        for b in range(n):
            v = T[a * n + b]
            if v == x and not _triple_ok(T, n, a, b, y):
                return False
            if v == y and not _triple_ok(T, n, x, a, b):
                return False
    return True


cdef bint _beaten(int* T, int n, int filled, int* perms, int* invs, int nperms) noexcept nogil:
    cdef int q, k, i, j, src, a, b
    cdef int* p
    cdef int* inv
    for q in range(nperms):
        p = perms + q * n
        inv = invs + q * n
        for k in range(filled):
            i = k // n
            j = k % n
            src = T[inv[i] * n + inv[j]]
            if src < 0:
                break
            a = p[src]
            b = T[k]
            if a < b:
                return True
            if a > b:
                break
    return False


cdef class _Search:
    cdef int n, size, nperms
    cdef int* T
    cdef int* perms
    cdef int* invs
    cdef list out

    def __cinit__(self, int n):
        cdef int q, x
        self.n = n
        self.size = n * n
        plist = [p for p in permutations(range(n)) if p != tuple(range(n))]
        self.nperms = len(plist)
        self.T = <int*> malloc(self.size * sizeof(int))
        self.perms = <int*> malloc((self.nperms * n + 1) * sizeof(int))
        self.invs = <int*> malloc((self.nperms * n + 1) * sizeof(int))
        if self.T == NULL or self.perms == NULL or self.invs == NULL:
            raise MemoryError()
        for x in range(self.size):
            self.T[x] = -1
        for q, p in enumerate(plist):
            for x in range(n):
                self.perms[q * n + x] = p[x]
                self.invs[q * n + p[x]] = x
        self.out = []

    def __dealloc__(self):
        free(self.T)
        free(self.perms)
        free(self.invs)

    cdef void rec(self, int pos):
        cdef int n = self.n
        cdef int x, y, v
        if pos == self.size:
            if not _beaten(self.T, n, self.size, self.perms, self.invs, self.nperms):
                self.out.append(tuple([self.T[x] for x in range(self.size)]))
            return
        x = pos // n
        y = pos % n
        for v in range(n):
            self.T[pos] = v
            if _cell_ok(self.T, n, x, y) and (
                y != n - 1 or not _beaten(self.T, n, pos + 1, self.perms, self.invs, self.nperms)
            ):
                self.rec(pos + 1)
        self.T[pos] = -1


def enumerate_lexmin(int n):
    s = _Search(n)
    s.rec(0)
    return s.out


def lexmin_relabel(flat, int n):
    cdef int size = n * n
    cdef int k, i, j, a, b, x
    cdef bint smaller
    cdef int* F = <int*> malloc(size * sizeof(int))
    cdef int* B = <int*> malloc(size * sizeof(int))
    cdef int* P = <int*> malloc(n * sizeof(int))
    cdef int* inv = <int*> malloc(n * sizeof(int))
    if F == NULL or B == NULL or P == NULL or inv == NULL:
        free(F); free(B); free(P); free(inv)
        raise MemoryError()
    try:
        for k in range(size):
            F[k] = flat[k]
            B[k] = flat[k]
        best_perm = tuple(range(n))
        for p in permutations(range(n)):
            for x in range(n):
                P[x] = p[x]
                inv[P[x]] = x
            smaller = False
            for k in range(size):
                i = k // n
                j = k % n
                a = P[F[inv[i] * n + inv[j]]]
                b = B[k]
                if a < b:
                    smaller = True
                    break
                if a > b:
                    break
            if smaller:
                for k in range(size):
                    i = k // n
                    j = k % n
                    B[k] = P[F[inv[i] * n + inv[j]]]
                best_perm = p
        return tuple([B[k] for k in range(size)]), best_perm
    finally:
        free(F); free(B); free(P); free(inv)


def find_nonassociative(flat, int n):
    cdef int size = n * n
    cdef int x, y, z, xy, left, right, k
    cdef int* F = <int*> malloc(size * sizeof(int))
    if F == NULL:
        raise MemoryError()
    try:
        for k in range(size):
            F[k] = flat[k]
        for x in range(n):
            for y in range(n):
                xy = F[x * n + y]
                for z in range(n):
                    left = F[xy * n + z]
                    right = F[x * n + F[y * n + z]]
                    if left != right:
                        return (x, y, z)
        return None
    finally:
        free(F)
