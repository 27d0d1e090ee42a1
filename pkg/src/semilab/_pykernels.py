"""Pure-Python versions of the hot kernels.

Tables are flat row-major sequences of length ``n*n``; ``-1`` marks an
unfilled cell during search.  ``_ckernels.pyx`` implements the same
functions with the same results.
"""
from itertools import permutations


def _triple_ok(T, n, a, b, c):
    ab = T[a * n + b]
    if ab < 0:
        return True
    left = T[ab * n + c]
    if left < 0:
        return True
    bc = T[b * n + c]
    if bc < 0:
        return True
    right = T[a * n + bc]
    return right < 0 or left == right


def _cell_ok(T, n, x, y):
    # every triple whose four products include the cell (x, y)
    for c in range(n):
        if not _triple_ok(T, n, x, y, c):
            return False
    for a in range(n):
        if not _triple_ok(T, n, a, x, y):
            return False
    for a in range(n):
        for b in range(n):
            if T[a * n + b] == x and not _triple_ok(T, n, a, b, y):
                return False
            if T[a * n + b] == y and not _triple_ok(T, n, x, a, b):
                return False
    return True


def _beaten(T, n, filled, perms):
    """True if some relabelling is already lexicographically smaller."""
    for p, inv in perms:
        for k in range(filled):
            i, j = divmod(k, n)
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


def enumerate_lexmin(n):
    """Every associative ``n x n`` table that is lex-least in its isomorphism class.

    Orderly generation: cells are filled row-major with values in increasing
    order, partial tables are pruned on associativity and as soon as some
    relabelling is provably smaller on the filled prefix.  Output is in
    lexicographic order.
    """
    perms = []
    for p in permutations(range(n)):
        if p == tuple(range(n)):
            continue
        inv = [0] * n
        for x, px in enumerate(p):
            inv[px] = x
        perms.append((p, inv))
    size = n * n
    T = [-1] * size
    out = []

    def rec(pos):
        if pos == size:
            if not _beaten(T, n, size, perms):
                out.append(tuple(T))
            return
        x, y = divmod(pos, n)
        for v in range(n):
            T[pos] = v
            if _cell_ok(T, n, x, y) and (y != n - 1 or not _beaten(T, n, pos + 1, perms)):
                rec(pos + 1)
        T[pos] = -1

    rec(0)
    return out


def lexmin_relabel(flat, n):
    """Lex-least relabelled table over all ``n!`` permutations.

    Returns ``(table, perm)`` where ``perm[x]`` is the new label of ``x``.
    """
    best = tuple(flat)
    best_perm = tuple(range(n))
    for p in permutations(range(n)):
        inv = [0] * n
        for x, px in enumerate(p):
            inv[px] = x
        smaller = False
        for k in range(n * n):
            i, j = divmod(k, n)
            a = p[flat[inv[i] * n + inv[j]]]
            b = best[k]
            if a < b:
                smaller = True
                break
            if a > b:
                break
        if smaller:
            best = tuple(p[flat[inv[i] * n + inv[j]]] for i in range(n) for j in range(n))
            best_perm = p
    return best, best_perm


def find_nonassociative(flat, n):
    for x in range(n):
        for y in range(n):
            xy = flat[x * n + y]
            for z in range(n):
                left = flat[xy * n + z]
                right = flat[x * n + flat[y * n + z]]
                if left != right:
                    return (x, y, z)
    return None
