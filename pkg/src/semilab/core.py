"""Finite semigroups given by Cayley tables.

Elements are the integers ``0..n-1``; ``S.table[x][y]`` is the product
``x*y``.  Subsets (ideals, kernels, subsemilattices) are plain sorted tuples
of element indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    AssociativityError,
    EmptyInput,
    NotAnIdeal,
    SizeLimitExceeded,
    TableFormatError,
    ZeroError,
)

CONGRUENCE_LIMIT = 10


def _find_nonassociative(table, n):
    for x in range(n):
        row = table[x]
        for y in range(n):
            xy = row[y]
            left_row = table[xy]
            trow = table[y]
            for z in range(n):
                left = left_row[z]
                right = row[trow[z]]
                if left != right:
                    return (x, y, z), left, right
    return None


def _find_zero(table, n):
    for z in range(n):
        if all(table[z][x] == z and table[x][z] == z for x in range(n)):
            return z
    return None


class Semigroup:
    """An associative Cayley table with an auto-detected zero.

    Instances are immutable and hashable by their table.  The constructor
    validates associativity; pass ``check=False`` only for tables that are
    associative by construction.
    """

    __slots__ = ("n", "table", "zero", "_hash")

    def __init__(self, table: Sequence[Sequence[int]], zero: int | None = None, *, check: bool = True):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if n == 0:
            raise TableFormatError("a semigroup needs at least one element")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise TableFormatError(f"row {i} has {len(row)} entries, expected {n}")
            for v in row:
                if not 0 <= v < n:
                    raise TableFormatError(f"row {i} contains {v}, outside 0..{n - 1}")
        if check:
            bad = _find_nonassociative(rows, n)
            if bad is not None:
                raise AssociativityError(*bad)
        if zero is not None:
            if not 0 <= zero < n:
                raise TableFormatError(f"declared zero {zero} outside 0..{n - 1}")
            for x in range(n):
                if rows[zero][x] != zero or rows[x][zero] != zero:
                    raise ZeroError(zero, x)
        else:
            zero = _find_zero(rows, n)
        self.n = n
        self.table = rows
        self.zero = zero
        self._hash = hash(rows)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, xs: Iterable[int]) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.table[acc][x]
        return acc

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def has_zero(self) -> bool:
        return self.zero is not None

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for v in row)

    def is_commutative(self) -> bool:
        t = self.table
        return all(t[x][y] == t[y][x] for x in range(self.n) for y in range(x + 1, self.n))

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Semigroup) and self.table == other.table

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Semigroup(n={self.n}, zero={self.zero})"


def validate_table(n: int, table, zero: int | None = None) -> Semigroup:
    """Check that ``table`` is an ``n x n`` associative table and wrap it."""
    if len(table) != n:
        raise TableFormatError(f"expected {n} rows, got {len(table)}")
    return Semigroup(table, zero)


def from_flat(flat: Sequence[int], n: int, *, check: bool = True) -> Semigroup:
    return Semigroup([flat[i * n:(i + 1) * n] for i in range(n)], check=check)


@dataclass(frozen=True)
class Morphism:
    source: Semigroup
    target: Semigroup
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_homomorphism(self) -> bool:
        s, t, f = self.source.table, self.target.table, self.map
        return all(f[s[x][y]] == t[f[x]][f[y]] for x in range(self.source.n) for y in range(self.source.n))

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.n

    def is_isomorphism(self) -> bool:
        return self.source.n == self.target.n and self.is_injective() and self.is_homomorphism()

    def kernel_partition(self) -> tuple[tuple[int, ...], ...]:
        blocks: dict[int, list[int]] = {}
        for x, fx in enumerate(self.map):
            blocks.setdefault(fx, []).append(x)
        return tuple(sorted(tuple(b) for b in blocks.values()))


@dataclass(frozen=True)
class Congruence:
    parent: Semigroup
    classes: tuple[tuple[int, ...], ...]

    def class_of(self) -> tuple[int, ...]:
        label = [0] * self.parent.n
        for i, block in enumerate(self.classes):
            for x in block:
                label[x] = i
        return tuple(label)

    def is_compatible(self) -> bool:
        return is_congruence(self.parent, self.classes)


# ---------------------------------------------------------------- elements

def idempotents(S: Semigroup) -> tuple[int, ...]:
    return tuple(x for x in range(S.n) if S.table[x][x] == x)


def cyclic_powers(S: Semigroup, x: int) -> tuple[list[int], int, int]:
    """Powers ``x, x^2, ...`` of ``x`` up to the first repeat.

    Returns ``(powers, index, period)`` where ``powers`` lists the distinct
    elements of the cyclic subsemigroup in order of exponent and
    ``x^(index+period) = x^index``.
    """
    seen = {}
    powers = []
    p = x
    k = 1
    while p not in seen:
        seen[p] = k
        powers.append(p)
        p = S.table[p][x]
        k += 1
    index = seen[p]
    return powers, index, k - index


def is_subsemigroup(S: Semigroup, members: Iterable[int]) -> bool:
    m = set(members)
    return all(S.table[x][y] in m for x in m for y in m)


def subsemigroup(S: Semigroup, members: Iterable[int]) -> tuple[Semigroup, Morphism]:
    """The subsemigroup on ``members`` (sorted) and its inclusion map."""
    elems = sorted(set(members))
    if not elems:
        raise EmptyInput("subsemigroup of an empty set")
    pos = {x: i for i, x in enumerate(elems)}
    rows = []
    for x in elems:
        row = []
        for y in elems:
            p = S.table[x][y]
            if p not in pos:
                raise TableFormatError(f"{elems} is not closed: {x}*{y} = {p}")
            row.append(pos[p])
        rows.append(row)
    sub = Semigroup(rows, check=False)
    return sub, Morphism(sub, S, tuple(elems))


def relabel(S: Semigroup, perm: Sequence[int]) -> Semigroup:
    """Image of ``S`` under the bijection ``x -> perm[x]``."""
    n = S.n
    inv = [0] * n
    for x, px in enumerate(perm):
        inv[px] = x
    t = S.table
    return Semigroup([[perm[t[inv[i]][inv[j]]] for j in range(n)] for i in range(n)], check=False)


def opposite(S: Semigroup) -> Semigroup:
    t = S.table
    return Semigroup([[t[y][x] for y in range(S.n)] for x in range(S.n)], check=False)


# ------------------------------------------------------------------ ideals

def ideal_generated(S: Semigroup, A: Iterable[int]) -> tuple[int, ...]:
    """The least ideal S^1 A S^1 containing ``A``."""
    seeds = set(A)
    if not seeds:
        raise EmptyInput("ideal generated by an empty set")
    t = S.table
    left = set(seeds)
    for a in seeds:
        for s in range(S.n):
            left.add(t[s][a])
    out = set(left)
    for b in left:
        for s in range(S.n):
            out.add(t[b][s])
    return tuple(sorted(out))


def principal_ideal(S: Semigroup, a: int) -> tuple[int, ...]:
    return ideal_generated(S, (a,))


def is_ideal(S: Semigroup, members: Iterable[int]) -> bool:
    return _ideal_witness(S, set(members)) is None


def _ideal_witness(S, m):
    t = S.table
    for x in m:
        for s in range(S.n):
            if t[s][x] not in m:
                return s, x, t[s][x]
            if t[x][s] not in m:
                return x, s, t[x][s]
    return None


def all_ideals(S: Semigroup) -> list[tuple[int, ...]]:
    """Every nonempty ideal, as the union-closure of the principal ideals."""
    principals = {frozenset(principal_ideal(S, a)) for a in range(S.n)}
    family = set(principals)
    frontier = list(principals)
    while frontier:
        nxt = []
        for I in frontier:
            for P in principals:
                U = I | P
                if U not in family:
                    family.add(U)
                    nxt.append(U)
        frontier = nxt
    return sorted((tuple(sorted(I)) for I in family), key=lambda I: (len(I), I))


def kernel(S: Semigroup) -> tuple[int, ...]:
    """The minimal ideal: the smallest principal ideal."""
    if S.zero is not None:
        return (S.zero,)
    return min((principal_ideal(S, a) for a in range(S.n)), key=lambda I: (len(I), I))


def rees_quotient(S: Semigroup, I: Iterable[int]) -> tuple[Semigroup, Morphism]:
    """Collapse the ideal ``I`` to a new zero placed at index 0.

    Surviving elements keep their relative order at indices ``1..``.
    """
    ideal = set(I)
    if not ideal:
        raise EmptyInput("Rees quotient by an empty set")
    bad = _ideal_witness(S, ideal)
    if bad is not None:
        raise NotAnIdeal(*bad)
    survivors = [x for x in range(S.n) if x not in ideal]
    label = [0] * S.n
    for i, x in enumerate(survivors, start=1):
        label[x] = i
    m = len(survivors) + 1
    rows = [[0] * m]
    for x in survivors:
        rows.append([0] + [label[S.table[x][y]] for y in survivors])
    Q = Semigroup(rows, check=False)
    return Q, Morphism(S, Q, tuple(label))


def direct_product(A: Semigroup, B: Semigroup) -> Semigroup:
    """Componentwise product; the pair ``(i, j)`` has index ``i*|B| + j``."""
    nb = B.n
    ta, tb = A.table, B.table
    rows = []
    for i, j in product(range(A.n), range(nb)):
        rows.append([ta[i][k] * nb + tb[j][l] for k, l in product(range(A.n), range(nb))])
    return Semigroup(rows, check=False)


# -------------------------------------------------------------- isomorphism

def element_invariants(S: Semigroup) -> list[tuple]:
    """Per-element data preserved by every isomorphism."""
    t = S.table
    n = S.n
    occurrences = [0] * n
    for row in t:
        for v in row:
            occurrences[v] += 1
    out = []
    for x in range(n):
        _, index, period = cyclic_powers(S, x)
        out.append((
            t[x][x] == x,
            index,
            period,
            len(set(t[x])),
            len({t[y][x] for y in range(n)}),
            sum(1 for y in range(n) if t[x][y] == x),
            sum(1 for y in range(n) if t[y][x] == x),
            occurrences[x],
        ))
    return out


def refine(tables: Sequence[Sequence[Sequence[int]]], colours: Sequence[Sequence]) -> list[list[int]]:
    """Colour refinement run jointly over several tables.

    ``colours[k][x]`` is any sortable label of element ``x`` of table ``k``.
    Returns integer colours comparable across the tables, refined until the
    number of colour classes stops growing.
    """
    sigs = [list(c) for c in colours]
    current = _rank(sigs)
    ncls = len({c for cs in current for c in cs})
    while True:
        new_sigs = []
        for t, col in zip(tables, current):
            n = len(t)
            new_sigs.append([
                (col[x], tuple(sorted((col[y], col[t[x][y]], col[t[y][x]]) for y in range(n))))
                for x in range(n)
            ])
        new = _rank(new_sigs)
        k = len({c for cs in new for c in cs})
        current = new
        if k == ncls:
            return current
        ncls = k


def _rank(sigs):
    order = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
    return [[order[s] for s in ss] for ss in sigs]


def _profile(S):
    # value-multiplicity shape of each row and column; label-free
    n = S.n
    rowp = sorted(tuple(sorted(_counts(r))) for r in S.table)
    colp = sorted(tuple(sorted(_counts([S.table[y][x] for y in range(n)]))) for x in range(n))
    return rowp, colp


def _counts(values):
    c = {}
    for v in values:
        c[v] = c.get(v, 0) + 1
    return c.values()


def iso_obstruction(A: Semigroup, B: Semigroup) -> str | None:
    """The first cheap invariant separating ``A`` and ``B``, if any."""
    if A.n != B.n:
        return f"size {A.n} != {B.n}"
    ia, ib = len(idempotents(A)), len(idempotents(B))
    if ia != ib:
        return f"idempotent count {ia} != {ib}"
    da = sorted(_counts([A.table[x][x] for x in range(A.n)]))
    db = sorted(_counts([B.table[x][x] for x in range(B.n)]))
    if da != db:
        return f"diagonal multiset {da} != {db}"
    pa, pb = _profile(A), _profile(B)
    if pa[0] != pb[0]:
        return "row profiles differ"
    if pa[1] != pb[1]:
        return "column profiles differ"
    return None


def find_isomorphism(A: Semigroup, B: Semigroup) -> Morphism | None:
    """An isomorphism ``A -> B`` found by refined backtracking, or ``None``."""
    if iso_obstruction(A, B) is not None:
        return None
    n = A.n
    ca, cb = refine([A.table, B.table], [element_invariants(A), element_invariants(B)])
    if sorted(ca) != sorted(cb):
        return None
    by_colour: dict[int, list[int]] = {}
    for y, c in enumerate(cb):
        by_colour.setdefault(c, []).append(y)
    ta, tb = A.table, B.table
    f = [-1] * n
    used = [False] * n
    # most constrained elements first
    order = sorted(range(n), key=lambda x: (len(by_colour[ca[x]]), x))

    def assign(x, y, trail):
        # assign x -> y and propagate forced products; False on conflict
        stack = [(x, y)]
        while stack:
            u, v = stack.pop()
            if f[u] != -1:
                if f[u] != v:
                    return False
                continue
            if used[v] or cb[v] != ca[u]:
                return False
            f[u] = v
            used[v] = True
            trail.append(u)
            for w in trail:
                fw = f[w]
                for p, q in ((u, w), (w, u)):
                    r = ta[p][q]
                    img = tb[f[p]][f[q]]
                    if f[r] == -1:
                        stack.append((r, img))
                    elif f[r] != img:
                        return False
        return True

    def undo(trail, mark):
        while len(trail) > mark:
            u = trail.pop()
            used[f[u]] = False
            f[u] = -1

    trail: list[int] = []

    def search(k):
        while k < n and f[order[k]] != -1:
            k += 1
        if k == n:
            return True
        x = order[k]
        for y in by_colour[ca[x]]:
            if used[y]:
                continue
            mark = len(trail)
            if assign(x, y, trail) and search(k + 1):
                return True
            undo(trail, mark)
        return False

    if not search(0):
        return None
    m = Morphism(A, B, tuple(f))
    assert m.is_isomorphism()
    return m


def is_isomorphic(A: Semigroup, B: Semigroup) -> bool:
    return find_isomorphism(A, B) is not None


# ------------------------------------------------------------- congruences

def is_congruence(S: Semigroup, classes) -> bool:
    label = [None] * S.n
    for i, block in enumerate(classes):
        for x in block:
            if label[x] is not None:
                return False
            label[x] = i
    if any(lab is None for lab in label):
        return False
    t = S.table
    for block in classes:
        first = block[0]
        for x in block[1:]:
            for y in range(S.n):
                if label[t[first][y]] != label[t[x][y]] or label[t[y][first]] != label[t[y][x]]:
                    return False
    return True


def congruences(S: Semigroup, limit: int = CONGRUENCE_LIMIT) -> list[Congruence]:
    """All congruences of ``S``, by pruned search over set partitions.

    Partitions are built as restricted growth strings, so the output is in
    lexicographic order of the block-label vector.
    """
    n = S.n
    if n > limit:
        raise SizeLimitExceeded("congruence enumeration", n, limit)
    t = S.table
    # a test (x, x2, p, q) says x ~ x2 forces p ~ q; it becomes decidable once
    # all four indices are labelled
    tests: list[list[tuple[int, int, int, int]]] = [[] for _ in range(n)]
    for x in range(n):
        for x2 in range(x + 1, n):
            for y in range(n):
                for p, q in ((t[x][y], t[x2][y]), (t[y][x], t[y][x2])):
                    if p != q:
                        tests[max(x, x2, p, q)].append((x, x2, p, q))
    label = [0] * n
    out = []

    def rec(i, nblocks):
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(nblocks)]
            for x, b in enumerate(label):
                blocks[b].append(x)
            out.append(Congruence(S, tuple(tuple(b) for b in blocks)))
            return
        for b in range(nblocks + 1):
            label[i] = b
            if all(label[x] != label[x2] or label[p] == label[q] for x, x2, p, q in tests[i]):
                rec(i + 1, max(nblocks, b + 1))

    rec(0, 0)
    return out


def quotient(S: Semigroup, alpha: Congruence) -> tuple[Semigroup, Morphism]:
    """``S/alpha`` on classes ordered by least member, with the canonical map."""
    classes = sorted(alpha.classes, key=min)
    label = [0] * S.n
    for i, block in enumerate(classes):
        for x in block:
            label[x] = i
    t = S.table
    rows = [[label[t[c[0]][d[0]]] for d in classes] for c in classes]
    Q = Semigroup(rows, check=False)
    return Q, Morphism(S, Q, tuple(label))


def null_semigroup(n: int) -> Semigroup:
    """All products equal the zero 0."""
    return Semigroup([[0] * n for _ in range(n)], check=False)


def cyclic_group(n: int) -> Semigroup:
    return Semigroup([[(i + j) % n for j in range(n)] for i in range(n)], check=False)


def left_zero(n: int) -> Semigroup:
    return Semigroup([[i] * n for i in range(n)], check=False)


def right_zero(n: int) -> Semigroup:
    return Semigroup([list(range(n)) for _ in range(n)], check=False)


def trivial() -> Semigroup:
    return Semigroup([[0]], check=False)
