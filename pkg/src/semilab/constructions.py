"""Constructors for the semigroups used throughout the library."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .core import Morphism, Semigroup, direct_product, idempotents, rees_quotient
from .errors import IrregularSandwich, NoZeroElement, NotAGroup, SizeLimitExceeded, TableFormatError

MUNN_LIMIT = 8

B2_TABLE = (
    (0, 0, 0, 0, 0),
    (0, 1, 2, 0, 0),
    (0, 0, 0, 1, 2),
    (0, 3, 4, 0, 0),
    (0, 0, 0, 3, 4),
)


def b2() -> Semigroup:
    """The five-element Brandt semigroup: 0 = zero, then a, b, c, d.

    ``a`` and ``d`` are the nonzero idempotents; ``ab = b``, ``bc = a``,
    ``cb = d``, ``dc = c``.
    """
    return Semigroup(B2_TABLE, zero=0)


# ------------------------------------------------------------- Rees matrix

def group_identity(G: Semigroup) -> int:
    """Identity of ``G``; raises NotAGroup unless ``G`` is a group."""
    n = G.n
    t = G.table
    e = next((x for x in range(n) if all(t[x][y] == y and t[y][x] == y for y in range(n))), None)
    if e is None:
        raise NotAGroup("no identity element")
    for x in range(n):
        if not any(t[x][y] == e for y in range(n)):
            raise NotAGroup(f"element {x} has no inverse")
    return e


@dataclass(frozen=True)
class ReesMatrixSpec:
    """Data of ``M0(G; I, Lambda; P)``.

    ``sandwich`` has one row per ``lambda`` (``m`` rows) and one column per
    ``i`` (``n`` columns); entries are group elements or ``None`` for zero.
    """

    group: Semigroup
    n: int
    m: int
    sandwich: tuple

    def __post_init__(self):
        object.__setattr__(self, "sandwich", tuple(tuple(r) for r in self.sandwich))

    @classmethod
    def trivial(cls, pattern: Sequence[Sequence[int]]) -> "ReesMatrixSpec":
        """Over the one-element group from a 0/1 pattern (1 = identity)."""
        rows = [[0 if v else None for v in r] for r in pattern]
        return cls(Semigroup([[0]]), len(rows[0]), len(rows), tuple(map(tuple, rows)))


def rees_matrix(spec: ReesMatrixSpec) -> Semigroup:
    """Regular Rees matrix semigroup with zero.

    Index 0 is the zero; ``(g; i, lam)`` follows in order of ``(i, lam, g)``.
    """
    G = spec.group
    group_identity(G)
    P = spec.sandwich
    n, m = spec.n, spec.m
    if len(P) != m or any(len(r) != n for r in P):
        raise TableFormatError(f"sandwich must be {m} x {n}")
    for lam in range(m):
        if all(v is None for v in P[lam]):
            raise IrregularSandwich("row", lam)
    for i in range(n):
        if all(P[lam][i] is None for lam in range(m)):
            raise IrregularSandwich("column", i)
    g_n = G.n
    elems = [(i, lam, g) for i in range(n) for lam in range(m) for g in range(g_n)]
    pos = {e: k + 1 for k, e in enumerate(elems)}
    t = G.table
    rows = [[0] * (len(elems) + 1)]
    for i, lam, g in elems:
        row = [0]
        for j, mu, h in elems:
            p = P[lam][j]
            row.append(0 if p is None else pos[(i, mu, t[t[g][p]][h])])
        rows.append(row)
    return Semigroup(rows, zero=0, check=False)


def brandt(n: int) -> Semigroup:
    """``M0(1; n, n; I)``, with ``n^2 + 1`` elements."""
    if n < 1:
        raise ValueError("brandt(n) needs n >= 1")
    return rees_matrix(ReesMatrixSpec.trivial([[int(i == j) for j in range(n)] for i in range(n)]))


# -------------------------------------------------- zero-based products

def times0(A: Semigroup, B: Semigroup) -> Semigroup:
    """``(A x B) / I`` where ``I`` is the cross through the two zeros.

    Index 0 is the zero; the class of ``(a, b)`` with both nonzero keeps the
    order of the direct product.
    """
    return times0_with_map(A, B)[0]


def times0_with_map(A: Semigroup, B: Semigroup) -> tuple[Semigroup, Morphism]:
    if A.zero is None:
        raise NoZeroElement("left factor")
    if B.zero is None:
        raise NoZeroElement("right factor")
    P = direct_product(A, B)
    cross = [a * B.n + b for a in range(A.n) for b in range(B.n) if a == A.zero or b == B.zero]
    return rees_quotient(P, cross)


def adjoin_zero(S: Semigroup) -> Semigroup:
    """Append a new absorbing element (index ``n``) even if ``S`` has a zero."""
    n = S.n
    rows = [list(r) + [n] for r in S.table]
    rows.append([n] * (n + 1))
    return Semigroup(rows, zero=n, check=False)


def adjoin_zprime(S: Semigroup) -> Semigroup:
    """Append ``z'`` (index ``n``) with every product through ``z'`` equal to the zero."""
    if S.zero is None:
        raise NoZeroElement()
    z, n = S.zero, S.n
    rows = [list(r) + [z] for r in S.table]
    rows.append([z] * (n + 1))
    return Semigroup(rows, zero=z, check=False)


def embed_indecomposable(S: Semigroup) -> tuple[Semigroup, Morphism]:
    """Embed ``S`` into ``S^0 x0 B2`` (``4|S| + 1`` elements) via ``s -> (s, a)``."""
    from .indecomposability import is_s_indecomposable_graph

    S0 = adjoin_zero(S)
    T, pi = times0_with_map(S0, b2())
    a = 1
    e = Morphism(S, T, tuple(pi.map[s * 5 + a] for s in range(S.n)))
    if not (e.is_injective() and e.is_homomorphism()):
        raise AssertionError("embedding is not an injective homomorphism")
    if not is_s_indecomposable_graph(T):
        raise AssertionError("embedding target is not s-indecomposable")
    return T, e


# ------------------------------------------------------------ semilattices

class Semilattice(Semigroup):
    """A commutative semigroup of idempotents; ``x <= y`` iff ``xy = x``."""

    __slots__ = ()

    def __init__(self, table, zero=None, *, check=True):
        super().__init__(table, zero, check=check)
        t = self.table
        for x in range(self.n):
            if t[x][x] != x:
                raise TableFormatError(f"not a semilattice: {x} is not idempotent")
            for y in range(x + 1, self.n):
                if t[x][y] != t[y][x]:
                    raise TableFormatError(f"not a semilattice: {x}, {y} do not commute")

    @classmethod
    def of(cls, S: Semigroup) -> "Semilattice":
        return cls(S.table)

    def leq(self, x: int, y: int) -> bool:
        return self.table[x][y] == x

    def down(self, e: int) -> tuple[int, ...]:
        """The principal ideal ``Ee = {f : f <= e}``."""
        return tuple(f for f in range(self.n) if self.table[f][e] == f)


def semilattice_from_order(n: int, covers: Sequence[tuple[int, int]]) -> Semilattice:
    """Meet table of the order generated by ``(lower, upper)`` cover pairs."""
    below = [{x} for x in range(n)]
    changed = True
    while changed:
        changed = False
        for lo, hi in covers:
            new = below[lo] - below[hi]
            if new:
                below[hi] |= new
                changed = True
    rows = []
    for x in range(n):
        row = []
        for y in range(n):
            common = below[x] & below[y]
            meets = [c for c in common if all(d in below[c] for d in common)]
            if len(meets) != 1:
                raise TableFormatError(f"{x} and {y} have no meet")
            row.append(meets[0])
        rows.append(row)
    return Semilattice(rows)


def chain(n: int) -> Semilattice:
    """``0 < 1 < ... < n-1`` with product ``min``."""
    return Semilattice([[min(i, j) for j in range(n)] for i in range(n)], check=False)


# index 0 is the bottom in every named semilattice
_NAMED = {
    "C3": [(0, 1), (1, 2)],
    "V": [(0, 1), (0, 2)],
    "U": [(0, 1), (0, 2), (1, 3), (2, 4)],
    "F": [(0, 1), (0, 2), (2, 3), (2, 4)],
    "X": [(0, 1), (0, 2), (0, 3), (0, 4)],
}


def named_semilattice(name: str) -> Semilattice:
    """C3, V, U, F or X; element 0 is the bottom."""
    try:
        covers = _NAMED[name]
    except KeyError:
        raise ValueError(f"unknown semilattice {name!r}; expected one of {sorted(_NAMED)}") from None
    n = 1 + max(hi for _, hi in covers)
    return semilattice_from_order(n, covers)


# ------------------------------------------------------------------- Munn

@dataclass(frozen=True, order=True)
class PartialIso:
    """Isomorphism ``E(domain_root) -> E(range_root)`` as a sorted graph."""

    domain_root: int
    range_root: int
    graph: tuple

    def __call__(self, x: int) -> int:
        return dict(self.graph)[x]


def _ideal_isos(E: Semilattice, e: int, f: int):
    De, Df = E.down(e), E.down(f)
    if len(De) != len(Df):
        return
    t = E.table
    for img in permutations(Df):
        m = dict(zip(De, img))
        if all(m[t[x][y]] == t[m[x]][m[y]] for x in De for y in De):
            yield PartialIso(e, f, tuple(sorted(m.items())))


def munn_elements(E: Semilattice) -> list[PartialIso]:
    if E.n > MUNN_LIMIT:
        raise SizeLimitExceeded("Munn semigroup", E.n, MUNN_LIMIT)
    return sorted(a for e in range(E.n) for f in range(E.n) for a in _ideal_isos(E, e, f))


def munn(E: Semilattice) -> Semigroup:
    """The Munn semigroup ``T_E`` of isomorphisms between principal ideals.

    Maps act on the right: the product ``alpha * beta`` applies ``alpha``
    first.  Its domain is the preimage under ``alpha`` of ``E(fg)`` where
    ``f`` is the range root of ``alpha`` and ``g`` the domain root of
    ``beta``.  Elements are sorted by ``(domain_root, range_root, graph)``.
    """
    if not isinstance(E, Semilattice):
        E = Semilattice.of(E)
    elems = munn_elements(E)
    pos = {a: k for k, a in enumerate(elems)}
    t = E.table
    rows = []
    for a in elems:
        amap = dict(a.graph)
        ainv = {v: k for k, v in amap.items()}
        row = []
        for b in elems:
            bmap = dict(b.graph)
            mid = t[a.range_root][b.domain_root]
            dom = ainv[mid]
            graph = tuple(sorted((x, bmap[amap[x]]) for x in E.down(dom)))
            row.append(pos[PartialIso(dom, bmap[mid], graph)])
        rows.append(row)
    return Semigroup(rows)


def idempotent_semilattice(S: Semigroup) -> Semilattice:
    """``E(S)`` as a semilattice; requires commuting idempotents."""
    from .core import subsemigroup

    sub, _ = subsemigroup(S, idempotents(S))
    return Semilattice(sub.table)
