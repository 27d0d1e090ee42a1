"""Semigroups of small order up to isomorphism, and canonical forms.

The canonical form of a semigroup on at most ``FACTORIAL_LIMIT`` elements is
the lexicographically least row-major table over all relabellings.  Larger
semigroups use individualisation-refinement: the least table over the
leaves of a search tree whose branching respects an isomorphism-invariant
colouring.  Both are complete invariants.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from . import kernels
from .constructions import b2, idempotent_semilattice, munn, named_semilattice, times0
from .core import Semigroup, element_invariants, from_flat, refine, subsemigroup
from .errors import SizeLimitExceeded, UnsupportedOrder

ENUMERATION_LIMIT = 5
FACTORIAL_LIMIT = 7


@lru_cache(maxsize=None)
def _lexmin_tables(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(kernels.enumerate_lexmin(n))


def enumerate_semigroups(
    n: int, predicate: Callable[[Semigroup], bool] | None = None
) -> Iterator[Semigroup]:
    """One canonical table per isomorphism class of ``n``-element semigroups.

    Classes are by isomorphism only; a semigroup and its opposite are
    separate classes unless isomorphic.  Output is in lexicographic order.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > ENUMERATION_LIMIT:
        raise SizeLimitExceeded("semigroup enumeration", n, ENUMERATION_LIMIT)
    for flat in _lexmin_tables(n):
        S = from_flat(flat, n, check=False)
        if predicate is None or predicate(S):
            yield S


def corpus(max_order: int = ENUMERATION_LIMIT) -> list[Semigroup]:
    """Every isomorphism class of order ``1..max_order``."""
    return [S for n in range(1, max_order + 1) for S in enumerate_semigroups(n)]


def _refined_colours(S: Semigroup, colours=None) -> list[int]:
    base = element_invariants(S) if colours is None else colours
    return refine([S.table], [base])[0]


def _ir_canonical(S: Semigroup) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Least relabelled table over an individualisation-refinement tree.

    Automorphisms discovered at the leaves prune sibling branches that lie in
    the same orbit of the pointwise stabiliser of the current prefix.
    """
    n = S.n
    t = S.table
    best: list = [None, None]
    seen: dict[tuple, tuple] = {}
    autos: list[tuple[int, ...]] = []

    def table_for(labels):
        inv = [0] * n
        for x, lab in enumerate(labels):
            inv[lab] = x
        return tuple(labels[t[inv[i]][inv[j]]] for i in range(n) for j in range(n))

    def orbits(cell, prefix):
        parent = {x: x for x in cell}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in autos:
            if all(g[p] == p for p in prefix):
                for x in cell:
                    gx = g[x]
                    if gx in parent:
                        rx, rg = find(x), find(gx)
                        if rx != rg:
                            parent[max(rx, rg)] = min(rx, rg)
        return sorted({find(x) for x in cell})

    def search(colours, prefix):
        classes: dict[int, list[int]] = {}
        for x, c in enumerate(colours):
            classes.setdefault(c, []).append(x)
        if len(classes) == n:
            labels = tuple(colours)
            tab = table_for(labels)
            if tab in seen:
                other = seen[tab]
                # element x has label labels[x] here and other[x] there
                inv_other = [0] * n
                for x, lab in enumerate(other):
                    inv_other[lab] = x
                autos.append(tuple(inv_other[labels[x]] for x in range(n)))
            else:
                seen[tab] = labels
            if best[0] is None or tab < best[0]:
                best[0], best[1] = tab, labels
            return
        target = min((c for c in classes if len(classes[c]) > 1), key=lambda c: (len(classes[c]), c))
        cell = classes[target]
        for v in cell:
            if v not in orbits(cell, prefix):
                continue
            base = [(c, 0) if x != v else (c, -1) for x, c in enumerate(colours)]
            search(refine([t], [base])[0], prefix + [v])

    search(_refined_colours(S), [])
    return best[0], best[1]


def canonical_form(S: Semigroup) -> tuple[Semigroup, tuple[int, ...]]:
    """Canonical table and the relabelling ``x -> perm[x]`` producing it."""
    if S.n <= FACTORIAL_LIMIT:
        flat, perm = kernels.lexmin_relabel(S.flat(), S.n)
    else:
        flat, perm = _ir_canonical(S)
    C = from_flat(flat, S.n, check=False)
    return C, tuple(perm)


def canonicalize(S: Semigroup) -> Semigroup:
    return canonical_form(S)[0]


def canonical_key(S: Semigroup) -> tuple[int, ...]:
    return canonicalize(S).flat()


# -------------------------------------------------------- classification

def is_semilattice(S: Semigroup) -> bool:
    t = S.table
    return all(t[x][x] == x for x in range(S.n)) and S.is_commutative()


def semilattices(n: int) -> list[Semigroup]:
    return list(enumerate_semigroups(n, is_semilattice))


def full_inverse_subsemigroups(T: Semigroup, size: int) -> list[tuple[int, ...]]:
    """Subsets of ``size`` elements containing every idempotent of the
    inverse semigroup ``T`` and closed under products and inverses."""
    from .lattice import inverse

    E = [x for x in range(T.n) if T.table[x][x] == x]
    need = size - len(E)
    if need < 0:
        return []
    groups = []
    done = set(E)
    for x in range(T.n):
        if x in done:
            continue
        y = inverse(T, x)
        groups.append(tuple(sorted({x, y})))
        done.update((x, y))
    out = []

    def rec(k, chosen, count):
        if count == need:
            members = sorted(set(E).union(*chosen)) if chosen else sorted(E)
            m = set(members)
            if all(T.table[a][b] in m for a in members for b in members):
                out.append(tuple(members))
            return
        for i in range(k, len(groups)):
            g = groups[i]
            if count + len(g) <= need:
                rec(i + 1, chosen + [set(g)], count + len(g))

    rec(0, [], 0)
    return out


def b2c_candidates_9() -> list[tuple[str, Semigroup]]:
    """Every 9-element B2-combinatorial candidate, labelled by its source.

    A 9-element B2-combinatorial semigroup is a combinatorial inverse
    semigroup with five idempotents, hence a full inverse subsemigroup of the
    Munn semigroup of its idempotent semilattice.  All five-element
    semilattices are scanned.
    """
    from .lattice import is_b2_combinatorial

    out = [
        ("C3 x0 B2", times0(named_semilattice("C3"), b2())),
        ("V x0 B2", times0(named_semilattice("V"), b2())),
        ("T_U", munn(named_semilattice("U"))),
        ("T_F", munn(named_semilattice("F"))),
    ]
    for k, E in enumerate(semilattices(5)):
        T = munn(E)
        for members in full_inverse_subsemigroups(T, 9):
            sub, _ = subsemigroup(T, members)
            if is_b2_combinatorial(sub):
                out.append((f"T_E{k} sub {list(members)}", sub))
    return out


def classify_b2c(order: int) -> list[Semigroup]:
    """Canonical representatives of the B2-combinatorial classes of ``order``."""
    from .lattice import is_b2_combinatorial

    if order in (1, 5):
        return list(enumerate_semigroups(order, is_b2_combinatorial))
    if order == 9:
        keys = {}
        for _, S in b2c_candidates_9():
            if is_b2_combinatorial(S):
                C = canonicalize(S)
                keys[C.flat()] = C
        return [keys[k] for k in sorted(keys)]
    raise UnsupportedOrder(f"classification is available for orders 1, 5 and 9, not {order}")


def classification_evidence(order: int = 9) -> list[dict]:
    """Which candidate constructions land in which canonical class."""
    from .lattice import is_b2_combinatorial

    if order != 9:
        return [{"class": i, "sources": ["exhaustive enumeration"]} for i, _ in enumerate(classify_b2c(order))]
    classes = classify_b2c(9)
    index = {C.flat(): i for i, C in enumerate(classes)}
    sources: dict[int, list[str]] = {i: [] for i in range(len(classes))}
    for label, S in b2c_candidates_9():
        if is_b2_combinatorial(S):
            sources[index[canonical_key(S)]].append(label)
    out = []
    for i, C in enumerate(classes):
        E = idempotent_semilattice(C)
        out.append({"class": i, "idempotents": E.n, "sources": sources[i]})
    return out

