"""Three independent tests for semilattice indecomposability.

* divisibility: every element reaches every other along ``x -> y`` edges,
  where ``x`` divides some power of ``y``;
* completely prime ideals: no proper nonempty ideal has a multiplicatively
  closed complement;
* algebra: the semisimple quotient of the algebra of ``S/K_S`` has exactly
  one 1-dimensional block.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraSummary, semigroup_algebra, summary
from .core import Semigroup, all_ideals, cyclic_powers, is_subsemigroup, kernel, principal_ideal, rees_quotient
from .errors import SizeLimitExceeded

PRIME_IDEAL_LIMIT = 20


@dataclass(frozen=True)
class DivisibilityGraph:
    parent: Semigroup
    adjacency: tuple  # adjacency[x][y]: x divides some power of y

    def successors(self, x: int) -> list[int]:
        return [y for y, e in enumerate(self.adjacency[x]) if e]


def divisibility_graph(S: Semigroup) -> DivisibilityGraph:
    n = S.n
    divisors = [set(principal_ideal(S, x)) for x in range(n)]
    powers = [cyclic_powers(S, y)[0] for y in range(n)]
    adj = tuple(
        tuple(any(p in divisors[x] for p in powers[y]) for y in range(n)) for x in range(n)
    )
    return DivisibilityGraph(S, adj)


def strongly_connected_components(adjacency) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    n = len(adjacency)
    succ = [[y for y in range(n) if adjacency[x][y]] for x in range(n)]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for k in range(i, len(succ[v])):
                w = succ[v][k]
                if index[w] == -1:
                    work.append((v, k + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def condensation(graph: DivisibilityGraph) -> tuple[list[list[int]], set[tuple[int, int]]]:
    """Components and the edges between them (by component index)."""
    comps = strongly_connected_components(graph.adjacency)
    where = {x: k for k, c in enumerate(comps) for x in c}
    edges = {
        (where[x], where[y])
        for x in range(graph.parent.n)
        for y in graph.successors(x)
        if where[x] != where[y]
    }
    return comps, edges


def is_s_indecomposable_graph(S: Semigroup) -> bool:
    return len(strongly_connected_components(divisibility_graph(S).adjacency)) == 1


def completely_prime_ideals(S: Semigroup) -> list[tuple[int, ...]]:
    """Proper nonempty ideals whose complement is a subsemigroup."""
    if S.n > PRIME_IDEAL_LIMIT:
        raise SizeLimitExceeded("completely prime ideal search", S.n, PRIME_IDEAL_LIMIT)
    out = []
    for I in all_ideals(S):
        if len(I) == S.n:
            continue
        rest = set(range(S.n)) - set(I)
        if is_subsemigroup(S, rest):
            out.append(I)
    return out


def separating_prime_ideal(S: Semigroup) -> tuple[int, ...] | None:
    """Smallest completely prime ideal, or ``None`` if ``S`` is s-indecomposable."""
    if is_s_indecomposable_graph(S):
        return None
    for cand in completely_prime_ideals(S):
        return cand
    raise AssertionError("divisibility graph is disconnected but no completely prime ideal exists")


def kernel_quotient(S: Semigroup) -> Semigroup:
    """``S / K_S``; the one-element semigroup when ``S`` is simple."""
    return rees_quotient(S, kernel(S))[0]


def kernel_quotient_summary(S: Semigroup) -> AlgebraSummary:
    return summary(semigroup_algebra(kernel_quotient(S)))


def is_s_indecomposable_algebra(S: Semigroup) -> bool:
    return kernel_quotient_summary(S).one_dim_blocks == 1


def is_s_indecomposable(S: Semigroup) -> bool:
    return is_s_indecomposable_graph(S)
