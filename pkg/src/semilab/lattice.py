"""Subsemilattices, the cardinality bound and B2-combinatorial semigroups."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .algebra import numerical_block_sizes, semigroup_algebra, summary
from .constructions import adjoin_zprime, b2, brandt, chain, times0_with_map
from .core import (
    CONGRUENCE_LIMIT,
    Semigroup,
    all_ideals,
    congruences,
    find_isomorphism,
    idempotents,
    is_ideal,
    is_subsemigroup,
    principal_ideal,
    quotient,
    rees_quotient,
    subsemigroup,
)
from .errors import SizeLimitExceeded
from .indecomposability import is_s_indecomposable_graph

ZERO_SIMPLE = "zero-simple"
SIMPLE = "simple"
NULL = "null"


def bound(n: int) -> int:
    """Largest possible subsemilattice of an s-indecomposable n-element semigroup."""
    return 2 * ((n - 1) // 4) + 1


# ------------------------------------------------------- principal factors

def is_null(S: Semigroup) -> bool:
    return S.zero is not None and all(v == S.zero for row in S.table for v in row)


def is_simple(S: Semigroup) -> bool:
    return all(len(I) == S.n for I in all_ideals(S))


def is_zero_simple(S: Semigroup) -> bool:
    if S.zero is None or S.n < 2 or is_null(S):
        return False
    return all(len(I) in (1, S.n) for I in all_ideals(S))


def classify_kind(S: Semigroup) -> str:
    """0-simple, simple or null; a one-element semigroup counts as null."""
    if S.n == 1 or is_null(S):
        return NULL
    if is_zero_simple(S):
        return ZERO_SIMPLE
    if S.zero is None and is_simple(S):
        return SIMPLE
    raise AssertionError("principal factor is neither 0-simple, simple nor null")


@dataclass(frozen=True)
class PrincipalFactor:
    element: int
    factor: Semigroup
    kind: str
    ideal: tuple  # J(a) in S
    lower: tuple  # I(a) in S, possibly empty


def principal_factor(S: Semigroup, a: int) -> PrincipalFactor:
    J = principal_ideal(S, a)
    lower = tuple(b for b in J if principal_ideal(S, b) != J)
    sub, inc = subsemigroup(S, J)
    if lower:
        pos = {x: i for i, x in enumerate(inc.map)}
        factor = rees_quotient(sub, [pos[b] for b in lower])[0]
    else:
        factor = sub
    return PrincipalFactor(a, factor, classify_kind(factor), J, lower)


# ------------------------------------------------------- subsemilattices

def is_subsemilattice(S: Semigroup, members) -> bool:
    m = sorted(set(members))
    t = S.table
    return (
        bool(m)
        and all(t[x][x] == x for x in m)
        and all(t[x][y] == t[y][x] for x in m for y in m)
        and is_subsemigroup(S, m)
    )


def max_subsemilattice(S: Semigroup) -> tuple[int, tuple[int, ...]]:
    """Size and lexicographically least witness of a largest subsemilattice.

    A set of pairwise commuting idempotents generates a subsemilattice made
    of pairwise commuting idempotents, so a maximum clique of the commuting
    graph on idempotents is already closed.  Branch and bound over cliques in
    index order; ties are never replaced, which keeps the lex-least witness.
    """
    E = idempotents(S)
    t = S.table
    nbrs = {e: {f for f in E if f != e and t[e][f] == t[f][e]} for e in E}
    best: list[int] = []

    def grow(current, candidates):
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        for k, v in enumerate(candidates):
            rest = [w for w in candidates[k + 1:] if w in nbrs[v]]
            if len(current) + 1 + len(rest) <= len(best):
                continue
            current.append(v)
            grow(current, rest)
            current.pop()

    grow([], list(E))
    witness = tuple(sorted(best))
    if not is_subsemilattice(S, witness):
        raise AssertionError("maximum commuting clique is not closed")
    return len(witness), witness


@dataclass(frozen=True)
class BoundReport:
    size: int
    max_size: int
    witness: tuple
    bound: int
    holds: bool
    tight: bool
    s_indecomposable: bool
    completely_zero_simple: bool
    sqrt_bound: float | None = None
    sqrt_holds: bool | None = None
    sqrt_tight: bool | None = None
    brandt_isomorphic: bool | None = None


def check_bound(S: Semigroup) -> BoundReport:
    m, witness = max_subsemilattice(S)
    b = bound(S.n)
    czs = is_zero_simple(S)
    extra = {}
    if czs:
        r = isqrt(S.n - 1)
        exact_sqrt = r * r == S.n - 1
        # |Y| <= sqrt(|S|-1) + 1, compared exactly as (|Y|-1)^2 <= |S|-1
        tight = m >= 1 and (m - 1) ** 2 == S.n - 1
        extra = dict(
            sqrt_bound=(S.n - 1) ** 0.5 + 1,
            sqrt_holds=(m - 1) ** 2 <= S.n - 1,
            sqrt_tight=tight,
            brandt_isomorphic=(
                find_isomorphism(S, brandt(r)) is not None if tight and exact_sqrt else None
            ),
        )
    return BoundReport(
        size=S.n,
        max_size=m,
        witness=witness,
        bound=b,
        holds=m <= b,
        tight=m == b,
        s_indecomposable=is_s_indecomposable_graph(S),
        completely_zero_simple=czs,
        **extra,
    )


# --------------------------------------------------- B2-combinatorial

def is_b2_combinatorial(S: Semigroup) -> bool:
    n = S.n
    if n % 4 != 1:
        return False
    if not is_s_indecomposable_graph(S):
        return False
    return max_subsemilattice(S)[0] == (n + 1) // 2


def is_b2_combinatorial_via_factors(S: Semigroup) -> bool:
    if S.zero is None:
        return False
    B = b2()
    for a in range(S.n):
        if a == S.zero:
            continue
        if find_isomorphism(principal_factor(S, a).factor, B) is None:
            return False
    return True


def is_inverse_semigroup(S: Semigroup) -> bool:
    t = S.table
    for x in range(S.n):
        inv = [y for y in range(S.n) if t[t[x][y]][x] == x and t[t[y][x]][y] == y]
        if len(inv) != 1:
            return False
    return True


def inverse(S: Semigroup, x: int) -> int:
    t = S.table
    cands = [y for y in range(S.n) if t[t[x][y]][x] == x and t[t[y][x]][y] == y]
    if len(cands) != 1:
        raise ValueError(f"element {x} has {len(cands)} inverses")
    return cands[0]


# ------------------------------------------------------ extremal witness

def extremal_witness(n: int) -> tuple[Semigroup, tuple[int, ...]]:
    """An s-indecomposable ``n``-element semigroup meeting the bound.

    Writes ``n = 4k + 1 + l`` and applies ``l`` zero-like extensions to
    ``chain(k+1) x0 B2``; the witness is the image of ``chain(k+1) x0 V``
    where ``V`` = {0, a, d}.  For ``k = 0`` the start is the one-element
    semigroup.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k, l = divmod(n - 1, 4)
    S, pi = times0_with_map(chain(k + 1), b2())
    # (y, v) has index y*5 + v in chain(k+1) x B2
    Y = tuple(sorted({pi.map[y * 5 + v] for y in range(k + 1) for v in (0, 1, 4)}))
    for _ in range(l):
        S = adjoin_zprime(S)
    if S.n != n or len(Y) != bound(n) or not is_subsemilattice(S, Y):
        raise AssertionError(f"extremal construction failed for n={n}")
    return S, Y


# ------------------------------------------------------ structure checks

@dataclass
class Prop8Report:
    size: int
    k: int
    b2_combinatorial: bool
    has_zero: bool
    summary: tuple
    expected_summary: tuple
    summary_ok: bool
    blocks: tuple
    blocks_ok: bool
    ideals_checked: int
    ideals_ok: bool
    quotients_checked: int
    quotients_ok: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.b2_combinatorial
            and self.has_zero
            and self.summary_ok
            and self.blocks_ok
            and self.ideals_ok
            and self.quotients_ok
        )


def verify_prop8(S: Semigroup, seed: int = 0) -> Prop8Report:
    """Zero, algebra shape, ideals and homomorphic images of a B2-combinatorial S."""
    if S.n > CONGRUENCE_LIMIT:
        raise SizeLimitExceeded("homomorphic-image check", S.n, CONGRUENCE_LIMIT)
    failures = []
    b2c = is_b2_combinatorial(S)
    if not b2c:
        failures.append("input is not B2-combinatorial")
    k = (S.n - 1) // 4
    A = semigroup_algebra(S)
    summ = summary(A).as_tuple()
    expected = (4 * k + 1, 0, k + 1, 1)
    blocks = numerical_block_sizes(A, seed=seed)
    expected_blocks = tuple([1] + [2] * k)
    ideals = all_ideals(S)
    ideals_ok = True
    for I in ideals:
        assert is_ideal(S, I)
        sub, _ = subsemigroup(S, I)
        if not is_b2_combinatorial(sub):
            ideals_ok = False
            failures.append(f"ideal {list(I)} is not B2-combinatorial")
    congs = congruences(S)
    quotients_ok = True
    for alpha in congs:
        Q, _ = quotient(S, alpha)
        if not is_b2_combinatorial(Q):
            quotients_ok = False
            failures.append(f"quotient by {[list(c) for c in alpha.classes]} is not B2-combinatorial")
    if summ != expected:
        failures.append(f"algebra summary {summ} != {expected}")
    if blocks != expected_blocks:
        failures.append(f"block sizes {blocks} != {expected_blocks}")
    if S.zero is None:
        failures.append("no zero element")
    return Prop8Report(
        size=S.n,
        k=k,
        b2_combinatorial=b2c,
        has_zero=S.zero is not None,
        summary=summ,
        expected_summary=expected,
        summary_ok=summ == expected,
        blocks=blocks,
        blocks_ok=blocks == expected_blocks,
        ideals_checked=len(ideals),
        ideals_ok=ideals_ok,
        quotients_checked=len(congs),
        quotients_ok=quotients_ok,
        failures=failures,
    )
