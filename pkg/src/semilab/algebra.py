"""Finite-dimensional associative algebras over the rationals.

All exact work happens over Q.  The radical, the centre of the semisimple
quotient and the commutator-ideal quotient are defined over Q and their
dimensions do not change under extension of scalars to C, so the block
counts reported by :func:`summary` are the complex Wedderburn block counts.
Individual block sizes need not be visible over Q; :func:`numerical_block_sizes`
recovers them in floating point.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

import numpy as np

from .core import Semigroup
from .errors import NoZeroElement, NumericalAmbiguity
from .linalg import fmt_rational, nullspace, reduce_vector, rref

ZERO = Fraction(0)
ONE = Fraction(1)


class RationalAlgebra:
    """Algebra with basis ``e_0..e_{d-1}`` and ``e_i e_j = sum_k c[i][j][k] e_k``."""

    def __init__(self, constants: Sequence[Sequence[Sequence]], labels: Sequence[str] | None = None):
        d = len(constants)
        self.dim = d
        self.constants = tuple(
            tuple(tuple(Fraction(v) for v in constants[i][j]) for j in range(d)) for i in range(d)
        )
        for i in range(d):
            for j in range(d):
                if len(self.constants[i][j]) != d:
                    raise ValueError(f"structure constant vector c({i},{j}) has the wrong length")
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(d))

    def multiply(self, u: Sequence, v: Sequence) -> list[Fraction]:
        d = self.dim
        out = [ZERO] * d
        for i, ui in enumerate(u):
            if not ui:
                continue
            ci = self.constants[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = ui * vj
                for k, c in enumerate(ci[j]):
                    if c:
                        out[k] += w * c
        return out

    def basis_vector(self, i: int) -> list[Fraction]:
        v = [ZERO] * self.dim
        v[i] = ONE
        return v

    def is_associative(self) -> bool:
        d = self.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    ei, ej, ek = self.basis_vector(i), self.basis_vector(j), self.basis_vector(k)
                    if self.multiply(self.multiply(ei, ej), ek) != self.multiply(ei, self.multiply(ej, ek)):
                        return False
        return True

    def left_matrix(self, x: Sequence) -> list[list[Fraction]]:
        """Matrix of ``L_x``; column ``j`` holds ``x e_j``."""
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "constants": [
                [[fmt_rational(c) for c in self.constants[i][j]] for j in range(self.dim)]
                for i in range(self.dim)
            ],
        }


@dataclass(frozen=True)
class Subspace:
    """Subspace of an algebra, stored as an RREF basis."""

    dim_ambient: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, vectors, d: int) -> "Subspace":
        R, piv = rref(list(vectors), d)
        return cls(d, tuple(R), tuple(piv))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        return not any(reduce_vector(v, self.basis, self.pivots))

    def reduce(self, v) -> list[Fraction]:
        return reduce_vector(v, self.basis, self.pivots)


@dataclass(frozen=True)
class AlgebraSummary:
    dim: int
    radical_dim: int
    num_blocks: int
    one_dim_blocks: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.dim, self.radical_dim, self.num_blocks, self.one_dim_blocks)


def semigroup_algebra(S: Semigroup) -> RationalAlgebra:
    n = S.n
    consts = []
    for i in range(n):
        row = []
        for j in range(n):
            v = [0] * n
            v[S.table[i][j]] = 1
            row.append(v)
        consts.append(row)
    return RationalAlgebra(consts, [str(x) for x in range(n)])


def contracted_algebra(S: Semigroup) -> RationalAlgebra:
    """Semigroup algebra with the semigroup zero identified with 0."""
    if S.zero is None:
        raise NoZeroElement()
    basis = [x for x in range(S.n) if x != S.zero]
    pos = {x: i for i, x in enumerate(basis)}
    d = len(basis)
    consts = []
    for x in basis:
        row = []
        for y in basis:
            v = [0] * d
            p = S.table[x][y]
            if p != S.zero:
                v[pos[p]] = 1
            row.append(v)
        consts.append(row)
    return RationalAlgebra(consts, [str(x) for x in basis])


def _span_products(A: RationalAlgebra, U, V):
    return [A.multiply(u, v) for u in U for v in V]


def is_nilpotent_ideal(A: RationalAlgebra, J: Subspace) -> bool:
    d = A.dim
    basis = [A.basis_vector(i) for i in range(d)]
    for v in J.basis:
        for e in basis:
            if not J.contains(A.multiply(e, v)) or not J.contains(A.multiply(v, e)):
                return False
    power = Subspace.span(J.basis, d)
    for _ in range(d + 1):
        if power.dim == 0:
            return True
        power = Subspace.span(_span_products(A, power.basis, J.basis), d)
    return power.dim == 0


def radical(A: RationalAlgebra, verify: bool = True) -> Subspace:
    """Jacobson radical as the kernel of the trace form ``tr(L_x L_y)``.

    In characteristic zero ``x`` lies in the radical iff ``tr(L_{xy}) = 0``
    for every ``y``; the form is symmetric so its kernel is a nullspace.
    """
    d = A.dim
    c = A.constants
    traces = [sum(c[k][m][m] for m in range(d)) for k in range(d)]
    gram = [[sum(c[i][j][k] * traces[k] for k in range(d) if c[i][j][k]) for j in range(d)] for i in range(d)]
    J = Subspace.span(nullspace(gram, d), d)
    if verify and not is_nilpotent_ideal(A, J):
        raise AssertionError("trace-form kernel is not a nilpotent ideal")
    return J


def quotient_algebra(A: RationalAlgebra, I: Subspace) -> RationalAlgebra:
    """``A/I`` for a two-sided ideal ``I``, on the non-pivot basis vectors."""
    keep = [k for k in range(A.dim) if k not in set(I.pivots)]
    consts = []
    for i in keep:
        row = []
        for j in keep:
            r = I.reduce(A.constants[i][j])
            row.append([r[k] for k in keep])
        consts.append(row)
    return RationalAlgebra(consts, [A.labels[k] for k in keep])


def center(A: RationalAlgebra) -> list:
    """Basis of the centre ``{z : z e_j = e_j z for all j}``."""
    d = A.dim
    c = A.constants
    rows = []
    for j in range(d):
        for k in range(d):
            rows.append([c[i][j][k] - c[j][i][k] for i in range(d)])
    if not rows:
        return []
    return nullspace(rows, d)


def commutator_ideal(A: RationalAlgebra) -> Subspace:
    """Two-sided ideal generated by all ``ab - ba``."""
    d = A.dim
    c = A.constants
    gens = [[c[i][j][k] - c[j][i][k] for k in range(d)] for i in range(d) for j in range(i + 1, d)]
    I = Subspace.span(gens, d)
    basis = [A.basis_vector(i) for i in range(d)]
    while True:
        more = list(I.basis)
        for v in I.basis:
            for e in basis:
                more.append(A.multiply(e, v))
                more.append(A.multiply(v, e))
        J = Subspace.span(more, d)
        if J.dim == I.dim:
            return I
        I = J


def semisimple_part(A: RationalAlgebra) -> tuple[Subspace, RationalAlgebra]:
    J = radical(A)
    return J, quotient_algebra(A, J)


def summary(A: RationalAlgebra) -> AlgebraSummary:
    J, B = semisimple_part(A)
    num_blocks = len(center(B))
    one_dim = B.dim - commutator_ideal(B).dim
    return AlgebraSummary(A.dim, J.dim, num_blocks, one_dim)


def _cluster(values, tol):
    clusters: list[list[complex]] = []
    for lam in sorted(values, key=lambda z: (z.real, z.imag)):
        for cl in clusters:
            mu = cl[0]
            if abs(lam - mu) <= tol * max(1.0, abs(mu)):
                cl.append(lam)
                break
        else:
            clusters.append([lam])
    return clusters


def numerical_block_sizes(
    A: RationalAlgebra,
    seed: int = 0,
    max_retries: int = 8,
    tol: float = 1e-6,
) -> tuple[int, ...]:
    """Sizes ``n_i`` of the complex matrix blocks of ``A/J(A)``, sorted.

    A random central element acts on the block ``M_{n_i}`` as a scalar, so
    the eigenvalues of its left multiplication come in clusters of
    multiplicity ``n_i^2``.  Results are cross-checked against
    :func:`summary`; a failed check triggers a retry with fresh coefficients.
    """
    J, B = semisimple_part(A)
    if B.dim == 0:
        return ()
    zbasis = center(B)
    expected_blocks = len(zbasis)
    expected_one = B.dim - commutator_ideal(B).dim
    rng = random.Random(seed)
    m = B.dim
    cf = np.array([[[float(B.constants[i][j][k]) for k in range(m)] for j in range(m)] for i in range(m)])
    zf = np.array([[float(v) for v in z] for z in zbasis])
    for _ in range(max_retries):
        coeffs = np.array([rng.randint(-100, 100) for _ in zbasis], dtype=float)
        c = coeffs @ zf
        # Lc[k, j] = sum_i c_i C[i, j, k]
        Lc = np.einsum("i,ijk->kj", c, cf)
        eig = np.linalg.eigvals(Lc)
        clusters = _cluster(list(eig), tol)
        sizes = []
        for cl in clusters:
            r = isqrt(len(cl))
            if r * r != len(cl):
                break
            sizes.append(r)
        else:
            if (
                len(sizes) == expected_blocks
                and sum(s * s for s in sizes) == m
                and sizes.count(1) == expected_one
            ):
                return tuple(sorted(sizes))
    raise NumericalAmbiguity(f"block sizes not resolved after {max_retries} random central elements")

