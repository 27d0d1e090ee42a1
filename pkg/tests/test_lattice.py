import pytest
from hypothesis import given

import oracles
from semilab.constructions import ReesMatrixSpec, b2, brandt, chain, named_semilattice, rees_matrix, times0
from semilab.core import cyclic_group, left_zero, null_semigroup
from semilab.errors import SizeLimitExceeded
from semilab.indecomposability import is_s_indecomposable
from semilab.lattice import (
    NULL,
    SIMPLE,
    ZERO_SIMPLE,
    bound,
    check_bound,
    extremal_witness,
    is_b2_combinatorial,
    is_b2_combinatorial_via_factors,
    is_inverse_semigroup,
    is_subsemilattice,
    is_zero_simple,
    max_subsemilattice,
    principal_factor,
    verify_prop8,
)
from strategies import small_semigroups


def test_bound_values():
    assert [bound(n) for n in range(1, 14)] == [1, 1, 1, 1, 3, 3, 3, 3, 5, 5, 5, 5, 7]


@given(small_semigroups())
def test_max_subsemilattice_matches_brute_force(S):
    size, witness = max_subsemilattice(S)
    assert size == oracles.brute_max_subsemilattice(S)
    assert is_subsemilattice(S, witness)


def test_b2_subsemilattice():
    assert max_subsemilattice(b2()) == (3, (0, 1, 4))


def test_principal_factor_kinds():
    assert principal_factor(b2(), 1).kind == ZERO_SIMPLE
    assert principal_factor(b2(), 0).kind == NULL
    assert principal_factor(cyclic_group(3), 0).kind == SIMPLE
    assert principal_factor(null_semigroup(3), 2).kind == NULL
    pf = principal_factor(times0(chain(3), b2()), 5)
    assert pf.factor.n == 5 and pf.lower


def test_zero_simple():
    assert is_zero_simple(brandt(3))
    assert not is_zero_simple(null_semigroup(2))
    # {0 < 1} is M0(1; 1, 1; [1])
    assert is_zero_simple(chain(2))
    assert not is_zero_simple(chain(3))


def test_sqrt_bound_report():
    r = check_bound(brandt(3))
    assert r.completely_zero_simple and r.sqrt_holds and r.sqrt_tight and r.brandt_isomorphic
    r = check_bound(rees_matrix(ReesMatrixSpec.trivial([[1, 1], [0, 1]])))
    assert r.sqrt_holds and not r.sqrt_tight


def test_bound_on_small_corpus(corpus5):
    for S in corpus5:
        if is_s_indecomposable(S):
            assert check_bound(S).holds


@pytest.mark.parametrize("n", range(1, 14))
def test_extremal_witness(n):
    S, Y = extremal_witness(n)
    assert S.n == n and len(Y) == bound(n)
    assert is_s_indecomposable(S)
    assert is_subsemilattice(S, Y)


def test_b2_combinatorial_examples():
    assert is_b2_combinatorial(b2())
    assert is_b2_combinatorial(null_semigroup(1))
    assert not is_b2_combinatorial(brandt(3))
    assert not is_b2_combinatorial(left_zero(5))
    for name in ("C3", "V"):
        S = times0(named_semilattice(name), b2())
        assert is_b2_combinatorial(S) and is_b2_combinatorial_via_factors(S)


def test_characterizations_agree_on_corpus(corpus5):
    for S in corpus5:
        assert is_b2_combinatorial(S) == is_b2_combinatorial_via_factors(S), S.table


def test_inverse_semigroups():
    assert is_inverse_semigroup(b2())
    assert not is_inverse_semigroup(left_zero(2))


def test_verify_prop8_on_b2():
    r = verify_prop8(b2())
    assert r.ok and r.summary == (5, 0, 2, 1) and r.blocks == (1, 2)


def test_verify_prop8_flags_non_b2c():
    r = verify_prop8(chain(3))
    assert not r.ok and r.failures


def test_verify_prop8_size_limit():
    with pytest.raises(SizeLimitExceeded):
        verify_prop8(brandt(4))
