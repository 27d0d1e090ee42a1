import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from semilab.constructions import b2, brandt, named_semilattice, times0
from semilab.core import relabel
from semilab.enumeration import (
    canonical_form,
    canonical_key,
    canonicalize,
    classification_evidence,
    classify_b2c,
    enumerate_semigroups,
    full_inverse_subsemigroups,
    semilattices,
)
from semilab.errors import SizeLimitExceeded, UnsupportedOrder
from semilab.constructions import munn
from strategies import relabelled_pairs

# isomorphism classes, not merging opposites
COUNTS = {1: 1, 2: 5, 3: 24, 4: 188, 5: 1915}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_naive_generator(n):
    assert oracles.naive_class_count(n) == COUNTS[n]
    assert len(list(enumerate_semigroups(n))) == COUNTS[n]


@pytest.mark.parametrize("n", [4, 5])
def test_pinned_counts(n):
    assert len(list(enumerate_semigroups(n))) == COUNTS[n]


def test_enumeration_keys_match_naive_for_order_3():
    naive = {oracles.naive_key(t) for t in oracles.naive_tables(3)}
    ours = {S.flat() for S in enumerate_semigroups(3)}
    assert ours == naive


def test_enumeration_is_sorted_and_canonical(corpus4):
    for n in range(1, 5):
        flats = [S.flat() for S in corpus4 if S.n == n]
        assert flats == sorted(flats)
    for S in corpus4:
        assert canonicalize(S) == S


def test_enumeration_limit():
    with pytest.raises(SizeLimitExceeded):
        list(enumerate_semigroups(6))


@settings(max_examples=100)
@given(relabelled_pairs())
def test_canonical_form_is_invariant(pair):
    S, T, _ = pair
    assert canonical_key(S) == canonical_key(T)
    C, perm = canonical_form(T)
    assert relabel(T, perm) == C


@settings(max_examples=15, deadline=None)
@given(st.permutations(range(9)), st.sampled_from(["C3", "V"]))
def test_large_canonical_form_is_invariant(perm, name):
    S = times0(named_semilattice(name), b2())
    T = relabel(S, perm)
    C, p = canonical_form(T)
    assert relabel(T, p) == C
    assert C == canonicalize(S)


def test_large_canonical_separates():
    a = canonical_key(times0(named_semilattice("C3"), b2()))
    b = canonical_key(times0(named_semilattice("V"), b2()))
    assert a != b
    assert canonical_key(brandt(3)) == canonical_key(relabel(brandt(3), list(range(9, -1, -1))))


def test_semilattice_counts():
    # meet-semilattices up to isomorphism
    assert [len(semilattices(n)) for n in range(1, 6)] == [1, 1, 2, 5, 15]


def test_full_inverse_subsemigroups_of_tx():
    # T_X is B4; a full 9-element subsemigroup picks two disjoint pairs {e_ij, e_ji}
    T = munn(named_semilattice("X"))
    assert len(full_inverse_subsemigroups(T, 9)) == 3


def test_classify_small_orders():
    assert len(classify_b2c(1)) == 1
    (B,) = classify_b2c(5)
    assert B == canonicalize(b2())
    with pytest.raises(UnsupportedOrder):
        classify_b2c(13)


def test_classification_evidence():
    ev = classification_evidence(9)
    assert len(ev) == 3
    assert all(e["idempotents"] == 5 and e["sources"] for e in ev)
