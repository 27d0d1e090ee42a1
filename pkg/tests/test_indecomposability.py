from hypothesis import given, settings

import oracles
from semilab.constructions import b2, chain
from semilab.core import cyclic_group, direct_product, kernel, left_zero, null_semigroup
from semilab.indecomposability import (
    completely_prime_ideals,
    condensation,
    divisibility_graph,
    is_s_indecomposable,
    is_s_indecomposable_algebra,
    is_s_indecomposable_graph,
    kernel_quotient,
    separating_prime_ideal,
    strongly_connected_components,
)
from strategies import small_semigroups


def test_three_tests_agree_with_brute_force(corpus4):
    for S in corpus4:
        expected = oracles.brute_s_indecomposable(S)
        assert is_s_indecomposable_graph(S) == expected, S.table
        assert is_s_indecomposable_algebra(S) == expected, S.table
        assert (not completely_prime_ideals(S)) == expected, S.table


@given(small_semigroups())
def test_prime_ideals_are_preimages_of_zero(S):
    # completely prime ideals correspond to maps onto {0 < 1}
    expected = sorted(
        tuple(x for x in range(S.n) if f[x] == 0) for f in oracles.semilattice_images_two(S)
    )
    assert sorted(completely_prime_ideals(S)) == expected


@given(small_semigroups())
@settings(deadline=None)
def test_kernel_quotient_preserves_verdict(S):
    assert is_s_indecomposable_graph(S) == is_s_indecomposable_graph(kernel_quotient(S))


def test_two_chain_graph():
    # in {0 < 1}: 0 divides 1^k only if 0 = 1, and 1 divides 0
    g = divisibility_graph(chain(2))
    assert g.adjacency == ((True, False), (True, True))
    comps, edges = condensation(g)
    assert len(comps) == 2 and len(edges) == 1
    assert not is_s_indecomposable(chain(2))
    assert separating_prime_ideal(chain(2)) == (0,)


def test_examples():
    assert is_s_indecomposable(b2())
    assert is_s_indecomposable(null_semigroup(4))
    assert is_s_indecomposable(cyclic_group(3))
    assert is_s_indecomposable(left_zero(3))
    assert not is_s_indecomposable(direct_product(chain(2), cyclic_group(2)))
    assert separating_prime_ideal(b2()) is None


def test_kernel_quotient_of_simple_is_trivial():
    assert kernel_quotient(cyclic_group(3)).n == 1
    assert kernel(cyclic_group(3)) == (0, 1, 2)


def test_scc_on_plain_graph():
    adj = [[0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 1, 0]]
    comps = sorted(sorted(c) for c in strongly_connected_components(adj))
    assert comps == [[0, 1, 2], [3]]


def test_scc_long_path_is_iterative():
    n = 3000
    adj = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        adj[i][i + 1] = 1
    adj[n - 1][0] = 1
    assert len(strongly_connected_components(adj)) == 1


def test_graph_test_agrees_with_brute_force_order_5(corpus5):
    for S in corpus5:
        if S.n == 5:
            assert is_s_indecomposable_graph(S) == oracles.brute_s_indecomposable(S), S.table
