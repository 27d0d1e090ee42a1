"""Hypothesis strategies over small semigroups."""
from hypothesis import strategies as st

from semilab.core import relabel
from semilab.enumeration import enumerate_semigroups

SMALL = [S for n in range(1, 5) for S in enumerate_semigroups(n)]


def small_semigroups():
    return st.sampled_from(SMALL)


@st.composite
def relabelled_pairs(draw):
    """A small semigroup together with a randomly relabelled copy and the labels used."""
    S = draw(small_semigroups())
    perm = draw(st.permutations(range(S.n)))
    return S, relabel(S, perm), tuple(perm)
