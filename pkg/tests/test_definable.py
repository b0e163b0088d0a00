import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulercat import (
    MissingValue,
    NotClassClosed,
    NotDefinable,
    clip,
    complement,
    constant,
    decompose_filters,
    decompose_ideals,
    definable_function,
    incidence,
    is_definable,
    poset_category,
    prime_filter,
    prime_ideal,
    recompose,
    zero,
)
from eulercat.definable import PRIME_FILTERS, FilterDecomposition, linear_combination
from eulercat.euler import enumerate_filters
from eulercat.generators import random_category, random_definable
from eulercat.linalg import rank

seeds = st.integers(0, 2**32 - 1)


def test_is_definable(groupoid, ten_node):
    P = ten_node[0].poset
    assert is_definable(P, {p: i for i, p in enumerate(P)})
    assert not is_definable(groupoid, {"a": 1, "b": 2})
    assert is_definable(groupoid, {"a": 3, "b": 3})
    with pytest.raises(MissingValue):
        is_definable(groupoid, {"a": 3})
    with pytest.raises(NotDefinable):
        definable_function(groupoid, [1, 2])


def test_incidence(parallel, groupoid):
    assert incidence(parallel, parallel.objects).values == (1, 1)
    assert incidence(parallel, prime_filter(parallel, "a")).values == (1, 1)
    assert incidence(parallel, prime_filter(parallel, "b")).values == (0, 1)
    with pytest.raises(NotClassClosed):
        incidence(groupoid, {"a"})


def test_clip(parallel):
    f = definable_function(parallel, {"a": Fraction(3, 2), "b": -4})
    assert clip(f, parallel.objects) == f
    assert clip(constant(parallel), {"b"}) == incidence(parallel, {"b"})
    assert clip(f, ()) == zero(parallel)


def test_decompose_filters_examples(parallel, chain2):
    d = decompose_filters(definable_function(parallel, [1, 0]))
    assert d.as_dict() == {"a": 1, "b": -1}
    d = decompose_filters(definable_function(chain2, [0, 5]))
    assert d.as_dict() == {"p": 0, "q": 5}
    P = poset_category("xyz", [("x", "z"), ("y", "z")])
    one = constant(P)
    assert recompose(decompose_filters(one)) == one
    # f(z) = a_x + a_y + a_z = 1 with a_x = a_y = 1
    assert decompose_filters(one).as_dict() == {"x": 1, "y": 1, "z": -1}


def test_decompose_ideals_examples(pt, parallel, chain2):
    assert decompose_ideals(constant(pt)).as_dict() == {"a": 1}
    # prime ideals of the 2-chain: {p} and {p, q}; f = (1, 0) needs b_q = 0, b_p = 1
    d = decompose_ideals(definable_function(chain2, [1, 0]))
    assert d.as_dict() == {"p": 1, "q": 0}
    assert recompose(d).values == (1, 0)
    d = decompose_ideals(definable_function(parallel, [0, 1]))
    assert d.as_dict() == {"a": -1, "b": 1}


def test_recompose_plumbing(parallel):
    assert recompose(FilterDecomposition(parallel, PRIME_FILTERS, ())) == zero(parallel)
    single = FilterDecomposition(parallel, PRIME_FILTERS, ((Fraction(1), "a"),))
    assert recompose(single) == incidence(parallel, prime_filter(parallel, "a"))


def test_filter_as_ideals_identity(ten_node):
    P = ten_node[0].poset
    Q = ["F2", "H3", "I3", "J3", "E2"]
    lhs = incidence(P, Q)
    rhs = linear_combination(P, [(1, P.objects), (-1, complement(P, Q))])
    assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(seeds, st.integers(0, 8))
def test_round_trip_and_basis(seed, n):
    rng = random.Random(seed)
    C = random_category(rng, n, density=0.3)
    f = random_definable(rng, C)
    df, di = decompose_filters(f), decompose_ideals(f)
    assert recompose(df) == f
    assert recompose(di) == f
    assert decompose_filters(recompose(df)) == df

    reps = C.quotient.representatives
    for prime in (prime_filter, prime_ideal):
        vecs = [incidence(C, prime(C, x)).values for x in reps]
        assert rank(vecs) == len(C.quotient)

    S = set()
    for x in C:
        if rng.random() < 0.5:
            S |= set(prime_filter(C, x))
    assert clip(f, S) + clip(f, complement(C, S)) == f
    delta_S = incidence(C, S)
    assert recompose(decompose_filters(delta_S)) == delta_S
    assert delta_S == constant(C) - incidence(C, complement(C, S))


@settings(max_examples=50, deadline=None)
@given(seeds, st.integers(1, 5))
def test_every_filter_incidence_is_in_the_span(seed, n):
    C = random_category(random.Random(seed), n)
    for F in enumerate_filters(C):
        assert recompose(decompose_filters(incidence(C, F))) == incidence(C, F)
