import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulercat import (
    DuplicateObject,
    MissingIdentity,
    NotComposable,
    ShapeMismatch,
    UnknownObject,
    complement,
    full_subcategory,
    is_acyclic,
    is_class_closed,
    is_filter,
    is_ideal,
    maximal_objects,
    minimal_objects,
    new_category,
    opposite,
    poset_category,
    prime_filter,
    prime_ideal,
    quotient_poset,
    reflexible,
)
from eulercat.euler import enumerate_filters, enumerate_ideals
from eulercat.generators import random_category

from .conftest import TEN_NODE_H
from .oracles import brute_filters, brute_ideals


def test_new_category_examples(pt, parallel):
    assert pt.objects == ("a",) and pt.hom == ((1,),)
    assert parallel.hom == ((1, 2), (0, 1))
    with pytest.raises(MissingIdentity):
        new_category(["a", "b"], [[1, 0], [0, 0]])


@pytest.mark.parametrize(
    "objects, hom, err",
    [
        (["a", "a"], [[1, 0], [0, 1]], DuplicateObject),
        (["a", "b"], [[1, 0]], ShapeMismatch),
        (["a"], [[-1]], ShapeMismatch),
        (["a", "b", "c"], [[1, 1, 0], [0, 1, 1], [0, 0, 1]], NotComposable),
    ],
)
def test_new_category_rejects(objects, hom, err):
    with pytest.raises(err):
        new_category(objects, hom)


def test_opposite(pt, parallel):
    assert opposite(pt) == pt
    assert opposite(parallel).hom == ((1, 0), (2, 1))
    assert opposite(opposite(parallel)) == parallel


def test_reflexible(pt, parallel, groupoid):
    assert reflexible(pt, "a", "a")
    assert not reflexible(parallel, "a", "b")
    assert reflexible(groupoid, "a", "b")
    with pytest.raises(UnknownObject):
        reflexible(pt, "a", "zz")


def test_quotient_poset(parallel, groupoid):
    P = poset_category("xyz", [("x", "y"), ("y", "z")])
    Q = quotient_poset(P)
    assert Q.classes == (("x",), ("y",), ("z",))
    assert Q.order == {(0, 1), (1, 2), (0, 2)}

    assert quotient_poset(groupoid).classes == (("a", "b"),)
    assert quotient_poset(groupoid).order == frozenset()

    Q = quotient_poset(parallel)
    assert Q.classes == (("a",), ("b",)) and Q.order == {(0, 1)}
    assert Q.projection == (0, 1)


def test_prime_sets(pt, parallel):
    assert prime_filter(pt, "a") == ("a",)
    assert prime_filter(parallel, "a") == ("a", "b")
    assert prime_filter(parallel, "b") == ("b",)
    assert prime_ideal(pt, "a") == ("a",)
    assert prime_ideal(parallel, "b") == ("a", "b")
    assert prime_ideal(parallel, "a") == ("a",)


def test_filters_and_ideals(parallel, ten_node):
    for C in (parallel, ten_node[0].poset):
        assert is_filter(C, C.objects) and is_filter(C, ())
        assert is_ideal(C, C.objects) and is_ideal(C, ())
    assert is_ideal(parallel, {"a"})
    assert not is_ideal(parallel, {"b"})
    P = ten_node[0].poset
    assert is_filter(P, [p for p, v in TEN_NODE_H.items() if v >= 2])


def test_complement(parallel, ten_node):
    assert complement(parallel, parallel.objects) == ()
    assert complement(parallel, {"b"}) == ("a",)
    assert is_ideal(parallel, complement(parallel, {"b"}))
    P = ten_node[0].poset
    rest = complement(P, [p for p, v in TEN_NODE_H.items() if v >= 1])
    assert rest == ("C1", "G2")
    assert is_ideal(P, rest)


def test_full_subcategory(parallel, ten_node):
    assert full_subcategory(parallel, parallel.objects) == parallel
    assert full_subcategory(parallel, {"b"}).hom == ((1,),)
    sub = full_subcategory(ten_node[0].poset, ["F2", "H3", "I3", "J3"])
    assert sub.objects == ("F2", "H3", "I3", "J3")
    strict = {(x, y) for x in sub for y in sub if x != y and sub.zeta(x, y)}
    assert strict == {("F2", "I3"), ("F2", "J3")}
    empty = full_subcategory(parallel, ())
    assert len(empty) == 0


def test_extremal(pt, parallel, ten_node):
    assert maximal_objects(pt) == minimal_objects(pt) == ("a",)
    assert maximal_objects(parallel) == ("b",)
    assert minimal_objects(parallel) == ("a",)
    P = ten_node[0].poset
    assert maximal_objects(P) == ("H3", "I3", "J3")
    assert minimal_objects(P) == ("A1", "B1", "C1")


def test_is_acyclic(parallel):
    assert is_acyclic(poset_category("abc", [("a", "b")]))
    assert not is_acyclic(new_category(["a"], [[2]]))
    assert is_acyclic(parallel)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=150, deadline=None)
@given(seeds, st.integers(0, 6))
def test_order_theory_properties(seed, n):
    rng = random.Random(seed)
    C = random_category(rng, n)
    Cop = opposite(C)
    Q = quotient_poset(C)

    # classes partition objects and agree with reflexibility
    for x in C:
        for y in C:
            same = Q.projection[C.index(x)] == Q.projection[C.index(y)]
            assert same == reflexible(C, x, y)
            assert Q.leq(Q.projection[C.index(x)], Q.projection[C.index(y)]) == (C.zeta(x, y) > 0)
    # strict order is transitive and antisymmetric
    for (i, j) in Q.order:
        assert (j, i) not in Q.order
        for (k, l) in Q.order:
            if k == j:
                assert (i, l) in Q.order

    for x in C:
        assert is_filter(C, prime_filter(C, x))
        assert is_ideal(C, prime_ideal(C, x))
        assert prime_ideal(C, x) == prime_filter(Cop, x)

    filters = brute_filters(C)
    ideals = brute_ideals(C)
    assert set(filters) == {frozenset(F) for F in enumerate_filters(C)}
    assert set(ideals) == {frozenset(I) for I in enumerate_ideals(C)}
    assert len(filters) == len(enumerate_filters(C))

    for S in filters:
        assert is_ideal(Cop, S)
        assert is_class_closed(C, S)
        assert is_ideal(C, complement(C, S))
    for A in filters:
        for B in filters:
            assert is_filter(C, A | B) and is_filter(C, A & B)
    for A in ideals:
        for B in ideals:
            assert is_ideal(C, A | B) and is_ideal(C, A & B)

    maxi = set(maximal_objects(C))
    mini = set(minimal_objects(C))
    for x in C:
        k = Q.projection[C.index(x)]
        assert (x in maxi) == (k in Q.maximal())
        assert (x in mini) == (k in Q.minimal())


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 6), st.data())
def test_filter_iff_opposite_ideal_on_arbitrary_subsets(seed, n, data):
    C = random_category(random.Random(seed), n)
    S = data.draw(st.sets(st.sampled_from(C.objects)))
    assert is_filter(C, S) == is_ideal(opposite(C), S)
    if is_class_closed(C, S):
        assert is_filter(C, S) == is_ideal(C, complement(C, S))
