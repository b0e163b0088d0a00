"""Euler integration, measurable maps, pushforwards and the Fubini check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .category import (
    FiniteCategory,
    full_subcategory,
    is_filter,
    is_ideal,
    is_poset,
    point,
    prime_filter,
    prime_ideal,
    quotient_category,
)
from .definable import (
    PRIME_FILTERS,
    DefinableFunction,
    decompose_filters,
    decompose_ideals,
    definable_function,
    restrict,
)
from .errors import (
    NotMeasurable,
    NotMeasurableMap,
    SourceTargetMismatch,
    TargetNotPoset,
    UnknownObject,
)
from .euler import DEFAULT_FILTER_CAP, euler_characteristic, is_measurable

FILTERS = "filters"
IDEALS = "ideals"

__all__ = [
    "FILTERS",
    "IDEALS",
    "ObjectMap",
    "object_map",
    "identity_map",
    "map_to_point",
    "projection_map",
    "integrate",
    "integrate_over",
    "integrate_representation",
    "is_measurable_map",
    "preimage",
    "pushforward",
    "compose_maps",
    "fubini_check",
]


def integrate(f: DefinableFunction, side: str = FILTERS, strict: bool = False) -> Fraction:
    """Euler integral of ``f`` on filters (default) or on ideals.

    The integral is linear and sends the incidence function of each prime
    filter to that filter's Euler characteristic (prime ideals for
    ``side="ideals"``). Only the prime sets with nonzero coefficient are
    checked for an Euler characteristic unless ``strict`` is set, in which
    case the whole category must be measurable first.
    """
    C = f.category
    if side == FILTERS:
        d = decompose_filters(f)
    elif side == IDEALS:
        d = decompose_ideals(f)
    else:
        raise ValueError(f"unknown integration side {side!r}")
    if strict and not is_measurable(C, DEFAULT_FILTER_CAP):
        raise NotMeasurable("NotMeasurable: some filter or ideal lacks an Euler characteristic")
    total = Fraction(0)
    for coef, rep in d.terms:
        if not coef:
            continue
        S = d.prime_set(rep)
        chi = euler_characteristic(full_subcategory(C, S))
        if chi is None:
            kind = "filter" if d.basis == PRIME_FILTERS else "ideal"
            raise NotMeasurable(f"NotMeasurable: prime {kind} of {rep} has no Euler characteristic")
        total += coef * chi
    return total


def integrate_over(f: DefinableFunction, S: Iterable, side: str = FILTERS) -> Fraction:
    """Integral of ``f`` restricted to the full subcategory on ``S``."""
    return integrate(restrict(f, S), side)


def integrate_representation(C: FiniteCategory, terms: Iterable) -> Fraction:
    """``sum coef * chi(A)`` for a representation ``sum coef * delta_A`` over filters A.

    Integration does not depend on which representation is used, so this
    must agree with :func:`integrate` on the represented function.
    """
    total = Fraction(0)
    for coef, A in terms:
        chi = euler_characteristic(full_subcategory(C, A))
        if chi is None:
            raise NotMeasurable(f"NotMeasurable: {set(A)} has no Euler characteristic")
        total += Fraction(coef) * chi
    return total


@dataclass(frozen=True)
class ObjectMap:
    """A map on objects ``source -> target``; ``assignment[i]`` is the image of object i."""

    source: FiniteCategory
    target: FiniteCategory
    assignment: tuple

    def __call__(self, x):
        return self.assignment[self.source.index(x)]

    def as_dict(self) -> dict:
        return dict(zip(self.source.objects, self.assignment))


def object_map(source: FiniteCategory, target: FiniteCategory, mapping: Mapping) -> ObjectMap:
    for x in mapping:
        source.index(x)
    images = []
    for x in source.objects:
        if x not in mapping:
            raise UnknownObject(f"UnknownObject: map has no image for {x!r}")
        y = mapping[x]
        target.index(y)
        images.append(y)
    return ObjectMap(source, target, tuple(images))


def identity_map(C: FiniteCategory) -> ObjectMap:
    return ObjectMap(C, C, C.objects)


def map_to_point(C: FiniteCategory, pt: FiniteCategory = None) -> ObjectMap:
    """The unique map to the one-object category."""
    pt = point() if pt is None else pt
    return ObjectMap(C, pt, (pt.objects[0],) * len(C))


def projection_map(C: FiniteCategory) -> ObjectMap:
    """Object map of the projection onto the quotient poset (objects named by representatives)."""
    P = quotient_category(C)
    Q = C.quotient
    return ObjectMap(C, P, tuple(Q.classes[k][0] for k in Q.projection))


def preimage(F: ObjectMap, T: Iterable) -> tuple:
    wanted = set(F.target.members(T))
    return tuple(x for x, y in zip(F.source.objects, F.assignment) if y in wanted)


def is_measurable_map(F: ObjectMap) -> bool:
    """Inverse images of prime filters are filters and of prime ideals are ideals.

    Every filter is a union of prime filters and preimages commute with
    unions, so checking the prime sets covers all filters and ideals.
    """
    C, D = F.source, F.target
    for d in D.objects:
        if not is_filter(C, preimage(F, prime_filter(D, d))):
            return False
        if not is_ideal(C, preimage(F, prime_ideal(D, d))):
            return False
    return True


def pushforward(F: ObjectMap, f: DefinableFunction) -> DefinableFunction:
    """``F_* f (d)``: integral of ``f`` over the preimage of the prime ideal of ``d``."""
    if f.category != F.source:
        raise SourceTargetMismatch("function does not live on the source of the map")
    if not is_measurable_map(F):
        raise NotMeasurableMap("NotMeasurableMap: a prime filter or ideal has a bad preimage")
    D = F.target
    values = {d: integrate_over(f, preimage(F, prime_ideal(D, d)), FILTERS) for d in D.objects}
    return definable_function(D, values)


def compose_maps(F: ObjectMap, G: ObjectMap) -> ObjectMap:
    """``G after F``."""
    if F.target != G.source:
        raise SourceTargetMismatch("target of the first map is not the source of the second")
    return ObjectMap(F.source, G.target, tuple(G(y) for y in F.assignment))


def fubini_check(F: ObjectMap, f: DefinableFunction) -> tuple:
    """Both sides ``(integral over source, integral of pushforward over target)``.

    The target must be a poset; both sides are returned rather than compared
    so that callers see the exact discrepancy if any.
    """
    if not is_poset(F.target):
        raise TargetNotPoset("TargetNotPoset: Fubini needs a poset target")
    rhs_fn = pushforward(F, f)
    return integrate(f, FILTERS), integrate(rhs_fn, FILTERS)

