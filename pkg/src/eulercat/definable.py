"""Definable functions and their prime-filter / prime-ideal decompositions.

A definable function is a rational-valued function on objects that is
constant on every reflexibility class. The incidence functions of the prime
filters generated by one representative per class form a basis of the space
of definable functions, and so do those of the prime ideals; the
coordinates in either basis come from a triangular solve over the
quotient poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .category import (
    FiniteCategory,
    complement,
    full_subcategory,
    is_class_closed,
    prime_filter,
    prime_ideal,
)
from .errors import MissingValue, NotClassClosed, NotDefinable
from .rational import to_fraction

PRIME_FILTERS = "prime-filters"
PRIME_IDEALS = "prime-ideals"

Values = Union[Mapping, Sequence]

__all__ = [
    "DefinableFunction",
    "FilterDecomposition",
    "PRIME_FILTERS",
    "PRIME_IDEALS",
    "definable_function",
    "is_definable",
    "constant",
    "zero",
    "incidence",
    "clip",
    "restrict",
    "decompose_filters",
    "decompose_ideals",
    "recompose",
    "linear_combination",
    "ideal_form_of_filter",
]


def _values_tuple(C: FiniteCategory, values: Values) -> tuple:
    if isinstance(values, Mapping):
        for x in values:
            C.index(x)
        missing = [x for x in C.objects if x not in values]
        if missing:
            raise MissingValue(f"MissingValue at object {missing[0]}")
        return tuple(to_fraction(values[x]) for x in C.objects)
    values = list(values)
    if len(values) != len(C):
        raise MissingValue(f"expected {len(C)} values, got {len(values)}")
    return tuple(to_fraction(v) for v in values)


def _first_violation(C: FiniteCategory, vals: tuple):
    for cls in C.quotient.classes:
        idx = [C.index(x) for x in cls]
        if any(vals[i] != vals[idx[0]] for i in idx):
            return cls
    return None


def is_definable(C: FiniteCategory, values: Values) -> bool:
    """True iff ``values`` is constant on each reflexibility class."""
    return _first_violation(C, _values_tuple(C, values)) is None


@dataclass(frozen=True)
class DefinableFunction:
    """Exact rational values on the objects of ``category``, in input order.

    Supports pointwise ``+``, ``-`` and scalar ``*``.
    """

    category: FiniteCategory
    values: tuple

    def __call__(self, x) -> Fraction:
        return self.values[self.category.index(x)]

    __getitem__ = __call__

    def as_dict(self) -> dict:
        return dict(zip(self.category.objects, self.values))

    def _compatible(self, other) -> bool:
        return isinstance(other, DefinableFunction) and other.category == self.category

    def __add__(self, other):
        if not self._compatible(other):
            return NotImplemented
        return DefinableFunction(self.category, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        if not self._compatible(other):
            return NotImplemented
        return DefinableFunction(self.category, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return DefinableFunction(self.category, tuple(-a for a in self.values))

    def __mul__(self, scalar):
        s = to_fraction(scalar)
        return DefinableFunction(self.category, tuple(s * a for a in self.values))

    __rmul__ = __mul__


def definable_function(C: FiniteCategory, values: Values) -> DefinableFunction:
    vals = _values_tuple(C, values)
    bad = _first_violation(C, vals)
    if bad is not None:
        raise NotDefinable(f"NotDefinable: values differ on reflexible class {{{', '.join(bad)}}}")
    return DefinableFunction(C, vals)


def constant(C: FiniteCategory, value=1) -> DefinableFunction:
    return DefinableFunction(C, (to_fraction(value),) * len(C))


def zero(C: FiniteCategory) -> DefinableFunction:
    return constant(C, 0)


def _require_class_closed(C: FiniteCategory, S) -> set:
    if not is_class_closed(C, S):
        raise NotClassClosed("NotClassClosed: subset splits a reflexibility class")
    return set(C.indices(S))


def incidence(C: FiniteCategory, S: Iterable) -> DefinableFunction:
    """Indicator function of a class-closed set of objects."""
    idx = _require_class_closed(C, S)
    return DefinableFunction(C, tuple(Fraction(int(i in idx)) for i in range(len(C))))


def clip(f: DefinableFunction, S: Iterable) -> DefinableFunction:
    """``f`` on ``S``, zero elsewhere (the ambient category is unchanged)."""
    idx = _require_class_closed(f.category, S)
    return DefinableFunction(
        f.category, tuple(v if i in idx else Fraction(0) for i, v in enumerate(f.values))
    )


def restrict(f: DefinableFunction, S: Iterable) -> DefinableFunction:
    """``f`` as a function on the full subcategory spanned by ``S``."""
    C = f.category
    _require_class_closed(C, S)
    B = full_subcategory(C, S)
    return DefinableFunction(B, tuple(f.values[C.index(x)] for x in B.objects))


def linear_combination(C: FiniteCategory, terms: Iterable) -> DefinableFunction:
    """Sum of ``coef * incidence(C, S)`` over ``(coef, S)`` pairs."""
    acc = [Fraction(0)] * len(C)
    for coef, S in terms:
        coef = to_fraction(coef)
        for i in _require_class_closed(C, S):
            acc[i] += coef
    return DefinableFunction(C, tuple(acc))


@dataclass(frozen=True)
class FilterDecomposition:
    """Coordinates of a definable function in a prime basis.

    ``terms`` pairs each coefficient with the fixed representative of its
    class; the basis vector is the incidence function of the prime filter
    (or prime ideal) generated by that representative.
    """

    category: FiniteCategory
    basis: str
    terms: tuple

    def prime_set(self, rep) -> tuple:
        if self.basis == PRIME_FILTERS:
            return prime_filter(self.category, rep)
        return prime_ideal(self.category, rep)

    def as_dict(self) -> dict:
        return {rep: coef for coef, rep in self.terms}


def _triangular(f: DefinableFunction, upward: bool) -> tuple:
    C = f.category
    Q = C.quotient
    order = Q.linear_extension if upward else tuple(reversed(Q.linear_extension))
    below = Q.down if upward else Q.up
    coef = {}
    for k in order:
        rep = Q.classes[k][0]
        acc = f.values[C.index(rep)]
        for j in below[k]:
            if j != k:
                acc -= coef[j]
        coef[k] = acc
    return tuple((coef[k], Q.classes[k][0]) for k in range(len(Q)))


def _check_definable(f: DefinableFunction):
    bad = _first_violation(f.category, f.values)
    if bad is not None:
        raise NotDefinable(f"NotDefinable: values differ on reflexible class {{{', '.join(bad)}}}")


def decompose_filters(f: DefinableFunction) -> FilterDecomposition:
    """Coefficients ``a`` with ``f = sum a[x] * incidence(prime_filter(x))``.

    ``y`` lies in the prime filter of ``x`` exactly when [x] <= [y], so
    ``f(y)`` is the sum of ``a`` over classes below [y]; solving minimal
    classes first inverts that sum.
    """
    _check_definable(f)
    return FilterDecomposition(f.category, PRIME_FILTERS, _triangular(f, upward=True))


def decompose_ideals(f: DefinableFunction) -> FilterDecomposition:
    """Dual of :func:`decompose_filters`, solved from the maximal classes down."""
    _check_definable(f)
    return FilterDecomposition(f.category, PRIME_IDEALS, _triangular(f, upward=False))


def recompose(d: FilterDecomposition) -> DefinableFunction:
    return linear_combination(d.category, ((c, d.prime_set(rep)) for c, rep in d.terms))


def ideal_form_of_filter(C: FiniteCategory, S: Iterable) -> list:
    """``delta_S = delta_C - delta_(C minus S)`` as ``(coef, set)`` terms."""
    return [(Fraction(1), C.objects), (Fraction(-1), complement(C, S))]
