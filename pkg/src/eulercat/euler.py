"""Weightings, Euler characteristics, nerve counts and measurability."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .category import (
    FiniteCategory,
    complement,
    full_subcategory,
    is_acyclic,
    opposite,
)
from .errors import CapExceeded, NotAcyclic
from .linalg import solve

DEFAULT_FILTER_CAP = 100_000

__all__ = [
    "Weighting",
    "weighting",
    "coweighting",
    "euler_characteristic",
    "has_euler_characteristic",
    "nerve_counts",
    "nerve_euler_characteristic",
    "enumerate_filters",
    "enumerate_ideals",
    "is_measurable",
    "subcategory_chi",
    "DEFAULT_FILTER_CAP",
]


@dataclass(frozen=True)
class Weighting:
    """A weighting (column, ``zeta @ w = 1``) or coweighting (row, ``v @ zeta = 1``)."""

    category: FiniteCategory
    values: tuple
    kind: str = "weighting"

    def __getitem__(self, x) -> Fraction:
        return self.values[self.category.index(x)]

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def as_dict(self) -> dict:
        return dict(zip(self.category.objects, self.values))


def _solve_weighting(C: FiniteCategory) -> Optional[tuple]:
    n = len(C)
    if n == 0:
        return ()
    # Permuting to a linear extension makes zeta block upper triangular,
    # which keeps elimination cheap.
    Q = C.quotient
    rank = {k: r for r, k in enumerate(Q.linear_extension)}
    perm = sorted(range(n), key=lambda i: (rank[Q.projection[i]], i))
    A = [[C.hom[i][j] for j in perm] for i in perm]
    x = solve(A, [1] * n)
    if x is None:
        return None
    out = [Fraction(0)] * n
    for pos, i in enumerate(perm):
        out[i] = x[pos]
    return tuple(out)


@lru_cache(maxsize=65536)
def _weighting_values(C: FiniteCategory) -> Optional[tuple]:
    return _solve_weighting(C)


def weighting(C: FiniteCategory) -> Optional[Weighting]:
    """An exact solution of ``zeta @ w = 1``, or None when none exists."""
    values = _weighting_values(C)
    return None if values is None else Weighting(C, values, "weighting")


def coweighting(C: FiniteCategory) -> Optional[Weighting]:
    values = _weighting_values(opposite(C))
    return None if values is None else Weighting(C, values, "coweighting")


@lru_cache(maxsize=65536)
def euler_characteristic(C: FiniteCategory) -> Optional[Fraction]:
    """Sum of a weighting, provided a weighting and a coweighting both exist.

    Returns None when either is missing. The empty category has
    characteristic 0.
    """
    w = _weighting_values(C)
    if w is None:
        return None
    v = _weighting_values(opposite(C))
    if v is None:
        return None
    chi = sum(w, Fraction(0))
    if chi != sum(v, Fraction(0)):
        raise AssertionError("weighting and coweighting sums disagree")
    return chi


def has_euler_characteristic(C: FiniteCategory) -> bool:
    return euler_characteristic(C) is not None


def nerve_counts(C: FiniteCategory) -> list:
    """``N[k]``: number of k-simplices of the nerve of an acyclic category.

    A k-simplex is a string ``x0 -> ... -> xk`` of composable non-identity
    morphisms, so it is counted with multiplicity ``prod zeta(x_i, x_{i+1})``
    over object sequences that strictly advance in the order.
    """
    if not is_acyclic(C):
        raise NotAcyclic("nerve counting needs an acyclic category")
    n = len(C)
    if n == 0:
        return []
    Q = C.quotient
    # classes are singletons: class index k holds exactly one object
    order = [C.index(Q.classes[k][0]) for k in Q.linear_extension]
    ending = {i: 1 for i in order}  # strings of length 0 ending at i
    counts = [n]
    while True:
        nxt = {}
        for pos, j in enumerate(order):
            total = 0
            for i in order[:pos]:
                if C.hom[i][j] and ending.get(i):
                    total += ending[i] * C.hom[i][j]
            if total:
                nxt[j] = total
        if not nxt:
            return counts
        counts.append(sum(nxt.values()))
        ending = nxt


def nerve_euler_characteristic(C: FiniteCategory) -> Fraction:
    """Alternating simplex count of the nerve; defined for acyclic categories."""
    return Fraction(sum((-1) ** k * c for k, c in enumerate(nerve_counts(C))))


def _upsets(C: FiniteCategory, cap: int) -> list:
    """All up-closed sets of classes of Po(C), as frozensets of class indices."""
    Q = C.quotient
    top_down = list(reversed(Q.linear_extension))
    out = []

    def extend(pos, chosen):
        if pos == len(top_down):
            out.append(frozenset(chosen))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} filters")
            return
        c = top_down[pos]
        extend(pos + 1, chosen)
        # every class above c is already decided
        if Q.up[c] - {c} <= chosen:
            chosen.add(c)
            extend(pos + 1, chosen)
            chosen.discard(c)

    extend(0, set())
    return out


def enumerate_filters(C: FiniteCategory, cap: int = DEFAULT_FILTER_CAP) -> list:
    """Every filter of C, ordered by size and then by member positions."""
    Q = C.quotient
    sets = []
    for up in _upsets(C, cap):
        idx = sorted(C.index(x) for k in up for x in Q.classes[k])
        sets.append(idx)
    sets.sort(key=lambda s: (len(s), s))
    return [tuple(C.objects[i] for i in s) for s in sets]


def enumerate_ideals(C: FiniteCategory, cap: int = DEFAULT_FILTER_CAP) -> list:
    """Every ideal of C (complements of filters), same ordering rule."""
    sets = [C.indices(complement(C, F)) for F in enumerate_filters(C, cap)]
    sets.sort(key=lambda s: (len(s), s))
    return [tuple(C.objects[i] for i in s) for s in sets]


def is_measurable(C: FiniteCategory, cap: int = DEFAULT_FILTER_CAP) -> bool:
    """Whether every filter and every ideal of C has an Euler characteristic."""
    for F in enumerate_filters(C, cap):
        if euler_characteristic(full_subcategory(C, F)) is None:
            return False
        if euler_characteristic(full_subcategory(C, complement(C, F))) is None:
            return False
    return True


def subcategory_chi(C: FiniteCategory, S) -> Optional[Fraction]:
    """Euler characteristic of the full subcategory on ``S`` (None if absent)."""
    return euler_characteristic(full_subcategory(C, S))
