"""Finite categories stored as morphism counts, and their order theory.

A :class:`FiniteCategory` keeps only the similarity matrix: entry ``(a, b)``
is the number of morphisms ``a -> b``. Everything else in the package
(reflexibility, filters and ideals, Euler characteristics, integration) is
a function of those counts.

Object sets (full subcategories) are plain tuples of object identifiers,
always reported in the category's input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateObject,
    MissingIdentity,
    NotComposable,
    ShapeMismatch,
    UnknownObject,
)

ObjectSet = tuple  # tuple[str, ...] in ambient input order

__all__ = [
    "FiniteCategory",
    "ObjectSet",
    "QuotientPoset",
    "category_violations",
    "new_category",
    "point",
    "poset_category",
    "opposite",
    "reflexible",
    "quotient_poset",
    "quotient_category",
    "prime_filter",
    "prime_ideal",
    "is_filter",
    "is_ideal",
    "is_class_closed",
    "complement",
    "full_subcategory",
    "maximal_objects",
    "minimal_objects",
    "is_acyclic",
    "is_poset",
    "initial_objects",
    "terminal_objects",
]


def category_violations(objects: Sequence, hom: Sequence[Sequence[int]]):
    """All invariant violations of a would-be category.

    Returns a list of ``(error_class, message)`` pairs; empty means valid.
    Shape problems short-circuit the remaining checks.
    """
    out = []
    objects = list(objects)
    n = len(objects)
    seen = set()
    for x in objects:
        if x in seen:
            out.append((DuplicateObject, f"DuplicateObject {x}"))
        seen.add(x)
    if len(hom) != n or any(len(row) != n for row in hom):
        out.append((ShapeMismatch, f"ShapeMismatch: expected a {n}x{n} matrix"))
        return out
    for i, row in enumerate(hom):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                out.append(
                    (ShapeMismatch, f"ShapeMismatch: entry ({objects[i]},{objects[j]}) "
                                    f"is not a non-negative integer")
                )
    if out:
        return out
    for i in range(n):
        if hom[i][i] < 1:
            out.append((MissingIdentity, f"MissingIdentity at object {objects[i]}"))
    for i in range(n):
        for j in range(n):
            if i == j or not hom[i][j]:
                continue
            for k in range(n):
                if hom[j][k] and not hom[i][k]:
                    out.append(
                        (NotComposable,
                         f"NotComposable: {objects[i]}->{objects[j]}->{objects[k]} "
                         f"has no composite {objects[i]}->{objects[k]}")
                    )
    return out


@dataclass(frozen=True)
class FiniteCategory:
    """Objects plus the matrix of hom-set cardinalities.

    Construction validates identities, composability closure, shape and
    distinct identifiers. Instances are immutable and hashable.
    """

    objects: tuple
    hom: tuple

    def __post_init__(self):
        objects = tuple(self.objects)
        hom = tuple(tuple(row) for row in self.hom)
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "hom", hom)
        problems = category_violations(objects, hom)
        if problems:
            cls, msg = problems[0]
            raise cls(msg)

    def __len__(self):
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)

    def __contains__(self, x):
        return x in self._index

    @cached_property
    def _index(self) -> dict:
        return {x: i for i, x in enumerate(self.objects)}

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownObject(f"UnknownObject {x!r}") from None

    def zeta(self, x, y) -> int:
        """Number of morphisms ``x -> y``."""
        return self.hom[self.index(x)][self.index(y)]

    def members(self, subset: Iterable) -> ObjectSet:
        """Validate a subset of objects and return it in input order."""
        idx = {self.index(x) for x in subset}
        return tuple(self.objects[i] for i in sorted(idx))

    def indices(self, subset: Iterable) -> list:
        return sorted({self.index(x) for x in subset})

    @cached_property
    def quotient(self) -> "QuotientPoset":
        return _build_quotient(self)


def new_category(objects: Sequence, hom: Sequence[Sequence[int]]) -> FiniteCategory:
    return FiniteCategory(tuple(objects), tuple(tuple(row) for row in hom))


def point(name="pt") -> FiniteCategory:
    """The terminal category: one object, one identity."""
    return FiniteCategory((name,), ((1,),))


def poset_category(elements: Sequence, relations: Iterable[tuple]) -> FiniteCategory:
    """Category of a poset given by generating pairs ``(p, q)`` with p <= q.

    The reflexive-transitive closure of ``relations`` is taken.
    """
    elements = list(elements)
    pos = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    reach = [[i == j for j in range(n)] for i in range(n)]
    for p, q in relations:
        if p not in pos:
            raise UnknownObject(f"UnknownObject {p!r}")
        if q not in pos:
            raise UnknownObject(f"UnknownObject {q!r}")
        reach[pos[p]][pos[q]] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return new_category(elements, [[int(v) for v in row] for row in reach])


def opposite(C: FiniteCategory) -> FiniteCategory:
    n = len(C)
    return FiniteCategory(C.objects, tuple(tuple(C.hom[j][i] for j in range(n)) for i in range(n)))


def reflexible(C: FiniteCategory, x, y) -> bool:
    i, j = C.index(x), C.index(y)
    return C.hom[i][j] > 0 and C.hom[j][i] > 0


@dataclass(frozen=True)
class QuotientPoset:
    """Reflexibility classes of a category with their induced partial order.

    ``classes[k]`` lists the members of class ``k`` in input order; classes
    are numbered by their earliest member. ``order`` holds the strict pairs
    ``(i, j)`` with ``[i] < [j]``. ``projection[a]`` is the class index of the
    a-th object.
    """

    classes: tuple
    order: frozenset
    projection: tuple

    def __len__(self):
        return len(self.classes)

    @property
    def representatives(self) -> tuple:
        return tuple(c[0] for c in self.classes)

    def leq(self, i: int, j: int) -> bool:
        return i == j or (i, j) in self.order

    @cached_property
    def up(self) -> tuple:
        """``up[i]``: class indices j with [i] <= [j]."""
        k = len(self.classes)
        return tuple(frozenset(j for j in range(k) if self.leq(i, j)) for i in range(k))

    @cached_property
    def down(self) -> tuple:
        k = len(self.classes)
        return tuple(frozenset(j for j in range(k) if self.leq(j, i)) for i in range(k))

    @cached_property
    def depth(self) -> tuple:
        """Length of the longest strict chain ending at each class."""
        k = len(self.classes)
        depth = [None] * k

        def visit(i):
            if depth[i] is None:
                below = [j for j in self.down[i] if j != i]
                depth[i] = 1 + max((visit(j) for j in below), default=-1)
            return depth[i]

        for i in range(k):
            visit(i)
        return tuple(depth)

    @cached_property
    def linear_extension(self) -> tuple:
        """Class indices sorted by (depth, index): minimal classes first."""
        return tuple(sorted(range(len(self.classes)), key=lambda i: (self.depth[i], i)))

    def maximal(self) -> list:
        return [i for i in range(len(self.classes)) if self.up[i] == {i}]

    def minimal(self) -> list:
        return [i for i in range(len(self.classes)) if self.down[i] == {i}]


def _build_quotient(C: FiniteCategory) -> QuotientPoset:
    n = len(C)
    hom = C.hom
    projection = [None] * n
    classes = []
    for i in range(n):
        if projection[i] is not None:
            continue
        k = len(classes)
        members = [j for j in range(i, n) if hom[i][j] and hom[j][i]]
        for j in members:
            projection[j] = k
        classes.append(tuple(C.objects[j] for j in members))
    reps = [C.index(c[0]) for c in classes]
    order = frozenset(
        (a, b)
        for a, ra in enumerate(reps)
        for b, rb in enumerate(reps)
        if a != b and hom[ra][rb]
    )
    return QuotientPoset(tuple(classes), order, tuple(projection))


def quotient_poset(C: FiniteCategory) -> QuotientPoset:
    return C.quotient


def quotient_category(C: FiniteCategory) -> FiniteCategory:
    """Po(C) as a poset category whose objects are the class representatives."""
    Q = C.quotient
    k = len(Q)
    hom = [[int(Q.leq(i, j)) for j in range(k)] for i in range(k)]
    return new_category(Q.representatives, hom)


def prime_filter(C: FiniteCategory, x) -> ObjectSet:
    """Objects reachable from ``x`` by at least one morphism."""
    row = C.hom[C.index(x)]
    return tuple(y for y, v in zip(C.objects, row) if v)


def prime_ideal(C: FiniteCategory, x) -> ObjectSet:
    """Objects with at least one morphism into ``x``."""
    i = C.index(x)
    return tuple(y for y, row in zip(C.objects, C.hom) if row[i])


def is_filter(C: FiniteCategory, S: Iterable) -> bool:
    idx = set(C.indices(S))
    return all(not C.hom[i][j] or j in idx for i in idx for j in range(len(C)))


def is_ideal(C: FiniteCategory, S: Iterable) -> bool:
    idx = set(C.indices(S))
    return all(not C.hom[j][i] or j in idx for i in idx for j in range(len(C)))


def is_class_closed(C: FiniteCategory, S: Iterable) -> bool:
    """True when ``S`` is a union of reflexibility classes."""
    idx = set(C.indices(S))
    proj = C.quotient.projection
    classes_hit = {proj[i] for i in idx}
    return all(C.index(x) in idx for k in classes_hit for x in C.quotient.classes[k])


def complement(C: FiniteCategory, S: Iterable) -> ObjectSet:
    idx = set(C.indices(S))
    return tuple(x for i, x in enumerate(C.objects) if i not in idx)


def full_subcategory(C: FiniteCategory, S: Iterable) -> FiniteCategory:
    idx = C.indices(S)
    return FiniteCategory(
        tuple(C.objects[i] for i in idx),
        tuple(tuple(C.hom[i][j] for j in idx) for i in idx),
    )


def maximal_objects(C: FiniteCategory) -> ObjectSet:
    n = len(C)
    hom = C.hom
    return tuple(
        C.objects[x]
        for x in range(n)
        if all((not hom[x][y] and not hom[y][x]) or hom[y][x] for y in range(n))
    )


def minimal_objects(C: FiniteCategory) -> ObjectSet:
    n = len(C)
    hom = C.hom
    return tuple(
        C.objects[x]
        for x in range(n)
        if all((not hom[x][y] and not hom[y][x]) or hom[x][y] for y in range(n))
    )


def terminal_objects(C: FiniteCategory) -> ObjectSet:
    """Objects receiving exactly one morphism from every object."""
    return tuple(C.objects[t] for t in range(len(C)) if all(row[t] == 1 for row in C.hom))


def initial_objects(C: FiniteCategory) -> ObjectSet:
    return tuple(C.objects[i] for i, row in enumerate(C.hom) if all(v == 1 for v in row))


def is_acyclic(C: FiniteCategory) -> bool:
    """No nontrivial circuits: singleton classes and no extra endomorphisms."""
    return len(C.quotient) == len(C) and all(C.hom[i][i] == 1 for i in range(len(C)))


def is_poset(C: FiniteCategory) -> bool:
    return is_acyclic(C) and all(v <= 1 for row in C.hom for v in row)
