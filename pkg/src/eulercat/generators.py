"""Seeded random instances for property checks and demos.

All generators take a :class:`random.Random` so callers control
reproducibility.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .category import FiniteCategory, new_category, poset_category
from .definable import DefinableFunction
from .euler import is_measurable
from .integration import ObjectMap

__all__ = [
    "random_category",
    "random_acyclic_category",
    "random_poset",
    "adjoin_terminal",
    "random_measurable_category",
    "random_definable",
    "random_monotone_map",
]


def _names(n, prefix="x"):
    return [f"{prefix}{i}" for i in range(n)]


def _close(reach):
    n = len(reach)
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach


def random_category(rng: random.Random, n: int, density=0.35, max_count=2,
                    endo_prob=0.2) -> FiniteCategory:
    """Random preorder thickened with random morphism counts in 1..max_count.

    Cycles in the random relation produce nontrivial reflexibility classes;
    ``endo_prob`` is the chance an identity gets extra endomorphisms.
    """
    reach = [[i == j or rng.random() < density for j in range(n)] for i in range(n)]
    _close(reach)
    hom = []
    for i in range(n):
        row = []
        for j in range(n):
            if not reach[i][j]:
                row.append(0)
            elif i == j:
                row.append(rng.randint(2, max_count) if max_count > 1 and rng.random() < endo_prob else 1)
            else:
                row.append(rng.randint(1, max_count))
        hom.append(row)
    return new_category(_names(n), hom)


def random_acyclic_category(rng: random.Random, n: int, density=0.4, max_count=2) -> FiniteCategory:
    """Random acyclic category with counts 0..max_count off the diagonal.

    Entries are drawn upper-triangular in a random object order, then any
    composable pair without a composite gets a random positive count.
    """
    perm = list(range(n))
    rng.shuffle(perm)
    hom = [[0] * n for _ in range(n)]
    for a in range(n):
        hom[perm[a]][perm[a]] = 1
        for b in range(a + 1, n):
            if rng.random() < density:
                hom[perm[a]][perm[b]] = rng.randint(1, max_count)
    for b in range(n):
        for a in range(b):
            for c in range(b + 1, n):
                i, j, k = perm[a], perm[b], perm[c]
                if hom[i][j] and hom[j][k] and not hom[i][k]:
                    hom[i][k] = rng.randint(1, max_count)
    return new_category(_names(n), hom)


def random_poset(rng: random.Random, n: int, density=0.4, prefix="p") -> FiniteCategory:
    names = _names(n, prefix)
    perm = names[:]
    rng.shuffle(perm)
    rel = [(perm[a], perm[b]) for a in range(n) for b in range(a + 1, n) if rng.random() < density]
    return poset_category(names, rel)


def adjoin_terminal(C: FiniteCategory, name="top") -> FiniteCategory:
    n = len(C)
    hom = [list(row) + [1] for row in C.hom]
    hom.append([0] * n + [1])
    return new_category(list(C.objects) + [name], hom)


def random_measurable_category(rng: random.Random, n: int, tries=200, **kw) -> FiniteCategory:
    """Rejection-sample :func:`random_category` until it is measurable."""
    for _ in range(tries):
        C = random_category(rng, n, **kw)
        if is_measurable(C):
            return C
    raise RuntimeError("no measurable category found")


def random_definable(rng: random.Random, C: FiniteCategory, lo=-5, hi=5, max_den=3) -> DefinableFunction:
    """Random rational values, constant on each reflexibility class."""
    Q = C.quotient
    per_class = [Fraction(rng.randint(lo, hi), rng.randint(1, max_den)) for _ in Q.classes]
    return DefinableFunction(C, tuple(per_class[k] for k in Q.projection))


def random_monotone_map(rng: random.Random, C: FiniteCategory, D: FiniteCategory,
                        tries=100):
    """Random order-preserving map from Po(C) into the preorder of D, or None.

    Classes are assigned bottom-up; each goes to a random object above the
    images of every class below it. Maps built this way are exactly the
    measurable ones: preimages of up-sets stay up-closed.
    """
    Q = C.quotient
    m = len(D)
    for _ in range(tries):
        image = {}
        ok = True
        for k in Q.linear_extension:
            lower = [image[j] for j in Q.down[k] if j != k]
            cands = [d for d in range(m) if all(D.hom[e][d] for e in lower)]
            if not cands:
                ok = False
                break
            image[k] = rng.choice(cands)
        if ok:
            return ObjectMap(C, D, tuple(D.objects[image[k]] for k in Q.projection))
    return None
