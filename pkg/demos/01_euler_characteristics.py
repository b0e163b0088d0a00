"""
Euler characteristics of finite categories
==========================================

A finite category is stored as its matrix of morphism counts. Its Euler
characteristic is the sum of a weighting (a solution of zeta @ w = 1),
provided a coweighting exists too.
"""

from eulercat import new_category, poset_category, point
from eulercat.euler import (
    coweighting,
    euler_characteristic,
    nerve_counts,
    nerve_euler_characteristic,
    weighting,
)


def show(x):
    return {k: str(v) for k, v in x.as_dict().items()}


# %% The one-object category and a monoid with three endomorphisms
print("chi(pt) =", euler_characteristic(point()))
print("chi(3 endomorphisms) =", euler_characteristic(new_category(["a"], [[3]])))

# %% Two parallel arrows a => b: weighting, coweighting, characteristic
D = new_category(["a", "b"], [[1, 2], [0, 1]])
print("weighting  ", show(weighting(D)))
print("coweighting", show(coweighting(D)))
print("chi(D) =", euler_characteristic(D))

# %% Acyclic categories: the alternating simplex count of the nerve agrees
print("nerve simplices of D:", nerve_counts(D), "->", nerve_euler_characteristic(D))

# A poset whose order complex is a circle: two minima, two maxima, all comparable across.
crown = poset_category(["x", "y", "u", "v"], [("x", "u"), ("x", "v"), ("y", "u"), ("y", "v")])
print("crown:", euler_characteristic(crown), "nerve:", nerve_counts(crown))

# %% A groupoid with two isomorphic objects behaves like a point
G = new_category(["a", "b"], [[1, 1], [1, 1]])
print("chi(groupoid) =", euler_characteristic(G))

# %% Not every category has an Euler characteristic
E = new_category(["a", "b", "c"], [[2, 1, 1], [2, 1, 1], [0, 0, 1]])
print("weighting exists:", weighting(E) is not None,
      "| coweighting exists:", coweighting(E) is not None,
      "| chi:", euler_characteristic(E))
