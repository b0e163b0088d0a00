"""
Definable functions, Euler integration and pushforwards
=======================================================

Functions constant on reflexibility classes are integrated against the
Euler characteristic by expanding them over prime filters.
"""

from fractions import Fraction

from eulercat import (
    constant,
    decompose_filters,
    decompose_ideals,
    definable_function,
    new_category,
    poset_category,
    recompose,
)
from eulercat.generators import adjoin_terminal
from eulercat.integration import (
    compose_maps,
    fubini_check,
    identity_map,
    integrate,
    object_map,
    projection_map,
    pushforward,
)


def show(x):
    return {k: str(v) for k, v in x.as_dict().items()}


def show_pair(pair):
    return tuple(str(v) for v in pair)


D = new_category(["a", "b"], [[1, 2], [0, 1]])

# %% Coordinates in the two prime bases
f = definable_function(D, {"a": 1, "b": 0})
print("prime filters:", show(decompose_filters(f)))
print("prime ideals: ", show(decompose_ideals(f)))
print("round trip ok:", recompose(decompose_filters(f)) == f)

# %% Integration on filters and on ideals
print("integral of delta_D:", integrate(constant(D)))
print("integral of (1, 0): ", integrate(f))
print("same on ideals:     ", integrate(f, "ideals"))

# %% A terminal object evaluates the integral
T = adjoin_terminal(D, "t")
g = definable_function(T, [Fraction(1, 2), 4, -3])
print("with a terminal object:", integrate(g), "= g(t) =", g("t"))

# %% Pushforward along the identity of D is not idempotent
once = pushforward(identity_map(D), constant(D))
twice = pushforward(identity_map(D), once)
print("(1_D)_* delta_D       =", show(once))
print("(1_D)_* (1_D)_* delta =", show(twice))
print("(1_D o 1_D)_* delta   =", show(pushforward(compose_maps(identity_map(D), identity_map(D)), constant(D))))

# %% Fubini: integrating over a groupoid-with-tail equals integrating the pushforward
C = new_category(["a", "b", "c"], [[1, 1, 1], [1, 1, 1], [0, 0, 1]])
h = definable_function(C, {"a": 2, "b": 2, "c": -5})
print("Fubini along the projection:", show_pair(fubini_check(projection_map(C), h)))
P = poset_category(["lo", "hi"], [("lo", "hi")])
F = object_map(C, P, {"a": "lo", "b": "lo", "c": "hi"})
print("Fubini along C -> {lo < hi}:", show_pair(fubini_check(F, h)))
