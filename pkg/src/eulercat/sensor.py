"""Target enumeration on one-way sensor networks.

A network is a finite poset drawn as its Hasse diagram. Targets sit on
nodes or on Hasse edges; every node's sensor reports how many targets lie
at or below it. The Euler integral of that counting function over the
poset is exactly the number of targets.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .category import FiniteCategory, full_subcategory, poset_category
from .definable import definable_function
from .errors import (
    CycleDetected,
    DuplicateObject,
    InvalidPlacement,
    NotCoverEdge,
    NotMonotone,
    NotMonotoneWarning,
    UnknownNode,
)
from .euler import euler_characteristic
from .integration import integrate
from .rational import to_fraction

NODE = "node"
EDGE = "edge"

__all__ = [
    "SensorNetwork",
    "TargetPlacement",
    "CountingFunction",
    "network_violations",
    "transitive_reduction",
    "new_network",
    "node_target",
    "edge_target",
    "counting_function",
    "count_targets",
    "count_by_level_sets",
    "simulate",
]


def _reachability(nodes: Sequence, edges: Iterable) -> list:
    pos = {x: i for i, x in enumerate(nodes)}
    n = len(nodes)
    succ = [set() for _ in range(n)]
    for p, q in edges:
        succ[pos[p]].add(pos[q])
    reach = []
    for s in range(n):
        seen = set()
        stack = list(succ[s])
        while stack:
            v = stack.pop()
            if v not in seen:
                seen.add(v)
                stack.extend(succ[v])
        reach.append(seen)
    return reach


def _find_cycle(nodes: Sequence, edges: Sequence):
    pos = {x: i for i, x in enumerate(nodes)}
    indeg = [0] * len(nodes)
    succ = [[] for _ in nodes]
    for p, q in edges:
        succ[pos[p]].append(pos[q])
        indeg[pos[q]] += 1
    queue = [i for i, d in enumerate(indeg) if d == 0]
    done = 0
    while queue:
        v = queue.pop()
        done += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if done == len(nodes):
        return None
    return [nodes[i] for i, d in enumerate(indeg) if d > 0]


def transitive_reduction(nodes: Sequence, edges: Iterable) -> list:
    """Edges of an acyclic relation that are not implied by longer paths."""
    edges = list(dict.fromkeys((p, q) for p, q in edges))
    pos = {x: i for i, x in enumerate(nodes)}
    reach = _reachability(nodes, edges)
    out = []
    for p, q in edges:
        i, j = pos[p], pos[q]
        if not any(j in reach[r] for r in reach[i] if r != j):
            out.append((p, q))
    return out


def network_violations(nodes: Sequence, edges: Sequence) -> list:
    """Every violated network invariant, as ``(error_class, message)`` pairs."""
    out = []
    seen = set()
    for x in nodes:
        if x in seen:
            out.append((DuplicateObject, f"DuplicateObject {x}"))
        seen.add(x)
    bad = False
    for p, q in edges:
        for x in (p, q):
            if x not in seen:
                out.append((UnknownNode, f"UnknownNode {x}"))
                bad = True
    if bad:
        return out
    for p, q in edges:
        if p == q:
            out.append((CycleDetected, f"CycleDetected: loop at {p}"))
    cyc = _find_cycle(list(nodes), [(p, q) for p, q in edges if p != q])
    if cyc is not None:
        out.append((CycleDetected, f"CycleDetected among {', '.join(map(str, cyc))}"))
    if out:
        return out
    reduction = transitive_reduction(nodes, edges)
    keep = set(reduction)
    counted = set()
    for p, q in edges:
        if (p, q) in counted:
            out.append((NotCoverEdge, f"NotCoverEdge ({p},{q}); duplicate edge"))
            continue
        counted.add((p, q))
        if (p, q) not in keep:
            out.append((NotCoverEdge, f"NotCoverEdge ({p},{q}); transitive reduction suggested"))
    return out


@dataclass(frozen=True)
class SensorNetwork:
    """Nodes, their cover edges, and the poset they generate."""

    nodes: tuple
    hasse_edges: tuple
    poset: FiniteCategory

    def leq(self, p, q) -> bool:
        return self.poset.zeta(p, q) > 0


def new_network(nodes: Sequence, hasse_edges: Iterable) -> SensorNetwork:
    """Validate a Hasse diagram; transitive edges are rejected, not repaired."""
    nodes = tuple(nodes)
    edges = tuple((p, q) for p, q in hasse_edges)
    problems = network_violations(nodes, edges)
    if problems:
        cls, msg = problems[0]
        if cls is NotCoverEdge:
            raise NotCoverEdge(msg, transitive_reduction(nodes, edges))
        raise cls(msg)
    return SensorNetwork(nodes, edges, poset_category(nodes, edges))


@dataclass(frozen=True)
class TargetPlacement:
    """A target on a node (``at`` is the node) or on an edge (``at`` is ``(p, q)``)."""

    kind: str
    at: object

    @property
    def top(self):
        """The node a target must be below: the node itself, or the edge's upper end."""
        return self.at if self.kind == NODE else self.at[1]


def node_target(p) -> TargetPlacement:
    return TargetPlacement(NODE, p)


def edge_target(p, q) -> TargetPlacement:
    return TargetPlacement(EDGE, (p, q))


def _check_placement(net: SensorNetwork, t: TargetPlacement):
    if t.kind == NODE:
        if t.at not in net.poset:
            raise InvalidPlacement(f"InvalidPlacement: unknown node {t.at!r}")
    elif t.kind == EDGE:
        if tuple(t.at) not in net.hasse_edges:
            raise InvalidPlacement(f"InvalidPlacement: ({t.at[0]},{t.at[1]}) is not a Hasse edge")
    else:
        raise InvalidPlacement(f"InvalidPlacement: unknown kind {t.kind!r}")


@dataclass(frozen=True)
class CountingFunction:
    """Per-node target counts, aligned with ``network.nodes``."""

    network: SensorNetwork
    values: tuple

    def __getitem__(self, p) -> int:
        return self.values[self.network.poset.index(p)]

    def as_dict(self) -> dict:
        return dict(zip(self.network.nodes, self.values))

    def is_monotone(self) -> bool:
        return _is_monotone(self.network, self.values)


def _is_monotone(net: SensorNetwork, values: Sequence) -> bool:
    hom = net.poset.hom
    n = len(values)
    return all(values[i] <= values[j] for i in range(n) for j in range(n) if hom[i][j])


def counting_function(net: SensorNetwork, targets: Iterable[TargetPlacement]) -> CountingFunction:
    """``h(r)``: number of targets whose node (or edge top) is at or below ``r``."""
    P = net.poset
    counts = [0] * len(P)
    for t in targets:
        _check_placement(net, t)
        row = P.hom[P.index(t.top)]
        for r, v in enumerate(row):
            if v:
                counts[r] += 1
    return CountingFunction(net, tuple(counts))


def _values(net: SensorNetwork, h) -> tuple:
    if isinstance(h, CountingFunction):
        return tuple(Fraction(v) for v in h.values)
    if isinstance(h, Mapping):
        return definable_function(net.poset, h).values
    return tuple(to_fraction(v) for v in h)


def count_targets(net: SensorNetwork, h) -> Fraction:
    """Euler integral of a counting function over the network poset.

    Non-monotone input is still integrated but raises a
    :class:`NotMonotoneWarning`: it cannot come from a real placement, so the
    result carries no counting guarantee.
    """
    vals = _values(net, h)
    if not _is_monotone(net, vals):
        warnings.warn("counting function is not monotone", NotMonotoneWarning, stacklevel=2)
    return integrate(definable_function(net.poset, vals))


def count_by_level_sets(net: SensorNetwork, h) -> tuple:
    """Euler characteristics of the level filters ``{h >= i}``, i = 1..max h, and their sum."""
    vals = _values(net, h)
    if not _is_monotone(net, vals):
        raise NotMonotone("NotMonotone: level sets of h are not filters")
    if any(v.denominator != 1 or v < 0 for v in vals):
        raise ValueError("level-set counting needs non-negative integer values")
    top = int(max(vals, default=0))
    levels = []
    for i in range(1, top + 1):
        S = [p for p, v in zip(net.nodes, vals) if v >= i]
        levels.append(euler_characteristic(full_subcategory(net.poset, S)))
    return levels, sum(levels, Fraction(0))


def simulate(n_nodes: int, n_targets: int, edge_density=Fraction(1, 3), seed: int = 0):
    """Random layered network with random targets; deterministic in ``seed``.

    Nodes get random layers, each pair on distinct layers is joined upward
    with probability ``edge_density`` (clamped to [0, 1]), and the result
    is reduced to its cover edges. Targets are drawn uniformly, with
    replacement, from nodes and edges.

    Returns ``(network, placements, counting_function)``.
    """
    if n_nodes < 1:
        raise ValueError("need at least one node")
    rng = random.Random(seed)
    density = min(max(to_fraction(edge_density), Fraction(0)), Fraction(1))
    nodes = [f"n{i}" for i in range(n_nodes)]
    n_layers = rng.randint(1, n_nodes)
    layer = sorted(rng.randrange(n_layers) for _ in nodes)
    raw = [
        (nodes[i], nodes[j])
        for i in range(n_nodes)
        for j in range(i + 1, n_nodes)
        if layer[i] < layer[j] and rng.randrange(density.denominator) < density.numerator
    ]
    net = new_network(nodes, transitive_reduction(nodes, raw))
    spots = [node_target(p) for p in net.nodes] + [edge_target(p, q) for p, q in net.hasse_edges]
    targets = [rng.choice(spots) for _ in range(n_targets)]
    return net, targets, counting_function(net, targets)
