"""Undirected and directed multigraph model with cut primitives.

Vertices are dense 0-based integers. Edges and arcs carry their own IDs so
that parallel copies stay distinguishable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InputError

MAX_COST = 2**40


class Safety(enum.Enum):
    SAFE = "S"
    UNSAFE = "U"


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    cost: int
    safety: Safety

    @property
    def safe(self) -> bool:
        return self.safety is Safety.SAFE


@dataclass(frozen=True)
class FgcInstance:
    n: int
    edges: tuple[Edge, ...]
    k: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise InputError("instance needs at least one vertex")
        if self.k < 1:
            raise InputError(f"k must be >= 1, got {self.k}")
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise InputError(f"edge at position {i} has id {e.id}")
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise InputError(f"edge {i} has an endpoint out of range")
            if e.u == e.v:
                raise InputError(f"edge {i} is a self-loop")
            if not isinstance(e.cost, int) or not 0 <= e.cost <= MAX_COST:
                raise InputError(f"edge {i} cost must be an integer in [0, 2^40]")

    @classmethod
    def build(cls, n: int, edges: Iterable[tuple], k: int = 1) -> "FgcInstance":
        """Build from ``(u, v, cost, safe)`` tuples; ``safe`` may be a bool,
        a :class:`Safety`, or the letters ``"S"``/``"U"``."""
        out = []
        for i, (u, v, cost, safe) in enumerate(edges):
            if isinstance(safe, Safety):
                safety = safe
            elif isinstance(safe, str):
                safety = Safety(safe.upper())
            else:
                safety = Safety.SAFE if safe else Safety.UNSAFE
            out.append(Edge(i, u, v, cost, safety))
        return cls(n, tuple(out), k)

    @property
    def m(self) -> int:
        return len(self.edges)

    def with_k(self, k: int) -> "FgcInstance":
        return FgcInstance(self.n, self.edges, k)

    def cost_of(self, edge_ids: Iterable[int]) -> int:
        return sum(self.edges[i].cost for i in edge_ids)

    def check_edge_ids(self, edge_ids: Iterable[int]) -> frozenset[int]:
        ids = frozenset(edge_ids)
        for i in ids:
            if not isinstance(i, int) or not 0 <= i < self.m:
                raise InputError(f"invalid edge id {i!r}")
        return ids


@dataclass(frozen=True)
class Arc:
    id: int
    tail: int
    head: int
    cost: int
    source_edge: Optional[int] = None


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError("digraph needs at least one vertex")
        for i, a in enumerate(self.arcs):
            if a.id != i:
                raise InputError(f"arc at position {i} has id {a.id}")
            if not (0 <= a.tail < self.n and 0 <= a.head < self.n):
                raise InputError(f"arc {i} has an endpoint out of range")
            if a.tail == a.head:
                raise InputError(f"arc {i} is a self-loop")
            if a.cost < 0:
                raise InputError(f"arc {i} has negative cost")

    @classmethod
    def build(cls, n: int, arcs: Iterable[tuple]) -> "Digraph":
        """Build from ``(tail, head, cost)`` or ``(tail, head, cost, source_edge)``."""
        out = []
        for i, t in enumerate(arcs):
            tail, head, cost = t[:3]
            src = t[3] if len(t) > 3 else None
            out.append(Arc(i, tail, head, cost, src))
        return cls(n, tuple(out))

    def all_arcs(self) -> "ArcSet":
        return ArcSet(self, frozenset(range(len(self.arcs))))


@dataclass(frozen=True)
class ArcSet:
    digraph: Digraph
    members: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        m = len(self.digraph.arcs)
        for i in self.members:
            if not 0 <= i < m:
                raise InputError(f"invalid arc id {i}")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, arc_id):
        return arc_id in self.members

    def arcs(self) -> list[Arc]:
        return [self.digraph.arcs[i] for i in sorted(self.members)]

    @property
    def cost(self) -> int:
        return sum(self.digraph.arcs[i].cost for i in self.members)


def _check_side(n: int, S: Iterable[int]) -> frozenset[int]:
    side = frozenset(S)
    if not side or len(side) >= n:
        raise InputError("cut side must be a nonempty proper vertex subset")
    for v in side:
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range")
    return side


def components(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    """Component label per vertex (labels are the smallest vertex of each component)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    return [find(x) for x in range(n)]


def is_connected(instance: FgcInstance, edge_subset: Iterable[int]) -> bool:
    ids = instance.check_edge_ids(edge_subset)
    labels = components(instance.n, ((instance.edges[i].u, instance.edges[i].v) for i in ids))
    return all(lab == 0 for lab in labels)


def undirected_cut(instance: FgcInstance, edge_subset: Iterable[int], S: Iterable[int]) -> frozenset[int]:
    ids = instance.check_edge_ids(edge_subset)
    side = _check_side(instance.n, S)
    return frozenset(
        i for i in ids if (instance.edges[i].u in side) != (instance.edges[i].v in side)
    )


def directed_in_cut(arcset: ArcSet, S: Iterable[int]) -> frozenset[int]:
    side = _check_side(arcset.digraph.n, S)
    arcs = arcset.digraph.arcs
    return frozenset(i for i in arcset.members if arcs[i].head in side and arcs[i].tail not in side)
