"""Existence, minimum-cost construction, and certification of r-out k-arborescences."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from ..errors import CardinalityUnreachable, InputError, NoKArborescence, NotDecomposable
from ..graph_core import ArcSet, Digraph
from .contraction import min_arborescence_ids
from .flow import FlowNetwork, max_flow
from .matroid import (
    DualCertificate,
    ForestUnionMatroid,
    GraphicMatroid,
    Matroid,
    PartitionMatroid,
    UniformMatroid,
    forest_partition,
    forest_union_independent,
    weighted_matroid_intersection,
)
from .structured import ArcHeadMatroid, CopyForestMatroid

__all__ = [
    "DualCertificate",
    "ForestUnionMatroid",
    "GraphicMatroid",
    "KArborescence",
    "Matroid",
    "PartitionMatroid",
    "UniformMatroid",
    "decompose",
    "exists_k_arborescence",
    "forest_partition",
    "forest_union_independent",
    "max_flow",
    "min_cost_arborescence",
    "min_cost_k_arborescence",
    "violated_invariants",
    "weighted_matroid_intersection",
]


@dataclass(frozen=True)
class KArborescence:
    arcset: ArcSet
    root: int
    k: int
    total_cost: int
    # arc IDs per forest index as chosen by the intersection engine (spanning trees, not arborescences)
    forests: tuple[frozenset[int], ...] = field(default=(), compare=False)

    @property
    def digraph(self) -> Digraph:
        return self.arcset.digraph


def _check_root(D: Digraph, r: int) -> None:
    if not isinstance(r, int) or not 0 <= r < D.n:
        raise InputError(f"root {r!r} is not a vertex")


def meets_cut_condition(n: int, arcs: Iterable[tuple[int, int]], root: int, k: int) -> bool:
    """True iff every vertex other than ``root`` has ``k`` arc-disjoint paths from it."""
    if k <= 0 or n == 1:
        return True
    arcs = list(arcs)
    if k == 1:
        out: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcs:
            out[u].append(v)
        seen = [False] * n
        seen[root] = True
        q = deque([root])
        while q:
            u = q.popleft()
            for v in out[u]:
                if not seen[v]:
                    seen[v] = True
                    q.append(v)
        return all(seen)
    for v in range(n):
        if v == root:
            continue
        net = FlowNetwork(n)
        for a, b in arcs:
            net.add(a, b, 1)
        if net.max_flow(root, v, limit=k) < k:
            return False
    return True


def exists_k_arborescence(D: Digraph, r: int, k: int) -> bool:
    if k < 1:
        raise InputError("k must be >= 1")
    _check_root(D, r)
    return meets_cut_condition(D.n, ((a.tail, a.head) for a in D.arcs), r, k)


def min_cost_arborescence(D: Digraph, r: int) -> KArborescence:
    """Single minimum-cost spanning arborescence by contraction."""
    _check_root(D, r)
    ids = min_arborescence_ids(D.n, r, [(a.tail, a.head, a.cost, a.id) for a in D.arcs])
    if ids is None:
        raise NoKArborescence(f"some vertex is unreachable from root {r}")
    arcset = ArcSet(D, frozenset(ids))
    return KArborescence(arcset, r, 1, arcset.cost)


def min_cost_k_arborescence(D: Digraph, r: int, k: int) -> tuple[KArborescence, DualCertificate]:
    """Minimum-cost r-out k-arborescence via weighted matroid intersection.

    Ground elements are pairs (arc, forest index). One matroid asks every
    forest index to carry a forest; the other allows each arc once and k arcs
    into every non-root vertex. A common independent set with k(n-1) elements
    is exactly a k-arborescence.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    _check_root(D, r)
    if D.n == 1:
        return KArborescence(ArcSet(D, frozenset()), r, k, 0), DualCertificate((), ())
    if not exists_k_arborescence(D, r, k):
        raise NoKArborescence(f"no {k}-arborescence rooted at {r}")

    usable = [a for a in D.arcs if a.head != r]
    ends, copy, arc_of, head_of, weights = [], [], [], [], []
    for a in usable:
        for j in range(k):
            ends.append((a.tail, a.head))
            copy.append(j)
            arc_of.append(a.id)
            head_of.append(a.head)
            weights.append(a.cost)
    cap = [k] * D.n
    cap[r] = 0
    forests = CopyForestMatroid(D.n, ends, copy, k)
    indegree = ArcHeadMatroid(arc_of, head_of, cap)
    try:
        chosen, cert = weighted_matroid_intersection(forests, indegree, weights, k * (D.n - 1))
    except CardinalityUnreachable as exc:
        raise NoKArborescence(str(exc)) from exc
    arcset = ArcSet(D, frozenset(arc_of[e] for e in chosen))
    trees = tuple(frozenset(arc_of[e] for e in chosen if copy[e] == j) for j in range(k))
    return KArborescence(arcset, r, k, arcset.cost, trees), cert


def decompose(T: KArborescence) -> list[frozenset[int]]:
    """Split ``T`` into ``k`` arc-disjoint spanning r-out arborescences.

    Grows one arborescence at a time from the root, taking the lowest-ID arc
    leaving the reached set whose removal keeps the rest (k-1)-connected from
    the root.
    """
    D, r, k, n = T.digraph, T.root, T.k, T.digraph.n
    problems = _degree_problems(T)
    if problems:
        raise NotDecomposable("; ".join(problems))
    remaining = set(T.arcset.members)
    arcs = D.arcs
    parts: list[frozenset[int]] = []
    for level in range(k, 1, -1):
        reached = {r}
        part = []
        while len(reached) < n:
            for a in sorted(remaining):
                if arcs[a].tail not in reached or arcs[a].head in reached:
                    continue
                rest = ((arcs[b].tail, arcs[b].head) for b in remaining if b != a)
                if meets_cut_condition(n, rest, r, level - 1):
                    remaining.discard(a)
                    part.append(a)
                    reached.add(arcs[a].head)
                    break
            else:
                raise NotDecomposable(f"stuck after reaching {len(reached)} of {n} vertices")
        parts.append(frozenset(part))
    if not meets_cut_condition(n, ((arcs[b].tail, arcs[b].head) for b in remaining), r, 1):
        raise NotDecomposable("last part does not reach every vertex")
    parts.append(frozenset(remaining))
    return parts


def _degree_problems(T: KArborescence) -> list[str]:
    D, r, k, n = T.digraph, T.root, T.k, T.digraph.n
    indeg = [0] * n
    for a in T.arcset.arcs():
        indeg[a.head] += 1
    out = []
    if indeg[r] != 0:
        out.append(f"root has in-degree {indeg[r]}")
    bad = [v for v in range(n) if v != r and indeg[v] != k]
    if bad:
        out.append(f"vertices {bad[:5]} do not have in-degree {k}")
    if len(T.arcset) != k * (n - 1):
        out.append(f"{len(T.arcset)} arcs instead of {k * (n - 1)}")
    return out


def violated_invariants(T: KArborescence) -> list[str]:
    """Re-check every structural property of a k-arborescence from scratch.

    Returns human-readable descriptions of the failures; empty means valid.
    """
    D, r, k, n = T.digraph, T.root, T.k, T.digraph.n
    problems = _degree_problems(T)
    if T.total_cost != T.arcset.cost:
        problems.append("recorded cost differs from arc sum")
    for v in range(n):
        if v == r:
            continue
        value, _ = max_flow(D, r, v, arc_ids=T.arcset.members)
        if value < k:
            problems.append(f"only {value} arc-disjoint paths from root to {v}")
            break
    pairs: dict[frozenset, int] = {}
    for a in T.arcset.arcs():
        key = frozenset((a.tail, a.head))
        pairs[key] = pairs.get(key, 0) + 1
    crowded = [tuple(sorted(p)) for p, c in pairs.items() if c > k]
    if crowded:
        problems.append(f"more than {k} arcs between {crowded[:3]}")
    if not problems:
        try:
            parts = decompose(T)
        except NotDecomposable as exc:
            problems.append(f"decomposition failed: {exc}")
        else:
            for part in parts:
                if not _is_spanning_arborescence(D, part, r):
                    problems.append("a decomposed part is not a spanning arborescence")
                    break
    return problems


def _is_spanning_arborescence(D: Digraph, arc_ids, r: int) -> bool:
    if len(arc_ids) != D.n - 1:
        return False
    indeg = [0] * D.n
    for i in arc_ids:
        indeg[D.arcs[i].head] += 1
    if indeg[r] != 0 or any(indeg[v] != 1 for v in range(D.n) if v != r):
        return False
    return meets_cut_condition(D.n, ((D.arcs[i].tail, D.arcs[i].head) for i in arc_ids), r, 1)
