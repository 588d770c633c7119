"""Bidirected digraph construction and the arc-to-edge map back."""

from __future__ import annotations

from .errors import InputError
from .graph_core import Arc, ArcSet, Digraph, FgcInstance


def pair_copies(edge, k: int) -> int:
    """Number of bidirected pairs an edge contributes for robustness ``k``."""
    return k + 1 if edge.safe else 1


def build_digraph(instance: FgcInstance, k: int | None = None) -> Digraph:
    """One bidirected pair per unsafe edge, k+1 pairs per safe edge.

    Arcs are grouped by edge in ID order; within an edge each copy emits
    (u, v) then (v, u).
    """
    if k is None:
        k = instance.k
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    arcs = []
    for e in instance.edges:
        for _ in range(pair_copies(e, k)):
            arcs.append(Arc(len(arcs), e.u, e.v, e.cost, e.id))
            arcs.append(Arc(len(arcs), e.v, e.u, e.cost, e.id))
    return Digraph(instance.n, tuple(arcs))


def map_back(T: ArcSet) -> frozenset[int]:
    """Edges that give rise to at least one arc of ``T``."""
    out = set()
    for a in T.arcs():
        if a.source_edge is None:
            raise InputError(f"arc {a.id} has no source edge")
        out.add(a.source_edge)
    return frozenset(out)


def restrict_to_edges(instance: FgcInstance, F, k: int | None = None) -> Digraph:
    """Digraph built over the sub-instance ``F`` only, keeping original edge IDs
    as ``source_edge``. Used to check the cost bound against a fixed solution."""
    if k is None:
        k = instance.k
    arcs = []
    for i in sorted(F):
        e = instance.edges[i]
        for _ in range(pair_copies(e, k)):
            arcs.append(Arc(len(arcs), e.u, e.v, e.cost, e.id))
            arcs.append(Arc(len(arcs), e.v, e.u, e.cost, e.id))
    return Digraph(instance.n, tuple(arcs))
