"""Feasibility of k-FGC instances and solutions via capacitated global min-cut.

An edge set F is feasible when every vertex cut is crossed by a safe edge of F
or by at least k+1 unsafe edges of F. Giving safe edges capacity k+1 and
unsafe edges capacity 1 turns this into a single threshold on the global
minimum cut.
"""

from __future__ import annotations

import heapq
from typing import Iterable

from .errors import InputError
from .graph_core import FgcInstance


def global_min_cut(n: int, weighted_edges: Iterable[tuple[int, int, int]]) -> tuple[int, frozenset[int]]:
    """Stoer-Wagner minimum cut.

    Returns ``(value, S)`` where ``S`` is one side of a minimum cut. A
    disconnected graph yields value 0 with ``S`` a union of components.
    """
    if n < 2:
        raise InputError("global_min_cut needs at least two vertices")
    adj: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, v, cap in weighted_edges:
        if cap < 0:
            raise InputError("capacities must be nonnegative")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) out of range")
        if u == v or cap == 0:
            continue
        adj[u][v] = adj[u].get(v, 0) + cap
        adj[v][u] = adj[v].get(u, 0) + cap

    groups = {v: [v] for v in range(n)}
    active = set(range(n))
    best_value = None
    best_side: list[int] = []

    while len(active) > 1:
        start = min(active)
        weight = {v: 0 for v in active}
        in_a = {start}
        heap = []
        for w, c in adj[start].items():
            weight[w] += c
            heapq.heappush(heap, (-weight[w], w))
        order = [start]
        # vertices never touched by the heap still need to be added (disconnected case)
        untouched = sorted(active - {start}, reverse=True)
        while len(order) < len(active):
            nxt = None
            while heap:
                negw, v = heapq.heappop(heap)
                if v not in in_a and -negw == weight[v]:
                    nxt = v
                    break
            if nxt is None:
                while untouched and untouched[-1] in in_a:
                    untouched.pop()
                nxt = untouched.pop()
            in_a.add(nxt)
            order.append(nxt)
            for w, c in adj[nxt].items():
                if w not in in_a:
                    weight[w] += c
                    heapq.heappush(heap, (-weight[w], w))
        s, t = order[-2], order[-1]
        cut_of_phase = weight[t]
        if best_value is None or cut_of_phase < best_value:
            best_value = cut_of_phase
            best_side = list(groups[t])
        # merge t into s
        for w, c in adj[t].items():
            if w == s:
                continue
            adj[s][w] = adj[s].get(w, 0) + c
            adj[w][s] = adj[w].get(s, 0) + c
            del adj[w][t]
        adj[s].pop(t, None)
        adj[t] = {}
        groups[s].extend(groups.pop(t))
        active.remove(t)
    return best_value, frozenset(best_side)


def cut_capacities(instance: FgcInstance, edge_ids: Iterable[int]) -> list[tuple[int, int, int]]:
    k = instance.k
    out = []
    for i in sorted(edge_ids):
        e = instance.edges[i]
        out.append((e.u, e.v, k + 1 if e.safe else 1))
    return out


def violated_cut(instance: FgcInstance, F: Iterable[int]) -> frozenset[int] | None:
    """Return a vertex set whose cut F fails to cover, or ``None`` if F is feasible."""
    ids = instance.check_edge_ids(F)
    if instance.n == 1:
        return None
    value, side = global_min_cut(instance.n, cut_capacities(instance, ids))
    if value >= instance.k + 1:
        return None
    return side


def is_feasible_solution(instance: FgcInstance, F: Iterable[int]) -> bool:
    return violated_cut(instance, F) is None


def is_feasible_instance(instance: FgcInstance) -> bool:
    return is_feasible_solution(instance, range(instance.m))
