"""Dinic max-flow on arc lists, used for cut-condition checks."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

from ..errors import InputError
from ..graph_core import Digraph


class FlowNetwork:
    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add(self, u: int, v: int, cap: int) -> int:
        idx = len(self.head)
        self.head += [v, u]
        self.cap += [cap, 0]
        self.adj[u].append(idx)
        self.adj[v].append(idx + 1)
        return idx

    def _levels(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.adj[u]:
                v = self.head[e]
                if self.cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level

    def _augment(self, s, t, level, it, limit):
        # iterative DFS along the level graph
        stack = [s]
        path: list[int] = []
        while stack:
            u = stack[-1]
            if u == t:
                f = min(min(self.cap[e] for e in path), limit)
                for e in path:
                    self.cap[e] -= f
                    self.cap[e ^ 1] += f
                return f
            advanced = False
            while it[u] < len(self.adj[u]):
                e = self.adj[u][it[u]]
                v = self.head[e]
                if self.cap[e] > 0 and level[v] == level[u] + 1:
                    stack.append(v)
                    path.append(e)
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                level[u] = -1
                stack.pop()
                if path:
                    path.pop()
                    it[stack[-1]] += 1
        return 0

    def max_flow(self, s: int, t: int, limit: Optional[int] = None) -> int:
        total = 0
        while limit is None or total < limit:
            level = self._levels(s, t)
            if level[t] < 0:
                break
            it = [0] * self.n
            while limit is None or total < limit:
                room = float("inf") if limit is None else limit - total
                f = self._augment(s, t, level, it, room)
                if f == 0:
                    break
                total += f
        return total

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.adj[u]:
                v = self.head[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    q.append(v)
        return seen


def max_flow(
    D: Digraph,
    s: int,
    t: int,
    capacities: Optional[Sequence[int]] = None,
    arc_ids: Optional[Iterable[int]] = None,
) -> tuple[int, frozenset[int]]:
    """Maximum s-t flow and a minimum cut side ``S`` with ``t in S``, ``s not in S``.

    The flow value equals the total capacity of arcs entering ``S``. Arc
    capacities default to 1; ``arc_ids`` restricts the network to a subset.
    """
    if s == t:
        raise InputError("source and sink must differ")
    if not (0 <= s < D.n and 0 <= t < D.n):
        raise InputError("source or sink out of range")
    net = FlowNetwork(D.n)
    ids = range(len(D.arcs)) if arc_ids is None else sorted(arc_ids)
    for i in ids:
        a = D.arcs[i]
        cap = 1 if capacities is None else capacities[i]
        if cap < 0:
            raise InputError("capacities must be nonnegative")
        net.add(a.tail, a.head, cap)
    value = net.max_flow(s, t)
    source_side = net.reachable(s)
    return value, frozenset(v for v in range(D.n) if v not in source_side)


def arc_connectivity_from(n: int, arcs: Iterable[tuple[int, int]], root: int, k: int) -> Optional[int]:
    """First vertex that cannot be reached by ``k`` arc-disjoint paths from ``root``,
    or ``None`` when every vertex can."""
    arcs = list(arcs)
    for v in range(n):
        if v == root:
            continue
        net = FlowNetwork(n)
        for u, w in arcs:
            net.add(u, w, 1)
        if net.max_flow(root, v, limit=k) < k:
            return v
    return None
