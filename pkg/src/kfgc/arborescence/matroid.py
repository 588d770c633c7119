"""Matroids, forest-union independence, and weighted matroid intersection.

The intersection engine finds a minimum-weight common independent set of a
given size by repeated shortest augmenting paths in the exchange graph. Path
search is Dijkstra on reduced lengths (node potentials carried between
rounds), expanding edges lazily so that structured matroids never build the
full exchange graph.

Matroids plug in through :meth:`Matroid.view`, which returns an object
answering three questions about the current independent set ``I``:

``is_free(y)``
    whether ``I + y`` is independent;
``circuit(y)``
    for dependent ``I + y``, the ``x`` in ``I`` with ``I - x + y`` independent;
``cocircuit(x)``
    for ``x`` in ``I``, every non-free ``y`` with ``I - x + y`` independent.

The base class answers all three with plain independence-oracle calls.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from ..errors import CardinalityUnreachable, InputError, SolverBug


class OracleView:
    """Exchange structure computed from an independence oracle."""

    def __init__(self, matroid: "Matroid", members: Sequence[bool]):
        self.matroid = matroid
        self.members = members
        self.current = [e for e in range(matroid.size) if members[e]]
        base = set(self.current)
        self._free = [False] * matroid.size
        self._circuit: dict[int, list[int]] = {}
        self._cocircuit: dict[int, list[int]] = {x: [] for x in self.current}
        for y in range(matroid.size):
            if members[y]:
                continue
            if matroid.is_independent(base | {y}):
                self._free[y] = True
                continue
            circ = [x for x in self.current if matroid.is_independent((base - {x}) | {y})]
            self._circuit[y] = circ
            for x in circ:
                self._cocircuit[x].append(y)

    def is_free(self, y: int) -> bool:
        return self._free[y]

    def circuit(self, y: int) -> list[int]:
        return self._circuit[y]

    def cocircuit(self, x: int) -> list[int]:
        return self._cocircuit[x]


class Matroid:
    """Matroid over elements ``0..size-1`` given by an independence oracle."""

    def __init__(self, size: int, oracle: Optional[Callable[[frozenset], bool]] = None):
        self.size = size
        self._oracle = oracle

    def is_independent(self, elements: Iterable[int]) -> bool:
        if self._oracle is None:
            raise NotImplementedError
        return self._oracle(frozenset(elements))

    def view(self, members: Sequence[bool]):
        return OracleView(self, members)

    def greedy_min(self, weights: Sequence[int], target: int) -> Optional[int]:
        """Minimum weight of an independent set of exactly ``target`` elements."""
        chosen: set[int] = set()
        total = 0
        for e in sorted(range(self.size), key=lambda e: (weights[e], e)):
            if len(chosen) == target:
                break
            if self.is_independent(chosen | {e}):
                chosen.add(e)
                total += weights[e]
        return total if len(chosen) == target else None


class UniformMatroid(Matroid):
    def __init__(self, size: int, rank: int):
        super().__init__(size)
        self.rank = rank

    def is_independent(self, elements):
        return len(set(elements)) <= self.rank


class PartitionMatroid(Matroid):
    """At most ``capacity[c]`` elements from each class ``c``."""

    def __init__(self, classes: Sequence[int], capacity: Sequence[int]):
        super().__init__(len(classes))
        self.classes = list(classes)
        self.capacity = list(capacity)

    def is_independent(self, elements):
        counts: dict[int, int] = {}
        for e in set(elements):
            c = self.classes[e]
            counts[c] = counts.get(c, 0) + 1
            if counts[c] > self.capacity[c]:
                return False
        return True


class GraphicMatroid(Matroid):
    """Forests of an undirected multigraph; elements are edge indices."""

    def __init__(self, n: int, ends: Sequence[tuple[int, int]]):
        super().__init__(len(ends))
        self.n = n
        self.ends = list(ends)

    def is_independent(self, elements):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in set(elements):
            u, v = self.ends[e]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


class ForestUnionMatroid(Matroid):
    """Edge multisets that split into ``k`` forests (k-fold graphic union)."""

    def __init__(self, n: int, ends: Sequence[tuple[int, int]], k: int):
        super().__init__(len(ends))
        self.n = n
        self.ends = list(ends)
        self.k = k

    def is_independent(self, elements):
        return forest_union_independent([self.ends[e] for e in sorted(set(elements))], self.k)


def forest_partition(edge_multiset: Sequence[tuple[int, int]], k: int) -> Optional[list[list[int]]]:
    """Split edges into ``k`` forests (lists of edge indices), or ``None``.

    Matroid partitioning: each new edge is inserted along a shortest chain of
    swaps between forests.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    edges = list(edge_multiset)
    colour = [-1] * len(edges)

    def tree_path(c, u, v, skip=None):
        # edge indices on the u-v path of forest c, or None if disconnected
        adj: dict[int, list[tuple[int, int]]] = {}
        for i, col in enumerate(colour):
            if col == c and i != skip:
                a, b = edges[i]
                adj.setdefault(a, []).append((b, i))
                adj.setdefault(b, []).append((a, i))
        prev = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                break
            for y, i in adj.get(x, ()):
                if y not in prev:
                    prev[y] = (x, i)
                    stack.append(y)
        if v not in prev:
            return None
        path = []
        x = v
        while prev[x] is not None:
            x, i = prev[x]
            path.append(i)
        return path

    for new in range(len(edges)):
        u, v = edges[new]
        if u == v:
            return None
        # BFS over (edge, target forest) moves
        parent: dict[int, Optional[int]] = {new: None}
        queue = [new]
        placed = False
        head = 0
        while head < len(queue) and not placed:
            e = queue[head]
            head += 1
            a, b = edges[e]
            for c in range(k):
                if colour[e] == c:
                    continue
                path = tree_path(c, a, b)
                if path is None:
                    # e fits in forest c: shift the chain
                    cur, target = e, c
                    while cur is not None:
                        old = colour[cur]
                        colour[cur] = target
                        target = old
                        cur = parent[cur]
                    placed = True
                    break
                for f in path:
                    if f not in parent:
                        parent[f] = e
                        queue.append(f)
        if not placed:
            return None
    forests: list[list[int]] = [[] for _ in range(k)]
    for i, c in enumerate(colour):
        forests[c].append(i)
    return forests


def forest_union_independent(edge_multiset: Sequence[tuple[int, int]], k: int) -> bool:
    return forest_partition(edge_multiset, k) is not None


@dataclass(frozen=True)
class DualCertificate:
    """Weight split ``weights = first + second`` under which the returned set is
    a minimum-weight independent set of its size in each matroid separately."""

    first: tuple[int, ...]
    second: tuple[int, ...]

    def verify(self, m1: Matroid, m2: Matroid, weights: Sequence[int], chosen: Iterable[int]) -> bool:
        chosen = sorted(set(chosen))
        if any(a + b != w for a, b, w in zip(self.first, self.second, weights)):
            return False
        if len(self.first) != len(weights) or len(self.second) != len(weights):
            return False
        t = len(chosen)
        best1 = m1.greedy_min(self.first, t)
        best2 = m2.greedy_min(self.second, t)
        return (
            best1 is not None
            and best2 is not None
            and best1 == sum(self.first[e] for e in chosen)
            and best2 == sum(self.second[e] for e in chosen)
        )


_INF = float("inf")


def weighted_matroid_intersection(
    m1: Matroid,
    m2: Matroid,
    weights: Sequence[int],
    target_size: int,
    verify: bool = True,
) -> tuple[frozenset[int], DualCertificate]:
    """Minimum-weight common independent set with exactly ``target_size`` elements.

    Raises :class:`CardinalityUnreachable` when the matroids share no
    independent set that large. Ties between equal-length augmenting paths go
    to fewer elements, then to smaller element indices.
    """
    size = m1.size
    if m2.size != size or len(weights) != size:
        raise InputError("matroids and weights must share one ground set")
    if target_size < 0:
        raise InputError("target_size must be nonnegative")
    shift = min(weights, default=0)
    shift = min(shift, 0)
    cost = [w - shift for w in weights]

    members = [False] * size
    pot = [0] * (size + 4)

    for _ in range(target_size):
        v1 = m1.view(members)
        v2 = m2.view(members)
        path = _shortest_path(v1, v2, members, cost, pot)
        if path is None:
            raise CardinalityUnreachable(f"no common independent set of size {target_size}")
        for e in path:
            # keep the weight split fixed: an element's length flips sign with membership
            pot[e] += cost[e] if members[e] else -cost[e]
            members[e] = not members[e]

    chosen = frozenset(e for e in range(size) if members[e])
    cert = _certificate(m1, m2, members, cost, pot, weights)
    if verify and not cert.verify(m1, m2, weights, chosen):
        # potentials may be stale after the last swap; recompute them exactly
        pot = _johnson_potentials(m1.view(members), m2.view(members), members, cost)
        cert = _certificate(m1, m2, members, cost, pot, weights)
        if not cert.verify(m1, m2, weights, chosen):
            raise SolverBug("weight-splitting certificate failed to verify")
    return chosen, cert


def _certificate(m1, m2, members, cost, pot, weights) -> DualCertificate:
    first = []
    for e in range(len(members)):
        w1 = -pot[e] if members[e] else cost[e] - pot[e]
        first.append(w1)
    second = [w - a for w, a in zip(weights, first)]
    return DualCertificate(tuple(first), tuple(second))


class _NegativeReducedCost(Exception):
    pass


def _shortest_path(v1, v2, members, cost, pot) -> Optional[list[int]]:
    try:
        return _dijkstra(v1, v2, members, cost, pot)
    except _NegativeReducedCost:
        pot[:] = _johnson_potentials(v1, v2, members, cost)
        return _dijkstra(v1, v2, members, cost, pot)


def _out_edges(u, v1, v2, members, cost, free1, free2, current):
    """Yield ``(node, length, hops)`` for edges leaving ``u``.

    Node layout: elements, then source S, sink T, and two hubs. Hub Z1 stands
    for the edges x -> y into every M1-free y; hub Z2 for the edges y -> x out
    of every M2-free y.
    """
    size = len(members)
    S, T, Z1, Z2 = size, size + 1, size + 2, size + 3
    if u == S or u == Z1:
        for y in free1:
            yield y, cost[y], 1
    elif u == Z2:
        for x in current:
            yield x, -cost[x], 1
    elif u == T:
        return
    elif members[u]:
        yield Z1, 0, 0
        for y in v1.cocircuit(u):
            yield y, cost[y], 1
    else:
        if free2[u]:
            yield T, 0, 0
            yield Z2, 0, 0
        else:
            for x in v2.circuit(u):
                yield x, -cost[x], 1


def _frees(v1, v2, members):
    size = len(members)
    free1 = [y for y in range(size) if not members[y] and v1.is_free(y)]
    free2 = [(not members[y]) and v2.is_free(y) for y in range(size)]
    current = [x for x in range(size) if members[x]]
    return free1, free2, current


def _hub_potentials(pot, members, cost, free1, free2, current):
    size = len(members)
    S, T, Z1, Z2 = size, size + 1, size + 2, size + 3
    sinks = [y for y in range(size) if free2[y]]
    pot[S] = max((pot[y] - cost[y] for y in free1), default=0)
    pot[T] = min((pot[y] for y in sinks), default=0)
    pot[Z1] = min((pot[x] for x in current), default=pot[S])
    pot[Z2] = min((pot[y] for y in sinks), default=0)


def _dijkstra(v1, v2, members, cost, pot) -> Optional[list[int]]:
    size = len(members)
    S, T = size, size + 1
    free1, free2, current = _frees(v1, v2, members)
    _hub_potentials(pot, members, cost, free1, free2, current)

    nodes = size + 4
    dist = [_INF] * nodes
    hops = [0] * nodes
    prev = [-1] * nodes
    done = [False] * nodes
    dist[S] = 0
    heap = [(0, 0, S)]
    while heap:
        d, h, u = heapq.heappop(heap)
        if done[u] or (d, h) != (dist[u], hops[u]):
            continue
        done[u] = True
        if u == T:
            break
        pu = pot[u]
        for w, length, dh in _out_edges(u, v1, v2, members, cost, free1, free2, current):
            if done[w]:
                continue
            red = length + pu - pot[w]
            if red < 0:
                raise _NegativeReducedCost
            nd, nh = d + red, h + dh
            if nd < dist[w] or (nd == dist[w] and nh < hops[w]):
                dist[w] = nd
                hops[w] = nh
                prev[w] = u
                heapq.heappush(heap, (nd, nh, w))
    if dist[T] == _INF:
        return None
    bound = dist[T]
    for v in range(nodes):
        pot[v] += dist[v] if dist[v] < bound else bound
    path = []
    v = prev[T]
    while v != S:
        if v < size:
            path.append(v)
        v = prev[v]
    return path


def _johnson_potentials(v1, v2, members, cost) -> list[int]:
    """Exact feasible potentials from Bellman-Ford with a virtual zero source."""
    size = len(members)
    free1, free2, current = _frees(v1, v2, members)
    nodes = size + 4
    dist = [0] * nodes
    in_queue = [True] * nodes
    queue = list(range(nodes))
    head = 0
    relax_count = 0
    limit = nodes * nodes + 10
    while head < len(queue):
        u = queue[head]
        head += 1
        in_queue[u] = False
        for w, length, _ in _out_edges(u, v1, v2, members, cost, free1, free2, current):
            if dist[u] + length < dist[w]:
                dist[w] = dist[u] + length
                relax_count += 1
                if relax_count > limit * 4:
                    raise SolverBug("negative cycle in exchange graph")
                if not in_queue[w]:
                    in_queue[w] = True
                    queue.append(w)
    return dist
