"""Brute-force exact solvers for verification at desk scale.

Nothing here shares code with the approximation pipeline's feasibility or
arborescence routines: cuts are enumerated as bitmasks and connectivity is
checked by union-find.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import Infeasible, InputError, NoKArborescence, RefusedScale
from .graph_core import Digraph, FgcInstance, components

MAX_EDGES = 24
MAX_CUT_VERTICES = 16
MAX_ARB_CANDIDATES = 2_000_000


@dataclass(frozen=True)
class ExactResult:
    edges: frozenset[int]
    cost: int
    examined: int


def is_feasible_by_removal(instance: FgcInstance, F: Iterable[int]) -> bool:
    """Definitional test: deleting any <= k unsafe edges of F leaves (V, F) connected."""
    ids = sorted(instance.check_edge_ids(F))
    unsafe = [i for i in ids if not instance.edges[i].safe]
    for size in range(min(instance.k, len(unsafe)) + 1):
        for removed in itertools.combinations(unsafe, size):
            gone = set(removed)
            pairs = ((instance.edges[i].u, instance.edges[i].v) for i in ids if i not in gone)
            if len(set(components(instance.n, pairs))) != 1:
                return False
    return True


class CutTable:
    """Crossing-edge bitmasks for every vertex cut, with vertex n-1 kept outside."""

    def __init__(self, instance: FgcInstance):
        n = instance.n
        if n > MAX_CUT_VERTICES:
            raise RefusedScale(f"cut enumeration limited to {MAX_CUT_VERTICES} vertices")
        self.k = instance.k
        self.safe_mask = 0
        self.unsafe_mask = 0
        for e in instance.edges:
            if e.safe:
                self.safe_mask |= 1 << e.id
            else:
                self.unsafe_mask |= 1 << e.id
        self.cuts = []
        for side in range(1, 1 << (n - 1)):
            cross = 0
            for e in instance.edges:
                if ((side >> e.u) & 1) != ((side >> e.v) & 1):
                    cross |= 1 << e.id
            self.cuts.append((side, cross))

    def violated(self, mask: int):
        """A cut side (as a vertex bitmask) that ``mask`` fails to cover, or None."""
        need = self.k + 1
        for side, cross in self.cuts:
            hit = mask & cross
            if hit & self.safe_mask:
                continue
            if bin(hit & self.unsafe_mask).count("1") >= need:
                continue
            return side
        return None

    def feasible(self, mask: int) -> bool:
        return self.violated(mask) is None


def is_feasible_by_cuts(instance: FgcInstance, F: Iterable[int]) -> bool:
    if instance.n == 1:
        return True
    mask = 0
    for i in instance.check_edge_ids(F):
        mask |= 1 << i
    return CutTable(instance).feasible(mask)


def exact_opt(instance: FgcInstance) -> ExactResult:
    """Minimum-cost feasible edge set, visiting subsets in nondecreasing cost order.

    The first feasible subset popped is optimal; ties go to the subset whose
    sorted edge positions come first.
    """
    m = instance.m
    if m > MAX_EDGES:
        raise RefusedScale(f"exact_opt refuses m={m} > {MAX_EDGES}")
    if instance.n == 1:
        return ExactResult(frozenset(), 0, 1)
    table = CutTable(instance)
    full = (1 << m) - 1
    if not table.feasible(full):
        raise Infeasible("no feasible edge set")
    order = sorted(range(m), key=lambda i: (instance.edges[i].cost, i))
    costs = [instance.edges[i].cost for i in order]
    # heap entries: (cost, positions tuple); successors extend or bump the last position
    heap = [(0, ())]
    examined = 0
    while heap:
        cost, picks = heapq.heappop(heap)
        examined += 1
        mask = 0
        for p in picks:
            mask |= 1 << order[p]
        if table.feasible(mask):
            return ExactResult(frozenset(order[p] for p in picks), cost, examined)
        last = picks[-1] if picks else -1
        if last + 1 < m:
            heapq.heappush(heap, (cost + costs[last + 1], picks + (last + 1,)))
            if picks:
                bumped = picks[:-1] + (last + 1,)
                heapq.heappush(heap, (cost - costs[last] + costs[last + 1], bumped))
    raise Infeasible("no feasible edge set")  # unreachable: the full set was feasible


def exact_k_arborescence(D: Digraph, r: int, k: int) -> int:
    """Minimum cost over arc sets of size k(n-1) meeting the in-cut condition.

    Such a set has in-degree exactly k at every non-root vertex and none at the
    root, so candidates are enumerated as one k-subset of in-arcs per vertex.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    n = D.n
    if not 0 <= r < n:
        raise InputError(f"root {r} is not a vertex")
    if n == 1:
        return 0
    if n > MAX_CUT_VERTICES:
        raise RefusedScale("too many vertices for cut enumeration")
    others = [v for v in range(n) if v != r]
    choices = []
    total = 1
    for v in others:
        into = [a for a in D.arcs if a.head == v]
        opts = list(itertools.combinations(into, k))
        if not opts:
            raise NoKArborescence(f"vertex {v} has fewer than {k} entering arcs")
        choices.append(opts)
        total *= len(opts)
    if total > MAX_ARB_CANDIDATES:
        raise RefusedScale(f"{total} candidate arc sets exceed the guard")
    subsets = []
    for mask in range(1, 1 << n):
        if not (mask >> r) & 1:
            subsets.append(mask)
    best = None
    for combo in itertools.product(*choices):
        arcs = [a for group in combo for a in group]
        cost = sum(a.cost for a in arcs)
        if best is not None and cost >= best:
            continue
        ok = True
        for S in subsets:
            entering = 0
            for a in arcs:
                if (S >> a.head) & 1 and not (S >> a.tail) & 1:
                    entering += 1
            if entering < k:
                ok = False
                break
        if ok:
            best = cost
    if best is None:
        raise NoKArborescence(f"no {k}-arborescence rooted at {r}")
    return best
