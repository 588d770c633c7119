"""Matroids over arc copies ``(arc, j)``, one copy per forest of a k-fold union.

Splitting the k-fold forest union into a direct sum of k graphic matroids
moves the "each arc at most once" constraint to the other side, where it
nests inside the in-degree classes. Both sides then have cheap exchange
structure: tree paths and fundamental cuts on one side, counters on the
other.
"""

from __future__ import annotations

from typing import Sequence

from .matroid import Matroid


class CopyForestMatroid(Matroid):
    """Element ``e`` belongs to copy ``copy[e]`` and joins ``ends[e]``; a set is
    independent when each copy forms a forest."""

    def __init__(self, n: int, ends: Sequence[tuple[int, int]], copy: Sequence[int], copies: int):
        self.n = n
        self.size = len(ends)
        self.ends = list(ends)
        self.copy = list(copy)
        self.copies = copies
        # incidence[j][v]: elements of copy j touching v
        self.incidence = [[[] for _ in range(n)] for _ in range(copies)]
        for e, (u, v) in enumerate(self.ends):
            self.incidence[self.copy[e]][u].append(e)
            self.incidence[self.copy[e]][v].append(e)

    def is_independent(self, elements) -> bool:
        parent = {}

        def find(x):
            root = x
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(x, x) != root:
                parent[x], x = root, parent[x]
            return root

        for e in set(elements):
            u, v = self.ends[e]
            j = self.copy[e]
            ru, rv = find((j, u)), find((j, v))
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    def greedy_min(self, weights, target):
        parent = {}

        def find(x):
            root = x
            while parent.get(root, root) != root:
                root = parent[root]
            while parent.get(x, x) != root:
                parent[x], x = root, parent[x]
            return root

        total = count = 0
        for e in sorted(range(self.size), key=lambda e: (weights[e], e)):
            if count == target:
                break
            u, v = self.ends[e]
            j = self.copy[e]
            ru, rv = find((j, u)), find((j, v))
            if ru != rv:
                parent[ru] = rv
                total += weights[e]
                count += 1
        return total if count == target else None

    def view(self, members):
        return _ForestView(self, members)


class _ForestView:
    def __init__(self, m: CopyForestMatroid, members: Sequence[bool]):
        self.m = m
        self.members = members
        n = m.n
        adj = [[[] for _ in range(n)] for _ in range(m.copies)]
        for e in range(m.size):
            if members[e]:
                u, v = m.ends[e]
                j = m.copy[e]
                adj[j][u].append((v, e))
                adj[j][v].append((u, e))
        # per copy: Euler intervals, tree label, child vertex below each tree element
        self.tin = []
        self.tout = []
        self.tree = []
        self.lower = {}
        self.tree_span = []
        for j in range(m.copies):
            tin = [0] * n
            tout = [0] * n
            tree = [-1] * n
            order = []
            span = {}
            for r in range(n):
                if tree[r] >= 0:
                    continue
                start = len(order)
                tree[r] = r
                tin[r] = len(order)
                order.append(r)
                stack = [(r, -1, iter(adj[j][r]))]
                while stack:
                    v, via, it = stack[-1]
                    for w, e in it:
                        if e == via or tree[w] >= 0:
                            continue
                        tree[w] = r
                        tin[w] = len(order)
                        order.append(w)
                        self.lower[e] = w
                        stack.append((w, e, iter(adj[j][w])))
                        break
                    else:
                        tout[v] = len(order)
                        stack.pop()
                span[r] = (start, len(order))
            self.tin.append(tin)
            self.tout.append(tout)
            self.tree.append(tree)
            self.tree_span.append((order, span))

    def is_free(self, y):
        u, v = self.m.ends[y]
        tree = self.tree[self.m.copy[y]]
        return tree[u] != tree[v]

    def cocircuit(self, x):
        m = self.m
        j = m.copy[x]
        c = self.lower[x]
        tin, tout, tree = self.tin[j], self.tout[j], self.tree[j]
        order, span = self.tree_span[j]
        lo, hi = tin[c], tout[c]
        t_lo, t_hi = span[tree[c]]
        inside = hi - lo
        if inside <= (t_hi - t_lo) - inside:
            scan = order[lo:hi]
            want_inside = False
        else:
            scan = order[t_lo:lo] + order[hi:t_hi]
            want_inside = True
        members = self.members
        ends = m.ends
        incidence = m.incidence[j]
        out = []
        for w in scan:
            for y in incidence[w]:
                if members[y]:
                    continue
                a, b = ends[y]
                other = b if a == w else a
                if tree[other] != tree[w]:
                    continue
                if (lo <= tin[other] < hi) == want_inside:
                    out.append(y)
        return out


class ArcHeadMatroid(Matroid):
    """Each arc at most once across its copies, and at most ``cap[h]`` copies
    with head ``h``. The arc classes nest inside the head classes, so this is
    a laminar matroid."""

    def __init__(self, arc_of: Sequence[int], head_of: Sequence[int], cap: Sequence[int]):
        self.size = len(arc_of)
        self.arc_of = list(arc_of)
        self.head_of = list(head_of)
        self.cap = list(cap)

    def is_independent(self, elements) -> bool:
        arcs = set()
        heads: dict[int, int] = {}
        for e in set(elements):
            a = self.arc_of[e]
            if a in arcs:
                return False
            arcs.add(a)
            h = self.head_of[e]
            heads[h] = heads.get(h, 0) + 1
            if heads[h] > self.cap[h]:
                return False
        return True

    def greedy_min(self, weights, target):
        arcs = set()
        heads: dict[int, int] = {}
        total = count = 0
        for e in sorted(range(self.size), key=lambda e: (weights[e], e)):
            if count == target:
                break
            a, h = self.arc_of[e], self.head_of[e]
            if a in arcs or heads.get(h, 0) >= self.cap[h]:
                continue
            arcs.add(a)
            heads[h] = heads.get(h, 0) + 1
            total += weights[e]
            count += 1
        return total if count == target else None

    def view(self, members):
        return _ArcHeadView(self, members)


class _ArcHeadView:
    def __init__(self, m: ArcHeadMatroid, members: Sequence[bool]):
        self.m = m
        self.used: dict[int, int] = {}
        self.by_head: dict[int, list[int]] = {}
        for e in range(m.size):
            if members[e]:
                self.used[m.arc_of[e]] = e
                self.by_head.setdefault(m.head_of[e], []).append(e)

    def is_free(self, y):
        m = self.m
        h = m.head_of[y]
        return m.arc_of[y] not in self.used and len(self.by_head.get(h, ())) < m.cap[h]

    def circuit(self, y):
        m = self.m
        twin = self.used.get(m.arc_of[y])
        if twin is not None:
            return [twin]
        return list(self.by_head.get(m.head_of[y], ()))

