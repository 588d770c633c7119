"""Chu-Liu/Edmonds contraction for a single minimum-cost spanning arborescence."""

from __future__ import annotations

from typing import Optional


def _find_cycle(n, root, pred):
    color = [0] * n  # 0 new, 1 on current walk, 2 done
    for start in range(n):
        if color[start]:
            continue
        walk = []
        v = start
        while v != root and color[v] == 0:
            color[v] = 1
            walk.append(v)
            v = pred[v]
        if v != root and color[v] == 1:
            cycle = walk[walk.index(v):]
            for w in walk:
                color[w] = 2
            return cycle
        for w in walk:
            color[w] = 2
    return None


def min_arborescence_ids(n: int, root: int, arcs: list[tuple[int, int, int, int]]) -> Optional[list[int]]:
    """Arc IDs of a minimum spanning arborescence rooted at ``root``.

    ``arcs`` holds ``(tail, head, cost, id)``; ties go to the smaller ID.
    Returns ``None`` when some vertex is unreachable.
    """
    best: list[Optional[tuple[int, int, int, int]]] = [None] * n
    for a in arcs:
        u, v, w, i = a
        if v == root or u == v:
            continue
        b = best[v]
        if b is None or (w, i) < (b[2], b[3]):
            best[v] = a
    for v in range(n):
        if v != root and best[v] is None:
            return None
    pred = [best[v][0] if v != root else root for v in range(n)]
    cycle = _find_cycle(n, root, pred)
    if cycle is None:
        return sorted(best[v][3] for v in range(n) if v != root)

    in_cycle = set(cycle)
    label = {}
    nxt = 0
    for v in range(n):
        if v not in in_cycle:
            label[v] = nxt
            nxt += 1
    c = nxt
    for v in cycle:
        label[v] = c
    sub_arcs = []
    origin = []
    for a in arcs:
        u, v, w, i = a
        lu, lv = label[u], label[v]
        if lu == lv:
            continue
        if v in in_cycle:
            w = w - best[v][2]
        origin.append(a)
        sub_arcs.append((lu, lv, w, len(origin) - 1))
    chosen = min_arborescence_ids(c + 1, label[root], sub_arcs)
    if chosen is None:
        return None
    result = []
    entry_head = None
    for j in chosen:
        u, v, w, i = origin[j]
        result.append(i)
        if v in in_cycle:
            entry_head = v
    for v in cycle:
        if v != entry_head:
            result.append(best[v][3])
    return sorted(result)
