"""Instance text format, random generator, and solution documents.

Format (vertex IDs are 1-based in the file)::

    c optional comment
    p fgc <n> <m> <k>
    e <u> <v> <cost> <S|U>

Edge IDs are the 0-based positions of the ``e`` lines.
"""

from __future__ import annotations

import json
import random
from typing import Optional

from .errors import GenerationFailed, InputError, ParseError
from .feasibility import is_feasible_instance
from .graph_core import MAX_COST, Edge, FgcInstance, Safety

SOLUTION_FIELDS = ("status", "k", "root", "edges", "cost", "arb_cost", "factor", "opt", "ratio")


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what} is not an integer: {tok!r}") from None


def parse_instance(text: str) -> FgcInstance:
    header = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if header is not None:
                raise ParseError(lineno, "duplicate header")
            if len(tok) != 5 or tok[1] != "fgc":
                raise ParseError(lineno, "header must be 'p fgc <n> <m> <k>'")
            n, m, k = (_int(t, lineno, name) for t, name in zip(tok[2:], ("n", "m", "k")))
            if n < 1:
                raise ParseError(lineno, "n must be >= 1")
            if m < 0:
                raise ParseError(lineno, "m must be >= 0")
            if k < 1:
                raise ParseError(lineno, "k must be >= 1")
            header = (n, m, k, lineno)
        elif tok[0] == "e":
            if header is None:
                raise ParseError(lineno, "edge line before 'p fgc' header")
            if len(tok) != 5:
                raise ParseError(lineno, "edge line must be 'e <u> <v> <cost> <S|U>'")
            n = header[0]
            u = _int(tok[1], lineno, "u")
            v = _int(tok[2], lineno, "v")
            cost = _int(tok[3], lineno, "cost")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(lineno, f"vertex out of range 1..{n}")
            if u == v:
                raise ParseError(lineno, "self-loop")
            if cost < 0:
                raise ParseError(lineno, "negative cost")
            if cost > MAX_COST:
                raise ParseError(lineno, "cost exceeds 2^40")
            if tok[4] not in ("S", "U"):
                raise ParseError(lineno, f"safety must be S or U, got {tok[4]!r}")
            edges.append(Edge(len(edges), u - 1, v - 1, cost, Safety(tok[4])))
        else:
            raise ParseError(lineno, f"unknown line type {tok[0]!r}")
    if header is None:
        raise ParseError(0, "missing 'p fgc' header")
    n, m, k, hline = header
    if len(edges) != m:
        raise ParseError(hline, f"header declares {m} edges, found {len(edges)}")
    return FgcInstance(n, tuple(edges), k)


def serialize_instance(instance: FgcInstance, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines += [f"c {part}" for part in comment.splitlines()]
    lines.append(f"p fgc {instance.n} {instance.m} {instance.k}")
    for e in instance.edges:
        lines.append(f"e {e.u + 1} {e.v + 1} {e.cost} {e.safety.value}")
    return "\n".join(lines) + "\n"


def generate(
    n: int,
    m: int,
    k: int = 1,
    safe_probability: float = 0.5,
    max_cost: int = 10,
    seed: int = 0,
    require_feasible: bool = False,
    retries: int = 50,
) -> FgcInstance:
    """Random multigraph instance, fully determined by ``seed``.

    Uses :class:`random.Random` (Mersenne Twister). With ``require_feasible``
    the draw is repeated up to ``retries`` times; after that the first n-1
    edges are replaced by a random spanning tree of safe edges.
    """
    if n < 2:
        raise InputError("n must be >= 2")
    if m < 1:
        raise InputError("m must be >= 1")
    if not 0.0 <= safe_probability <= 1.0:
        raise InputError("safe_probability must lie in [0, 1]")
    if max_cost < 1:
        raise InputError("max_cost must be >= 1")
    rng = random.Random(seed)

    def draw_edge():
        u, v = rng.sample(range(n), 2)
        cost = rng.randint(1, max_cost)
        safe = rng.random() < safe_probability
        return u, v, cost, safe

    attempts = retries if require_feasible else 1
    for _ in range(max(attempts, 1)):
        inst = FgcInstance.build(n, [draw_edge() for _ in range(m)], k)
        if not require_feasible or is_feasible_instance(inst):
            return inst
    if m < n - 1:
        raise GenerationFailed(f"{m} edges cannot connect {n} vertices")
    order = list(range(n))
    rng.shuffle(order)
    tree = []
    for i in range(1, n):
        parent = order[rng.randrange(i)]
        tree.append((parent, order[i], rng.randint(1, max_cost), True))
    rest = [(e.u, e.v, e.cost, e.safe) for e in inst.edges[n - 1:]]
    inst = FgcInstance.build(n, tree + rest, k)
    if not is_feasible_instance(inst):
        raise GenerationFailed("fallback spanning tree did not yield a feasible instance")
    return inst


def solution_document(
    status: str,
    k: int,
    root: Optional[int] = None,
    edges=None,
    cost: Optional[int] = None,
    arb_cost: Optional[int] = None,
    opt: Optional[int] = None,
    ratio: Optional[float] = None,
) -> str:
    """JSON document with the fixed solution field names; ``root`` is 1-based."""
    doc = {
        "status": status,
        "k": k,
        "root": None if root is None else root + 1,
        "edges": None if edges is None else sorted(edges),
        "cost": cost,
        "arb_cost": arb_cost,
        "factor": k + 1,
        "opt": opt,
        "ratio": ratio,
    }
    body = ",\n".join(f"  {json.dumps(key)}: {json.dumps(value)}" for key, value in doc.items())
    return "{\n" + body + "\n}\n"
