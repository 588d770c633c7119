"""The (k+1)-approximation pipeline for k-FGC.

Orient every edge both ways (safe edges k+1 times), take a minimum-cost
r-out (k+1)-arborescence, and keep each edge that contributed an arc.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .arborescence import min_cost_k_arborescence, violated_invariants
from .arborescence.flow import FlowNetwork
from .errors import Infeasible, InputError, SolverBug
from .feasibility import is_feasible_instance, is_feasible_solution
from .graph_core import ArcSet, FgcInstance
from .reduction import build_digraph, map_back

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FgcSolution:
    edges: frozenset[int]
    cost: int
    root: int
    k: int
    arb_cost: int
    arborescence: Optional[ArcSet] = field(default=None, compare=False, repr=False)

    @property
    def factor(self) -> int:
        return self.k + 1


def solve(
    instance: FgcInstance,
    root: int = 0,
    prune: bool = False,
    check_invariants: bool = False,
) -> FgcSolution:
    """Feasible edge set of cost at most (k+1) times the optimum.

    Raises :class:`Infeasible` when even the full edge set fails. With
    ``prune`` the result is shrunk by reverse-delete, most expensive edge
    first; this is an extra pass, off by default.
    """
    if not 0 <= root < instance.n:
        raise InputError(f"root {root} is not a vertex")
    k = instance.k
    if not is_feasible_instance(instance):
        raise Infeasible("the instance has no feasible edge set")
    if instance.n == 1:
        return FgcSolution(frozenset(), 0, root, k, 0, None)

    D = build_digraph(instance, k)
    T, _ = min_cost_k_arborescence(D, root, k + 1)
    log.debug("arborescence with %d arcs, cost %d", len(T.arcset), T.total_cost)
    if check_invariants:
        problems = violated_invariants(T)
        if problems:
            raise SolverBug("arborescence invariants failed: " + "; ".join(problems))
    F = map_back(T.arcset)
    if prune:
        F = reverse_delete(instance, F)
    cost = instance.cost_of(F)
    if cost > T.total_cost:
        raise SolverBug("mapped edge set costs more than the arborescence")
    if not is_feasible_solution(instance, F):
        raise SolverBug("mapped edge set is not feasible")
    return FgcSolution(F, cost, root, k, T.total_cost, T.arcset)


def reverse_delete(instance: FgcInstance, F) -> frozenset[int]:
    """Drop edges of a feasible ``F`` in decreasing cost order while it stays feasible.

    Removing edge uv can only break cuts separating u and v, so each test is a
    single u-v max-flow capped at k+1.
    """
    k = instance.k
    kept = set(F)
    for i in sorted(kept, key=lambda i: (-instance.edges[i].cost, -i)):
        e = instance.edges[i]
        net = FlowNetwork(instance.n)
        for j in kept:
            if j == i:
                continue
            f = instance.edges[j]
            cap = k + 1 if f.safe else 1
            net.add(f.u, f.v, cap)
            net.add(f.v, f.u, cap)
        if net.max_flow(e.u, e.v, limit=k + 1) >= k + 1:
            kept.discard(i)
    return frozenset(kept)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check]
    ratio: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.passed else 'FAIL'} {c.name} {c.detail}".rstrip() for c in self.checks]


def verify_solution(instance: FgcInstance, solution: FgcSolution, optimum=None) -> VerificationReport:
    """Re-check a solution. ``optimum`` may be an optimal edge set (enables the
    ratio check and the cost bound of the arborescence against it)."""
    checks = [
        Check("feasible", is_feasible_solution(instance, solution.edges)),
        Check(
            "cost<=arb_cost",
            solution.cost <= solution.arb_cost,
            f"{solution.cost} <= {solution.arb_cost}",
        ),
        Check("cost matches edges", instance.cost_of(solution.edges) == solution.cost),
    ]
    ratio = None
    if optimum is not None:
        opt_edges = frozenset(optimum)
        opt = instance.cost_of(opt_edges)
        k = instance.k
        bound = sum(
            (k + 1 if instance.edges[i].safe else 2) * instance.edges[i].cost for i in opt_edges
        )
        checks.append(
            Check("arb_cost<=orientation bound", solution.arb_cost <= bound, f"{solution.arb_cost} <= {bound}")
        )
        if opt == 0:
            ok = solution.cost == 0
            ratio = 1.0 if ok else float("inf")
        else:
            ratio = solution.cost / opt
            ok = solution.cost <= (k + 1) * opt
        checks.append(Check("ratio<=k+1", ok, f"{ratio:.6g} <= {k + 1}"))
    return VerificationReport(checks, ratio)
