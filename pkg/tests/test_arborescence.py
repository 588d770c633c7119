import itertools
import random

import pytest

from kfgc.arborescence import (
    ForestUnionMatroid,
    GraphicMatroid,
    KArborescence,
    PartitionMatroid,
    UniformMatroid,
    decompose,
    exists_k_arborescence,
    forest_partition,
    forest_union_independent,
    min_cost_arborescence,
    min_cost_k_arborescence,
    violated_invariants,
    weighted_matroid_intersection,
)
from kfgc.arborescence.structured import ArcHeadMatroid, CopyForestMatroid
from kfgc.errors import CardinalityUnreachable, InputError, NoKArborescence, NotDecomposable
from kfgc.exact_oracle import exact_k_arborescence
from kfgc.graph_core import ArcSet, Digraph

from .conftest import random_digraph


def arcs_of(T):
    return sorted((a.tail, a.head) for a in T.arcset.arcs())


# -- existence ------------------------------------------------------------


def test_exists_examples(bidirected_triangle):
    assert exists_k_arborescence(Digraph.build(2, [(0, 1, 1)] * 3), 0, 3)
    assert not exists_k_arborescence(Digraph.build(2, [(0, 1, 1)]), 0, 2)
    for r in range(3):
        assert exists_k_arborescence(bidirected_triangle, r, 2)
        assert not exists_k_arborescence(bidirected_triangle, r, 3)


def test_exists_bad_root():
    with pytest.raises(InputError):
        exists_k_arborescence(Digraph.build(2, [(0, 1, 1)]), 5, 1)


# -- single arborescence by contraction --------------------------------------


def test_contraction_examples():
    star = Digraph.build(4, [(0, v, 1) for v in (1, 2, 3)])
    assert min_cost_arborescence(star, 0).total_cost == 3
    tri = Digraph.build(3, [(0, 1, 10), (0, 2, 10), (1, 2, 1), (2, 1, 1)])
    assert min_cost_arborescence(tri, 0).total_cost == 11
    two = Digraph.build(2, [(0, 1, 5), (1, 0, 7)])
    T = min_cost_arborescence(two, 0)
    assert T.arcset.members == {0} and T.total_cost == 5


def test_contraction_no_arborescence():
    with pytest.raises(NoKArborescence):
        min_cost_arborescence(Digraph.build(3, [(0, 1, 1)]), 0)


def test_contraction_matches_enumeration():
    rng = random.Random(7)
    trials = 0
    while trials < 200:
        n = rng.randint(2, 5)
        D = random_digraph(rng, n, rng.randint(n - 1, 10))
        r = rng.randrange(n)
        try:
            expected = exact_k_arborescence(D, r, 1)
        except NoKArborescence:
            with pytest.raises(NoKArborescence):
                min_cost_arborescence(D, r)
            continue
        T = min_cost_arborescence(D, r)
        assert T.total_cost == expected
        assert violated_invariants(T) == []
        trials += 1


# -- k-arborescence by matroid intersection -----------------------------------


def test_k_examples(bidirected_triangle):
    T, _ = min_cost_k_arborescence(Digraph.build(2, [(0, 1, 1), (0, 1, 2), (0, 1, 5)]), 0, 2)
    assert T.total_cost == 3 and T.arcset.members == {0, 1}
    T, _ = min_cost_k_arborescence(bidirected_triangle, 0, 2)
    assert T.total_cost == 4
    assert arcs_of(T) == [(0, 1), (0, 2), (1, 2), (2, 1)]
    with pytest.raises(NoKArborescence):
        min_cost_k_arborescence(Digraph.build(2, [(0, 1, 1)]), 0, 2)


def test_single_vertex_is_empty():
    T, cert = min_cost_k_arborescence(Digraph(1, ()), 0, 3)
    assert len(T.arcset) == 0 and T.total_cost == 0


def test_k_matches_exact():
    rng = random.Random(11)
    trials = 0
    while trials < 100:
        n = rng.randint(2, 4)
        k = rng.choice([2, 3])
        D = random_digraph(rng, n, rng.randint(k * (n - 1), 3 * k + 3))
        r = rng.randrange(n)
        try:
            expected = exact_k_arborescence(D, r, k)
        except NoKArborescence:
            with pytest.raises(NoKArborescence):
                min_cost_k_arborescence(D, r, k)
            continue
        T, cert = min_cost_k_arborescence(D, r, k)
        assert T.total_cost == expected
        assert violated_invariants(T) == []
        trials += 1


def test_k1_intersection_equals_contraction():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(2, 6)
        D = random_digraph(rng, n, rng.randint(n, 14))
        r = rng.randrange(n)
        if not exists_k_arborescence(D, r, 1):
            continue
        T, _ = min_cost_k_arborescence(D, r, 1)
        assert T.total_cost == min_cost_arborescence(D, r).total_cost


def test_certificate_is_sound():
    rng = random.Random(5)
    checked = 0
    while checked < 60:
        n = rng.randint(2, 5)
        k = rng.randint(1, 3)
        D = random_digraph(rng, n, rng.randint(k * (n - 1), 14))
        if not exists_k_arborescence(D, 0, k):
            continue
        T, cert = min_cost_k_arborescence(D, 0, k)
        # rebuild the element-level matroids: one element per (arc, forest index)
        elems = [(a, j) for a in D.arcs if a.head != 0 for j in range(k)]
        weights = [a.cost for a, _ in elems]
        assert all(x + y == w for x, y, w in zip(cert.first, cert.second, weights))
        cap = [k] * n
        cap[0] = 0
        m1 = CopyForestMatroid(n, [(a.tail, a.head) for a, _ in elems], [j for _, j in elems], k)
        m2 = ArcHeadMatroid([a.id for a, _ in elems], [a.head for a, _ in elems], cap)
        chosen = [i for i, (a, j) in enumerate(elems) if a.id in T.forests[j]]
        assert len(chosen) == k * (n - 1)
        assert cert.verify(m1, m2, weights, chosen)
        # corrupting the split must be caught
        bad = type(cert)(cert.first[:-1] + (cert.first[-1] + 1,), cert.second)
        assert not bad.verify(m1, m2, weights, chosen)
        checked += 1


def test_literal_union_partition_formulation_agrees():
    # the k-fold forest union over arcs intersected with the in-degree partition
    # matroid, run through the generic oracle path of the same engine
    rng = random.Random(9)
    done = 0
    while done < 40:
        n = rng.randint(2, 4)
        k = rng.randint(1, 2)
        D = random_digraph(rng, n, rng.randint(k * (n - 1), 8))
        if not exists_k_arborescence(D, 0, k):
            continue
        m1 = ForestUnionMatroid(n, [(a.tail, a.head) for a in D.arcs], k)
        cap = [k] * n
        cap[0] = 0
        m2 = PartitionMatroid([a.head for a in D.arcs], cap)
        chosen, cert = weighted_matroid_intersection(m1, m2, [a.cost for a in D.arcs], k * (n - 1))
        assert cert.verify(m1, m2, [a.cost for a in D.arcs], chosen)
        T, _ = min_cost_k_arborescence(D, 0, k)
        assert sum(D.arcs[i].cost for i in chosen) == T.total_cost
        done += 1


# -- generic weighted matroid intersection -----------------------------------


def brute_wmi(m1, m2, weights, target):
    best = None
    for S in itertools.combinations(range(m1.size), target):
        if m1.is_independent(S) and m2.is_independent(S):
            w = sum(weights[i] for i in S)
            best = w if best is None else min(best, w)
    return best


def test_wmi_examples():
    u = UniformMatroid(3, 2)
    chosen, _ = weighted_matroid_intersection(u, UniformMatroid(3, 2), [3, 1, 2], 2)
    assert chosen == {1, 2}
    chosen, cert = weighted_matroid_intersection(u, u, [3, 1, 2], 0)
    assert chosen == frozenset()


def test_wmi_unreachable():
    with pytest.raises(CardinalityUnreachable):
        weighted_matroid_intersection(UniformMatroid(3, 1), UniformMatroid(3, 3), [1, 1, 1], 2)


def test_wmi_matches_brute_force():
    rng = random.Random(21)
    for trial in range(250):
        size = rng.randint(1, 12)
        if trial % 2:
            m1 = PartitionMatroid([rng.randrange(4) for _ in range(size)], [rng.randint(0, 2) for _ in range(4)])
        else:
            nv = rng.randint(2, 5)
            m1 = GraphicMatroid(nv, [tuple(rng.sample(range(nv), 2)) for _ in range(size)])
        if trial % 3 == 0:
            m2 = UniformMatroid(size, size)  # free matroid
        else:
            m2 = PartitionMatroid([rng.randrange(3) for _ in range(size)], [rng.randint(1, 2) for _ in range(3)])
        weights = [rng.randint(-5, 9) for _ in range(size)]
        for target in range(0, 5):
            expected = brute_wmi(m1, m2, weights, target)
            if expected is None:
                with pytest.raises(CardinalityUnreachable):
                    weighted_matroid_intersection(m1, m2, weights, target)
                continue
            chosen, cert = weighted_matroid_intersection(m1, m2, weights, target)
            assert len(chosen) == target
            assert m1.is_independent(chosen) and m2.is_independent(chosen)
            assert sum(weights[i] for i in chosen) == expected
            assert cert.verify(m1, m2, weights, chosen)


# -- forest union -------------------------------------------------------------


def brute_forest_partition(edges, k):
    for colouring in itertools.product(range(k), repeat=len(edges)):
        if all(
            GraphicMatroid(6, [edges[i] for i in range(len(edges)) if colouring[i] == c]).is_independent(
                range(sum(1 for x in colouring if x == c))
            )
            for c in range(k)
        ):
            return True
    return False


def test_forest_union_examples():
    assert forest_union_independent([(0, 1), (0, 1)], 2)
    assert not forest_union_independent([(0, 1), (0, 1)], 1)
    assert forest_union_independent([], 3)
    tri_chord = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (0, 3)]
    assert forest_union_independent(tri_chord, 2) == brute_forest_partition(tri_chord, 2)
    assert forest_union_independent(tri_chord, 1) == brute_forest_partition(tri_chord, 1)


def test_forest_union_matches_brute_force():
    rng = random.Random(4)
    for _ in range(300):
        m = rng.randint(0, 10)
        k = rng.randint(1, 3)
        if k ** m > 60000:
            k = 2
        edges = [tuple(rng.sample(range(5), 2)) for _ in range(m)]
        got = forest_partition(edges, k)
        assert (got is not None) == brute_forest_partition(edges, k)
        if got is not None:
            assert sorted(i for f in got for i in f) == list(range(m))
            for f in got:
                assert GraphicMatroid(5, [edges[i] for i in f]).is_independent(range(len(f)))


# -- decomposition ------------------------------------------------------------


def test_decompose_examples(bidirected_triangle):
    D = Digraph.build(3, [(0, 1, 1), (1, 2, 1)])
    T = min_cost_arborescence(D, 0)
    assert decompose(T) == [T.arcset.members]
    D = Digraph.build(2, [(0, 1, 1), (0, 1, 1)])
    T, _ = min_cost_k_arborescence(D, 0, 2)
    assert sorted(decompose(T), key=sorted) == [{0}, {1}]
    T, _ = min_cost_k_arborescence(bidirected_triangle, 0, 2)
    parts = decompose(T)
    named = sorted(sorted((D2.tail, D2.head) for D2 in (bidirected_triangle.arcs[i] for i in p)) for p in parts)
    assert named == [[(0, 1), (1, 2)], [(0, 2), (2, 1)]]


def test_decompose_rejects_bad_degrees():
    D = Digraph.build(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)])
    bogus = KArborescence(ArcSet(D, {0, 1, 2}), 0, 1, 3)
    with pytest.raises(NotDecomposable):
        decompose(bogus)
    assert violated_invariants(bogus)


def test_violated_invariants_flags_cycle():
    # degrees are right but vertices 1,2 form a cycle unreachable from the root
    D = Digraph.build(4, [(0, 3, 1), (1, 2, 1), (2, 1, 1)])
    bogus = KArborescence(ArcSet(D, {0, 1, 2}), 0, 1, 3)
    assert violated_invariants(bogus)


def test_claim_bound_on_random_solutions():
    rng = random.Random(8)
    for _ in range(80):
        n = rng.randint(2, 6)
        k = rng.randint(1, 3)
        D = random_digraph(rng, n, rng.randint(k * n, 20))
        if not exists_k_arborescence(D, 0, k):
            continue
        T, _ = min_cost_k_arborescence(D, 0, k)
        assert violated_invariants(T) == []
        counts = {}
        for a in T.arcset.arcs():
            key = frozenset((a.tail, a.head))
            counts[key] = counts.get(key, 0) + 1
        assert max(counts.values(), default=0) <= k
