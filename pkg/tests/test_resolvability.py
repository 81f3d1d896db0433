import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from resolvset import build_hc, build_sp
from resolvset.graph import GraphError, all_pairs_distances, graph_from_edges
from resolvset.resolvability import (
    SearchBudgetExceeded,
    Variant,
    code,
    elements,
    is_independent,
    is_resolving,
    lower_bound,
    min_dimension,
    multiset_rep,
    refute_all,
)

from conftest import connected_graphs, cycle_graph, naive_dimension, path_graph

ORDERED = [Variant.VERTEX, Variant.EDGE, Variant.MIXED]


def ids(g, *labels):
    return [g.vertex(x) for x in labels]


# -- codes ---------------------------------------------------------------------


def test_hc444_vertex_code(hc444):
    dm = all_pairs_distances(hc444)
    land = ids(hc444, "p1:1", "r1:1", "p2:1")
    assert code(dm, hc444.vertex("t2:3"), land) == (10, 14, 5)


def test_hc444_edge_code(hc444):
    dm = all_pairs_distances(hc444)
    land = ids(hc444, "p1:1", "r1:1", "p2:1")
    e = tuple(sorted(ids(hc444, "u2:5", "t2:1")))
    assert code(dm, e, land) == (7, 16, 7)


def test_code_rejects_non_edge(hc444):
    dm = all_pairs_distances(hc444)
    with pytest.raises(GraphError):
        code(dm, 0, [999])


def test_landmark_coordinate_zero():
    g = cycle_graph(7)
    dm = all_pairs_distances(g)
    assert code(dm, 3, [3, 0])[0] == 0


def test_p3_multiset_reps():
    dm = all_pairs_distances(path_graph(3))
    assert [multiset_rep(dm, v, [0]) for v in range(3)] == [(0,), (1,), (2,)]


def test_c6_no_two_set_multiresolves():
    g = cycle_graph(6)
    dm = all_pairs_distances(g)
    for s in itertools.combinations(range(6), 2):
        assert not is_resolving(g, dm, s, Variant.MULTISET)[0]


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=9), st.data())
def test_zero_marks_landmarks(g, data):
    dm = all_pairs_distances(g)
    s = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=g.n, unique=True))
    for v in range(g.n):
        rep = multiset_rep(dm, v, s)
        assert (0 in rep) == (v in s)
        assert rep.count(0) <= 1


def test_sorted_code_is_multiset_rep_1000_samples():
    rng = random.Random(7)
    graphs = [build_hc(4, 4, 4), build_sp(3, 3, 3), build_hc(3, 4, 5), cycle_graph(9)]
    dms = [all_pairs_distances(g) for g in graphs]
    for _ in range(1000):
        i = rng.randrange(len(graphs))
        g, dm = graphs[i], dms[i]
        s = rng.sample(range(g.n), rng.randint(1, 5))
        v = rng.randrange(g.n)
        assert tuple(sorted(code(dm, v, s))) == multiset_rep(dm, v, s)


# -- is_resolving / is_independent --------------------------------------------------


def test_hc_published_mixed_set(hc444):
    dm = all_pairs_distances(hc444)
    s = ids(hc444, "p1:1", "r1:1", "p2:1")
    assert is_resolving(hc444, dm, s, Variant.MIXED) == (True, None)
    assert is_independent(hc444, s)


@settings(max_examples=50, deadline=None)
@given(connected_graphs(min_n=2, max_n=9), st.data())
def test_single_vertex_never_mixed_resolves(g, data):
    dm = all_pairs_distances(g)
    v = data.draw(st.integers(0, g.n - 1))
    ok, pair = is_resolving(g, dm, [v], Variant.MIXED)
    assert not ok and pair is not None


def test_full_vertex_set_resolves(sp333):
    dm = all_pairs_distances(sp333)
    assert is_resolving(sp333, dm, range(sp333.n), Variant.VERTEX)[0]


def test_violating_pair_really_collides(sp333):
    dm = all_pairs_distances(sp333)
    s = ids(sp333, "p1:1")
    ok, (x, y) = is_resolving(sp333, dm, s, Variant.MIXED)
    assert not ok
    assert code(dm, x, s) == code(dm, y, s)


def test_mixed_counts_vertex_edge_collisions():
    # on P2 the landmark {0} gives vertex 0 and edge 01 the same code (0)
    g = path_graph(2)
    dm = all_pairs_distances(g)
    ok, pair = is_resolving(g, dm, [0], Variant.MIXED)
    assert not ok and pair == (0, (0, 1))
    assert is_resolving(g, dm, [0], Variant.VERTEX)[0]
    assert is_resolving(g, dm, [0], Variant.EDGE)[0]


def test_independence_examples():
    g = path_graph(4)
    assert not is_independent(g, [1, 2])
    assert is_independent(g, [])
    assert is_independent(g, [0, 2])


def test_duplicate_landmarks_rejected():
    g = path_graph(4)
    dm = all_pairs_distances(g)
    with pytest.raises(GraphError):
        is_resolving(g, dm, [1, 1], Variant.VERTEX)


def test_variant_aliases():
    assert Variant.parse("MixedMetric") is Variant.MIXED
    assert Variant.parse("edim") is Variant.EDGE
    assert Variant.parse("Multiset") is Variant.MULTISET
    with pytest.raises(ValueError):
        Variant.parse("partition")


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=8), st.sampled_from(ORDERED), st.data())
def test_ordered_variants_monotone(g, variant, data):
    dm = all_pairs_distances(g)
    s = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=g.n, unique=True))
    assume(is_resolving(g, dm, s, variant)[0])
    extra = data.draw(st.lists(st.integers(0, g.n - 1), unique=True))
    sup = list(dict.fromkeys(s + extra))
    assert is_resolving(g, dm, sup, variant)[0]


def test_multiset_not_monotone():
    # {0} multiresolves P3; adding the other endpoint makes the ends collide
    g = path_graph(3)
    dm = all_pairs_distances(g)
    assert is_resolving(g, dm, [0], Variant.MULTISET)[0]
    ok, pair = is_resolving(g, dm, [0, 2], Variant.MULTISET)
    assert not ok and pair == (0, 2)


# -- min_dimension vs brute force ---------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=7), st.sampled_from(list(Variant)))
def test_search_matches_naive(g, variant):
    dm = all_pairs_distances(g)
    expected = naive_dimension(g, dm, variant.value)
    res = min_dimension(g, variant, trust_lower_bounds=False, dm=dm)
    assert res.value == expected
    assert res.certified
    if res.found:
        assert is_resolving(g, dm, res.witness, variant)[0]
        # lexicographically first witness of that size
        first = next(s for s in itertools.combinations(range(g.n), res.value)
                     if is_resolving(g, dm, s, variant)[0])
        assert res.witness == first


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=3, max_n=8), st.sampled_from(list(Variant)))
def test_pruning_does_not_change_result(g, variant):
    a = min_dimension(g, variant, prune=True)
    b = min_dimension(g, variant, prune=False)
    assert (a.value, a.witness, a.certified) == (b.value, b.witness, b.certified)
    assert b.stats.pruned == 0


@settings(max_examples=25, deadline=None)
@given(connected_graphs(min_n=3, max_n=9), st.sampled_from(list(Variant)), st.integers(2, 4))
def test_threads_give_same_result(g, variant, threads):
    a = min_dimension(g, variant).to_dict(g)
    b = min_dimension(g, variant, threads=threads).to_dict(g)
    a.pop("metadata"), b.pop("metadata")
    assert a == b


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=3, max_n=8))
def test_multiset_never_two(g):
    res = min_dimension(g, Variant.MULTISET, trust_lower_bounds=False)
    assert res.value != 2
    if not g.is_path():
        assert res.value is None or res.value >= 3


@settings(max_examples=30, deadline=None)
@given(connected_graphs(min_n=2, max_n=8))
def test_mixed_bounds_on_random_graphs(g):
    d = {v: min_dimension(g, v).value for v in ORDERED}
    assert 2 <= d[Variant.MIXED] <= g.n
    assert d[Variant.MIXED] >= max(d[Variant.VERTEX], d[Variant.EDGE])


@pytest.mark.parametrize("n", [2, 5, 9])
def test_paths_multiset_dimension_one(n):
    g = path_graph(n)
    res = min_dimension(g, Variant.MULTISET)
    assert res.value == 1 and res.certified
    assert res.witness == (0,)


def test_lower_bounds():
    assert lower_bound(path_graph(4), Variant.MULTISET) == 1
    assert lower_bound(cycle_graph(4), Variant.MULTISET) == 3
    assert lower_bound(cycle_graph(4), Variant.MIXED) == 2
    assert lower_bound(cycle_graph(4), Variant.EDGE) == 1


@pytest.mark.parametrize("variant", list(Variant))
def test_refute_all_agrees_with_search(sp333, variant):
    dm = all_pairs_distances(sp333)
    res = min_dimension(sp333, variant, dm=dm)
    assert not refute_all(sp333, variant, res.value, dm)
    for k in res.refuted_sizes:
        assert refute_all(sp333, variant, k, dm)


def test_budget_guard(hc444):
    with pytest.raises(SearchBudgetExceeded) as exc:
        min_dimension(hc444, Variant.MIXED, budget=1000)
    assert exc.value.size == 2 and exc.value.count == math.comb(72, 2)


def test_cap_reached_reports_refutations(sp333):
    res = min_dimension(sp333, Variant.MIXED, cap=2)
    assert not res.found
    assert res.refuted_sizes == [2] and res.certified
    assert res.to_dict(sp333)["value"] == "not found up to cap"


def test_uncertified_start(sp333):
    res = min_dimension(sp333, Variant.VERTEX, certify=False, start=3)
    assert res.value == 3 and not res.certified


def test_require_independent_reports_dependent_sizes():
    # on C4 every resolving pair is adjacent
    g = cycle_graph(4)
    plain = min_dimension(g, Variant.VERTEX)
    indep = min_dimension(g, Variant.VERTEX, require_independent=True)
    assert plain.value == 2 and plain.witness == (0, 1)
    assert indep.value is None or indep.value > 2
    assert 2 in indep.dependent_only_sizes
    assert not indep.certified


def test_relabel_invariance():
    rng = np.random.default_rng(11)
    for g in (build_sp(3, 3, 3), build_hc(3, 3, 4)):
        perm = rng.permutation(g.n).tolist()
        h = g.relabeled(perm)
        for v in Variant:
            assert min_dimension(g, v).value == min_dimension(h, v).value


def test_search_accounting(hc444):
    res = min_dimension(hc444, Variant.MIXED)
    size2 = res.stats.per_size[2]
    assert size2["total"] == 2556
    assert res.refuted_sizes == [2]


def test_tiny_graph_rejected():
    with pytest.raises(GraphError):
        min_dimension(graph_from_edges(1, []), Variant.VERTEX)


# -- frozen values from the exhaustive search (cross-checked by refute_all) ---------

FROZEN = [
    # (family, params, layout, variant, value, witness labels)
    ("hc", (4, 4, 4), "verbatim", "vertex", 3, None),
    ("hc", (4, 4, 4), "verbatim", "edge", 3, None),
    ("hc", (4, 4, 4), "verbatim", "mixed", 3, ["p1:1", "p2:1", "q1:7"]),
    ("hc", (4, 5, 6), "verbatim", "mixed", 4, ["p1:1", "p1:2", "p2:1", "q1:11"]),
    ("hc", (4, 5, 6), "hexagonal", "mixed", 3, ["p1:1", "p2:1", "q1:11"]),
    ("sp", (3, 3, 3), None, "vertex", 2, ["p1:4", "r2:4"]),
    ("sp", (3, 3, 3), None, "edge", 2, ["p1:4", "r2:4"]),
    ("sp", (3, 3, 3), None, "mixed", 3, ["p1:5", "q1:5", "r1:5"]),
    ("sp", (3, 3, 3), None, "multiset", 3, ["p1:1", "p1:4", "q1:5"]),
]


@pytest.mark.parametrize("fam, params, layout, variant, value, witness", FROZEN)
def test_frozen_dimensions(fam, params, layout, variant, value, witness):
    g = build_hc(*params, layout=layout) if fam == "hc" else build_sp(*params)
    res = min_dimension(g, variant)
    assert res.value == value and res.certified
    if witness is not None:
        assert [g.label(v) for v in res.witness] == witness


# -- independent oracle (networkx distances, separate subset scan) -------------------


@pytest.mark.parametrize(
    "fam, params, layout, variant, k, expect_any",
    [
        ("hc", (4, 4, 4), "verbatim", "mixed", 2, False),
        ("hc", (4, 4, 4), "verbatim", "mixed", 3, True),
        ("hc", (4, 4, 4), "verbatim", "vertex", 2, False),
        ("hc", (4, 4, 4), "verbatim", "edge", 2, False),
        ("hc", (4, 5, 6), "verbatim", "mixed", 3, False),
        ("hc", (4, 5, 6), "hexagonal", "mixed", 3, True),
        ("sp", (3, 3, 3), None, "edge", 2, True),
        ("sp", (3, 3, 3), None, "mixed", 2, False),
        ("sp", (3, 3, 3), None, "multiset", 3, True),
    ],
)
def test_networkx_subset_oracle(fam, params, layout, variant, k, expect_any):
    from conftest import nx_element_table, nx_resolving_subsets

    g = build_hc(*params, layout=layout) if fam == "hc" else build_sp(*params)
    table = nx_element_table(g, variant)
    hits = nx_resolving_subsets(table, k, multiset=variant == "multiset", limit=1)
    assert bool(hits) == expect_any
    if hits:
        res = min_dimension(g, variant)
        assert res.value == k and hits[0] == res.witness
