import itertools
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_edge_dim, brute_metric_dim, connected_graphs, small_corpus, to_nx
import networkx as nx

from gpedim import solver
from gpedim.errors import CardinalityCapExceeded, TooSmall
from gpedim.graph import build_generalized_petersen, build_named, figure3_graph
from gpedim.resolve import lower_bound_edge_dim
from gpedim.solver import (
    SolveKind,
    SolveOptions,
    combination_rank,
    combination_unrank,
    combinations_from,
    solve,
    split_ranges,
    verify_basis,
)


@given(st.integers(1, 12).flatmap(lambda p: st.tuples(st.just(p), st.integers(1, p))))
def test_rank_unrank_matches_itertools(pk):
    p, k = pk
    for r, combo in enumerate(itertools.combinations(range(p), k)):
        assert combination_rank(combo, p) == r
        assert combination_unrank(r, p, k) == combo


@given(st.integers(1, 10).flatmap(lambda p: st.tuples(st.just(p), st.integers(1, p))), st.data())
def test_combinations_from_is_a_slice(pk, data):
    p, k = pk
    total = math.comb(p, k)
    lo = data.draw(st.integers(0, total))
    hi = data.draw(st.integers(lo, total))
    expected = list(itertools.islice(itertools.combinations(range(p), k), lo, hi))
    assert list(combinations_from(p, k, lo, hi)) == expected


@given(st.integers(0, 500), st.integers(1, 20))
def test_split_ranges_partition(total, parts):
    ranges = split_ranges(total, parts)
    flat = [x for lo, hi in ranges for x in range(lo, hi)]
    assert flat == list(range(total))


def gp(n, k):
    return build_generalized_petersen(n, k)


def test_petersen_edge_dim():
    assert solve(gp(5, 2)).dimension == 4


def test_gp82():
    res = solve(gp(8, 2))
    assert res.dimension == 3
    g = gp(8, 2)
    assert verify_basis(g, "edim", [g.vertex(x) for x in ("u0", "u2", "v4")])


def test_baselines():
    assert solve(build_named("path", 5)).dimension == 1
    assert solve(build_named("cycle", 6)).dimension == 2
    assert solve(build_named("complete", 4)).dimension == 3


def test_figure3():
    g1 = figure3_graph()
    assert solve(g1, "edim").dimension == 3
    res = solve(g1, "ledim")
    assert res.dimension == 2
    # e0 = v0v1 and e2 = v0v2 in the figure's numbering
    assert res.basis == (g1.edge_id(0, 1), g1.edge_id(0, 2))
    assert res.basis_labels == ("v0v1", "v0v2")


def test_vertex_dim_gp_n1():
    assert solve(gp(6, 1), "mdim").dimension == 3
    assert solve(gp(5, 1), "mdim").dimension == 2


def test_verify_basis():
    g = gp(9, 2)
    assert verify_basis(g, "edim", [g.vertex(x) for x in ("u0", "u1", "u2", "v5")])
    assert not any(verify_basis(g, "edim", s) for s in itertools.combinations(range(18), 3))
    assert verify_basis(g, "edim", range(18))
    with pytest.raises(ValueError):
        verify_basis(g, "edim", [])


def test_witness_is_lexicographically_smallest():
    g = gp(7, 2)
    res = solve(g)
    smaller = [s for s in itertools.combinations(range(g.vertex_count), res.dimension)
               if s < res.basis]
    assert not any(verify_basis(g, "edim", s) for s in smaller)
    assert not any(verify_basis(g, "edim", s)
                   for s in itertools.combinations(range(g.vertex_count), res.dimension - 1))


def test_cap_and_small_errors():
    with pytest.raises(CardinalityCapExceeded):
        solve(gp(5, 2), max_cardinality=3)
    with pytest.raises(TooSmall):
        solve(build_named("path", 2), "ledim")


def test_single_vertex_and_edge():
    assert solve(build_named("path", 1)).dimension == 1
    assert solve(build_named("path", 1), "mdim").dimension == 1
    assert solve(build_named("path", 2)).dimension == 1


def test_result_json():
    doc = json.loads(json.dumps(solve(gp(5, 2)).to_json()))
    assert set(doc) == {"kind", "dimension", "basis", "subsets_examined", "pruned_vertices",
                        "elapsed_ms"}
    assert doc["kind"] == "edim" and doc["basis"] == ["u0", "u1", "u3", "v3"]


def test_kind_parsing():
    assert SolveKind.parse("edge_dim") is SolveKind.EDGE_DIM
    assert SolveKind.parse("ledim") is SolveKind.LINE_EDGE_DIM
    with pytest.raises(ValueError):
        SolveKind.parse("nope")


@pytest.mark.parametrize("name", sorted(small_corpus()))
def test_pruning_equivalence(name, corpus):
    g = corpus[name]
    a = solve(g, options=SolveOptions(use_pruning=True))
    b = solve(g, options=SolveOptions(use_pruning=False))
    assert (a.dimension, a.basis) == (b.dimension, b.basis)
    assert a.dimension <= max(1, g.vertex_count - 1)
    bound = lower_bound_edge_dim(g)
    assert a.dimension >= (1 if bound.path_exception else bound.combined)


def test_pruning_skips_high_degree_centre():
    # the centre of K_{1,8} has degree 8 > 2**(3-1), so it is excluded at cardinality 3
    star = build_named("star", 8)
    pruned = solve(star)
    full = solve(star, use_pruning=False)
    assert pruned.dimension == full.dimension == 7
    assert pruned.basis == full.basis
    assert pruned.subsets_examined < full.subsets_examined


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_vertices=7))
def test_edge_dim_matches_brute_force(g):
    assert solve(g).dimension == brute_edge_dim(g)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_vertices=7))
def test_metric_dims_match_brute_force(g):
    assert solve(g, "mdim").dimension == brute_metric_dim(to_nx(g))
    if g.edge_count >= 2:
        lg = nx.convert_node_labels_to_integers(nx.line_graph(to_nx(g)))
        assert solve(g, "ledim").dimension == brute_metric_dim(lg)


@pytest.mark.parametrize("kind", list(SolveKind))
def test_parallel_determinism(kind, monkeypatch):
    monkeypatch.setattr(solver, "PARALLEL_THRESHOLD", 1)
    g = gp(9, 2)
    base = solve(g, kind, parallelism=1)
    for workers in (2, 3):
        res = solve(g, kind, parallelism=workers)
        assert (res.dimension, res.basis, res.subsets_examined) == \
            (base.dimension, base.basis, base.subsets_examined)
