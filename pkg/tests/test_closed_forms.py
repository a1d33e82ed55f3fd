import json

import pytest

from gpedim import closed_forms as cf
from gpedim.errors import InvalidSpec, OutOfScope
from gpedim.graph import build_generalized_petersen

IN_SCOPE = [(n, 1) for n in range(3, 65)] + [(n, 2) for n in range(16, 65)]


def labels(n, ids):
    g = build_generalized_petersen(n, 2 if n >= 5 else 1)
    return {g.labels[v] for v in ids}


def test_landmark_sets():
    assert labels(10, cf.landmark_set_gp(10, 1)) == {"u0", "u1", "v0"}
    assert labels(16, cf.landmark_set_gp(16, 2)) == {"u0", "v3", "v11"}
    assert labels(12, cf.landmark_set_gp(12, 2)) == {"u0", "u3", "v4"}
    assert labels(17, cf.landmark_set_gp(17, 2)) == {"u0", "v3", "v4"}
    assert labels(18, cf.landmark_set_gp(18, 2)) == {"u0", "v6", "v7"}
    for bad in [(4, 2), (7, 3), (2, 1)]:
        with pytest.raises(OutOfScope):
            cf.landmark_set_gp(*bad)


def rep(n, k, label, **kw):
    g = build_generalized_petersen(n, k)
    a, b = (g.vertex(x) for x in _split(label))
    return cf.formula_representation(n, k, g.edge_id(a, b), g, **kw)


def _split(label):
    j = max(label.rfind("u"), label.rfind("v"))
    return label[:j], label[j:]


@pytest.mark.parametrize("n,k,edge,expected", [
    (16, 2, "u0u1", (0, 2, 4)),
    (17, 2, "u0u1", (0, 2, 3)),
    (18, 2, "u1u2", (1, 4, 4)),
    (19, 2, "v1v3", (2, 2, 5)),
    (6, 1, "u0v0", (0, 1, 0)),
])
def test_formula_examples(n, k, edge, expected):
    assert rep(n, k, edge, source_order=True) == expected


def test_formula_accepts_endpoint_pair():
    assert cf.formula_representation(16, 2, (0, 1)) == (0, 2, 4)


def test_out_of_scope():
    for n, k in [(15, 2), (10, 2), (12, 3)]:
        with pytest.raises(OutOfScope):
            cf.formula_representation(n, k, 0)


def test_permutation_is_identity():
    for n, k in IN_SCOPE:
        case = cf._case(n, k)
        assert case.permutation == (0, 1, 2)
        assert tuple(sorted(case.landmarks)) == case.landmarks


@pytest.mark.parametrize("n,k", IN_SCOPE)
def test_ranges_partition_each_family(n, k):
    case = cf._case(n, k)
    for fam, pairs in cf.family_edges(n, k).items():
        for i in range(len(pairs)):
            assert len(cf.matching_cells(case, fam, i)) == 1, (fam, i)
        # no cell reaches past the family's index set
        for cell in case.cells:
            if cell.family == fam:
                lo, hi = cell.bounds(case.t)
                assert lo >= 0 and (hi < len(pairs) or hi < lo)


@pytest.mark.parametrize("n,k", IN_SCOPE)
def test_triples_non_negative_and_distinct(n, k):
    g = build_generalized_petersen(n, k)
    reps = [cf.formula_representation(n, k, e, g) for e in range(g.edge_count)]
    assert all(x >= 0 for r in reps for x in r)
    assert len(set(reps)) == 3 * n


def test_families_cover_every_edge():
    for n, k in IN_SCOPE[::7]:
        g = build_generalized_petersen(n, k)
        covered = {tuple(sorted(p)) for pairs in cf.family_edges(n, k).values() for p in pairs}
        assert covered == set(g.edges)


def test_known_dimensions():
    g9 = build_generalized_petersen(9, 2)
    dim, basis = cf.known_dimension_gp(9, 2)
    assert dim == 4 and {g9.labels[v] for v in basis} == {"u0", "u1", "u2", "v5"}
    g20 = build_generalized_petersen(20, 2)
    dim, basis = cf.known_dimension_gp(20, 2)
    assert dim == 3 and {g20.labels[v] for v in basis} == {"u0", "v3", "v13"}
    assert cf.known_dimension_gp(7, 3) is None
    assert cf.known_dimension_gp(11, 1)[0] == 3
    with pytest.raises(InvalidSpec):
        cf.known_dimension_gp(5, 3)


def test_theorem4_values():
    for n in range(5, 40):
        expected = 4 if n in (5, 6, 7, 9) else 3
        assert cf.known_dimension_gp(n, 2)[0] == expected


def test_table5_patterns_agree_with_landmarks():
    for n in range(16, 65):
        t, r = divmod(n, 4)
        expected = {0: ("u0", "v3", f"v{2 * t + 3}"), 1: ("u0", f"v{2 * t - 5}", f"v{2 * t - 4}"),
                    2: ("u0", f"v{2 * t - 2}", f"v{2 * t - 1}"),
                    3: ("u0", f"v{2 * t - 2}", f"v{2 * t - 1}")}[r]
        g = build_generalized_petersen(n, 2)
        assert cf.known_dimension_gp(n, 2)[1] == tuple(sorted(g.vertex(x) for x in expected))


def test_baselines():
    assert cf.closed_form_baseline("path", 9) == (1, 1)
    assert cf.closed_form_baseline("cycle", 12) == (2, 2)
    assert cf.closed_form_baseline("complete", 6) == (5, 5)
    with pytest.raises(InvalidSpec):
        cf.closed_form_baseline("cycle", 2)


def test_cell_dump():
    cells = json.loads(json.dumps(cf.dump_cells()))
    assert len(cells) == 12 + 10 + 35 + 44 + 30 + 36
    assert {c["source"] for c in cells} >= {"Table 1 (n=4t)", "Theorem 3, case n=2t+1"}
    assert cells[0] == {"family": "u_iu_{i+1}", "range": "i=0", "lo": "0", "hi": "0",
                        "triple": ["0", "0", "1"], "source": "Theorem 3, case n=2t"}
