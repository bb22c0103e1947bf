from fractions import Fraction

import pytest

import widthlab as wl


def test_graph_round_trip():
    g = wl.Graph(4, [(0, 1), (2, 1), (2, 3)])
    assert g.order == 4 and g.size == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert wl.Graph.from_json(g.to_json()) == g
    assert g.neighbours(1) == [0, 2]
    assert wl.Graph.named("P", [4]) == g


def test_patterns():
    c5 = wl.Graph.named("C", [5])
    assert wl.contains_induced(c5, "3P1") is None
    assert wl.is_free(c5, ["K3", "3P1"])["free"]
    verdict = wl.is_free(wl.Graph.named("K", [5]), ["K5"])
    assert not verdict["free"]
    assert sorted(verdict["witness"]) == [0, 1, 2, 3, 4]


def test_widths():
    p5 = wl.Graph.named("P", [5])
    width, bd = wl.exact_width(p5, "mim")
    assert width == 1
    assert wl.evaluate(p5, bd)["mimw"] == 1
    assert wl.BranchDecomposition.from_json(bd.to_json()) == bd
    cycle = wl.Graph.named("C", [8])
    assert wl.evaluate(cycle, wl.maxdeg2_decomposition(cycle))["mimw"] <= 2


def test_certified_decompositions():
    k5 = wl.Graph.named("K", [5])
    cd = wl.decompose_3p1(k5, 4)
    assert cd["case"] == "complete"
    assert cd["certificate"] == 123
    assert cd["ramsey"]["provenance"] == "exact-table"
    cd4 = wl.decompose_4p1(wl.Graph.named("K", [6]), 4)
    assert cd4["certificate"] == 43 * 18 + 24 * 4 + 214
    with pytest.raises(wl.PreconditionFailed) as err:
        wl.decompose_3p1(wl.Graph(3), 4)
    assert list(err.value.args[1]) == [0, 1, 2]


def test_packing_and_mwis():
    p7 = wl.Graph.named("P", [7])
    ids, weight = wl.solve_packing(p7, ["P3"])
    assert weight == 2 and len(ids) == 2
    hg, occ = wl.build_hgraph(wl.Graph.named("P", [4]), ["P3"])
    assert hg.order == 2 and [o["vertices"] for o in occ] == [[0, 1, 2], [1, 2, 3]]
    p5 = wl.Graph.named("P", [5])
    weights = [Fraction(1, 2), 3, 1, 1, 2]
    s, w = wl.mwis(p5, weights)
    assert w == 5 and s == [1, 4]
    s2, w2 = wl.mwis(p5, weights, wl.caterpillar_decomposition(p5))
    assert w2 == w


def test_list_colouring():
    res = wl.list_colouring(wl.Graph.named("K", [4]), 3)
    assert not res["feasible"] and res["clique"] == [0, 1, 2, 3]
    res = wl.list_colouring(wl.Graph.named("P", [3]), 2, [[1], [1, 2], [1]])
    assert res["feasible"] and res["colouring"] == [1, 2, 1]
    assert res["mim_bound"] is not None


def test_classification_and_families():
    assert wl.classify_edgeless(3, 3, 9)["verdict"] == "bounded"
    assert wl.classify_complete(4, 0, 1, 2)["evidence"] == "w4"
    assert wl.classify_complete(5, 0, 0, 2)["verdict"] == "open"
    g = wl.generate_family("w5", [2])
    assert all(v["holds"] for v in wl.verify_family("w5", g))
    assert wl.ramsey(5, 5)["provenance"] == "binomial-upper"
    with pytest.raises(ValueError):
        wl.classify_edgeless(2, 3, 3)
