import json

import pytest

import hypercordial as hc


def test_hypertree_construction_and_invariants():
    t = hc.Hypertree([[0, 1, 2], [2, 3, 4]], 5)
    assert (t.p, t.m, t.n) == (3, 2, 5)
    assert t.n == (t.p - 1) * t.m + 1
    assert t.degree(2) == 2
    assert t.edges == [[0, 1, 2], [2, 3, 4]]


def test_invalid_hypertree_raises():
    with pytest.raises(hc.HypercordialError):
        hc.Hypertree([[0, 1, 2], [1, 2, 3]], 4)  # shares two vertices


def test_text_round_trip():
    t = hc.Hypertree([[0, 1, 2], [2, 3, 4]], 5)
    text = hc.write_hypertree_text(t)
    assert text == "3 2 5\n0 1 2\n2 3 4\n"
    assert hc.read_hypertree_text(text) == t


def test_leaf_edge_peeling():
    t = hc.Hypertree([[0, 1, 2], [2, 3, 4]], 5)
    leaf = hc.find_removable_leaf_edge(t)
    assert leaf.edge_index == 0
    assert leaf.pendant_vertices == [0, 1]
    assert leaf.anchor_vertex == 2
    remainder, lift = hc.remove_leaf_edge(t, leaf)
    assert remainder.m == 1
    assert lift == [2, 3, 4]


def test_label_and_verify():
    t = hc.Hypertree([[0, 1, 2], [2, 3, 4]], 5)
    assert hc.theorem_applies(3, 2)
    result = hc.label_hypertree(t, 2)
    assert hc.is_k_cordial_labeling(t, result.labeling)
    summary = hc.labeling_summary(t, result.labeling)
    assert summary["k_cordial"] is True
    assert sorted(summary["edge_labels"]) == [0, 1]


def test_brute_force_label():
    path = hc.Hypertree([[0, 1], [1, 2], [2, 3]], 4)
    result = hc.brute_force_label(path, 2)
    assert result.status == hc.SearchStatus.FOUND
    assert hc.is_k_cordial_labeling(path, result.labeling)


def test_subset_sum_witnesses():
    w = hc.distinct_subset_sum(4, 2, 2)
    assert w.elements == [0, 2]
    assert hc.verify_witness(w)
    assert hc.oracle_subset_sum(6, 6, 1) is None
    with pytest.raises(hc.HypercordialError):
        hc.distinct_subset_sum(6, 6, 1)


def test_enumeration_counts():
    assert [len(hc.enumerate_hypertrees(2, m)) for m in range(1, 6)] == [1, 1, 2, 3, 6]
    assert len(hc.enumerate_hypertrees(3, 2)) == 1


def test_random_hypertree_is_deterministic():
    a = hc.random_hypertree(3, 5, 42)
    b = hc.random_hypertree(3, 5, 42)
    assert a == b and a.n == 11


def test_explore_report():
    report = hc.explore_conjecture(p=(2, 2), m=(1, 3), k=(3, 4))
    assert report["counterexamples"] == []
    assert all(cell["non_cordial"] == 0 for cell in report["cells"])
    assert report["instances"] == 4 * 2  # 1+1+2 trees, two moduli
