import itertools

import pytest

import dissoc


def brute_phi(g):
    n = g.order
    def ok(s):
        return all(sum(1 for u in s if g.has_edge(u, v)) <= 1 for v in s)
    count = 0
    for mask in range(1 << n):
        s = [v for v in range(n) if mask >> v & 1]
        if ok(s) and all(not ok(s + [v]) for v in range(n) if v not in s):
            count += 1
    return count


def test_spec_examples():
    assert dissoc.phi(dissoc.family("U(2,2)")) == 5
    assert dissoc.phi(dissoc.Graph.from_graph6("Bw")) == 3
    assert dissoc.phi(dissoc.Graph.cycle(6)) == 5
    assert dissoc.enumerate_mds(dissoc.Graph.path(4)) == [[1, 2], [0, 1, 3], [0, 2, 3]]
    assert dissoc.enumerate_mds(dissoc.Graph.empty(1)) == [[0]]


def test_refined_counts():
    p3 = dissoc.spider_T(1, 1)
    assert dissoc.phi_refined(p3, {1: "in0"}) == 0
    total, rows = dissoc.mds_profile(dissoc.Graph.cycle(3))
    assert total == 3
    assert rows == [(1, 0, 2)] * 3
    with pytest.raises(ValueError):
        dissoc.phi_refined(p3, {0: "sideways"})


def test_phi_matches_python_brute_force():
    for n in range(3, 8):
        for g in dissoc.generate_unicyclic(n):
            assert dissoc.phi(g) == brute_phi(g)


def test_graph_round_trip():
    g = dissoc.Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    assert g.classify() == "unicyclic"
    assert dissoc.Graph.from_graph6(g.to_graph6()) == g
    assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]
    with pytest.raises(ValueError):
        dissoc.Graph.from_graph6("B")
    with pytest.raises(ValueError):
        dissoc.Graph(3, [(0, 0)])


def test_generators():
    assert [len(dissoc.generate_trees(n)) for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]
    assert [len(dissoc.generate_unicyclic(n)) for n in range(3, 10)] == [1, 2, 5, 13, 33, 89, 240]
    codes = {dissoc.unicyclic_code(g) for g in dissoc.generate_unicyclic(8)}
    assert len(codes) == 89
    with pytest.raises(dissoc.CapExceeded):
        dissoc.generate_unicyclic(14)


def test_families():
    assert len(dissoc.extremal_unicyclic(6)) == 3
    assert len(dissoc.extremal_unicyclic(8)) == 2
    assert dissoc.U_rt(4, 2, [0, 1]) == dissoc.family("Urt(4,2,[0,1])")
    assert dissoc.unicyclic_code(dissoc.U_rt(4, 2, [0, 1])) != dissoc.unicyclic_code(dissoc.U_rt(4, 2, [0, 2]))


@pytest.mark.parametrize("n", range(3, 10))
def test_main_theorem_report(n):
    report = dissoc.check_main_theorem(n, jobs=2)
    assert report["passed"]
    assert report["min_phi"] == n // 2 + 2
    assert report["graphs_examined"] == len(dissoc.generate_unicyclic(n))


def test_lemma_reports():
    cycle = dissoc.check_cycle_lemma(4, 12)
    assert cycle["passed"]
    assert any("n=6 difference=1 equality" in o["detail"] for o in cycle["observations"])
    assert dissoc.check_surgery_lemma(6)["passed"]
    assert dissoc.check_pendant_path_lemma(8)["passed"]
    assert dissoc.check_case3_subcases(9)["passed"]
    assert dissoc.check_tree_theorem(8)["passed"]


def test_reports_are_job_independent():
    assert dissoc.check_main_theorem(9, jobs=1) == dissoc.check_main_theorem(9, jobs=3)
