from fractions import Fraction

import networkx as nx
import pytest

from lambdasv.cliques import COMPILED_AVAILABLE
from lambdasv.exactnum import CVec4, inner_product
from lambdasv.matgroup import sigma_tilde
from lambdasv.orthograph import (Basis, DimensionViolationError, OrthGraph, bases_via_group,
                                 build, enumerate_bases, ks_colorability, nonorth_clique_census,
                                 partition_check)
from lambdasv.pipeline import SV_CENSUS
from lambdasv.rayconfig import Configuration, Ray


def test_sv_graph(ws):
    g = ws.sv_graph
    assert set(g.degrees()) == {21}
    assert sum(1 for _ in g.edges()) == 120 * 21 // 2
    i, j = next(iter(g.edges()))
    assert inner_product(g.config.rays[i].vector, g.config.rays[j].vector).is_zero()


def test_sv_bases(ws, sv):
    B = ws.sv_bases
    assert len(B) == 210
    assert B == sorted(B)
    counts = {}
    for b in B:
        for i in b.members:
            counts[i] = counts.get(i, 0) + 1
    assert set(counts.values()) == {7}
    assert B[0].labels == (1, 5, 33, 111)


def test_group_oracle(ws, sv):
    via, fibres = bases_via_group(sigma_tilde(), sv, expected=ws.sv_bases)
    assert via == ws.sv_bases
    assert set(fibres.values()) == {24}


def test_table_two(ws):
    table, underlined = ws.table_bases
    assert [b.labels for b in ws.sv_bases] == table
    assert len(underlined) == 30


def test_witting_bases(ws):
    B = ws.witting_bases
    assert len(B) == 40
    assert set(ws.witting_graph.degrees()) == {12}


def test_witting_census(ws):
    c = nonorth_clique_census(ws.witting_graph)
    assert c.histogram == {4: 90, 7: 2880}
    assert (c.total, c.min_size, c.max_size) == (2970, 4, 7)


@pytest.mark.skipif(not COMPILED_AVAILABLE, reason="extension not built")
def test_sv_census(ws):
    c = nonorth_clique_census(ws.sv_graph)
    assert c.histogram == SV_CENSUS
    assert c.total == 31_475_754
    assert c.histogram[12] == 277_130


@pytest.mark.skipif(not COMPILED_AVAILABLE, reason="extension not built")
def test_sv_census_thread_independent(ws):
    assert (nonorth_clique_census(ws.sv_graph, threads=4).histogram
            == nonorth_clique_census(ws.sv_graph, threads=1).histogram)


def test_witting_census_against_networkx(ws):
    g = ws.witting_graph
    comp = nx.Graph()
    comp.add_nodes_from(range(g.n))
    comp.add_edges_from((i, j) for i in range(g.n) for j in range(i + 1, g.n)
                        if not g.adjacent(i, j))
    sizes = {}
    for c in nx.find_cliques(comp):
        sizes[len(c)] = sizes.get(len(c), 0) + 1
    assert sizes == nonorth_clique_census(g, backend="python").histogram


@pytest.mark.parametrize("name", ["sv", "witting"])
def test_ks_unsat(ws, name):
    r = ks_colorability(ws.graph(name), ws.bases(name))
    assert not r.satisfiable
    assert r.witness is None
    assert r.nodes_explored > 0


def _toy(vectors, d=7):
    cfg = Configuration([Ray(v, i) for i, v in enumerate(vectors)], len(vectors), d)
    return cfg, build(cfg)


def test_ks_toy_sat():
    # two disjoint orthonormal bases: trivially colourable
    h = Fraction(1, 2)
    std = [CVec4.basis(7, k) for k in range(4)]
    had = [CVec4(r, 7) for r in ([h, h, h, h], [h, -h, h, -h], [h, h, -h, -h], [h, -h, -h, h])]
    cfg, g = _toy(std + had)
    bases = enumerate_bases(g)
    assert len(bases) == 2
    r = ks_colorability(g, bases)
    assert r.satisfiable
    for b in bases:
        assert sum(r.witness[i] for i in b.members) == 1
    for i, j in g.edges():
        assert not (r.witness[i] and r.witness[j])


def test_dimension_violation():
    # a graph with five mutually adjacent vertices cannot come from four dimensions
    full = (1 << 5) - 1
    rows = tuple(full & ~(1 << i) for i in range(5))
    cfg = Configuration([Ray(CVec4.basis(7, 0), i) for i in range(5)], 5, 7)
    with pytest.raises(DimensionViolationError):
        enumerate_bases(OrthGraph(5, rows, cfg))


def test_partition_check(ws):
    B = ws.sv_bases
    _, underlined = ws.table_bases
    assert partition_check(B, underlined)
    assert not partition_check(B, [1, 2])  # both contain state 1
    assert not partition_check(B, underlined[:-1])
    assert not partition_check(B, [])


def test_standard_basis_is_number_three(ws, sv):
    B = ws.sv_bases
    assert B[2].labels == (1, 11, 21, 31)
    std = {sv.ray_id(CVec4.basis(7, k)) for k in range(4)}
    assert set(B[2].members) == std


def test_no_clique_of_size_23(ws):
    # sizes below 10 and size 23 are absent, not merely omitted
    hist = nonorth_clique_census(ws.sv_graph).histogram
    assert 23 not in hist
    assert min(hist) == 10 and max(hist) == 24


def test_ks_single_basis():
    cfg, g = _toy([CVec4.basis(7, k) for k in range(4)])
    bases = enumerate_bases(g)
    r = ks_colorability(g, bases)
    assert r.satisfiable
    assert sorted(r.witness) == [0, 1, 2, 3]
    assert sum(r.witness.values()) == 1


def test_basis_of_orders_by_label(sv):
    ids = [sv.by_pid(k).id for k in (111, 1, 33, 5)]
    assert Basis.of(sv, ids).labels == (1, 5, 33, 111)
