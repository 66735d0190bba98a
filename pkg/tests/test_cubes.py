"""Cube builders: recursion vs closed form, edge labels, DOT export."""

import pytest

from cubecats.cubes import (
    Dim,
    Loop,
    base_subgraph,
    edge_dimension,
    ordinary_iteration,
    standard_cube,
    standard_cube_nonrec,
    standard_cube_rec,
    to_dot,
    twisted_cube,
    twisted_cube_nonrec,
    twisted_cube_rec,
    twisted_iteration,
)
from cubecats.graphs import Graph, graph_isomorphic


def test_standard_square_edges():
    c2 = standard_cube(2)
    proper = {(u, v) for u, v in c2.edges if u != v}
    assert proper == {("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")}
    assert all(c2.has_edge(v, v) for v in c2.vertices)


def test_twisted_square_edges():
    t2 = twisted_cube(2)
    proper = sorted((u, v) for u, v in t2.edges if u != v)
    assert proper == [("00", "10"), ("01", "00"), ("01", "11"), ("10", "11")]


def test_twisted_three_cube_edges():
    t3 = twisted_cube(3)
    proper = sorted((u, v) for u, v in t3.edges if u != v)
    assert proper == [
        ("000", "001"),
        ("000", "100"),
        ("001", "101"),
        ("010", "000"),
        ("010", "110"),
        ("011", "001"),
        ("011", "010"),
        ("011", "111"),
        ("100", "110"),
        ("101", "100"),
        ("101", "111"),
        ("110", "111"),
    ]


def test_zero_cube_is_single_looped_vertex():
    for g in (standard_cube(0), twisted_cube(0)):
        assert g.vertices == ("",)
        assert g.edges == frozenset({("", "")})


def test_iterations_match_builders():
    assert ordinary_iteration(standard_cube(2)) == standard_cube(3)
    assert twisted_iteration(twisted_cube(2)) == twisted_cube(3)


def test_twisted_iteration_reverses_zero_copy():
    t2 = twisted_cube(2)
    t3 = twisted_iteration(t2)
    for u, v in t2.edges:
        if u != v:
            assert t3.has_edge("0" + v, "0" + u)
            assert t3.has_edge("1" + u, "1" + v)


def test_rec_nonrec_isomorphic_small():
    for n in range(4):
        assert graph_isomorphic(standard_cube_rec(n), standard_cube(n)) is not None
        assert graph_isomorphic(twisted_cube_rec(n), twisted_cube(n)) is not None


def test_edge_labels_standard():
    cube = standard_cube_nonrec(2)
    assert cube.edge_of(Dim(0, "0")) == ("00", "10")
    assert cube.edge_of(Dim(1, "1")) == ("10", "11")
    assert cube.edge_of(Loop("01")) == ("01", "01")
    assert cube.label_of(("00", "10")) == Dim(0, "0")


def test_edge_labels_twisted_flip():
    cube = twisted_cube_nonrec(2)
    # residue "0" has one zero before index 1, so source gets bit 1
    assert cube.edge_of(Dim(1, "0")) == ("01", "00")
    assert cube.edge_of(Dim(1, "1")) == ("10", "11")
    assert cube.edge_of(Dim(0, "0")) == ("00", "10")


def test_edge_dimension_of_labels():
    assert edge_dimension(Dim(2, "01")) == 2
    assert edge_dimension(Loop("0")) is None


def test_every_label_is_an_edge():
    for n in range(4):
        cube = twisted_cube_nonrec(n)
        for label, edge in cube.labels.items():
            assert edge in cube.graph.edges
            if isinstance(label, Dim):
                u, v = edge
                assert u != v
                diff = [i for i in range(n) if u[i] != v[i]]
                assert diff == [label.index]


def test_label_count():
    # one loop per vertex plus n * 2^(n-1) proper edges
    for n in range(4):
        cube = standard_cube_nonrec(n)
        assert len(cube.labels) == 2**n + n * 2 ** (n - 1)


def test_base_subgraph_vertices():
    b3 = base_subgraph(3)
    assert b3.vertices == ("000", "001", "010", "100")
    assert b3.has_edge("000", "100")
    assert not b3.has_edge("001", "010")


def test_to_dot_twisted_square_frozen():
    order = ["01", "00", "10", "11"]
    text = to_dot(twisted_cube_nonrec(2), order)
    assert text == (
        "digraph T2 {\n"
        "  rankdir=LR;\n"
        '  "01";\n'
        '  "00";\n'
        '  "10";\n'
        '  "11";\n'
        '  "00" -> "10" [label="⟨0, 0⟩"];\n'
        '  "01" -> "11" [label="⟨0, 1⟩"];\n'
        '  "01" -> "00" [label="⟨1, 0⟩"];\n'
        '  "10" -> "11" [label="⟨1, 1⟩"];\n'
        "}\n"
    )


def test_to_dot_hides_loops_and_validates_order():
    text = to_dot(standard_cube_nonrec(1))
    assert "->" in text and "loop" not in text
    assert text.count("->") == 1
    with pytest.raises(ValueError):
        to_dot(standard_cube_nonrec(1), ["0"])


def test_to_dot_zero_cube_labels_empty_residue():
    text = to_dot(standard_cube_nonrec(0))
    assert '""' in text
    assert "->" not in text
