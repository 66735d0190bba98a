"""Twisted-cube structure: the path order, faces, and ternary composition."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubecats.cubes import twisted_cube
from cubecats.standard import compose_graph_morphisms, identity_graph_morphism
from cubecats.twisted import (
    Face,
    TernaryMorphism,
    face_count,
    face_to_injection,
    faces,
    factorize,
    graphdim_to_ternary,
    hamiltonian_f,
    hamiltonian_path,
    image_face,
    monoidal_tensor,
    order_g,
    rev,
    enumerate_semi,
    enumerate_ternary,
    enumerate_twgraphdim,
    semi_ternary_check,
    ternary_compose,
    ternary_identity,
    ternary_to_graphdim,
    unique_surjection,
    untwisted_ternary_compose,
)


def test_hamiltonian_f_two_cube_table():
    assert [hamiltonian_f(2, k) for k in range(4)] == ["01", "00", "10", "11"]


def test_hamiltonian_f_three_cube_table():
    path = [hamiltonian_f(3, k) for k in range(8)]
    assert path == ["011", "010", "000", "001", "101", "100", "110", "111"]


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.data())
def test_order_g_inverts_hamiltonian_f(n, data):
    k = data.draw(st.integers(0, 2**n - 1))
    assert order_g(n, hamiltonian_f(n, k)) == k


def test_rev_is_bitwise_complement():
    assert rev("0101") == "1010"
    assert rev("") == ""


def test_hamiltonian_path_steps_are_edges():
    for n in range(1, 5):
        t = twisted_cube(n)
        steps = hamiltonian_path(n)
        assert len(steps) == 2**n - 1
        assert all(t.has_edge(u, v) for u, v in steps)
        visited = [steps[0][0]] + [v for _, v in steps]
        assert len(set(visited)) == 2**n


def test_hamiltonian_path_two_cube_frozen():
    assert hamiltonian_path(2) == [("01", "00"), ("00", "10"), ("10", "11")]


def test_single_dimension_zero_step_at_midpoint():
    for n in range(1, 5):
        steps = hamiltonian_path(n)
        flips = [k for k, (u, v) in enumerate(steps) if u[0] != v[0]]
        assert flips == [2 ** (n - 1) - 1]


def test_unique_surjection_truncates_bits():
    s = unique_surjection(2, 1)
    assert s.as_dict() == {"00": "0", "01": "0", "10": "1", "11": "1"}
    assert s in enumerate_twgraphdim(2, 1)
    with pytest.raises(ValueError):
        unique_surjection(1, 2)


def test_face_counts_and_enumeration():
    assert face_count(2, 1) == 4
    assert [f.seq for f in faces(2, 1)] == ["0*", "1*", "*0", "*1"]
    for n in range(4):
        assert sum(face_count(n, k) for k in range(n + 1)) == 3**n


def test_face_validation():
    with pytest.raises(ValueError):
        Face(2, "012")
    with pytest.raises(ValueError):
        Face(1, "**")
    assert Face(3, "0**").dimension == 2


def test_face_injection_frozen_one_cube_faces():
    inj0 = face_to_injection(Face(2, "0*"))
    assert inj0.as_dict() == {"0": "01", "1": "00"}
    inj1 = face_to_injection(Face(2, "1*"))
    assert inj1.as_dict() == {"0": "10", "1": "11"}


def test_face_injection_image_recovers_face():
    for n in range(4):
        for k in range(n + 1):
            for face in faces(n, k):
                inj = face_to_injection(face)
                assert len(set(inj.vmap)) == 2**k
                assert image_face(inj) == face


def test_factorize_recomposes():
    for m in range(4):
        for n in range(4):
            for f in enumerate_twgraphdim(m, n):
                k, surj, inj = factorize(f)
                assert k == image_face(f).dimension
                assert surj == unique_surjection(m, k)
                assert compose_graph_morphisms(inj, surj) == f


def test_ternary_validation_reports_position():
    with pytest.raises(ValueError, match="position 1"):
        TernaryMorphism(1, 2, "0x")
    with pytest.raises(ValueError):
        TernaryMorphism(0, 1, "*")
    with pytest.raises(ValueError):
        TernaryMorphism(1, 2, "0")


def test_ternary_compose_frozen_cases():
    def c(g, f):
        fm = TernaryMorphism(f.count("*"), len(f), f)
        gm = TernaryMorphism(len(f), len(g), g)
        return ternary_compose(gm, fm).seq

    assert c("0**", "1*") == "00*"
    assert c("**", "00") == "00"
    assert c("0**", "11") == "001"
    assert c("*0*", "11") == "100"
    assert c("0**", "00") == "010"


def test_untwisted_compose_skips_parity():
    f = TernaryMorphism(1, 2, "1*")
    g = TernaryMorphism(2, 3, "0**")
    assert untwisted_ternary_compose(g, f).seq == "01*"
    assert ternary_compose(g, f).seq == "00*"


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_ternary_identity_laws(m, n, data):
    t = data.draw(st.sampled_from(enumerate_ternary(m, n)))
    assert ternary_compose(t, ternary_identity(m)) == t
    assert ternary_compose(ternary_identity(n), t) == t


def test_ternary_to_graphdim_is_bijection_small():
    for m in range(4):
        for n in range(4):
            ternary = enumerate_ternary(m, n)
            graphs = enumerate_twgraphdim(m, n)
            assert len(ternary) == len(graphs)
            image = {ternary_to_graphdim(t) for t in ternary}
            assert image == set(graphs)
            for t in ternary:
                assert graphdim_to_ternary(ternary_to_graphdim(t)) == t


def test_ternary_counts_frozen():
    table = [[len(enumerate_ternary(m, n)) for n in range(4)] for m in range(4)]
    assert table == [
        [1, 2, 4, 8],
        [1, 3, 8, 20],
        [1, 3, 9, 26],
        [1, 3, 9, 27],
    ]


def test_ternary_functorial_exhaustive_dim_two():
    for k, m, n in product(range(3), repeat=3):
        for g in enumerate_ternary(m, n):
            phi_g = ternary_to_graphdim(g)
            for f in enumerate_ternary(k, m):
                lhs = ternary_to_graphdim(ternary_compose(g, f))
                rhs = compose_graph_morphisms(phi_g, ternary_to_graphdim(f))
                assert lhs == rhs


def test_identity_ternary_maps_to_identity_morphism():
    for n in range(4):
        assert ternary_to_graphdim(ternary_identity(n)) == identity_graph_morphism(
            twisted_cube(n)
        )


def test_semi_ternary_uses_every_input():
    for m in range(4):
        for n in range(4):
            semi = enumerate_semi(m, n)
            assert all(t.stars == m for t in semi)
            assert all(semi_ternary_check(t) for t in semi)
            assert len(semi) == face_count(n, m) if m <= n else len(semi) == 0


def test_semi_closed_under_composition():
    for f in enumerate_semi(1, 2):
        for g in enumerate_semi(2, 3):
            assert ternary_compose(g, f).stars == 1


def test_fibres_of_dimension_preserving_maps_are_uniform():
    for m in range(4):
        for n in range(4):
            for f in enumerate_twgraphdim(m, n):
                k = image_face(f).dimension
                sizes = {}
                for v in f.source.vertices:
                    sizes[f(v)] = sizes.get(f(v), 0) + 1
                assert set(sizes.values()) == {2 ** (m - k)}


def test_monoidal_tensor_values():
    assert monoidal_tensor("0", "01") == "010"
    assert monoidal_tensor("1", "01") == "101"
    assert monoidal_tensor("", "01") == "01"
    assert monoidal_tensor("00", "1") == "001"
    # odd zeros on the left complement the right block
    assert monoidal_tensor("011", "1") == "0110"


def test_monoidal_tensor_unit_and_nonassociativity():
    values = ["", "0", "1", "00", "01", "10", "11"]
    for x in values:
        assert monoidal_tensor(x, "") == x
        assert monoidal_tensor("", x) == x
    a = monoidal_tensor(monoidal_tensor("0", "0"), "0")
    b = monoidal_tensor("0", monoidal_tensor("0", "0"))
    assert a == "011" and b == "010"


def test_monoidal_tensor_associativity_characterized():
    # fails exactly when the left block has odd zeros, the middle has odd
    # length, and the right block is non-empty
    values = [bits for k in range(3) for bits in ("".join(p) for p in product("01", repeat=k))]
    for x in values:
        for y in values:
            for z in values:
                lhs = monoidal_tensor(monoidal_tensor(x, y), z)
                rhs = monoidal_tensor(x, monoidal_tensor(y, z))
                expected = x.count("0") % 2 == 0 or len(y) % 2 == 0 or z == ""
                assert (lhs == rhs) == expected
