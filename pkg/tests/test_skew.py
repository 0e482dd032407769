import pytest
from hypothesis import given
from hypothesis import strategies as st

from oddcycle import (
    EQ,
    GT,
    Graph,
    GraphTooLargeError,
    Orientation,
    all_orientations,
    char_poly_values,
    compare_roots,
    complete_graph,
    cycle_graph,
    is_odd_cycle_graph,
    matching_profile,
    max_matching_root,
    max_skew_spectral_radius,
    path_graph,
    polynomial_from_profile,
    skew_char_poly,
    skew_spectral_radius,
)
from oddcycle import verify_identity as orientation_identity

from oracles import charpoly_reference

BOWTIE = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


@st.composite
def oriented_graphs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    emask = draw(st.integers(0, (1 << len(pairs)) - 1))
    g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if (emask >> i) & 1])
    omask = draw(st.integers(0, (1 << g.m) - 1))
    return Orientation(g, omask)


def test_orientation_basics():
    k3 = complete_graph(3)
    o = Orientation(k3, 0)
    assert o.arcs() == ((1, 0), (2, 0), (2, 1))
    assert Orientation(k3, 0b111).arcs() == ((0, 1), (0, 2), (1, 2))
    assert Orientation(k3, 5).mask_hex() == "0x5"
    with pytest.raises(ValueError):
        Orientation(k3, 8)
    with pytest.raises(ValueError):
        Orientation(k3, -1)


@given(oriented_graphs())
def test_skew_matrix_is_skew_symmetric(o):
    s = o.skew_matrix()
    n = o.graph.n
    for i in range(n):
        for j in range(n):
            assert s[i][j] == -s[j][i]
            if i != j:
                assert abs(s[i][j]) == (1 if o.graph.has_edge(i, j) else 0)
        assert s[i][i] == 0


@given(oriented_graphs())
def test_char_poly_matches_laplace_expansion(o):
    assert skew_char_poly(o).coeffs == charpoly_reference(o.skew_matrix())[: o.graph.n + 1]


@given(oriented_graphs())
def test_char_poly_values_are_point_evaluations(o):
    phi = skew_char_poly(o)
    assert char_poly_values(o) == tuple(phi.evaluate(t) for t in range(o.graph.n + 1))


@given(oriented_graphs())
def test_char_poly_parity_and_shape(o):
    phi = skew_char_poly(o)
    n = o.graph.n
    assert phi.degree == n
    assert phi.leading == 1
    for i, c in enumerate(phi.coeffs):
        if (n - i) % 2 == 1:
            assert c == 0
        else:
            # even skew minors are squares, so all surviving terms are positive
            assert c >= 0


def test_identity_on_triangle():
    k3 = complete_graph(3)
    target = polynomial_from_profile(matching_profile(k3).counts, 3, signed=False)
    assert target.coeffs == (0, 3, 0, 1)
    for o in all_orientations(k3):
        assert skew_char_poly(o).coeffs == (0, 3, 0, 1)
        assert orientation_identity(o)


def test_identity_on_five_cycle():
    c5 = cycle_graph(5)
    for o in all_orientations(c5):
        assert skew_char_poly(o).coeffs == (0, 5, 0, 5, 0, 1)
        assert orientation_identity(o)


def test_identity_fails_on_even_cycle():
    c4 = cycle_graph(4)
    polys = {}
    for o in all_orientations(c4):
        phi = skew_char_poly(o)
        polys[phi.coeffs] = polys.get(phi.coeffs, 0) + 1
        # x^4 + 4x^2 + 2 is never attained, so every orientation violates
        assert not orientation_identity(o)
    assert polys == {(4, 0, 4, 0, 1): 8, (0, 0, 4, 0, 1): 8}


def test_identity_on_bowtie_and_path():
    for g in (BOWTIE, path_graph(4), path_graph(1)):
        for o in all_orientations(g):
            assert orientation_identity(o)


def test_spectral_radius_examples():
    k3 = complete_graph(3)
    rho = skew_spectral_radius(Orientation(k3, 0))
    assert compare_roots(rho, max_matching_root(k3)) == EQ
    assert rho.decimal_str(6) == "1.732051"

    # C4 splits by orientation: x^4 + 4x^2 (rho = 2) or (x^2 + 2)^2 (rho = sqrt 2)
    c4 = cycle_graph(4)
    assert skew_char_poly(Orientation(c4, 1)).coeffs == (0, 0, 4, 0, 1)
    assert skew_spectral_radius(Orientation(c4, 1)).compare_to_rational(2) == EQ
    # the alternating orientation instead gives (x^2 - 2)^2, rho = sqrt(2)
    assert skew_spectral_radius(Orientation(c4, 0)).decimal_str(6) == "1.414214"

    best = max_skew_spectral_radius(c4)
    assert best.compare_to_rational(2) == EQ
    assert compare_roots(best, max_matching_root(c4)) == GT

    assert skew_spectral_radius(Orientation(Graph.empty(3), 0)).compare_to_rational(0) == EQ


@given(oriented_graphs(max_n=4))
def test_radius_agrees_with_matching_root_on_odd_cycle_graphs(o):
    if is_odd_cycle_graph(o.graph):
        assert compare_roots(skew_spectral_radius(o), max_matching_root(o.graph)) == EQ


def test_size_guards():
    big = complete_graph(8)
    with pytest.raises(GraphTooLargeError):
        list(all_orientations(big))
    with pytest.raises(GraphTooLargeError):
        char_poly_values(Orientation(Graph.empty(25), 0))
    with pytest.raises(GraphTooLargeError):
        max_skew_spectral_radius(complete_graph(7))
