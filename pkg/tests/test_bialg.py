import pytest
from hypothesis import given, settings, strategies as st

from lbpc.utils import QQ, CompatibilityError, ShapeError
from lbpc.exactlin import Subspace
from lbpc.liealg import LieAlgebra, validate_jacobi, coadjoint, is_subalgebra
from lbpc.bialg import (LieBialgebra, wedge2, wedge_from_entries, skew_matrix, dual_algebra,
                        dual_bialgebra, build_double, assemble_double, check_compatibility,
                        check_manin_triple, manin_triple_failures, lagrangian_graph,
                        make_coboundary, pairing_is_invariant, double_pairing)
from lbpc.exactlin import dense_rows


def test_wedge_helpers():
    assert wedge2((1, 0, 0), (0, 1, 0)) == (1, 0, 0)
    assert wedge2((0, 1, 0), (1, 0, 0)) == (-1, 0, 0)
    assert wedge_from_entries([(2, 1, 1)], 3) == (0, 0, -1)
    assert skew_matrix((1, 0, 0), 3)[1][0] == -1
    with pytest.raises(ShapeError):
        wedge_from_entries([(1, 1, 1)], 3)

def test_dual_of_standard_sl2(sl2_standard):
    gstar = dual_algebra(sl2_standard)
    assert gstar.trusted
    assert gstar.basis_names == ('e*', 'h*', 'f*')
    # [e*, h*] = e*, [f*, h*] = f*, [e*, f*] = 0
    assert gstar.c[0][1] == (1, 0, 0)
    assert gstar.c[2][1] == (0, 0, 1)
    assert gstar.c[0][2] == (0, 0, 0)

def test_dual_bialgebra_cobracket_is_the_bracket(sl2_standard):
    dual = dual_bialgebra(sl2_standard)
    # delta_*(h*) collects [e, f] = h: coefficient of e* ^ f*
    assert dual.delta[1] == (0, 1, 0)

def test_standard_sl2_double(sl2_standard):
    assert check_compatibility(sl2_standard).ok
    dd = build_double(sl2_standard)
    assert dd.d.dim == 6
    assert dd.d.trusted
    assert pairing_is_invariant(dd.d, dd.pairing_rows)
    assert check_manin_triple(dd, dd.g_part, dd.gstar_part)
    # [e, e*] = -ad*_{e*} e + ad*_e e*
    assert dd.d.c[0][3][3:] == coadjoint(sl2_standard.g, (1, 0, 0), (1, 0, 0))

def test_non_cocycle_is_rejected_with_witnesses(sl2):
    bad = LieBialgebra.from_wedges(sl2, {1: [(0, 2, 1)]})
    # the dual is a Heisenberg algebra, so only compatibility fails
    assert validate_jacobi(dual_algebra(bad)).ok
    report = check_compatibility(bad)
    assert not report.ok
    with pytest.raises(CompatibilityError) as err:
        build_double(bad)
    assert err.value.details['witnesses']
    assert err.value.kind == 'compatibility'

def test_zero_cobracket_gives_the_semidirect_double(sl2):
    dd = build_double(LieBialgebra.zero(sl2))
    assert dual_algebra(LieBialgebra.zero(sl2)).is_abelian()
    assert is_subalgebra(dd.d, dd.gstar_part)

def test_coboundary_of_e_wedge_f_is_standard(sl2, sl2_standard):
    assert make_coboundary(sl2, (0, 1, 0)).delta == sl2_standard.delta

def test_manin_triple_failures(sl2_standard):
    dd = build_double(sl2_standard)
    assert 'complementary' in manin_triple_failures(dd, dd.g_part, dd.g_part)
    diagonal = Subspace.span([(1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0), (0, 0, 1, 0, 0, 1)], 6)
    failures = manin_triple_failures(dd, diagonal, dd.gstar_part)
    assert 'a_isotropic' in failures

def test_lagrangian_graph(sl2_standard):
    dd = build_double(sl2_standard)
    assert lagrangian_graph(dd, (0, 0, 0)) == dd.g_part
    graph = lagrangian_graph(dd, (1, 0, 0))
    assert graph.dim == 3
    assert check_manin_triple(dd, graph, dd.gstar_part) == is_subalgebra(dd.d, graph)

def test_double_pairing_is_hyperbolic():
    rows = dense_rows(double_pairing(2))
    assert rows == [(0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0)]


def _double_builds(b):
    try:
        build_double(b)
    except CompatibilityError:
        return False
    return True

@settings(max_examples=50)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_random_coboundaries(sl2, r):
    b = make_coboundary(sl2, r)
    assert check_compatibility(b).ok
    expected = validate_jacobi(dual_algebra(b)).ok
    assert _double_builds(b) == expected

@settings(max_examples=60)
@given(st.lists(st.integers(-1, 1), min_size=9, max_size=9))
def test_double_jacobi_matches_compatibility(sl2, coeffs):
    delta = tuple(tuple(QQ(x) for x in coeffs[3 * i:3 * i + 3]) for i in range(3))
    b = LieBialgebra(sl2, delta)
    expected = check_compatibility(b).ok and validate_jacobi(dual_algebra(b)).ok
    assert _double_builds(b) == expected
    d = assemble_double(b)
    assert validate_jacobi(d).ok == expected
def test_dual_of_the_dual_recovers_g(sl2_standard):
    twice = dual_algebra(dual_bialgebra(sl2_standard))
    assert twice.c == sl2_standard.g.c
    assert twice.basis_names == ('e**', 'h**', 'f**')

def test_double_restricts_to_g_and_its_dual(sl2_standard):
    dd = build_double(sl2_standard)
    g, gstar = sl2_standard.g, dual_algebra(sl2_standard)
    n = g.dim
    zeros = (0,) * n
    for i in range(n):
        for j in range(n):
            assert dd.d.c[i][j] == g.c[i][j] + zeros
            assert dd.d.c[n + i][n + j] == zeros + gstar.c[i][j]
    assert is_subalgebra(dd.d, dd.g_part) and is_subalgebra(dd.d, dd.gstar_part)
