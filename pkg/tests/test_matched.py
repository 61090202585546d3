import pytest

from lbpc.utils import (QQ, NotSubalgebraError, NotCoisotropicError, NotDirectSumError,
                        InconsistentInputError, JacobiError, CompatibilityError)
from lbpc.exactlin import Subspace
from lbpc.liealg import (LieAlgebra, validate_jacobi, coadjoint, direct_sum, is_subalgebra,
                         induced_algebra)
from lbpc.bialg import LieBialgebra, build_double, dual_algebra
from lbpc.cohom import relative_cohomology
from lbpc.matched import (split_matched_pair, verify_matched_pair, coisotropic_double,
                          lp_at_vanishing_point, homogeneous_vanishing_data,
                          n_side_invariant_cohomology)
from lbpc.roots import root_system_for_type
from lbpc.flag import standard_bialgebra


def _zero(n):
    return tuple(QQ(0) for _ in range(n))

def test_direct_sum_of_ideals_has_zero_actions(sl2):
    l = direct_sum(sl2, LieAlgebra.abelian(1))
    mp = split_matched_pair(l, Subspace.coordinate(4, [0, 1, 2]), Subspace.coordinate(4, [3]))
    assert all(all(x == 0 for row in m for x in row) for m in mp.act_h_on_n)
    assert all(all(x == 0 for row in m for x in row) for m in mp.act_n_on_h)
    assert verify_matched_pair(mp)

def test_double_splits_into_coadjoint_actions(sl2_standard):
    dd = build_double(sl2_standard)
    mp = split_matched_pair(dd.d, dd.g_part, dd.gstar_part)
    g, gstar = sl2_standard.g, dual_algebra(sl2_standard)
    units = [tuple(QQ(int(i == j)) for j in range(3)) for i in range(3)]
    for i in range(3):
        for a in range(3):
            # x . xi = ad*_x xi and xi . x = ad*_xi x
            assert tuple(mp.act_h_on_n[i][b][a] for b in range(3)) == coadjoint(g, units[i], units[a])
            assert tuple(mp.act_n_on_h[a][j][i] for j in range(3)) == coadjoint(gstar, units[a], units[i])
    assert verify_matched_pair(mp)

def test_split_rejections(sl2):
    with pytest.raises(NotSubalgebraError) as err:
        split_matched_pair(sl2, Subspace.coordinate(3, [1]), Subspace.coordinate(3, [0, 2]))
    assert err.value.details['which'] == 'n'
    with pytest.raises(NotDirectSumError):
        split_matched_pair(sl2, Subspace.coordinate(3, [0]), Subspace.coordinate(3, [0, 1]))
    with pytest.raises(NotDirectSumError):
        split_matched_pair(sl2, Subspace.coordinate(3, [0]), Subspace.coordinate(3, [1]))

def test_cartan_coisotropic_double(sl2_standard):
    h = Subspace.coordinate(3, [1])
    mp = coisotropic_double(sl2_standard, h)
    assert mp.l.dim == 3
    assert mp.n_algebra.is_abelian()
    assert mp.embedding == ((0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1))
    dd = build_double(sl2_standard)
    assert is_subalgebra(dd.d, Subspace.span(mp.embedding, 6))
    assert validate_jacobi(mp.l).ok
    assert verify_matched_pair(mp)

def test_whole_algebra_gives_g(sl2_standard):
    mp = coisotropic_double(sl2_standard, Subspace.full(3))
    assert mp.n.dim == 0
    assert mp.l.c == sl2_standard.g.c

def test_zero_cobracket_is_semidirect(sl2):
    b = LieBialgebra.zero(sl2)
    mp = coisotropic_double(b, Subspace.coordinate(3, [0, 1]))
    # h^perp = span(f*) is abelian and h acts by the coadjoint action
    assert mp.n.dim == 1
    assert mp.n_algebra.is_abelian()
    assert mp.act_h_on_n[1] == ((QQ(2),),)

def test_coisotropy_and_subalgebra_checks(sl2_standard):
    with pytest.raises(NotSubalgebraError):
        coisotropic_double(sl2_standard, Subspace.coordinate(3, [0, 2]))
    abelian = LieAlgebra.abelian(3, ['x', 'y', 'z'])
    heisenberg_dual = LieBialgebra.from_wedges(abelian, {2: [(0, 1, 1)]})
    with pytest.raises(NotCoisotropicError):
        coisotropic_double(heisenberg_dual, Subspace.coordinate(3, [2]))

def test_non_bialgebra_is_rejected(sl2):
    bad = LieBialgebra.from_wedges(sl2, {1: [(0, 2, 1)]})
    with pytest.raises(CompatibilityError):
        coisotropic_double(bad, Subspace.full(3))

def test_vanishing_point_trivial_case():
    g = LieAlgebra.abelian(2)
    b = LieBialgebra.zero(g)
    sigma = [_zero(2), _zero(2)]
    zero_action = [[_zero(2), _zero(2)] for _ in range(2)]
    lp = lp_at_vanishing_point(b, sigma, LieAlgebra.abelian(2, ['a0', 'a1']), zero_action)
    assert lp.dim == 4
    assert lp.is_abelian()
    assert lp.trusted

def test_vanishing_point_semidirect(sl2):
    borel = induced_algebra(sl2, [(1, 0, 0), (0, 1, 0)])
    b = LieBialgebra.zero(borel)
    # e acts by 0 and h by 1 on the one-dimensional cotangent space
    action = [[(QQ(0),)], [(QQ(1),)]]
    lp = lp_at_vanishing_point(b, [_zero(2)], LieAlgebra.abelian(1, ['a']), action)
    assert lp.basis_names == ('x0', 'x1', 'a')
    assert lp.c[1][2] == (0, 0, 1)
    assert lp.c[0][2] == (0, 0, 0)
    assert lp.c[0][1] == (-2, 0, 0)

def test_homogeneous_case_matches_the_coisotropic_double(sl2_standard):
    h = Subspace.coordinate(3, [1])
    sigma, t_bracket, action = homogeneous_vanishing_data(sl2_standard, h)
    lp = lp_at_vanishing_point(sl2_standard, sigma, t_bracket, action)
    mp = coisotropic_double(sl2_standard, h)
    assert lp.c == mp.l.c
    assert lp.dim == 1 + len(sigma)

def test_vanishing_point_consistency_checks(sl2):
    b = LieBialgebra.zero(sl2)
    with pytest.raises(InconsistentInputError):
        lp_at_vanishing_point(b, [_zero(3)], LieAlgebra.abelian(1), [[(QQ(0),)]])
    broken = LieAlgebra.from_brackets(['a', 'b', 'c'],
                                      {(0, 1): {0: -2}, (0, 2): {0: 1}, (1, 2): {2: -2}})
    zero_action = [[_zero(3)] * 3 for _ in range(3)]
    with pytest.raises(JacobiError):
        lp_at_vanishing_point(b, [_zero(3)] * 3, broken, zero_action)
    # sigma = h* leaves g_p = span(e, f), which is not a subalgebra
    with pytest.raises(InconsistentInputError):
        lp_at_vanishing_point(b, [(0, 1, 0)], LieAlgebra.abelian(1), [[(QQ(0),)], [(QQ(0),)]])

def test_n_side_matches_relative_a1(sl2_standard):
    mp = coisotropic_double(sl2_standard, Subspace.coordinate(3, [1]))
    assert n_side_invariant_cohomology(mp) == [1, 0, 1]
    assert relative_cohomology(mp.l, mp.h) == [1, 0, 1]

def test_n_side_matches_relative_semidirect(sl2):
    mp = coisotropic_double(LieBialgebra.zero(sl2), Subspace.coordinate(3, [1]))
    assert n_side_invariant_cohomology(mp) == relative_cohomology(mp.l, mp.h)

def test_n_side_matches_relative_a2():
    rs = root_system_for_type('A2')
    ca, b = standard_bialgebra(rs)
    mp = coisotropic_double(b, ca.cartan_sub)
    n_side = n_side_invariant_cohomology(mp)
    assert n_side == relative_cohomology(mp.l, mp.h)
    assert n_side == [1, 0, 2, 0, 2, 0, 1]
