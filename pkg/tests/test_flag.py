import pytest

from lbpc.bialg import check_compatibility, dual_algebra
from lbpc.liealg import validate_jacobi
from lbpc.roots import root_system_for_type, weyl_enumerate, build_root_system
from lbpc.flag import (flag_cohomology, poincare_polynomial, standard_bialgebra,
                       coisotropic_route, kostant_check, kostant_representative,
                       kostant_classes, bruhat_leaves)


EXPECTED = {'A1': [1, 0, 1],
            'A2': [1, 0, 2, 0, 2, 0, 1],
            'B2': [1, 0, 2, 0, 2, 0, 2, 0, 1],
            'G2': [1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 1]}


@pytest.mark.parametrize('name', sorted(EXPECTED))
def test_flag_cohomology(name):
    rs = root_system_for_type(name)
    table = flag_cohomology(rs)
    assert list(table.dims) == EXPECTED[name]
    assert table.total == sum(EXPECTED[name])
    assert list(poincare_polynomial(rs)) == EXPECTED[name]
    assert table.to_dict() == {'type': name, 'dims': EXPECTED[name], 'total': table.total}

@pytest.mark.slow
def test_flag_cohomology_a3():
    rs = root_system_for_type('A3')
    expected = [1, 0, 3, 0, 5, 0, 6, 0, 5, 0, 3, 0, 1]
    assert list(flag_cohomology(rs).dims) == expected
    assert flag_cohomology(rs).total == 24

def test_flag_cohomology_from_a_bare_matrix():
    rs = build_root_system([[2, -1], [-1, 2]])
    assert flag_cohomology(rs).to_dict()['type'] == ''
    assert flag_cohomology(rs).total == 6

@pytest.mark.parametrize('name', ['A1', 'A2', 'B2'])
def test_standard_structure_is_a_bialgebra(name):
    rs = root_system_for_type(name)
    ca, b = standard_bialgebra(rs)
    assert check_compatibility(b).ok
    assert validate_jacobi(dual_algebra(b)).ok

@pytest.mark.parametrize('name', ['A1', 'A2', 'B2'])
def test_coisotropic_route_agrees(name):
    rs = root_system_for_type(name)
    assert coisotropic_route(rs) == EXPECTED[name]

@pytest.mark.parametrize('name', ['A1', 'A2', 'B2', 'G2', 'A3'])
def test_kostant_check(name):
    report = kostant_check(root_system_for_type(name))
    assert report.ok
    assert report.dims == report.histogram
    assert len(report.classes) == sum(report.histogram)

@pytest.mark.parametrize('name', ['A1', 'A2', 'B2'])
def test_kostant_representatives(name):
    rs = root_system_for_type(name)
    elements = weyl_enumerate(rs)
    for idx, w in enumerate(elements):
        rep = kostant_representative(rs, w, weyl_index=idx)
        assert rep.ok
        assert rep.degree == 2 * w.length
        assert rep.weyl_index == idx
    assert kostant_representative(rs, elements[0]).labels == ()

def test_kostant_classes_fill_the_cohomology():
    rs = root_system_for_type('A2')
    assert list(kostant_classes(rs)) == EXPECTED['A2']

def test_representative_labels():
    rs = root_system_for_type('A1')
    s = weyl_enumerate(rs)[1]
    assert kostant_representative(rs, s).labels == ('e1*', 'f1*')

def test_bruhat_leaves():
    rs = root_system_for_type('B2')
    leaves = bruhat_leaves(rs)
    assert len(leaves) == 8
    assert leaves[0][1] == 0
    assert sorted(dim for _, dim in leaves) == [0, 2, 2, 4, 4, 6, 6, 8]
