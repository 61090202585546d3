import json

import pytest

from lbpc.utils import QQ, SchemaError, InputFileError, MalformedInput
from lbpc.liealg import LieAlgebra, validate_jacobi
from lbpc.bialg import LieBialgebra, check_compatibility
from lbpc.fiber import PointActionData
from lbpc.io import (parse_algebra_json, parse_document, parse_algebra, parse_bialgebra,
                     parse_representation, parse_subspace, load_json_file, emit_algebra,
                     emit_bialgebra, emit_point_data, emit_subspace, format_combination,
                     to_table, setup_preferences, load_preferences, validate_document,
                     CARTAN_SCHEMA)
from lbpc.default_prefs import DEFAULT_PREFERENCES


def _schema_pointer(doc):
    with pytest.raises(SchemaError) as err:
        parse_document(doc)
    return err.value.details['pointer']

def test_minimal_abelian_algebra():
    g = parse_algebra_json('{"dim": 2, "brackets": []}')
    assert g.dim == 2
    assert g.is_abelian()
    assert g.basis_names == ('x0', 'x1')

def test_rational_coefficients():
    g = parse_algebra_json('{"dim": 2, "basis": ["a", "b"],'
                           ' "brackets": [{"i": 1, "j": 0, "coeffs": {"1": "1/3"}}]}')
    # [b, a] = b/3, so [a, b] = -b/3
    assert g.c[0][1] == (0, QQ(-1, 3))

def test_documented_sl2_layout(sl2):
    g = parse_algebra_json(b'{"dim":3,"basis":["e","h","f"],"brackets":['
                           b'{"i":0,"j":1,"coeffs":{"0":-2}},'
                           b'{"i":0,"j":2,"coeffs":{"1":1}},'
                           b'{"i":1,"j":2,"coeffs":{"2":-2}}]}')
    assert g.c == sl2.c
    b = parse_algebra_json('{"dim":3,"basis":["e","h","f"],"brackets":[],'
                           '"delta":[{"i":1,"wedge":[[0,2,1]]}]}')
    assert isinstance(b, LieBialgebra)
    assert b.delta[1] == (0, 1, 0)

def _bracket(i, j, coeffs):
    return {'i': i, 'j': j, 'coeffs': coeffs}

def test_errors_carry_a_json_pointer():
    out_of_range = {'dim': 2, 'brackets': [_bracket(0, 1, {'2': 1})]}
    assert _schema_pointer(out_of_range) == '/brackets/0/coeffs/2'
    assert _schema_pointer({'dim': 2, 'brackets': [_bracket(0, 3, {})]}) == '/brackets/0/j'
    zero_denominator = {'dim': 2, 'brackets': [_bracket(0, 1, {'1': '1/0'})]}
    assert _schema_pointer(zero_denominator) == '/brackets/0/coeffs/1'
    assert _schema_pointer({'dim': 'two', 'brackets': []}) == '/dim'
    assert _schema_pointer({'dim': 1, 'brackets': [], 'extra': True}) == ''
    assert _schema_pointer({'dim': 2, 'brackets': [_bracket(0, 1, {'1': 0.5})]}) \
        == '/brackets/0/coeffs/1'
    assert _schema_pointer({'dim': 2, 'brackets': [_bracket(0, 1, {'x': 1})]}) \
        == '/brackets/0/coeffs'
    legacy = {'dim': 2, 'brackets': [{'pair': [0, 1], 'terms': []}]}
    assert _schema_pointer(legacy) == '/brackets/0'
    duplicate = {'dim': 2, 'brackets': [_bracket(0, 1, {}), _bracket(1, 0, {})]}
    assert _schema_pointer(duplicate) == '/brackets/1'
    assert _schema_pointer({'dim': 2, 'basis': ['a', 'a'], 'brackets': []}) == '/basis'

def test_delta_pointers():
    doc = {'dim': 2, 'brackets': [], 'delta': [{'i': 0, 'wedge': [[1, 1, 1]]}]}
    assert _schema_pointer(doc) == '/delta/0/wedge/0'
    doc = {'dim': 2, 'brackets': [], 'delta': [{'i': 2, 'wedge': []}]}
    assert _schema_pointer(doc) == '/delta/0/i'
    doc = {'dim': 2, 'brackets': [], 'delta': [{'i': 0, 'wedge': []}, {'i': 0, 'wedge': []}]}
    assert _schema_pointer(doc) == '/delta/1'

def test_malformed_bytes_and_text():
    with pytest.raises(InputFileError):
        parse_algebra_json(b'\xff\xfe')
    with pytest.raises(SchemaError):
        parse_algebra_json('{"dim": 2,')
    assert issubclass(SchemaError, MalformedInput)

def test_dispatch_by_shape(data_dir):
    assert isinstance(parse_document(load_json_file(data_dir / 'sl2.json')), LieAlgebra)
    b = parse_document(load_json_file(data_dir / 'sl2_standard_bialgebra.json'))
    assert isinstance(b, LieBialgebra)
    assert check_compatibility(b).ok
    d = parse_document(load_json_file(data_dir / 'point_symplectic.json'))
    assert isinstance(d, PointActionData)
    assert d.pi_sharp[0][1] == QQ(1, 2)

def test_sl2_data_file(data_dir, sl2):
    g = parse_document(load_json_file(data_dir / 'sl2.json'))
    assert g.c == sl2.c
    assert g.basis_names == ('e', 'h', 'f')
    assert validate_jacobi(g).ok

def test_missing_file(tmp_path):
    with pytest.raises(InputFileError) as err:
        load_json_file(tmp_path / 'nope.json')
    assert err.value.kind == 'unreadable_file'

def test_round_trips(sl2_standard):
    g = parse_algebra(emit_algebra(sl2_standard.g))
    assert g.c == sl2_standard.g.c and g.basis_names == sl2_standard.g.basis_names
    b = parse_bialgebra(emit_bialgebra(sl2_standard))
    assert b.delta == sl2_standard.delta
    d = PointActionData.from_rows([(1, 0), (0, 1)], [(0, QQ(1, 2)), (QQ(-1, 2), 0)])
    assert parse_document(json.loads(json.dumps(emit_point_data(d)))) == d
    assert emit_point_data(d)['pi_sharp'][0][1] == '1/2'

def test_subspaces_and_representations(sl2):
    s = parse_subspace([[0, 2, 0]], 3)
    assert emit_subspace(s) == [[0, 1, 0]]
    with pytest.raises(SchemaError) as err:
        parse_subspace([[0, 1]], 3, '/h')
    assert err.value.details['pointer'] == '/h/0'
    rep = parse_representation(sl2, [[[0]], [[0]], [[0]]])
    assert rep.space_dim == 1
    with pytest.raises(SchemaError):
        parse_representation(sl2, [[[0]]])

def test_cartan_schema():
    assert validate_document([[2, -1], [-1, 2]], CARTAN_SCHEMA)
    assert validate_document({'name': 'G2', 'cartan': [[2, -3], [-1, 2]]}, CARTAN_SCHEMA)
    with pytest.raises(SchemaError):
        validate_document({'cartan': [[2, '-1']]}, CARTAN_SCHEMA)

def test_preferences(tmp_path):
    path = tmp_path / 'prefs' / 'preferences.json'
    setup_preferences([path], [DEFAULT_PREFERENCES])
    assert json.loads(path.read_text()) == DEFAULT_PREFERENCES
    path.write_text(json.dumps({'json_indent': 2}))
    # an existing file is left alone
    setup_preferences([path], [DEFAULT_PREFERENCES])
    prefs = load_preferences(path)
    assert prefs['json_indent'] == 2
    assert prefs['weyl_cap'] == DEFAULT_PREFERENCES['weyl_cap']
    assert load_preferences(tmp_path / 'missing.json') == DEFAULT_PREFERENCES
    path.write_text('{')
    with pytest.raises(InputFileError):
        load_preferences(path)

def test_format_combination():
    names = ['e', 'h', 'f']
    assert format_combination((2, 0, QQ(-1, 2)), names) == '2*e - 1/2*f'
    assert format_combination((-1, 0, 1), names) == '-e + f'
    assert format_combination((0, 0, 0), names) == '0'

def test_to_table():
    text = to_table([{'degree': 0, 'dim': 1}, {'degree': 1, 'dim': 0}])
    assert 'degree' in text and 'dim' in text
    assert len(text.splitlines()) == 3
    assert to_table([]) == '(empty)'
