from .utils import *
from .default_prefs import (ALL_PREFS,
                            ALL_PREF_FILES,
                            PREFS_FILE,
                            DEFAULT_PREFERENCES)
from .exactlin import Subspace
from .liealg import LieAlgebra
from .bialg import LieBialgebra, wedge_pairs
from .cohom import Representation
from .fiber import PointActionData

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

############################ preferences ############################

def setup_preferences(pref_files=None, prefs=None):
    """Write the default preference files that are missing."""
    pref_files = ALL_PREF_FILES if pref_files is None else pref_files
    prefs = ALL_PREFS if prefs is None else prefs
    for fpath, values in zip(pref_files, prefs):
        fpath = Path(fpath)
        if fpath.exists():
            continue
        fpath.parent.mkdir(parents=True, exist_ok=True)
        with open(fpath, 'w') as fd:
            json.dump(values, fd, sort_keys=True, indent=4)
        log.info(f'Preferences file created at {fpath}')

def load_preferences(path=None):
    """Preferences from disk with missing keys filled from the defaults."""
    path = Path(PREFS_FILE if path is None else path)
    prefs = dict(DEFAULT_PREFERENCES)
    if not path.exists():
        return prefs
    try:
        with open(path, 'r') as fd:
            stored = json.load(fd)
    except (OSError, ValueError) as err:
        raise InputFileError(f'could not read preferences at {path}: {err}', path=str(path))
    if not isinstance(stored, dict):
        raise SchemaError('preferences must be a JSON object', path=str(path))
    for k, v in stored.items():
        prefs[k] = v
    return prefs

############################ schemas ############################

RATIONAL = {'oneOf': [{'type': 'integer'},
                      {'type': 'string', 'pattern': '^-?[0-9]+(/-?[0-9]+)?$'}]}
INDEX = {'type': 'integer', 'minimum': 0}
VECTOR = {'type': 'array', 'items': RATIONAL}
MATRIX = {'type': 'array', 'items': VECTOR}

# coeffs keys are basis indices written as JSON object keys
COEFFS = {'type': 'object',
          'propertyNames': {'pattern': '^(0|[1-9][0-9]*)$'},
          'additionalProperties': RATIONAL}

WEDGE_TERMS = {'type': 'array',
               'items': {'type': 'array', 'prefixItems': [INDEX, INDEX, RATIONAL],
                         'minItems': 3, 'maxItems': 3}}

ALGEBRA_PROPERTIES = {
    'dim': INDEX,
    'basis': {'type': 'array', 'items': {'type': 'string'}},
    'brackets': {'type': 'array',
                 'items': {'type': 'object',
                           'properties': {'i': INDEX, 'j': INDEX, 'coeffs': COEFFS},
                           'required': ['i', 'j', 'coeffs'],
                           'additionalProperties': False}}}

ALGEBRA_SCHEMA = {
    'type': 'object',
    'properties': ALGEBRA_PROPERTIES,
    'required': ['dim', 'brackets'],
    'additionalProperties': False}

BIALGEBRA_SCHEMA = {
    'type': 'object',
    'properties': dict(ALGEBRA_PROPERTIES,
                       delta={'type': 'array',
                              'items': {'type': 'object',
                                        'properties': {'i': INDEX, 'wedge': WEDGE_TERMS},
                                        'required': ['i', 'wedge'],
                                        'additionalProperties': False}}),
    'required': ['dim', 'brackets', 'delta'],
    'additionalProperties': False}

POINT_SCHEMA = {
    'type': 'object',
    'properties': {'g_dim': INDEX, 'p_dim': INDEX, 'sigma': MATRIX, 'pi_sharp': MATRIX},
    'required': ['g_dim', 'p_dim', 'sigma', 'pi_sharp'],
    'additionalProperties': False}

COHOMOLOGY_SCHEMA = {
    'type': 'object',
    'properties': {'algebra': ALGEBRA_SCHEMA,
                   'representation': {'type': 'array', 'items': MATRIX}},
    'required': ['algebra'],
    'additionalProperties': False}

RELATIVE_SCHEMA = {
    'type': 'object',
    'properties': {'algebra': ALGEBRA_SCHEMA, 'h': MATRIX},
    'required': ['algebra', 'h'],
    'additionalProperties': False}

MATCHED_SCHEMA = {
    'oneOf': [{'type': 'object',
               'properties': {'bialgebra': BIALGEBRA_SCHEMA, 'h': MATRIX},
               'required': ['bialgebra', 'h'],
               'additionalProperties': False},
              {'type': 'object',
               'properties': {'algebra': ALGEBRA_SCHEMA, 'h': MATRIX, 'n': MATRIX},
               'required': ['algebra', 'h', 'n'],
               'additionalProperties': False}]}

MANIN_SCHEMA = {
    'type': 'object',
    'properties': {'bialgebra': BIALGEBRA_SCHEMA, 'a': MATRIX, 'b': MATRIX, 'r': WEDGE_TERMS},
    'required': ['bialgebra'],
    'additionalProperties': False}

CARTAN_SCHEMA = {
    'oneOf': [{'type': 'array', 'items': {'type': 'array', 'items': {'type': 'integer'}}},
              {'type': 'object',
               'properties': {'name': {'type': 'string'},
                              'cartan': {'type': 'array',
                                         'items': {'type': 'array', 'items': {'type': 'integer'}}}},
               'required': ['cartan'],
               'additionalProperties': False}]}

def _pointer(path):
    return ''.join(f'/{p}' for p in path)

def validate_document(doc, schema):
    error = best_match(Draft202012Validator(schema).iter_errors(doc))
    if error is not None:
        pointer = _pointer(error.absolute_path)
        raise SchemaError(f'{pointer or "/"}: {error.message}', pointer=pointer)
    return doc

############################ parsing ############################

def parse_rational(value, pointer=''):
    try:
        return rat(value)
    except ZeroDivisionError:
        raise SchemaError(f'{pointer}: zero denominator in {value!r}', pointer=pointer)
    except (TypeError, ValueError):
        raise SchemaError(f'{pointer}: not a rational number: {value!r}', pointer=pointer)

def parse_vector(values, dim, pointer=''):
    if len(values) != dim:
        raise SchemaError(f'{pointer}: expected {dim} entries, got {len(values)}', pointer=pointer)
    return tuple(parse_rational(v, f'{pointer}/{i}') for i, v in enumerate(values))

def parse_matrix(rows, nrows, ncols, pointer=''):
    if len(rows) != nrows:
        raise SchemaError(f'{pointer}: expected {nrows} rows, got {len(rows)}', pointer=pointer)
    return tuple(parse_vector(r, ncols, f'{pointer}/{i}') for i, r in enumerate(rows))

def _check_index(i, dim, pointer):
    if i >= dim:
        raise SchemaError(f'{pointer}: index {i} out of range for dimension {dim}', pointer=pointer)

def parse_algebra(doc, pointer=''):
    dim = doc['dim']
    names = doc.get('basis', [f'x{i}' for i in range(dim)])
    if len(names) != dim:
        raise SchemaError(f'{pointer}/basis: {len(names)} names for dimension {dim}',
                          pointer=f'{pointer}/basis')
    if len(set(names)) != dim:
        raise SchemaError(f'{pointer}/basis: basis names are not distinct', pointer=f'{pointer}/basis')
    brackets = {}
    for t, entry in enumerate(doc['brackets']):
        here = f'{pointer}/brackets/{t}'
        i, j = entry['i'], entry['j']
        _check_index(i, dim, f'{here}/i')
        _check_index(j, dim, f'{here}/j')
        value = [ZERO] * dim
        for key, coeff in entry['coeffs'].items():
            k = int(key)
            _check_index(k, dim, f'{here}/coeffs/{key}')
            value[k] += parse_rational(coeff, f'{here}/coeffs/{key}')
        if i == j:
            if any(value):
                raise SchemaError(f'{here}: [x, x] must vanish', pointer=here)
            continue
        key = (min(i, j), max(i, j))
        if key in brackets:
            raise SchemaError(f'{here}: bracket of {list(key)} given twice', pointer=here)
        brackets[key] = value if i < j else [-v for v in value]
    return LieAlgebra.from_brackets(names, brackets)

def parse_bialgebra(doc, pointer=''):
    """The structure-constant block of doc plus its "delta" list."""
    g = parse_algebra(doc, pointer)
    n = g.dim
    wedges = {}
    for t, entry in enumerate(doc['delta']):
        here = f'{pointer}/delta/{t}'
        i = entry['i']
        _check_index(i, n, f'{here}/i')
        if i in wedges:
            raise SchemaError(f'{here}: delta of basis element {i} given twice', pointer=here)
        terms = []
        for s, (j, k, coeff) in enumerate(entry['wedge']):
            _check_index(j, n, f'{here}/wedge/{s}/0')
            _check_index(k, n, f'{here}/wedge/{s}/1')
            if j == k:
                raise SchemaError(f'{here}/wedge/{s}: a wedge needs two distinct indices',
                                  pointer=f'{here}/wedge/{s}')
            terms.append((j, k, parse_rational(coeff, f'{here}/wedge/{s}/2')))
        wedges[i] = terms
    return LieBialgebra.from_wedges(g, wedges)

def parse_point_data(doc, pointer=''):
    g_dim, p_dim = doc['g_dim'], doc['p_dim']
    sigma = parse_matrix(doc['sigma'], p_dim, g_dim, f'{pointer}/sigma')
    pi_sharp = parse_matrix(doc['pi_sharp'], p_dim, p_dim, f'{pointer}/pi_sharp')
    return PointActionData(g_dim, p_dim, sigma, pi_sharp)

def parse_subspace(rows, dim, pointer=''):
    return Subspace.span([parse_vector(r, dim, f'{pointer}/{i}') for i, r in enumerate(rows)], dim)

def parse_representation(algebra, matrices, pointer=''):
    if len(matrices) != algebra.dim:
        raise SchemaError(f'{pointer}: {len(matrices)} matrices for a {algebra.dim}-dim algebra',
                          pointer=pointer)
    size = len(matrices[0]) if matrices else 0
    rho = tuple(parse_matrix(m, size, size, f'{pointer}/{i}') for i, m in enumerate(matrices))
    return Representation(algebra, size, rho)

def parse_algebra_json(text):
    """LieAlgebra, LieBialgebra or PointActionData from JSON text, by shape."""
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as err:
            raise InputFileError(f'input is not UTF-8: {err}')
    try:
        doc = json.loads(text)
    except ValueError as err:
        raise SchemaError(f'invalid JSON: {err}')
    return parse_document(doc)

def parse_document(doc):
    if isinstance(doc, dict) and 'g_dim' in doc:
        return parse_point_data(validate_document(doc, POINT_SCHEMA))
    if isinstance(doc, dict) and 'delta' in doc:
        return parse_bialgebra(validate_document(doc, BIALGEBRA_SCHEMA))
    return parse_algebra(validate_document(doc, ALGEBRA_SCHEMA))

def load_json_file(path):
    try:
        with open(path, 'rb') as fd:
            raw = fd.read()
    except OSError as err:
        raise InputFileError(f'could not read {path}: {err.strerror}', path=str(path))
    try:
        return json.loads(raw.decode('utf-8'))
    except (UnicodeDecodeError, ValueError) as err:
        raise SchemaError(f'{path} is not valid JSON: {err}', path=str(path))

############################ emitting ############################

def emit_vector(v):
    return [rat_to_json(a) for a in v]

def emit_matrix(rows):
    return [emit_vector(r) for r in rows]

def emit_algebra(g):
    brackets = []
    for (i, j), terms in sorted(g.nonzero_brackets.items()):
        brackets.append({'i': i, 'j': j, 'coeffs': {str(k): rat_to_json(v) for k, v in terms}})
    return {'dim': g.dim, 'basis': list(g.basis_names), 'brackets': brackets}

def emit_bialgebra(b):
    pairs = wedge_pairs(b.dim)
    delta = []
    for i, d in enumerate(b.delta):
        terms = [[j, k, rat_to_json(a)] for (j, k), a in zip(pairs, d) if a != 0]
        if terms:
            delta.append({'i': i, 'wedge': terms})
    return dict(emit_algebra(b.g), delta=delta)

def emit_point_data(d):
    return {'g_dim': d.g_dim, 'p_dim': d.p_dim,
            'sigma': emit_matrix(d.sigma), 'pi_sharp': emit_matrix(d.pi_sharp)}

def emit_subspace(s):
    return emit_matrix(s.rows)

def dumps(payload, indent=None):
    """Compact separators unless an indent is asked for."""
    if indent is None:
        return json.dumps(payload, separators=(',', ':'))
    return json.dumps(payload, indent=indent)

def format_combination(v, names):
    """A readable linear combination such as '2*e - 1/2*f'."""
    parts = []
    for i, a in sparse_items(v):
        coeff = rat_to_json(a)
        if coeff == 1:
            parts.append(f'+ {names[i]}')
        elif coeff == -1:
            parts.append(f'- {names[i]}')
        elif str(coeff).startswith('-'):
            parts.append(f'- {str(coeff)[1:]}*{names[i]}')
        else:
            parts.append(f'+ {coeff}*{names[i]}')
    if not parts:
        return '0'
    text = ' '.join(parts)
    return text[2:] if text.startswith('+ ') else '-' + text[2:]

def to_table(records, columns=None):
    """Aligned text table of a list of dicts."""
    import pandas as pd
    frame = pd.DataFrame.from_records(records, columns=columns)
    if frame.empty:
        return '(empty)'
    return frame.to_string(index=False)
