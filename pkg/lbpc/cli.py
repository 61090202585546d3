# Command line interface. Each subcommand builds a report (a JSON-able dict
# plus a text rendering); errors become a JSON diagnostic on stderr and an
# exit code: 1 when the mathematics says no, 2 when the input is malformed.

from .utils import *
from .io import (setup_preferences, load_preferences, load_json_file, validate_document,
                 parse_document, parse_algebra, parse_bialgebra, parse_point_data,
                 parse_subspace, parse_representation, emit_algebra, emit_subspace,
                 emit_matrix, format_combination, to_table, dumps,
                 ALGEBRA_SCHEMA, COHOMOLOGY_SCHEMA, RELATIVE_SCHEMA, MATCHED_SCHEMA,
                 MANIN_SCHEMA, CARTAN_SCHEMA, POINT_SCHEMA)

SUBCOMMANDS = ('validate', 'double', 'manin', 'cohomology', 'relative', 'fiber', 'matched',
               'flag', 'leaves', 'kostant')
TYPE_COMMANDS = ('flag', 'leaves', 'kostant')


@dataclass
class RunConfig:
    subcommand: str
    input_path: str = None
    type_name: str = None
    cartan_path: str = None
    output_format: str = 'table'
    json_indent: int = None

    def check(self):
        if self.subcommand not in SUBCOMMANDS:
            raise MalformedInput(f'unknown subcommand {self.subcommand!r}')
        if self.output_format not in ('table', 'json'):
            raise MalformedInput(f'unknown output format {self.output_format!r}')
        if self.subcommand in TYPE_COMMANDS:
            if (self.type_name is None) == (self.cartan_path is None):
                raise MalformedInput(f'{self.subcommand} needs exactly one of --type or --cartan')
        elif self.input_path is None:
            raise MalformedInput(f'{self.subcommand} needs an input file')


@dataclass
class Report:
    payload: dict
    text: str


def _status_text(payload):
    return '\n'.join(f'{k}: {v}' for k, v in payload.items())

def _bracket_table(g):
    records = [{'x': g.basis_names[i], 'y': g.basis_names[j],
                '[x, y]': format_combination(g.c[i][j], g.basis_names)}
               for i, j in sorted(g.nonzero_brackets)]
    return to_table(records, columns=['x', 'y', '[x, y]'])

def _dims_table(dims):
    return to_table([{'degree': k, 'dim': d} for k, d in enumerate(dims)], columns=['degree', 'dim'])

############################ subcommands ############################

def cmd_validate(doc):
    from .liealg import validate_jacobi
    from .bialg import LieBialgebra, dual_algebra, check_compatibility
    value = parse_document(doc)
    if isinstance(value, LieBialgebra):
        g = value.g
    else:
        g = value
    report = validate_jacobi(g)
    if not report.ok:
        raise JacobiError('the Jacobi identity fails', witnesses=report.witness_dicts(g.basis_names))
    payload = {'jacobi': 'ok'}
    if isinstance(value, LieBialgebra):
        gstar = dual_algebra(value)
        dual_report = validate_jacobi(gstar)
        if not dual_report.ok:
            raise JacobiError('the dual bracket fails the Jacobi identity',
                              witnesses=dual_report.witness_dicts(gstar.basis_names))
        payload['dual_jacobi'] = 'ok'
        compat = check_compatibility(value)
        if not compat.ok:
            names = list(g.basis_names) + list(gstar.basis_names)
            raise CompatibilityError('the cocycle condition fails',
                                     witnesses=compat.witness_dicts(names))
        payload['compatibility'] = 'ok'
    return Report(payload, _status_text(payload))

def cmd_double(doc):
    from .bialg import build_double
    b = parse_document(doc)
    if not hasattr(b, 'delta'):
        raise SchemaError('double needs a bialgebra (with a "delta" field)', pointer='')
    dd = build_double(b)
    payload = {'double': emit_algebra(dd.d)}
    return Report(payload, _bracket_table(dd.d))

def cmd_manin(doc):
    from .bialg import build_double, lagrangian_graph, manin_triple_failures, wedge_from_entries
    validate_document(doc, MANIN_SCHEMA)
    b = parse_bialgebra(doc['bialgebra'], '/bialgebra')
    dd = build_double(b)
    size = dd.d.dim
    if 'r' in doc:
        r = wedge_from_entries([(j, k, c) for j, k, c in doc['r']], b.dim)
        a = lagrangian_graph(dd, r)
    else:
        a = parse_subspace(doc['a'], size, '/a') if 'a' in doc else dd.g_part
    b_part = parse_subspace(doc['b'], size, '/b') if 'b' in doc else dd.gstar_part
    failures = manin_triple_failures(dd, a, b_part)
    if failures:
        raise NotManinTripleError('not a Manin triple', failed=failures)
    payload = {'manin_triple': 'ok', 'a': emit_subspace(a), 'b': emit_subspace(b_part)}
    return Report(payload, f'manin_triple: ok\ndim a: {a.dim}\ndim b: {b_part.dim}')

def cmd_cohomology(doc):
    from .cohom import ce_complex, cohomology_dims
    if isinstance(doc, dict) and 'algebra' in doc:
        validate_document(doc, COHOMOLOGY_SCHEMA)
        g = parse_algebra(doc['algebra'], '/algebra')
        m = None
        if 'representation' in doc:
            m = parse_representation(g, doc['representation'], '/representation')
    else:
        g, m = parse_algebra(validate_document(doc, ALGEBRA_SCHEMA)), None
    c = ce_complex(g, m)
    dims = cohomology_dims(c)
    payload = {'dims': dims, 'euler': c.euler_characteristic()}
    return Report(payload, _dims_table(dims))

def cmd_relative(doc):
    from .cohom import relative_cohomology
    validate_document(doc, RELATIVE_SCHEMA)
    l = parse_algebra(doc['algebra'], '/algebra')
    h = parse_subspace(doc['h'], l.dim, '/h')
    dims = relative_cohomology(l, h)
    return Report({'dims': dims}, _dims_table(dims))

def cmd_fiber(doc):
    from .fiber import anchor_kernel, isotropy_check, phi_embed
    d = parse_point_data(validate_document(doc, POINT_SCHEMA))
    result = anchor_kernel(d)
    image = phi_embed(d, result.lp)
    payload = {'dim_lp': result.dim, 'dim_gp': result.dim_gp, 'dim_tp': result.dim_tp,
               'dim_overlap': result.dim_overlap, 'isotropic': isotropy_check(d, result.lp),
               'dim_phi_image': image.dim, 'lp': emit_subspace(result.lp)}
    text = _status_text({k: v for k, v in payload.items() if k != 'lp'})
    return Report(payload, text)

def cmd_matched(doc):
    from .matched import (coisotropic_double, split_matched_pair, verify_matched_pair,
                          n_side_invariant_cohomology)
    from .cohom import relative_cohomology
    validate_document(doc, MATCHED_SCHEMA)
    if 'bialgebra' in doc:
        b = parse_bialgebra(doc['bialgebra'], '/bialgebra')
        mp = coisotropic_double(b, parse_subspace(doc['h'], b.dim, '/h'))
    else:
        l = parse_algebra(doc['algebra'], '/algebra')
        mp = split_matched_pair(l, parse_subspace(doc['h'], l.dim, '/h'),
                                parse_subspace(doc['n'], l.dim, '/n'))
    n_side = n_side_invariant_cohomology(mp)
    relative = relative_cohomology(mp.l, mp.h)
    payload = {'l': emit_algebra(mp.l),
               'h': emit_subspace(mp.h),
               'n': emit_subspace(mp.n),
               'act_h_on_n': [emit_matrix(m) for m in mp.act_h_on_n],
               'act_n_on_h': [emit_matrix(m) for m in mp.act_n_on_h],
               'verified': verify_matched_pair(mp),
               'n_side_cohomology': n_side,
               'relative_cohomology': relative}
    text = '\n'.join([_bracket_table(mp.l),
                      f'dim h: {mp.h.dim}', f'dim n: {mp.n.dim}',
                      f'verified: {payload["verified"]}',
                      f'n-side invariant cohomology: {n_side}',
                      f'relative cohomology: {relative}'])
    return Report(payload, text)

def _root_system(config, prefs):
    from .roots import build_root_system, root_system_for_type
    if config.type_name is not None:
        return root_system_for_type(config.type_name, cap=prefs['root_cap'])
    doc = validate_document(load_json_file(config.cartan_path), CARTAN_SCHEMA)
    if isinstance(doc, dict):
        return build_root_system(doc['cartan'], name=doc.get('name', 'custom'), cap=prefs['root_cap'])
    return build_root_system(doc, name='custom', cap=prefs['root_cap'])

def cmd_flag(rs, prefs):
    from .flag import flag_cohomology
    table = flag_cohomology(rs)
    payload = table.to_dict()
    return Report(payload, f'type: {table.type_name}\n{_dims_table(table.dims)}\ntotal: {table.total}')

def cmd_leaves(rs, prefs):
    from .roots import weyl_enumerate
    from .flag import bruhat_leaves
    leaves = bruhat_leaves(rs, weyl_enumerate(rs, cap=prefs['weyl_cap']))
    records = [{'length': w.length, 'dim': dim,
                'inversions': [list(rs.positive_roots[t]) for t in w.inversion_set]}
               for w, dim in leaves]
    payload = {'type': rs.name, 'count': len(records), 'leaves': records}
    text = to_table([{'length': r['length'], 'dim': r['dim'],
                      'inversions': ' '.join(''.join(map(str, b)) for b in r['inversions'])}
                     for r in records], columns=['length', 'dim', 'inversions'])
    return Report(payload, f'type: {rs.name}\n{text}\nleaves: {len(records)}')

def cmd_kostant(rs, prefs):
    from .roots import weyl_enumerate
    from .flag import kostant_check, kostant_representative
    report = kostant_check(rs)
    elements = weyl_enumerate(rs, cap=prefs['weyl_cap'])
    reps = [kostant_representative(rs, w, i) for i, w in enumerate(elements)]
    payload = {'type': rs.name,
               'dims': list(report.dims),
               'histogram': list(report.histogram),
               'classes': [{'degree': c.degree, 'weight': list(c.weight),
                            'weyl_index': c.weyl_index} for c in report.classes],
               'representatives': [{'weyl_index': r.weyl_index, 'degree': r.degree,
                                    'monomial': list(r.labels), 'ok': r.ok} for r in reps],
               'ok': report.ok and all(r.ok for r in reps)}
    if not payload['ok']:
        raise InconsistentInputError('Kostant check failed', report=payload)
    text = to_table([{'degree': c['degree'], 'weight': ' '.join(map(str, c['weight'])),
                      'weyl element': c['weyl_index']} for c in payload['classes']],
                    columns=['degree', 'weight', 'weyl element'])
    return Report(payload, f'type: {rs.name}\nH(n) dims: {payload["dims"]}\n{text}\nok: True')

FILE_COMMANDS = {'validate': cmd_validate,
                 'double': cmd_double,
                 'manin': cmd_manin,
                 'cohomology': cmd_cohomology,
                 'relative': cmd_relative,
                 'fiber': cmd_fiber,
                 'matched': cmd_matched}
ROOT_COMMANDS = {'flag': cmd_flag,
                 'leaves': cmd_leaves,
                 'kostant': cmd_kostant}

def execute(config, prefs=None):
    """The report for config; lbpc errors propagate."""
    prefs = dict(load_preferences() if prefs is None else prefs)
    config.check()
    if config.subcommand in ROOT_COMMANDS:
        return ROOT_COMMANDS[config.subcommand](_root_system(config, prefs), prefs)
    return FILE_COMMANDS[config.subcommand](load_json_file(config.input_path))

def run(config, prefs=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        report = execute(config, prefs)
    except MathematicalRejection as exc:
        err.write(dumps(exc.to_dict()) + '\n')
        return 1
    except MalformedInput as exc:
        err.write(dumps(exc.to_dict()) + '\n')
        return 2
    if config.output_format == 'json':
        out.write(dumps(report.payload, indent=config.json_indent) + '\n')
    else:
        out.write(report.text + '\n')
    return 0

def configure_logging(level):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    log.handlers = [handler]
    log.setLevel(level)
    log.propagate = False

def main(argv=None):
    from argparse import ArgumentParser
    parser = ArgumentParser(prog='lbpc',
                            description='Exact computations for Lie bialgebras, doubles and '
                                        'invariant Poisson cohomology of flag manifolds')
    parser.add_argument('subcommand', choices=SUBCOMMANDS)
    parser.add_argument('input', nargs='?', default=None,
                        help='JSON input file (algebra, bialgebra, point data or task document)')
    parser.add_argument('--type', dest='type_name', default=None,
                        help='built-in root system type for flag, leaves and kostant (A1, A2, A3, B2, B3, C3, G2)')
    parser.add_argument('--cartan', dest='cartan_path', default=None,
                        help='JSON file holding a Cartan matrix')
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument('--json', dest='output_format', action='store_const', const='json')
    fmt.add_argument('--table', dest='output_format', action='store_const', const='table')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    opts = parser.parse_args(argv)

    try:
        setup_preferences()
    except OSError as exc:
        log.debug(f'could not write preferences: {exc}')
    try:
        prefs = load_preferences()
    except LbpcError as exc:
        sys.stderr.write(dumps(exc.to_dict()) + '\n')
        return 2
    level = prefs['log_level']
    if opts.verbose:
        level = 'DEBUG' if opts.verbose > 1 else 'INFO'
    configure_logging(level)
    config = RunConfig(subcommand=opts.subcommand,
                       input_path=opts.input,
                       type_name=opts.type_name,
                       cartan_path=opts.cartan_path,
                       output_format=opts.output_format or prefs['output_format'],
                       json_indent=prefs['json_indent'])
    return run(config, prefs)

if __name__ == '__main__':
    sys.exit(main())
