"""Lie bialgebras, their duals and doubles, Manin triples and Lagrangian graphs.

Wedge coefficients always use the basis {e_j ^ e_k : j < k} in lexicographic
order (see `wedge_pairs`).
"""
from .utils import *
from .exactlin import Subspace, smat, dense_rows, intersect
from .liealg import (LieAlgebra, JacobiReport, bracket_of, coadjoint, validate_jacobi,
                     is_subalgebra)

def wedge_pairs(n):
    return list(itertools.combinations(range(n), 2))

def wedge_index(n):
    return {pair: t for t, pair in enumerate(wedge_pairs(n))}

def wedge2(u, v):
    """Coefficients of u ^ v; the (j, k) entry is u_j v_k - u_k v_j."""
    return tuple(u[j] * v[k] - u[k] * v[j] for j, k in wedge_pairs(len(u)))

def skew_matrix(w, n):
    """Dense skew matrix R with R[j][k] = w_(j,k) for j < k."""
    r = [[ZERO] * n for _ in range(n)]
    for (j, k), a in zip(wedge_pairs(n), w):
        r[j][k] = a
        r[k][j] = -a
    return r

def wedge_from_entries(entries, n):
    """Coefficient vector from [(j, k, coeff), ...]; j > k entries flip sign."""
    index = wedge_index(n)
    out = [ZERO] * len(index)
    for j, k, coeff in entries:
        if not (0 <= j < n and 0 <= k < n):
            raise ShapeError(f'wedge index ({j},{k}) out of range for dim {n}')
        if j == k:
            raise ShapeError(f'e_{j} ^ e_{j} is not a valid wedge term')
        coeff = rat(coeff)
        if j > k:
            j, k, coeff = k, j, -coeff
        out[index[(j, k)]] += coeff
    return tuple(out)


@dataclass(frozen=True)
class LieBialgebra:
    """A Lie algebra g with a cocommutator delta: g -> wedge^2 g, one wedge
    coefficient vector per basis element."""
    g: LieAlgebra
    delta: tuple

    def __post_init__(self):
        npairs = len(wedge_pairs(self.g.dim))
        if len(self.delta) != self.g.dim:
            raise ShapeError(f'delta has {len(self.delta)} entries for a {self.g.dim}-dim algebra')
        for i, d in enumerate(self.delta):
            if len(d) != npairs:
                raise ShapeError(f'delta(e_{i}) has {len(d)} wedge coefficients, expected {npairs}')

    @classmethod
    def from_wedges(cls, g, wedges):
        """wedges: {i: [(j, k, coeff), ...]}; missing basis elements have delta = 0."""
        delta = []
        for i in range(g.dim):
            delta.append(wedge_from_entries(wedges.get(i, []), g.dim))
        return cls(g, tuple(delta))

    @classmethod
    def zero(cls, g):
        return cls.from_wedges(g, {})

    @property
    def dim(self):
        return self.g.dim


@dataclass(frozen=True)
class DoubleLieAlgebra:
    """d = g + g* with the bracket of the double and the hyperbolic pairing."""
    d: LieAlgebra
    g_part: Subspace
    gstar_part: Subspace
    pairing: object  # 2n x 2n DomainMatrix
    n: int

    @property
    def pairing_rows(self):
        return dense_rows(self.pairing)


def dual_names(g):
    return [f'{name}*' for name in g.basis_names]

def dual_algebra(b):
    """The bracket on g* dual to delta: ([xi, eta], x) = (delta(x), xi ^ eta).

    The result is marked trusted only when it passes the Jacobi identity; a
    failure is logged and left to the caller to act on.
    """
    n = b.dim
    brackets = {}
    for t, (j, k) in enumerate(wedge_pairs(n)):
        coeffs = {x: b.delta[x][t] for x in range(n) if b.delta[x][t] != 0}
        if coeffs:
            brackets[(j, k)] = coeffs
    gstar = LieAlgebra.from_brackets(dual_names(b.g), brackets)
    report = validate_jacobi(gstar)
    if not report.ok:
        log.warning(f'dual bracket fails the Jacobi identity on {len(report.witnesses)} triples')
        return gstar
    return LieAlgebra(gstar.dim, gstar.basis_names, gstar.c, trusted=True)

def dual_bialgebra(b):
    """(g*, delta_*) where delta_* is the transpose of the bracket of g."""
    n = b.dim
    gstar = dual_algebra(b)
    delta = tuple(tuple(b.g.c[j][k][x] for j, k in wedge_pairs(n)) for x in range(n))
    return LieBialgebra(gstar, delta)

def double_pairing(n):
    """Gram matrix of <x1 + xi1, x2 + xi2> = xi2(x1) + xi1(x2) on g + g*."""
    entries = {}
    for i in range(n):
        entries.setdefault(i, {})[n + i] = ONE
        entries.setdefault(n + i, {})[i] = ONE
    return smat(entries, 2 * n, 2 * n)

def assemble_double(b, gstar=None):
    """The bracket on g + g*, without checking the Jacobi identity.

    [x1 + xi1, x2 + xi2] = [x1, x2] + ad*_xi1 x2 - ad*_xi2 x1
                           + [xi1, xi2] + ad*_x1 xi2 - ad*_x2 xi1
    """
    g = b.g
    n = g.dim
    if gstar is None:
        gstar = dual_algebra(b)
    brackets = {}
    for (i, j), terms in g.nonzero_brackets.items():
        brackets[(i, j)] = {k: v for k, v in terms}
    for (a, c), terms in gstar.nonzero_brackets.items():
        brackets[(n + a, n + c)] = {n + k: v for k, v in terms}
    for i in range(n):
        e_i = unit_vec(n, i)
        for a in range(n):
            xi_a = unit_vec(n, a)
            g_side = vec_scale(-ONE, coadjoint(gstar, xi_a, e_i))
            dual_side = coadjoint(g, e_i, xi_a)
            value = {k: v for k, v in enumerate(g_side) if v != 0}
            value.update({n + k: v for k, v in enumerate(dual_side) if v != 0})
            if value:
                brackets[(i, n + a)] = value
    return LieAlgebra.from_brackets(list(g.basis_names) + list(gstar.basis_names), brackets)

def pairing_is_invariant(alg, gram_rows):
    """<[z, a], b> + <a, [z, b]> = 0 for all basis z, a, b."""
    n = alg.dim
    for z in range(n):
        for a in range(n):
            za = alg.c[z][a]
            for bb in range(a, n):
                zb = alg.c[z][bb]
                lhs = sum((za[k] * gram_rows[k][bb] for k in range(n)), ZERO)
                lhs += sum((gram_rows[a][k] * zb[k] for k in range(n)), ZERO)
                if lhs != 0:
                    return False
    return True

def build_double(b):
    """The double Lie algebra of b; CompatibilityError (with the failing
    triples of the double) when b is not a Lie bialgebra."""
    n = b.dim
    gstar = dual_algebra(b)
    d = assemble_double(b, gstar)
    report = validate_jacobi(d)
    if not report.ok:
        raise CompatibilityError('the double fails the Jacobi identity',
                                 witnesses=report.witness_dicts(d.basis_names))
    pairing = double_pairing(n)
    if not pairing_is_invariant(d, dense_rows(pairing)):
        raise CompatibilityError('the pairing of the double is not ad-invariant')
    d = LieAlgebra(d.dim, d.basis_names, d.c, trusted=True)
    log.debug(f'built a {2 * n}-dim double')
    return DoubleLieAlgebra(d=d,
                            g_part=Subspace.coordinate(2 * n, range(n)),
                            gstar_part=Subspace.coordinate(2 * n, range(n, 2 * n)),
                            pairing=pairing,
                            n=n)

def check_compatibility(b):
    """Check, for all basis x, y of g and xi of g*,

        ad*_xi [x, y] = [ad*_xi x, y] + [x, ad*_xi y] + ad*_(ad*_y xi) x - ad*_(ad*_x xi) y

    Witnesses are (x, y, n + xi) indexed in the basis of the double.
    """
    g = b.g
    n = g.dim
    gstar = dual_algebra(b)
    if not g.trusted and not validate_jacobi(g).ok:
        log.warning('check_compatibility called on a g that fails the Jacobi identity')
    if not gstar.trusted:
        log.warning('check_compatibility called with a dual bracket that is not a Lie bracket')
    units = [unit_vec(n, i) for i in range(n)]
    # ad*_xi x (in g) and ad*_x xi (in g*) for basis elements
    act_dual_on_g = [[coadjoint(gstar, units[a], units[i]) for i in range(n)] for a in range(n)]
    act_g_on_dual = [[coadjoint(g, units[i], units[a]) for a in range(n)] for i in range(n)]
    witnesses = []
    for x, y in itertools.combinations(range(n), 2):
        for a in range(n):
            lhs = coadjoint(gstar, units[a], g.c[x][y])
            rhs = vec_add(bracket_of(g, act_dual_on_g[a][x], units[y]),
                          bracket_of(g, units[x], act_dual_on_g[a][y]))
            rhs = vec_add(rhs, coadjoint(gstar, act_g_on_dual[y][a], units[x]))
            rhs = vec_sub(rhs, coadjoint(gstar, act_g_on_dual[x][a], units[y]))
            residual = vec_sub(lhs, rhs)
            if not is_zero_vec(residual):
                witnesses.append((x, y, n + a, residual))
    return JacobiReport(ok=not witnesses, witnesses=tuple(witnesses))

def is_isotropic(s, gram_rows):
    for u in s.rows:
        for v in s.rows:
            total = ZERO
            for i, a in sparse_items(u):
                total += a * sum((gram_rows[i][j] * c for j, c in sparse_items(v)), ZERO)
            if total != 0:
                return False
    return True

def manin_triple_failures(dd, a, b):
    """Names of the Manin triple conditions that (dd, a, b) violates."""
    for s in (a, b):
        if s.ambient_dim != dd.d.dim:
            raise ShapeError(f'subspace of {s.ambient_dim}-space in a {dd.d.dim}-dim double')
    failures = []
    if a.dim + b.dim != dd.d.dim or intersect(a, b).dim != 0:
        failures.append('complementary')
    gram = dd.pairing_rows
    for name, s in (('a', a), ('b', b)):
        if not is_isotropic(s, gram):
            failures.append(f'{name}_isotropic')
        if not is_subalgebra(dd.d, s):
            failures.append(f'{name}_subalgebra')
    return failures

def check_manin_triple(dd, a, b):
    """True iff a and b are complementary isotropic subalgebras of the double."""
    return not manin_triple_failures(dd, a, b)

def lagrangian_graph(dd, r):
    """{x - x _| r : x in g} for r in wedge^2 g*, given as wedge coefficients.

    Always isotropic and transversal to g*; whether it is a subalgebra is left
    to is_subalgebra.
    """
    n = dd.n
    r = vec(r)
    if len(r) != len(wedge_pairs(n)):
        raise ShapeError(f'r has {len(r)} wedge coefficients, expected {len(wedge_pairs(n))}')
    rm = skew_matrix(r, n)
    rows = []
    for i in range(n):
        rows.append(unit_vec(n, i) + tuple(-rm[i][m] for m in range(n)))
    return Subspace.span(rows, 2 * n)

def make_coboundary(g, r):
    """(g, delta) with delta(x) = ad_x r = sum r_jk ([x, e_j] ^ e_k + e_j ^ [x, e_k]).

    delta is always a cocycle; whether the dual bracket is a Lie bracket depends
    on r, so run check_compatibility / build_double on the result.
    """
    n = g.dim
    r = vec(r)
    if len(r) != len(wedge_pairs(n)):
        raise ShapeError(f'r has {len(r)} wedge coefficients, expected {len(wedge_pairs(n))}')
    units = [unit_vec(n, i) for i in range(n)]
    terms = [(j, k, a) for (j, k), a in zip(wedge_pairs(n), r) if a != 0]
    delta = []
    for x in range(n):
        total = zero_vec(len(r))
        for j, k, a in terms:
            w = vec_add(wedge2(g.c[x][j], units[k]), wedge2(units[j], g.c[x][k]))
            total = vec_add(total, vec_scale(a, w))
        delta.append(total)
    return LieBialgebra(g, tuple(delta))
