"""Matched pairs l = h + n with their mutual actions, the coisotropic double
h + h^perp of a Lie bialgebra, and the Lie algebra l_p at a vanishing point."""
from .utils import *
from .exactlin import Subspace, Frame, mat, kernel_basis, annihilator, intersect
from .liealg import (LieAlgebra, bracket_of, coadjoint, validate_jacobi, is_subalgebra,
                     induced_algebra)
from .bialg import dual_algebra, build_double
from .cohom import ce_complex, wedge_action, invariant_subcomplex, cohomology_dims


@dataclass(frozen=True)
class MatchedPair:
    """l = h + n, both legs written in their canonical RREF bases.

    act_h_on_n[i][b][a] is the n-coordinate b of x_i . xi_a and
    act_n_on_h[a][j][i] the h-coordinate j of xi_a . x_i, so that
    [x_i, xi_a] = -(xi_a . x_i) + x_i . xi_a.
    """
    l: LieAlgebra
    h: Subspace
    n: Subspace
    act_h_on_n: tuple
    act_n_on_h: tuple
    h_algebra: LieAlgebra
    n_algebra: LieAlgebra
    embedding: tuple = ()  # basis of l inside the double, for coisotropic doubles

    @property
    def dim(self):
        return self.l.dim


def split_matched_pair(l, h, n):
    for name, s in (('h', h), ('n', n)):
        if s.ambient_dim != l.dim:
            raise ShapeError(f'{name} lives in {s.ambient_dim}-space, not in the {l.dim}-dim algebra')
    if h.dim + n.dim != l.dim:
        raise NotDirectSumError(f'dimensions {h.dim} + {n.dim} do not add up to {l.dim}',
                                condition='dims_add')
    if intersect(h, n).dim != 0:
        raise NotDirectSumError('h and n intersect', condition='intersection_zero')
    for name, s in (('h', h), ('n', n)):
        if not is_subalgebra(l, s):
            raise NotSubalgebraError(f'{name} is not a subalgebra', which=name)
    k, m = h.dim, n.dim
    frame = Frame(list(h.rows) + list(n.rows), l.dim)
    mixed = [bracket_of(l, x, xi) for x in h.rows for xi in n.rows]
    coords = frame.coordinates_many(mixed)
    on_n = [[[ZERO] * m for _ in range(m)] for _ in range(k)]
    on_h = [[[ZERO] * k for _ in range(k)] for _ in range(m)]
    for t, coord in enumerate(coords):
        i, a = divmod(t, m)
        for j in range(k):
            on_h[a][j][i] = -coord[j]
        for b in range(m):
            on_n[i][b][a] = coord[k + b]
    mp = MatchedPair(l=l, h=h, n=n,
                     act_h_on_n=tuple(tuple(tuple(r) for r in x) for x in on_n),
                     act_n_on_h=tuple(tuple(tuple(r) for r in xi) for xi in on_h),
                     h_algebra=induced_algebra(l, h.rows),
                     n_algebra=induced_algebra(l, n.rows))
    log.debug(f'split a {l.dim}-dim algebra as {k} + {m}')
    return mp

def _combine(rows, coeffs, dim):
    out = zero_vec(dim)
    for c, r in zip(coeffs, rows):
        if c != 0:
            out = vec_add(out, vec_scale(c, r))
    return out

def verify_matched_pair(mp):
    """True iff the legs and the two actions reassemble the bracket of l."""
    l, h, n = mp.l, mp.h, mp.n
    dim = l.dim
    for i, j in itertools.combinations(range(h.dim), 2):
        if _combine(h.rows, mp.h_algebra.c[i][j], dim) != bracket_of(l, h.rows[i], h.rows[j]):
            return False
    for a, b in itertools.combinations(range(n.dim), 2):
        if _combine(n.rows, mp.n_algebra.c[a][b], dim) != bracket_of(l, n.rows[a], n.rows[b]):
            return False
    for i, x in enumerate(h.rows):
        for a, xi in enumerate(n.rows):
            xi_dot_x = _combine(h.rows, [mp.act_n_on_h[a][j][i] for j in range(h.dim)], dim)
            x_dot_xi = _combine(n.rows, [mp.act_h_on_n[i][b][a] for b in range(n.dim)], dim)
            if vec_sub(x_dot_xi, xi_dot_x) != bracket_of(l, x, xi):
                return False
    return True

def coisotropic_double(b, h):
    """The subalgebra h + h^perp of the double, split along its two legs."""
    g = b.g
    if h.ambient_dim != g.dim:
        raise ShapeError(f'subspace of {h.ambient_dim}-space in a {g.dim}-dim algebra')
    if not is_subalgebra(g, h):
        raise NotSubalgebraError('h is not a subalgebra of g', which='h')
    gstar = dual_algebra(b)
    hperp = annihilator(h)
    if not is_subalgebra(gstar, hperp):
        raise NotCoisotropicError('the annihilator of h is not closed under the dual bracket')
    dd = build_double(b)
    n = g.dim
    zero = zero_vec(n)
    rows = [tuple(x) + zero for x in h.rows] + [zero + tuple(xi) for xi in hperp.rows]
    l = induced_algebra(dd.d, rows)
    k = h.dim
    mp = split_matched_pair(l, Subspace.coordinate(l.dim, range(k)),
                            Subspace.coordinate(l.dim, range(k, l.dim)))
    return replace(mp, embedding=tuple(rows))

def _check_matrix(m, nrows, ncols, what):
    if len(m) != nrows or any(len(r) != ncols for r in m):
        raise ShapeError(f'{what} must be {nrows} x {ncols}')

def lp_at_vanishing_point(b, sigma, t_bracket, gp_action):
    """The Lie algebra on g_p + T*_pP at a point where the Poisson tensor vanishes.

    sigma: p x n rows (column j = sigma_{e_j}(p)); g_p is its kernel in the
    canonical basis. gp_action[i][r][s] is the coefficient r of x_i . alpha_s.
    Basis of the result: g_p first, then the dual basis of T*_pP.
    """
    g = b.g
    n = g.dim
    sigma = [vec(r) for r in sigma]
    p = len(sigma)
    _check_matrix(sigma, p, n, 'sigma')
    if t_bracket.dim != p:
        raise InconsistentInputError(f'the transversal bracket is {t_bracket.dim}-dim, T*_pP is {p}-dim')
    report = validate_jacobi(t_bracket)
    if not report.ok:
        raise JacobiError('the transversal bracket fails the Jacobi identity',
                          witnesses=report.witness_dicts(t_bracket.basis_names))
    gp = kernel_basis(mat(sigma, n)) if p else Subspace.full(n)
    k = gp.dim
    if len(gp_action) != k:
        raise InconsistentInputError(f'{len(gp_action)} action matrices for a {k}-dim g_p',
                                     dim_gp=k)
    action = [[vec(r) for r in m] for m in gp_action]
    for m in action:
        _check_matrix(m, p, p, 'gp_action matrices')
    gstar = dual_algebra(b)
    # phi(alpha_s) = sigma^T alpha_s is row s of sigma
    phi = sigma
    names = [f'x{i}' for i in range(k)] + list(t_bracket.basis_names)
    brackets = {}
    for i, j in itertools.combinations(range(k), 2):
        br = bracket_of(g, gp.rows[i], gp.rows[j])
        if not gp.contains(br):
            raise InconsistentInputError('g_p is not closed under the bracket',
                                         witnesses=[{'pair': [names[i], names[j]]}])
        brackets[(i, j)] = dict(enumerate(gp.coordinates(br)))
    for i in range(k):
        for s in range(p):
            g_side = vec_scale(-ONE, coadjoint(gstar, phi[s], gp.rows[i]))
            if not gp.contains(g_side):
                raise InconsistentInputError('ad*_phi(alpha) does not preserve g_p',
                                             witnesses=[{'pair': [names[i], names[k + s]]}])
            value = dict(enumerate(gp.coordinates(g_side)))
            value.update({k + r: action[i][r][s] for r in range(p)})
            brackets[(i, k + s)] = value
    for s, t in itertools.combinations(range(p), 2):
        brackets[(k + s, k + t)] = {k + r: v for r, v in enumerate(t_bracket.c[s][t])}
    lp = LieAlgebra.from_brackets(names, brackets)
    return lp.trust()

def homogeneous_vanishing_data(b, h):
    """(sigma, transversal bracket, isotropy action) of G/H at the identity
    coset, in the coordinates T*_pP = h^perp (canonical basis)."""
    g = b.g
    if not is_subalgebra(g, h):
        raise NotSubalgebraError('h is not a subalgebra of g', which='h')
    hperp = annihilator(h)
    gstar = dual_algebra(b)
    try:
        t_bracket = induced_algebra(gstar, hperp.rows)
    except NotSubalgebraError:
        raise NotCoisotropicError('the annihilator of h is not closed under the dual bracket')
    sigma = [tuple(r) for r in hperp.rows]
    action = []
    for x in h.rows:
        cols = [hperp.coordinates(coadjoint(g, x, xi)) for xi in hperp.rows]
        action.append(tuple(tuple(cols[s][r] for s in range(hperp.dim)) for r in range(hperp.dim)))
    return sigma, t_bracket, action

def n_side_invariant_cohomology(mp):
    """Cohomology of ((wedge n*)^h, d_n), h acting on n* contragrediently."""
    m = mp.n.dim
    complex_ = ce_complex(mp.n_algebra)
    actions = []
    for on_n in mp.act_h_on_n:
        op = [[-on_n[b][a] for b in range(m)] for a in range(m)]
        actions.append([wedge_action(op, m, k) for k in range(m + 1)])
    return cohomology_dims(invariant_subcomplex(complex_, actions))
