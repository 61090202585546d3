"""Chevalley-Eilenberg cochain complexes, invariant subcomplexes and relative
Lie algebra cohomology.

Degree-k cochains with values in a module M are indexed by (I, a) where I is a
sorted k-subset of the basis (ranked lexicographically, see `wedge_basis`) and
a a basis index of M; the basis cochain (I, a) takes the value m_a on e_I.
Differentials are sparse DomainMatrices of shape (dim C^{k+1}, dim C^k).
"""
from bisect import bisect_left

from .utils import *
from .exactlin import (Subspace, smat, zeros, nonzeros, matmul, transpose, rank,
                       kernel_basis, stack, submatrix)
from .liealg import LieAlgebra, is_subalgebra, induced_algebra, coadjoint_matrix
from .exactlin import dense_rows

def wedge_basis(n, k):
    return list(itertools.combinations(range(n), k))

def wedge_label(names, subset):
    if not subset:
        return '1'
    return '^'.join(f'{names[i]}*' for i in subset)


@dataclass(frozen=True)
class CochainSpace:
    dim: int
    labels: tuple = ()


class CochainComplex:
    """Graded spaces C^0..C^N with differentials d_k: C^k -> C^{k+1}.

    d_{k+1} d_k = 0 is verified on construction unless check=False, which is
    only used for intermediate complexes that get restricted afterwards.
    """
    def __init__(self, degrees, diffs, check=True):
        self.degrees = tuple(degrees)
        self.diffs = tuple(diffs)
        if len(self.diffs) != max(len(self.degrees) - 1, 0):
            raise ShapeError(f'{len(self.diffs)} differentials for {len(self.degrees)} degrees')
        for k, d in enumerate(self.diffs):
            expected = (self.degrees[k + 1].dim, self.degrees[k].dim)
            if tuple(d.shape) != expected:
                raise ShapeError(f'd_{k} has shape {tuple(d.shape)}, expected {expected}')
        self._ranks = {}
        if check:
            self.verify()

    def verify(self):
        for k in range(len(self.diffs) - 1):
            if nonzeros(matmul(self.diffs[k + 1], self.diffs[k])):
                raise ComplexError(f'd_{k + 1} d_{k} is not zero', degree=k)

    @property
    def dims(self):
        return [s.dim for s in self.degrees]

    def rank(self, k):
        """Rank of d_k, zero outside the complex."""
        if k < 0 or k >= len(self.diffs):
            return 0
        if k not in self._ranks:
            self._ranks[k] = rank(self.diffs[k])
        return self._ranks[k]

    def euler_characteristic(self):
        return sum((-1) ** k * d for k, d in enumerate(self.dims))


@dataclass(frozen=True)
class Representation:
    """rho[i] is the space_dim x space_dim matrix (dense rows) of the i-th basis element."""
    algebra: LieAlgebra
    space_dim: int
    rho: tuple

    def __post_init__(self):
        if len(self.rho) != self.algebra.dim:
            raise ShapeError(f'{len(self.rho)} matrices for a {self.algebra.dim}-dim algebra')
        for m in self.rho:
            if len(m) != self.space_dim or any(len(row) != self.space_dim for row in m):
                raise ShapeError(f'representation matrices must be {self.space_dim} x {self.space_dim}')

    @classmethod
    def from_matrices(cls, algebra, matrices):
        rho = tuple(tuple(vec(row) for row in m) for m in matrices)
        dim = len(rho[0]) if rho else 0
        return cls(algebra, dim, rho)

    @classmethod
    def trivial(cls, algebra, space_dim=1):
        zero = tuple(zero_vec(space_dim) for _ in range(space_dim))
        return cls(algebra, space_dim, tuple(zero for _ in range(algebra.dim)))

    @classmethod
    def adjoint(cls, algebra):
        n = algebra.dim
        return cls.from_matrices(algebra, [dense_rows(algebra.adjoint_matrix(unit_vec(n, i)))
                                           for i in range(n)])

    @classmethod
    def coadjoint(cls, algebra):
        n = algebra.dim
        return cls.from_matrices(algebra, [dense_rows(coadjoint_matrix(algebra, unit_vec(n, i)))
                                           for i in range(n)])

    def matrix_of(self, x):
        m = self.space_dim
        out = [[ZERO] * m for _ in range(m)]
        for i, a in sparse_items(x):
            for r in range(m):
                for s in range(m):
                    out[r][s] += a * self.rho[i][r][s]
        return out


def _matprod(a, b):
    m = len(a)
    return [[sum((a[r][t] * b[t][s] for t in range(m)), ZERO) for s in range(m)] for r in range(m)]

def validate_representation(rep):
    """rho([e_i, e_j]) = rho_i rho_j - rho_j rho_i on all basis pairs."""
    g = rep.algebra
    for i, j in itertools.combinations(range(g.dim), 2):
        lhs = rep.matrix_of(g.c[i][j])
        ab = _matprod(rep.rho[i], rep.rho[j])
        ba = _matprod(rep.rho[j], rep.rho[i])
        rhs = [[ab[r][s] - ba[r][s] for s in range(rep.space_dim)] for r in range(rep.space_dim)]
        if lhs != rhs:
            raise RepresentationError('rho does not preserve the bracket',
                                      pair=[g.basis_names[i], g.basis_names[j]])


def _ce_differential(n, k, brackets, rho_nz, mdim):
    """d_k for structure constants `brackets` ({(i, j): [(l, c)], i < j})."""
    source = {I: t for t, I in enumerate(wedge_basis(n, k))}
    target = wedge_basis(n, k + 1)
    entries = {}

    def add(r, c, v):
        row = entries.setdefault(r, {})
        row[c] = row.get(c, ZERO) + v

    for r, J in enumerate(target):
        if rho_nz:
            for i, x in enumerate(J):
                col = source[J[:i] + J[i + 1:]]
                sign = ONE if i % 2 == 0 else -ONE
                for a, b, v in rho_nz[x]:
                    add(r * mdim + a, col * mdim + b, sign * v)
        for p in range(len(J)):
            for q in range(p + 1, len(J)):
                terms = brackets.get((J[p], J[q]))
                if not terms:
                    continue
                sign = ONE if (p + q) % 2 == 0 else -ONE
                rest = J[:p] + J[p + 1:q] + J[q + 1:]
                for l, v in terms:
                    t = bisect_left(rest, l)
                    if t < len(rest) and rest[t] == l:
                        continue
                    col = source[rest[:t] + (l,) + rest[t:]]
                    s = sign if t % 2 == 0 else -sign
                    for a in range(mdim):
                        add(r * mdim + a, col * mdim + a, s * v)
    return smat(entries, len(target) * mdim, len(source) * mdim)

def _degree_spaces(names, mdim, module_names=None):
    n = len(names)
    out = []
    for k in range(n + 1):
        labels = []
        for I in wedge_basis(n, k):
            base = wedge_label(names, I)
            if mdim == 1 and module_names is None:
                labels.append(base)
            else:
                labels.extend(f'{base}(x){module_names[a] if module_names else f"m{a}"}'
                              for a in range(mdim))
        out.append(CochainSpace(len(labels), tuple(labels)))
    return out

def ce_complex(g, m=None):
    """The complex (wedge^k g* (x) M, d) with

    (df)(x_0..x_k) = sum_i (-1)^i x_i . f(..^x_i..)
                     + sum_{i<j} (-1)^{i+j} f([x_i, x_j], ..^x_i..^x_j..)

    m=None means trivial one-dimensional coefficients.
    """
    n = g.dim
    rho_nz = None
    mdim = 1
    if m is not None:
        if m.algebra.dim != n or m.algebra.c != g.c:
            raise InconsistentInputError('the representation belongs to a different algebra')
        validate_representation(m)
        mdim = m.space_dim
        rho_nz = [[(a, b, m.rho[x][a][b]) for a in range(mdim) for b in range(mdim)
                   if m.rho[x][a][b] != 0] for x in range(n)]
        if not any(rho_nz):
            rho_nz = None
    degrees = _degree_spaces(g.basis_names, mdim, None if m is None else [f'm{a}' for a in range(mdim)])
    diffs = [_ce_differential(n, k, g.nonzero_brackets, rho_nz, mdim) for k in range(n)]
    log.debug(f'CE complex of a {n}-dim algebra, total dimension {sum(s.dim for s in degrees)}')
    return CochainComplex(degrees, diffs)

def cohomology_dims(c):
    """dim H^k = dim C^k - rank d_k - rank d_{k-1}."""
    return [s.dim - c.rank(k) - c.rank(k - 1) for k, s in enumerate(c.degrees)]

def wedge_action(op, n, k):
    """Extension of an operator on V* to wedge^k V* as a derivation.

    op[a][b] is the coefficient of e^a in op(e^b).
    """
    basis = wedge_basis(n, k)
    index = {I: t for t, I in enumerate(basis)}
    columns = [[(a, rat(op[a][b])) for a in range(n) if op[a][b] != 0] for b in range(n)]
    entries = {}
    for col, I in enumerate(basis):
        for t, b in enumerate(I):
            rest = I[:t] + I[t + 1:]
            for a, v in columns[b]:
                s = bisect_left(rest, a)
                if s < len(rest) and rest[s] == a:
                    continue
                J = rest[:s] + (a,) + rest[s:]
                sign = ONE if (t - s) % 2 == 0 else -ONE
                row = entries.setdefault(index[J], {})
                row[col] = row.get(col, ZERO) + sign * v
    return smat(entries, len(basis), len(basis))

def restrict_complex(c, subspaces):
    """The complex on the given subspaces (one per degree), with d written in
    their canonical bases. InvariantSubspaceError names the first degree whose
    image leaves the next subspace."""
    if len(subspaces) != len(c.degrees):
        raise ShapeError(f'{len(subspaces)} subspaces for {len(c.degrees)} degrees')
    for k, (s, space) in enumerate(zip(subspaces, c.degrees)):
        if s.ambient_dim != space.dim:
            raise ShapeError(f'subspace in degree {k} lives in {s.ambient_dim}-space, not {space.dim}')
    diffs = []
    for k, d in enumerate(c.diffs):
        src, dst = subspaces[k], subspaces[k + 1]
        if src.dim == 0:
            diffs.append(zeros(dst.dim, 0))
            continue
        images = nonzeros(matmul(src.basis, transpose(d)))
        coords = {}
        for r, row in images.items():
            picked = {t: row[p] for t, p in enumerate(dst.pivots) if p in row}
            if picked:
                coords[r] = picked
        rebuilt = nonzeros(matmul(smat(coords, src.dim, dst.dim), dst.basis)) if dst.dim else {}
        if rebuilt != images:
            raise InvariantSubspaceError(f'd_{k} does not preserve the subspace', degree=k)
        diffs.append(transpose(smat(coords, src.dim, dst.dim)))
    degrees = [CochainSpace(s.dim, tuple(f'c{k}_{i}' for i in range(s.dim)))
               for k, s in enumerate(subspaces)]
    return CochainComplex(degrees, diffs)

def invariant_subcomplex(c, h_action):
    """Subcomplex of simultaneous kernels.

    h_action[i][k] is the matrix of the i-th element of h on C^k.
    """
    subspaces = []
    for k, space in enumerate(c.degrees):
        blocks = []
        for i, per_degree in enumerate(h_action):
            if len(per_degree) != len(c.degrees):
                raise ShapeError(f'h_action[{i}] covers {len(per_degree)} degrees, expected {len(c.degrees)}')
            m = per_degree[k]
            if tuple(m.shape) != (space.dim, space.dim):
                raise ShapeError(f'h_action[{i}][{k}] has shape {tuple(m.shape)}, expected {(space.dim, space.dim)}')
            blocks.append(m)
        if blocks and space.dim:
            subspaces.append(kernel_basis(stack(blocks, space.dim)))
        else:
            subspaces.append(Subspace.full(space.dim))
    log.debug(f'invariant cochain dims {[s.dim for s in subspaces]}')
    return restrict_complex(c, subspaces)

def weight_graded_cohomology(c, weights):
    """{(k, weight): dim} for the non-zero weight pieces of the cohomology.

    weights[k][t] is the weight of the t-th basis cochain of degree k; d must
    preserve weights.
    """
    groups = []
    for k, space in enumerate(c.degrees):
        if len(weights[k]) != space.dim:
            raise ShapeError(f'{len(weights[k])} weights for a {space.dim}-dim degree {k}')
        by_weight = {}
        for t, w in enumerate(weights[k]):
            by_weight.setdefault(w, []).append(t)
        groups.append(by_weight)
    for k, d in enumerate(c.diffs):
        for r, row in nonzeros(d).items():
            for col in row:
                if weights[k + 1][r] != weights[k][col]:
                    raise InvariantSubspaceError(f'd_{k} does not preserve weights', degree=k)

    def piece_rank(k, w):
        if k < 0 or k >= len(c.diffs):
            return 0
        rows = groups[k + 1].get(w, [])
        cols = groups[k].get(w, [])
        if not rows or not cols:
            return 0
        return rank(submatrix(c.diffs[k], rows, cols))

    out = {}
    for k, by_weight in enumerate(groups):
        for w, members in by_weight.items():
            dim = len(members) - piece_rank(k, w) - piece_rank(k - 1, w)
            if dim:
                out[(k, w)] = dim
    return out

def relative_cohomology(l, h):
    """H(l, h): cohomology of the cochains on l that vanish on h and are
    h-invariant, computed on wedge (l/h)* in a basis adapted to h.

    Degrees run from 0 to dim l - dim h; the higher ones vanish and are not listed.
    """
    if h.ambient_dim != l.dim:
        raise ShapeError(f'subspace of {h.ambient_dim}-space in a {l.dim}-dim algebra')
    if not is_subalgebra(l, h):
        raise NotSubalgebraError('h is not a subalgebra of l')
    n, k = l.dim, h.dim
    pivots = set(h.pivots)
    complement = [j for j in range(n) if j not in pivots]
    adapted = induced_algebra(l, list(h.rows) + [unit_vec(n, j) for j in complement])
    m = n - k
    # brackets of l/h, projected along h
    quotient = {}
    for (i, j), terms in adapted.nonzero_brackets.items():
        if i >= k and j >= k:
            proj = [(t - k, v) for t, v in terms if t >= k]
            if proj:
                quotient[(i - k, j - k)] = proj
    names = [adapted.basis_names[k + a] for a in range(m)]
    degrees = _degree_spaces(names, 1)
    diffs = [_ce_differential(m, p, quotient, None, 1) for p in range(m)]
    raw = CochainComplex(degrees, diffs, check=False)
    actions = []
    for x in range(k):
        op = [[-adapted.c[x][k + a][k + b] for b in range(m)] for a in range(m)]
        actions.append([wedge_action(op, m, p) for p in range(m + 1)])
    basic = invariant_subcomplex(raw, actions)
    return cohomology_dims(basic)
