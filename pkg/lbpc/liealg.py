"""Finite dimensional Lie algebras given by structure constants."""
from .utils import *
from .exactlin import Frame, smat

@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants c[i][j] = [e_i, e_j] as a vector of length dim.

    Construction never checks the Jacobi identity, so intentionally broken
    algebras can be built; `trust()` returns a validated copy.
    """
    dim: int
    basis_names: tuple
    c: tuple
    trusted: bool = False

    def __post_init__(self):
        if len(self.basis_names) != self.dim:
            raise ShapeError(f'{len(self.basis_names)} basis names for a {self.dim}-dim algebra')
        if len(self.c) != self.dim or any(len(row) != self.dim for row in self.c):
            raise ShapeError('structure constant table is not dim x dim')
        for i in range(self.dim):
            for j in range(self.dim):
                if len(self.c[i][j]) != self.dim:
                    raise ShapeError(f'bracket [{i},{j}] has the wrong length')
                if any(a != -b for a, b in zip(self.c[i][j], self.c[j][i])):
                    raise ShapeError(f'structure constants are not antisymmetric at ({i},{j})')

    @classmethod
    def from_brackets(cls, basis_names, brackets, trusted=False):
        """Build from {(i, j): vector or {k: coeff}}; omitted pairs are zero and
        (j, i) is filled in by antisymmetry."""
        n = len(basis_names)
        table = [[list(zero_vec(n)) for _ in range(n)] for _ in range(n)]
        for (i, j), value in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ShapeError(f'bracket index ({i},{j}) out of range for dim {n}')
            if isinstance(value, dict):
                v = list(zero_vec(n))
                for k, coeff in value.items():
                    if not 0 <= k < n:
                        raise ShapeError(f'bracket [{i},{j}] has component index {k} out of range')
                    v[k] = rat(coeff)
            else:
                v = list(vec(value))
                if len(v) != n:
                    raise ShapeError(f'bracket [{i},{j}] has length {len(v)}, expected {n}')
            if i == j:
                if any(a != 0 for a in v):
                    raise ShapeError(f'[e_{i}, e_{i}] must vanish')
                continue
            table[i][j] = v
            table[j][i] = [-a for a in v]
        c = tuple(tuple(tuple(table[i][j]) for j in range(n)) for i in range(n))
        return cls(n, tuple(basis_names), c, trusted)

    @classmethod
    def abelian(cls, n, basis_names=None):
        if basis_names is None:
            basis_names = [f'x{i}' for i in range(n)]
        return cls.from_brackets(basis_names, {}, trusted=True)

    @cached_property
    def nonzero_brackets(self):
        """{(i, j): [(k, c_ijk), ...]} for i < j, non-zero terms only."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                terms = sparse_items(self.c[i][j])
                if terms:
                    out[(i, j)] = terms
        return out

    def bracket(self, x, y):
        return bracket_of(self, x, y)

    def adjoint_matrix(self, x):
        """Matrix of ad_x; column j is [x, e_j]."""
        x = vec(x)
        cols = [self.bracket(x, unit_vec(self.dim, j)) for j in range(self.dim)]
        return smat({i: {j: cols[j][i] for j in range(self.dim)} for i in range(self.dim)},
                    self.dim, self.dim)

    def is_abelian(self):
        return not self.nonzero_brackets

    def trust(self):
        report = validate_jacobi(self)
        if not report.ok:
            raise JacobiError('the Jacobi identity fails', witnesses=report.witness_dicts(self.basis_names))
        return LieAlgebra(self.dim, self.basis_names, self.c, trusted=True)


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    witnesses: tuple = ()  # (i, j, k, residual vector)

    def witness_dicts(self, names=None):
        out = []
        for i, j, k, residual in self.witnesses:
            triple = [i, j, k] if names is None else [names[i], names[j], names[k]]
            out.append({'triple': triple, 'residual': [rat_to_json(a) for a in residual]})
        return out


def _check_len(g, *vectors):
    for v in vectors:
        if len(v) != g.dim:
            raise ShapeError(f'vector of length {len(v)} for a {g.dim}-dim algebra')

def bracket_of(g, x, y):
    """Bilinear extension of the structure constants."""
    _check_len(g, x, y)
    out = [ZERO] * g.dim
    xs = sparse_items(x)
    ys = sparse_items(y)
    for i, a in xs:
        for j, b in ys:
            if i == j:
                continue
            lo, hi, sign = (i, j, ONE) if i < j else (j, i, -ONE)
            for k, ck in g.nonzero_brackets.get((lo, hi), ()):
                out[k] += sign * a * b * ck
    return tuple(out)

def _bracket_with_basis(g, v, k):
    """[v, e_k] for a vector v."""
    out = [ZERO] * g.dim
    for i, a in sparse_items(v):
        if i == k:
            continue
        lo, hi, sign = (i, k, ONE) if i < k else (k, i, -ONE)
        for l, cl in g.nonzero_brackets.get((lo, hi), ()):
            out[l] += sign * a * cl
    return out

def validate_jacobi(g):
    """Check [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on every basis triple i < j < k."""
    witnesses = []
    n = g.dim
    for i, j, k in itertools.combinations(range(n), 3):
        total = [ZERO] * n
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            term = _bracket_with_basis(g, g.c[a][b], c)
            total = [s + t for s, t in zip(total, term)]
        if any(t != 0 for t in total):
            witnesses.append((i, j, k, tuple(total)))
    report = JacobiReport(ok=not witnesses, witnesses=tuple(witnesses))
    if witnesses:
        log.debug(f'Jacobi fails on {len(witnesses)} of the basis triples')
    return report

def coadjoint(g, x, xi):
    """ad*_x xi, defined by (ad*_x xi)(y) = -xi([x, y])."""
    _check_len(g, x, xi)
    x = vec(x)
    return tuple(-vec_dot(xi, _bracket_with_basis(g, x, j)) for j in range(g.dim))

def coadjoint_matrix(g, x):
    """Matrix of xi -> ad*_x xi in the dual basis (the negative transpose of ad_x)."""
    x = vec(x)
    entries = {}
    for j in range(g.dim):
        col = _bracket_with_basis(g, x, j)
        for i, a in enumerate(col):
            if a != 0:
                entries.setdefault(j, {})[i] = -a
    return smat(entries, g.dim, g.dim)

def is_subalgebra(g, s):
    """True iff the brackets of all pairs of basis vectors of s stay in s."""
    if s.ambient_dim != g.dim:
        raise ShapeError(f'subspace of {s.ambient_dim}-space in a {g.dim}-dim algebra')
    for a, b in itertools.combinations(s.rows, 2):
        if not s.contains(bracket_of(g, a, b)):
            return False
    return True

def induced_algebra(g, vectors, basis_names=None):
    """Structure constants of span(vectors) in the basis `vectors`.

    With dim g independent vectors this is g written in a new basis. Raises
    NotSubalgebraError when the span is not closed under the bracket.
    """
    frame = Frame(vectors, g.dim)
    k = len(frame)
    if basis_names is None:
        basis_names = [_name_for(g, v, t) for t, v in enumerate(frame.vectors)]
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    products = [bracket_of(g, frame.vectors[i], frame.vectors[j]) for i, j in pairs]
    try:
        coords = frame.coordinates_many(products)
    except ShapeError:
        raise NotSubalgebraError('the span is not closed under the bracket')
    brackets = {pair: coord for pair, coord in zip(pairs, coords) if any(a != 0 for a in coord)}
    return LieAlgebra.from_brackets(basis_names, brackets, trusted=g.trusted)

def _name_for(g, v, t):
    support = sparse_items(v)
    if len(support) == 1 and support[0][1] == 1:
        return g.basis_names[support[0][0]]
    return f'u{t}'

def direct_sum(a, b):
    """a + b with [a, b] = 0."""
    n = a.dim + b.dim
    brackets = {}
    for (i, j), terms in a.nonzero_brackets.items():
        brackets[(i, j)] = {k: v for k, v in terms}
    for (i, j), terms in b.nonzero_brackets.items():
        brackets[(a.dim + i, a.dim + j)] = {a.dim + k: v for k, v in terms}
    return LieAlgebra.from_brackets(list(a.basis_names) + list(b.basis_names), brackets,
                                    trusted=a.trusted and b.trusted)
