"""Exact rational linear algebra.

Every matrix is a sympy DomainMatrix over QQ held in the sparse (SDM) format,
so products, ranks and row reductions all run through one code path. Subspaces
are stored by their reduced row echelon basis, which makes them canonical and
hashable.
"""
from .utils import *

def smat(entries, nrows, ncols):
    """Sparse matrix from a dict of dicts {row: {col: value}}; zero entries are dropped."""
    dod = {}
    for i, row in entries.items():
        clean = {j: rat(v) for j, v in row.items() if v != 0}
        if clean:
            dod[i] = clean
    return DomainMatrix(dod, (nrows, ncols), QQ)

def mat(rows, ncols=None):
    """Sparse matrix from a dense list of rows."""
    rows = [list(r) for r in rows]
    if ncols is None:
        if not rows:
            raise ShapeError('can not infer the column count of an empty matrix')
        ncols = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != ncols:
            raise ShapeError(f'row {i} has length {len(r)}, expected {ncols}')
    return smat({i: dict(enumerate(r)) for i, r in enumerate(rows)}, len(rows), ncols)

def zeros(nrows, ncols):
    return smat({}, nrows, ncols)

def identity(n):
    return smat({i: {i: ONE} for i in range(n)}, n, n)

def nonzeros(m):
    """The non-zero entries of m as a fresh dict of dicts."""
    rep = m.to_sparse().rep
    return {i: dict(row) for i, row in rep.items() if row}

def dense_rows(m):
    nrows, ncols = m.shape
    nz = nonzeros(m)
    return [tuple(nz.get(i, {}).get(j, ZERO) for j in range(ncols)) for i in range(nrows)]

def transpose(m):
    nrows, ncols = m.shape
    out = {}
    for i, row in nonzeros(m).items():
        for j, v in row.items():
            out.setdefault(j, {})[i] = v
    return smat(out, ncols, nrows)

def matmul(a, b):
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f'can not multiply {a.shape} by {b.shape}')
    if 0 in a.shape or 0 in b.shape:
        return zeros(a.shape[0], b.shape[1])
    return a.to_sparse().matmul(b.to_sparse())

def mat_vec(m, v):
    nrows, ncols = m.shape
    if len(v) != ncols:
        raise ShapeError(f'vector of length {len(v)} against {ncols} columns')
    out = [ZERO] * nrows
    for i, row in nonzeros(m).items():
        out[i] = sum((a * v[j] for j, a in row.items()), ZERO)
    return tuple(out)

def is_zero_mat(m):
    return not nonzeros(m)

def submatrix(m, rows, cols):
    """Rows and columns of m picked (and reordered) by the given index lists."""
    colpos = {c: k for k, c in enumerate(cols)}
    nz = nonzeros(m)
    out = {}
    for k, r in enumerate(rows):
        row = nz.get(r)
        if not row:
            continue
        picked = {colpos[j]: v for j, v in row.items() if j in colpos}
        if picked:
            out[k] = picked
    return smat(out, len(rows), len(cols))

def stack(mats, ncols):
    """Vertical concatenation of matrices sharing the column count."""
    out = {}
    offset = 0
    for m in mats:
        if m.shape[1] != ncols:
            raise ShapeError(f'can not stack a {m.shape} block under {ncols} columns')
        for i, row in nonzeros(m).items():
            out[offset + i] = row
        offset += m.shape[0]
    return smat(out, offset, ncols)

def rref(m):
    """Reduced row echelon form as (dict of non-zero rows, pivot columns)."""
    if 0 in m.shape:
        return {}, ()
    r, pivots = m.to_sparse().rref()
    return nonzeros(r), tuple(pivots)

def rank(m):
    """Row rank over the rationals."""
    if 0 in m.shape:
        return 0
    return len(rref(m)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of QQ^ambient_dim stored by its canonical RREF basis."""
    ambient_dim: int
    rows: tuple = ()
    pivots: tuple = ()

    @classmethod
    def span(cls, vectors, ambient_dim):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ShapeError(f'vector of length {len(v)} in a {ambient_dim}-dim space')
        if not vectors:
            return cls(ambient_dim)
        reduced, pivots = rref(mat(vectors, ambient_dim))
        rows = tuple(tuple(reduced[i].get(j, ZERO) for j in range(ambient_dim))
                     for i in range(len(pivots)))
        return cls(ambient_dim, rows, pivots)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim,
                   tuple(unit_vec(ambient_dim, i) for i in range(ambient_dim)),
                   tuple(range(ambient_dim)))

    @classmethod
    def coordinate(cls, ambient_dim, indices):
        """Span of the standard basis vectors with the given indices."""
        return cls.span([unit_vec(ambient_dim, i) for i in sorted(set(indices))], ambient_dim)

    @property
    def dim(self):
        return len(self.rows)

    @property
    def basis(self):
        return mat(self.rows, self.ambient_dim) if self.rows else zeros(0, self.ambient_dim)

    def coordinates(self, v):
        """Coefficients of v in the RREF basis; raises ShapeError when v is not in the subspace."""
        v = tuple(v)
        if len(v) != self.ambient_dim:
            raise ShapeError(f'vector of length {len(v)} in a {self.ambient_dim}-dim space')
        coeffs = tuple(v[p] for p in self.pivots)
        rebuilt = zero_vec(self.ambient_dim)
        for c, row in zip(coeffs, self.rows):
            if c != 0:
                rebuilt = vec_add(rebuilt, vec_scale(c, row))
        if rebuilt != v:
            raise ShapeError('vector does not lie in the subspace')
        return coeffs

    def contains(self, v):
        try:
            self.coordinates(v)
        except ShapeError:
            return False
        return True

    def is_subspace_of(self, other):
        return all(other.contains(r) for r in self.rows)

    def __repr__(self):
        return f'Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})'


def _check_same_ambient(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise ShapeError(f'ambient dimensions differ: {a.ambient_dim} and {b.ambient_dim}')

def kernel_basis(m):
    """Canonical basis of the right null space {x : m x = 0}."""
    nrows, ncols = m.shape
    if nrows == 0 or is_zero_mat(m):
        return Subspace.full(ncols)
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i].get(free, ZERO)
        vectors.append(v)
    return Subspace.span(vectors, ncols)

def add(a, b):
    _check_same_ambient(a, b)
    return Subspace.span(a.rows + b.rows, a.ambient_dim)

def annihilator(s):
    """{xi : xi(v) = 0 for all v in s}, written in the dual coordinates."""
    if s.dim == 0:
        return Subspace.full(s.ambient_dim)
    return kernel_basis(s.basis)

def intersect(a, b):
    _check_same_ambient(a, b)
    return annihilator(add(annihilator(a), annihilator(b)))

def column_space(m):
    return Subspace.span(dense_rows(transpose(m)), m.shape[0])

def image(m, s):
    if m.shape[1] != s.ambient_dim:
        raise ShapeError(f'{m.shape} matrix applied to a subspace of {s.ambient_dim}-space')
    return Subspace.span([mat_vec(m, r) for r in s.rows], m.shape[0])


class Frame:
    """A linearly independent, not necessarily canonical, list of vectors
    with coordinate lookup."""
    def __init__(self, vectors, ambient_dim):
        self.vectors = [vec(v) for v in vectors]
        self.ambient_dim = ambient_dim
        for v in self.vectors:
            if len(v) != ambient_dim:
                raise ShapeError(f'vector of length {len(v)} in a {ambient_dim}-dim space')
        if self.vectors and rank(mat(self.vectors, ambient_dim)) != len(self.vectors):
            raise ShapeError('frame vectors are linearly dependent')

    def __len__(self):
        return len(self.vectors)

    def coordinates_many(self, targets):
        """Coordinates of each target; ShapeError when one of them is outside the span."""
        targets = [vec(t) for t in targets]
        if not targets:
            return []
        k, n = len(self.vectors), self.ambient_dim
        columns = self.vectors + targets
        augmented = smat({r: {c: col[r] for c, col in enumerate(columns)} for r in range(n)},
                         n, len(columns))
        reduced, pivots = rref(augmented)
        if any(p >= k for p in pivots):
            raise ShapeError('vector does not lie in the span of the frame')
        return [tuple(reduced.get(i, {}).get(k + j, ZERO) for i in range(k))
                for j in range(len(targets))]

    def coordinates(self, target):
        return self.coordinates_many([target])[0]
