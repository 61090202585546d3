"""Linear data of a Poisson action at one point: the kernel l_p of the anchor
(x, alpha) -> sigma x + pi# alpha, its dimension split, isotropy and the map
into g + g*.

T_pP and T*_pP use dual bases, so pi# is a plain skew matrix.
"""
from .utils import *
from .exactlin import (Subspace, smat, nonzeros, kernel_basis, rank, column_space, intersect,
                       image)


def _rows_matrix(rows, nrows, ncols):
    return smat({i: dict(enumerate(r)) for i, r in enumerate(rows)}, nrows, ncols)


@dataclass(frozen=True)
class PointActionData:
    g_dim: int
    p_dim: int
    sigma: tuple     # p_dim rows of length g_dim, column j = sigma_{e_j}(p)
    pi_sharp: tuple  # p_dim x p_dim, skew

    def __post_init__(self):
        if len(self.sigma) != self.p_dim or any(len(r) != self.g_dim for r in self.sigma):
            raise ShapeError(f'sigma must be {self.p_dim} x {self.g_dim}')
        if len(self.pi_sharp) != self.p_dim or any(len(r) != self.p_dim for r in self.pi_sharp):
            raise ShapeError(f'pi_sharp must be {self.p_dim} x {self.p_dim}')
        for i in range(self.p_dim):
            for j in range(i, self.p_dim):
                if self.pi_sharp[i][j] != -self.pi_sharp[j][i]:
                    raise NotSkewError('pi_sharp is not skew', entry=[i, j])

    @classmethod
    def from_rows(cls, sigma, pi_sharp, g_dim=None):
        sigma = tuple(vec(r) for r in sigma)
        pi_sharp = tuple(vec(r) for r in pi_sharp)
        if g_dim is None:
            if not sigma:
                raise ShapeError('g_dim is needed when sigma has no rows')
            g_dim = len(sigma[0])
        return cls(g_dim, len(pi_sharp), sigma, pi_sharp)

    @property
    def sigma_matrix(self):
        return _rows_matrix(self.sigma, self.p_dim, self.g_dim)

    @property
    def pi_matrix(self):
        return _rows_matrix(self.pi_sharp, self.p_dim, self.p_dim)

    @property
    def anchor_matrix(self):
        """[sigma | pi#], acting on g + T*_pP."""
        return _rows_matrix([tuple(s) + tuple(p) for s, p in zip(self.sigma, self.pi_sharp)],
                            self.p_dim, self.g_dim + self.p_dim)


@dataclass(frozen=True)
class FiberResult:
    lp: Subspace
    dim_gp: int
    dim_tp: int
    dim_overlap: int

    @property
    def dim(self):
        return self.lp.dim

    def identity_holds(self):
        return self.lp.dim == self.dim_gp + self.dim_tp + self.dim_overlap


def anchor_kernel(d):
    lp = kernel_basis(d.anchor_matrix)
    sigma, pi = d.sigma_matrix, d.pi_matrix
    overlap = intersect(column_space(sigma), column_space(pi)) if d.p_dim else Subspace.zero(0)
    result = FiberResult(lp=lp,
                         dim_gp=d.g_dim - rank(sigma),
                         dim_tp=d.p_dim - rank(pi),
                         dim_overlap=overlap.dim)
    log.debug(f'l_p has dim {lp.dim} = {result.dim_gp} + {result.dim_tp} + {result.dim_overlap}')
    return result

def point_pairing(d):
    """Gram matrix of <x + alpha, y + beta>_p = beta(sigma x) + alpha(sigma y)."""
    n = d.g_dim
    entries = {}
    for s, row in enumerate(d.sigma):
        for i, v in enumerate(row):
            if v != 0:
                entries.setdefault(i, {})[n + s] = v
                entries.setdefault(n + s, {})[i] = v
    size = n + d.p_dim
    return smat(entries, size, size)

def _pairing_value(gram, u, v):
    total = ZERO
    for i, a in sparse_items(u):
        row = gram.get(i)
        if not row:
            continue
        for j, b in sparse_items(v):
            if j in row:
                total += a * row[j] * b
    return total

def _vanishes_on(gram, s):
    return all(_pairing_value(gram, u, v) == 0 for u in s.rows for v in s.rows)

def isotropy_check(d, lp):
    if lp.ambient_dim != d.g_dim + d.p_dim:
        raise ShapeError(f'l_p lives in {lp.ambient_dim}-space, expected {d.g_dim + d.p_dim}')
    return _vanishes_on(nonzeros(point_pairing(d)), lp)

def phi_matrix(d):
    """(x, alpha) -> (x, sigma^T alpha) from g + T*_pP to g + g*."""
    n, p = d.g_dim, d.p_dim
    entries = {i: {i: ONE} for i in range(n)}
    for s, row in enumerate(d.sigma):
        for i, v in enumerate(row):
            if v != 0:
                entries.setdefault(n + i, {})[n + s] = v
    return smat(entries, 2 * n, n + p)

def phi_embed(d, lp):
    if lp.ambient_dim != d.g_dim + d.p_dim:
        raise ShapeError(f'l_p lives in {lp.ambient_dim}-space, expected {d.g_dim + d.p_dim}')
    return image(phi_matrix(d), lp)

def is_symplectic_point(d):
    return rank(d.pi_matrix) == d.p_dim if d.p_dim else True
