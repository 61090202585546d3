"""Invariant Poisson cohomology of the flag manifold K/T with its Bruhat
Poisson structure, Kostant's theorem for the nilradical, and the Bruhat cells
as symplectic leaves."""
from functools import lru_cache

from .utils import *
from .exactlin import Subspace, submatrix, dense_rows, transpose, nonzeros
from .liealg import induced_algebra, direct_sum
from .bialg import make_coboundary, wedge_index
from .cohom import (ce_complex, wedge_basis, wedge_action, invariant_subcomplex,
                    cohomology_dims, weight_graded_cohomology, relative_cohomology)
from .matched import coisotropic_double
from .roots import (chevalley_algebra, weyl_enumerate, inversion_set, inversion_sum,
                    length_histogram, negate)


@dataclass(frozen=True)
class FlagCohomologyTable:
    type_name: str
    dims: tuple
    total: int

    def to_dict(self):
        return {'type': self.type_name, 'dims': list(self.dims), 'total': self.total}


@dataclass(frozen=True)
class KostantClass:
    degree: int
    weight: tuple
    multiplicity: int
    weyl_index: int  # -1 when no Weyl element carries the weight


@dataclass(frozen=True)
class KostantReport:
    type_name: str
    dims: tuple
    histogram: tuple
    classes: tuple

    @property
    def ok(self):
        weights = [c.weight for c in self.classes]
        matched = [c.weyl_index for c in self.classes]
        return (self.dims == self.histogram
                and all(c.multiplicity == 1 for c in self.classes)
                and len(set(weights)) == len(weights)
                and all(i >= 0 for i in matched)
                and len(set(matched)) == len(matched))


@dataclass(frozen=True)
class KostantRepresentative:
    weyl_index: int
    degree: int
    monomial: tuple  # sorted indices into the basis of n + n_-
    labels: tuple
    weight_zero: bool
    closed: bool
    non_exact: bool

    @property
    def ok(self):
        return self.weight_zero and self.closed and self.non_exact


def _pad(hist, size):
    return tuple(hist[k] if k < len(hist) else 0 for k in range(size))

@lru_cache(maxsize=None)
def _nilradicals(rs):
    ca = chevalley_algebra(rs)
    n = induced_algebra(ca.g, ca.nilradical.rows)
    n_minus = induced_algebra(ca.g, ca.opposite.rows)
    return ca, n, n_minus

def _dual_weights(rs):
    """h-weights of the dual basis of n + n_-: -alpha on e_alpha*, alpha on f_alpha*."""
    return [negate(b) for b in rs.positive_roots] + list(rs.positive_roots)

def _diagonal_actions(weights, rs, size):
    """Matrices of the simple coroots on wedge^k of a space with diagonal weights."""
    actions = []
    for i in range(rs.rank):
        op = [[rs.pairing(weights[a], i) if a == b else 0 for b in range(size)]
              for a in range(size)]
        actions.append([wedge_action(op, size, k) for k in range(size + 1)])
    return actions

@lru_cache(maxsize=None)
def _flag_complex(rs):
    ca, n, n_minus = _nilradicals(rs)
    m = direct_sum(n, n_minus)
    return m, ce_complex(m)

def flag_cohomology(rs):
    """Cohomology of ((wedge (n + n_-)*)^h, d) on the direct sum n + n_-."""
    m, full = _flag_complex(rs)
    weights = _dual_weights(rs)
    invariant = invariant_subcomplex(full, _diagonal_actions(weights, rs, m.dim))
    dims = cohomology_dims(invariant)
    log.info(f'{rs.name or "flag"}: invariant cochain dims {invariant.dims}')
    return FlagCohomologyTable(type_name=rs.name, dims=tuple(dims), total=sum(dims))

def poincare_polynomial(rs, elements=None):
    """Coefficients of sum_w t^(2 l(w)) up to t^(2|positive roots|)."""
    if elements is None:
        elements = weyl_enumerate(rs)
    hist = length_histogram(elements)
    out = [0] * (2 * rs.n_positive + 1)
    for k, count in enumerate(hist):
        out[2 * k] = count
    return tuple(out)

def standard_bialgebra(rs):
    """delta = d(sum_alpha (alpha, alpha)/2 e_alpha ^ f_alpha) on the Chevalley algebra."""
    ca = chevalley_algebra(rs)
    n = ca.g.dim
    index = wedge_index(n)
    r = [ZERO] * len(index)
    for t, beta in enumerate(rs.positive_roots):
        r[index[(ca.e_index(t), ca.f_index(t))]] = QQ(rs.inner(beta, beta), 2)
    return ca, make_coboundary(ca.g, r)

def coisotropic_route(rs):
    """Invariant Poisson cohomology as H(h + h^perp, h) for the standard structure."""
    ca, b = standard_bialgebra(rs)
    mp = coisotropic_double(b, ca.cartan_sub)
    k = ca.cartan_sub.dim
    return relative_cohomology(mp.l, Subspace.coordinate(mp.l.dim, range(k)))

def kostant_check(rs):
    ca, n, _ = _nilradicals(rs)
    npos = rs.n_positive
    complex_ = ce_complex(n)
    dual = [negate(b) for b in rs.positive_roots]
    weights = []
    for k in range(npos + 1):
        weights.append([tuple(sum(dual[a][i] for a in I) for i in range(rs.rank))
                        for I in wedge_basis(npos, k)])
    graded = weight_graded_cohomology(complex_, weights)
    elements = weyl_enumerate(rs)
    by_weight = {}
    for idx, w in enumerate(elements):
        by_weight.setdefault((w.length, negate(inversion_sum(rs, w))), []).append(idx)
    dims = [0] * (npos + 1)
    classes = []
    for (k, weight), mult in sorted(graded.items()):
        dims[k] += mult
        owners = by_weight.get((k, weight), [])
        classes.append(KostantClass(degree=k, weight=weight, multiplicity=mult,
                                    weyl_index=owners[0] if len(owners) == 1 else -1))
    report = KostantReport(type_name=rs.name, dims=tuple(dims),
                           histogram=_pad(length_histogram(elements), npos + 1),
                           classes=tuple(classes))
    if not report.ok:
        log.warning(f'{rs.name}: Kostant check failed, H(n) dims {report.dims} '
                    f'against Weyl lengths {report.histogram}')
    return report

@lru_cache(maxsize=None)
def _weight_zero_images(rs, degree):
    """Span of d(weight-zero cochains of degree - 1) inside degree `degree`."""
    m, full = _flag_complex(rs)
    size = full.degrees[degree].dim
    if degree == 0:
        return Subspace.zero(size)
    weights = _dual_weights(rs)
    cols = [t for t, I in enumerate(wedge_basis(m.dim, degree - 1))
            if not any(sum(weights[a][i] for a in I) for i in range(rs.rank))]
    if not cols:
        return Subspace.zero(size)
    d = full.diffs[degree - 1]
    block = submatrix(d, list(range(size)), cols)
    return Subspace.span(dense_rows(transpose(block)), size)

def _monomial(rs, w):
    npos = rs.n_positive
    inv = inversion_set(rs, w)
    return tuple(sorted(list(inv) + [npos + t for t in inv]))

def kostant_representative(rs, w, weyl_index=-1):
    """wedge over beta in inv(w) of e_beta* ^ f_beta*, checked in the invariant complex."""
    m, full = _flag_complex(rs)
    weights = _dual_weights(rs)
    monomial = _monomial(rs, w)
    degree = len(monomial)
    basis = {I: t for t, I in enumerate(wedge_basis(m.dim, degree))}
    t = basis[monomial]
    weight_zero = not any(sum(weights[a][i] for a in monomial) for i in range(rs.rank))
    if degree < len(full.diffs):
        closed = all(t not in row for row in nonzeros(full.diffs[degree]).values())
    else:
        closed = True
    cochain = unit_vec(full.degrees[degree].dim, t)
    non_exact = not _weight_zero_images(rs, degree).contains(cochain)
    labels = tuple(f'{m.basis_names[a]}*' for a in monomial)
    return KostantRepresentative(weyl_index=weyl_index, degree=degree, monomial=monomial,
                                 labels=labels, weight_zero=weight_zero, closed=closed,
                                 non_exact=non_exact)

def kostant_classes(rs, elements=None):
    """Per degree, the number of independent classes the representatives span."""
    if elements is None:
        elements = weyl_enumerate(rs)
    m, full = _flag_complex(rs)
    out = [0] * len(full.degrees)
    by_degree = {}
    for w in elements:
        by_degree.setdefault(2 * w.length, []).append(_monomial(rs, w))
    for degree, monomials in by_degree.items():
        images = _weight_zero_images(rs, degree)
        size = full.degrees[degree].dim
        basis = {I: t for t, I in enumerate(wedge_basis(m.dim, degree))}
        reps = [unit_vec(size, basis[I]) for I in monomials]
        out[degree] = Subspace.span(list(images.rows) + reps, size).dim - images.dim
    return tuple(out)

def bruhat_leaves(rs, elements=None):
    """(Weyl element, real dimension of its Bruhat cell) in BFS order."""
    if elements is None:
        elements = weyl_enumerate(rs)
    return [(w, 2 * w.length) for w in elements]
