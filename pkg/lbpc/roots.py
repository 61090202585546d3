"""Root systems from Cartan matrices, Chevalley bases and Weyl groups.

Roots are integer tuples in the simple-root basis. The Cartan matrix follows
a_ij = <alpha_i^vee, alpha_j>, so the simple reflection s_i sends beta to
beta - (sum_j a_ij beta_j) alpha_i.
"""
from collections import deque

from .utils import *
from .exactlin import Subspace
from .liealg import LieAlgebra
from .default_prefs import DEFAULT_CARTAN_MATRICES, DEFAULT_PREFERENCES


def validate_cartan(cartan):
    """Integer square matrix with finite-type pairwise data, else an error."""
    try:
        a = np.array(cartan)
    except (TypeError, ValueError):
        raise ShapeError('the Cartan matrix is not a rectangular array')
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ShapeError(f'the Cartan matrix must be square and non-empty, got shape {a.shape}')
    if not np.issubdtype(a.dtype, np.integer):
        raise ShapeError('the Cartan matrix must have integer entries')
    r = a.shape[0]
    for i in range(r):
        if a[i, i] != 2:
            raise NotFiniteTypeError(f'diagonal entry {i} is {a[i, i]}, not 2', entry=[i, i])
        for j in range(r):
            if i == j:
                continue
            if a[i, j] > 0:
                raise NotFiniteTypeError('positive off-diagonal entry', entry=[i, j])
            if (a[i, j] == 0) != (a[j, i] == 0):
                raise NotFiniteTypeError('zero pattern is not symmetric', entry=[i, j])
            if a[i, j] * a[j, i] > 3:
                raise NotFiniteTypeError(f'a_ij a_ji = {a[i, j] * a[j, i]} exceeds 3', entry=[i, j])
    return a.astype(np.int64)

def symmetrizer(a):
    """Integers D_i with D_i a_ij = D_j a_ji, the shortest simple root of each
    component having D = 1. (alpha_i, alpha_i) = 2 D_i."""
    r = a.shape[0]
    d = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = ONE
        component = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(r):
                if j == i or a[i, j] == 0:
                    continue
                value = d[i] * QQ(int(a[i, j]), int(a[j, i]))
                if d[j] is None:
                    d[j] = value
                    component.append(j)
                    queue.append(j)
                elif d[j] != value:
                    raise NotFiniteTypeError('the Cartan matrix is not symmetrizable', entry=[i, j])
        low = min(d[i] for i in component)
        for i in component:
            d[i] = d[i] / low
    if any(x.denominator != 1 for x in d):
        raise NotFiniteTypeError('the Cartan matrix is not symmetrizable over the integers')
    return tuple(int(x.numerator) for x in d)


@dataclass(frozen=True)
class RootSystem:
    rank: int
    cartan: tuple
    positive_roots: tuple
    symmetrizer: tuple
    name: str = ''

    @property
    def cartan_array(self):
        return np.array(self.cartan, dtype=np.int64)

    @cached_property
    def gram(self):
        """B_ij = (alpha_i, alpha_j) = D_i a_ij."""
        a = self.cartan_array
        return np.array([[self.symmetrizer[i] * a[i, j] for j in range(self.rank)]
                         for i in range(self.rank)], dtype=np.int64)

    @cached_property
    def index(self):
        return {root: t for t, root in enumerate(self.positive_roots)}

    @cached_property
    def roots(self):
        return frozenset(self.positive_roots) | frozenset(negate(b) for b in self.positive_roots)

    @property
    def n_positive(self):
        return len(self.positive_roots)

    def is_root(self, v):
        return tuple(v) in self.roots

    def pairing(self, beta, i):
        """<beta, alpha_i^vee>."""
        return int(sum(int(self.cartan[i][j]) * beta[j] for j in range(self.rank)))

    def inner(self, alpha, beta):
        return int(np.asarray(alpha) @ self.gram @ np.asarray(beta))

    def coroot(self, alpha):
        """Coefficients of alpha^vee in the simple coroots."""
        half = QQ(self.inner(alpha, alpha), 2)
        out = []
        for i in range(self.rank):
            c = QQ(alpha[i] * self.symmetrizer[i]) / half
            if c.denominator != 1:
                raise NotFiniteTypeError(f'coroot of {alpha} is not integral')
            out.append(int(c.numerator))
        return tuple(out)

    def reflect(self, beta, i):
        c = self.pairing(beta, i)
        return tuple(b - c if j == i else b for j, b in enumerate(beta))

    @property
    def highest_root(self):
        return self.positive_roots[-1]

    @property
    def rho2(self):
        """Twice the Weyl vector, the sum of the positive roots."""
        return tuple(int(x) for x in np.sum(np.array(self.positive_roots, dtype=np.int64), axis=0))


def negate(v):
    return tuple(-x for x in v)

def height(v):
    return sum(v)

def is_positive(v):
    return all(x >= 0 for x in v) and any(x > 0 for x in v)

def is_negative(v):
    return is_positive(negate(v))

def root_order_key(v):
    return (height(v), negate(v))

def build_root_system(cartan, name='', cap=None):
    """Positive roots by closing the simple roots under simple reflections
    inside the positive cone."""
    if cap is None:
        cap = DEFAULT_PREFERENCES['root_cap']
    a = validate_cartan(cartan)
    d = symmetrizer(a)
    r = a.shape[0]
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(r):
            c = int(sum(int(a[i, j]) * beta[j] for j in range(r)))
            if c == 0:
                continue
            gamma = tuple(b - c if j == i else b for j, b in enumerate(beta))
            if is_positive(gamma) and gamma not in found:
                found.add(gamma)
                queue.append(gamma)
                if len(found) > cap:
                    raise NotFiniteTypeError(f'more than {cap} positive roots; the Cartan matrix is not of finite type')
    positive = tuple(sorted(found, key=root_order_key))
    log.debug(f'root system {name or "?"}: rank {r}, {len(positive)} positive roots')
    return RootSystem(rank=r,
                      cartan=tuple(tuple(int(x) for x in row) for row in a),
                      positive_roots=positive,
                      symmetrizer=d,
                      name=name)

def cartan_for_type(name, table=None):
    table = DEFAULT_CARTAN_MATRICES if table is None else table
    if name not in table:
        raise UnknownTypeError(f'unknown type {name!r}', known=sorted(table))
    return table[name]

def root_system_for_type(name, table=None, cap=None):
    return build_root_system(cartan_for_type(name, table), name=name, cap=cap)


class _StructureConstants:
    """N_{a,b} for roots a, b with [e_a, e_b] = N_{a,b} e_{a+b}, fixed by
    N = +(p+1) on extraspecial pairs and the relations forced by Jacobi."""
    def __init__(self, rs):
        self.rs = rs
        self.memo = {}
        self.extraspecial = {}
        for xi in rs.positive_roots:
            for alpha in rs.positive_roots:
                rest = tuple(x - y for x, y in zip(xi, alpha))
                if rest in rs.index:
                    self.extraspecial[xi] = (alpha, rest)
                    break

    def norm(self, v):
        return QQ(self.rs.inner(v, v))

    def string_p(self, a, b):
        """Largest p with b - p a a root."""
        p = 0
        while self.rs.is_root(tuple(y - (p + 1) * x for x, y in zip(a, b))):
            p += 1
        return p

    def __call__(self, a, b):
        s = tuple(x + y for x, y in zip(a, b))
        if not self.rs.is_root(s):
            return ZERO
        key = (a, b)
        if key not in self.memo:
            self.memo[key] = self._compute(a, b, s)
        return self.memo[key]

    def _compute(self, a, b, s):
        rs = self.rs
        if is_positive(a) and is_positive(b):
            if root_order_key(a) > root_order_key(b):
                return -self(b, a)
            alpha, beta = self.extraspecial[s]
            if (a, b) == (alpha, beta):
                return QQ(self.string_p(a, b) + 1)
            c, d = negate(a), negate(b)
            total = ZERO
            n_bc = self(beta, c)
            if n_bc:
                total += n_bc * self(alpha, d) / self.norm(tuple(x + y for x, y in zip(beta, c)))
            n_ca = self(c, alpha)
            if n_ca:
                total += n_ca * self(beta, d) / self.norm(tuple(x + y for x, y in zip(c, alpha)))
            return self.norm(s) * total / self(alpha, beta)
        if is_negative(a) and is_negative(b):
            return -self(negate(a), negate(b))
        # mixed signs: a + b + c = 0 and N_ab/(c,c) = N_bc/(a,a) = N_ca/(b,b)
        c = negate(s)
        if is_positive(b) == is_positive(c):
            return self.norm(c) * self(b, c) / self.norm(a)
        return self.norm(c) * self(c, a) / self.norm(b)


@dataclass(frozen=True)
class ChevalleyAlgebra:
    """Basis h_1..h_r, then e_alpha and f_alpha = e_-alpha for the positive
    roots in root order."""
    rs: RootSystem
    g: LieAlgebra
    cartan_sub: Subspace
    nilradical: Subspace
    opposite: Subspace
    root_of_basis: tuple

    def e_index(self, t):
        return self.rs.rank + t

    def f_index(self, t):
        return self.rs.rank + self.rs.n_positive + t


def _root_label(v):
    return ''.join(str(abs(x)) for x in v)

def chevalley_algebra(rs):
    r, npos = rs.rank, rs.n_positive
    n = r + 2 * npos
    names = ([f'h{i + 1}' for i in range(r)] + [f'e{_root_label(b)}' for b in rs.positive_roots]
             + [f'f{_root_label(b)}' for b in rs.positive_roots])
    weights = [tuple([0] * r) for _ in range(r)]
    weights += list(rs.positive_roots) + [negate(b) for b in rs.positive_roots]
    index = {w: t for t, w in enumerate(weights) if t >= r}
    const = _StructureConstants(rs)
    brackets = {}
    for i in range(r):
        for t in range(r, n):
            c = rs.pairing(weights[t], i)
            if c:
                brackets[(i, t)] = {t: c}
    for s, t in itertools.combinations(range(r, n), 2):
        a, b = weights[s], weights[t]
        total = tuple(x + y for x, y in zip(a, b))
        if not any(total):
            brackets[(s, t)] = {i: c for i, c in enumerate(rs.coroot(a)) if c}
        elif total in index:
            brackets[(s, t)] = {index[total]: const(a, b)}
    try:
        g = LieAlgebra.from_brackets(names, brackets).trust()
    except JacobiError as err:
        raise InconsistentInputError('the Chevalley structure constants fail the Jacobi identity',
                                     **err.details)
    log.debug(f'Chevalley algebra of dimension {n}')
    return ChevalleyAlgebra(rs=rs, g=g,
                            cartan_sub=Subspace.coordinate(n, range(r)),
                            nilradical=Subspace.coordinate(n, range(r, r + npos)),
                            opposite=Subspace.coordinate(n, range(r + npos, n)),
                            root_of_basis=tuple(weights))


@dataclass(frozen=True)
class WeylElement:
    """Matrix of w on the simple-root basis (column j = w alpha_j)."""
    matrix: tuple
    length: int
    inversion_set: tuple
    inverse: tuple

    @property
    def array(self):
        return np.array(self.matrix, dtype=np.int64)

    def apply(self, beta):
        return tuple(int(x) for x in self.array @ np.asarray(beta, dtype=np.int64))

    def is_identity(self):
        return self.length == 0


def _as_key(m):
    return tuple(tuple(int(x) for x in row) for row in m)

def simple_reflection_matrices(rs):
    a = rs.cartan_array
    out = []
    for i in range(rs.rank):
        s = np.eye(rs.rank, dtype=np.int64)
        s[i, :] -= a[i, :]
        out.append(s)
    return out

def _inversions(rs, inverse):
    inv = np.array(inverse, dtype=np.int64)
    return tuple(t for t, beta in enumerate(rs.positive_roots)
                 if is_negative(tuple(int(x) for x in inv @ np.array(beta, dtype=np.int64))))

def weyl_enumerate(rs, cap=None):
    """Breadth-first closure of the identity under right multiplication by
    simple reflections; BFS depth is the length."""
    if cap is None:
        cap = DEFAULT_PREFERENCES['weyl_cap']
    gens = simple_reflection_matrices(rs)
    start = np.eye(rs.rank, dtype=np.int64)
    seen = {_as_key(start): (start, start, 0)}
    order = [_as_key(start)]
    queue = deque([_as_key(start)])
    while queue:
        key = queue.popleft()
        w, winv, depth = seen[key]
        for s in gens:
            nxt = w @ s
            k = _as_key(nxt)
            if k in seen:
                continue
            seen[k] = (nxt, s @ winv, depth + 1)
            order.append(k)
            queue.append(k)
            if len(seen) > cap:
                raise NotFiniteTypeError(f'Weyl group has more than {cap} elements')
    elements = []
    for key in order:
        w, winv, depth = seen[key]
        elements.append(WeylElement(matrix=key, length=depth,
                                    inversion_set=_inversions(rs, _as_key(winv)),
                                    inverse=_as_key(winv)))
    log.debug(f'Weyl group of {rs.name or "?"} has {len(elements)} elements')
    return elements

def inversion_set(rs, w):
    """{beta > 0 : w^-1 beta < 0} as indices into rs.positive_roots."""
    return _inversions(rs, w.inverse)

def inversion_sum(rs, w):
    out = [0] * rs.rank
    for t in inversion_set(rs, w):
        out = [x + y for x, y in zip(out, rs.positive_roots[t])]
    return tuple(out)

def length_histogram(elements):
    top = max(w.length for w in elements)
    hist = [0] * (top + 1)
    for w in elements:
        hist[w.length] += 1
    return hist

def longest_element(elements):
    return max(elements, key=lambda w: w.length)
