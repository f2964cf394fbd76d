"""Exact rational linear algebra.

Everything here works over Q with Python integers and ``fractions.Fraction``.
Dense matrices are small (at most a few hundred rows); large problems are
handled through sparse vectors stored as ``{key: coefficient}`` dicts and the
block-splitting kernel routine :func:`restricted_kernel`.
"""

from fractions import Fraction
from math import gcd
import numbers

Rational = Fraction


def Q(x, d=1):
    """Coerce to an exact rational; floats are refused."""
    if isinstance(x, float):
        raise TypeError("floats are not exact, use Fraction or int")
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x, d)


def _clean(x):
    # keep integers as int, it is much faster than Fraction(n, 1)
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _integral(rows):
    """(d, integer rows) with rows = integer rows / d."""
    d = 1
    for r in rows:
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                d = d * x.denominator // gcd(d, x.denominator)
    if d == 1:
        return 1, rows
    return d, [[int(x * d) for x in r] for r in rows]


class Matrix:
    """Immutable dense matrix with exact entries (int or Fraction)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(_clean(x) for x in r) for r in rows)
        for r in rows:
            for x in r:
                if not isinstance(x, numbers.Rational):
                    raise TypeError("matrix entries must be exact rationals, got %r" % (x,))
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        return cls([[0] * m for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_entries(cls, n, m, entries):
        rows = [[0] * m for _ in range(n)]
        for (i, j), v in entries.items():
            rows[i][j] += v
        return cls(rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix(%dx%d)" % self.shape

    def __add__(self, other):
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return self @ c
        return Matrix([[c * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch %r @ %r" % (self.shape, other.shape))
            # integer product after clearing denominators, divide once at the end
            da, ra = _integral(self.rows)
            db, rb = _integral(other.rows)
            cols = list(zip(*rb))
            d = da * db
            out = []
            for r in ra:
                nz = [(k, a) for k, a in enumerate(r) if a]
                row = [sum(a * c[k] for k, a in nz) for c in cols]
                out.append(row if d == 1 else [Fraction(x, d) for x in row])
            return Matrix(out)
        # vector
        v = list(other)
        if len(v) != self.ncols:
            raise ValueError("shape mismatch")
        return tuple(_clean(sum(a * x for a, x in zip(r, v) if a)) for r in self.rows)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %r vs %r" % (self.shape, other.shape))

    @property
    def T(self):
        return Matrix(list(zip(*self.rows))) if self.rows else self

    def trace(self):
        return _clean(sum(self.rows[i][i] for i in range(min(self.shape))))

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def is_antisymmetric(self):
        return self == -self.T

    def is_symmetric(self):
        return self == self.T

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def entries(self):
        """Nonzero entries as {(i, j): value}."""
        return {(i, j): x for i, r in enumerate(self.rows) for j, x in enumerate(r) if x}

    def flat(self):
        return tuple(x for r in self.rows for x in r)

    def inverse(self):
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of non-square matrix")
        aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)]
               for i, r in enumerate(self.rows)]
        rank, piv, red = _rref_dense(aug, n)
        if rank < n or piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix([r[n:] for r in red[:n]])

    def rank(self):
        return _rref_dense([list(map(Fraction, r)) for r in self.rows], self.ncols)[0]


def commutator(a, b):
    return a @ b - b @ a


def _rref_dense(rows, ncols):
    """In-place reduced row echelon form of a list of Fraction rows.

    Pivot is the first nonzero entry in row order, no numerical pivoting.
    Returns (rank, pivot columns, rows) with the zero rows dropped.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = rows[r] = [x * inv for x in prow]
        nzc = [j for j in range(c, len(prow)) if prow[j]]  # augmented columns too
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in nzc:
                        ri[j] -= f * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots, rows[:r]


class SparseMatrix:
    """Rows stored as lists of (column, value) with strictly increasing columns."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows, ncols, data):
        self.nrows = nrows
        self.ncols = ncols
        clean = []
        for row in data:
            row = sorted((int(c), _clean(Q(v) if not isinstance(v, numbers.Rational) else v))
                         for c, v in row if v)
            if any(a[0] >= b[0] for a, b in zip(row, row[1:])):
                raise ValueError("duplicate column in sparse row")
            if row and not 0 <= row[-1][0] < ncols or row and row[0][0] < 0:
                raise ValueError("column index out of range")
            clean.append(tuple(row))
        if len(clean) != nrows:
            raise ValueError("row count mismatch")
        self.data = tuple(clean)

    @classmethod
    def from_dense(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, [[(j, x) for j, x in enumerate(r) if x] for r in rows])

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.data):
            for j, x in row:
                out[i][j] = x
        return out

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.shape == other.shape
                and self.data == other.data)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def nnz(self):
        return sum(len(r) for r in self.data)


def rref(m):
    """Exact reduced row echelon form: returns (rank, pivots, reduced)."""
    if isinstance(m, Matrix):
        m = SparseMatrix.from_dense(m.rows)
    dense = [[Fraction(x) for x in r] for r in m.to_dense()]
    rank, pivots, red = _rref_dense(dense, m.ncols)
    return rank, pivots, SparseMatrix(rank, m.ncols, [[(j, x) for j, x in enumerate(r) if x] for r in red])


class Subspace:
    """Linear subspace of Q^n held by its reduced echelon basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient, vectors=()):
        self.ambient = ambient
        rows = []
        for v in vectors:
            v = list(v)
            if len(v) != ambient:
                raise ValueError("vector length %d does not match ambient %d" % (len(v), ambient))
            rows.append([Fraction(x) for x in v])
        _, piv, red = _rref_dense(rows, ambient)
        self.basis = tuple(tuple(_clean(x) for x in r) for r in red)
        self.pivots = tuple(piv)

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)

    def coordinates(self, v):
        """Coordinates of v in the echelon basis, or None if v is not in the span."""
        c = [v[p] for p in self.pivots]
        w = [sum(ci * b[j] for ci, b in zip(c, self.basis)) for j in range(self.ambient)]
        return tuple(c) if all(x == y for x, y in zip(w, v)) else None

    def contains(self, v):
        return self.coordinates(v) is not None

    def sum(self, other):
        _check_ambient(self, other)
        return Subspace(self.ambient, self.basis + other.basis)


def _check_ambient(a, b):
    if a.ambient != b.ambient:
        raise ValueError("ambient dimension mismatch: %d vs %d" % (a.ambient, b.ambient))


def kernel(m):
    """Exact null space of a SparseMatrix (or Matrix) as a Subspace."""
    if isinstance(m, Matrix):
        m = SparseMatrix.from_dense(m.rows)
    rank, pivots, red = rref(m)
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    dense = red.to_dense()
    vecs = []
    for f in free:
        v = [0] * m.ncols
        v[f] = 1
        for r, p in enumerate(pivots):
            v[p] = -dense[r][f]
        vecs.append(v)
    return Subspace(m.ncols, vecs)


def intersect(a, b):
    """Exact intersection of two subspaces of the same ambient space."""
    _check_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace(a.ambient)
    # solve sum x_i a_i - sum y_j b_j = 0
    n = a.ambient
    cols = list(a.basis) + [tuple(-x for x in v) for v in b.basis]
    sys = SparseMatrix.from_dense([[c[i] for c in cols] for i in range(n)])
    ker = kernel(sys)
    vecs = []
    for k in ker.basis:
        vecs.append([sum(k[i] * a.basis[i][j] for i in range(a.dim)) for j in range(n)])
    return Subspace(n, vecs)


# sparse dict vectors -------------------------------------------------------

def primitive(vec):
    """Scale a dict vector to coprime integers, first key (in sorted order) positive."""
    if not vec:
        return {}
    den = 1
    for x in vec.values():
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    ints = {k: int(x * den) for k, x in vec.items()}
    g = 0
    for x in ints.values():
        g = gcd(g, x)
    if ints[min(ints)] < 0:
        g = -g
    return {k: x // g for k, x in sorted(ints.items())}


def axpy(acc, c, vec):
    """acc += c * vec for dict vectors, dropping zeros."""
    for k, x in vec.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def dense_nullspace(rows, ncols):
    """Integer basis of the null space of a small dense rational system."""
    red_rows = [[Fraction(x) for x in r] for r in rows]
    _, pivots, red = _rref_dense(red_rows, ncols)
    pset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pset:
            continue
        v = {f: 1}
        for r, p in enumerate(pivots):
            if red[r][f]:
                v[p] = -red[r][f]
        out.append(primitive(v))
    return out


def restricted_kernel(basis, op):
    """Kernel of a linear operator restricted to span(basis).

    ``basis`` is a list of independent dict vectors, ``op`` maps a dict vector to
    a dict vector. The image columns are split into connected components (two
    basis vectors are linked when their images share a key) and each block is
    solved on its own. Returns a list of primitive integer dict vectors.
    """
    images = [op(v) for v in basis]
    parent = list(range(len(basis)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner = {}
    for i, im in enumerate(images):
        for key in im:
            j = owner.setdefault(key, i)
            if j != i:
                a, b = find(i), find(j)
                if a != b:
                    parent[a] = b
    comps = {}
    for i in range(len(basis)):
        comps.setdefault(find(i), []).append(i)
    out = []
    for cols in sorted(comps.values()):
        keys = sorted({k for i in cols for k in images[i]})
        if not keys:
            out.extend(basis[i] for i in cols)
            continue
        kidx = {k: r for r, k in enumerate(keys)}
        rows = [[0] * len(cols) for _ in keys]
        for c, i in enumerate(cols):
            for k, x in images[i].items():
                rows[kidx[k]][c] = x
        for null in dense_nullspace(rows, len(cols)):
            v = {}
            for c, x in null.items():
                axpy(v, x, basis[cols[c]])
            out.append(primitive(v))
    return out


def common_kernel(basis, ops):
    """Intersect kernels of several operators, folding them in one at a time."""
    for op in ops:
        if not basis:
            break
        basis = restricted_kernel(basis, op)
    return basis


def span_rank(vectors):
    """Rank of a list of dict vectors."""
    keys = sorted({k for v in vectors for k in v})
    kidx = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        r = [0] * len(keys)
        for k, x in v.items():
            r[kidx[k]] = x
        rows.append([Fraction(x) for x in r])
    return _rref_dense(rows, len(keys))[0]


# modular rank certificates ----------------------------------------------------

MODULUS = 2147483647  # 2^31 - 1, prime


def mod_p(x, p=MODULUS):
    x = Fraction(x)
    return x.numerator % p * pow(x.denominator, -1, p) % p


def rank_mod_p(vectors, p=MODULUS):
    """Rank over GF(p) of dict vectors with p-integral rational entries.

    A result equal to ``len(vectors)`` proves full rank over Q as well.
    """
    import numpy as np
    vectors = list(vectors)
    keys = sorted({k for v in vectors for k in v})
    kidx = {k: i for i, k in enumerate(keys)}
    M = np.zeros((len(vectors), len(keys)), dtype=np.int64)
    for r, v in enumerate(vectors):
        for k, x in v.items():
            M[r, kidx[k]] = mod_p(x, p)
    rank = 0
    for c in range(M.shape[1]):
        if rank == M.shape[0]:
            break
        nz = np.flatnonzero(M[rank:, c])
        if not nz.size:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            M[[rank, piv]] = M[[piv, rank]]
        row = M[rank] * pow(int(M[rank, c]), -1, p) % p
        below = M[rank + 1:]
        f = below[:, c]
        hit = np.flatnonzero(f)
        if hit.size:
            below[hit] = (below[hit] - np.outer(f[hit], row) % p) % p
        rank += 1
    return rank


class ModpEchelon:
    """Incremental row echelon form over GF(p), numpy backed.

    Ranks over GF(p) never exceed ranks over Q for p-integral input, so the
    kernel dimension found here is an upper bound for the rational one.
    """

    def __init__(self, ncols, p=MODULUS):
        import numpy as np
        self.np = np
        self.p = p
        self.ncols = ncols
        self.rows = np.zeros((0, ncols), dtype=np.int64)
        self.pivots = []

    def add_rows(self, block):
        np = self.np
        p = self.p
        block = np.asarray(block, dtype=np.int64) % p
        # eliminate against existing pivots
        for r, c in enumerate(self.pivots):
            f = block[:, c].copy()
            nz = f != 0
            if nz.any():
                block[nz] = (block[nz] - np.outer(f[nz], self.rows[r]) % p) % p
        new_rows = []
        new_piv = []
        work = block[np.any(block != 0, axis=1)]
        while work.shape[0]:
            row = work[0]
            c = int(np.flatnonzero(row)[0])
            row = row * pow(int(row[c]), -1, p) % p
            rest = work[1:]
            f = rest[:, c].copy()
            nz = f != 0
            if nz.any():
                rest[nz] = (rest[nz] - np.outer(f[nz], row) % p) % p
            work = rest[np.any(rest != 0, axis=1)]
            # keep existing rows reduced so later eliminations stay single pass
            for old in range(len(new_rows)):
                g = new_rows[old][c]
                if g:
                    new_rows[old] = (new_rows[old] - g * row % p) % p
            if self.rows.shape[0]:
                g = self.rows[:, c].copy()
                nzg = g != 0
                if nzg.any():
                    self.rows[nzg] = (self.rows[nzg] - np.outer(g[nzg], row) % p) % p
            new_rows.append(row)
            new_piv.append(c)
        if new_rows:
            self.rows = np.vstack([self.rows, np.array(new_rows, dtype=np.int64)])
            self.pivots.extend(new_piv)
        return len(new_rows)

    @property
    def rank(self):
        return len(self.pivots)
