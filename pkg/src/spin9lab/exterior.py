"""Sparse exterior algebra over R^n with blades stored as bitmasks.

Bit i of a blade stands for the basis covector e_{i+1}; factors are always in
ascending index order.  Orientation is e_1 ^ ... ^ e_n, the metric Euclidean.
"""

from fractions import Fraction
from itertools import combinations

from .exact_core import Matrix, axpy, _clean


def popcount(b):
    return bin(b).count("1")


def blade(*indices):
    """Bitmask of e_{i1} ^ ... (1-based indices, any order ignored)."""
    b = 0
    for i in indices:
        b |= 1 << (i - 1)
    return b


def blade_indices(b):
    """Zero-based indices of the set bits, ascending."""
    out = []
    while b:
        low = b & -b
        out.append(low.bit_length() - 1)
        b ^= low
    return out


def blades_of_grade(n, k):
    return sorted(sum(1 << i for i in c) for c in combinations(range(n), k))


def _bits_below(b, j):
    return popcount(b & ((1 << j) - 1))


def wedge_sign(a, b):
    """Sign of e_a ^ e_b relative to e_{a|b}; 0 if they share a factor."""
    if a & b:
        return 0
    s = 0
    m = b
    while m:
        low = m & -m
        j = low.bit_length() - 1
        s += popcount(a >> (j + 1))
        m ^= low
    return -1 if s & 1 else 1


class Form:
    """Homogeneous form of grade k on R^n: {blade bitmask: rational}."""

    __slots__ = ("n", "k", "coeffs")

    def __init__(self, n, k, coeffs=None):
        if not 0 <= k <= n:
            raise ValueError("grade %d out of range for n=%d" % (k, n))
        self.n = n
        self.k = k
        c = {}
        for b, x in (coeffs or {}).items():
            if b >> n or popcount(b) != k:
                raise ValueError("blade %s does not have grade %d in dimension %d" % (bin(b), k, n))
            if x:
                c[b] = _clean(x)
        self.coeffs = dict(sorted(c.items()))

    @classmethod
    def basis(cls, n, *indices, coeff=1):
        """Single blade e_{i1} ^ ... ^ e_{ik} (1-based, order gives the sign)."""
        b = 0
        sign = 1
        for i in indices:
            bit = 1 << (i - 1)
            if b & bit:
                return cls(n, len(indices))
            if popcount(b >> i) & 1:
                sign = -sign
            b |= bit
        return cls(n, len(indices), {b: sign * coeff})

    @classmethod
    def vector(cls, v):
        """1-form from a coordinate vector (musical isomorphism is the identity)."""
        return cls(len(v), 1, {1 << i: x for i, x in enumerate(v) if x})

    def __eq__(self, other):
        return (isinstance(other, Form) and self.n == other.n and self.k == other.k
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.n, self.k, tuple(self.coeffs.items())))

    def __repr__(self):
        return "Form(n=%d, k=%d, terms=%d)" % (self.n, self.k, len(self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other):
        if not isinstance(other, Form) or self.n != other.n or self.k != other.k:
            raise ValueError("forms of different type")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.coeffs)
        axpy(acc, 1, other.coeffs)
        return Form(self.n, self.k, acc)

    def __sub__(self, other):
        self._check(other)
        acc = dict(self.coeffs)
        axpy(acc, -1, other.coeffs)
        return Form(self.n, self.k, acc)

    def __neg__(self):
        return Form(self.n, self.k, {b: -x for b, x in self.coeffs.items()})

    def __mul__(self, c):
        return Form(self.n, self.k, {b: c * x for b, x in self.coeffs.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def dot(self, other):
        """Blade-orthonormal inner product."""
        self._check(other)
        return _clean(sum(x * other.coeffs.get(b, 0) for b, x in self.coeffs.items()))

    def ratio_to(self, other):
        """c with self = c * other, or None; zero forms give 0 when both vanish."""
        self._check(other)
        if not other.coeffs:
            return 0 if not self.coeffs else None
        if self.coeffs.keys() != other.coeffs.keys():
            return None
        b0 = next(iter(other.coeffs))
        c = Fraction(self.coeffs[b0]) / other.coeffs[b0]
        if all(x == c * other.coeffs[b] for b, x in self.coeffs.items()):
            return _clean(c)
        return None


def zero(n, k):
    return Form(n, k)


def wedge(a, b):
    if a.n != b.n:
        raise ValueError("dimension mismatch: %d vs %d" % (a.n, b.n))
    if a.k + b.k > a.n:
        return Form(a.n, a.n)
    acc = {}
    for ba, xa in a.coeffs.items():
        for bb, xb in b.coeffs.items():
            s = wedge_sign(ba, bb)
            if s:
                key = ba | bb
                y = acc.get(key, 0) + s * xa * xb
                if y:
                    acc[key] = y
                else:
                    acc.pop(key)
    return Form(a.n, a.k + b.k, acc)


def contract(v, w):
    """Interior product of the vector v into the form w."""
    v = list(v)
    if len(v) != w.n:
        raise ValueError("vector has length %d, forms live on R^%d" % (len(v), w.n))
    if w.k == 0:
        return Form(w.n, 0)
    support = [(j, x) for j, x in enumerate(v) if x]
    acc = {}
    for b, c in w.coeffs.items():
        for j, x in support:
            if b >> j & 1:
                s = -1 if _bits_below(b, j) & 1 else 1
                key = b ^ (1 << j)
                y = acc.get(key, 0) + s * x * c
                if y:
                    acc[key] = y
                else:
                    acc.pop(key)
    return Form(w.n, w.k - 1, acc)


def hodge_sign(b, n):
    """Sign of the permutation listing the indices of b then its complement."""
    comp = ((1 << n) - 1) ^ b
    inv = 0
    for j in blade_indices(b):
        inv += _bits_below(comp, j)
    return -1 if inv & 1 else 1


def hodge(w):
    full = (1 << w.n) - 1
    return Form(w.n, w.n - w.k, {full ^ b: hodge_sign(b, w.n) * x for b, x in w.coeffs.items()})


# so(n) action ---------------------------------------------------------------

def signed_permutation(A):
    """(pi, s) with A e_j = s[j] e_pi[j] if A is a signed permutation matrix, else None."""
    pi, s = [], []
    for j in range(A.ncols):
        col = [(i, x) for i, x in enumerate(A.column(j)) if x]
        if len(col) != 1 or col[0][1] not in (1, -1):
            return None
        pi.append(col[0][0])
        s.append(col[0][1])
    return pi, s


def _rho_blade_perm(pi, s, b):
    out = {}
    for j in blade_indices(b):
        t = pi[j]
        if b >> t & 1:
            continue
        lo, hi = (j, t) if j < t else (t, j)
        between = popcount(b & ((1 << hi) - 1) & ~((1 << (lo + 1)) - 1))
        nb = b ^ (1 << j) ^ (1 << t)
        out[nb] = out.get(nb, 0) + (-s[j] if between & 1 else s[j])
    return out


def _rho_blade_general(cols, b):
    # cols[j] = [(i, A_ij)] nonzero entries of column j
    out = {}
    for j in blade_indices(b):
        for t, x in cols[j]:
            if t == j:
                out[b] = out.get(b, 0) + x
                continue
            if b >> t & 1:
                continue
            lo, hi = (j, t) if j < t else (t, j)
            between = popcount(b & ((1 << hi) - 1) & ~((1 << (lo + 1)) - 1))
            nb = b ^ (1 << j) ^ (1 << t)
            out[nb] = out.get(nb, 0) + (-x if between & 1 else x)
    return out


def rho_operator(A, check=True):
    """Derivation action of A on dict-vector forms: returns a function dict -> dict."""
    if check and not A.is_antisymmetric():
        raise ValueError("rho_action needs an antisymmetric matrix")
    sp = signed_permutation(A)
    if sp is not None:
        pi, s = sp
        blade_op = lambda b: _rho_blade_perm(pi, s, b)
    else:
        cols = [[(i, x) for i, x in enumerate(A.column(j)) if x] for j in range(A.ncols)]
        blade_op = lambda b: _rho_blade_general(cols, b)
    cache = {}

    def op(vec):
        acc = {}
        for b, c in vec.items():
            im = cache.get(b)
            if im is None:
                im = cache[b] = blade_op(b)
            for nb, x in im.items():
                y = acc.get(nb, 0) + c * x
                if y:
                    acc[nb] = y
                else:
                    acc.pop(nb)
        return acc

    return op


def rho_action(A, w):
    if A.nrows != w.n:
        raise ValueError("matrix size %d does not match forms on R^%d" % (A.nrows, w.n))
    return Form(w.n, w.k, rho_operator(A)(w.coeffs))


def pullback(g, w):
    """The induced action of a (orthogonal) matrix on forms: e_S -> g e_{i1} ^ ... ."""
    if g.nrows != w.n:
        raise ValueError("matrix size does not match")
    n = w.n
    sp = signed_permutation(g)
    cols = [Form.vector(g.column(j)) for j in range(n)]
    acc = {}
    for b, c in w.coeffs.items():
        idx = blade_indices(b)
        if sp is not None:
            pi, s = sp
            img = Form.basis(n, *[pi[j] + 1 for j in idx])
            sign = 1
            for j in idx:
                sign *= s[j]
            axpy(acc, c * sign, img.coeffs)
            continue
        img = Form(n, 0, {0: 1})
        for j in idx:
            img = wedge(img, cols[j])
        axpy(acc, c, img.coeffs)
    return Form(n, w.k, acc)


def two_form_of(A):
    """The 2-form sum_{i<j} A_ij e_i ^ e_j of an antisymmetric matrix."""
    n = A.nrows
    return Form(n, 2, {(1 << i) | (1 << j): A[i, j] for i in range(n) for j in range(i + 1, n) if A[i, j]})


def matrix_of_two_form(w):
    entries = {}
    for b, x in w.coeffs.items():
        i, j = blade_indices(b)
        entries[(i, j)] = x
        entries[(j, i)] = -x
    return Matrix.from_entries(w.n, w.n, entries)


# serialization -----------------------------------------------------------------

def dumps(w):
    """Text lines '<hex bitmask> <num>/<den>' sorted by bitmask."""
    lines = []
    for b, x in sorted(w.coeffs.items()):
        x = Fraction(x)
        lines.append("%x %d/%d" % (b, x.numerator, x.denominator))
    return "\n".join(lines) + ("\n" if lines else "")


def loads(text, n):
    coeffs = {}
    k = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        mask, val = line.split()
        b = int(mask, 16)
        kk = popcount(b)
        if k is None:
            k = kk
        elif kk != k:
            raise ValueError("mixed grades in form file")
        coeffs[b] = Fraction(val)
    return Form(n, k or 0, coeffs)
