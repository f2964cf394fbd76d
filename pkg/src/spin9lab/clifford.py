"""The nine symmetric involutions I_1..I_9 of R^16 and sampled Spin(9) elements.

The 8x8 blocks e_1..e_7 are sums of antisymmetrized elementary matrices
E_ij.  Convention: ``E_ij`` sends basis vector j to basis vector i and
basis vector i to minus basis vector j, i.e. the matrix with +1 at (i, j) and
-1 at (j, i).  This literal reading already satisfies the Clifford relations;
the transposed reading is kept available so the report can show both.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import random

from .exact_core import Matrix

# e_alpha = sum of sign * E_ij, as printed (1-based indices)
E_TERMS = {
    1: [(1, 1, 8), (1, 2, 7), (-1, 3, 6), (-1, 4, 5)],
    2: [(-1, 1, 7), (1, 2, 8), (1, 3, 5), (-1, 4, 6)],
    3: [(-1, 1, 6), (1, 2, 5), (-1, 3, 8), (1, 4, 7)],
    4: [(-1, 1, 5), (-1, 2, 6), (-1, 3, 7), (-1, 4, 8)],
    5: [(-1, 1, 3), (-1, 2, 4), (1, 5, 7), (1, 6, 8)],
    6: [(1, 1, 4), (-1, 2, 3), (-1, 5, 8), (1, 6, 7)],
    7: [(1, 1, 2), (-1, 3, 4), (-1, 5, 6), (1, 7, 8)],
}

CONVENTIONS = ("literal", "transpose")


def e_matrix(alpha, convention="literal"):
    entries = {}
    for s, i, j in E_TERMS[alpha]:
        if convention == "transpose":
            i, j = j, i
        entries[(i - 1, j - 1)] = entries.get((i - 1, j - 1), 0) + s
        entries[(j - 1, i - 1)] = entries.get((j - 1, i - 1), 0) - s
    return Matrix.from_entries(8, 8, entries)


def _blocks(a, b, c, d):
    top = [ra + rb for ra, rb in zip(a.rows, b.rows)]
    bot = [rc + rd for rc, rd in zip(c.rows, d.rows)]
    return Matrix(top + bot)


@dataclass(frozen=True)
class CliffordGenerators:
    e: tuple
    I: tuple
    convention: str = "literal"

    def gen(self, alpha):
        """I_alpha with 1-based index."""
        return self.I[alpha - 1]


def build_generators(convention="literal"):
    if convention not in CONVENTIONS:
        raise ValueError("unknown E_ij convention %r" % convention)
    e = tuple(e_matrix(a, convention) for a in range(1, 8))
    Z = Matrix.zeros(8)
    E = Matrix.identity(8)
    I = [_blocks(Z, -ea, ea, Z) for ea in e]
    I.append(_blocks(Z, E, E, Z))
    I.append(_blocks(E, Z, Z, -E))
    return CliffordGenerators(e=e, I=tuple(I), convention=convention)


_CACHE = {}


def generators(convention="literal"):
    """Cached :func:`build_generators`."""
    if convention not in _CACHE:
        _CACHE[convention] = build_generators(convention)
    return _CACHE[convention]


def verify_clifford_relations(g):
    n = len(g.I)
    ident = Matrix.identity(16)
    failures = []
    for a in range(n):
        for b in range(n):
            anti = g.I[a] @ g.I[b] + g.I[b] @ g.I[a]
            want = 2 * ident if a == b else Matrix.zeros(16)
            if anti != want:
                failures.append((a + 1, b + 1))
    nonsym = [a + 1 for a in range(n) if not g.I[a].is_symmetric()]
    return {
        "convention": g.convention,
        "pairs_checked": n * n,
        "pairs_passed": n * n - len(failures),
        "failing_pairs": failures,
        "non_symmetric": nonsym,
        "pass": not failures and not nonsym,
    }


def select_convention():
    """Literal reading unless it breaks the relations, then the transpose."""
    reports = {c: verify_clifford_relations(build_generators(c)) for c in CONVENTIONS}
    chosen = "literal" if reports["literal"]["pass"] else "transpose"
    return chosen, reports


def spin8_block_check(g):
    """Every I_a I_b with a, b <= 8 is block diagonal (two 8x8 blocks)."""
    bad = []
    for a in range(1, 9):
        for b in range(a + 1, 9):
            m = g.gen(a) @ g.gen(b)
            if any(m[i, j] for i in range(8) for j in range(8, 16)) or \
               any(m[i, j] for i in range(8, 16) for j in range(8)):
                bad.append((a, b))
    return {"pairs": 28, "non_block_diagonal": bad, "pass": not bad}


# Spin(9) elements ------------------------------------------------------------

def vector_to_clifford(v, g=None):
    g = g or generators()
    out = Matrix.zeros(16)
    for a, x in enumerate(v):
        if x:
            out = out + x * g.I[a]
    return out


@dataclass(frozen=True)
class Spin9Element:
    matrix: Matrix
    factors: tuple = field(default=())

    def inverse(self):
        return self.matrix.T

    def conjugate(self, m):
        return self.matrix @ m @ self.matrix.T


def spin9_element(unit_vectors, g=None):
    """(-1)^k (v_1.I)(v_2.I)...(v_2k.I) for an even number of unit vectors."""
    g = g or generators()
    vecs = [tuple(Fraction(x) for x in v) for v in unit_vectors]
    if len(vecs) % 2:
        raise ValueError("need an even number of unit vectors, got %d" % len(vecs))
    for v in vecs:
        if len(v) != 9:
            raise ValueError("unit vectors live in R^9")
        if sum(x * x for x in v) != 1:
            raise ValueError("vector %r is not a unit vector" % (v,))
    m = Matrix.identity(16)
    for v in vecs:
        m = m @ vector_to_clifford(v, g)
    if (len(vecs) // 2) % 2:
        m = -m
    return Spin9Element(matrix=m, factors=tuple(vecs))


def rational_unit_vector(seed=None, u=None, size=3):
    """Exact unit vector (1-|u|^2, 2u_1, ..., 2u_8)/(1+|u|^2).

    ``u`` may be given directly; otherwise it is drawn from ``seed`` with small
    numerators and denominators so that products stay manageable.
    """
    if u is None:
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        u = [Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(8)]
    u = [Fraction(x) for x in u]
    if len(u) != 8:
        raise ValueError("u must have 8 entries")
    n2 = sum(x * x for x in u)
    return tuple([(1 - n2) / (1 + n2)] + [2 * x / (1 + n2) for x in u])


def random_spin9_element(rng, pairs=1, g=None):
    vecs = []
    for _ in range(2 * pairs):
        vecs.append(rational_unit_vector(rng, size=2))
    return spin9_element(vecs, g)


def conjugation_matrix(m, g=None):
    """The 9x9 matrix R with m I_a m^-1 = sum_b R[b][a] I_b, or None if not in span.

    Coefficients are recovered by the trace pairing tr(I_b X) = 16 coefficient.
    """
    g = g or generators()
    minv = m.T if (m @ m.T) == Matrix.identity(16) else m.inverse()
    cols = []
    for a in range(9):
        x = m @ g.I[a] @ minv
        c = [Fraction((g.I[b] @ x).trace(), 16) for b in range(9)]
        if vector_to_clifford(c, g) != x:
            return None
        cols.append(c)
    return Matrix(list(zip(*cols)))


def det(m):
    """Exact determinant by fraction elimination."""
    rows = [[Fraction(x) for x in r] for r in m.rows]
    n = len(rows)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        d *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                for j in range(c, n):
                    rows[i][j] -= f * rows[c][j]
    return d
