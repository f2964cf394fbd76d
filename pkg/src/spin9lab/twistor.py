"""Complex structures inside spin(9) and the integrability algebra of the twistor space.

Lambda^2(R^9) is identified with spin(9) by e_a ^ e_b -> I_a I_b.  The basis
matrices have -tr(S S) = 16, so coordinates are recovered by -tr(M S)/16.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import random

from .clifford import generators, random_spin9_element
from .exact_core import Matrix, ModpEchelon, _clean, commutator, mod_p, rank_mod_p, MODULUS
from .exterior import Form, blade, hodge, wedge
from .liealg import PAIRS, TRIPLES, build_bases, combine, project

NORMAL_FORM_SIGNS = (  # the eight printed equations (s1 a + s2 b + s3 c + s4 d)^2 = 1
    (1, 1, 1, -1), (1, 1, 1, 1), (1, 1, -1, 1), (1, 1, -1, -1),
    (1, -1, 1, 1), (1, -1, 1, -1), (-1, 1, 1, 1), (-1, 1, 1, -1),
)
NORMAL_PAIRS = ((1, 2), (3, 4), (5, 6), (7, 8))
FAMILY_DIM = 36 + 126 + 1


@lru_cache(maxsize=None)
def _S():
    return tuple(m for _, m in build_bases().spin9)


def to_matrix(w):
    """2-form on R^9 -> element of spin(9)."""
    if w.n != 9 or w.k != 2:
        raise ValueError("need a 2-form on R^9")
    coeffs = {}
    for i, (a, b) in enumerate(PAIRS):
        x = w.coeffs.get(blade(a, b))
        if x:
            coeffs[(a, b)] = x
    return combine(coeffs, build_bases().spin9)


@lru_cache(maxsize=None)
def _S_entries():
    return tuple(tuple(s.entries().items()) for s in _S())


def coordinates(m):
    """Coefficients of m in the I_a I_b basis (PAIRS order); ValueError if m is not in spin(9)."""
    rows = m.rows
    # tr(M S) = sum_ij M_ij S_ji
    c = [_clean(Fraction(-sum(x * rows[j][i] for (i, j), x in ent), 16)) for ent in _S_entries()]
    if from_coordinates(c) != m:
        raise ValueError("matrix is not in span{I_a I_b}")
    return c


@lru_cache(maxsize=None)
def _structure():
    """Coordinates of [S_i, S_j] for all i, j."""
    S = _S()
    return tuple(tuple(tuple(coordinates(commutator(a, b))) for b in S) for a in S)


def bracket_coords(u, v):
    st = _structure()
    acc = [0] * 36
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(v):
                if y:
                    xy = x * y
                    for k, z in enumerate(st[i][j]):
                        if z:
                            acc[k] += xy * z
    return [_clean(x) for x in acc]


def to_form(m):
    c = coordinates(m)
    return Form(9, 2, {blade(a, b): x for (a, b), x in zip(PAIRS, c) if x})


def _form_coords(w):
    return [w.coeffs.get(blade(a, b), 0) for a, b in PAIRS]


def from_coordinates(c):
    return combine(dict(zip(PAIRS, c)), build_bases().spin9)


@dataclass(frozen=True)
class TwistorPoint:
    coefficients: tuple   # x_ab in PAIRS order
    matrix: Matrix

    @classmethod
    def from_coefficients(cls, x):
        x = _coeff_tuple(x)
        return cls(coefficients=x, matrix=from_coordinates(x))

    @classmethod
    def from_matrix(cls, m):
        return cls(coefficients=tuple(coordinates(m)), matrix=m)


def _coeff_tuple(x):
    if isinstance(x, dict):
        for k in x:
            if k not in PAIRS:
                raise ValueError("bad index pair %r" % (k,))
        return tuple(_clean(Fraction(x.get(ab, 0))) for ab in PAIRS)
    x = tuple(_clean(Fraction(v)) for v in x)
    if len(x) != len(PAIRS):
        raise ValueError("need 36 coefficients")
    return x


def is_twistor_point(x):
    m = x.matrix if isinstance(x, TwistorPoint) else from_coordinates(_coeff_tuple(x))
    return m @ m == -Matrix.identity(16)


def tau(j):
    return TwistorPoint(coefficients=tuple(-x for x in j.coefficients), matrix=-j.matrix)


# normal form -------------------------------------------------------------------

def normal_form_matrix(a, b, c, d):
    g = generators()
    out = Matrix.zeros(16)
    for x, (p, q) in zip((a, b, c, d), NORMAL_PAIRS):
        if x:
            out = out + x * (g.gen(p) @ g.gen(q))
    return out


def normal_form_equations_hold(t):
    return all(sum(s * x for s, x in zip(sig, t)) ** 2 == 1 for sig in NORMAL_FORM_SIGNS)


def realized_sign_patterns():
    """Joint eigenvalue patterns of I1I2, I3I4, I5I6, I7I8 on C^16, read off J^2.

    The squares (I_pI_q)^2 = -1, so the patterns come from the commuting
    symmetric involutions K_i = -(I1I2)(I_pI_q); each joint eigenline of the K_i
    gives one equation (a + e2 b + e3 c + e4 d)^2 = 1 up to overall sign.
    """
    g = generators()
    base = g.gen(1) @ g.gen(2)
    ks = [-(base @ g.gen(p) @ g.gen(q)) for p, q in NORMAL_PAIRS[1:]]
    found = set()
    for i in range(16):
        v = [0] * 16
        v[i] = 1
        # project onto joint eigenspaces: prod (1 + e K)/2 applied to e_i
        for eps in _signs(3):
            w = v
            for e, k in zip(eps, ks):
                kw = k @ w
                w = tuple(Fraction(x + e * y, 2) for x, y in zip(w, kw))
            if any(w):
                found.add((1,) + eps)
    return found


def _signs(n):
    if n == 0:
        return [()]
    return [(s,) + r for s in (1, -1) for r in _signs(n - 1)]


def _canonical(sig):
    return sig if sig[0] > 0 else tuple(-s for s in sig)


def normal_form_solutions():
    """All (a, b, c, d) satisfying the eight equations, by exact case analysis.

    Each equation reads N + 2 sum_{i<j} s_i s_j x_i x_j = 1 with N = a^2+b^2+c^2+d^2;
    as a linear system in N and the six products it has the unique solution
    N = 1, products 0, so exactly one coordinate is +-1.
    """
    idx = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    rows = [[Fraction(1)] + [Fraction(2 * s[i] * s[j]) for i, j in idx] + [Fraction(1)]
            for s in NORMAL_FORM_SIGNS]
    aug = Matrix(rows)
    coef = Matrix([r[:-1] for r in rows])
    if coef.rank() != 7 or aug.rank() != 7:
        raise ArithmeticError("normal-form system is not uniquely solvable")
    sols = []
    for k in range(4):
        for s in (1, -1):
            t = [0, 0, 0, 0]
            t[k] = s
            sols.append(tuple(t))
    return [t for t in sols if normal_form_equations_hold(t)
            and normal_form_matrix(*t) @ normal_form_matrix(*t) == -Matrix.identity(16)]


def normal_form_report():
    sols = normal_form_solutions()
    patterns = {_canonical(s) for s in realized_sign_patterns()}
    printed = {_canonical(s) for s in NORMAL_FORM_SIGNS}
    half = (Fraction(1, 2),) * 4
    m = normal_form_matrix(*half)
    return {
        "solutions": len(sols),
        "equations_match_eigenlines": patterns == printed,
        "half_tuple_equations": normal_form_equations_hold(half),
        "half_tuple_square_is_minus_id": m @ m == -Matrix.identity(16),
        "pass": len(sols) == 8 and patterns == printed and not normal_form_equations_hold(half),
    }


def random_twistor_point(seed=0, pairs=1):
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    g = random_spin9_element(rng, pairs=pairs)
    base = generators().gen(1) @ generators().gen(2)
    return TwistorPoint.from_matrix(g.conjugate(base))


def base_point():
    return TwistorPoint.from_matrix(generators().gen(1) @ generators().gen(2))


# torsion and curvature -----------------------------------------------------------

def _dot(u, v):
    return _clean(sum(a * b for a, b in zip(u, v)))


def torsion(gamma, X, Y):
    """T(X, Y) = 6 sum_{a<b<c} <G, T X> T Y - <G, T Y> T X, T = I_a I_b I_c."""
    acc = [0] * 16
    for _, t in build_bases().m:
        tx = t @ X
        ty = t @ Y
        cx = _dot(gamma, tx)
        cy = _dot(gamma, ty)
        if cx or cy:
            for i in range(16):
                acc[i] += 6 * (cx * ty[i] - cy * tx[i])
    return tuple(_clean(x) for x in acc)


def torsion_integrability_residual(gamma, j, X, Y):
    J = j.matrix if isinstance(j, TwistorPoint) else j
    JX = J @ X
    JY = J @ Y
    a = torsion(gamma, JX, JY)
    b = J @ torsion(gamma, JX, Y)
    c = J @ torsion(gamma, X, JY)
    d = torsion(gamma, X, Y)
    return tuple(_clean(p - q - r - s) for p, q, r, s in zip(a, b, c, d))


class CurvatureLike:
    """Antisymmetric bilinear map (X, Y) -> so(16), given by a callable."""

    def __init__(self, fn, name=""):
        self.fn = fn
        self.name = name

    def __call__(self, X, Y):
        return self.fn(X, Y)

    def check(self, X, Y):
        w = self(X, Y)
        return w.is_antisymmetric() and w == -self(Y, X)


def constant_curvature():
    # W(X, Y) Z = <Y, Z> X - <X, Z> Y
    return CurvatureLike(lambda X, Y: Matrix([[X[i] * Y[k] - Y[i] * X[k] for k in range(16)]
                                              for i in range(16)]), "constant")


def zero_curvature():
    return CurvatureLike(lambda X, Y: Matrix.zeros(16), "zero")


def gamma_form(gamma):
    """gamma(X) = sum <G, T X> T over the 84 products T = I_a I_b I_c."""
    ms = build_bases().m

    def g(X):
        coeffs = {k: _dot(gamma, t @ X) for k, t in ms}
        return combine(coeffs, ms)
    return g


def gamma_bracket(gamma):
    g = gamma_form(gamma)
    return CurvatureLike(lambda X, Y: commutator(g(X), g(Y)), "[gamma, gamma]")


def curvature_residual(W, j, X, Y):
    J = j.matrix if isinstance(j, TwistorPoint) else j
    JX = J @ X
    JY = J @ Y
    return (commutator(W(JX, JY), J) - J @ commutator(W(JX, Y), J)
            - J @ commutator(W(X, JY), J) - commutator(W(X, Y), J))


# ad(J) on spin(9) ----------------------------------------------------------------

def ad_matrix(j):
    """36x36 matrix of omega -> [J, omega] in the I_a I_b basis."""
    J = j.matrix if isinstance(j, TwistorPoint) else j
    cols = [coordinates(commutator(J, s)) for s in _S()]
    return Matrix(list(zip(*cols)))


def ad_relations(j, omega=None):
    J = j.matrix
    A = ad_matrix(j)
    A2 = A @ A
    n = 36
    dim_h = n - A.rank()
    dim_perp = n - (A2 + 4 * Matrix.identity(n)).rank()
    semisimple = (A2 @ A2) == -4 * A2   # eigenvalues 0 and -4 only, no nilpotent part
    out = {"dim_h": dim_h, "dim_perp": dim_perp, "semisimple": semisimple}
    ok = dim_h == 22 and dim_perp == 14 and semisimple
    if omega is not None:
        w = to_matrix(omega) if isinstance(omega, Form) else omega
        c = coordinates(w)
        perp = [_clean(Fraction(-x, 4)) for x in A2 @ c]
        par = [_clean(a - b) for a, b in zip(c, perp)]
        wp = from_coordinates(perp)
        jjw = commutator(J, commutator(J, w))
        ad_ok = J @ w @ J.T == w + Fraction(1, 2) * jjw
        out.update({
            "ad_formula": ad_ok,
            "perp_relation": commutator(J, commutator(J, wp)) == -4 * wp,
            "h_part_commutes": commutator(J, from_coordinates(par)).is_zero(),
        })
        ok = ok and ad_ok and out["perp_relation"] and out["h_part_commutes"]
    out["pass"] = ok
    return out


# W22 -----------------------------------------------------------------------------

def w22(c, eta, mu, omega):
    """c omega + [eta, omega] + *(mu ^ omega), with * the Hodge star of R^9."""
    out = omega * c
    if eta:
        br = bracket_coords(_form_coords(eta), _form_coords(omega))
        out = out + Form(9, 2, {blade(a, b): x for (a, b), x in zip(PAIRS, br) if x})
    if mu:
        out = out + hodge(wedge(mu, omega))
    return out


def w22_map(c, eta, mu):
    """The 36x36 matrix of omega -> w22(c, eta, mu, omega) in PAIRS coordinates."""
    cols = []
    for a, b in PAIRS:
        img = w22(c, eta, mu, Form.basis(9, a, b))
        cols.append([img.coeffs.get(blade(p, q), 0) for p, q in PAIRS])
    return Matrix(list(zip(*cols)))


def _apply(W, omega_m):
    if isinstance(W, Matrix):
        return from_coordinates(W @ coordinates(omega_m))
    return to_matrix(W(to_form(omega_m)))


def w22_sides(W, j, omega):
    """([J, W([J, [J, w]])], [J, [J, W([J, w])]]) as spin(9) matrices."""
    J = j.matrix if isinstance(j, TwistorPoint) else j
    w = to_matrix(omega) if isinstance(omega, Form) else omega
    jw = commutator(J, w)
    left = commutator(J, _apply(W, commutator(J, jw)))
    right = commutator(J, commutator(J, _apply(W, jw)))
    return left, right


def w22_residual(W, j, omega):
    left, right = w22_sides(W, j, omega)
    return left - right


def counterexample_map():
    """L0 e1 = e2, L0 e2 = e1, else 0, acting on Lambda^2 as a derivation."""
    L = {1: 2, 2: 1}

    def W(w):
        acc = Form(9, 2)
        for b, x in w.coeffs.items():
            i, k = [t + 1 for t in range(9) if b >> t & 1]
            if i in L:
                acc = acc + Form.basis(9, L[i], k, coeff=x) if L[i] != k else acc
            if k in L:
                acc = acc + Form.basis(9, i, L[k], coeff=x) if L[k] != i else acc
        return acc
    return W


def counterexample_report():
    g = generators()
    J0 = g.gen(1) @ g.gen(2)
    w0 = Form.basis(9, 1, 3)
    left, right = w22_sides(counterexample_map(), J0, w0)
    i13 = g.gen(1) @ g.gen(3)
    return {
        "left": str(to_form(left)),
        "right": str(to_form(right)),
        "left_is_-8_I1I3": left == -8 * i13,
        "right_is_8_I1I3": right == 8 * i13,
        "pass": left == -8 * i13 and right == 8 * i13,
    }


def _random_form(rng, k, size=3, density=1.0):
    from .exterior import blades_of_grade
    return Form(9, k, {b: Fraction(rng.randint(-size, size), rng.randint(1, size))
                       for b in blades_of_grade(9, k) if rng.random() < density})


def family_check(draws=20, seed=0):
    """w22_residual on random members of the (c, eta, mu) family at random (J, omega)."""
    rng = random.Random(seed)
    fails = 0
    for _ in range(draws):
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        eta = _random_form(rng, 2, density=0.3)
        mu = _random_form(rng, 5, density=0.1)
        j = random_twistor_point(rng)
        omega = _random_form(rng, 2, density=0.4)
        r = w22_residual(lambda w: w22(c, eta, mu, w), j, omega)
        fails += not r.is_zero()
    return {"draws": draws, "failures": fails, "pass": fails == 0}


# the 163-parameter family and the converse -----------------------------------------

@lru_cache(maxsize=None)
def family_basis():
    """Matrices of the identity, ad(eta) for basis eta, and *(mu ^ .) for basis mu."""
    from .exterior import blades_of_grade
    out = [w22_map(1, None, None)]
    out += [w22_map(0, Form.basis(9, a, b), None) for a, b in PAIRS]
    out += [w22_map(0, None, Form(9, 5, {m: 1})) for m in blades_of_grade(9, 5)]
    return out


def constraint_operator_rows(A):
    """Rows of W -> A W A^2 - A^2 W A on row-major vec(W), as a dense list."""
    import numpy as np
    p = MODULUS
    Ap = np.array([[mod_p(x) for x in r] for r in A.rows], dtype=np.int64)
    A2 = _matmul_mod(Ap, Ap, p)
    left = _kron_mod(Ap, A2.T.copy(), p)
    right = _kron_mod(A2, Ap.T.copy(), p)
    return (left - right) % p


def _matmul_mod(a, b, p):
    import numpy as np
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = (out + np.outer(a[:, k], b[k]) % p) % p
    return out


def _kron_mod(a, b, p):
    import numpy as np
    return np.kron(a, b) % p


def family_in_kernel_at_base():
    """Exact: every family basis map satisfies A W A^2 = A^2 W A for J = I1 I2.

    The family is stable under Spin(9) and the constraint is equivariant, so
    this covers every point of the orbit, hence every J.
    """
    A = ad_matrix(base_point())
    A2 = A @ A
    bad = sum(1 for W in family_basis() if A @ W @ A2 != A2 @ W @ A)
    return bad == 0


def family_rank():
    return rank_mod_p([{i: x for i, x in enumerate(W.flat()) if x} for W in family_basis()])


def deep_w22_dimension(draws=30, seed=0):
    """Dimension of all W on Lambda^2 with w22_residual = 0 for sampled J.

    Over GF(p) the kernel dimension bounds the rational one from above; the
    family gives the lower bound 163 exactly.
    """
    rng = random.Random(seed)
    ech = ModpEchelon(36 * 36)
    history = []
    for _ in range(draws):
        A = ad_matrix(random_twistor_point(rng))
        ech.add_rows(constraint_operator_rows(A))
        history.append(36 * 36 - ech.rank)
    upper = history[-1]
    lower = family_rank() if family_in_kernel_at_base() else 0
    return {"draws": draws, "kernel_dim_history": history, "upper_bound": upper,
            "family_rank": lower, "expected": FAMILY_DIM,
            "pass": upper == FAMILY_DIM and lower == FAMILY_DIM}


# the general W_{ab} template ------------------------------------------------------

def _L(J, w):
    return -commutator(J, w)


def _Jstar(J, w):
    return J @ w @ J.T


def block_residual(W, j, omega, alpha=2, beta=2):
    """L(W_ab(J* w)) - J*(W_ab(L w)) + W_ab(L w) - L(W_ab(w)) on so(16).

    W is any linear map so(16) -> so(16) given as a callable on matrices;
    W_ab is its Lambda^alpha(V) -> Lambda^beta(V) block.
    """
    J = j.matrix if isinstance(j, TwistorPoint) else j

    def part(m, deg):
        ps, pm, _, _ = project(m)
        return ps if deg == 2 else pm

    def Wab(m):
        return part(W(part(m, alpha)), beta)
    Lw = _L(J, omega)
    return _L(J, Wab(_Jstar(J, omega))) - _Jstar(J, Wab(Lw)) + Wab(Lw) - _L(J, Wab(omega))
