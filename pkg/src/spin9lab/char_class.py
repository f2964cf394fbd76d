"""Weight calculus for the Pontrjagin classes of a Spin(9)-structure.

Cohomology classes are polynomials with rational coefficients (sympy ``Poly``
over QQ).  Theta_1..Theta_4 are the torus coordinates of SO(9), so that
p_j(V) = e_j(Theta_1^2, ..., Theta_4^2).
"""

from fractions import Fraction
from math import prod

import sympy as sp
from sympy.polys.polyfuncs import symmetrize

THETA = sp.symbols("Theta1:5")
T = sp.symbols("t1:5")              # t_i = Theta_i^2
PV = sp.symbols("p1V p2V p3V p4V")  # p_j(V)
PM = sp.symbols("p1 p2 p3 p4")      # abstract p_j
Q_, X = sp.symbols("q x")
half = sp.Rational(1, 2)


class GradedPoly:
    """Polynomial with rational coefficients and a degree attached to each variable."""

    def __init__(self, expr, gens, degrees):
        self.gens = tuple(gens)
        self.degrees = dict(zip(self.gens, degrees))
        self.poly = sp.Poly(sp.expand(expr), *self.gens, domain="QQ")

    def expr(self):
        return self.poly.as_expr()

    def terms(self):
        return {m: Fraction(int(c.p), int(c.q)) for m, c in self.poly.terms()}

    def degree_of(self, monom):
        return sum(e * self.degrees[g] for e, g in zip(monom, self.gens))

    def homogeneous(self, d):
        expr = sum(c * prod(g ** e for g, e in zip(self.gens, m))
                   for m, c in self.poly.terms() if self.degree_of(m) == d)
        return GradedPoly(expr, self.gens, [self.degrees[g] for g in self.gens])

    def is_zero(self):
        return self.poly.is_zero

    def __eq__(self, other):
        return isinstance(other, GradedPoly) and self.gens == other.gens and self.poly == other.poly

    def __str__(self):
        return str(self.expr())


def spin9_weights():
    """The eight weights of the spin representation as printed, in Theta coordinates."""
    h = Fraction(1, 2)
    return [
        (h, h, h, h), (h, h, h, -h), (h, h, -h, h), (h, -h, h, h),
        (-h, h, h, h), (h, h, -h, -h), (h, -h, h, -h), (-h, h, h, -h),
    ]


def standard_weights():
    return [tuple(Fraction(int(i == j)) for j in range(4)) for i in range(4)]


def weight_expr(w):
    return sum(sp.Rational(c.numerator, c.denominator) * t for c, t in zip(w, THETA))


def elementary(values, k):
    """e_k of a list of sympy expressions."""
    poly = [sp.Integer(1)]
    for v in values:
        poly = [poly[0]] + [poly[i] + v * poly[i - 1] for i in range(1, len(poly))] + [v * poly[-1]]
    return sp.expand(poly[k]) if k < len(poly) else sp.Integer(0)


def pontrjagin_of_weights(w, k):
    """p_k = e_k(mu_1^2, ..., mu_n^2) as a polynomial in Theta (degree 4k)."""
    sq = [weight_expr(x) ** 2 for x in w]
    return GradedPoly(elementary(sq, k), THETA, [2] * 4)


def euler_of_weights(w):
    return GradedPoly(sp.expand(prod(weight_expr(x) for x in w)), THETA, [2] * 4)


def to_pv(gpoly):
    """Rewrite an even, Weyl-symmetric polynomial in Theta through p_j(V)."""
    expr = gpoly.expr()
    sub = sp.expand(expr)
    # even in every Theta_i: substitute Theta_i^2 = t_i
    p = sp.Poly(sub, *THETA)
    if any(e % 2 for m in p.monoms() for e in m):
        raise ValueError("polynomial is not even in every Theta")
    in_t = sum(c * prod(t ** (e // 2) for t, e in zip(T, m)) for m, c in p.terms())
    sym, rest = _symmetrize(in_t)
    if rest != 0:
        raise ValueError("polynomial is not symmetric in the Theta_i^2")
    return sp.expand(sym)


def _symmetrize(expr):
    sym, rest, defs = symmetrize(sp.expand(expr), *T, formal=True)
    subs = {s: PV[int(str(s)[1:]) - 1] for s, _ in defs}
    return sp.expand(sym.subs(subs)), rest


def pv_to_theta(expr):
    subs = {PV[j]: elementary([t ** 2 for t in THETA], j + 1) for j in range(4)}
    return sp.expand(sp.sympify(expr).subs(subs))


p1V, p2V, p3V, p4V = PV
R = sp.Rational

PRINTED_CLASSES = {
    "p1": 2 * p1V,
    "p2": R(7, 4) * p1V ** 2 - p2V,
    "p3": R(1, 8) * (7 * p1V ** 3 - 12 * p1V * p2V + 16 * p3V),
    "p4": R(1, 128) * (35 * p1V ** 4 - 120 * p1V ** 2 * p2V + 400 * p1V * p3V - 1664 * p4V),
    "e": R(1, 256) * p1V ** 4 - R(1, 32) * p1V ** 2 * p2V + R(1, 16) * p2V ** 2 - R(1, 4) * p4V,
    "L4": R(1, 1814400) * (3551 * p1V ** 4 - 21208 * p1V ** 2 * p2V + 116048 * p1V * p3V
                            - 128 * (19 * p2V ** 2 + 4953 * p4V)),
}

L4_PRINTED_NUMERATORS = {(0, 0, 0, 1): 381, (1, 0, 1, 0): -71, (0, 2, 0, 0): -19,
                         (2, 1, 0, 0): 22, (4, 0, 0, 0): -3}
L4_PRINTED_DENOMINATOR = 3 ** 4 * 5 ** 2 * 7


def l4_printed():
    p1, p2, p3, p4 = PM
    return sum(R(c, L4_PRINTED_DENOMINATOR) * p1 ** m[0] * p2 ** m[1] * p3 ** m[2] * p4 ** m[3]
               for m, c in L4_PRINTED_NUMERATORS.items())


def l_polynomial(k=4):
    """Hirzebruch L_k in p_1..p_k from the characteristic series sqrt(z)/tanh(sqrt(z))."""
    z = sp.symbols("z")
    s = sp.sqrt(z)
    series = sp.series(s / sp.tanh(s), z, 0, k + 1).removeO()
    coeffs = [sp.nsimplify(series.coeff(z, i)) for i in range(k + 1)]
    zs = sp.symbols("z1:%d" % (k + 1))
    total = sp.Integer(1)
    for zi in zs:
        total = sp.expand(total * sum(c * zi ** i for i, c in enumerate(coeffs)))
        total = _truncate(total, zs, k)
    top = sum(c * prod(v ** e for v, e in zip(zs, m))
              for m, c in sp.Poly(total, *zs).terms() if sum(m) == k)
    sym, rest, defs = symmetrize(sp.expand(top), *zs, formal=True)
    subs = {s_: PM[int(str(s_)[1:]) - 1] for s_, _ in defs}
    return sp.expand(sym.subs(subs))


def _truncate(expr, gens, k):
    p = sp.Poly(expr, *gens)
    return sum(c * prod(v ** e for v, e in zip(gens, m)) for m, c in p.terms() if sum(m) <= k)


def weight_classes():
    """p_k(M) and e(M) from the weights, rewritten in p_j(V)."""
    w = spin9_weights()
    out = {}
    for k in range(1, 5):
        out["p%d" % k] = to_pv(pontrjagin_of_weights(w, k))
    out["e"] = to_pv(euler_of_weights(w))
    return out


def verify_theorem2():
    computed = weight_classes()
    report = {}
    for name in ("p1", "p2", "p3", "p4", "e"):
        # residual as a polynomial in Theta: both sides pulled back to the torus
        w = spin9_weights()
        lhs = (pontrjagin_of_weights(w, int(name[1])) if name != "e" else euler_of_weights(w)).expr()
        resid = sp.expand(lhs - pv_to_theta(PRINTED_CLASSES[name]))
        report[name] = {"computed": str(computed[name]), "printed": str(PRINTED_CLASSES[name]),
                        "residual": str(resid), "pass": resid == 0}
    # item 6: generic L_4 in p_k(M), then p_k(M) through items 1-4
    subs = {PM[k]: computed["p%d" % (k + 1)] for k in range(4)}
    l4 = sp.expand(l4_printed().subs(subs))
    resid = sp.expand(pv_to_theta(l4 - PRINTED_CLASSES["L4"]))
    report["L4"] = {"computed": str(l4), "printed": str(PRINTED_CLASSES["L4"]),
                    "residual": str(resid), "pass": resid == 0}
    generic = l_polynomial(4)
    lp = sp.Poly(generic, *PM)
    coeffs = {m: lp.coeff_monomial(m) * L4_PRINTED_DENOMINATOR for m in L4_PRINTED_NUMERATORS}
    gen_ok = (sp.expand(generic - l4_printed()) == 0)
    report["L4_generic"] = {"numerators": {str(m): str(c) for m, c in coeffs.items()},
                            "denominator": L4_PRINTED_DENOMINATOR, "pass": gen_ok}
    w = spin9_weights()
    e2 = sp.expand(euler_of_weights(w).expr() ** 2 - pontrjagin_of_weights(w, 8).expr())
    report["euler_squared_is_p8"] = {"pass": e2 == 0}
    report["p1_sum_of_squares"] = {
        "pass": sp.expand(pontrjagin_of_weights(w, 1).expr() - 2 * sum(t ** 2 for t in THETA)) == 0}
    return report


def classes(source="printed"):
    """p_k(M), e(M) in p_j(V): the printed expressions or the ones derived from the weights."""
    if source == "printed":
        return dict(PRINTED_CLASSES)
    if source == "weights":
        return weight_classes()
    raise ValueError("unknown source %r" % source)


def item4_discrepancy():
    """Weights minus printed for p_4(M); nonzero means the printed item 4 is not an identity."""
    d = sp.factor(weight_classes()["p4"] - PRINTED_CLASSES["p4"])
    # evaluation point where it shows: Theta = (1, 1, 0, 0)
    at = {t: v for t, v in zip(THETA, (1, 1, 0, 0))}
    w = spin9_weights()
    return {"difference": str(d),
            "at_theta_1100": {"weights": str(pontrjagin_of_weights(w, 4).expr().subs(at)),
                              "printed": str(pv_to_theta(PRINTED_CLASSES["p4"]).subs(at))}}


def _int_coeffs(expr, gens):
    p = sp.Poly(sp.expand(expr), *gens)
    return all(c.is_integer for c in p.coeffs())


def divisibility_report(source="printed"):
    c = classes(source)
    q = Q_
    sub = {p1V: 2 * q}
    gens = (q, p2V, p3V, p4V)
    pM = {k: sp.expand(c[k].subs(sub)) for k in ("p1", "p2", "p3", "p4")}
    x = sp.expand(pM["p1"] / 4)
    item2 = sp.expand(half * (pM["p3"] - 3 * x * pM["p2"]))
    combo = sp.expand(R(175, 8) * x ** 4 - R(45, 8) * x ** 2 * pM["p2"]
                      + R(25, 8) * x * pM["p3"] - pM["p4"])
    eight = sp.Poly(8 * combo, *gens)
    combo_poly = sp.Poly(combo, *gens)
    return {
        "x": str(x),
        "item1_x_integral": _int_coeffs(x, gens) and sp.expand(x - q) == 0,
        "item2": str(item2),
        "item2_integral": _int_coeffs(item2, gens),
        "item3_combination": str(combo),
        "item3_8x_coefficients": [str(v) for v in eight.coeffs()],
        "item3_8x_div_13": all(v.is_integer and int(v) % 13 == 0 for v in eight.coeffs()),
        "item3_combination_integral": all(v.is_integer for v in combo_poly.coeffs()),
        "source": source,
        "pass": (_int_coeffs(x, gens) and _int_coeffs(item2, gens)
                 and all(v.is_integer and int(v) % 13 == 0 for v in eight.coeffs())),
    }


def complete_intersection(degrees, ambient_dim):
    """Chern and Pontrjagin classes, Euler number and signature of a complete intersection.

    c(M) = (1+x)^(n+1) / prod(1 + d x) truncated at the complex dimension;
    p_k = (-1)^k [c(x) c(-x)]_{2k}; the top power of x integrates to prod(d).
    """
    n = ambient_dim
    dim = n - len(degrees)
    if dim < 0 or any(d < 1 for d in degrees):
        raise ValueError("inconsistent complete intersection data")
    x = X
    c = sp.series((1 + x) ** (n + 1) / prod(1 + d * x for d in degrees), x, 0, dim + 1).removeO()
    c = sp.Poly(c, x)
    chern = [int(c.coeff_monomial(x ** i)) for i in range(dim + 1)]
    cc = sp.Poly(sp.expand(c.as_expr() * c.as_expr().subs(x, -x)), x)
    pont = [(-1) ** k * int(cc.coeff_monomial(x ** (2 * k))) for k in range(dim // 2 + 1)]
    integral = prod(degrees)
    euler = chern[dim] * integral
    out = {"chern": chern, "pontrjagin": pont, "euler": euler}
    if dim == 8:
        vals = dict(zip(PM, pont[1:5]))
        sig = l4_printed().subs(vals) * integral
        out["signature"] = int(sig) if sig.is_integer else str(sig)
        out["euler_over_signature"] = str(sp.Rational(euler, sig)) if sig else None
    return out


def cayley_plane_checks(source="printed"):
    # relations under p1(V) = 0
    c = classes(source)
    zero = {p1V: 0}
    pM = {k: sp.expand(c[k].subs(zero)) for k in ("p2", "p3", "p4", "e")}
    rel = {
        "p2M=-p2V": sp.expand(pM["p2"] + p2V) == 0,
        "p3M=2p3V": sp.expand(pM["p3"] - 2 * p3V) == 0,
        "p4M=-13p4V": sp.expand(pM["p4"] + 13 * p4V) == 0,
        "e=(p2V^2-4p4V)/16": sp.expand(pM["e"] - R(1, 16) * (p2V ** 2 - 4 * p4V)) == 0,
    }
    # the chain with A/B = -39/36 from p2^2 = 36, p4 = 39
    ratio = -Fraction(39, 36)
    step = 19 * Fraction(36, 39) * 13
    chain = -Fraction(1, 14175) * (19 * Fraction(36, 39) * Fraction(-1664, 128) + 4953)
    l4_v = sp.expand(PRINTED_CLASSES["L4"].subs(zero))
    l4_form = sp.expand(l4_v + R(1, 14175) * (19 * p2V ** 2 + 4953 * p4V)) == 0
    # 39 p2(M)^2 = 36 p4(M) turns p2(V)^2 into -12 p4(V)
    sig = sp.expand(l4_v.subs(p2V ** 2, R(36, 39) * (-13) * p4V))
    e_vs_sigma = sp.expand(pM["e"].subs(p2V ** 2, -12 * p4V) - 3 * sig) == 0
    return {
        "A_over_B": str(ratio),
        "19*36/39*13": str(step),
        "(4953-228)/14175": str(Fraction(4953 - 228, 14175)),
        "chain_value": str(chain),
        "L4_at_p1V_0": l4_form,
        "signature_in_p4V": str(sig),
        "relations": rel,
        "e_equals_3_sigma": e_vs_sigma,
        "source": source,
        "pass": (chain == Fraction(-1, 3) and step == 228 and l4_form and all(rel.values())
                 and sp.expand(sig + R(1, 3) * p4V) == 0 and e_vs_sigma),
    }
