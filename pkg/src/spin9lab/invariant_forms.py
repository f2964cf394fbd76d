"""The Spin(9)-invariant 8-form on R^16 and its algebraic identities."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .clifford import generators, spin9_element
from .exact_core import axpy, common_kernel, span_rank, _clean
from .exterior import (Form, blades_of_grade, contract, hodge, pullback, rho_operator,
                       two_form_of, wedge, zero)
from .liealg import PAIRS, TRIPLES, build_bases
from .spinor_forms import GENERATOR_ORDER

EXPECTED_CONSTANT = -504


class InconsistencyError(RuntimeError):
    """Raised when a computed invariant contradicts a structural guarantee."""


@dataclass(frozen=True)
class Omega8:
    form: Form
    pivot_blade: int
    scale: int          # the primitive kernel vector was multiplied by this
    kernel_dim: int


def frame_2forms():
    g = generators()
    omegas = {ab: two_form_of(g.gen(ab[0]) @ g.gen(ab[1])) for ab in PAIRS}
    sigmas = {t: two_form_of(g.gen(t[0]) @ g.gen(t[1]) @ g.gen(t[2])) for t in TRIPLES}
    rank = span_rank([f.coeffs for f in list(omegas.values()) + list(sigmas.values())])
    # Sigma_{bac} = -Sigma_{abc} = Sigma_{bca}, checked on one triple
    s213 = two_form_of(g.gen(2) @ g.gen(1) @ g.gen(3))
    s231 = two_form_of(g.gen(2) @ g.gen(3) @ g.gen(1))
    swap_ok = s213 == -sigmas[(1, 2, 3)] and s231 == sigmas[(1, 2, 3)]
    return {"omega_forms": len(omegas), "sigma_forms": len(sigmas), "rank": rank,
            "index_symmetry": swap_ok, "pass": rank == 120 and swap_ok}


@lru_cache(maxsize=None)
def _spin9_operators():
    g = generators()
    return tuple(rho_operator(g.gen(a) @ g.gen(b)) for a, b in GENERATOR_ORDER)


def invariant_basis(k, n=16):
    """Integer basis of the spin(9)-invariant k-forms on R^16 (torus generators first)."""
    basis = [{b: 1} for b in blades_of_grade(n, k)]
    return common_kernel(basis, _spin9_operators())


def invariant_dimensions(ks=range(1, 9)):
    return {k: len(invariant_basis(k)) for k in ks}


@lru_cache(maxsize=None)
def compute_omega8():
    basis = invariant_basis(8)
    if len(basis) != 1:
        raise InconsistencyError("invariant 8-forms span %d dimensions, expected 1" % len(basis))
    vec = basis[0]   # primitive: coprime integers, least blade positive
    pivot = min(vec)
    return Omega8(form=Form(16, 8, vec), pivot_blade=pivot, scale=1, kernel_dim=1)


def omega8_checks(omega=None):
    omega = omega or compute_omega8()
    w = omega.form
    ops = _spin9_operators()
    annihilated = all(not op(w.coeffs) for op in ops)
    star = hodge(w)
    # two sparse rational group elements: conjugate pairs of unit vectors
    v1 = (Fraction(3, 5), Fraction(4, 5), 0, 0, 0, 0, 0, 0, 0)
    v2 = (0, 1, 0, 0, 0, 0, 0, 0, 0)
    v3 = (Fraction(3, 5), 0, 0, 0, 0, 0, 0, 0, Fraction(4, 5))
    v4 = (0, 0, 1, 0, 0, 0, 0, 0, 0)
    fixed = []
    for vecs in ((v1, v2), (v3, v4)):
        gm = spin9_element(vecs).matrix
        fixed.append(pullback(gm, w) == w)
    return {
        "terms": len(w),
        "coefficients": sorted({abs(x) for x in w.coeffs.values()}),
        "pivot_blade": "%x" % omega.pivot_blade,
        "annihilated_by_generators": annihilated,
        "self_dual": star == w,
        "anti_self_dual": star == -w,
        "group_fixed": fixed,
        "pass": annihilated and star == w and all(fixed),
    }


# nearly-parallel identities ----------------------------------------------------

@lru_cache(maxsize=None)
def _m_terms(scale=1):
    """(I_c I_b I_a as matrix, rho_8(I_a I_b I_c) Omega) for the 84 triples."""
    g = generators()
    w = compute_omega8().form
    out = []
    for (a, b, c), T in build_bases(g).m:
        rev = g.gen(c) @ g.gen(b) @ g.gen(a)
        img = rho_operator(T)(w.coeffs)
        out.append((rev, Form(16, 8, {k: scale * x for k, x in img.items()})))
    return tuple(out)


def delta_side(gamma, scale=1):
    """A(Gamma) = -6 sum contract(I_c I_b I_a Gamma, rho_8(I_a I_b I_c) Omega)."""
    acc = {}
    for rev, img in _m_terms(scale):
        v = rev @ list(gamma)
        if any(v):
            axpy(acc, -6, contract(v, img).coeffs)
    return Form(16, 7, acc)


def d_side(gamma, scale=1):
    """B(Gamma) = 6 sum (I_c I_b I_a Gamma) ^ rho_8(I_a I_b I_c) Omega."""
    acc = {}
    for rev, img in _m_terms(scale):
        v = rev @ list(gamma)
        if any(v):
            axpy(acc, 6, wedge(Form.vector(v), img).coeffs)
    return Form(16, 9, acc)


def _identity_report(lhs, rhs, expected):
    c = lhs.ratio_to(rhs) if rhs else (0 if not lhs else None)
    residual = lhs - rhs * expected
    return {
        "expected_constant": expected,
        "computed_constant": None if c is None else str(c) if rhs else "any",
        "proportional": c is not None,
        "residual_terms": len(residual),
        "pass": not residual,
    }


def delta_identity(gamma, scale=1, expected=EXPECTED_CONSTANT):
    w = compute_omega8().form * scale
    return _identity_report(delta_side(gamma, scale), contract(list(gamma), w), expected)


def d_identity(gamma, scale=1, expected=EXPECTED_CONSTANT):
    w = compute_omega8().form * scale
    return _identity_report(d_side(gamma, scale), hodge(contract(list(gamma), w)), expected)


def casimir_constant():
    """Independent prediction of the delta constant.

    Pairing A(e_i) with e_i -| Omega and summing over i turns the sum into
    6 * sum_T |rho(T) Omega|^2 / (8 |Omega|^2), since sum_i e_i^T ^ (e_i -|)
    acting through I_c I_b I_a = -T is the derivation -rho(T).  The sum over
    the m-basis is the so(16) Casimir on Lambda^8 (spin(9) kills Omega).
    """
    w = compute_omega8().form
    num = sum(img.dot(img) for _, img in _m_terms(1))
    den = w.dot(w)
    return {"sum_rho_T_sq_over_norm": _clean(Fraction(num, den)),
            "predicted_constant": _clean(Fraction(6 * num, 8 * den))}


def psi_maps(gamma3):
    if gamma3.n != 16 or gamma3.k != 3:
        raise ValueError("psi_maps needs a 3-form on R^16")
    w = compute_omega8().form
    unit = [[1 if i == j else 0 for j in range(16)] for i in range(16)]
    psi1 = zero(16, 9)
    psi2 = zero(16, 7)
    for i in range(16):
        gi = contract(unit[i], gamma3)
        if not gi:
            continue
        psi1 = psi1 + wedge(gi, contract(unit[i], w))
        for j in range(16):
            gij = contract(unit[i], contract(unit[j], gamma3))
            if gij:
                psi2 = psi2 + wedge(gij, contract(unit[i], contract(unit[j], w)))
    return psi1, hodge(psi2)


def psi_equivariance(gamma3, pairs=GENERATOR_ORDER):
    g = generators()
    base = psi_maps(gamma3)
    bad = 0
    for a, b in pairs:
        op = rho_operator(g.gen(a) @ g.gen(b))
        moved = psi_maps(Form(16, 3, op(gamma3.coeffs)))
        for before, after in zip(base, moved):
            if Form(16, 9, op(before.coeffs)) != after:
                bad += 1
    return {"generators": len(pairs), "failures": bad, "pass": bad == 0}
