"""Verification suites and report assembly.

A suite is a function returning a list of checks, each a dict
{id, paper_ref, status, details}.  paper_ref holds a short descriptive label of
the statement being checked.  Details are plain JSON values so that two runs
with the same seed serialize to identical bytes.
"""

from fractions import Fraction
import json
import logging
import random
import time

log = logging.getLogger("spin9lab")

PASS, FAIL, SKIP = "pass", "fail", "skip"
DEFAULT_SEED = 20240917


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=str)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "item"):       # numpy scalar
        return jsonable(x.item())
    return str(x)


def check(cid, ref, ok, details=None):
    st = SKIP if ok is None else (PASS if ok else FAIL)
    return {"id": cid, "paper_ref": ref, "status": st, "details": jsonable(details or {})}


def _rng_vector(rng, n, size=3):
    return [Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(n)]


# suites ---------------------------------------------------------------------------

def suite_clifford(opts):
    from .clifford import (conjugation_matrix, det, generators, random_spin9_element,
                           select_convention, spin8_block_check)
    from .exact_core import Matrix
    chosen, reports = select_convention()
    g = generators(chosen)
    out = [
        check("clifford.relations", "I_a I_b + I_b I_a = 2 delta_ab Id, I_a symmetric",
              reports[chosen]["pass"] and reports[chosen]["pairs_passed"] == 81,
              {"convention": chosen, "reports": reports}),
        check("clifford.spin8_blocks", "I_a I_b for a, b <= 8 preserve both halves of R^16",
              spin8_block_check(g)["pass"], spin8_block_check(g)),
    ]
    rng = random.Random(opts.seed)
    bad = []
    for k in range(3):
        el = random_spin9_element(rng, pairs=1 + k % 2)
        m = el.matrix
        R = conjugation_matrix(m)
        ok = (m @ m.T == Matrix.identity(16) and R is not None
              and R @ R.T == Matrix.identity(9) and det(R) == 1)
        if not ok:
            bad.append(k)
    out.append(check("clifford.spin9_elements", "products of unit vectors are in Spin(9)",
                     not bad, {"samples": 3, "failures": bad}))
    return out


def suite_liealg(opts):
    from .invariant_forms import frame_2forms
    from .liealg import (bases_report, bracket_closure, build_bases, compare_gamma_table,
                         project, s1s15_report, stabilizer_vanishing)
    from .exact_core import Matrix
    b = bases_report()
    out = [check("liealg.bases", "so(16) = spin(9) + m with dimensions 36 + 84",
                 (b["rank_spin9"], b["rank_m"], b["rank_total"]) == (36, 84, 120)
                 and b["spin9_perp_m"] and b["antisymmetric"], b)]
    f = frame_2forms()
    out.append(check("liealg.frame_2forms", "the 2-forms Omega_ab, Sigma_abc span Lambda^2(R^16)",
                     f["pass"], f))
    rng = random.Random(opts.seed)
    lb = build_bases()
    bad = 0
    for _ in range(3):
        rows = [[0] * 16 for _ in range(16)]
        for i in range(16):
            for j in range(i + 1, 16):
                x = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                rows[i][j], rows[j][i] = x, -x
        A = Matrix(rows)
        ps, pm, _, _ = project(A, lb)
        bad += not (ps + pm == A)
    out.append(check("liealg.projection", "so(16) projection onto spin(9) and m",
                     bad == 0, {"samples": 3, "failures": bad}))
    bc = bracket_closure(lb)
    out.append(check("liealg.brackets", "[spin9, spin9] in spin9, [spin9, m] in m",
                     bc["pass"], bc))
    gt = compare_gamma_table()
    flagged = [(d["row"], d["col"]) for d in gt["diffs"]]
    ok = gt["antisymmetric"] and set(flagged) <= {(3, 2), (7, 6)}
    out.append(check("liealg.gamma_table", "16x16 Gamma matrix of e_16, printed table",
                     ok, gt))
    s = s1s15_report(lb)
    out.append(check("liealg.s1s15", "S^1 x S^15 linear forms mu^1..mu^15", s["pass"], s))
    st = stabilizer_vanishing(lb)
    out.append(check("liealg.stabilizer", "Gamma vanishes on the stabilizer of a spinor",
                     st["pass"], st))
    return out


def suite_spinorforms(opts):
    from . import spinor_forms as sf
    dims = {r: len(sf.p_space(r)) for r in range(4)}
    out = [check("spinorforms.p_dims", "dim P_r = 16, 128, 432, 768",
                 [dims[r] for r in range(4)] == [16, 128, 432, 768], dims)]
    for k in (1, 2, 3):
        d = sf.verify_decomposition(k)
        out.append(check("spinorforms.decomposition_k%d" % k,
                         "Lambda^k(R^9) x Delta_9 = sum of Theta-images of P_r", d["pass"], d))
    c = sf.theta_composite_constant()
    out.append(check("spinorforms.theta_composite", "Theta*_1 Theta_0 is a multiple of Id",
                     c is not None and c != 0, {"constant": c}))
    a = sf.adjointness()
    out.append(check("spinorforms.adjointness", "Theta*_{k+1} is minus the adjoint of Theta_k",
                     a["pass"], a))
    e = sf.theta_equivariance()
    out.append(check("spinorforms.equivariance", "Theta_k commutes with spin(9)", e["pass"], e))
    inv = {r: sf.p_space_invariance(r) for r in range(4)}
    out.append(check("spinorforms.p_invariance", "P_r is spin(9)-invariant", all(inv.values()), inv))
    for row in sf.commutant_report(deep=opts.deep):
        out.append(check("spinorforms.commutant_%s" % row["space"],
                         "Schur commutant dimension", row["pass"], row))
    emb = sf.lambda2_lambda3_embeddings()
    out.append(check("spinorforms.lambda2_lambda3", "Lambda^2(Delta_9) = Lambda^2 + Lambda^3 of R^9",
                     emb["pass"], emb))
    return out


def suite_omega8(opts):
    from .exterior import dumps
    from .invariant_forms import compute_omega8, invariant_dimensions, omega8_checks
    om = compute_omega8()
    log.info("omega8 kernel dim %d", om.kernel_dim)
    c = omega8_checks(om)
    out = [check("omega8.unique", "the invariant 8-forms span a line", om.kernel_dim == 1,
                 {"kernel_dim": om.kernel_dim}),
           check("omega8.invariance_selfdual", "Omega^8 is spin(9)-invariant and self-dual",
                 c["pass"], c)]
    dims = invariant_dimensions(range(1, 8))
    out.append(check("omega8.lower_degrees", "no invariant k-forms for 1 <= k <= 7",
                     all(v == 0 for v in dims.values()), dims))
    if getattr(opts, "out", None):
        with open(opts.out, "w") as fh:
            fh.write(dumps(om.form))
    return out


def suite_identities(opts):
    from .exterior import Form
    from .invariant_forms import (EXPECTED_CONSTANT, casimir_constant, d_identity,
                                  delta_identity, psi_equivariance)
    rng = random.Random(opts.seed)
    gammas = [[int(i == j) for j in range(16)] for i in range(16)]
    gammas += [_rng_vector(rng, 16) for _ in range(5)]
    out = []
    seen = {}
    for name, fn in (("delta", delta_identity), ("d", d_identity)):
        for scale in (1, 2):
            fails = []
            consts = set()
            for i, g in enumerate(gammas):
                r = fn(g, scale=scale)
                consts.add(r["computed_constant"])
                if not r["pass"]:
                    fails.append(i)
            seen[name, scale] = consts
            out.append(check("identities.%s_scale%d" % (name, scale),
                             "nearly parallel identity with constant %d" % EXPECTED_CONSTANT,
                             not fails,
                             {"inputs": len(gammas), "failures": len(fails),
                              "expected_constant": EXPECTED_CONSTANT,
                              "computed_constants": consts}))
    cas = casimir_constant()
    out.append(check("identities.casimir", "Casimir prediction agrees with the computed constant",
                     seen["delta", 1] == {str(cas["predicted_constant"])}, cas))
    g3 = Form(16, 3, {0b111: 1, 0b1011000000: 2, 0b1000000000000011: -1})
    pe = psi_equivariance(g3)
    out.append(check("identities.psi_equivariance", "Psi_1, Psi_2 are Spin(9)-equivariant",
                     pe["pass"], pe))
    return out


def suite_charclass(opts):
    from . import char_class as cc
    t = cc.verify_theorem2()
    out = []
    for item in ("p1", "p2", "p3", "p4", "e", "L4"):
        det = dict(t[item])
        if item == "p4" and not det["pass"]:
            det["discrepancy"] = cc.item4_discrepancy()
        out.append(check("charclass.identity_%s" % item,
                         "Pontrjagin/Euler/L4 of M^16 in terms of p_j(V^9)", det["pass"], det))
    out.append(check("charclass.l4_generic", "L4 = (381, -71, -19, 22, -3)/14175",
                     t["L4_generic"]["pass"], t["L4_generic"]))
    out.append(check("charclass.euler_squared", "e^2 = p_8 for the weight system",
                     t["euler_squared_is_p8"]["pass"], {}))
    d = cc.divisibility_report()
    out.append(check("charclass.divisibility", "integrality and divisibility by 13 for p_1(V) = 2q",
                     d["pass"], {"printed": d, "weights": cc.divisibility_report("weights")}))
    ci = cc.complete_intersection((2, 2, 2), 11)
    ok = (ci["chern"] == [1, 6, 18, 32, 39, 30, 20, 0, 15] and ci["pontrjagin"][1] == 0
          and ci["pontrjagin"][4] == 351 and ci["euler"] == 120 and ci["signature"] == 72
          and ci["euler_over_signature"] == "5/3")
    out.append(check("charclass.complete_intersection", "(2,2,2) in P^11: chi = 120, sigma = 72",
                     ok, ci))
    cp = cc.cayley_plane_checks()
    out.append(check("charclass.cayley_plane", "signature chain = -1/3 int p_4(V^9)", cp["pass"],
                     {"printed": cp, "weights": cc.cayley_plane_checks("weights")}))
    return out


def suite_twistor(opts):
    from . import twistor as tw
    rng = random.Random(opts.seed)
    draws = opts.draws
    out = []
    nf = tw.normal_form_report()
    out.append(check("twistor.normal_form", "J = a I1I2 + b I3I4 + c I5I6 + d I7I8 with J^2 = -Id",
                     nf["pass"], nf))
    pts = [tw.random_twistor_point(rng) for _ in range(max(10, draws // 2))]
    split = [tw.ad_relations(j, tw.Form.basis(9, 1 + i % 8, 9)) for i, j in enumerate(pts)]
    out.append(check("twistor.points", "Spin(9)-conjugates of I1I2 satisfy J^2 = -Id",
                     all(tw.is_twistor_point(j) for j in pts), {"samples": len(pts)}))
    out.append(check("twistor.ad_split", "ad(J)^2 has eigenvalues 0 (dim 22) and -4 (dim 14)",
                     all(s["pass"] for s in split),
                     {"samples": len(split), "failures": sum(not s["pass"] for s in split)}))
    tf = 0
    orth = 0
    cf = 0
    gf = 0
    for i in range(draws):
        j = pts[i % len(pts)]
        G = _rng_vector(rng, 16)
        X = _rng_vector(rng, 16)
        Y = _rng_vector(rng, 16)
        t = tw.torsion(G, X, Y)
        orth += sum(a * b for a, b in zip(t, G)) != 0
        tf += any(tw.torsion_integrability_residual(G, j, X, Y))
        cf += not tw.curvature_residual(tw.constant_curvature(), j, X, Y).is_zero()
        gf += not tw.curvature_residual(tw.gamma_bracket(G), j, X, Y).is_zero()
    out.append(check("twistor.torsion_orthogonal", "g(T(X, Y), Gamma) = 0", orth == 0,
                     {"draws": draws, "failures": orth}))
    out.append(check("twistor.torsion_integrable", "torsion integrability condition", tf == 0,
                     {"draws": draws, "failures": tf}))
    out.append(check("twistor.constant_curvature", "curvature condition for constant curvature",
                     cf == 0, {"draws": draws, "failures": cf}))
    out.append(check("twistor.gamma_bracket", "curvature condition for [Gamma, Gamma]",
                     gf == 0, {"draws": draws, "failures": gf}))
    fam = tw.family_check(draws, seed=rng.randrange(1 << 30))
    out.append(check("twistor.w22_family", "c w + [eta, w] + *(mu ^ w) is integrable",
                     fam["pass"], fam))
    ce = tw.counterexample_report()
    out.append(check("twistor.counterexample", "<44> element gives -8 I1I3 and 8 I1I3",
                     ce["pass"], ce))
    tt = all(tw.tau(tw.tau(j)) == j and tw.tau(j) != j and tw.is_twistor_point(tw.tau(j))
             for j in pts)
    out.append(check("twistor.tau", "tau(J) = -J is a fixed-point-free involution", tt,
                     {"samples": len(pts)}))
    if opts.deep:
        d = tw.deep_w22_dimension(seed=opts.seed)
        out.append(check("twistor.w22_converse", "integrable W22 form a 163-dimensional space",
                         d["pass"], d))
    return out


SUITES = {
    "clifford": suite_clifford,
    "liealg": suite_liealg,
    "spinorforms": suite_spinorforms,
    "omega8": suite_omega8,
    "identities": suite_identities,
    "charclass": suite_charclass,
    "twistor": suite_twistor,
}


def run_suite(name, opts):
    t0 = time.monotonic()
    checks = SUITES[name](opts)
    ids = [c["id"] for c in checks]
    if len(ids) != len(set(ids)):
        raise RuntimeError("duplicate check ids in suite %s" % name)
    ms = int((time.monotonic() - t0) * 1000)
    log.info("suite %s: %d checks in %d ms", name, len(checks), ms)
    return {"suite": name, "checks": checks,
            "elapsed_ms": ms if getattr(opts, "timing", False) else None}


def run_all(opts):
    parts = [run_suite(name, opts) for name in SUITES]
    ms = sum(p["elapsed_ms"] or 0 for p in parts)
    return {"suite": "all", "checks": [c for p in parts for c in p["checks"]],
            "elapsed_ms": ms if getattr(opts, "timing", False) else None}


def failed(report):
    return any(c["status"] == FAIL for c in report["checks"])


def to_json(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def to_text(report):
    lines = ["[%s]" % report["suite"]]
    for c in report["checks"]:
        lines.append("  %-4s %-36s %s" % (c["status"].upper(), c["id"], c["paper_ref"]))
    n = {st: sum(c["status"] == st for c in report["checks"]) for st in (PASS, FAIL, SKIP)}
    lines.append("%d passed, %d failed, %d skipped" % (n[PASS], n[FAIL], n[SKIP]))
    if report["elapsed_ms"] is not None:
        lines.append("elapsed %d ms" % report["elapsed_ms"])
    return "\n".join(lines) + "\n"
