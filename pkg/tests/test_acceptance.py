"""Acceptance criteria 1-10.

The heavy suites run once through the CLI (`spin9lab all`, twice in parallel
with the same seed); criteria 3, 4, 5, 8 read that report and criterion 10
compares the two files byte for byte.
"""
import json
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from spin9lab import char_class as cc
from spin9lab import report

SEED = "11"


@pytest.fixture(scope="session")
def all_runs(tmp_path_factory):
    d = tmp_path_factory.mktemp("all")
    paths = [d / "a.json", d / "b.json"]
    procs = [subprocess.Popen([sys.executable, "-m", "spin9lab", "all", "--seed", SEED,
                               "--json", str(p)],
                              stdout=subprocess.DEVNULL, stderr=subprocess.PIPE)
             for p in paths]
    codes = [p.wait(timeout=1800) for p in procs]
    return codes, [p.read_bytes() for p in paths]


@pytest.fixture(scope="session")
def checks(all_runs):
    rep = json.loads(all_runs[1][0])
    return {c["id"]: c for c in rep["checks"]}


def _passed(checks, ids):
    return [i for i in ids if checks[i]["status"] != "pass"]


def _opts():
    import argparse
    return argparse.Namespace(seed=report.DEFAULT_SEED, draws=20, deep=False,
                              out=None, timing=False)


def test_criterion_01_clifford(record):
    t0 = time.monotonic()
    res = report.suite_clifford(_opts())
    dt = time.monotonic() - t0
    rel = [c for c in res if c["id"] == "clifford.relations"][0]
    lit = rel["details"]["reports"]["literal"]
    ok = rel["status"] == "pass" and lit["pairs_passed"] == 81 and dt < 1.0
    record(1, ok, "81 pairs, %.2f s" % dt)
    assert ok


def test_criterion_02_lie_splitting(record):
    res = {c["id"]: c for c in report.suite_liealg(_opts())}
    b, f = res["liealg.bases"]["details"], res["liealg.frame_2forms"]["details"]
    ok = (b["rank_spin9"], b["rank_m"], b["rank_total"]) == (36, 84, 120) and f["rank"] == 120
    record(2, ok, "ranks %d + %d = %d, 2-forms %d"
           % (b["rank_spin9"], b["rank_m"], b["rank_total"], f["rank"]))
    assert ok


def test_criterion_03_omega8(checks, record):
    d = checks["omega8.lower_degrees"]["details"]
    ok = (not _passed(checks, ["omega8.unique", "omega8.invariance_selfdual",
                               "omega8.lower_degrees"])
          and checks["omega8.unique"]["details"]["kernel_dim"] == 1
          and all(d[str(k)] == 0 for k in range(1, 8)))
    record(3, ok, "invariant dims %s, deg 8 -> 1"
           % [d[str(k)] for k in range(1, 8)])
    assert ok


def test_criterion_04_identities(checks, record):
    ids = ["identities.delta_scale1", "identities.delta_scale2",
           "identities.d_scale1", "identities.d_scale2"]
    consts = sorted({x for i in ids for x in checks[i]["details"]["computed_constants"]})
    ok = not _passed(checks, ids) and consts == ["-504"]
    record(4, ok, "expected constant -504, computed %s (Casimir prediction %s)"
           % (consts, checks["identities.casimir"]["details"]["predicted_constant"]))
    assert ok


def test_criterion_05_spinor_dims(checks, record):
    ids = ["spinorforms.p_dims", "spinorforms.decomposition_k1",
           "spinorforms.decomposition_k2", "spinorforms.decomposition_k3",
           "spinorforms.commutant_delta9", "spinorforms.commutant_vector",
           "spinorforms.commutant_lambda2", "spinorforms.commutant_lambda3",
           "spinorforms.commutant_P1"]
    p = checks["spinorforms.p_dims"]["details"]
    sums = [checks["spinorforms.decomposition_k%d" % k]["details"]["dims_sum"] for k in (1, 2, 3)]
    inj = all(piece["injective"] for k in (1, 2, 3)
              for piece in checks["spinorforms.decomposition_k%d" % k]["details"]["pieces"])
    ok = (not _passed(checks, ids) and [p[str(r)] for r in range(4)] == [16, 128, 432, 768]
          and sums == [144, 576, 1344] and inj)
    record(5, ok, "P dims %s, sums %s" % ([p[str(r)] for r in range(4)], sums))
    assert ok


def test_criterion_06_pontrjagin_identities(record):
    v = cc.verify_theorem2()
    items = ["p1", "p2", "p3", "p4", "e", "L4"]
    bad = [k for k in items if not v[k]["pass"]]
    generic = v["L4_generic"]["pass"]
    nums = cc.L4_PRINTED_NUMERATORS
    coeffs_ok = (cc.L4_PRINTED_DENOMINATOR == 3**4 * 5**2 * 7 and generic
                 and sorted(nums.values()) == sorted([381, -71, -19, 22, -3]))
    div = cc.divisibility_report("printed")["pass"]
    cay = cc.cayley_plane_checks("printed")
    chain = Fraction(cay["chain_value"]) == Fraction(-1, 3)
    ok = not bad and coeffs_ok and div and chain
    record(6, ok, "nonzero residuals: %s; L4 coefficients %s; divisibility %s; chain %s"
           % (bad or "none", coeffs_ok, div, cay["chain_value"]))
    assert ok


def test_criterion_07_complete_intersection(record):
    r = cc.complete_intersection((2, 2, 2), 11)
    ok = (r["chern"] == [1, 6, 18, 32, 39, 30, 20, 0, 15]
          and r["pontrjagin"] == [1, 0, 18, -60, 351]
          and (r["euler"], r["signature"]) == (120, 72)
          and Fraction(r["euler_over_signature"]) == Fraction(5, 3))
    record(7, ok, "chi %d sigma %d" % (r["euler"], r["signature"]))
    assert ok


def test_criterion_08_twistor(checks, record):
    ids = [i for i in checks if i.startswith("twistor.")]
    d = {i: checks[i]["details"] for i in ids}
    enough = (d["twistor.ad_split"]["samples"] >= 10
              and all(d["twistor." + k]["draws"] >= 20 for k in
                      ("torsion_orthogonal", "torsion_integrable", "constant_curvature",
                       "gamma_bracket", "w22_family")))
    ce = d["twistor.counterexample"]
    ok = (not _passed(checks, ids) and enough and d["twistor.normal_form"]["solutions"] == 8
          and ce["left_is_-8_I1I3"] and ce["right_is_8_I1I3"])
    record(8, ok, "%d twistor checks" % len(ids))
    assert ok


def test_criterion_09_gamma_table(record):
    res = {c["id"]: c for c in report.suite_liealg(_opts())}
    g, s = res["liealg.gamma_table"]["details"], res["liealg.s1s15"]["details"]
    flagged = [(x["row"], x["col"]) for x in g["diffs"]]
    ok = (g["antisymmetric"] and sorted(flagged) == [(3, 2), (7, 6)]
          and all(x["computed"] for x in g["diffs"])
          and s["pass"] and s["inputs"] == 36)
    record(9, ok, "flagged %s computed %s" % (flagged, [x["computed"] for x in g["diffs"]]))
    assert ok


def test_criterion_10_determinism(all_runs, record):
    codes, blobs = all_runs
    ok = blobs[0] == blobs[1] and len(blobs[0]) > 0 and codes[0] == codes[1]
    record(10, ok, "%d bytes each" % len(blobs[0]))
    assert ok
