from fractions import Fraction

import pytest

from spin9lab.exact_core import Matrix
from spin9lab.liealg import (bases_report, build_bases, compare_gamma_table, gamma_matrix_of,
                             parse_token, printed_gamma, project, s1s15_report,
                             stabilizer_vanishing)


def test_bases_dimensions():
    r = bases_report()
    assert (r["spin9"], r["m"]) == (36, 84)
    assert (r["rank_spin9"], r["rank_m"], r["rank_total"]) == (36, 84, 120)
    assert r["spin9_perp_m"] and r["norms"] == [16]


def test_projection_of_basis_elements():
    lb = build_bases()
    (ab, s), (abc, m) = lb.spin9[5], lb.m[7]
    ps, pm, cs, cm = project(s + 2 * m, lb)
    assert ps == s and pm == 2 * m
    assert cs == {ab: 1} and cm == {abc: 2}


def test_project_rejects_symmetric():
    with pytest.raises(ValueError):
        project(Matrix.identity(16))


def test_parse_token():
    assert parse_token("-7s1") == {0: -7}
    assert parse_token("s13") == {12: 1}


def test_gamma_tensor_antisymmetric():
    g = gamma_matrix_of([0] * 15 + [1])
    assert g.is_antisymmetric()
    assert g.entry(0, 15) == {0: -7}


def test_gamma_table_two_flagged_entries():
    r = compare_gamma_table()
    assert r["best_scale"] == -1
    assert sorted((d["row"], d["col"]) for d in r["diffs"]) == [(3, 2), (7, 6)]
    for d in r["diffs"]:
        assert d["printed"].replace("-", "") == "s13"
        assert d["computed"].replace("-", "") == "2s13"
    assert r["mismatch_counts"]["1"] > 100


def test_printed_table_antisymmetric_except_typos():
    p = printed_gamma()
    assert p.entry(1, 2) != {k: -v for k, v in p.entry(2, 1).items()}


def test_s1s15_uniform_ratio():
    r = s1s15_report()
    assert r["pass"] and r["ratio_computed_over_printed"] == ["1/16"]


def test_stabilizer():
    r = stabilizer_vanishing()
    assert r["stabilizer_dim"] == 21 and r["pass"]
