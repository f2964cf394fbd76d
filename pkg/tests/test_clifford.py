from fractions import Fraction

import pytest

from spin9lab.clifford import (build_generators, conjugation_matrix, det, e_matrix, generators,
                               rational_unit_vector, select_convention, spin8_block_check,
                               spin9_element, verify_clifford_relations)
from spin9lab.exact_core import Matrix


def test_i9_is_diagonal():
    I9 = generators().gen(9)
    assert I9 == Matrix([[(1 if i < 8 else -1) if i == j else 0 for j in range(16)]
                         for i in range(16)])


def test_e1_sends_e8_to_e1():
    assert e_matrix(1)[0, 7] == 1


def test_relations_both_conventions():
    chosen, reports = select_convention()
    assert chosen == "literal"
    for r in reports.values():
        assert r["pairs_checked"] == 81 and r["pass"]


def test_involutions():
    g = generators()
    for a in range(1, 10):
        assert g.gen(a) @ g.gen(a) == Matrix.identity(16)


def test_spin8_blocks():
    assert spin8_block_check(build_generators())["pass"]


def test_broken_generators_are_reported():
    g = build_generators()
    bad = type(g)(e=g.e, I=[g.I[0], g.I[0]] + list(g.I[2:]), convention="broken")
    r = verify_clifford_relations(bad)
    assert not r["pass"] and (1, 2) in r["failing_pairs"]


def test_spin9_element_errors():
    with pytest.raises(ValueError):
        spin9_element([(1, 0, 0, 0, 0, 0, 0, 0, 0)])
    with pytest.raises(ValueError):
        spin9_element([(1, 1, 0, 0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0, 0)])


def test_unit_vector_is_exact():
    v = rational_unit_vector(seed=4)
    assert sum(x * x for x in v) == 1


def test_conjugation_is_rotation():
    v1 = rational_unit_vector(seed=1)
    v2 = rational_unit_vector(seed=2)
    m = spin9_element([v1, v2]).matrix
    assert m @ m.T == Matrix.identity(16)
    R = conjugation_matrix(m)
    assert R is not None and R @ R.T == Matrix.identity(9) and det(R) == 1


def test_product_of_two_basis_vectors():
    e1 = (1, 0, 0, 0, 0, 0, 0, 0, 0)
    e2 = (0, 1, 0, 0, 0, 0, 0, 0, 0)
    g = generators()
    assert spin9_element([e1, e2]).matrix == -(g.gen(1) @ g.gen(2))
    half = (Fraction(3, 5), Fraction(4, 5), 0, 0, 0, 0, 0, 0, 0)
    assert spin9_element([half, e2]).matrix @ spin9_element([half, e2]).matrix.T == Matrix.identity(16)
