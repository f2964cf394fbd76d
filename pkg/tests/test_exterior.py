from fractions import Fraction

from hypothesis import given, settings, strategies as st

from spin9lab.exterior import (Form, blade, blades_of_grade, contract, dumps, hodge, loads,
                               pullback, rho_action, two_form_of, wedge)
from spin9lab.exact_core import Matrix


def forms(n, k):
    return st.dictionaries(st.sampled_from(blades_of_grade(n, k)), st.integers(-3, 3),
                           max_size=6).map(lambda c: Form(n, k, c))


def test_basis_sign():
    assert Form.basis(4, 2, 1) == -Form.basis(4, 1, 2)
    assert not Form.basis(4, 1, 1)


def test_wedge_of_vectors():
    e1 = Form.basis(3, 1)
    e2 = Form.basis(3, 2)
    assert wedge(e1, e2) == Form.basis(3, 1, 2)
    assert wedge(e2, e1) == -Form.basis(3, 1, 2)


def test_contract_sign():
    w = Form.basis(3, 1, 2, 3)
    assert contract([0, 1, 0], w) == -Form.basis(3, 1, 3)


def test_hodge_r4():
    assert hodge(Form.basis(4, 1, 2)) == Form.basis(4, 3, 4)
    assert hodge(Form.basis(4, 1, 3)) == -Form.basis(4, 2, 4)


@settings(max_examples=50, deadline=None)
@given(forms(5, 2), forms(5, 1), forms(5, 2))
def test_wedge_associative_and_graded(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
    assert wedge(a, b) == wedge(b, a)            # 2 * 1 even
    assert wedge(b, b) == Form(5, 2)


@settings(max_examples=50, deadline=None)
@given(forms(6, 3))
def test_hodge_twice(w):
    assert hodge(hodge(w)) == w * (-1) ** (3 * 3)


@settings(max_examples=30, deadline=None)
@given(forms(6, 2), st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_contract_is_antiderivation(w, v):
    x = Form.vector([1, 0, 2, 0, -1, 1])
    lhs = contract(v, wedge(x, w))
    vx = sum(a * b for a, b in zip(v, [1, 0, 2, 0, -1, 1]))
    assert lhs == w * vx - wedge(x, contract(v, w))


def test_serialization_roundtrip():
    w = Form(5, 2, {blade(1, 2): Fraction(-3, 7), blade(4, 5): 2})
    text = dumps(w)
    assert text.splitlines()[0] == "3 -3/7"
    assert loads(text, 5) == w


def test_pullback_rotation():
    # rotation by 90 degrees in the (1, 2)-plane fixes e1 ^ e2
    g = Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
    assert pullback(g, Form.basis(3, 1, 2)) == Form.basis(3, 1, 2)


def test_rho_action_annihilates_own_two_form():
    A = Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
    w = two_form_of(A)
    assert w
    assert not rho_action(A, w)
