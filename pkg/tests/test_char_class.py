import sympy as sp

from spin9lab import char_class as cc


def test_weights_are_one_per_pair():
    w = cc.spin9_weights()
    assert len(set(w)) == 8
    assert not any(tuple(-x for x in a) in w for a in w)


def test_l4_from_genus():
    assert sp.expand(cc.l_polynomial(4) - cc.l4_printed()) == 0


def test_l2_known():
    p1, p2 = cc.PM[:2]
    assert sp.expand(cc.l_polynomial(2) - (7 * p2 - p1 ** 2) / 45) == 0


def test_first_items_hold():
    r = cc.verify_theorem2()
    for item in ("p1", "p2", "p3", "e"):
        assert r[item]["pass"]
    assert r["euler_squared_is_p8"]["pass"]


def test_p4_from_weights_at_a_point():
    # Theta = (1, 1, 0, 0): four weights square to 1, four vanish, so p4 = 1
    d = cc.item4_discrepancy()
    assert d["at_theta_1100"]["weights"] == "1"


def test_complete_intersection_222():
    r = cc.complete_intersection((2, 2, 2), 11)
    assert r["chern"] == [1, 6, 18, 32, 39, 30, 20, 0, 15]
    assert r["pontrjagin"] == [1, 0, 18, -60, 351]
    assert (r["euler"], r["signature"], r["euler_over_signature"]) == (120, 72, "5/3")


def test_complete_intersection_quadric_surface():
    # quadric in P^3 is P^1 x P^1: chi = 4
    r = cc.complete_intersection((2,), 3)
    assert r["euler"] == 4


def test_divisibility_and_cayley_printed():
    assert cc.divisibility_report()["pass"]
    c = cc.cayley_plane_checks()
    assert c["pass"] and c["chain_value"] == "-1/3"


def test_gradedpoly():
    t = cc.THETA
    g = cc.GradedPoly(t[0] ** 2 + t[1], t, [2] * 4)
    assert str(g.homogeneous(4)) == "Theta1**2"
