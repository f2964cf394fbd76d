from spin9lab import spinor_forms as sf


def test_p_dimensions_small():
    assert [len(sf.p_space(r)) for r in (0, 1, 2)] == [16, 128, 432]


def test_theta_composite_constant():
    assert sf.theta_composite_constant() == -9


def test_adjointness_and_equivariance():
    assert sf.adjointness(kmax=1)["pass"]
    assert sf.theta_equivariance(kmax=1)["pass"]


def test_decomposition_k1_k2():
    for k, total in ((1, 144), (2, 576)):
        r = sf.verify_decomposition(k)
        assert r["pass"] and r["total_rank"] == total


def test_p1_invariant():
    assert sf.p_space_invariance(1)


def test_commutants():
    acts, n = sf.generator_actions("delta9")
    assert sf.commutant_dim(acts, n) == 1
    acts, n = sf.generator_actions("delta9+delta9")
    assert sf.commutant_dim(acts, n) == 4


def test_embeddings():
    assert sf.lambda2_lambda3_embeddings()["pass"]
