import random

import pytest
from hypothesis import given, settings

from pairrules.associativity import CommutativeA, classify, reconstruct_gamma
from pairrules.pairs import GammaVector, Pair, STANDARD_GAMMAS, StandardForm, bilinear_mul, pair_add
from pairrules.regrading import (
    Inadmissible,
    ReductionResult,
    Regrading,
    SingularRegradingError,
    apply_to_pair,
    mu_of,
    reduce_to_standard,
    transform_gamma,
)

from conftest import pairs_exact


def random_regrading(rng):
    while True:
        try:
            return Regrading(*(rng.uniform(-2, 2) for _ in range(4)))
        except SingularRegradingError:
            continue


def test_apply_examples():
    assert apply_to_pair(Regrading.identity(), Pair(3, 4)) == Pair(3, 4)
    assert apply_to_pair(Regrading(1, -1, 1, 1), Pair(1, 0)) == Pair(1, 1)
    assert apply_to_pair(Regrading(0, 1, 1, 0), Pair(5, 7)) == Pair(7, 5)


def test_singular_rejected():
    with pytest.raises(SingularRegradingError):
        Regrading(1, 2, 2, 4)
    with pytest.raises(SingularRegradingError):
        Regrading(0, 0, 0, 0)


def test_identity_transform_keeps_gamma():
    for form in StandardForm:
        got = transform_gamma(Regrading.identity(), form.gamma)
        assert max(
            abs(x - y) for x, y in zip(got.as_tuple(), form.gamma.as_tuple())
        ) < 1e-12


def test_homomorphism_law_is_ground_truth(rng):
    # the defining property of the coefficient matrix, on random draws
    for _ in range(1000):
        m = random_regrading(rng)
        g = GammaVector(*(rng.uniform(-2, 2) for _ in range(8)))
        gp = transform_gamma(m, g)
        a = Pair(rng.uniform(-2, 2), rng.uniform(-2, 2))
        b = Pair(rng.uniform(-2, 2), rng.uniform(-2, 2))
        lhs = apply_to_pair(m, bilinear_mul(g, a, b))
        rhs = bilinear_mul(gp, apply_to_pair(m, a), apply_to_pair(m, b))
        scale = max(1.0, abs(lhs.c1), abs(lhs.c2))
        assert abs(lhs.c1 - rhs.c1) / scale < 1e-9
        assert abs(lhs.c2 - rhs.c2) / scale < 1e-9


def test_transform_composition(rng):
    for _ in range(300):
        m1 = random_regrading(rng)
        m2 = random_regrading(rng)
        g = GammaVector(*(rng.uniform(-2, 2) for _ in range(8)))
        one = transform_gamma(m2, transform_gamma(m1, g))
        two = transform_gamma(m2.compose(m1), g)
        scale = max(1.0, one.norm_inf())
        assert max(abs(x - y) for x, y in zip(one.as_tuple(), two.as_tuple())) / scale < 1e-7


def test_separable_form_reaches_mu_plus_one():
    # the inverse of [[1,-1],[1,1]] carries the separable constant to the
    # mu=+1 commutative standard shape
    m = Regrading(1.0, -1.0, 1.0, 1.0).inverse()
    got = transform_gamma(m, GammaVector(1, 0, 0, 0, 0, 0, 0, 1))
    want = GammaVector(1, 0, 0, 1, 0, 1, 1, 0)
    assert max(abs(x - y) for x, y in zip(got.as_tuple(), want.as_tuple())) < 1e-12


@given(pairs_exact, pairs_exact)
def test_sum_rule_commutes_with_regrading(a, b):
    # exact on integer-representable inputs; the law itself is linearity
    m = Regrading(0.5, -1.25, 2.0, 0.75)
    assert apply_to_pair(m, pair_add(a, b)) == pair_add(
        apply_to_pair(m, a), apply_to_pair(m, b)
    )


def test_mu_examples():
    assert mu_of(CommutativeA(1, -1, 0, 0)) == -1
    assert mu_of(CommutativeA(1, 0, 0, 0)) == 0
    assert mu_of(CommutativeA(1, 1, 0, 0)) == 1
    with pytest.raises(ValueError):
        mu_of(classify(STANDARD_GAMMAS[StandardForm.N1]))


def test_mu_invariant_under_regrading(rng):
    hits = 0
    while hits < 200:
        t, f, p, e = (rng.uniform(-2, 2) for _ in range(4))
        if abs(4 * t * f + p * p) < 0.05 or abs(t - (p + f * e) * e) < 0.1:
            continue
        g = reconstruct_gamma(CommutativeA(t, f, p, e))
        m = random_regrading(rng)
        before = classify(g)
        after = classify(transform_gamma(m, g))
        assert isinstance(after, CommutativeA)
        assert mu_of(after) == mu_of(before)
        hits += 1


def test_reduction_of_family_a(rng):
    hits = 0
    while hits < 300:
        t, f, p, e = (rng.uniform(-2, 2) for _ in range(4))
        if abs(t - (p + f * e) * e) < 0.1:
            continue
        c = CommutativeA(t, f, p, e)
        g = reconstruct_gamma(c)
        r = reduce_to_standard(classify(g))
        assert isinstance(r, ReductionResult)
        assert r.mu == mu_of(c)
        got = transform_gamma(r.map, g)
        err = max(abs(x - y) for x, y in zip(got.as_tuple(), r.form.gamma.as_tuple()))
        assert err < 1e-8
        hits += 1


def test_c1_reduces_with_identity_map():
    r = reduce_to_standard(classify(STANDARD_GAMMAS[StandardForm.C1]))
    assert isinstance(r, ReductionResult)
    assert r.form == StandardForm.C1
    assert r.mu == -1
    assert r.map == Regrading.identity()


def test_singular_family_a_inadmissible():
    r = reduce_to_standard(CommutativeA(theta=1.0, phi=0.0, psi=1.0, epsilon=1.0))
    assert isinstance(r, Inadmissible)
    assert "singular" in r.reason


def test_noncommutative_reductions(rng):
    from pairrules.associativity import NonCommutativeB, NonCommutativeC

    for _ in range(200):
        g1 = rng.uniform(0.2, 2) * rng.choice((-1, 1))
        g2 = rng.uniform(0.2, 2) * rng.choice((-1, 1))
        rb = reduce_to_standard(NonCommutativeB(g1, g2))
        assert isinstance(rb, ReductionResult) and rb.form == StandardForm.N2
        rc = reduce_to_standard(NonCommutativeC(g1, g2))
        assert isinstance(rc, ReductionResult) and rc.form == StandardForm.N1

    assert isinstance(reduce_to_standard(NonCommutativeB(0.0, 0.0)), Inadmissible)
    assert isinstance(reduce_to_standard(NonCommutativeC(0.0, 0.0)), Inadmissible)


def test_degenerate_reductions():
    r = reduce_to_standard(classify(GammaVector(2, 0, 0, 0, 0, 0, 0, 3)))
    assert isinstance(r, ReductionResult) and r.form == StandardForm.C3

    for g in (
        GammaVector(1, 0, 0, 0, 2, 0, 0, 0),
        GammaVector(0, 0, 0, 2, 0, 0, 0, 3),
        GammaVector(1, 0, 0, 0, 0, 0, 0, 0),
    ):
        assert isinstance(reduce_to_standard(classify(g)), Inadmissible)


def test_reduce_rejects_not_associative():
    with pytest.raises(ValueError):
        reduce_to_standard(classify(GammaVector(1, 1, 0, 0, 0, 0, 0, 0)))


def test_regrading_json_round_trip():
    m = Regrading(0.5, -1.0, 2.0, 0.25)
    assert Regrading.from_json(m.to_json()) == m
