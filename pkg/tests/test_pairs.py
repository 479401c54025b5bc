import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pairrules.pairs import (
    GammaVector,
    NonFiniteError,
    Pair,
    STANDARD_GAMMAS,
    StandardForm,
    ZERO,
    bilinear_mul,
    commutator,
    complex_mul,
    pair_add,
    scalar_mul,
)

from conftest import finite_floats, gammas, int_floats, pairs, pairs_exact


def test_sum_rule_examples():
    assert pair_add(Pair(1, 2), Pair(3, 4)) == Pair(4, 6)
    assert pair_add(ZERO, Pair(5, -7)) == Pair(5, -7)
    assert pair_add(Pair(1, -1), Pair(-1, 1)) == ZERO


def test_scalar_examples():
    assert scalar_mul(2, Pair(1, 3)) == Pair(2, 6)
    assert scalar_mul(0, Pair(5, -7)) == ZERO
    assert scalar_mul(-1, Pair(1, 2)) == Pair(-1, -2)


def test_bilinear_examples():
    c1 = STANDARD_GAMMAS[StandardForm.C1]
    assert bilinear_mul(c1, Pair(0, 1), Pair(0, 1)) == Pair(-1, 0)
    c3 = STANDARD_GAMMAS[StandardForm.C3]
    assert bilinear_mul(c3, Pair(2, 3), Pair(4, 5)) == Pair(8, 15)
    n2 = STANDARD_GAMMAS[StandardForm.N2]
    assert bilinear_mul(n2, Pair(2, 3), Pair(4, 5)) == Pair(8, 12)


def test_complex_mul_examples():
    assert complex_mul(Pair(1, 0), Pair(3, 7)) == Pair(3, 7)
    assert complex_mul(Pair(0, 1), Pair(0, 1)) == Pair(-1, 0)
    assert complex_mul(Pair(3, 4), Pair(3, -4)) == Pair(25, 0)


def test_commutator_examples():
    n2 = STANDARD_GAMMAS[StandardForm.N2]
    assert commutator(n2, Pair(1, 2), Pair(3, 4)) == Pair(0, 2)
    assert commutator(n2, Pair(1, 2), Pair(1, 2)) == ZERO


def test_non_finite_rejected():
    with pytest.raises(NonFiniteError):
        Pair(float("nan"), 0.0)
    with pytest.raises(NonFiniteError):
        Pair(0.0, float("inf"))
    with pytest.raises(NonFiniteError):
        GammaVector(1, 2, 3, 4, 5, 6, 7, float("-inf"))
    with pytest.raises(NonFiniteError):
        scalar_mul(float("nan"), Pair(1, 1))


@given(pairs, pairs)
def test_add_commutative(a, b):
    assert pair_add(a, b) == pair_add(b, a)


@given(pairs_exact, pairs_exact, pairs_exact)
def test_add_associative_exact(a, b, c):
    assert pair_add(pair_add(a, b), c) == pair_add(a, pair_add(b, c))


@given(gammas, pairs_exact, pairs_exact, pairs_exact)
def test_left_right_distributive(g, a, b, c):
    # bilinearity is exact on representable arithmetic
    left = bilinear_mul(g, a, pair_add(b, c))
    assert abs(left.c1 - (bilinear_mul(g, a, b).c1 + bilinear_mul(g, a, c).c1)) < 1e-9
    assert abs(left.c2 - (bilinear_mul(g, a, b).c2 + bilinear_mul(g, a, c).c2)) < 1e-9
    right = bilinear_mul(g, pair_add(a, b), c)
    assert abs(right.c1 - (bilinear_mul(g, a, c).c1 + bilinear_mul(g, b, c).c1)) < 1e-9
    assert abs(right.c2 - (bilinear_mul(g, a, c).c2 + bilinear_mul(g, b, c).c2)) < 1e-9


@given(gammas, finite_floats, finite_floats, pairs, pairs)
def test_scalar_pulls_out(g, r, s, a, b):
    lhs = bilinear_mul(g, scalar_mul(r, a), scalar_mul(s, b))
    rhs = scalar_mul(r * s, bilinear_mul(g, a, b))
    assert math.isclose(lhs.c1, rhs.c1, abs_tol=1e-9)
    assert math.isclose(lhs.c2, rhs.c2, abs_tol=1e-9)


@given(pairs, pairs)
def test_complex_mul_matches_c1(a, b):
    c1 = STANDARD_GAMMAS[StandardForm.C1]
    assert complex_mul(a, b) == bilinear_mul(c1, a, b)


def test_commutative_family_commutes(rng):
    from pairrules.associativity import CommutativeA, reconstruct_gamma

    for _ in range(1000):
        g = reconstruct_gamma(
            CommutativeA(
                rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)
            )
        )
        a = Pair(rng.uniform(-2, 2), rng.uniform(-2, 2))
        b = Pair(rng.uniform(-2, 2), rng.uniform(-2, 2))
        c = commutator(g, a, b)
        assert abs(c.c1) < 1e-12 and abs(c.c2) < 1e-12


def test_json_round_trip():
    p = Pair(0.25, -1.5)
    assert Pair.from_json(p.to_json()) == p
    g = GammaVector(1, 0, 0, -1, 0, 1, 1, 0)
    assert GammaVector.from_sequence(g.to_json()) == g
    with pytest.raises(ValueError):
        GammaVector.from_sequence([1, 2, 3])
