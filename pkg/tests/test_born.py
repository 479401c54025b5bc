import math
import random

import pytest

from pairrules.born import (
    DomainError,
    HFunction,
    admissible,
    h_eval,
    multiplicativity_residual,
    solution_family_for,
)
from pairrules.pairs import Pair, StandardForm


def in_domain_pair(rng, form):
    def comp():
        return rng.uniform(0.1, 2.0) * rng.choice((-1.0, 1.0))

    return Pair(comp(), comp())


def random_h(rng, form):
    alpha = rng.uniform(-2.0, 2.0)
    if form in (StandardForm.C2, StandardForm.C3):
        return HFunction(form, alpha, rng.uniform(-2.0, 2.0))
    return HFunction(form, alpha)


def test_h_eval_examples():
    assert h_eval(HFunction(StandardForm.C1, 2.0), Pair(3, 4)) == pytest.approx(25.0)
    assert h_eval(HFunction(StandardForm.C2, 1.0, 0.0), Pair(2, 5)) == pytest.approx(2.0)
    assert h_eval(HFunction(StandardForm.C3, 1.0, 1.0), Pair(2, 3)) == pytest.approx(6.0)
    assert h_eval(HFunction(StandardForm.N1, 1.0), Pair(2, 9)) == pytest.approx(2.0)


def test_domain_errors():
    with pytest.raises(DomainError):
        h_eval(HFunction(StandardForm.C2, 1.0, 0.5), Pair(0, 1))
    with pytest.raises(DomainError):
        h_eval(HFunction(StandardForm.C3, -1.0, 1.0), Pair(0, 1))
    with pytest.raises(DomainError):
        h_eval(HFunction(StandardForm.C1, -2.0), Pair(0, 0))


def test_beta_parameter_policy():
    with pytest.raises(ValueError):
        HFunction(StandardForm.C1, 1.0, 0.5)
    with pytest.raises(ValueError):
        HFunction(StandardForm.C3, 1.0)


def test_multiplicativity_examples():
    h = HFunction(StandardForm.C1, 2.0)
    assert multiplicativity_residual(h, Pair(1, 1), Pair(1, -1)) < 1e-12

    h = HFunction(StandardForm.C3, 1.0, 2.0)
    assert multiplicativity_residual(h, Pair(2, 1), Pair(3, 2)) < 1e-12

    h = HFunction(StandardForm.N1, 1.0)
    assert multiplicativity_residual(h, Pair(2, 9), Pair(3, 7)) < 1e-12


def test_multiplicativity_random():
    rng = random.Random(11)
    for form in StandardForm:
        for _ in range(2000):
            h = random_h(rng, form)
            a = in_domain_pair(rng, form)
            b = in_domain_pair(rng, form)
            try:
                bound = 1e-9 * (1.0 + abs(h_eval(h, a) * h_eval(h, b)))
                assert multiplicativity_residual(h, a, b) < bound
            except DomainError:
                continue


def test_c1_unit_circle_is_one():
    rng = random.Random(5)
    for _ in range(200):
        theta = rng.uniform(0, 2 * math.pi)
        alpha = rng.uniform(-3, 3)
        h = HFunction(StandardForm.C1, alpha)
        assert h_eval(h, Pair(math.cos(theta), math.sin(theta))) == pytest.approx(1.0)


def test_positivity():
    rng = random.Random(6)
    for form in StandardForm:
        for _ in range(500):
            h = random_h(rng, form)
            a = in_domain_pair(rng, form)
            try:
                assert h_eval(h, a) >= 0.0
            except DomainError:
                continue


def test_admissibility_table():
    assert admissible(HFunction(StandardForm.C1, 2.0))
    assert not admissible(HFunction(StandardForm.C1, 0.0))
    assert admissible(HFunction(StandardForm.C2, 0.0, 1.0))
    assert not admissible(HFunction(StandardForm.C2, 1.5, 0.0))
    assert admissible(HFunction(StandardForm.C3, 1.0, 1.0))
    assert not admissible(HFunction(StandardForm.C3, 2.0, 0.0))
    for alpha in (-1.0, 0.0, 1.0, 2.0):
        assert not admissible(HFunction(StandardForm.N1, alpha))
        assert not admissible(HFunction(StandardForm.N2, alpha))


def test_admissibility_matches_perturbation_sampling():
    rng = random.Random(12)
    for _ in range(1000):
        form = rng.choice(list(StandardForm))
        h = random_h(rng, form)
        # declare "depends on component i" if nudging it moves the value
        depends = [False, False]
        for _ in range(40):
            a = in_domain_pair(rng, form)
            try:
                base = h_eval(h, a)
                if abs(h_eval(h, Pair(a.c1 * 1.1, a.c2)) - base) > 1e-9:
                    depends[0] = True
                if abs(h_eval(h, Pair(a.c1, a.c2 + 0.1)) - base) > 1e-9:
                    depends[1] = True
            except DomainError:
                continue
        assert admissible(h) == (depends[0] and depends[1])


def test_solution_family_descriptors():
    fam = solution_family_for(StandardForm.C1)
    assert fam.formula_id == "radial-power"
    assert fam.alpha_free and not fam.beta_free
    assert fam.make(2.0) == HFunction(StandardForm.C1, 2.0)

    fam = solution_family_for(StandardForm.C2)
    assert fam.formula_id == "power-exponential-ratio"
    assert fam.beta_free

    fam = solution_family_for(StandardForm.N2)
    assert fam.formula_id == "first-component-power"
    assert not fam.beta_free
    with pytest.raises(ValueError):
        fam.make(1.0, 2.0)
