import random

import pytest
from hypothesis import strategies as st

from pairrules.pairs import GammaVector, Pair

# Exact algebraic laws (distributivity, additive associativity) are asserted
# without tolerance, which floats only honor on products of smallish integers.
int_floats = st.integers(min_value=-100, max_value=100).map(float)

pairs_exact = st.builds(Pair, int_floats, int_floats)

finite_floats = st.floats(
    min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False
)

pairs = st.builds(Pair, finite_floats, finite_floats)

gammas = st.builds(GammaVector, *([finite_floats] * 8))

gammas_exact = st.builds(GammaVector, *([int_floats] * 8))


@pytest.fixture
def rng():
    return random.Random(1234)
