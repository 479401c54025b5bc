"""pairrules: a verification engine for the derivation of Feynman's rules
from two-component sequence weights.

The pipeline classifies bilinear pair multiplications by their associativity
constraints, reduces them to five standard forms by invertible regrading,
solves the probability functional equation for each form, eliminates all but
complex multiplication with conjugation and exponent two, and demonstrates
the surviving calculus on operational measurement sequences.
"""

__version__ = "0.1.0"

from .pairs import (  # noqa: F401
    GammaVector,
    Pair,
    StandardForm,
    bilinear_mul,
    complex_mul,
    pair_add,
    scalar_mul,
)
from .associativity import classify, is_associative, twelve_equations  # noqa: F401
from .regrading import Regrading, reduce_to_standard, transform_gamma  # noqa: F401
from .born import HFunction, admissible, h_eval, solution_family_for  # noqa: F401
from .reciprocity import eliminate, run_full_elimination, solve_reciprocity  # noqa: F401
from .sequences import Outcome, Sequence, amplitude, parallel, probability, series  # noqa: F401
from .config import RunConfig  # noqa: F401
