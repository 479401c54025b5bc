#!/usr/bin/env python3
"""Run the whole derivation pipeline from the command line with PASS/FAIL output.

This walks the same road as `pairrules derive`, but stage by stage, printing
what each stage established:

  1. classify the five standard constants and confirm identity reductions
  2. verify the probability solutions are multiplicative per form
  3. solve the reciprocity constraint per surviving form
  4. run the elimination and print the verdict table
"""

import argparse
import random
import sys

from pairrules.associativity import classify
from pairrules.born import HFunction, admissible, multiplicativity_residual
from pairrules.pairs import Pair, StandardForm
from pairrules.reciprocity import name_of, run_full_elimination, solve_reciprocity
from pairrules.regrading import Regrading, ReductionResult, reduce_to_standard

failures = 0


def check(label: str, ok: bool, detail: str = "") -> None:
    global failures
    if not ok:
        failures += 1
    tail = f"  ({detail})" if detail else ""
    print(f"[{'PASS' if ok else 'FAIL'}] {label}{tail}")


def stage_standard_forms() -> None:
    print("-- stage 1: standard forms ------------------------------------")
    for form in StandardForm:
        r = reduce_to_standard(classify(form.gamma))
        ok = (
            isinstance(r, ReductionResult)
            and r.form == form
            and r.map == Regrading.identity()
        )
        check(f"{form.value} classifies to itself with identity map", ok)


def stage_probability(seed: int, samples: int) -> None:
    print("-- stage 2: probability solutions -----------------------------")
    rng = random.Random(seed)
    cases = {
        StandardForm.C1: HFunction(StandardForm.C1, 1.7),
        StandardForm.C2: HFunction(StandardForm.C2, 1.3, 0.4),
        StandardForm.C3: HFunction(StandardForm.C3, 1.1, 0.6),
        StandardForm.N1: HFunction(StandardForm.N1, 2.5),
        StandardForm.N2: HFunction(StandardForm.N2, 0.8),
    }
    for form, h in cases.items():
        worst = 0.0
        for _ in range(samples):
            a = Pair(rng.uniform(0.1, 2) * rng.choice((-1, 1)), rng.uniform(0.1, 2))
            b = Pair(rng.uniform(0.1, 2) * rng.choice((-1, 1)), rng.uniform(0.1, 2))
            worst = max(worst, multiplicativity_residual(h, a, b))
        check(f"{form.value} solution is multiplicative", worst < 1e-9, f"max residual {worst:.2e}")
    check("N1 solution inadmissible", not admissible(cases[StandardForm.N1]))
    check("N2 solution inadmissible", not admissible(cases[StandardForm.N2]))


def stage_reciprocity() -> None:
    print("-- stage 3: reciprocity operators -----------------------------")
    expected = {
        StandardForm.C1: {"identity", "conjugation"},
        StandardForm.C2: {"projection"},
        StandardForm.C3: {"identity", "swap"},
    }
    for form, names in expected.items():
        sols = solve_reciprocity(form)
        got = {name_of(op) for op in sols.operators}
        check(f"{form.value} operators are {sorted(names)}", got == names, f"got {sorted(got)}")
        for extra in sols.extras:
            print(f"       note ({form.value}): {extra}")


def stage_elimination(seed: int) -> None:
    print("-- stage 4: elimination ---------------------------------------")
    report = run_full_elimination(seed=seed)
    print(report.render_text())
    check("exactly one accepted cell", len(report.accepted_cells()) == 1)
    check("verdict table matches expectations", report.matches_expected)
    check("accepted exponent is 2", report.alpha == 2.0, f"alpha = {report.alpha}")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=2000)
    args = ap.parse_args()

    stage_standard_forms()
    stage_probability(args.seed, args.samples)
    stage_reciprocity()
    stage_elimination(args.seed)

    print()
    if failures:
        print(f"{failures} check(s) FAILED")
        return 1
    print("all checks passed: complex arithmetic with p = x1^2 + x2^2 survives")
    return 0


if __name__ == "__main__":
    sys.exit(main())
