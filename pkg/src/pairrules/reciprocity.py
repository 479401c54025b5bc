"""Reciprocity operators and the repeated-measurement elimination.

A reciprocity operator R sends the weight of a sequence to the weight of the
reversed sequence.  Linearity is given; the series rule forces R to reverse
products, R(a * b) = R(b) * R(a).  Solving that constraint per standard form,
then demanding that the normalization premise h(a) + h(b) = 1 imply
h((a * R(a)) + (b * R(b))) = 1, eliminates every candidate except complex
multiplication with conjugation and exponent alpha = 2.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
import sympy as sp

from .pairs import Pair, StandardForm, bilinear_mul, pair_add
from .born import DomainError, HFunction, admissible, h_eval, solution_family_for

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ReciprocityOp:
    """A linear map [[r1, r2], [r3, r4]] on pair space."""

    r1: float
    r2: float
    r3: float
    r4: float

    @property
    def det(self) -> float:
        return self.r1 * self.r4 - self.r2 * self.r3

    @property
    def invertible(self) -> bool:
        scale = max(1.0, self.r1 ** 2, self.r2 ** 2, self.r3 ** 2, self.r4 ** 2)
        return abs(self.det) > DEFAULT_TOL * scale

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.r1, self.r2, self.r3, self.r4)

    def to_json(self) -> dict:
        return {
            "matrix": [[self.r1, self.r2], [self.r3, self.r4]],
            "invertible": self.invertible,
            "name": name_of(self),
        }


IDENTITY = ReciprocityOp(1.0, 0.0, 0.0, 1.0)
CONJUGATION = ReciprocityOp(1.0, 0.0, 0.0, -1.0)
SWAP = ReciprocityOp(0.0, 1.0, 1.0, 0.0)
PROJECTION = ReciprocityOp(1.0, 0.0, 0.0, 0.0)

_NAMED = {
    IDENTITY: "identity",
    CONJUGATION: "conjugation",
    SWAP: "swap",
    PROJECTION: "projection",
}


def name_of(r: ReciprocityOp) -> str:
    return _NAMED.get(r, "custom")


def rev_pair(r: ReciprocityOp, a: Pair) -> Pair:
    return Pair(r.r1 * a.c1 + r.r2 * a.c2, r.r3 * a.c1 + r.r4 * a.c2)


def antihom_residual(r: ReciprocityOp, form: StandardForm, a: Pair, b: Pair) -> Pair:
    """R(a * b) - R(b) * R(a) under the form's multiplication."""
    g = form.gamma
    lhs = rev_pair(r, bilinear_mul(g, a, b))
    rhs = bilinear_mul(g, rev_pair(r, b), rev_pair(r, a))
    return Pair(lhs.c1 - rhs.c1, lhs.c2 - rhs.c2)


@dataclass(frozen=True)
class SolutionBranch:
    """An affine piece of the reciprocity solution set: base + span(directions)."""

    base: tuple[float, float, float, float]
    directions: tuple[tuple[float, float, float, float], ...] = ()

    def distance(self, point: Sequence[float]) -> float:
        p = np.asarray(point, dtype=float) - np.asarray(self.base)
        if self.directions:
            d = np.asarray(self.directions, dtype=float).T
            coeff, *_ = np.linalg.lstsq(d, p, rcond=None)
            p = p - d @ coeff
        return float(np.linalg.norm(p))

    def to_json(self) -> dict:
        return {"base": list(self.base), "directions": [list(d) for d in self.directions]}


_PAPER_TABLE = {
    StandardForm.C1: (IDENTITY, CONJUGATION),
    StandardForm.C2: (PROJECTION,),
    StandardForm.C3: (IDENTITY, SWAP),
}


@dataclass(frozen=True)
class ReciprocitySolutions:
    form: StandardForm
    operators: tuple[ReciprocityOp, ...]
    branches: tuple[SolutionBranch, ...]
    extras: tuple[str, ...] = ()

    def distance(self, point: Sequence[float]) -> float:
        return min(b.distance(point) for b in self.branches)

    def to_json(self) -> dict:
        return {
            "form": self.form.value,
            "operators": [op.to_json() for op in self.operators],
            "branches": [b.to_json() for b in self.branches],
            "extras": list(self.extras),
        }


def _coefficient_equations(form: StandardForm):
    """The 8 polynomial constraints on R1..R4 from matching monomial coefficients."""
    R1, R2, R3, R4 = sp.symbols("R1 R2 R3 R4")
    a1, a2, b1, b2 = sp.symbols("a1 a2 b1 b2")
    g = [sp.Rational(int(x)) for x in form.gamma.as_tuple()]

    def mul(x, y):
        return (
            g[0] * x[0] * y[0] + g[1] * x[0] * y[1] + g[2] * x[1] * y[0] + g[3] * x[1] * y[1],
            g[4] * x[0] * y[0] + g[5] * x[0] * y[1] + g[6] * x[1] * y[0] + g[7] * x[1] * y[1],
        )

    def rev(x):
        return (R1 * x[0] + R2 * x[1], R3 * x[0] + R4 * x[1])

    lhs = rev(mul((a1, a2), (b1, b2)))
    rhs = mul(rev((b1, b2)), rev((a1, a2)))
    eqs = []
    for diff in (lhs[0] - rhs[0], lhs[1] - rhs[1]):
        poly = sp.Poly(sp.expand(diff), a1, a2, b1, b2)
        eqs.extend(poly.coeffs())
    return (R1, R2, R3, R4), eqs


def solve_reciprocity(form: StandardForm) -> ReciprocitySolutions:
    """Solve the product-reversal constraint symbolically and report all branches.

    The named representatives (identity, conjugation, swap, projection) are
    pattern-matched out of the solution set; anything beyond them, such as
    parameterized families or non-invertible shapes, is kept as a flagged
    extra branch rather than suppressed.
    """
    if form not in _PAPER_TABLE:
        raise ValueError(f"reciprocity analysis applies to C1, C2, C3; got {form.value}")
    syms, eqs = _coefficient_equations(form)
    sols = sp.solve(eqs, list(syms), dict=True)

    def as_real(e) -> Optional[float]:
        z = complex(e)
        return z.real if abs(z.imag) <= 1e-9 else None

    branches: list[SolutionBranch] = []
    for sol in sols:
        exprs = [sp.expand(sol.get(s, s)) for s in syms]
        free = sorted(
            {f for e in exprs for f in e.free_symbols},
            key=lambda s: s.name,
        )
        vals = [as_real(e.subs({f: 0 for f in free})) for e in exprs]
        if any(v is None for v in vals):
            continue  # complex-valued branch: not a real reciprocity operator
        base = tuple(vals)
        dirs = []
        ok = True
        for f in free:
            d = [as_real(sp.diff(e, f)) for e in exprs]
            if any(v is None for v in d):
                ok = False
                break
            dirs.append(tuple(d))
            for e in exprs:
                if sp.degree(sp.Poly(e, f)) > 1:
                    raise RuntimeError(f"non-affine reciprocity branch for {form.value}: {exprs}")
        if ok:
            branches.append(SolutionBranch(base, tuple(dirs)))

    def on_branch(op: ReciprocityOp) -> bool:
        return any(b.distance(op.as_tuple()) < 1e-9 for b in branches)

    operators = tuple(op for op in _PAPER_TABLE[form] if on_branch(op))
    if len(operators) != len(_PAPER_TABLE[form]):
        raise RuntimeError(f"expected representative missing from solution set for {form.value}")

    named_points = {op.as_tuple() for op in operators} | {(0.0, 0.0, 0.0, 0.0)}
    extras = []
    for b in branches:
        if b.directions:
            extras.append(
                f"one-parameter family through {b.base} along {b.directions[0]}; "
                "contains invertible members beyond the listed representative"
            )
        elif b.base not in named_points:
            op = ReciprocityOp(*b.base)
            extras.append(
                f"additional solution {b.base}"
                + ("" if op.invertible else " (non-invertible)")
            )
    return ReciprocitySolutions(form, operators, tuple(branches), tuple(extras))


def repeated_measurement_pair(a: Pair, b: Pair, r: ReciprocityOp, form: StandardForm) -> Pair:
    """The weight (a * R(a)) + (b * R(b)) of the coarse interleaved sequence."""
    g = form.gamma
    return pair_add(bilinear_mul(g, a, rev_pair(r, a)), bilinear_mul(g, b, rev_pair(r, b)))


@dataclass(frozen=True)
class Accepted:
    alpha: float
    witness_alpha: Optional[float] = None
    sampled_alpha: Optional[float] = None

    verdict = "accepted"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "alpha": self.alpha,
            "witness_alpha": self.witness_alpha,
            "sampled_alpha": self.sampled_alpha,
        }


@dataclass(frozen=True)
class RejectedNonInvertible:
    operator: ReciprocityOp

    verdict = "rejected-non-invertible"

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "operator": self.operator.to_json()}


@dataclass(frozen=True)
class RejectedCounterexample:
    a: Pair
    b: Pair
    lhs: float
    rhs: float
    h: HFunction

    verdict = "rejected-counterexample"

    def revalidate(self, r: ReciprocityOp, tol: float = DEFAULT_TOL) -> bool:
        """Recompute the certificate from scratch: premise holds, conclusion fails."""
        try:
            lhs = h_eval(self.h, self.a) + h_eval(self.h, self.b)
            c = repeated_measurement_pair(self.a, self.b, r, self.h.form)
            rhs = h_eval(self.h, c)
        except DomainError:
            rhs = 0.0
            lhs = h_eval(self.h, self.a) + h_eval(self.h, self.b)
        return abs(lhs - 1.0) < tol and abs(rhs - 1.0) > 0.1

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "h": self.h.to_json(),
        }


@dataclass(frozen=True)
class RejectedInadmissibleExponents:
    detail: str
    exponents: tuple[tuple[float, ...], ...] = ()

    verdict = "rejected-inadmissible-exponents"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "detail": self.detail,
            "exponents": [list(e) for e in self.exponents],
        }


Verdict = Union[Accepted, RejectedNonInvertible, RejectedCounterexample, RejectedInadmissibleExponents]


def _make_h(form: StandardForm, exps: tuple[float, ...]) -> HFunction:
    fam = solution_family_for(form)
    if fam.beta_free:
        return fam.make(exps[0], exps[1])
    return fam.make(exps[0])


def _scaled_to(form: StandardForm, exps: tuple[float, ...], x: Pair, p: float) -> Optional[Pair]:
    """Rescale x so that h(x) = p, if a multiplicative scaling can reach it."""
    h = _make_h(form, exps)
    try:
        h0 = h_eval(h, x)
    except DomainError:
        return None
    if h0 <= 0.0:
        return None
    if form is StandardForm.C1:
        total = exps[0]
    elif form is StandardForm.C3:
        total = exps[0] + exps[1]
    else:  # C2: the exponential factor is scale-invariant
        total = exps[0]
    if abs(total) > 1e-6:
        s = (p / h0) ** (1.0 / total)
        return Pair(s * x.c1, s * x.c2)
    if form is StandardForm.C3 and abs(exps[0]) > 1e-6:
        s = (p / h0) ** (1.0 / exps[0])
        return Pair(s * x.c1, x.c2)
    if form is StandardForm.C3 and abs(exps[1]) > 1e-6:
        s = (p / h0) ** (1.0 / exps[1])
        return Pair(x.c1, s * x.c2)
    return None


def _seeded_premise_pairs(
    form: StandardForm,
    r: ReciprocityOp,
    exps: tuple[float, ...],
    rng: random.Random,
    n: int,
) -> list[tuple[Pair, Pair]]:
    """Premise-satisfying (a, b) built from the known degenerate constructions.

    These force the combined weight c into corners (such as c = (0, 0)) that
    uniform sampling essentially never hits, and they are exactly the cases
    that disqualify the rejected (form, operator) cells.
    """
    out: list[tuple[Pair, Pair]] = []
    h = _make_h(form, exps)

    for _ in range(n):
        if form is StandardForm.C1:
            # b = (a2, -a1) shares h with a, so h(a) = 1/2 meets the premise.
            theta = rng.uniform(0.0, 2.0 * math.pi)
            a = _scaled_to(form, exps, Pair(math.cos(theta), math.sin(theta)), 0.5)
            if a is None:
                continue
            out.append((a, Pair(a.c2, -a.c1)))
        elif form is StandardForm.C3:
            alpha, beta = exps
            # Mirror family b = (b1, -a1 a2 / b1) with b1 = a1: h(b) = h(a).
            x = rng.uniform(0.5, 2.0) * rng.choice((-1.0, 1.0))
            y = rng.uniform(0.5, 2.0) * rng.choice((-1.0, 1.0))
            a = _scaled_to(form, exps, Pair(x, y), 0.5)
            if a is not None:
                out.append((a, Pair(a.c1, -a.c2)))
            # The balanced construction a1 = b2 = r t, a2 = b1 = r / t.
            t = rng.uniform(0.5, 2.0)
            denom = t ** (alpha - beta) + t ** (beta - alpha)
            if abs(alpha + beta) > 1e-6 and denom > 0:
                rr = (1.0 / denom) ** (1.0 / (alpha + beta))
                out.append((Pair(rr * t, rr / t), Pair(rr / t, rr * t)))
        else:  # C2
            x = Pair(rng.uniform(0.5, 2.0), rng.uniform(-2.0, 2.0))
            a = _scaled_to(form, exps, x, 0.5)
            if a is None:
                continue
            try:
                hb = h_eval(h, Pair(-a.c1, a.c2))
            except DomainError:
                continue
            if abs(hb - 0.5) < 1e-12:
                out.append((a, Pair(-a.c1, a.c2)))

    checked = []
    for a, b in out:
        try:
            if abs(h_eval(h, a) + h_eval(h, b) - 1.0) < 1e-9:
                checked.append((a, b))
        except DomainError:
            continue
    return checked


def _random_premise_pairs(
    form: StandardForm,
    exps: tuple[float, ...],
    rng: random.Random,
    n: int,
) -> list[tuple[Pair, Pair]]:
    out = []
    for _ in range(n):
        p = rng.uniform(0.05, 0.95)
        xa = Pair(
            rng.uniform(0.2, 2.0) * rng.choice((-1.0, 1.0)),
            rng.uniform(0.2, 2.0) * rng.choice((-1.0, 1.0)),
        )
        xb = Pair(
            rng.uniform(0.2, 2.0) * rng.choice((-1.0, 1.0)),
            rng.uniform(0.2, 2.0) * rng.choice((-1.0, 1.0)),
        )
        a = _scaled_to(form, exps, xa, p)
        b = _scaled_to(form, exps, xb, 1.0 - p)
        if a is None or b is None:
            continue
        out.append((a, b))
    return out


def implication_residual(
    form: StandardForm,
    r: ReciprocityOp,
    exps: tuple[float, ...],
    rng: random.Random,
    samples: int = 60,
) -> Optional[float]:
    """max |h(c) - 1| over premise-satisfying samples; None if the premise is unreachable.

    A domain error at c counts as a full violation: the probability of the
    combined sequence must exist and equal one.
    """
    pairs = _random_premise_pairs(form, exps, rng, samples)
    pairs += _seeded_premise_pairs(form, r, exps, rng, max(8, samples // 4))
    if not pairs:
        return None
    h = _make_h(form, exps)
    worst = 0.0
    for a, b in pairs:
        c = repeated_measurement_pair(a, b, r, form)
        try:
            worst = max(worst, abs(h_eval(h, c) - 1.0))
        except DomainError:
            worst = max(worst, 1.0)
    return worst


def _exponent_grid(form: StandardForm) -> list[tuple[float, ...]]:
    axis = [x / 4.0 for x in range(-16, 17) if x != 0]
    if form is StandardForm.C1:
        return [(a,) for a in axis]
    axis0 = axis + [0.0]
    return [(a, b) for a in axis0 for b in axis0 if (a, b) != (0.0, 0.0)]


def _polish(
    form: StandardForm,
    r: ReciprocityOp,
    start: tuple[float, ...],
    rng_seed: int,
    samples: int,
) -> tuple[tuple[float, ...], float]:
    """Compass search refining an exponent candidate; deterministic via a fixed seed."""

    def f(pt: tuple[float, ...]) -> float:
        res = implication_residual(form, r, pt, random.Random(rng_seed), samples)
        return 2.0 if res is None else res

    pt = start
    best = f(pt)
    step = 0.05
    while step > 1e-10:
        improved = False
        for i in range(len(pt)):
            for sgn in (1.0, -1.0):
                cand = tuple(v + (sgn * step if j == i else 0.0) for j, v in enumerate(pt))
                val = f(cand)
                if val < best:
                    best, pt = val, cand
                    improved = True
        if not improved:
            step /= 2.0
    return pt, best


def witness_alpha(p: float = 0.3, lo: float = 0.5, hi: float = 4.0) -> float:
    """Closed-form exponent for the surviving cell, independent of sampling.

    On the witness family a = (s, 0), b = (0, q) with s^alpha + q^alpha = 1,
    the conclusion reads (s^2 + q^2)^alpha = 1, so with s^alpha = p the
    requirement is p^(2/alpha) + (1-p)^(2/alpha) = 1, solved here by bisection.
    """

    def f(alpha: float) -> float:
        return p ** (2.0 / alpha) + (1.0 - p) ** (2.0 / alpha) - 1.0

    flo, fhi = f(lo), f(hi)
    if flo * fhi > 0:
        raise ValueError("bisection bracket does not straddle the root")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if flo * f(mid) <= 0:
            hi = mid
        else:
            lo, flo = mid, f(mid)
    return 0.5 * (lo + hi)


def _find_counterexample(
    form: StandardForm,
    r: ReciprocityOp,
    rng: random.Random,
    tol: float,
) -> Optional[RejectedCounterexample]:
    canonical = {
        StandardForm.C1: (2.0,),
        StandardForm.C2: (1.0, 1.0),
        StandardForm.C3: (1.0, 1.0),
    }[form]
    h = _make_h(form, canonical)
    pairs = _seeded_premise_pairs(form, r, canonical, rng, 64)
    pairs += _random_premise_pairs(form, canonical, rng, 256)
    for a, b in pairs:
        c = repeated_measurement_pair(a, b, r, form)
        try:
            rhs = h_eval(h, c)
        except DomainError:
            rhs = 0.0
        lhs = h_eval(h, a) + h_eval(h, b)
        if abs(lhs - 1.0) < tol and abs(rhs - 1.0) > 0.1:
            return RejectedCounterexample(a, b, lhs, rhs, h)
    return None


def eliminate(
    form: StandardForm,
    r: ReciprocityOp,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
    samples: int = 60,
) -> Verdict:
    """Apply the repeated-measurement argument to one (form, operator) cell.

    Order matters: a non-invertible operator is rejected outright; otherwise
    the exponents making the normalization implication universal are solved
    for, and only if none exist is a concrete counterexample produced.
    """
    if not r.invertible:
        return RejectedNonInvertible(r)

    candidates: list[tuple[float, ...]] = []
    for pt in _exponent_grid(form):
        res = implication_residual(form, r, pt, random.Random(seed), samples)
        if res is not None and res < 1e-6:
            pt2, best = _polish(form, r, pt, seed, samples)
            if best < tol and not any(
                max(abs(x - y) for x, y in zip(pt2, q)) < 1e-3 for q in candidates
            ):
                candidates.append(pt2)

    if candidates:
        admissible_sols = [e for e in candidates if admissible(_make_h(form, e))]
        if admissible_sols:
            exps = min(admissible_sols, key=lambda e: sum(x * x for x in e))
            sampled = exps[0]
            wit = None
            if form is StandardForm.C1 and name_of(r) == "conjugation":
                wit = witness_alpha()
                if abs(wit - sampled) > 1e-6:
                    raise RuntimeError(
                        f"independent exponent determinations disagree: {wit} vs {sampled}"
                    )
            alpha = wit if wit is not None else sampled
            return Accepted(round(alpha, 9), witness_alpha=wit, sampled_alpha=sampled)
        return RejectedInadmissibleExponents(
            "every exponent choice satisfying the implication leaves h blind "
            "to one pair component",
            tuple(tuple(round(x, 9) for x in e) for e in sorted(candidates)),
        )

    cert = _find_counterexample(form, r, random.Random(seed + 1), tol)
    if cert is None:
        raise RuntimeError(
            f"no exponents satisfy the implication for {form.value}/{name_of(r)}, "
            "but no counterexample certificate was found"
        )
    return RejectedCounterexample(cert.a, cert.b, cert.lhs, cert.rhs, cert.h)


@dataclass(frozen=True)
class EliminationCell:
    form: StandardForm
    operator: Optional[ReciprocityOp]
    operator_name: str
    verdict: Verdict

    def to_json(self) -> dict:
        return {
            "form": self.form.value,
            "operator": None if self.operator is None else self.operator.to_json(),
            "operator_name": self.operator_name,
            "verdict": self.verdict.to_json(),
        }


_EXPECTED = {
    (StandardForm.N1, "-"): "rejected-inadmissible-exponents",
    (StandardForm.N2, "-"): "rejected-inadmissible-exponents",
    (StandardForm.C2, "projection"): "rejected-non-invertible",
    (StandardForm.C3, "identity"): "rejected-inadmissible-exponents",
    (StandardForm.C3, "swap"): "rejected-counterexample",
    (StandardForm.C1, "identity"): "rejected-counterexample",
    (StandardForm.C1, "conjugation"): "accepted",
}


@dataclass(frozen=True)
class EliminationReport:
    cells: tuple[EliminationCell, ...]
    deviations: tuple[str, ...]
    alpha: Optional[float]
    rules: dict = field(default_factory=dict)

    @property
    def matches_expected(self) -> bool:
        return not self.deviations

    def accepted_cells(self) -> list[EliminationCell]:
        return [c for c in self.cells if isinstance(c.verdict, Accepted)]

    def to_json(self) -> dict:
        return {
            "cells": [c.to_json() for c in self.cells],
            "deviations": list(self.deviations),
            "alpha": self.alpha,
            "rules": self.rules,
            "matches_expected": self.matches_expected,
        }

    def render_text(self) -> str:
        lines = ["Elimination of candidate multiplications"]
        lines.append("")
        for c in self.cells:
            v = c.verdict
            desc = v.verdict
            if isinstance(v, Accepted):
                desc += f" (alpha = {v.alpha:g})"
            elif isinstance(v, RejectedCounterexample):
                desc += f" (a = {v.a.to_json()}, b = {v.b.to_json()}, h(c) = {v.rhs:g})"
            elif isinstance(v, RejectedInadmissibleExponents) and v.exponents:
                desc += f" (exponents {[list(e) for e in v.exponents]})"
            lines.append(f"  {c.form.value:>2} / {c.operator_name:<11} -> {desc}")
        lines.append("")
        if self.deviations:
            lines.append("DEVIATIONS FROM EXPECTED TABLE:")
            lines.extend(f"  {d}" for d in self.deviations)
        else:
            lines.append("Surviving calculus:")
            lines.append(f"  parallel:    {self.rules.get('parallel')}")
            lines.append(f"  series:      {self.rules.get('series')}")
            lines.append(f"  probability: {self.rules.get('probability')}")
        return "\n".join(lines)


def run_full_elimination(
    tol: float = DEFAULT_TOL,
    seed: int = 0,
    samples: int = 60,
) -> EliminationReport:
    """Process every standard form and return the full verdict table.

    Certificates inside rejection verdicts are revalidated before the report
    is assembled; any mismatch with the expected table is listed as a
    deviation rather than silently accepted.
    """
    cells: list[EliminationCell] = []

    for form in (StandardForm.N1, StandardForm.N2):
        cells.append(
            EliminationCell(
                form,
                None,
                "-",
                RejectedInadmissibleExponents(
                    "every multiplicative h for this form is |x1|^alpha, which "
                    "ignores the second component"
                ),
            )
        )

    for form in (StandardForm.C2, StandardForm.C3, StandardForm.C1):
        sols = solve_reciprocity(form)
        for op in sols.operators:
            cells.append(
                EliminationCell(form, op, name_of(op), eliminate(form, op, tol, seed, samples))
            )

    deviations: list[str] = []
    seen = {(c.form, c.operator_name): c.verdict.verdict for c in cells}
    if seen != {k: v for k, v in _EXPECTED.items()}:
        for key, expected in _EXPECTED.items():
            got = seen.get(key)
            if got != expected:
                deviations.append(f"{key[0].value}/{key[1]}: expected {expected}, got {got}")
        for key in seen:
            if key not in _EXPECTED:
                deviations.append(f"unexpected cell {key[0].value}/{key[1]}")

    for c in cells:
        if isinstance(c.verdict, RejectedCounterexample) and c.operator is not None:
            if not c.verdict.revalidate(c.operator):
                deviations.append(
                    f"counterexample certificate for {c.form.value}/{c.operator_name} "
                    "failed revalidation"
                )

    accepted = [c.verdict for c in cells if isinstance(c.verdict, Accepted)]
    alpha = accepted[0].alpha if len(accepted) == 1 else None
    rules = {
        "parallel": "componentwise sum (complex addition)",
        "series": "complex multiplication",
        "probability": "p(x) = x1^2 + x2^2",
        "alpha": alpha,
    }
    return EliminationReport(tuple(cells), tuple(deviations), alpha, rules)
