"""Measurement-outcome sequences, their combination algebra, and amplitude assignment.

Sequences from one experimental set-up combine in parallel (coarsening one
interior outcome) and in series (chaining at a shared atomic junction).  An
amplitude assignment maps each atomic transition to a pair; a sequence's
amplitude is the sum over its atomic refinements of the product of transition
pairs, with complex multiplication as the product.  This realizes Feynman's
rules end to end.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union

import numpy as np

from .pairs import Pair, StandardForm, ZERO, complex_mul, pair_add
from .born import HFunction, h_eval


class SequenceError(ValueError):
    """An invalid sequence construction or combination."""


class MissingAmplitudeError(LookupError):
    """A sequence uses an atomic transition absent from the assignment."""


@dataclass(frozen=True)
class Outcome:
    """A detector outcome: a nonempty set of positive integer atomic labels.

    A singleton set is atomic; a larger set is the coarse outcome whose
    detector spans those atoms.  The set is unordered by construction.
    """

    labels: frozenset[int]

    def __post_init__(self) -> None:
        if not self.labels:
            raise SequenceError("an outcome needs at least one label")
        if any((not isinstance(x, int)) or x < 1 for x in self.labels):
            raise SequenceError("outcome labels must be positive integers")

    @property
    def atomic(self) -> bool:
        return len(self.labels) == 1

    @classmethod
    def of(cls, *labels: int) -> "Outcome":
        return cls(frozenset(labels))

    def to_json(self) -> list[int]:
        return sorted(self.labels)

    def __str__(self) -> str:
        inner = ",".join(str(x) for x in sorted(self.labels))
        return inner if self.atomic else "{" + inner + "}"


def _as_outcome(x: Union[Outcome, int, Iterable[int]]) -> Outcome:
    if isinstance(x, Outcome):
        return x
    if isinstance(x, int):
        return Outcome.of(x)
    return Outcome(frozenset(x))


@dataclass(frozen=True)
class Sequence:
    """An ordered run of outcomes from successive measurements of one set-up."""

    setup_id: str
    outcomes: tuple[Outcome, ...]

    def __post_init__(self) -> None:
        if len(self.outcomes) < 2:
            raise SequenceError("a sequence needs at least two outcomes")
        if not self.outcomes[0].atomic or not self.outcomes[-1].atomic:
            raise SequenceError("first and last outcomes must be atomic")

    @classmethod
    def of(cls, setup_id: str, *outcomes) -> "Sequence":
        return cls(setup_id, tuple(_as_outcome(o) for o in outcomes))

    def __len__(self) -> int:
        return len(self.outcomes)

    def to_json(self) -> list[list[int]]:
        return [o.to_json() for o in self.outcomes]

    def __str__(self) -> str:
        return "[" + "; ".join(str(o) for o in self.outcomes) + "]"


def parallel(a: Sequence, b: Sequence) -> Sequence:
    """Merge two sequences differing at exactly one interior slot (disjointly)."""
    if a.setup_id != b.setup_id:
        raise SequenceError("parallel combination requires the same set-up")
    if len(a) != len(b):
        raise SequenceError("parallel combination requires equal length")
    diffs = [i for i, (x, y) in enumerate(zip(a.outcomes, b.outcomes)) if x != y]
    if len(diffs) != 1:
        raise SequenceError(f"sequences must differ at exactly one slot, differ at {len(diffs)}")
    i = diffs[0]
    if i == 0 or i == len(a) - 1:
        raise SequenceError("first and last outcomes must stay atomic")
    xa, xb = a.outcomes[i].labels, b.outcomes[i].labels
    if xa & xb:
        raise SequenceError("outcome sets at the differing slot must be disjoint")
    merged = a.outcomes[:i] + (Outcome(xa | xb),) + a.outcomes[i + 1:]
    return Sequence(a.setup_id, merged)


def series(a: Sequence, b: Sequence) -> Sequence:
    """Chain two sequences sharing their junction outcome.

    The set-up identifiers concatenate with a separator, so chaining is
    associative at the identifier level as well as the outcome level.
    """
    tail, head = a.outcomes[-1], b.outcomes[0]
    if not tail.atomic or not head.atomic:
        raise SequenceError("junction outcomes must be atomic")
    if tail != head:
        raise SequenceError(f"junction mismatch: {tail} vs {head}")
    return Sequence(f"{a.setup_id}·{b.setup_id}", a.outcomes + b.outcomes[1:])


TransitionTable = Mapping[tuple[int, int], Pair]


@dataclass(frozen=True)
class AmplitudeAssignment:
    """Per-interval tables mapping (label at slot k, label at slot k+1) to a pair.

    Tables depend only on adjacent slots, never on earlier outcomes; that is
    how the closure of atomic measurements is encoded structurally.
    """

    tables: tuple[TransitionTable, ...]

    def table_for(self, interval: int) -> TransitionTable:
        if interval >= len(self.tables):
            raise MissingAmplitudeError(f"no table for interval {interval}")
        return self.tables[interval]

    def entry(self, interval: int, src: int, dst: int) -> Pair:
        try:
            return self.table_for(interval)[(src, dst)]
        except KeyError:
            raise MissingAmplitudeError(
                f"no amplitude for transition {src} -> {dst} on interval {interval}"
            ) from None


def amplitude(s: Sequence, asg: AmplitudeAssignment) -> Pair:
    """Sum over atomic refinements of the product of transition amplitudes."""
    if len(s) - 1 > len(asg.tables):
        raise MissingAmplitudeError(
            f"sequence spans {len(s) - 1} intervals but only {len(asg.tables)} tables given"
        )
    total = ZERO
    for path in itertools.product(*(sorted(o.labels) for o in s.outcomes)):
        w = Pair(1.0, 0.0)
        for k in range(len(path) - 1):
            w = complex_mul(w, asg.entry(k, path[k], path[k + 1]))
        total = pair_add(total, w)
    return total


_BORN = HFunction(StandardForm.C1, 2.0)


def probability(s: Sequence, asg: AmplitudeAssignment) -> float:
    """The surviving rule: modulus squared of the amplitude."""
    a = amplitude(s, asg)
    return h_eval(_BORN, a)


@dataclass(frozen=True)
class SetupSpec:
    """A declared experiment: atomic label sets per slot and transition tables."""

    slots: tuple[frozenset[int], ...]
    tables: tuple[TransitionTable, ...]
    setup_id: str = "setup"

    def __post_init__(self) -> None:
        if len(self.slots) < 2:
            raise SequenceError("a set-up needs at least two measurement slots")
        if len(self.tables) != len(self.slots) - 1:
            raise SequenceError("need exactly one table per adjacent slot interval")

    def assignment(self) -> AmplitudeAssignment:
        return AmplitudeAssignment(self.tables)

    def validate_sequence(self, s: Sequence) -> None:
        if len(s) != len(self.slots):
            raise SequenceError(
                f"sequence length {len(s)} does not match {len(self.slots)} slots"
            )
        for i, o in enumerate(s.outcomes):
            if not o.labels <= self.slots[i]:
                raise SequenceError(
                    f"outcome {o} at slot {i} is not within the declared atoms "
                    f"{sorted(self.slots[i])}"
                )


def _table_matrix(table: TransitionTable, src: frozenset[int], dst: frozenset[int]) -> np.ndarray:
    """The interval table as a complex matrix, column per source label."""
    src_l, dst_l = sorted(src), sorted(dst)
    m = np.zeros((len(dst_l), len(src_l)), dtype=complex)
    for i, d in enumerate(dst_l):
        for j, s in enumerate(src_l):
            p = table.get((s, d))
            if p is not None:
                m[i, j] = complex(p.c1, p.c2)
    return m


def identity_table(labels: Iterable[int]) -> dict[tuple[int, int], Pair]:
    ls = list(labels)
    return {
        (x, y): Pair(1.0, 0.0) if x == y else Pair(0.0, 0.0)
        for x in ls
        for y in ls
    }


@dataclass(frozen=True)
class NormalizationReport:
    unitary_intervals: tuple[bool, ...]
    qualifies: bool
    totals: dict[int, float]
    max_total_deviation: float
    max_interleave_deviation: Optional[float]

    def to_json(self) -> dict:
        return {
            "unitary_intervals": list(self.unitary_intervals),
            "qualifies": self.qualifies,
            "totals_per_initial_label": {str(k): v for k, v in self.totals.items()},
            "max_total_deviation": self.max_total_deviation,
            "max_interleave_deviation": self.max_interleave_deviation,
        }


def normalization_check(setup: SetupSpec, tol: float = 1e-12) -> NormalizationReport:
    """Conservation of total probability, and insensitivity to a trivial measurement.

    A set-up qualifies when every interval table is square and unitary as a
    complex matrix.  For a qualifying set-up, summing the probability of
    [i; full; ...; full; j] over final labels j gives 1 for every initial
    label i, and splicing in a trivial coarse measurement with an identity
    interval table changes no probability.
    """
    unitary_flags = []
    for k, table in enumerate(setup.tables):
        src, dst = setup.slots[k], setup.slots[k + 1]
        if src != dst:
            unitary_flags.append(False)
            continue
        m = _table_matrix(table, src, dst)
        unitary_flags.append(bool(np.allclose(m.conj().T @ m, np.eye(len(src)), atol=1e-9)))
    qualifies = all(unitary_flags)

    asg = setup.assignment()
    full_interior = [Outcome(s) for s in setup.slots[1:-1]]
    totals: dict[int, float] = {}
    for i in sorted(setup.slots[0]):
        total = 0.0
        for j in sorted(setup.slots[-1]):
            s = Sequence("n", (Outcome.of(i), *full_interior, Outcome.of(j)))
            total += probability(s, asg)
        totals[i] = total
    max_dev = max(abs(t - 1.0) for t in totals.values()) if qualifies else float("nan")

    max_interleave: Optional[float] = None
    if len(setup.slots) >= 2:
        max_interleave = 0.0
        mid = len(setup.slots) // 2
        widened = (
            setup.slots[:mid] + (setup.slots[mid - 1],) + setup.slots[mid:]
        )
        widened_tables = (
            setup.tables[: mid - 1]
            + (identity_table(setup.slots[mid - 1]),)
            + setup.tables[mid - 1:]
        )
        asg2 = AmplitudeAssignment(widened_tables)
        for i in sorted(setup.slots[0]):
            for j in sorted(setup.slots[-1]):
                base = Sequence("n", (Outcome.of(i), *full_interior, Outcome.of(j)))
                spliced = Sequence(
                    "n",
                    base.outcomes[:mid]
                    + (Outcome(setup.slots[mid - 1]),)
                    + base.outcomes[mid:],
                )
                p0 = probability(base, asg)
                p1 = probability(spliced, asg2)
                max_interleave = max(max_interleave, abs(p1 - p0))

    return NormalizationReport(
        tuple(unitary_flags), qualifies, totals, max_dev, max_interleave
    )


@dataclass(frozen=True)
class SymmetryReport:
    cases: dict[str, int]
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"cases": dict(self.cases), "failures": list(self.failures), "passed": self.passed}


def check_symmetries(cases: int = 1000, seed: int = 0) -> SymmetryReport:
    """Randomized verification of the five combination symmetries at the sequence level.

    Commutativity and associativity of parallel combination, associativity of
    series combination, and both distributivity laws.  All hold exactly by
    set and list semantics; any failure is reported with a witness.
    """
    rng = random.Random(seed)
    counts = {k: 0 for k in ("pll-comm", "pll-assoc", "ser-assoc", "right-dist", "left-dist")}
    failures: list[str] = []

    def note(law: str, *seqs: Sequence) -> None:
        failures.append(f"{law}: " + " ; ".join(str(s) for s in seqs))

    for _ in range(cases):
        n = rng.randint(3, 5)
        first = rng.randint(1, 4)
        last = rng.randint(1, 4)
        slot = rng.randint(1, n - 2)
        labels = rng.sample(range(1, 10), 3)

        def variant(label: int) -> Sequence:
            outs = [Outcome.of(first)]
            for k in range(1, n - 1):
                outs.append(Outcome.of(label if k == slot else rng.randint(1, 4)))
            outs.append(Outcome.of(last))
            return Sequence("s", tuple(outs))

        rng_state = rng.getstate()
        a = variant(labels[0])
        rng.setstate(rng_state)
        b = variant(labels[1])
        rng.setstate(rng_state)
        c = variant(labels[2])

        if parallel(a, b) != parallel(b, a):
            note("pll-comm", a, b)
        counts["pll-comm"] += 1

        if parallel(parallel(a, b), c) != parallel(a, parallel(b, c)):
            note("pll-assoc", a, b, c)
        counts["pll-assoc"] += 1

        d = Sequence.of("t", last, rng.randint(1, 4), rng.randint(1, 4))
        e = Sequence.of("u", d.outcomes[-1].to_json()[0], rng.randint(1, 4))
        if series(series(a, d), e) != series(a, series(d, e)):
            note("ser-assoc", a, d, e)
        counts["ser-assoc"] += 1

        lhs = series(parallel(a, b), d)
        rhs = parallel(series(a, d), series(b, d))
        if lhs != rhs:
            note("right-dist", a, b, d)
        counts["right-dist"] += 1

        f = Sequence.of("r", rng.randint(1, 4), rng.randint(1, 4), first)
        lhs = series(f, parallel(a, b))
        rhs = parallel(series(f, a), series(f, b))
        if lhs != rhs:
            note("left-dist", f, a, b)
        counts["left-dist"] += 1

    return SymmetryReport(counts, tuple(failures))


def setup_from_json(data: dict) -> SetupSpec:
    """Parse the set-up description format used by the CLI.

    {"slots": [[1,2],[1,2]], "tables": [[[from,to,c1,c2], ...]],
     "setup_id": "optional"}
    """
    try:
        slots = tuple(frozenset(int(x) for x in slot) for slot in data["slots"])
        tables = []
        for raw in data["tables"]:
            table: dict[tuple[int, int], Pair] = {}
            for src, dst, c1, c2 in raw:
                table[(int(src), int(dst))] = Pair(float(c1), float(c2))
            tables.append(table)
    except (KeyError, TypeError, ValueError) as exc:
        raise SequenceError(f"malformed set-up description: {exc}") from exc
    return SetupSpec(slots, tuple(tables), str(data.get("setup_id", "setup")))


def sequences_from_json(data, setup: SetupSpec) -> list[Sequence]:
    """Parse sequences as arrays of outcomes (a label or an array of labels)."""
    if not isinstance(data, list):
        raise SequenceError("sequences file must hold an array of sequences")
    out = []
    for raw in data:
        if not isinstance(raw, list):
            raise SequenceError("each sequence must be an array of outcomes")
        try:
            seq = Sequence.of(setup.setup_id, *raw)
        except TypeError as exc:
            raise SequenceError(f"malformed sequence {raw}: {exc}") from exc
        setup.validate_sequence(seq)
        out.append(seq)
    return out
