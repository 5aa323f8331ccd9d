"""Incremental recursions for two-term representation counts.

Given two materialized sequences, an evaluator produces the number of
ways to write each target as one term from each sequence.  Three kinds
exist, keyed by the parities involved:

* ``ODD_ODD``   even targets, both terms odd, pairs unordered (base 2);
* ``EVEN_EVEN`` even targets, both terms even, pairs unordered (base 0);
* ``EVEN_ODD``  odd targets, one even and one odd term, roles fixed by
  parity (base 1).

Each step expresses the count at x through counting-function sums over
terms up to half the target, a cross product of the two counting
functions at the midpoint, for the unordered kinds a correction built
from the shared terms, minus the sum of every previously computed count.
That running tail makes a full series cost one pass instead of a
re-summation per target.

For the unordered kinds two shortcut step formulas exist: ``SUBSET`` when
the first sequence is contained in the second, and ``EQUAL`` when both
are the same.  They produce identical values through fewer sums.

Evaluators are single-owner mutable state: safe to hand between threads,
not to drive concurrently.  Distinct evaluators sharing the same input
sequences may run in parallel.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ContainmentError,
    LimitExceededError,
    LimitMismatchError,
    ParityMismatchError,
)
from .sequences import Parity, ParitySequence, intersect


class EvaluatorKind(enum.Enum):
    ODD_ODD = "odd-odd"
    EVEN_EVEN = "even-even"
    EVEN_ODD = "even-odd"


class Formula(enum.Enum):
    GENERAL = "general"
    SUBSET = "subset"
    EQUAL = "equal"


_BASES = {
    EvaluatorKind.ODD_ODD: 2,
    EvaluatorKind.EVEN_EVEN: 0,
    EvaluatorKind.EVEN_ODD: 1,
}

_PARITIES = {
    EvaluatorKind.ODD_ODD: (Parity.ODD, Parity.ODD),
    EvaluatorKind.EVEN_EVEN: (Parity.EVEN, Parity.EVEN),
    EvaluatorKind.EVEN_ODD: (Parity.EVEN, Parity.ODD),
}


@dataclass
class CountSeries:
    """Counts along an arithmetic argument lattice base, base+step, ..."""

    base: int
    values: list[int] = field(default_factory=list)
    step: int = 2

    def argument(self, i: int) -> int:
        return self.base + self.step * i

    def arguments(self) -> range:
        return range(self.base, self.base + self.step * len(self.values), self.step)

    def value_at(self, x: int) -> int:
        q, r = divmod(x - self.base, self.step)
        if r or not 0 <= q < len(self.values):
            raise KeyError(f"argument {x} not in series")
        return self.values[q]

    def items(self) -> list[tuple[int, int]]:
        return list(zip(self.arguments(), self.values))

    def __len__(self) -> int:
        return len(self.values)


def _capped_sum(counts: np.ndarray, terms: np.ndarray, cap: int, x: int) -> int:
    """Sum of counts[x - t] over the leading terms t <= cap."""
    j = int(np.searchsorted(terms, cap, side="right"))
    if j == 0:
        return 0
    return int(counts[x - terms[:j]].sum(dtype=np.int64))


class RecursionEvaluator:
    """Stateful evaluator producing one representation-count series.

    The constructor seeds the base count by a direct membership test
    (targets 2, 0 and 1 admit at most one decomposition); every ``next``
    call advances the argument by 2.  ``tail_sum`` always equals the sum
    of the values computed so far.
    """

    def __init__(
        self,
        kind: EvaluatorKind,
        seq_a: ParitySequence,
        seq_b: ParitySequence,
        formula: Formula = Formula.GENERAL,
    ):
        want_a, want_b = _PARITIES[kind]
        if seq_a.parity is not want_a or seq_b.parity is not want_b:
            raise ParityMismatchError(
                f"{kind.value} needs {want_a.value}/{want_b.value} sequences, "
                f"got {seq_a.parity.value}/{seq_b.parity.value}"
            )
        if seq_a.limit != seq_b.limit:
            raise LimitMismatchError(
                f"sequence limits differ: {seq_a.limit} vs {seq_b.limit}"
            )
        base = _BASES[kind]
        if seq_a.limit < base:
            raise LimitExceededError(
                f"limit {seq_a.limit} is below the base argument {base}"
            )
        if formula is not Formula.GENERAL:
            if kind is EvaluatorKind.EVEN_ODD:
                raise ContainmentError(
                    "even-odd sequences are disjoint by parity; "
                    "no subset or equal shortcut exists"
                )
            if formula is Formula.SUBSET and not seq_a.is_subset_of(seq_b):
                raise ContainmentError("first sequence is not contained in the second")
            if formula is Formula.EQUAL and seq_a != seq_b:
                raise ContainmentError("sequences are not equal")

        self.kind = kind
        self.formula = formula
        self.seq_a = seq_a
        self.seq_b = seq_b
        if kind is EvaluatorKind.EVEN_ODD:
            self.seq_w = None
        elif formula is Formula.GENERAL:
            self.seq_w = intersect(seq_a, seq_b)
        else:
            # With seq_a contained in (or equal to) seq_b the shared part
            # is seq_a itself.
            self.seq_w = seq_a

        seed = self._seed()
        self.computed = CountSeries(base, [seed])
        self.tail_sum = seed

    def _seed(self) -> int:
        a, b = self.seq_a, self.seq_b
        if self.kind is EvaluatorKind.ODD_ODD:
            return int(a.contains(1) and b.contains(1))
        if self.kind is EvaluatorKind.EVEN_EVEN:
            return int(a.contains(0) and b.contains(0))
        return int(a.contains(0) and b.contains(1))

    @property
    def last_argument(self) -> int:
        return self.computed.argument(len(self.computed) - 1)

    def next(self) -> tuple[int, int]:
        """Compute, record and return (argument, count) for the next target."""
        x = self.last_argument + 2
        if x > self.seq_a.limit:
            raise LimitExceededError(
                f"argument {x} beyond the materialized limit {self.seq_a.limit}"
            )
        if self.kind is EvaluatorKind.EVEN_ODD:
            value = self._step_even_odd(x)
        elif self.formula is Formula.SUBSET:
            value = self._step_subset(x)
        elif self.formula is Formula.EQUAL:
            value = self._step_equal(x)
        else:
            value = self._step_general(x)
        self.computed.values.append(value)
        self.tail_sum += value
        return x, value

    def run_to(self, x_max: int) -> CountSeries:
        """Fill the series through x_max; a no-op for already computed parts."""
        base = self.computed.base
        if x_max < base:
            raise ValueError(f"x_max {x_max} is below the base argument {base}")
        if (x_max - base) % 2:
            raise ValueError(f"x_max {x_max} is off the argument lattice of {base}")
        while self.last_argument < x_max:
            self.next()
        return self.computed

    def specialized_subset(self) -> "RecursionEvaluator":
        """Fresh evaluator using the contained-sequence shortcut formula."""
        return RecursionEvaluator(self.kind, self.seq_a, self.seq_b, Formula.SUBSET)

    def specialized_equal(self) -> "RecursionEvaluator":
        """Fresh evaluator using the equal-sequences shortcut formula."""
        return RecursionEvaluator(self.kind, self.seq_a, self.seq_b, Formula.EQUAL)

    def _step_general(self, x: int) -> int:
        a, b, w = self.seq_a, self.seq_b, self.seq_w
        half = x // 2
        s_over_b = _capped_sum(a.count_table, b.term_array, half, x)
        s_over_a = _capped_sum(b.count_table, a.term_array, half, x)
        s_over_w = _capped_sum(w.count_table, w.term_array, half, x)
        cross = a.counting(half) * b.counting(half)
        shared = math.comb(w.counting(half) + 1, 2)
        return s_over_b + s_over_a - s_over_w - cross + shared - self.tail_sum

    def _step_subset(self, x: int) -> int:
        a, b = self.seq_a, self.seq_b
        half = x // 2
        s_over_b = _capped_sum(a.count_table, b.term_array, half, x)
        s_diff = _capped_sum(b.count_table, a.term_array, half, x) - _capped_sum(
            a.count_table, a.term_array, half, x
        )
        cross = a.counting(half) * b.counting(half)
        shared = math.comb(a.counting(half) + 1, 2)
        return s_over_b + s_diff - cross + shared - self.tail_sum

    def _step_equal(self, x: int) -> int:
        a = self.seq_a
        half = x // 2
        s = _capped_sum(a.count_table, a.term_array, half, x)
        return s - math.comb(a.counting(half), 2) - self.tail_sum

    def _step_even_odd(self, x: int) -> int:
        a, b = self.seq_a, self.seq_b
        half = (x + 1) // 2
        s_over_b = _capped_sum(a.count_table, b.term_array, half, x)
        s_over_a = _capped_sum(b.count_table, a.term_array, half, x)
        return s_over_b + s_over_a - a.counting(half) * b.counting(half) - self.tail_sum
