"""The built-in counting problems.

Each function computes a whole series with the problem's specialized
recursion, driven by sieve prefix tables or exact integer square roots
rather than materialized sequences:

* ``goldbach``        g(2n): even 2n as two odd primes (A002375);
* ``chen_odd_odd``    g1(2n): even 2n as an odd prime plus an odd prime
                      or odd semiprime;
* ``chen_total``      g1(2n) plus the even-even contribution g2(2n),
                      which is 1 exactly when n-1 is prime or 1;
* ``lemoine_levy``    h(2n-1): odd 2n-1 as a doubled prime plus a prime
                      (A046927);
* ``two_squares``     h(4n+1): two squares of nonnegative integers;
* ``two_triangular``  t(n): two triangular numbers (A052343); equals
                      two_squares term by term.

Every problem also carries a generic-evaluator route and a brute-force
route (see PROBLEMS) used for cross-verification.  Problems are
independent of each other and safe to run in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .oracle import brute_count_series
from .recursion import CountSeries, EvaluatorKind, RecursionEvaluator
from .sequences import (
    Parity,
    ParitySequence,
    SequenceKind,
    SieveTables,
    build_sieve,
    ensure_tables,
    even_square_count,
    make_sequence,
    odd_semiprime_prefix,
    odd_square_count,
    pronic_count,
)


def goldbach(n_max: int, tables: SieveTables | None = None) -> CountSeries:
    """g(2n) for n = 1..n_max: even 2n as an unordered sum of two odd primes.

    g(2n) = sum over odd primes p <= n of pi_odd(2n - p), minus
    C(pi_odd(n), 2), minus all earlier values; g(2) = 0.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    tables = ensure_tables(tables, 2 * n_max)
    pi1 = _odd_prime_prefix(tables)
    odd_primes = tables.primes[tables.primes != 2]
    values = [0]
    tail = 0
    for n in range(2, n_max + 1):
        x = 2 * n
        j = int(np.searchsorted(odd_primes, n, side="right"))
        s = int(pi1[x - odd_primes[:j]].sum(dtype=np.int64))
        v = s - math.comb(int(pi1[n]), 2) - tail
        values.append(v)
        tail += v
    return CountSeries(2, values)


def chen_odd_odd(n_max: int, tables: SieveTables | None = None) -> CountSeries:
    """g1(2n) for n = 1..n_max: even 2n as an odd prime plus an odd prime
    or odd semiprime, unordered.

    The step sums pi_odd(2n - t) over all terms t <= n of the combined
    sequence plus pi_odd_semiprime(2n - p) over odd primes p <= n, and
    subtracts pi_odd(n)*pi_odd_semiprime(n) + C(pi_odd(n), 2) and the
    earlier values; g1(2) = 0.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    tables = ensure_tables(tables, 2 * n_max)
    pi1 = _odd_prime_prefix(tables)
    pi21 = odd_semiprime_prefix(tables, 2 * n_max)
    odd_primes = tables.primes[tables.primes != 2]
    odd_semis = _prefix_to_terms(pi21)
    values = [0]
    tail = 0
    for n in range(2, n_max + 1):
        x = 2 * n
        jp = int(np.searchsorted(odd_primes, n, side="right"))
        js = int(np.searchsorted(odd_semis, n, side="right"))
        s1 = int(pi1[x - odd_primes[:jp]].sum(dtype=np.int64))
        s1 += int(pi1[x - odd_semis[:js]].sum(dtype=np.int64))
        s2 = int(pi21[x - odd_primes[:jp]].sum(dtype=np.int64))
        p1n = int(pi1[n])
        p21n = int(pi21[n])
        v = s1 + s2 - p1n * p21n - math.comb(p1n, 2) - tail
        values.append(v)
        tail += v
    return CountSeries(2, values)


def chen_total(n_max: int, tables: SieveTables | None = None) -> CountSeries:
    """g1(2n) + g2(2n): all decompositions of 2n into a prime plus a prime
    or semiprime.  The even-even part g2(2n) is 1 exactly when n-1 is
    prime or 1 (the only even prime is 2, so one summand must be 2)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    tables = ensure_tables(tables, 2 * n_max)
    odd = chen_odd_odd(n_max, tables)
    values = [
        odd.values[n - 1] + _chen_even_even(n, tables)
        for n in range(1, n_max + 1)
    ]
    return CountSeries(2, values)


def _chen_even_even(n: int, tables: SieveTables) -> int:
    return int(n - 1 == 1 or tables.is_prime(n - 1))


def lemoine_levy(n_max: int, tables: SieveTables | None = None) -> CountSeries:
    """h(2n-1) for n = 1..n_max: odd 2n-1 as a doubled prime plus a prime.

    h(2n-1) = sum over odd primes p <= n of pi(n - (p+1)/2), plus sum over
    primes p <= n/2 of pi(2(n-p) - 1), minus pi(n)*pi(n//2) and the earlier
    values; h(1) = 0.  The first sum runs over odd primes only: the prime
    2 can never be the odd summand of an odd target.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    tables = ensure_tables(tables, 2 * n_max)
    pi = tables.pi_prefix
    primes = tables.primes
    odd_primes = primes[primes != 2]
    values = [0]
    tail = 0
    for n in range(2, n_max + 1):
        x = 2 * n - 1
        j1 = int(np.searchsorted(odd_primes, n, side="right"))
        s1 = int(pi[(x - odd_primes[:j1]) // 2].sum(dtype=np.int64))
        j2 = int(np.searchsorted(primes, n // 2, side="right"))
        s2 = int(pi[x - 2 * primes[:j2]].sum(dtype=np.int64))
        v = s1 + s2 - int(pi[n]) * int(pi[n // 2]) - tail
        values.append(v)
        tail += v
    return CountSeries(1, values)


def two_squares(n_max: int) -> CountSeries:
    """h(4n+1) for n = 0..n_max: unordered sums of two squares (>= 0).

    Counting functions are closed forms on exact integer square roots.
    Targets 3 mod 4 admit no such sum (even^2 + odd^2 is 1 mod 4), so the
    running tail only ever contains 1 mod 4 arguments; h(1) = 1.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values = [1]
    tail = 1
    for n in range(1, n_max + 1):
        x = 4 * n + 1
        s = 0
        k = 0
        while 4 * k * k <= 2 * n:  # even squares u <= (x+1)/2
            s += odd_square_count(x - 4 * k * k)
            k += 1
        k = 0
        while (2 * k + 1) ** 2 <= 2 * n + 1:  # odd squares v <= (x+1)/2
            s += even_square_count(x - (2 * k + 1) ** 2)
            k += 1
        half = 2 * n + 1
        v = s - odd_square_count(half) * even_square_count(half) - tail
        values.append(v)
        tail += v
    return CountSeries(1, values, step=4)


def two_triangular(n_max: int) -> CountSeries:
    """t(n) for n = 0..n_max: unordered sums of two triangular numbers.

    Working with doubled triangulars (pronic numbers l = j(j+1), counted
    by floor((1+isqrt(4x+1))/2)) the target is 2n and
    t(n) = sum_{k=1..K} pronic_count(2n - k(k-1)) - C(K, 2) - earlier
    values, where K = pronic_count(n); t(0) = 1.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values = [1]
    tail = 1
    for n in range(1, n_max + 1):
        K = pronic_count(n)
        s = sum(pronic_count(2 * n - k * (k - 1)) for k in range(1, K + 1))
        v = s - math.comb(K, 2) - tail
        values.append(v)
        tail += v
    return CountSeries(0, values)


def _odd_prime_prefix(tables: SieveTables) -> np.ndarray:
    pi1 = tables.pi_prefix.astype(np.int32, copy=True)
    if pi1.size > 2:
        pi1[2:] -= 1
    return pi1


def _prefix_to_terms(prefix: np.ndarray) -> np.ndarray:
    flags = np.empty(prefix.size, dtype=bool)
    flags[0] = prefix[0] > 0
    flags[1:] = prefix[1:] > prefix[:-1]
    return np.flatnonzero(flags)


@dataclass(frozen=True)
class ProblemSpec:
    """A named problem: its recursion, argument convention and check routes."""

    name: str
    kind: EvaluatorKind
    oeis: str | None
    n_start: int
    x_base: int
    x_step: int
    argument_desc: str
    compute: Callable[[int], CountSeries]
    evaluator_series: Callable[[int], list[int]]
    oracle_series: Callable[[int], list[int]]

    def x_of_n(self, n: int) -> int:
        return self.x_base + self.x_step * (n - self.n_start)


def _evaluator_values(kind, seq_a, seq_b, x_max) -> list[int]:
    return list(RecursionEvaluator(kind, seq_a, seq_b).run_to(x_max).values)


def _oracle_values(seq_a, seq_b, x_max, role_tagged=False, base=None) -> list[int]:
    return list(
        brute_count_series(seq_a, seq_b, x_max, role_tagged=role_tagged, base=base).values
    )


def _goldbach_pair(n_max: int):
    limit = 2 * n_max
    tables = build_sieve(limit)
    seq = make_sequence(SequenceKind.ODD_PRIMES, limit, tables=tables)
    return seq, seq


def _goldbach_evaluator(n_max: int) -> list[int]:
    a, b = _goldbach_pair(n_max)
    return _evaluator_values(EvaluatorKind.ODD_ODD, a, b, 2 * n_max)


def _goldbach_oracle(n_max: int) -> list[int]:
    a, b = _goldbach_pair(n_max)
    return _oracle_values(a, b, 2 * n_max)


def _chen_pair(n_max: int, tables=None):
    limit = 2 * n_max
    tables = ensure_tables(tables, limit)
    s = make_sequence(SequenceKind.ODD_PRIMES, limit, tables=tables)
    t = make_sequence(SequenceKind.PRIME_OR_ODD_SEMIPRIME, limit, tables=tables)
    return s, t


def _chen_evaluator(n_max: int) -> list[int]:
    s, t = _chen_pair(n_max)
    return _evaluator_values(EvaluatorKind.ODD_ODD, s, t, 2 * n_max)


def _chen_oracle(n_max: int) -> list[int]:
    s, t = _chen_pair(n_max)
    return _oracle_values(s, t, 2 * n_max)


def _chen_even_pair(n_max: int, tables=None):
    # Even summands of "prime" and "prime or semiprime": {2} and {2} + 2P.
    limit = 2 * n_max
    tables = ensure_tables(tables, limit)
    doubled = make_sequence(SequenceKind.DOUBLED_PRIMES, limit, tables=tables)
    le = ParitySequence([2], Parity.EVEN, limit)
    me = ParitySequence(sorted({2, *doubled.terms}), Parity.EVEN, limit)
    return le, me


def _chen_total_evaluator(n_max: int) -> list[int]:
    tables = build_sieve(2 * n_max)
    s, t = _chen_pair(n_max, tables)
    le, me = _chen_even_pair(n_max, tables)
    odd_part = _evaluator_values(EvaluatorKind.ODD_ODD, s, t, 2 * n_max)
    even_part = _evaluator_values(EvaluatorKind.EVEN_EVEN, le, me, 2 * n_max)
    return [odd_part[n - 1] + even_part[n] for n in range(1, n_max + 1)]


def _chen_total_oracle(n_max: int) -> list[int]:
    tables = build_sieve(2 * n_max)
    s, t = _chen_pair(n_max, tables)
    le, me = _chen_even_pair(n_max, tables)
    odd_part = _oracle_values(s, t, 2 * n_max)
    even_part = _oracle_values(le, me, 2 * n_max)
    return [odd_part[n - 1] + even_part[n] for n in range(1, n_max + 1)]


def _lemoine_evaluator(n_max: int) -> list[int]:
    # The evaluator route uses odd primes for the odd role; the prime 2
    # cannot appear as the odd summand, so the counts are unchanged.
    limit = 2 * n_max
    tables = build_sieve(limit)
    u = make_sequence(SequenceKind.DOUBLED_PRIMES, limit, tables=tables)
    v = make_sequence(SequenceKind.ODD_PRIMES, limit, tables=tables)
    return _evaluator_values(EvaluatorKind.EVEN_ODD, u, v, 2 * n_max - 1)


def _lemoine_oracle(n_max: int) -> list[int]:
    # The brute-force route keeps the published binding with all primes.
    limit = 2 * n_max
    tables = build_sieve(limit)
    u = make_sequence(SequenceKind.DOUBLED_PRIMES, limit, tables=tables)
    v = make_sequence(SequenceKind.PRIMES, limit, tables=tables)
    return _oracle_values(u, v, 2 * n_max - 1, role_tagged=True, base=1)


def _square_pair(n_max: int):
    limit = 4 * n_max + 1
    u = make_sequence(SequenceKind.EVEN_SQUARES, limit)
    v = make_sequence(SequenceKind.ODD_SQUARES, limit)
    return u, v


def _two_squares_evaluator(n_max: int) -> list[int]:
    u, v = _square_pair(n_max)
    full = _evaluator_values(EvaluatorKind.EVEN_ODD, u, v, 4 * n_max + 1)
    return full[0::2]  # keep targets 1 mod 4


def _two_squares_oracle(n_max: int) -> list[int]:
    u, v = _square_pair(n_max)
    full = _oracle_values(u, v, 4 * n_max + 1, role_tagged=True, base=1)
    return full[0::2]


def _pronic_pair(n_max: int):
    limit = 2 * n_max
    seq = make_sequence(SequenceKind.PRONIC, limit)
    return seq, seq


def _two_triangular_evaluator(n_max: int) -> list[int]:
    a, b = _pronic_pair(n_max)
    return _evaluator_values(EvaluatorKind.EVEN_EVEN, a, b, 2 * n_max)


def _two_triangular_oracle(n_max: int) -> list[int]:
    a, b = _pronic_pair(n_max)
    return _oracle_values(a, b, 2 * n_max)


PROBLEMS: dict[str, ProblemSpec] = {
    spec.name: spec
    for spec in (
        ProblemSpec(
            name="goldbach",
            kind=EvaluatorKind.ODD_ODD,
            oeis="A002375",
            n_start=1,
            x_base=2,
            x_step=2,
            argument_desc="a(n) counts decompositions of x = 2*n, n >= 1",
            compute=goldbach,
            evaluator_series=_goldbach_evaluator,
            oracle_series=_goldbach_oracle,
        ),
        ProblemSpec(
            name="chen-odd-odd",
            kind=EvaluatorKind.ODD_ODD,
            oeis=None,
            n_start=1,
            x_base=2,
            x_step=2,
            argument_desc="a(n) counts odd-odd decompositions of x = 2*n, n >= 1",
            compute=chen_odd_odd,
            evaluator_series=_chen_evaluator,
            oracle_series=_chen_oracle,
        ),
        ProblemSpec(
            name="chen-total",
            kind=EvaluatorKind.ODD_ODD,
            oeis=None,
            n_start=1,
            x_base=2,
            x_step=2,
            argument_desc="a(n) counts all decompositions of x = 2*n, n >= 1",
            compute=chen_total,
            evaluator_series=_chen_total_evaluator,
            oracle_series=_chen_total_oracle,
        ),
        ProblemSpec(
            name="lemoine-levy",
            kind=EvaluatorKind.EVEN_ODD,
            oeis="A046927",
            n_start=1,
            x_base=1,
            x_step=2,
            argument_desc="a(n) counts decompositions of x = 2*n - 1, n >= 1",
            compute=lemoine_levy,
            evaluator_series=_lemoine_evaluator,
            oracle_series=_lemoine_oracle,
        ),
        ProblemSpec(
            name="two-squares",
            kind=EvaluatorKind.EVEN_ODD,
            oeis=None,
            n_start=0,
            x_base=1,
            x_step=4,
            argument_desc="a(n) counts decompositions of x = 4*n + 1, n >= 0",
            compute=two_squares,
            evaluator_series=_two_squares_evaluator,
            oracle_series=_two_squares_oracle,
        ),
        ProblemSpec(
            name="two-triangular",
            kind=EvaluatorKind.EVEN_EVEN,
            oeis="A052343",
            n_start=0,
            x_base=0,
            x_step=2,
            argument_desc="a(n) counts decompositions of n itself, n >= 0 "
            "(targets 2*n over doubled triangulars)",
            compute=two_triangular,
            evaluator_series=_two_triangular_evaluator,
            oracle_series=_two_triangular_oracle,
        ),
    )
}
