import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addrep.errors import (
    LimitExceededError,
    LimitMismatchError,
    ParityMismatchError,
    ResourceBudgetError,
    SequenceFormatError,
)
from addrep.sequences import (
    HARDY_WRIGHT_CAP,
    Parity,
    ParitySequence,
    SequenceKind,
    build_sieve,
    even_square_count,
    intersect,
    load_sequence,
    make_sequence,
    odd_semiprime_count,
    odd_semiprime_flags,
    odd_square_count,
    pi_hardy_wright,
    pronic_count,
    semiprime_count,
)
from conftest import factor_count, trial_division_is_prime, trial_division_pi


# --- sieve and pi ---------------------------------------------------------

def test_sieve_small_values():
    tables = build_sieve(10)
    assert tables.pi(10) == 4
    assert tables.pi(0) == 0
    assert build_sieve(0).pi(0) == 0


def test_sieve_matches_trial_division():
    tables = build_sieve(500)
    for x in range(501):
        assert tables.pi(x) == trial_division_pi(x)


def test_pi_odd():
    tables = build_sieve(100)
    assert tables.pi_odd(100) == 24
    assert tables.pi_odd(2) == 0
    assert tables.pi_odd(3) == 1


def test_sieve_budget():
    with pytest.raises(ResourceBudgetError):
        build_sieve(1000, cap=100)


def test_pi_beyond_limit_raises():
    tables = build_sieve(10)
    with pytest.raises(LimitExceededError):
        tables.pi(11)


# --- Hardy-Wright formula -------------------------------------------------

def test_hardy_wright_small():
    tables = build_sieve(HARDY_WRIGHT_CAP)
    assert pi_hardy_wright(4) == tables.pi(4) == 2
    assert pi_hardy_wright(5) == tables.pi(5) == 3
    assert pi_hardy_wright(20) == tables.pi(20) == 8


def test_hardy_wright_full_range():
    tables = build_sieve(HARDY_WRIGHT_CAP)
    for n in range(4, HARDY_WRIGHT_CAP + 1):
        assert pi_hardy_wright(n) == tables.pi(n)


@pytest.mark.parametrize("n", [3, 0, HARDY_WRIGHT_CAP + 1])
def test_hardy_wright_out_of_range(n):
    with pytest.raises(ValueError):
        pi_hardy_wright(n)


# --- semiprime counting ---------------------------------------------------

def test_semiprime_count_examples():
    tables = build_sieve(100)
    assert semiprime_count(10, tables) == 4  # 4, 6, 9, 10
    assert semiprime_count(3, tables) == 0
    assert semiprime_count(100, tables) == 34


def test_odd_semiprime_count_examples():
    tables = build_sieve(100)
    assert odd_semiprime_count(15, tables) == 2  # 9, 15
    assert odd_semiprime_count(8, tables) == 0
    # 9, 15, 21, 25, 33, 35, 39, 49
    assert odd_semiprime_count(50, tables) == 8


def test_semiprime_counts_match_factorization():
    limit = 2000
    tables = build_sieve(limit)
    semis = [n for n in range(limit + 1) if factor_count(n) == 2]
    odd_semis = [n for n in semis if n % 2 == 1]
    for x in range(limit + 1):
        expect_all = sum(1 for s in semis if s <= x)
        expect_odd = sum(1 for s in odd_semis if s <= x)
        assert semiprime_count(x, tables) == expect_all
        assert odd_semiprime_count(x, tables) == expect_odd


def test_odd_semiprime_flags_match_count():
    tables = build_sieve(3000)
    flags = odd_semiprime_flags(tables)
    prefix = np.cumsum(flags)
    for x in (0, 8, 9, 100, 1499, 3000):
        assert int(prefix[x]) == odd_semiprime_count(x, tables)


# --- ParitySequence basics ------------------------------------------------

def test_counting_and_membership():
    seq = ParitySequence([1, 5, 9], Parity.ODD, 10)
    assert [seq.counting(x) for x in (0, 1, 4, 5, 9, 10)] == [0, 1, 1, 2, 3, 3]
    assert 5 in seq and 3 not in seq
    assert seq.counting(-3) == 0
    with pytest.raises(LimitExceededError):
        seq.counting(11)
    with pytest.raises(LimitExceededError):
        seq.contains(11)


def test_constructor_validation():
    with pytest.raises(SequenceFormatError):
        ParitySequence([3, 3], Parity.ODD, 10)  # duplicate
    with pytest.raises(SequenceFormatError):
        ParitySequence([5, 3], Parity.ODD, 10)  # decreasing
    with pytest.raises(ParityMismatchError):
        ParitySequence([2], Parity.ODD, 10)
    with pytest.raises(ParityMismatchError):
        ParitySequence([0], Parity.ODD, 10)  # zero counts as even
    with pytest.raises(LimitExceededError):
        ParitySequence([11], Parity.ODD, 10)
    assert ParitySequence([0], Parity.EVEN, 4).contains(0)


def test_custom_sequence_via_make_sequence():
    seq = make_sequence(SequenceKind.CUSTOM, 10, terms=[1, 3, 9])
    assert seq.parity is Parity.ODD
    with pytest.raises(SequenceFormatError):
        make_sequence(SequenceKind.CUSTOM, 10, terms=[1, 2])
    with pytest.raises(SequenceFormatError):
        make_sequence(SequenceKind.CUSTOM, 10)  # no terms
    empty = make_sequence(SequenceKind.CUSTOM, 10, terms=[], parity=Parity.EVEN)
    assert len(empty) == 0


# --- built-in kinds -------------------------------------------------------

def _kind_predicate(kind, tables):
    semis = {n for n in range(tables.limit + 1) if factor_count(n) == 2}
    preds = {
        SequenceKind.ODD_PRIMES: lambda n: n % 2 == 1 and trial_division_is_prime(n),
        SequenceKind.PRIMES: trial_division_is_prime,
        SequenceKind.DOUBLED_PRIMES: lambda n: n % 2 == 0 and trial_division_is_prime(n // 2),
        SequenceKind.PRIME_OR_ODD_SEMIPRIME: lambda n: n % 2 == 1
        and (trial_division_is_prime(n) or n in semis),
        SequenceKind.ODD_SQUARES: lambda n: n % 2 == 1 and math.isqrt(n) ** 2 == n,
        SequenceKind.EVEN_SQUARES: lambda n: n % 2 == 0 and math.isqrt(n) ** 2 == n,
        SequenceKind.PRONIC: lambda n: any(j * (j + 1) == n for j in range(math.isqrt(n) + 2)),
        SequenceKind.ALL_ODD: lambda n: n % 2 == 1,
        SequenceKind.ALL_EVEN: lambda n: n % 2 == 0,
    }
    return preds[kind]


@pytest.mark.parametrize("kind", [k for k in SequenceKind if k is not SequenceKind.CUSTOM])
def test_builtin_kind_counting_matches_brute_force(kind):
    limit = 600
    tables = build_sieve(limit)
    seq = make_sequence(kind, limit, tables=tables)
    pred = _kind_predicate(kind, tables)
    expected_terms = [n for n in range(limit + 1) if pred(n)]
    assert list(seq.terms) == expected_terms
    running = 0
    it = iter(expected_terms)
    nxt = next(it, None)
    for x in range(limit + 1):
        while nxt is not None and nxt <= x:
            running += 1
            nxt = next(it, None)
        assert seq.counting(x) == running


def test_square_and_pronic_examples():
    odd_sq = make_sequence(SequenceKind.ODD_SQUARES, 30)
    assert list(odd_sq.terms) == [1, 9, 25]
    assert odd_sq.counting(30) == 3 == odd_square_count(30)
    even_sq = make_sequence(SequenceKind.EVEN_SQUARES, 30)
    assert list(even_sq.terms) == [0, 4, 16]
    assert even_sq.counting(30) == 3 == even_square_count(30)
    pronic = make_sequence(SequenceKind.PRONIC, 25)
    assert list(pronic.terms) == [0, 2, 6, 12, 20]
    assert pronic.counting(25) == 5 == pronic_count(25)
    assert pronic_count(25) == (1 + math.isqrt(101)) // 2


_PRONIC_MILLION = make_sequence(SequenceKind.PRONIC, 10**6)


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_pronic_closed_form_matches_table(x):
    assert pronic_count(x) == _PRONIC_MILLION.counting(x)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_square_counts_closed_forms(x):
    root = math.isqrt(x)
    odd = sum(1 for k in range(1, root + 1, 2) if k * k <= x)
    even = sum(1 for k in range(0, root + 1, 2) if k * k <= x)
    assert odd_square_count(x) == odd
    assert even_square_count(x) == even


# --- intersect -------------------------------------------------------------

def test_intersect_examples():
    s = ParitySequence([3, 5, 7], Parity.ODD, 10)
    t = ParitySequence([5, 7, 9], Parity.ODD, 10)
    assert list(intersect(s, t).terms) == [5, 7]
    assert intersect(s, s) == s


def test_intersect_odd_primes_odd_squares_empty():
    limit = 100
    a = make_sequence(SequenceKind.ODD_PRIMES, limit)
    b = make_sequence(SequenceKind.ODD_SQUARES, limit)
    brute = set(a.terms) & set(b.terms)
    assert brute == set()
    assert len(intersect(a, b)) == 0


def test_intersect_properties():
    a = ParitySequence([0, 4, 8, 12], Parity.EVEN, 20)
    b = ParitySequence([0, 2, 8, 14], Parity.EVEN, 20)
    c = ParitySequence([0, 8, 14, 18], Parity.EVEN, 20)
    assert intersect(a, b) == intersect(b, a)
    assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))
    w = intersect(a, b)
    for x in range(21):
        assert w.counting(x) <= min(a.counting(x), b.counting(x))


def test_intersect_errors():
    odd = ParitySequence([1, 3], Parity.ODD, 10)
    even = ParitySequence([0, 2], Parity.EVEN, 10)
    with pytest.raises(ParityMismatchError):
        intersect(odd, even)
    with pytest.raises(LimitMismatchError):
        intersect(odd, ParitySequence([1, 3], Parity.ODD, 12))


# --- file loading ----------------------------------------------------------

def test_load_sequence_roundtrip(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("# comment\nparity: odd\n1\n3\n\n9\n")
    seq = load_sequence(path)
    assert list(seq.terms) == [1, 3, 9]
    assert seq.parity is Parity.ODD
    assert seq.limit == 9
    truncated = load_sequence(path, limit=5)
    assert list(truncated.terms) == [1, 3]
    assert truncated.limit == 5


def test_load_sequence_errors(tmp_path):
    bad_header = tmp_path / "a.txt"
    bad_header.write_text("3\n5\n")
    with pytest.raises(SequenceFormatError):
        load_sequence(bad_header)

    bad_parity = tmp_path / "b.txt"
    bad_parity.write_text("parity: odd\n2\n")
    with pytest.raises(ParityMismatchError):
        load_sequence(bad_parity)

    duplicate = tmp_path / "c.txt"
    duplicate.write_text("parity: odd\n3\n3\n")
    with pytest.raises(SequenceFormatError):
        load_sequence(duplicate)

    not_int = tmp_path / "d.txt"
    not_int.write_text("parity: even\n2\nx\n")
    with pytest.raises(SequenceFormatError):
        load_sequence(not_int)

    empty = tmp_path / "e.txt"
    empty.write_text("")
    with pytest.raises(SequenceFormatError):
        load_sequence(empty)
