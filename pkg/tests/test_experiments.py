import json
import math

import pytest

from revpal.digits import base_context
from revpal.experiments import (
    CountReport,
    brute_force_palindromes,
    count_almost_prime_palindromes,
    count_kfree_palindromes,
    count_palindromes_div_by,
    count_rev_kfree_primes,
    count_rev_kfree_primes_via_kfree,
    enumerate_palindromes,
    reports_to_csv,
    reports_to_json,
    rev_pi_star,
    sqrt_law_check,
)


def test_palindrome_enumeration_base10_small():
    ctx = base_context(10)
    pal = enumerate_palindromes(ctx, 100)
    assert pal == list(range(1, 10)) + [11, 22, 33, 44, 55, 66, 77, 88, 99]
    assert enumerate_palindromes(ctx, 100, star=True) == [1, 7]


def test_single_digits_are_palindromes():
    for b in (2, 5, 10, 16):
        ctx = base_context(b)
        assert enumerate_palindromes(ctx, b - 1) == list(range(1, b))


@pytest.mark.parametrize("b", [2, 3, 10, 16])
def test_enumeration_matches_brute_force(b):
    ctx = base_context(b)
    for x in (1, 50, 3000, 10 ** 4):
        assert enumerate_palindromes(ctx, x) == brute_force_palindromes(ctx, x)
        assert enumerate_palindromes(ctx, x, star=True) == brute_force_palindromes(ctx, x, star=True)


def test_enumeration_is_sorted_and_bounded():
    ctx = base_context(3)
    pal = enumerate_palindromes(ctx, 10 ** 5)
    assert pal == sorted(pal)
    assert all(1 <= n <= 10 ** 5 and n % 3 != 0 for n in pal)


def test_count_rev_kfree_primes_single_digit(table_1e5):
    ctx = base_context(10)
    rep = count_rev_kfree_primes(ctx, 2, 1, table_1e5)
    assert rep.empirical == 1  # only p = 7 has reverse coprime to 990


def test_count_rev_kfree_primes_two_digit(table_1e5):
    ctx = base_context(10)
    rep = count_rev_kfree_primes(ctx, 2, 2, table_1e5)
    # reversed two-digit primes landing in B*_2: {31,71,13,73,17,37,97,79,91}
    assert rep.empirical == 9
    assert rep.main_term > 0
    assert rep.ratio == rep.empirical / rep.main_term


def test_count_bounded_by_prime_count(table_1e5):
    ctx = base_context(10)
    for N in (1, 2, 3, 4):
        rep = count_rev_kfree_primes(ctx, 2, N, table_1e5)
        pi_bn = sum(1 for n in range(10 ** (N - 1), 10 ** N) if table_1e5.is_prime(n))
        assert 0 <= rep.empirical <= pi_bn


@pytest.mark.parametrize("b,N", [(10, 2), (10, 3), (10, 4), (2, 8), (3, 6)])
def test_two_pipelines_agree(b, N, table_1e5):
    ctx = base_context(b)
    forward = count_rev_kfree_primes(ctx, 2, N, table_1e5).empirical
    backward = count_rev_kfree_primes_via_kfree(ctx, 2, N, table_1e5)
    assert forward == backward


def test_rev_pi_star_examples(table_1e5):
    ctx = base_context(10)
    assert rev_pi_star(ctx, 2, 1, table_1e5).empirical == 9
    # only 91 among the nine reversed values is divisible by 7
    assert rev_pi_star(ctx, 2, 7, table_1e5).empirical == 1
    assert rev_pi_star(ctx, 2, 101, table_1e5).empirical == 0


def test_rev_pi_star_rejects_shared_factor(table_1e5):
    ctx = base_context(10)
    with pytest.raises(ValueError):
        rev_pi_star(ctx, 2, 11, table_1e5)


def test_count_kfree_palindromes_small(table_1e5):
    ctx = base_context(10)
    rep = count_kfree_palindromes(ctx, 3, 100, table_1e5)
    assert rep.empirical == 2  # 1 and 7 are both cube-free
    pstar = len(enumerate_palindromes(ctx, 100, star=True))
    assert rep.empirical <= pstar


def test_count_palindromes_div_by(table_1e5):
    ctx = base_context(10)
    assert count_palindromes_div_by(ctx, 100, 11) == 9
    assert count_palindromes_div_by(ctx, 100, 1) == 18
    assert count_palindromes_div_by(ctx, 100, 1, star=True) == 2


def test_almost_prime_palindromes(table_1e5):
    ctx = base_context(10)
    # omega_max = 0 counts only n = 1
    assert count_almost_prime_palindromes(ctx, 10 ** 4, 0, table=table_1e5) == 1
    # omega_max = 1 counts 1 and the palindromic primes
    direct = 1 + sum(
        1 for n in enumerate_palindromes(ctx, 10 ** 4) if table_1e5.is_prime(n))
    assert count_almost_prime_palindromes(ctx, 10 ** 4, 1, table=table_1e5) == direct
    loose = count_almost_prime_palindromes(ctx, 10 ** 4, 6, kfree_k=3, table=table_1e5)
    tight = count_almost_prime_palindromes(
        ctx, 10 ** 4, 6, kfree_k=3, rough_exponent=1 / 21, table=table_1e5)
    assert loose >= tight


def test_sqrt_law_check():
    ctx = base_context(10)
    rows = sqrt_law_check(ctx, [10 ** j for j in range(2, 7)])
    for x, count, norm in rows:
        assert norm == pytest.approx(count / math.sqrt(x))
    star_rows = sqrt_law_check(ctx, [10 ** j for j in range(2, 7)], star=True)
    for (_, _, n1), (_, _, n2) in zip(star_rows, rows):
        assert n1 <= n2


def test_report_serialization_round_trip(table_1e5):
    ctx = base_context(10)
    rep = count_rev_kfree_primes(ctx, 2, 3, table_1e5)
    parsed = json.loads(reports_to_json([rep]))
    assert CountReport.from_dict(parsed[0]) == rep
    csv_text = reports_to_csv([rep])
    lines = csv_text.strip().split("\n")
    assert lines[0] == "label,b,k,N_or_x,d,empirical,main_term,ratio"
    assert len(lines) == 2
    assert lines[1].startswith(f"rev_kfree_primes,10,2,3,,{rep.empirical}")
