import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revpal import sieve
from revpal.sieve import (
    build,
    is_k_free,
    load_cache,
    mobius_sum_oracle,
    save_cache,
    smallest_prime_factor,
)


def test_build_small_examples():
    t = build(30)
    assert t.spf[15] == 3
    assert t.mu[30] == -1
    assert t.omega_total[30] == 3
    assert t.mu[12] == 0


def test_build_rejects_bad_limits():
    with pytest.raises(ValueError):
        build(1)
    with pytest.raises(ValueError):
        build(100, budget=50)


def test_spf_fixed_points_are_primes(table_1e5):
    ps = {2, 3, 5, 7, 11, 13, 97, 997, 99991}
    for p in ps:
        assert table_1e5.is_prime(p)
        assert smallest_prime_factor(p, table_1e5) == p
    for n in (4, 21, 91, 99989):
        assert not table_1e5.is_prime(n) or smallest_prime_factor(n, table_1e5) == n


def test_smallest_prime_factor_examples(table_1e5):
    assert smallest_prime_factor(21, table_1e5) == 3
    assert smallest_prime_factor(97, table_1e5) == 97
    with pytest.raises(ValueError):
        smallest_prime_factor(1, table_1e5)
    with pytest.raises(ValueError):
        smallest_prime_factor(10 ** 5 + 1, table_1e5)


@settings(max_examples=300)
@given(st.integers(2, 10 ** 5))
def test_spf_divides_and_is_minimal(table_1e5, n):
    p = smallest_prime_factor(n, table_1e5)
    assert n % p == 0
    for q in range(2, p):
        assert n % q != 0


def test_is_k_free_examples(table_1e5):
    assert not is_k_free(12, 2, table_1e5)
    assert is_k_free(12, 3, table_1e5)
    assert is_k_free(1, 2, table_1e5)
    assert is_k_free(1, 7, table_1e5)


def test_mobius_sum_oracle_examples():
    assert mobius_sum_oracle(4, 2) == 0
    assert mobius_sum_oracle(6, 2) == 1
    assert mobius_sum_oracle(72, 3) == 0


@settings(max_examples=400)
@given(st.integers(1, 10 ** 5), st.sampled_from([2, 3, 4]))
def test_kfree_matches_oracle_sampled(table_1e5, n, k):
    assert is_k_free(n, k, table_1e5) == (mobius_sum_oracle(n, k) == 1)


def test_mu_matches_kfree_status(table_1e5):
    # mu(n) = 0 exactly when n is not square-free
    mu = table_1e5.mu
    for n in range(1, 2000):
        assert (mu[n] == 0) == (not is_k_free(n, 2, table_1e5))


def test_squarefree_count_1e6(table_1e6):
    count = int(np.count_nonzero(table_1e6.mu[1:] != 0))
    assert count == 607926
    assert abs(count / 10 ** 6 - 6 / math.pi ** 2) / (6 / math.pi ** 2) < 0.01


@settings(max_examples=200)
@given(st.integers(2, 300), st.integers(2, 300))
def test_omega_additive_on_coprime_pairs(table_1e5, m, n):
    if math.gcd(m, n) == 1:
        assert table_1e5.omega_total[m * n] == table_1e5.omega_total[m] + table_1e5.omega_total[n]


@settings(max_examples=200)
@given(st.integers(2, 300), st.integers(2, 300))
def test_mu_multiplicative_on_coprime_pairs(table_1e5, m, n):
    if math.gcd(m, n) == 1:
        assert table_1e5.mu[m * n] == table_1e5.mu[m] * table_1e5.mu[n]


def test_cache_round_trip(tmp_path):
    t = build(5000)
    path = tmp_path / "sieve_5000.bin"
    save_cache(t, path)
    t2 = load_cache(path)
    assert t2.limit == t.limit
    assert np.array_equal(t2.spf, t.spf)
    assert np.array_equal(t2.mu, t.mu)
    assert np.array_equal(t2.omega_total, t.omega_total)


def test_cache_rejects_garbage(tmp_path):
    p = tmp_path / "junk.bin"
    p.write_bytes(b"NOPE" + b"\0" * 20)
    with pytest.raises(ValueError):
        load_cache(p)


def test_range_check(table_1e5):
    with pytest.raises(ValueError):
        is_k_free(10 ** 5 + 1, 2, table_1e5)
    with pytest.raises(ValueError):
        sieve.is_k_free(10, 1, table_1e5)
