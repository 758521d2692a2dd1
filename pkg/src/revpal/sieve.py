"""Bulk arithmetic oracles on [1, limit]: smallest prime factor, Mobius mu,
Omega (prime factors with multiplicity), primality and k-free tests.

Memory layout: spf is 4 bytes per entry, mu and omega one byte each, so a
table of limit L costs about 6L bytes.
"""

import struct
from dataclasses import dataclass
from math import isqrt
from pathlib import Path

import numpy as np

DEFAULT_LIMIT_BUDGET = 2 ** 31

_CACHE_MAGIC = b"RPFT"
_CACHE_VERSION = 1


@dataclass(frozen=True)
class FactorTable:
    """Immutable sieve output over [0, limit]; index 0 is padding."""

    limit: int
    spf: np.ndarray      # int32, spf[n] = smallest prime factor of n for n >= 2
    mu: np.ndarray       # int8, Mobius function
    omega_total: np.ndarray  # int8, Omega(n)

    def is_prime(self, n: int) -> bool:
        self._check(n)
        return n >= 2 and int(self.spf[n]) == n

    def prime_flags(self) -> np.ndarray:
        """Boolean array over [0, limit], True at primes."""
        flags = self.spf == np.arange(self.limit + 1, dtype=self.spf.dtype)
        flags[:2] = False
        return flags

    def _check(self, n: int):
        if not 1 <= n <= self.limit:
            raise ValueError(f"n = {n} outside table range [1, {self.limit}]")


def build(limit: int, budget: int = DEFAULT_LIMIT_BUDGET) -> FactorTable:
    """Sieve all arrays for 1 <= n <= limit in one deterministic pass each."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit > budget:
        raise ValueError(f"limit {limit} exceeds memory budget {budget}")

    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:
            spf[p] = p
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.nonzero(spf[2:] == 0)[0] + 2
    spf[rest] = rest

    primes = np.nonzero(spf[2:] == np.arange(2, limit + 1, dtype=np.int32))[0] + 2

    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    for p in primes:
        mu[p::p] *= -1
    for p in primes[primes <= isqrt(limit)]:
        mu[p * p :: p * p] = 0

    omega = np.zeros(limit + 1, dtype=np.int8)
    for p in primes:
        pk = int(p)
        while pk <= limit:
            omega[pk::pk] += 1
            pk *= int(p)

    for arr in (spf, mu, omega):
        arr.setflags(write=False)
    return FactorTable(limit=limit, spf=spf, mu=mu, omega_total=omega)


def smallest_prime_factor(n: int, table: FactorTable) -> int:
    if n < 2:
        raise ValueError(f"smallest prime factor undefined for n = {n}")
    table._check(n)
    return int(table.spf[n])


def is_k_free(n: int, k: int, table: FactorTable) -> bool:
    """True iff no prime power p^k divides n; factors n via the spf array."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    table._check(n)
    spf = table.spf
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e >= k:
            return False
    return True


def _mu_trial(d: int) -> int:
    """Mobius via trial division; independent of any sieve."""
    if d == 1:
        return 1
    sign = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            sign = -sign
        p += 1 if p == 2 else 2
    if d > 1:
        sign = -sign
    return sign


def mobius_sum_oracle(n: int, k: int) -> int:
    """Sum of mu(d) over d with d^k | n, by explicit divisor enumeration.

    This is the cross-check oracle for is_k_free; it never touches a table.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    total = 0
    d = 1
    while d ** k <= n:
        if n % (d ** k) == 0:
            total += _mu_trial(d)
        d += 1
    return total


def save_cache(table: FactorTable, path: str | Path):
    """Binary cache: magic + version + limit header, then raw little-endian arrays."""
    path = Path(path)
    with open(path, "wb") as fh:
        fh.write(struct.pack("<4sIQ", _CACHE_MAGIC, _CACHE_VERSION, table.limit))
        fh.write(table.spf.astype("<i4").tobytes())
        fh.write(table.mu.astype("<i1").tobytes())
        fh.write(table.omega_total.astype("<i1").tobytes())


def load_cache(path: str | Path) -> FactorTable:
    path = Path(path)
    with open(path, "rb") as fh:
        header = fh.read(16)
        magic, version, limit = struct.unpack("<4sIQ", header)
        if magic != _CACHE_MAGIC:
            raise ValueError(f"{path} is not a sieve cache file")
        if version != _CACHE_VERSION:
            raise ValueError(f"unsupported cache version {version}")
        n = limit + 1
        spf = np.frombuffer(fh.read(4 * n), dtype="<i4").astype(np.int32)
        mu = np.frombuffer(fh.read(n), dtype="<i1").astype(np.int8)
        omega = np.frombuffer(fh.read(n), dtype="<i1").astype(np.int8)
    for arr in (spf, mu, omega):
        arr.setflags(write=False)
    return FactorTable(limit=int(limit), spf=spf, mu=mu, omega_total=omega)
