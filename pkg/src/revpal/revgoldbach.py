"""Reverse-Goldbach experiments: counting representations M = rev(p1) + p2,
scanning for unrepresentable targets, and the prime-plus-squarefree variant.
"""

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .digits import BaseContext
from .sieve import FactorTable


class TargetClass(Enum):
    EVEN_TARGETS_ONLY = "even_targets_only"
    ALL_TARGETS = "all_targets"


@dataclass(frozen=True)
class ParityClass:
    base: int
    applies_to: TargetClass


@dataclass(frozen=True)
class ScanResult:
    base: int
    limit: int
    scanned_from: int
    parity: TargetClass
    exceptions: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "base": self.base, "limit": self.limit,
            "scanned_from": self.scanned_from,
            "parity_class": self.parity.value,
            "exceptions": list(self.exceptions),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def parity_class(ctx: BaseContext) -> ParityClass:
    """Odd bases and base 2 force even sums rev(p1) + p2 for odd primes, so
    only even targets are expected representable; even bases > 2 have no such
    obstruction."""
    if ctx.b % 2 == 1 or ctx.b == 2:
        return ParityClass(base=ctx.b, applies_to=TargetClass.EVEN_TARGETS_ONLY)
    return ParityClass(base=ctx.b, applies_to=TargetClass.ALL_TARGETS)


def _digit_count(n: int, b: int) -> int:
    c = 0
    while n:
        n //= b
        c += 1
    return c


def reversed_prime_values(ctx: BaseContext, cap: int, table: FactorTable) -> np.ndarray:
    """Sorted rev(p) <= cap over primes p with b not dividing p.

    Reversal preserves digit count, so any prime contributing a value <= cap
    has at most digit_count(cap) digits; the table must cover that range.
    """
    b = ctx.b
    if cap < 1:
        return np.empty(0, dtype=np.int64)
    n_digits = _digit_count(cap, b)
    prime_bound = b ** n_digits - 1
    if prime_bound > table.limit:
        raise ValueError(
            f"table limit {table.limit} too small; "
            f"need primes up to {prime_bound} to cover reverses <= {cap}"
        )
    flags = table.prime_flags()[: prime_bound + 1]
    ps = np.nonzero(flags)[0].astype(np.int64)
    ps = ps[ps % b != 0]
    return _reverse_mixed(ps, b, cap)


def _reverse_mixed(ps: np.ndarray, b: int, cap: int) -> np.ndarray:
    """Reverse an array of integers with varying digit counts; keep values <= cap."""
    out = []
    lo, n_digits = 1, 1
    while lo <= ps.max(initial=0):
        hi = lo * b
        chunk = ps[(ps >= lo) & (ps < hi)]
        if chunk.size:
            r = np.zeros_like(chunk)
            m = chunk.copy()
            for _ in range(n_digits):
                r *= b
                r += m % b
                m //= b
            out.append(r[r <= cap])
        lo, n_digits = hi, n_digits + 1
    if not out:
        return np.empty(0, dtype=np.int64)
    vals = np.concatenate(out)
    vals.sort()
    return vals


def representations(ctx: BaseContext, M: int, table: FactorTable) -> int:
    """Number of ordered pairs (p1, p2) of primes with b not dividing p1 and
    M = rev(p1) + p2."""
    if M < 2:
        raise ValueError(f"target must be >= 2, got {M}")
    if M > table.limit:
        raise ValueError(f"table limit {table.limit} too small for target {M}")
    rev_vals = reversed_prime_values(ctx, M - 2, table)
    flags = table.prime_flags()
    return int(np.count_nonzero(flags[M - rev_vals])) if rev_vals.size else 0


def scan_exceptions(ctx: BaseContext, limit: int, table: FactorTable,
                    scanned_from: int = 4) -> ScanResult:
    """All in-class targets in [scanned_from, limit] with zero representations."""
    if limit > table.limit:
        raise ValueError(f"table limit {table.limit} too small for scan limit {limit}")
    pc = parity_class(ctx)
    targets = np.arange(scanned_from, limit + 1, dtype=np.int64)
    if pc.applies_to is TargetClass.EVEN_TARGETS_ONLY:
        targets = targets[targets % 2 == 0]

    rev_vals = reversed_prime_values(ctx, limit - 2, table)
    flags = table.prime_flags()
    pending = targets
    # eliminate targets as soon as one representation is found; most fall
    # within the first few reversed values
    for r in rev_vals.tolist():
        if pending.size == 0:
            break
        diff = pending - r
        hit = (diff >= 2) & flags[np.maximum(diff, 0)]
        pending = pending[~hit]
    return ScanResult(
        base=ctx.b, limit=limit, scanned_from=scanned_from,
        parity=pc.applies_to, exceptions=tuple(int(t) for t in pending),
    )


def estermann_count(ctx: BaseContext, M: int, table: FactorTable) -> int:
    """h_b(M): primes p with b not dividing p, rev(p) <= M - 1, and
    M - rev(p) square-free."""
    if M < 1:
        raise ValueError(f"target must be >= 1, got {M}")
    if M > table.limit:
        raise ValueError(f"table limit {table.limit} too small for target {M}")
    if M == 1:
        return 0
    rev_vals = reversed_prime_values(ctx, M - 1, table)
    if rev_vals.size == 0:
        return 0
    return int(np.count_nonzero(table.mu[M - rev_vals] != 0))
