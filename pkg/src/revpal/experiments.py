"""Counting experiments: reversed k-free primes, palindrome enumeration and
its derived counts, each paired with a theoretical main term where one exists.
"""

import csv
import io
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from . import densities
from .digits import BaseContext
from .sieve import FactorTable, is_k_free

CSV_COLUMNS = ["label", "b", "k", "N_or_x", "d", "empirical", "main_term", "ratio"]


@dataclass(frozen=True)
class CountReport:
    label: str
    b: int
    k: int | None
    n_or_x: int
    d: int | None
    empirical: int
    main_term: float

    @property
    def ratio(self) -> float:
        if self.main_term <= 0:
            raise ValueError("ratio undefined for non-positive main term")
        return self.empirical / self.main_term

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "b": self.b,
            "k": self.k,
            "N_or_x": self.n_or_x,
            "d": self.d,
            "empirical": self.empirical,
            "main_term": self.main_term,
            "ratio": self.ratio if self.main_term > 0 else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CountReport":
        return cls(
            label=d["label"], b=d["b"], k=d["k"], n_or_x=d["N_or_x"],
            d=d["d"], empirical=d["empirical"], main_term=d["main_term"],
        )


def reports_to_csv(reports: list[CountReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        d = r.to_dict()
        w.writerow([
            d["label"], d["b"], "" if d["k"] is None else d["k"], d["N_or_x"],
            "" if d["d"] is None else d["d"], d["empirical"],
            format(d["main_term"], ".12g"),
            "" if d["ratio"] is None else format(d["ratio"], ".12g"),
        ])
    return buf.getvalue()


def reports_to_json(reports: list[CountReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=None)


# ---------------------------------------------------------------------------
# palindrome enumeration
# ---------------------------------------------------------------------------

def _mirror(prefix: int, n_digits: int, b: int) -> int:
    """The n_digits-digit palindrome whose leading ceil(n/2) digits are prefix."""
    ds = []
    q = prefix
    while q:
        q, r = divmod(q, b)
        ds.append(r)
    ds.reverse()  # big-endian prefix digits
    tail = ds[: n_digits - len(ds)]  # first n - ceil(n/2) digits, to be mirrored
    v = 0
    for d in ds:
        v = v * b + d
    for d in reversed(tail):
        v = v * b + d
    return v


@lru_cache(maxsize=64)
def _palindromes_upto(b: int, x: int) -> tuple[int, ...]:
    """All base-b palindromes <= x (with b not dividing n), ascending,
    generated from half-digit prefixes."""
    if x < 1:
        return ()
    out = []
    n_digits = 1
    while b ** (n_digits - 1) <= x:
        half = (n_digits + 1) // 2
        for prefix in range(b ** (half - 1), b ** half):
            v = _mirror(prefix, n_digits, b)
            if v > x:
                break  # mirror value is increasing in the prefix
            out.append(v)
        n_digits += 1
    return tuple(out)


def enumerate_palindromes(ctx: BaseContext, x: int, star: bool = False) -> list[int]:
    """P_b(x), or its subset P*_b(x) coprime to b^3 - b, ascending."""
    pal = _palindromes_upto(ctx.b, x)
    if not star:
        return list(pal)
    m = ctx.b3mb
    return [n for n in pal if gcd(n, m) == 1]


def count_palindromes_div_by(ctx: BaseContext, x: int, d: int, star: bool = False) -> int:
    """#{n in P_b(x) (or P*_b(x)) : d | n}."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return sum(1 for n in enumerate_palindromes(ctx, x, star) if n % d == 0)


def sqrt_law_check(ctx: BaseContext, x_values: list[int], star: bool = False) -> list[tuple[int, int, float]]:
    """For each x, the palindrome count and its ratio to sqrt(x)."""
    if any(b > a for a, b in zip(x_values[1:], x_values)):
        raise ValueError("x_values must be ascending")
    out = []
    for x in x_values:
        c = len(enumerate_palindromes(ctx, x, star))
        out.append((x, c, c / math.sqrt(x) if x >= 1 else 0.0))
    return out


# ---------------------------------------------------------------------------
# reversed primes
# ---------------------------------------------------------------------------

def _digit_count(n: int, b: int) -> int:
    c = 0
    while n:
        n //= b
        c += 1
    return c


def _primes_in_digit_class(ctx: BaseContext, N: int, table: FactorTable) -> np.ndarray:
    """Primes in B_N: N base-b digits, not divisible by b."""
    b = ctx.b
    lo, hi = b ** (N - 1), b ** N
    if hi - 1 > table.limit:
        raise ValueError(f"table limit {table.limit} too small for b^N = {hi}")
    flags = table.prime_flags()[lo:hi]
    ps = np.nonzero(flags)[0].astype(np.int64) + lo
    return ps[ps % b != 0]


def _reverse_vector(ns: np.ndarray, N: int, b: int) -> np.ndarray:
    """Digit reversal of an array of N-digit integers (none divisible by b)."""
    m = ns.astype(np.int64, copy=True)
    r = np.zeros_like(m)
    for _ in range(N):
        r *= b
        r += m % b
        m //= b
    return r


def count_rev_kfree_primes(ctx: BaseContext, k: int, N: int, table: FactorTable) -> CountReport:
    """r_{b,k}(N): primes p in B_N with reverse in B*_N and reverse k-free."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    ps = _primes_in_digit_class(ctx, N, table)
    rev = _reverse_vector(ps, N, ctx.b)
    rev = rev[np.gcd(rev, ctx.b3mb) == 1]
    count = sum(1 for v in rev.tolist() if is_k_free(v, k, table))
    return CountReport(
        label="rev_kfree_primes", b=ctx.b, k=k, n_or_x=N, d=None,
        empirical=count, main_term=densities.rev_kfree_main_term(ctx, k, N),
    )


def rev_pi_star(ctx: BaseContext, N: int, d: int, table: FactorTable) -> CountReport:
    """pi*_N(0, d): primes p in B_N with reverse in B*_N and d | reverse(p)."""
    if gcd(d, ctx.b3mb) != 1:
        raise ValueError(f"d = {d} shares a factor with b^3 - b = {ctx.b3mb}")
    ps = _primes_in_digit_class(ctx, N, table)
    rev = _reverse_vector(ps, N, ctx.b)
    rev = rev[np.gcd(rev, ctx.b3mb) == 1]
    count = int(np.count_nonzero(rev % d == 0))
    return CountReport(
        label="rev_pi_star", b=ctx.b, k=None, n_or_x=N, d=d,
        empirical=count, main_term=densities.rev_pi_main_term(ctx, d, N),
    )


def count_rev_kfree_primes_via_kfree(ctx: BaseContext, k: int, N: int, table: FactorTable) -> int:
    """Independent pipeline for r_{b,k}(N): iterate k-free m in B*_N and test
    whether reverse(m) is prime.  Reversal is a bijection on B_N, so this must
    agree with count_rev_kfree_primes."""
    b = ctx.b
    lo, hi = b ** (N - 1), b ** N
    if hi - 1 > table.limit:
        raise ValueError(f"table limit {table.limit} too small for b^N = {hi}")
    ms = np.arange(lo, hi, dtype=np.int64)
    ms = ms[np.gcd(ms, ctx.b3mb) == 1]
    count = 0
    for m in ms.tolist():
        if is_k_free(m, k, table) and table.is_prime(_reverse_int(m, N, b)):
            count += 1
    return count


def _reverse_int(n: int, N: int, b: int) -> int:
    r = 0
    for _ in range(N):
        n, d = divmod(n, b)
        r = r * b + d
    return r


# ---------------------------------------------------------------------------
# k-free and almost-prime palindromes
# ---------------------------------------------------------------------------

def count_kfree_palindromes(ctx: BaseContext, k: int, x: int, table: FactorTable) -> CountReport:
    """p_{k,b}(x): k-free members of P*_b(x), with the Theorem-2-style main term."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if x > table.limit:
        raise ValueError(f"table limit {table.limit} too small for x = {x}")
    pstar = enumerate_palindromes(ctx, x, star=True)
    count = sum(1 for n in pstar if is_k_free(n, k, table))
    return CountReport(
        label="kfree_palindromes", b=ctx.b, k=k, n_or_x=x, d=None,
        empirical=count,
        main_term=densities.palin_kfree_main_term(ctx, k, len(pstar)),
    )


def count_almost_prime_palindromes(
    ctx: BaseContext,
    x: int,
    omega_max: int,
    kfree_k: int | None = None,
    rough_exponent: float | None = None,
    table: FactorTable | None = None,
) -> int:
    """#{n in P_b(x) : Omega(n) <= omega_max}, optionally also k-free and
    rough (smallest prime factor >= x^rough_exponent; n = 1 counts as rough)."""
    if table is None or x > table.limit:
        raise ValueError("a factor table covering x is required")
    if omega_max < 0:
        raise ValueError("omega_max must be >= 0")
    rough_floor = x ** rough_exponent if rough_exponent is not None else None
    count = 0
    for n in enumerate_palindromes(ctx, x, star=False):
        if int(table.omega_total[n]) > omega_max:
            continue
        if kfree_k is not None and not is_k_free(n, kfree_k, table):
            continue
        if rough_floor is not None and n > 1 and int(table.spf[n]) < rough_floor:
            continue
        count += 1
    return count


def brute_force_palindromes(ctx: BaseContext, x: int, star: bool = False) -> list[int]:
    """Oracle: scan every n <= x with the digit-level palindrome test."""
    from .digits import is_palindrome, in_b_star

    out = []
    for n in range(1, x + 1):
        if is_palindrome(n, ctx) and (not star or in_b_star(n, ctx)):
            out.append(n)
    return out
