"""Closed-form main terms: zeta values, restricted Euler products, and the
leading asymptotics for the reversed-prime and palindrome counting functions.
"""

import math
from dataclasses import dataclass

from .digits import BaseContext


@dataclass(frozen=True)
class MainTerm:
    value: float
    description: str
    parameters: dict


def zeta(k: int) -> float:
    """zeta(k) for integer k >= 2, via partial sum plus Euler-Maclaurin tail.

    With cutoff M = 1000 the correction terms leave an error far below
    double precision for every k >= 2.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    M = 1000
    s = sum(n ** -float(k) for n in range(M - 1, 0, -1))
    # tail: integral term, half-step correction, two Bernoulli corrections
    s += M ** (1.0 - k) / (k - 1)
    s += 0.5 * M ** (-float(k))
    s += (k / 12.0) * M ** (-(k + 1.0))
    s -= (k * (k + 1) * (k + 2) / 720.0) * M ** (-(k + 3.0))
    return s


def kfree_density(ctx: BaseContext, k: int) -> float:
    """Density of k-free integers among those coprime to b^3 - b:
    (1/zeta(k)) * prod_{p | b^3-b} (1 - p^-k)^-1.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    prod = 1.0
    for p in ctx.primes_b3mb:
        prod /= 1.0 - p ** -float(k)
    return prod / zeta(k)


def log_prime_main_term(ctx: BaseContext, N: int) -> float:
    """log of (phi(b)/b) * b^N / (N log b), the expected prime count over
    N-digit numbers whose reverse is coprime to b."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    logb = math.log(ctx.b)
    return math.log(ctx.phi_b / ctx.b) + N * logb - math.log(N * logb)


def rev_kfree_main_term(ctx: BaseContext, k: int, N: int) -> float:
    """Main term for the count of N-digit primes with k-free reverse."""
    return math.exp(math.log(kfree_density(ctx, k)) + log_prime_main_term(ctx, N))


def palin_kfree_main_term(ctx: BaseContext, k: int, pstar_count: int) -> float:
    """Main term for k-free palindromes: |P*_b(x)| times the k-free density."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if pstar_count < 0:
        raise ValueError("pstar_count must be >= 0")
    return pstar_count * kfree_density(ctx, k)


def rev_pi_main_term(ctx: BaseContext, d: int, N: int) -> float:
    """Main term for primes whose reverse is divisible by d, d coprime to b^3 - b."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if math.gcd(d, ctx.b3mb) != 1:
        raise ValueError(f"d = {d} shares a factor with b^3 - b = {ctx.b3mb}")
    return math.exp(log_prime_main_term(ctx, N) - math.log(d))


def as_mantissa_exponent(log_value: float) -> tuple[float, int]:
    """Split exp(log_value) as (mantissa, decimal exponent) for values
    beyond double range."""
    log10 = log_value / math.log(10.0)
    exp10 = math.floor(log10)
    return 10.0 ** (log10 - exp10), exp10
