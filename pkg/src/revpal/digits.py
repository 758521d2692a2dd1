"""Base-b digit arithmetic: expansion, reversal, palindrome and coprimality tests."""

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd


def _trial_factor(n: int) -> list[int]:
    """Distinct prime factors of n by trial division, ascending."""
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


@dataclass(frozen=True)
class BaseContext:
    """A base b with the derived constants used throughout.

    b3mb = b^3 - b = (b-1) b (b+1); its prime factors are found by factoring
    each of the three terms separately, so only primes up to b+1 are needed.
    """

    b: int
    b2m1: int = field(init=False)
    b3mb: int = field(init=False)
    primes_b3mb: tuple[int, ...] = field(init=False)
    phi_b: int = field(init=False)

    def __post_init__(self):
        if self.b < 2:
            raise ValueError(f"base must be >= 2, got {self.b}")
        object.__setattr__(self, "b2m1", self.b * self.b - 1)
        object.__setattr__(self, "b3mb", self.b ** 3 - self.b)
        ps = set()
        for part in (self.b - 1, self.b, self.b + 1):
            if part > 1:
                ps.update(_trial_factor(part))
        object.__setattr__(self, "primes_b3mb", tuple(sorted(ps)))
        object.__setattr__(self, "phi_b", _phi(self.b))


def _phi(b: int) -> int:
    phi = b
    for p in _trial_factor(b):
        phi -= phi // p
    return phi


@lru_cache(maxsize=None)
def base_context(b: int) -> BaseContext:
    return BaseContext(b)


@dataclass(frozen=True)
class DigitVector:
    """Digits of a positive integer, least-significant first, no leading zero."""

    base: int
    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.base + d
        return v

    def __len__(self) -> int:
        return len(self.digits)


def to_digits(n: int, b: int) -> DigitVector:
    """Base-b expansion of n >= 1, little-endian."""
    if n < 1:
        raise ValueError("digit expansion is defined for n >= 1 only")
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    ds = []
    while n:
        n, d = divmod(n, b)
        ds.append(d)
    return DigitVector(base=b, digits=tuple(ds))


def reverse(n: int, ctx: BaseContext) -> int:
    """Digital reverse of n in base ctx.b.

    Requires b to not divide n, so that the result has the same digit count
    and reversal is an involution.
    """
    b = ctx.b
    if n < 1:
        raise ValueError("reverse is defined for n >= 1 only")
    if n % b == 0:
        raise ValueError(f"{n} has a trailing zero digit in base {b}; reversal is not invertible")
    r = 0
    while n:
        n, d = divmod(n, b)
        r = r * b + d
    return r


def is_palindrome(n: int, ctx: BaseContext) -> bool:
    """True iff b does not divide n and n equals its digital reverse."""
    if n < 1:
        raise ValueError("palindrome test is defined for n >= 1 only")
    if n % ctx.b == 0:
        return False
    return reverse(n, ctx) == n


def in_b_star(n: int, ctx: BaseContext) -> bool:
    """True iff n is coprime to b^3 - b."""
    if n < 1:
        raise ValueError("membership is defined for n >= 1 only")
    return gcd(n, ctx.b3mb) == 1
