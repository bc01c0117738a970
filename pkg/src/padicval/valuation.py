"""Integer valuations, truncated p-adic integers and Legendre's formula.

The valuation of zero is the float ``INFINITE`` (``math.inf``).  It compares
above every integer, absorbs under addition and is neutral under ``min``,
which is exactly the arithmetic the valuation rules need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from sympy import isprime

INFINITE = math.inf

Valuation = Union[int, float]


@lru_cache(maxsize=256)
def check_prime(p: int) -> int:
    """Return ``p`` unchanged, or raise ``ValueError`` if it is not a prime."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 2 or not isprime(p):
        raise ValueError(f"{p!r} is not a prime")
    return p


def nu_int(p: int, x: int) -> Valuation:
    """Exponent of the largest power of ``p`` dividing ``x``.

    Large multiplicities are peeled off in blocks p, p^2, p^4, ... and then
    the remainder is settled by walking the blocks back down, so the number
    of big-integer divisions is logarithmic in the answer.

    >>> nu_int(3, 243)
    5
    >>> nu_int(2, 0)
    inf
    """
    check_prime(p)
    if x == 0:
        return INFINITE
    x = abs(x)
    if p == 2:
        return (x & -x).bit_length() - 1
    if x % p:
        return 0
    v = 0
    blocks = []
    q, e = p, 1
    while True:
        quo, rem = divmod(x, q)
        if rem:
            break
        x = quo
        v += e
        blocks.append((q, e))
        q, e = q * q, e * 2
    while blocks:
        q, e = blocks.pop()
        quo, rem = divmod(x, q)
        if not rem:
            x = quo
            v += e
    return v


def digit_sum(p: int, n: int) -> int:
    """Sum of the base-``p`` digits of ``n >= 0``."""
    s = 0
    while n:
        n, d = divmod(n, p)
        s += d
    return s


def nu_factorial(p: int, n: int) -> int:
    """Legendre's formula: ``sum_k floor(n / p^k)``."""
    check_prime(p)
    if n < 0:
        raise ValueError("factorial of a negative integer")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def nu_factorial_digits(p: int, n: int) -> int:
    """The digit-sum form ``(n - s_p(n)) / (p - 1)`` of Legendre's formula."""
    check_prime(p)
    return (n - digit_sum(p, n)) // (p - 1)


def digits(p: int, x: int, count: int) -> list[int]:
    """The first ``count`` base-``p`` digits of ``x mod p^count``, low to high."""
    x %= p**count
    out = []
    for _ in range(count):
        x, d = divmod(x, p)
        out.append(d)
    return out


@dataclass(frozen=True)
class PAdicInt:
    """An element of Z_p known modulo ``p**precision``.

    ``known_zero`` marks the exact integer 0, as opposed to an element that
    merely vanishes to the working precision.
    """

    prime: int
    precision: int
    residue: int
    known_zero: bool = False

    def __post_init__(self):
        check_prime(self.prime)
        if self.precision < 1:
            raise ValueError("precision must be positive")
        object.__setattr__(self, "residue", self.residue % self.modulus)
        if self.known_zero and self.residue:
            raise ValueError("known_zero set on a nonzero residue")

    @classmethod
    def from_int(cls, p: int, x: int, precision: int) -> "PAdicInt":
        return cls(p, precision, x, known_zero=(x == 0))

    @property
    def modulus(self) -> int:
        return self.prime**self.precision

    def is_unit(self) -> bool:
        return self.residue % self.prime != 0

    def valuation(self) -> Valuation:
        """Valuation, capped at ``precision`` unless the value is exactly 0."""
        if self.known_zero:
            return INFINITE
        if self.residue == 0:
            return self.precision
        return nu_int(self.prime, self.residue)

    def digits(self) -> list[int]:
        return digits(self.prime, self.residue, self.precision)

    def _coerce(self, other) -> "PAdicInt":
        if isinstance(other, int):
            return PAdicInt.from_int(self.prime, other, self.precision)
        if not isinstance(other, PAdicInt):
            return NotImplemented
        if other.prime != self.prime:
            raise ValueError(f"prime mismatch: {self.prime} vs {other.prime}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        k = min(self.precision, other.precision)
        return PAdicInt(
            self.prime, k, self.residue + other.residue, self.known_zero and other.known_zero
        )

    __radd__ = __add__

    def __neg__(self):
        return PAdicInt(self.prime, self.precision, -self.residue, self.known_zero)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        k = min(self.precision, other.precision)
        return PAdicInt(
            self.prime, k, self.residue * other.residue, self.known_zero or other.known_zero
        )

    __rmul__ = __mul__

    def inverse(self) -> "PAdicInt":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self.residue} is not a unit mod {self.prime}")
        return PAdicInt(self.prime, self.precision, pow(self.residue, -1, self.modulus))

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"PAdicInt({self.residue} mod {self.prime}^{self.precision})"


def padic_add(a: PAdicInt, b: PAdicInt) -> PAdicInt:
    return a + b


def padic_mul(a: PAdicInt, b: PAdicInt) -> PAdicInt:
    return a * b


def padic_unit_inverse(a: PAdicInt) -> PAdicInt:
    return a.inverse()
