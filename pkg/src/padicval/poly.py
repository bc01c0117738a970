"""Dense integer polynomials and polynomials over Z/p^k.

Coefficient lists run low to high: ``IntPoly((243, 81, 9, 1))`` is
x^3 + 9x^2 + 81x + 243.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from padicval.valuation import check_prime


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __call__(self, n: int) -> int:
        return eval_poly(self, n)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        return IntPoly(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _gcd(g, c)
        return g

    def shift(self, t: int) -> "IntPoly":
        """The polynomial ``x -> Q(x + t)``."""
        out = IntPoly()
        xt = IntPoly((t, 1))
        for c in reversed(self.coeffs):
            out = out * xt + IntPoly((c,))
        return out

    def mod(self, p: int, k: int = 1) -> "ModPoly":
        return ModPoly(p, k, self.coeffs)

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def eval_poly(Q: IntPoly, n: int) -> int:
    """Exact ``Q(n)`` by Horner's scheme."""
    acc = 0
    for c in reversed(Q.coeffs):
        acc = acc * n + c
    return acc


def derivative(Q: IntPoly) -> IntPoly:
    return IntPoly(i * c for i, c in enumerate(Q.coeffs) if i)


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_matrix(A: IntPoly, B: IntPoly) -> list[list[int]]:
    m, n = A.degree, B.degree
    size = m + n
    rows = []
    a_hi = list(reversed(A.coeffs))
    b_hi = list(reversed(B.coeffs))
    for i in range(n):
        rows.append([0] * i + a_hi + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + b_hi + [0] * (size - n - 1 - i))
    return rows


def resultant(A: IntPoly, B: IntPoly) -> int:
    if A.is_zero() or B.is_zero():
        return 0
    if A.degree == 0 and B.degree == 0:
        return 1
    return bareiss_det(sylvester_matrix(A, B))


def discriminant(Q: IntPoly) -> int:
    """``(-1)^(d(d-1)/2) Res(Q, Q') / lead(Q)``."""
    d = Q.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return 1
    res = resultant(Q, derivative(Q))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, Q.lead)
    assert r == 0
    return q


def is_squarefree(Q: IntPoly) -> bool:
    return Q.degree >= 1 and discriminant(Q) != 0


# ---------------------------------------------------------------------------
# polynomials modulo p^k


@dataclass(frozen=True)
class ModPoly:
    """Polynomial with coefficients reduced into ``[0, p**modulus_exp)``."""

    prime: int
    modulus_exp: int
    coeffs: tuple[int, ...]

    def __init__(self, prime: int, modulus_exp: int, coeffs: Iterable[int]):
        check_prime(prime)
        M = prime**modulus_exp
        object.__setattr__(self, "prime", prime)
        object.__setattr__(self, "modulus_exp", modulus_exp)
        object.__setattr__(self, "coeffs", _trim(int(c) % M for c in coeffs))

    @property
    def modulus(self) -> int:
        return self.prime**self.modulus_exp

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def lift(self) -> IntPoly:
        """Integer polynomial with the canonical non-negative coefficients."""
        return IntPoly(self.coeffs)

    def _same(self, other: "ModPoly") -> None:
        if (self.prime, self.modulus_exp) != (other.prime, other.modulus_exp):
            raise ValueError("modulus mismatch")

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._same(other)
        return ModPoly(self.prime, self.modulus_exp, (IntPoly(self.coeffs) + IntPoly(other.coeffs)).coeffs)

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        self._same(other)
        return ModPoly(self.prime, self.modulus_exp, (IntPoly(self.coeffs) - IntPoly(other.coeffs)).coeffs)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._same(other)
        return ModPoly(self.prime, self.modulus_exp, _mul(self.coeffs, other.coeffs))

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"ModPoly({format_poly(self.coeffs)} mod {self.prime}^{self.modulus_exp})"


# Field arithmetic over F_p on plain coefficient lists.


def _fp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    b = list(_trim(c % p for c in b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    a = [c % p for c in a]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv % p
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
    return list(_trim(q)), list(_trim(a[: len(b) - 1]))


def _fp_monic(a: Sequence[int], p: int) -> list[int]:
    a = list(_trim(c % p for c in a))
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _fp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return list(_trim(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)))


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return list(_trim(c % p for c in _mul(a, b)))


def _fp_xgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Monic ``g = gcd(a, b)`` together with ``s, t`` such that ``s a + t b = g``."""
    r0, r1 = list(_trim(c % p for c in a)), list(_trim(c % p for c in b))
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1, p), p)
        t0, t1 = t1, _fp_sub(t0, _fp_mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return [c * inv % p for c in r0], [c * inv % p for c in s0], [c * inv % p for c in t0]


def gcd_mod_p(A: ModPoly, B: ModPoly) -> ModPoly:
    """Monic gcd over F_p; inputs must be reduced modulo p itself."""
    if A.modulus_exp != 1 or B.modulus_exp != 1:
        raise ValueError("gcd_mod_p works over the field F_p (modulus_exp = 1)")
    A._same(B)
    g, _, _ = _fp_xgcd(A.coeffs, B.coeffs, A.prime)
    return ModPoly(A.prime, 1, g)


def bezout_mod_p(A: ModPoly, B: ModPoly) -> tuple[ModPoly, ModPoly]:
    """``(s, t)`` with ``s A + t B = 1`` over F_p; raises if A, B share a factor."""
    p = A.prime
    g, s, t = _fp_xgcd(A.coeffs, B.coeffs, p)
    if g != [1]:
        raise ValueError(f"{A} and {B} are not coprime mod {p}")
    return ModPoly(p, 1, s), ModPoly(p, 1, t)


def _monic_candidates(p: int, k: int):
    for tail in itertools.product(range(p), repeat=k):
        yield list(tail) + [1]


@dataclass(frozen=True)
class ModFactorization:
    unit: int
    factors: tuple[tuple[ModPoly, int], ...]  # (monic irreducible, multiplicity)

    def expanded(self) -> list[ModPoly]:
        return [f for f, e in self.factors for _ in range(e)]

    def product(self) -> ModPoly:
        p = self.factors[0][0].prime if self.factors else None
        acc = [self.unit]
        for f, e in self.factors:
            for _ in range(e):
                acc = _fp_mul(acc, f.coeffs, f.prime)
        return ModPoly(p, 1, acc) if p else None


def factor_mod_p(Q: IntPoly | ModPoly, p: int) -> ModFactorization:
    """Factor ``Q mod p`` into monic irreducibles by exhaustive trial division.

    Candidates are all monic polynomials of degree 1, 2, ... in order, so any
    candidate that divides what is left is automatically irreducible.  The
    loop stops once the candidate degree exceeds half the remaining degree;
    the cost is bounded by roughly p^(floor(d/2) + 1) trial divisions.
    """
    check_prime(p)
    f = list(_trim(c % p for c in Q.coeffs))
    if not f:
        raise ValueError(f"{Q} vanishes mod {p}")
    unit = f[-1]
    f = _fp_monic(f, p)
    found: list[tuple[ModPoly, int]] = []
    k = 1
    while 2 * k <= len(f) - 1:
        for cand in _monic_candidates(p, k):
            e = 0
            while True:
                q, r = _fp_divmod(f, cand, p)
                if r:
                    break
                f = q
                e += 1
            if e:
                found.append((ModPoly(p, 1, cand), e))
            if 2 * k > len(f) - 1:
                break
        k += 1
    if len(f) > 1:
        # no factor of degree <= deg/2 survives, so the cofactor is irreducible
        found.append((ModPoly(p, 1, f), 1))
    found.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs))
    return ModFactorization(unit, tuple(found))


def is_irreducible_mod_p(Q: IntPoly | ModPoly, p: int) -> bool:
    fac = factor_mod_p(Q, p)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1


# ---------------------------------------------------------------------------
# text formats

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(x(?:\s*\^\s*(\d+))?)?")


def parse_poly(text: str, coeffs: bool = False) -> IntPoly:
    """Parse ``"x^3+9x^2+81x+243"`` or, with ``coeffs=True``, ``"243,81,9,1"``."""
    text = text.strip()
    if coeffs:
        body = text.strip("[]() ")
        if not body:
            return IntPoly()
        try:
            return IntPoly(int(tok) for tok in body.split(","))
        except ValueError:
            raise ValueError(f"cannot parse coefficient list {text!r}") from None
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    out: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not m.group(3) and (not m.group(2) or "*" in m.group(0)):
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing operator in {text!r} at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            power = int(m.group(4)) if m.group(4) else 1
        else:
            power = 0
        out[power] = out.get(power, 0) + sign * coef
        pos = m.end()
    top = max(out)
    return IntPoly(out.get(i, 0) for i in range(top + 1))


def format_poly(coeffs: Sequence[int]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if a == 1 else f"{a}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out
