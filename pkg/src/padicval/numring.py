"""Monogenic orders Z[theta], norms, and valuations at a totally ramified prime.

Elements are coordinate vectors on the power basis 1, theta, ..., theta^(m-1).
For a prime p that is totally ramified in Z[theta] (one prime above p, of
residue degree 1) the valuation at that prime is nu_p of the norm.  This
relies on p not dividing the index of Z[theta] in the maximal order, which
``validate_ramified`` spot-checks against a division-based valuation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from padicval.poly import IntPoly, bareiss_det, factor_mod_p, is_irreducible_mod_p
from padicval.sequence import (
    Outcome,
    SequenceAnalysis,
    analyze,
    fundamental_period,
)
from padicval.valuation import INFINITE, Valuation, check_prime, nu_int


class RamificationError(ValueError):
    """The prime/uniformizer pair does not pass validation."""


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out += [d, n // d]
    return out


@dataclass(frozen=True)
class MonogenicRing:
    defining_poly: IntPoly

    def __post_init__(self):
        f = self.defining_poly
        if f.degree < 1 or not f.is_monic():
            raise ValueError(f"defining polynomial {f} must be monic of degree >= 1")
        if f.degree <= 3:
            c0 = f.coeffs[0]
            if f.degree > 1 and (c0 == 0 or any(f(s * d) == 0 for d in _divisors(c0) for s in (1, -1))):
                raise ValueError(f"{f} has a rational root")
        elif not any(is_irreducible_mod_p(f, q) for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)):
            raise ValueError(f"could not certify that {f} is irreducible over Q")

    @property
    def degree(self) -> int:
        return self.defining_poly.degree

    def element(self, coords: Sequence[int]) -> "RingElement":
        coords = list(coords)
        if len(coords) > self.degree:
            raise ValueError(f"expected at most {self.degree} coordinates, got {len(coords)}")
        return RingElement(self, tuple(coords + [0] * (self.degree - len(coords))))

    def from_int(self, n: int) -> "RingElement":
        return self.element([n])

    @property
    def theta(self) -> "RingElement":
        return self.element([0, 1]) if self.degree > 1 else self.from_int(-self.defining_poly.coeffs[0])

    def reduce(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        """Reduce a coefficient list modulo the (monic) defining polynomial."""
        f = self.defining_poly.coeffs
        m = self.degree
        c = list(coeffs)
        for i in range(len(c) - 1, m - 1, -1):
            t = c[i]
            if t:
                for j in range(m):
                    c[i - m + j] -= t * f[j]
            c[i] = 0
        c = c[:m] + [0] * (m - len(c))
        return tuple(c)

    def mul(self, s: "RingElement", t: "RingElement") -> "RingElement":
        prod = [0] * (2 * self.degree - 1)
        for i, a in enumerate(s.coords):
            if a:
                for j, b in enumerate(t.coords):
                    prod[i + j] += a * b
        return RingElement(self, self.reduce(prod))

    def mult_matrix(self, s: "RingElement") -> list[list[int]]:
        """Matrix of y -> s y; column i holds the coordinates of s theta^i."""
        cols = []
        basis = self.element([1])
        for _ in range(self.degree):
            cols.append((s * basis).coords)
            basis = basis * self.theta
        return [[cols[j][i] for j in range(self.degree)] for i in range(self.degree)]

    def norm(self, s: "RingElement") -> int:
        return bareiss_det(self.mult_matrix(s))

    def adjugate(self, s: "RingElement") -> "RingElement":
        """The element N(s)/s, which lies in Z[theta]."""
        n = self.norm(s)
        if n == 0:
            raise ZeroDivisionError("zero has no adjugate")
        inv = _solve(self.mult_matrix(s), [1] + [0] * (self.degree - 1))
        coords = [x * n for x in inv]
        assert all(c.denominator == 1 for c in coords)
        return RingElement(self, tuple(int(c) for c in coords))

    def exact_div(self, a: "RingElement", b: "RingElement") -> "RingElement":
        n = self.norm(b)
        c = (a * self.adjugate(b)).coords
        if any(x % n for x in c):
            raise ArithmeticError(f"{b} does not divide {a} in Z[theta]")
        return RingElement(self, tuple(x // n for x in c))


def _solve(A: list[list[int]], b: list[int]) -> list[Fraction]:
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col] / M[col][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[i][n] / M[i][i] for i in range(n)]


@dataclass(frozen=True)
class RingElement:
    ring: MonogenicRing = field(repr=False)
    coords: tuple[int, ...]

    def _lift(self, other) -> "RingElement":
        if isinstance(other, int):
            return self.ring.from_int(other)
        if other.ring != self.ring:
            raise ValueError("elements of different rings")
        return other

    def __add__(self, other):
        other = self._lift(other)
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        return self.ring.mul(self, self._lift(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = self.ring.from_int(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def norm(self) -> int:
        return self.ring.norm(self)


def ring_mul(r: MonogenicRing, s: RingElement, t: RingElement) -> RingElement:
    return r.mul(s, t)


def norm(r: MonogenicRing, s: RingElement) -> int:
    return r.norm(s)


# ---------------------------------------------------------------------------
# totally ramified primes


@dataclass(frozen=True)
class RamifiedPrime:
    ring: MonogenicRing
    p: int
    pi: RingElement
    e: int
    root_mod_p: int

    @property
    def residue_char(self) -> int:
        return self.p


def nu_pi(rp: RamifiedPrime, s: RingElement) -> Valuation:
    """Valuation at the prime above p, read off the norm."""
    return nu_int(rp.p, rp.ring.norm(s))


def nu_pi_by_division(rp: RamifiedPrime, s: RingElement, limit: int = 64) -> Valuation:
    """Valuation by repeatedly dividing by pi, independent of the norm formula.

    With pi' = N(pi)/pi and N(pi) = p w, w prime to p, the element s is
    divisible by pi exactly when every coordinate of s pi' is divisible by p.
    Returns ``limit`` if that many divisions succeed.
    """
    if s.is_zero():
        return INFINITE
    adj = rp.ring.adjugate(rp.pi)
    v = 0
    while v < limit:
        t = s * adj
        if any(c % rp.p for c in t.coords):
            return v
        s = RingElement(rp.ring, tuple(c // rp.p for c in t.coords))
        v += 1
    return v


def validate_ramified(r: MonogenicRing, p: int, pi: RingElement) -> RamifiedPrime:
    """Accept (p, pi) iff f = (x - a)^m mod p and nu_p(N(pi)) = 1."""
    check_prime(p)
    fac = factor_mod_p(r.defining_poly, p)
    if not (len(fac.factors) == 1 and fac.factors[0][0].degree == 1):
        raise RamificationError(
            f"{p} is not totally ramified: {r.defining_poly} mod {p} is not a power of a linear factor"
        )
    a = -fac.factors[0][0].coeffs[0] % p
    if nu_int(p, r.norm(pi)) != 1:
        raise RamificationError(
            f"{list(pi.coords)} is not a uniformizer: nu_{p}(N(pi)) = {nu_int(p, r.norm(pi))}, expected 1"
        )
    rp = RamifiedPrime(r, p, pi, r.degree, a)
    # index assumption: both valuations must agree on a few sample elements
    samples = [r.from_int(p), pi, r.theta, r.theta - a, r.from_int(1) + pi, pi * pi + r.from_int(p)]
    for s in samples:
        if s.is_zero():
            continue
        if nu_pi(rp, s) != nu_pi_by_division(rp, s):
            raise RamificationError(
                f"norm valuation disagrees with division at {list(s.coords)}; "
                f"{p} may divide the index of Z[theta]"
            )
    return rp


# ---------------------------------------------------------------------------
# polynomials over Z[theta]


def ring_poly(r: MonogenicRing, coeffs: Sequence) -> tuple[RingElement, ...]:
    """Build a polynomial from coefficient vectors (or plain ints), low degree first."""
    out = []
    for c in coeffs:
        out.append(r.from_int(c) if isinstance(c, int) else c if isinstance(c, RingElement) else r.element(c))
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


def ring_eval(Q: Sequence[RingElement], x) -> RingElement:
    acc = Q[-1].ring.from_int(0)
    for c in reversed(Q):
        acc = acc * x + c
    return acc


def ring_derivative(Q: Sequence[RingElement]) -> tuple[RingElement, ...]:
    return tuple(c * i for i, c in enumerate(Q) if i)


def ring_discriminant(Q: Sequence[RingElement]) -> RingElement:
    """disc Q = (-1)^(d(d-1)/2) Res(Q, Q') for monic Q, by Bareiss elimination over Z[theta]."""
    r = Q[0].ring
    d = len(Q) - 1
    if d == 1:
        return r.from_int(1)
    dQ = ring_derivative(Q)
    a_hi, b_hi = list(reversed(Q)), list(reversed(dQ))
    size = 2 * d - 1
    zero = r.from_int(0)
    rows = [[zero] * i + a_hi + [zero] * (size - d - 1 - i) for i in range(d - 1)]
    rows += [[zero] * i + b_hi + [zero] * (size - d - i) for i in range(d)]
    m = rows
    prev = r.from_int(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    for k in range(size - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, size):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = r.exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    return m[size - 1][size - 1] * sign


def norm_poly(Q: Sequence[RingElement]) -> IntPoly:
    """The integer polynomial x -> N(Q(x)), by interpolation at 0..deg."""
    r = Q[0].ring
    D = (len(Q) - 1) * r.degree
    vals = [r.norm(ring_eval(Q, r.from_int(n))) for n in range(D + 1)]
    # forward differences give the binomial-basis coefficients
    diffs = []
    row = vals
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    coeffs = [Fraction(0)] * (D + 1)
    falling = [Fraction(1)]  # x(x-1)...(x-k+1), low to high
    fact = 1
    for k, dk in enumerate(diffs):
        if k:
            fact *= k
        for i, c in enumerate(falling):
            coeffs[i] += dk * c / fact
        nxt = [Fraction(0)] * (len(falling) + 1)
        for i, c in enumerate(falling):
            nxt[i + 1] += c
            nxt[i] -= k * c
        falling = nxt
    assert all(c.denominator == 1 for c in coeffs)
    return IntPoly(int(c) for c in coeffs)


@dataclass(frozen=True)
class PiProfile:
    """Closed form of nu_pi(Q(n)) around n0 with beta = floor(alpha/d).

    Over the integers, n = n0 mod pi^j means e nu_p(n - n0) >= j, and
    nu_pi(n - n0) = e nu_p(n - n0).
    """

    n0: int
    alpha: int
    degree: int
    e: int
    p: int

    @property
    def beta(self) -> int:
        return self.alpha // self.degree

    def value(self, n: int) -> int:
        v = self.e * nu_int(self.p, n - self.n0)
        return self.alpha if v >= self.beta + 1 else self.degree * v


@dataclass
class RingRootReport:
    # certified disks (center digits, radius); one root of Q in the completion each
    roots: list[tuple[tuple[int, ...], int]]
    alpha: Valuation
    depth_cap: int
    disc_valuation: Valuation
    deepest: list[tuple[int, ...]] = field(default_factory=list)


def _digits_to_element(rp: RamifiedPrime, digits: Sequence[int]) -> RingElement:
    acc = rp.ring.from_int(0)
    pw = rp.ring.from_int(1)
    for c in digits:
        if c:
            acc = acc + pw * c
        pw = pw * rp.pi
    return acc


def _agree(a: tuple[int, ...], b: tuple[int, ...], k: int) -> bool:
    """Whether two digit expansions (zero beyond their length) agree mod pi^k."""
    pad = lambda t: t[:k] + (0,) * max(0, k - len(t))
    return pad(a) == pad(b)


def ring_root_search(rp: RamifiedPrime, Q: Sequence[RingElement], node_budget: int = 200_000) -> RingRootReport:
    """Breadth-first search for roots of monic Q in the completion at pi.

    Level j holds the classes r mod pi^j (digit prefixes of length j in the
    expansion sum c_i pi^i, 0 <= c_i < p) with nu_pi(Q(r)) >= j.  Nodes
    certify as in the rational search, via nu(Q(r)) > 2 nu(Q'(r)), and the
    depth is capped at 2 nu_pi(disc Q) + 1.
    """
    disc = ring_discriminant(Q)
    if disc.is_zero():
        raise ValueError("polynomial is not squarefree")
    delta = nu_pi(rp, disc)
    cap = 2 * delta + 1
    dQ = ring_derivative(Q)
    p = rp.p
    disks: list[tuple[tuple[int, ...], int]] = []
    frontier: list[tuple[tuple[int, ...], RingElement]] = [((), rp.ring.from_int(0))]
    pi_pow = rp.ring.from_int(1)
    j = 0
    seen = 0
    last_level, last_nodes = 0, [()]
    while frontier:
        last_level, last_nodes = j, [d for d, _ in frontier]
        survivors = []
        for digs, x in frontier:
            if any(rad <= j and _agree(digs, c, rad) for c, rad in disks):
                continue
            vf, vd = nu_pi(rp, ring_eval(Q, x)), nu_pi(rp, ring_eval(dQ, x))
            if vf > 2 * vd:
                rad = vd + 1
                # certified disks are nested or disjoint, each holding one root
                if not any(_agree(digs, c, min(rad, r2)) for c, r2 in disks):
                    disks.append((digs, rad))
                if rad <= j:
                    continue
            else:
                assert j <= 2 * delta, "depth cap violated"
            survivors.append((digs, x))
        nxt = []
        for digs, x in survivors:
            for c in range(p):
                y = x + pi_pow * c if c else x
                if nu_pi(rp, ring_eval(Q, y)) >= j + 1:
                    nxt.append((digs + (c,), y))
        seen += len(nxt)
        if seen > node_budget:
            raise RuntimeError("ring root search exceeded its node budget")
        frontier = nxt
        pi_pow = pi_pow * rp.pi
        j += 1
    if disks:
        return RingRootReport(disks, INFINITE, cap, delta)
    return RingRootReport([], last_level, cap, delta, sorted(last_nodes))


@dataclass
class RingAnalysis:
    p: int
    e: int
    degree: int
    domain: str
    outcome: Outcome
    alpha: Valuation = INFINITE
    beta: int | None = None
    period_length: int | None = None
    fundamental_period: list[int] | None = None
    n0: object = None
    profile: PiProfile | None = None
    case_map: list[dict] | None = None
    rational: SequenceAnalysis | None = None
    norm_polynomial: IntPoly | None = None
    completion_roots: list = field(default_factory=list)
    irreducible_over_completion: bool | None = None


def _check_monic(Q: Sequence[RingElement]) -> None:
    if len(Q) < 2:
        raise ValueError("need a polynomial of degree >= 1")
    lead = Q[-1].coords
    if lead[0] != 1 or any(lead[1:]):
        raise ValueError("polynomial over the ring must be monic")


def ring_analyze(rp: RamifiedPrime, Q: Sequence[RingElement], domain: str = "Z") -> RingAnalysis:
    """Valuations nu_pi(Q(n)) for n in Z (``domain="Z"``) or in Z[theta] (``"ring"``).

    Over Z the report carries the period length and fundamental period; over
    Z[theta] it carries the case map on residue classes mod pi^(beta+1),
    since a period is not meaningful there.
    """
    if domain not in ("Z", "ring"):
        raise ValueError("domain must be 'Z' or 'ring'")
    Q = tuple(Q)
    _check_monic(Q)
    d = len(Q) - 1
    p, e = rp.p, rp.e
    search = ring_root_search(rp, Q)
    irreducible = None if d > 3 else not search.roots

    if domain == "ring":
        out = RingAnalysis(p, e, d, "ring", Outcome.PERIODIC, irreducible_over_completion=irreducible)
        if search.roots:
            out.outcome = Outcome.UNBOUNDED
            out.completion_roots = search.roots
            return out
        alpha = search.alpha
        out.alpha = alpha
        out.beta = alpha // d
        out.n0 = min(search.deepest)
        n0 = _digits_to_element(rp, out.n0)
        depth = out.beta + 1 if irreducible else alpha + 1
        cases = []
        for digs in itertools.product(range(p), repeat=depth):
            x = _digits_to_element(rp, digs)
            direct = nu_pi(rp, ring_eval(Q, x))
            entry = {"digits": list(digs), "value": direct}
            if irreducible:
                v = nu_pi_by_division(rp, x - n0, limit=depth)
                formula = alpha if v >= depth else d * v
                if formula != direct:
                    raise AssertionError(f"closed form fails at {digs}: {formula} vs {direct}")
            cases.append(entry)
        out.case_map = cases
        return out

    # domain Z
    if all(c.is_rational() for c in Q):
        Qz = IntPoly(c.coords[0] for c in Q)
        rat = analyze(Qz, p)
        out = RingAnalysis(p, e, d, "Z", rat.outcome, rational=rat, irreducible_over_completion=irreducible)
        if not rat.periodic:
            out.completion_roots = rat.roots
            return out
        out.alpha = e * rat.alpha
        out.period_length = rat.period_length
        if rat.period_source == "closed-form":
            assert out.period_length == p ** math.ceil(out.alpha / (e * d))
        base = fundamental_period(rat)
        out.fundamental_period = [e * v for v in base]
        out.n0 = min(rat.search.deepest_residues)
    else:
        NQ = norm_poly(Q)
        rat = analyze(NQ, p)
        out = RingAnalysis(p, e, d, "Z", rat.outcome, rational=rat, norm_polynomial=NQ,
                           irreducible_over_completion=irreducible)
        if not rat.periodic:
            out.completion_roots = rat.roots
            return out
        out.alpha = rat.alpha
        out.fundamental_period = fundamental_period(rat)
        out.period_length = rat.period_length
        out.n0 = min(rat.search.deepest_residues)

    out.beta = out.alpha // d
    direct = [nu_pi(rp, ring_eval(Q, rp.ring.from_int(n))) for n in range(out.period_length)]
    if direct != out.fundamental_period:
        raise AssertionError(f"pi-adic values disagree with the reduction: {direct} vs {out.fundamental_period}")
    if irreducible:
        prof = PiProfile(out.n0, out.alpha, d, e, p)
        if [prof.value(n) for n in range(out.period_length)] != direct:
            raise AssertionError("closed form over Z disagrees with direct valuations")
        out.profile = prof
    return out

