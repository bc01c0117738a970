"""The valuation sequence n -> nu_p(Q(n)): periodicity, period length, closed form.

``analyze`` decides between a bounded periodic sequence and an unbounded one
by searching for roots of Q in Z_p.  In the periodic case the period length
is p^ceil(alpha/d) and the values follow a two-case closed form around a
deepest approximate root n0, provided Q is certified irreducible over Z_p.
Reducible inputs are split with a lifted mod-p factorization and the factor
sequences are added; if no split is available the period is read off the
brute-force oracle over a window of p^(alpha+1) values, which always
contains a full period.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple

from padicval import kernels
from padicval.hensel import LiftedRoot, RootSearchReport, lift_factorization, zp_root_search
from padicval.irreducibility import (
    CriterionVerdict,
    Status,
    dumas,
    eisenstein,
    hensel_reducible,
)
from padicval.poly import IntPoly
from padicval.valuation import INFINITE, Valuation, check_prime, nu_int

DEFAULT_ROOT_PRECISION = 8


class Outcome(str, enum.Enum):
    PERIODIC = "PERIODIC"
    UNBOUNDED = "UNBOUNDED"


@dataclass(frozen=True)
class ValuationProfile:
    """Closed form of nu_p(Q(n)) for monic Q irreducible over Z_p.

    ``alpha`` refers to the monic part; ``shift`` is the p-content that was
    stripped off and is added back to every value.
    """

    n0: int
    alpha: int
    degree: int
    prime: int
    shift: int = 0

    @property
    def beta(self) -> int:
        return self.alpha // self.degree

    def value(self, n: int) -> int:
        p = self.prime
        if (n - self.n0) % p ** (self.beta + 1) == 0:
            return self.alpha + self.shift
        return self.degree * nu_int(p, n - self.n0) + self.shift

    def cases(self) -> list[dict]:
        """One entry per exact depth nu(n - n0) = j below beta + 1, then the top class."""
        p = self.prime
        out = []
        for j in range(self.beta + 1):
            out.append({
                "congruent_mod": p**j,
                "not_congruent_mod": p ** (j + 1),
                "residue": self.n0 % p ** (j + 1),
                "value": self.degree * j + self.shift,
            })
        out.append({
            "congruent_mod": p ** (self.beta + 1),
            "not_congruent_mod": None,
            "residue": self.n0 % p ** (self.beta + 1),
            "value": self.alpha + self.shift,
        })
        return out


@dataclass
class SequenceAnalysis:
    prime: int
    poly: IntPoly
    outcome: Outcome
    degree: int
    alpha: Valuation = INFINITE
    period_length: int | None = None
    profile: ValuationProfile | None = None
    roots: list[LiftedRoot] = field(default_factory=list)
    shift: int = 0
    # how irreducibility was settled: a criterion name, "no-roots", "reducible" or "unknown"
    irreducibility: str = "unknown"
    # "closed-form", "factors" or "oracle"
    period_source: str | None = None
    verdicts: dict[str, CriterionVerdict] = field(default_factory=dict)
    factors: list["SequenceAnalysis"] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)
    search: RootSearchReport | None = None

    @property
    def periodic(self) -> bool:
        return self.outcome is Outcome.PERIODIC


class OracleScan(NamedTuple):
    values: list[Valuation]
    period: int | None


class QuadP2(NamedTuple):
    periodic: bool
    mu: int
    c: int
    degenerate: bool = False


class QuadOdd(NamedTuple):
    periodic: bool
    k: Valuation
    period: int | None
    degenerate: bool = False


def _word_cap(p: int) -> int:
    cap = 1
    while p ** (cap + 1) < kernels.WORD_LIMIT:
        cap += 1
    return cap


def oracle_values(Q: IntPoly, p: int, count: int, start: int = 0) -> list[Valuation]:
    """Direct nu_p(Q(n)) for n in [start, start + count).

    The bulk scan runs mod a word-sized power of p; anything that reaches
    the cap is recomputed exactly.
    """
    check_prime(p)
    if count <= 0:
        return []
    if Q.is_zero():
        return [INFINITE] * count
    cap = _word_cap(p)
    vals: list[Valuation] = kernels.valuation_scan(Q.coeffs, p, cap, start, count)
    for i, v in enumerate(vals):
        if v >= cap:
            vals[i] = nu_int(p, Q(start + i))
    return vals


def minimal_period(values) -> int | None:
    """Smallest L <= len/2 with values[i] == values[i + L] across the window."""
    n = len(values)
    for L in range(1, n // 2 + 1):
        if all(values[i] == values[i + L] for i in range(n - L)):
            return L
    return None


def has_period(values, L: int) -> bool:
    return all(values[i] == values[i + L] for i in range(len(values) - L))


def oracle_valuations(Q: IntPoly, p: int, N: int) -> OracleScan:
    vals = oracle_values(Q, p, N)
    return OracleScan(vals, minimal_period(vals))


def _p_power_period(values, p: int) -> int:
    """Least p^i that is a period of ``values`` (whose length is a multiple of it)."""
    L = 1
    while not has_period(values, L):
        L *= p
        if L >= len(values):
            return L
    return L


def _strip_content(Q: IntPoly, p: int) -> tuple[IntPoly, int]:
    m = min(nu_int(p, c) for c in Q.coeffs if c)
    if m:
        Q = IntPoly(c // p**m for c in Q.coeffs)
    return Q, m


def analyze(Q: IntPoly, p: int, precision: int | None = None) -> SequenceAnalysis:
    """Decide periodicity of nu_p(Q(n)) and compute its period and closed form.

    The p-content of Q is stripped first (it only shifts every value); what
    remains must be monic and squarefree.
    """
    check_prime(p)
    if Q.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    Q1, shift = _strip_content(Q, p)
    if not Q1.is_monic():
        raise ValueError(f"{Q} is not monic after removing its {p}-content")
    d = Q1.degree

    report = zp_root_search(Q1, p, precision or DEFAULT_ROOT_PRECISION)
    if report.has_roots:
        want = precision or max(DEFAULT_ROOT_PRECISION, report.search_depth_used + 2)
        if want != (precision or DEFAULT_ROOT_PRECISION):
            report = zp_root_search(Q1, p, want)
        return SequenceAnalysis(
            p, Q, Outcome.UNBOUNDED, d, roots=report.roots, shift=shift,
            irreducibility="reducible" if d > 1 else "degree-1", search=report,
        )

    alpha1 = report.alpha
    n0 = min(report.deepest_residues)
    out = SequenceAnalysis(
        p, Q, Outcome.PERIODIC, d, alpha=alpha1 + shift, shift=shift, search=report
    )
    out.verdicts = {
        "eisenstein": eisenstein(Q1, p),
        "dumas": dumas(Q1, p),
        "hensel": hensel_reducible(Q1, p),
    }
    closed_form_period = p ** math.ceil(alpha1 / d)

    if out.verdicts["eisenstein"].status is Status.IRREDUCIBLE:
        out.irreducibility = "eisenstein"
    elif out.verdicts["dumas"].status is Status.IRREDUCIBLE:
        out.irreducibility = "dumas"
    elif d <= 3:
        # a reducible polynomial of degree <= 3 has a linear factor, i.e. a root
        out.irreducibility = "no-roots"

    if out.irreducibility != "unknown":
        out.period_length = closed_form_period
        out.period_source = "closed-form"
        out.profile = ValuationProfile(n0, alpha1, d, p, shift)
        return out

    # Irreducibility not certified: the closed form may not apply.  Check the
    # period the closed form would force against the oracle; a mismatch proves
    # reducibility.
    window = oracle_values(Q1, p, p ** max(alpha1, 1))
    observed = _p_power_period(window, p)
    out.evidence = {
        "period_if_irreducible": closed_form_period,
        "oracle_window": len(window),
        "oracle_period": observed,
        "contradiction": observed != closed_form_period,
    }
    if out.evidence["contradiction"]:
        out.irreducibility = "reducible"

    split = out.verdicts["hensel"]
    if split.status is Status.REDUCIBLE:
        out.irreducibility = "reducible"
        K = alpha1 + 2
        g, h = lift_factorization(Q1, p, split.witness["g0"], split.witness["h0"], K)
        out.evidence["lift_exponent"] = K
        out.evidence["lifted_factors"] = [g, h]
        parts = [analyze(f.lift(), p) for f in (g, h)]
        if any(not a.periodic for a in parts):
            raise AssertionError("a factor of a root-free polynomial has a root")
        out.factors = parts
        L = max(a.period_length for a in parts)
        total = [sum(vals) for vals in zip(*(fundamental_period(a, L) for a in parts))]
        out.period_length = _p_power_period(total, p)
        out.period_source = "factors"
        return out

    big = oracle_values(Q1, p, 2 * p ** (alpha1 + 1))
    out.period_length = _p_power_period(big, p)
    out.period_source = "oracle"
    return out


def profile_value(profile: ValuationProfile, n: int) -> int:
    return profile.value(n)


def fundamental_period(analysis: SequenceAnalysis, length: int | None = None) -> list[int]:
    """The first ``period_length`` valuations (or ``length`` of them), cross-checked
    against direct evaluation."""
    if not analysis.periodic:
        raise ValueError("the sequence is unbounded and has no period")
    L = length or analysis.period_length
    p = analysis.prime
    direct = oracle_values(analysis.poly, p, L)
    if analysis.profile is not None:
        vals = [analysis.profile.value(n) for n in range(L)]
    elif analysis.factors:
        parts = [fundamental_period(a, L) for a in analysis.factors]
        vals = [sum(v) + analysis.shift for v in zip(*parts)]
    else:
        vals = direct
    if vals != direct:
        raise AssertionError(f"closed form disagrees with direct evaluation: {vals} vs {direct}")
    return vals


# ---------------------------------------------------------------------------
# quadratics x^2 - a


def quad_p2_classify(a: int) -> QuadP2:
    """Write a = 4^mu c with c != 0 mod 4; x^2 - a is periodic at 2 iff c != 1 mod 8."""
    if a == 0:
        return QuadP2(False, 0, 0, degenerate=True)
    mu, c = 0, a
    while c % 4 == 0:
        c //= 4
        mu += 1
    return QuadP2(c % 8 != 1, mu, c)


def quad_odd_classify(p: int, a: int) -> QuadOdd:
    """x^2 - a at an odd prime: periodic iff nu_p(a) is odd or a/p^k is a non-residue."""
    check_prime(p)
    if p == 2:
        raise ValueError("use quad_p2_classify for p = 2")
    if a == 0:
        return QuadOdd(False, INFINITE, None, degenerate=True)
    k = nu_int(p, a)
    u = a // p**k
    residue = pow(u % p, (p - 1) // 2, p) == 1
    periodic = k % 2 == 1 or not residue
    return QuadOdd(periodic, k, p ** math.ceil(k / 2) if periodic else None)


def three_squares(b: int) -> bool:
    """True iff b >= 1 is a sum of three squares, i.e. b is not 4^a (8m + 7)."""
    if b < 1:
        raise ValueError("b must be positive")
    while b % 4 == 0:
        b //= 4
    return b % 8 != 7
