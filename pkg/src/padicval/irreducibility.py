"""Irreducibility and reducibility criteria over Z_p.

``eisenstein`` and ``dumas`` can only certify irreducibility, and
``hensel_reducible`` can only certify reducibility; everything else is
reported as INCONCLUSIVE.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any

from padicval.poly import IntPoly, ModPoly, factor_mod_p, gcd_mod_p
from padicval.valuation import INFINITE, check_prime, nu_int


class Status(str, enum.Enum):
    IRREDUCIBLE = "IRREDUCIBLE"
    REDUCIBLE = "REDUCIBLE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class CriterionVerdict:
    status: Status
    criterion: str
    witness: dict[str, Any] | None = field(default=None)

    def __post_init__(self):
        if (self.witness is None) != (self.status is Status.INCONCLUSIVE):
            raise ValueError("witness must be present exactly when the verdict is conclusive")

    @property
    def conclusive(self) -> bool:
        return self.status is not Status.INCONCLUSIVE

    def to_json(self) -> dict:
        out = {"criterion": self.criterion, "status": self.status.value}
        if self.witness is not None:
            out["witness"] = {k: (str(v) if isinstance(v, (IntPoly, ModPoly)) else v)
                              for k, v in self.witness.items()}
        return out


def _inconclusive(name: str) -> CriterionVerdict:
    return CriterionVerdict(Status.INCONCLUSIVE, name)


def eisenstein(Q: IntPoly, p: int) -> CriterionVerdict:
    check_prime(p)
    if Q.degree < 1:
        raise ValueError("eisenstein needs degree >= 1")
    c = Q.coeffs
    if nu_int(p, c[-1]) != 0:
        return _inconclusive("eisenstein")
    if any(nu_int(p, a) == 0 for a in c[:-1]):
        return _inconclusive("eisenstein")
    if nu_int(p, c[0]) != 1:
        return _inconclusive("eisenstein")
    return CriterionVerdict(Status.IRREDUCIBLE, "eisenstein", {"nu_constant": 1})


def dumas(Q: IntPoly, p: int) -> CriterionVerdict:
    """Dumas' criterion, read off the coefficient valuations high to low.

    Writing the leading coefficient as index 0 and the constant term as
    index n, it needs nu(a_0) = 0, nu(a_i)/i > nu(a_n)/n for 0 < i < n and
    gcd(nu(a_n), n) = 1.  Zero coefficients sit at infinity and satisfy the
    middle inequality.
    """
    check_prime(p)
    n = Q.degree
    if n < 1:
        raise ValueError("dumas needs degree >= 1")
    vals = [nu_int(p, a) for a in reversed(Q.coeffs)]
    if vals[0] != 0 or vals[n] is INFINITE:
        return _inconclusive("dumas")
    vn = vals[n]
    for i in range(1, n):
        if vals[i] is not INFINITE and not vals[i] * n > vn * i:
            return _inconclusive("dumas")
    if math.gcd(vn, n) != 1:
        return _inconclusive("dumas")
    return CriterionVerdict(
        Status.IRREDUCIBLE,
        "dumas",
        {"valuations_high_to_low": ["inf" if v is INFINITE else v for v in vals]},
    )


def hensel_reducible(Q: IntPoly, p: int) -> CriterionVerdict:
    """Look for a coprime split of ``Q mod p`` into two non-constant factors.

    When several distinct irreducibles occur, the first factor ``g0`` is the
    full power of one irreducible (the one whose power has the smallest
    coefficient list) and ``h0`` is the cofactor, carrying the leading unit.
    """
    check_prime(p)
    if Q.degree < 2:
        raise ValueError("hensel_reducible needs degree >= 2")
    if Q.lead % p == 0:
        raise ValueError(f"leading coefficient of {Q} vanishes mod {p}")
    fac = factor_mod_p(Q, p)
    if len(fac.factors) < 2:
        return _inconclusive("hensel")
    powers = []
    for f, e in fac.factors:
        acc = ModPoly(p, 1, [1])
        for _ in range(e):
            acc = acc * f
        powers.append(acc)
    i0 = min(range(len(powers)), key=lambda i: powers[i].coeffs)
    g0 = powers[i0]
    h0 = ModPoly(p, 1, [fac.unit])
    for i, f in enumerate(powers):
        if i != i0:
            h0 = h0 * f
    assert gcd_mod_p(g0, h0).coeffs == (1,)
    return CriterionVerdict(Status.REDUCIBLE, "hensel", {"g0": g0, "h0": h0})
