"""Hensel lifting of roots and factorizations, and a complete Z_p root search."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator

from padicval import kernels
from padicval.poly import (
    IntPoly,
    ModPoly,
    _fp_divmod,
    _fp_mul,
    _fp_sub,
    bezout_mod_p,
    derivative,
    discriminant,
)
from padicval.valuation import INFINITE, PAdicInt, Valuation, check_prime, nu_int


class HenselError(ValueError):
    """A lifting precondition does not hold."""


@dataclass(frozen=True)
class LiftedRoot:
    root: PAdicInt
    start: int
    nu_f: Valuation
    nu_df: Valuation
    possibly_unresolved: bool = False

    @property
    def certificate(self) -> tuple[int, Valuation, Valuation]:
        return (self.start, self.nu_f, self.nu_df)

    @property
    def residue(self) -> int:
        return self.root.residue

    def digits(self) -> list[int]:
        return self.root.digits()


@dataclass(frozen=True)
class RootSearchReport:
    roots: list[LiftedRoot]
    alpha: Valuation
    search_depth_used: int
    disc_valuation: Valuation
    # every residue mod p^alpha with Q = 0 mod p^alpha; empty when roots exist
    deepest_residues: list[int] = field(default_factory=list)

    def __post_init__(self):
        if bool(self.roots) == (self.alpha is not INFINITE):
            raise ValueError("exactly one of {roots, finite alpha} must hold")

    @property
    def has_roots(self) -> bool:
        return bool(self.roots)


def _newton(Q: IntPoly, dQ: IntPoly, p: int, a: int, v: int, k: int) -> int:
    """Newton iteration from ``a`` where nu(Q'(a)) = v and nu(Q(a)) > 2v.

    Each step divides out p^v from both Q(a) and Q'(a) and subtracts the
    quotient; the excess nu(Q(a)) - 2v doubles every step.  Stops once
    nu(Q(a)) >= k + v, which pins the root to k digits.
    """
    target = k + v
    M = p**target
    pv = p**v
    a %= M
    while True:
        fa = Q(a)
        if fa % M == 0:
            return a % p**k
        da = dQ(a)
        u, r = divmod(da, pv)
        assert r == 0 and u % p, "nu(Q'(a)) drifted during Newton iteration"
        a = (a - (fa // pv) * pow(u, -1, M)) % M


def lift_simple_root(Q: IntPoly, p: int, a: int, precision: int) -> LiftedRoot:
    check_prime(p)
    a %= p
    fa, da = Q(a), derivative(Q)(a)
    if fa % p:
        raise HenselError(f"Q({a}) = {fa} is not 0 mod {p}")
    if da % p == 0:
        raise HenselError(f"Q'({a}) = {da} is 0 mod {p}; the root is not simple")
    r = _newton(Q, derivative(Q), p, a, 0, precision)
    return LiftedRoot(PAdicInt(p, precision, r), a, nu_int(p, fa), 0)


def lift_strong_root(Q: IntPoly, p: int, a: int, precision: int) -> LiftedRoot:
    """Lift ``a`` when nu(Q(a)) > 2 nu(Q'(a)); the root agrees with a mod p^(nu(Q'(a))+1)."""
    check_prime(p)
    dQ = derivative(Q)
    vf, vd = nu_int(p, Q(a)), nu_int(p, dQ(a))
    if vd is INFINITE or not vf > 2 * vd:
        raise HenselError(
            f"strong Hensel condition fails at {a}: nu(Q(a)) = {vf}, nu(Q'(a)) = {vd}"
        )
    r = _newton(Q, dQ, p, a, vd, max(precision, vd + 1))
    assert (r - a) % p ** (vd + 1) == 0
    return LiftedRoot(PAdicInt(p, precision, r), a, vf, vd)


def _require_monic_squarefree(Q: IntPoly) -> int:
    if Q.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    if not Q.is_monic():
        raise ValueError(f"{Q} is not monic")
    disc = discriminant(Q)
    if disc == 0:
        raise ValueError(f"{Q} is not squarefree; divide out gcd(Q, Q') first")
    return disc


def zp_root_search(Q: IntPoly, p: int, precision: int) -> RootSearchReport:
    """Find every root of a monic squarefree ``Q`` in Z_p.

    Level j of the search holds the residues a mod p^j with Q(a) = 0 mod p^j.
    A node is certified once nu(Q(a)) > 2 nu(Q'(a)) =: 2v; the disk
    a + p^(v+1) Z_p then contains exactly one root, which is lifted, and
    every node whose class lies inside a known disk is dropped.  Past depth
    2 nu(disc) every node is certifiable, so the search always terminates.
    """
    check_prime(p)
    disc = _require_monic_squarefree(Q)
    delta = nu_int(p, disc)
    cap = 2 * delta + 1
    dQ = derivative(Q)
    work = max(precision, cap)

    disks: list[tuple[int, int]] = []  # (root mod p^work, radius)
    found: list[LiftedRoot] = []
    frontier = [0]
    j = 0
    last_level, last_nodes = 0, [0]
    while frontier:
        last_level, last_nodes = j, frontier
        survivors = []
        for a in frontier:
            if any(rad <= j and (a - r) % p**rad == 0 for r, rad in disks):
                continue
            vf, vd = nu_int(p, Q(a)), nu_int(p, dQ(a))
            if vf > 2 * vd:
                rad = vd + 1
                if not any((a - r) % p**rad == 0 for r, _ in disks):
                    r = _newton(Q, dQ, p, a, vd, work)
                    disks.append((r, rad))
                    found.append(LiftedRoot(PAdicInt(p, precision, r), a, vf, vd))
                if rad <= j:
                    continue
            else:
                assert j <= 2 * delta, "depth cap violated: uncertifiable node past 2 nu(disc)"
            survivors.append(a)
        frontier = kernels.lift_level(Q.coeffs, p, j, survivors)
        j += 1

    if not found:
        return RootSearchReport([], last_level, last_level, delta, sorted(last_nodes))
    found.sort(key=lambda r: r.residue)
    for i in range(len(found) - 1):
        if found[i].residue == found[i + 1].residue:
            found[i] = replace(found[i], possibly_unresolved=True)
            found[i + 1] = replace(found[i + 1], possibly_unresolved=True)
    return RootSearchReport(found, INFINITE, j - 1, delta)


# ---------------------------------------------------------------------------
# factorization lifting


def lift_factorization_steps(
    Q: IntPoly, p: int, g0: ModPoly, h0: ModPoly, k: int
) -> Iterator[tuple[int, IntPoly, IntPoly]]:
    """Yield ``(j, g, h)`` with ``g h = Q mod p^j`` for j = 1, ..., k.

    One p-adic digit per step: with s g0 + t h0 = 1 over F_p and
    e = (Q - g h) / p^j, the corrections are dg = t e mod g0 and
    dh = (e - dg h0) / g0.
    """
    check_prime(p)
    if g0.modulus_exp != 1 or h0.modulus_exp != 1:
        raise HenselError("g0 and h0 must be given mod p")
    if not g0.is_monic():
        raise HenselError("g0 must be monic")
    if g0.degree + h0.degree != Q.degree:
        raise HenselError("deg g0 + deg h0 must equal deg Q")
    if (g0 * h0).coeffs != Q.mod(p).coeffs:
        raise HenselError("g0 * h0 is not Q mod p")
    try:
        _, t = bezout_mod_p(g0, h0)
    except ValueError as exc:
        raise HenselError(str(exc)) from None
    g = g0.lift()
    h = IntPoly(h0.coeffs[:-1] + (Q.lead,))
    pj = p
    for j in range(1, k):
        yield j, g, h
        diff = Q - g * h
        e = [c // pj for c in diff.coeffs]
        assert all(c % pj == 0 for c in diff.coeffs)
        _, dg = _fp_divmod(_fp_mul(t.coeffs, e, p), g0.coeffs, p)
        dh, rem = _fp_divmod(_fp_sub(e, _fp_mul(dg, h0.coeffs, p), p), g0.coeffs, p)
        assert not rem
        g = g + IntPoly(dg) * pj
        h = h + IntPoly(dh) * pj
        pj *= p
    yield k, g, h


def lift_factorization(
    Q: IntPoly, p: int, g0: ModPoly, h0: ModPoly, k: int
) -> tuple[ModPoly, ModPoly]:
    """Lift a coprime factorization ``Q = g0 h0 mod p`` to one mod ``p^k``."""
    if k < 1:
        raise ValueError("target exponent must be >= 1")
    for _, g, h in lift_factorization_steps(Q, p, g0, h0, k):
        pass
    return ModPoly(p, k, g.coeffs), ModPoly(p, k, h.coeffs)
