import pytest
import sympy
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from oracles import evaluate, is_period, naive_values
from padicval.hensel import zp_root_search
from padicval.irreducibility import CriterionVerdict, Status, dumas, eisenstein, hensel_reducible
from padicval.poly import IntPoly, discriminant, gcd_mod_p, parse_poly

X = sympy.Symbol("x")


def test_eisenstein_examples():
    assert eisenstein(parse_poly("x^2-10"), 2).status is Status.IRREDUCIBLE
    assert eisenstein(parse_poly("x^2-4"), 2).status is Status.INCONCLUSIVE
    assert eisenstein(parse_poly("x^3+9x^2+81x+243"), 3).status is Status.INCONCLUSIVE


def test_dumas_certificate():
    v = dumas(parse_poly("x^3+9x^2+81x+243"), 3)
    assert v.status is Status.IRREDUCIBLE
    assert v.witness["valuations_high_to_low"] == [0, 2, 4, 5]
    # gcd(nu(a_n), n) = 2
    assert dumas(parse_poly("x^2+4"), 2).status is Status.INCONCLUSIVE
    # zero middle coefficients do not block the criterion
    assert dumas(parse_poly("x^3-8"), 2).status is Status.INCONCLUSIVE
    assert dumas(parse_poly("x^3-4"), 2).status is Status.IRREDUCIBLE


def test_hensel_examples():
    v = hensel_reducible(parse_poly("x^4+x^3+x^2+3x+3"), 3)
    assert v.status is Status.REDUCIBLE
    assert str(v.witness["g0"]) == "x^2"
    assert str(v.witness["h0"]) == "x^2+x+1"
    assert hensel_reducible(parse_poly("x^2-2"), 2).status is Status.INCONCLUSIVE
    w = hensel_reducible(parse_poly("x^2-1"), 5).witness
    assert {w["g0"].coeffs, w["h0"].coeffs} == {(4, 1), (1, 1)}
    with pytest.raises(ValueError):
        hensel_reducible(parse_poly("3x^2+1"), 3)


def test_verdict_witness_contract():
    with pytest.raises(ValueError):
        CriterionVerdict(Status.IRREDUCIBLE, "dumas")
    with pytest.raises(ValueError):
        CriterionVerdict(Status.INCONCLUSIVE, "dumas", {"x": 1})
    j = dumas(parse_poly("x^3-4"), 2).to_json()
    assert j == {"criterion": "dumas", "status": "IRREDUCIBLE", "witness": {"valuations_high_to_low": [0, "inf", "inf", 2]}}


monic = st.lists(st.integers(-60, 60), min_size=2, max_size=5).map(lambda c: c + [1])


@st.composite
def steep_monic(draw):
    """Monic polynomials whose lower coefficients carry p-power factors."""
    p = draw(st.sampled_from([2, 3, 5]))
    d = draw(st.integers(2, 4))
    c = [p ** draw(st.integers(0, 6)) * draw(st.sampled_from([-2, -1, 1, 2])) for _ in range(d)]
    return c + [1], p


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(steep_monic())
def test_positive_criteria_are_sound(case):
    c, p = case
    Q = IntPoly(c)
    fired = [v for v in (eisenstein(Q, p), dumas(Q, p)) if v.status is Status.IRREDUCIBLE]
    assume(fired)
    # irreducible over Z_p forces irreducible over Q
    assert sympy.Poly(evaluate(c, X), X).is_irreducible
    assume(discriminant(Q) != 0)
    rep = zp_root_search(Q, p, 4)
    assert not rep.has_roots
    L = p ** -(-rep.alpha // Q.degree)
    vals = naive_values(c, p, 3 * L)
    assert is_period(vals, L)


@settings(max_examples=150, deadline=None)
@given(monic, st.sampled_from([2, 3, 5, 7]))
def test_hensel_witness_is_a_coprime_split(c, p):
    Q = IntPoly(c)
    v = hensel_reducible(Q, p)
    if v.status is Status.INCONCLUSIVE:
        return
    g0, h0 = v.witness["g0"], v.witness["h0"]
    assert g0.is_monic() and g0.degree >= 1 and h0.degree >= 1
    assert (g0 * h0).coeffs == Q.mod(p).coeffs
    assert gcd_mod_p(g0, h0).coeffs == (1,)
