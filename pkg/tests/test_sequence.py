import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import is_period, naive_nu, naive_values, sums_of_three_squares
from padicval.poly import IntPoly, discriminant, parse_poly
from padicval.sequence import (
    Outcome,
    analyze,
    fundamental_period,
    minimal_period,
    oracle_valuations,
    oracle_values,
    profile_value,
    quad_odd_classify,
    quad_p2_classify,
    three_squares,
)
from padicval.valuation import INFINITE


def test_example_cubic():
    a = analyze(parse_poly("x^3+9x^2+81x+243"), 3)
    assert a.outcome is Outcome.PERIODIC
    assert (a.alpha, a.period_length, a.irreducibility) == (5, 9, "dumas")
    assert fundamental_period(a) == [5, 0, 0, 3, 0, 0, 3, 0, 0]
    assert a.profile.n0 == 0 and a.profile.beta == 1


def test_example_quartic_goes_through_factors():
    a = analyze(parse_poly("x^4+x^3+x^2+3x+3"), 3)
    assert a.alpha == 3 and a.period_length == 9 and a.period_source == "factors"
    assert a.evidence["period_if_irreducible"] == 3
    assert a.evidence["oracle_window"] == 27
    assert a.evidence["contradiction"] is True
    assert fundamental_period(a) == [1, 2, 0, 1, 3, 0, 1, 2, 0]


@pytest.mark.parametrize(
    "text, p, period",
    [
        ("x^2-3", 2, [0, 1]),
        ("x^2-5", 2, [0, 2]),
        ("x^2-384", 2, [7, 0, 2, 0, 4, 0, 2, 0, 6, 0, 2, 0, 4, 0, 2, 0]),
        ("x^2+3", 3, [1, 0, 0]),
        ("x^2+1", 3, [0]),
        ("x^2-10", 2, [1, 0]),
    ],
)
def test_small_periodic_cases(text, p, period):
    a = analyze(parse_poly(text), p)
    assert a.periodic
    assert fundamental_period(a) == period
    assert a.period_length == len(period)


def test_unbounded_with_root_digits():
    a = analyze(parse_poly("x^2-17"), 2, precision=8)
    assert a.outcome is Outcome.UNBOUNDED and a.alpha is INFINITE
    assert len(a.roots) == 2
    deeper = analyze(parse_poly("x^2-17"), 2, precision=14)
    for r, s in zip(a.roots, deeper.roots):
        assert len(r.digits()) == 8
        assert (r.residue * r.residue - 17) % 2**8 == 0
        assert s.residue % 2**8 == r.residue
    with pytest.raises(ValueError):
        fundamental_period(a)
    a = analyze(parse_poly("x"), 5)
    assert not a.periodic and a.roots[0].residue == 0


def test_content_is_stripped_and_added_back():
    a = analyze(parse_poly("9x^2-27"), 3)
    assert a.shift == 2 and a.alpha == 3
    assert fundamental_period(a) == naive_values((-27, 0, 9), 3, a.period_length)
    with pytest.raises(ValueError):
        analyze(parse_poly("2x^2+1"), 2)
    with pytest.raises(ValueError):
        analyze(IntPoly([5]), 2)


def test_default_root_precision_covers_search_depth():
    a = analyze(parse_poly("x^2-17"), 2)
    assert a.roots[0].root.precision == max(8, a.search.search_depth_used + 2)


monic = st.lists(st.integers(-50, 50), min_size=2, max_size=4).map(lambda c: c + [1])


@settings(max_examples=150, deadline=None)
@given(monic, st.sampled_from([2, 3, 5]))
def test_analysis_matches_direct_valuations(c, p):
    Q = IntPoly(c)
    assume(discriminant(Q) != 0)
    a = analyze(Q, p)
    if not a.periodic:
        assert a.roots
        for r in a.roots:
            assert naive_nu(p, Q(r.residue)) >= r.root.precision
        return
    L = a.period_length
    vals = naive_values(c, p, 3 * L)
    assert max(vals) == a.alpha
    assert is_period(vals, L)
    if L > 1:
        assert not is_period(vals, L // p)
    if a.profile is not None:
        assert [profile_value(a.profile, n) for n in range(3 * L)] == vals


@given(st.integers(-10**6, 10**6), st.sampled_from([2, 3, 5, 7]), st.integers(0, 500))
def test_oracle_values_handle_deep_valuations(n, p, k):
    # Q(x) = x - n p^k has valuation exactly reached at x = n p^k
    Q = IntPoly([-n * p**k, 1])
    x = abs(n) * p**k + 1
    assert oracle_values(Q, p, 3, start=x - 1) == naive_values(Q.coeffs, p, 3, start=x - 1)


def test_minimal_period():
    assert minimal_period([1, 0, 1, 0, 1, 0]) == 2
    assert minimal_period([1, 2, 3]) is None
    scan = oracle_valuations(parse_poly("x^2-3"), 2, 8)
    assert scan.values == [0, 1, 0, 1, 0, 1, 0, 1] and scan.period == 2


def test_quad_p2_classify():
    assert quad_p2_classify(48) == (True, 2, 3, False)
    assert quad_p2_classify(17).periodic is False
    assert quad_p2_classify(0).degenerate


def test_quad_odd_classify():
    r = quad_odd_classify(5, 50)
    assert r.periodic and r.k == 2 and r.period == 5
    assert not quad_odd_classify(3, 9).periodic
    assert quad_odd_classify(3, 0).degenerate
    with pytest.raises(ValueError):
        quad_odd_classify(2, 5)


def test_three_squares_brute_force():
    reps = sums_of_three_squares(3000)
    for b in range(1, 3001):
        assert three_squares(b) == (b in reps)
    with pytest.raises(ValueError):
        three_squares(0)
