import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy.polys.subresultants_qq_zz import sylvester

from oracles import evaluate, sympy_disc
from padicval.poly import (
    IntPoly,
    ModPoly,
    bezout_mod_p,
    derivative,
    discriminant,
    eval_poly,
    factor_mod_p,
    format_poly,
    gcd_mod_p,
    is_irreducible_mod_p,
    is_squarefree,
    parse_poly,
    resultant,
)

X = sympy.Symbol("x")
coeff_lists = st.lists(st.integers(-50, 50), min_size=2, max_size=6).filter(lambda c: c[-1] != 0)


def to_sympy(coeffs):
    return sum(c * X**i for i, c in enumerate(coeffs))


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x^3+9x^2+81x+243", (243, 81, 9, 1)),
        ("x**2 - 17", (-17, 0, 1)),
        ("2*x^2 + x", (0, 1, 2)),
        ("-x", (0, -1)),
        ("x^4+x^3+x^2+3x+3", (3, 3, 1, 1, 1)),
        ("7", (7,)),
    ],
)
def test_parse_human_form(text, coeffs):
    assert parse_poly(text).coeffs == coeffs


def test_parse_coefficient_list():
    assert parse_poly("[243, 81, 9, 1]", coeffs=True).coeffs == (243, 81, 9, 1)
    assert parse_poly("-3,0,1", coeffs=True).coeffs == (-3, 0, 1)


@pytest.mark.parametrize("bad", ["", "x^^2", "x y", "3*", "2x3", "1,2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


@given(coeff_lists)
def test_format_parse_round_trip(c):
    Q = IntPoly(c)
    assert parse_poly(str(Q)) == Q
    assert parse_poly(format_poly(Q.coeffs)) == Q


@given(coeff_lists, st.integers(-10**6, 10**6))
def test_horner_matches_power_sum(c, n):
    assert eval_poly(IntPoly(c), n) == evaluate(c, n)


@given(coeff_lists, coeff_lists)
def test_ring_operations(a, b):
    A, B = IntPoly(a), IntPoly(b)
    assert (A * B)(3) == A(3) * B(3)
    assert (A - B)(-2) == A(-2) - B(-2)
    assert derivative(A * B) == derivative(A) * B + A * derivative(B)


def test_discriminant_spot_values():
    assert discriminant(parse_poly("x^3-2")) == -108
    assert discriminant(parse_poly("x^2+x+1")) == -3
    assert discriminant(parse_poly("x+5")) == 1
    assert not is_squarefree(parse_poly("x^3-3x+2"))
    with pytest.raises(ValueError):
        discriminant(IntPoly([4]))


@settings(max_examples=60, deadline=None)
@given(coeff_lists)
def test_discriminant_matches_sympy(c):
    assume(len(c) >= 2)
    assert discriminant(IntPoly(c)) == sympy_disc(c)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists)
def test_resultant_matches_sylvester_determinant(a, b):
    # sympy.resultant itself has a sign slip when deg a < deg b, so compare
    # against the determinant of sympy's own Sylvester matrix
    expected = int(sylvester(to_sympy(a), to_sympy(b), X).det())
    got = resultant(IntPoly(a), IntPoly(b))
    assert got == expected
    m, n = len(a) - 1, len(b) - 1
    assert resultant(IntPoly(b), IntPoly(a)) == (-1) ** (m * n) * got


@pytest.mark.parametrize("a, b", [([1, 1], [0, 0, 0, 1]), ([1, 1], [2, 0, 0, 1]), ([-2, 1], [0, 0, 1])])
def test_resultant_product_formula(a, b):
    # monic a with root r: Res(a, b) = b(r)
    r = -a[0]
    assert resultant(IntPoly(a), IntPoly(b)) == evaluate(b, r)


def _sympy_factors(c, p):
    unit, facs = sympy.Poly(to_sympy(c), X, modulus=p).factor_list()
    out = []
    for f, e in facs:
        cs = [int(v) % p for v in reversed(f.all_coeffs())]
        inv = pow(cs[-1], -1, p)
        out.append((tuple(v * inv % p for v in cs), e))
    return int(unit) % p, sorted(out, key=lambda t: (len(t[0]), t[0]))


@settings(max_examples=80, deadline=None)
@given(coeff_lists, st.sampled_from([2, 3, 5, 7]))
def test_factor_mod_p_matches_sympy(c, p):
    assume(c[-1] % p)
    fac = factor_mod_p(IntPoly(c), p)
    mine = [(f.coeffs, e) for f, e in fac.factors]
    unit, theirs = _sympy_factors(c, p)
    assert mine == theirs
    assert fac.unit % p == unit
    assert fac.product().coeffs == IntPoly(c).mod(p).coeffs
    assert all(is_irreducible_mod_p(f, p) for f, _ in fac.factors)


def test_factor_mod_p_examples():
    fac = factor_mod_p(parse_poly("x^4+x^3+x^2+3x+3"), 3)
    # x^2 (x + 2)^2
    assert [(f.coeffs, e) for f, e in fac.factors] == [((0, 1), 2), ((2, 1), 2)]
    assert fac.unit == 1
    with pytest.raises(ValueError):
        factor_mod_p(IntPoly([3, 6]), 3)


@given(st.sampled_from([2, 3, 5, 7]), coeff_lists, coeff_lists)
def test_bezout_identity(p, a, b):
    A, B = IntPoly(a).mod(p), IntPoly(b).mod(p)
    assume(not A.is_zero() and not B.is_zero())
    if gcd_mod_p(A, B).coeffs != (1,):
        with pytest.raises(ValueError):
            bezout_mod_p(A, B)
        return
    s, t = bezout_mod_p(A, B)
    assert (s * A + t * B).coeffs == (1,)


def test_modpoly_reduces_and_lifts():
    m = ModPoly(3, 2, [10, -1, 9])
    assert m.coeffs == (1, 8)
    assert m.lift() == IntPoly([1, 8])
