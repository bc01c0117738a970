import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import naive_nu
from padicval.valuation import (
    INFINITE,
    PAdicInt,
    check_prime,
    digit_sum,
    digits,
    nu_factorial,
    nu_factorial_digits,
    nu_int,
    padic_add,
    padic_mul,
    padic_unit_inverse,
)

primes = st.sampled_from([2, 3, 5, 7, 11, 13, 101])


@given(primes, st.integers(min_value=-10**60, max_value=10**60).filter(bool))
def test_nu_int_matches_repeated_division(p, x):
    assert nu_int(p, x) == naive_nu(p, x)


@given(primes, st.integers(min_value=1, max_value=10**6), st.integers(0, 200))
def test_nu_int_of_scaled_unit(p, u, k):
    u = u * p + 1
    assert nu_int(p, u * p**k) == k


def test_zero_has_infinite_valuation():
    assert nu_int(3, 0) is INFINITE
    assert INFINITE + 7 == INFINITE
    assert min(INFINITE, 4) == 4


@given(primes, st.integers(-10**30, 10**30), st.integers(-10**30, 10**30))
def test_valuation_is_additive_and_ultrametric(p, a, b):
    assert nu_int(p, a * b) == nu_int(p, a) + nu_int(p, b)
    assert nu_int(p, a + b) >= min(nu_int(p, a), nu_int(p, b))


def test_check_prime_rejects_composites():
    assert check_prime(7) == 7
    for bad in (0, 1, 4, -3, 91):
        with pytest.raises(ValueError):
            check_prime(bad)


def test_legendre_spot_values():
    assert nu_factorial(2, 4) == 3
    assert nu_factorial(5, 100) == 24
    assert nu_factorial_digits(3, 0) == 0


@given(st.sampled_from([2, 3, 5, 7]), st.integers(0, 5000))
def test_legendre_forms_agree(p, n):
    direct = sum(naive_nu(p, k) for k in range(1, n + 1))
    assert nu_factorial(p, n) == nu_factorial_digits(p, n) == direct
    assert nu_factorial(p, n) == (n - digit_sum(p, n)) // (p - 1)


@given(primes, st.integers(0, 10**12), st.integers(1, 30))
def test_digits_reconstruct(p, x, k):
    ds = digits(p, x, k)
    assert len(ds) == k and all(0 <= d < p for d in ds)
    assert sum(d * p**i for i, d in enumerate(ds)) == x % p**k


@given(primes, st.integers(1, 12), st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_padic_ring_operations(p, k, a, b):
    M = p**k
    A, B = PAdicInt.from_int(p, a, k), PAdicInt.from_int(p, b, k)
    assert padic_add(A, B).residue == (a + b) % M
    assert padic_mul(A, B).residue == (a * b) % M
    assert (A - B).residue == (a - b) % M
    if a % p:
        inv = padic_unit_inverse(A)
        assert (inv.residue * a) % M == 1


def test_padic_precision_and_errors():
    a = PAdicInt.from_int(3, 10, 4)
    b = PAdicInt.from_int(3, 5, 2)
    assert (a + b).precision == 2
    assert PAdicInt.from_int(3, 18, 4).valuation() == 2
    assert PAdicInt.from_int(3, 81, 4).valuation() == 4
    assert PAdicInt.from_int(3, 0, 4).valuation() is INFINITE
    assert PAdicInt(3, 4, 0, known_zero=True).valuation() is INFINITE
    with pytest.raises(ZeroDivisionError):
        PAdicInt.from_int(3, 6, 4).inverse()
    with pytest.raises(ValueError):
        a + PAdicInt.from_int(5, 1, 4)
    assert a.digits() == [1, 0, 1, 0]
