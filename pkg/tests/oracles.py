"""Independent reference computations used by the tests.

Everything here is deliberately naive: plain loops over big integers, or
sympy, and nothing imported from padicval.
"""

import math

import sympy

INF = math.inf


def naive_nu(p, x):
    if x == 0:
        return INF
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def evaluate(coeffs, n):
    return sum(c * n**i for i, c in enumerate(coeffs))


def naive_values(coeffs, p, count, start=0):
    return [naive_nu(p, evaluate(coeffs, n)) for n in range(start, start + count)]


def sympy_disc(coeffs):
    x = sympy.Symbol("x")
    return int(sympy.discriminant(sum(c * x**i for i, c in enumerate(coeffs)), x))


def exhaustive_roots(coeffs, p):
    """(number of roots in Z_p, alpha) for a monic squarefree polynomial.

    S_j = {a mod p^j : Q(a) = 0 mod p^j} is built by full lifting, with no
    pruning, down to depth D = 2 delta + 1 where delta = nu_p(disc).  Every
    node of S_D lies within p^(delta+1) of a root and distinct roots are
    closer than that to no one else, so the roots correspond to the classes
    of S_D mod p^(delta+1).  If the enumeration dies out first, alpha is the
    deepest nonempty level.
    """
    delta = naive_nu(p, sympy_disc(coeffs))
    depth = 2 * delta + 1
    level = [0]
    for j in range(depth):
        pj, nxt = p**j, []
        for a in level:
            for t in range(p):
                b = a + t * pj
                if evaluate(coeffs, b) % (pj * p) == 0:
                    nxt.append(b)
        if not nxt:
            return 0, j
        level = nxt
    return len({a % p ** (delta + 1) for a in level}), INF


def sums_of_three_squares(limit):
    out = set()
    r = math.isqrt(limit)
    for a in range(r + 1):
        for b in range(a, r + 1):
            s = a * a + b * b
            if s > limit:
                break
            for c in range(b, r + 1):
                t = s + c * c
                if t > limit:
                    break
                out.add(t)
    return out


def is_period(values, L):
    return all(values[i] == values[i + L] for i in range(len(values) - L))
