"""p-adic valuations of polynomial sequences.

For a polynomial Q and a prime p the sequence nu_p(Q(0)), nu_p(Q(1)), ...
is either periodic or unbounded.  This package decides which, and in the
periodic case computes the exact period length and a closed form.
"""

from padicval.hensel import (
    HenselError,
    LiftedRoot,
    RootSearchReport,
    lift_factorization,
    lift_simple_root,
    lift_strong_root,
    zp_root_search,
)
from padicval.irreducibility import CriterionVerdict, Status, dumas, eisenstein, hensel_reducible
from padicval.kernels import BACKEND
from padicval.numring import (
    MonogenicRing,
    RamificationError,
    RamifiedPrime,
    RingElement,
    norm,
    nu_pi,
    ring_analyze,
    ring_mul,
    ring_poly,
    validate_ramified,
)
from padicval.poly import (
    IntPoly,
    ModPoly,
    derivative,
    discriminant,
    eval_poly,
    factor_mod_p,
    gcd_mod_p,
    parse_poly,
)
from padicval.sequence import (
    Outcome,
    SequenceAnalysis,
    ValuationProfile,
    analyze,
    fundamental_period,
    oracle_valuations,
    profile_value,
    quad_odd_classify,
    quad_p2_classify,
    three_squares,
)
from padicval.valuation import (
    INFINITE,
    PAdicInt,
    nu_factorial,
    nu_int,
    padic_add,
    padic_mul,
    padic_unit_inverse,
)

__version__ = "0.1.0"
