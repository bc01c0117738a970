"""Backend selection for the residue-arithmetic hot loops.

The compiled ``_ckernels`` extension is used when it imports and the
modulus fits in a machine word; otherwise the pure-Python reference runs.
Set ``PADICVAL_PURE_PYTHON=1`` to force the fallback.
"""

import os

from padicval import _pykernels

WORD_LIMIT = 2**63

if os.environ.get("PADICVAL_PURE_PYTHON", "") not in ("", "0"):
    _ck = None
else:
    try:
        from padicval import _ckernels as _ck
    except ImportError:
        _ck = None

BACKEND = "cython" if _ck is not None else "python"


def _impl(modulus):
    return _ck if _ck is not None and modulus < WORD_LIMIT else _pykernels


def valuation_scan(coeffs, p, cap, start, count):
    """Capped valuations ``min(nu_p(Q(n)), cap)`` for ``count`` consecutive ``n``."""
    if count <= 0:
        return []
    return _impl(p**cap).valuation_scan(list(coeffs), p, cap, start, count)


def lift_level(coeffs, p, j, nodes):
    """Extend residues mod ``p^j`` to the residues mod ``p^(j+1)`` that still kill Q."""
    if not nodes:
        return []
    return _impl(p ** (j + 1)).lift_level(list(coeffs), p, j, nodes)
