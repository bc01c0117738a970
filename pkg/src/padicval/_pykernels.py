"""Pure-Python reference versions of the hot loops in ``_ckernels.pyx``.

Both modules expose the same functions with the same semantics; the
selector in ``padicval.kernels`` picks one at import time.
"""


def _horner_mod(coeffs, x, M):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % M
    return acc


def _capped_val(r, p, cap):
    if r == 0:
        return cap
    v = 0
    while r % p == 0:
        r //= p
        v += 1
    return v


def valuation_scan(coeffs, p, cap, start, count):
    """``[min(nu_p(Q(n)), cap) for n in range(start, start + count)]``."""
    M = p**cap
    c = [x % M for x in coeffs]
    x = start % M
    out = []
    for _ in range(count):
        out.append(_capped_val(_horner_mod(c, x, M), p, cap))
        x += 1
        if x == M:
            x = 0
    return out


def lift_level(coeffs, p, j, nodes):
    """Children ``a + t p^j`` of each node with ``Q(child) = 0 mod p^(j+1)``."""
    step = p**j
    M = step * p
    c = [x % M for x in coeffs]
    out = []
    for a in nodes:
        for t in range(p):
            b = a + t * step
            if _horner_mod(c, b, M) == 0:
                out.append(b)
    out.sort()
    return out
