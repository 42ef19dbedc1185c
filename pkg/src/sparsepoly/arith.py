"""Ring arithmetic: addition, negation, subtraction, multiplication, powers."""

from __future__ import annotations

import operator

from ._kernel import mul_terms
from .core import Mvp


def add(p: Mvp, q: Mvp) -> Mvp:
    """Termwise coefficient sum with exact-zero deletion."""
    out = dict(p._terms)
    get = out.get
    for t, c in q._terms.items():
        s = get(t, 0.0) + c
        if s == 0.0:
            out.pop(t, None)
        else:
            out[t] = s
    return Mvp._from_clean(out)


def negate(p: Mvp) -> Mvp:
    return Mvp._from_clean({t: -c for t, c in p._terms.items()})


def subtract(p: Mvp, q: Mvp) -> Mvp:
    return add(p, negate(q))


def scale(p: Mvp, factor: float) -> Mvp:
    """Multiply every coefficient by a number."""
    factor = float(factor)
    if factor == 0.0:
        return Mvp.zero()
    out = {}
    for t, c in p._terms.items():
        c = c * factor
        if c != 0.0:
            out[t] = c
    return Mvp._from_clean(out)


def multiply(p: Mvp, q: Mvp) -> Mvp:
    """Convolution product: powers add, coefficients multiply."""
    if len(p._terms) > len(q._terms):
        p, q = q, p
    return Mvp._from_clean(mul_terms(p._terms, q._terms))


def power(p: Mvp, n: int) -> Mvp:
    """Nonnegative integer power by repeated squaring; p**0 is 1."""
    n = operator.index(n)
    if n < 0:
        raise ValueError(
            "negative exponents are not defined for polynomials; "
            "invert() negates the powers of a monomial instead"
        )
    result = {(): 1.0}
    base = p._terms
    while n:
        if n & 1:
            result = mul_terms(result, base)
        n >>= 1
        if n:
            base = mul_terms(base, base)
    return Mvp._from_clean(result)
