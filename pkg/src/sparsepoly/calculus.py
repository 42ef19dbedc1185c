"""Partial derivatives and Horner-scheme polynomial composition."""

from __future__ import annotations

import operator
from typing import Optional, Sequence, Union

from .core import Mvp, check_power
from .parser import parse_or_lift


def _deriv_once(terms: dict, symbol: str) -> dict:
    out: dict = {}
    for t, c in terms.items():
        k = 0
        rest = []
        for s, p in t:
            if s == symbol:
                k = p
            else:
                rest.append((s, p))
        if k == 0:
            continue
        c = c * k
        if c == 0.0:
            continue
        if k != 1:
            rest.append((symbol, check_power(k - 1)))
            rest.sort()
        t2 = tuple(rest)
        s2 = out.get(t2, 0.0) + c
        if s2 == 0.0:
            out.pop(t2, None)
        else:
            out[t2] = s2
    return out


def deriv(p: Mvp, variables: Union[str, Sequence[str]]) -> Mvp:
    """Successive partial derivatives, applied left to right.

    Per term, d/ds of c*s^k*R is c*k*s^(k-1)*R, valid for negative k;
    terms without the variable are dropped.
    """
    if isinstance(variables, str):
        variables = [variables]
    terms = p._terms
    for s in variables:
        terms = _deriv_once(terms, s)
    return Mvp._from_clean(terms)


def aderiv(p: Mvp, orders: Optional[dict] = None, **by_name) -> Mvp:
    """Mixed partial of the given order per symbol.

    ``aderiv(p, a=3, c=2)`` differentiates three times by ``a`` and twice
    by ``c``; equivalent to ``deriv`` with each symbol repeated.  Orders
    must be nonnegative (order 0 is a no-op).
    """
    merged = dict(orders or {})
    merged.update(by_name)
    sequence = []
    for s, k in merged.items():
        k = operator.index(k)
        if k < 0:
            raise ValueError(f"derivative order for {s!r} must be nonnegative, got {k}")
        sequence.extend([s] * k)
    return deriv(p, sequence)


def horner(base: Union[Mvp, str], coeffs: Sequence[float]) -> Mvp:
    """Sum of coeffs[i] * base**i evaluated by Horner's nested scheme."""
    b = parse_or_lift(base)
    cs = [float(c) for c in coeffs]
    if not cs:
        raise ValueError("horner needs at least one coefficient")
    acc = Mvp.from_number(cs[-1])
    for c in reversed(cs[:-1]):
        acc = acc * b + Mvp.from_number(c)
    return acc
