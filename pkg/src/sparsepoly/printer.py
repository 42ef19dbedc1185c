"""Deterministic human-readable rendering of polynomials.

The default ("canonical") term order compares the (symbol, power)
sequences of the terms lexicographically, constant first, with symbols
alphabetical inside each term.  ``order="lex"`` instead sorts terms by
their exponent vectors under an explicit variable precedence, highest
first, and displays symbols in that precedence order.

Formatting contract: terms joined by " + " or " - " according to
coefficient sign; a coefficient of magnitude exactly 1 is omitted unless
the term is constant; integral coefficients print without a decimal
point, anything else with up to 7 significant digits in positional (never
scientific) notation; "^k" is appended for powers other than 1; the zero
polynomial prints "0".
"""

from __future__ import annotations

import math
from decimal import Decimal
from typing import Optional, Sequence

from .core import Mvp, power_of


def format_number(x: float) -> str:
    """Render a coefficient or scalar: integers plain, else 7 significant digits."""
    x = float(x)
    if not math.isfinite(x):
        return repr(x)
    if x == int(x):
        return str(int(x))
    return format(Decimal(f"{x:.6e}").normalize(), "f")


def _term_text(pairs, magnitude: float) -> str:
    if not pairs:
        return format_number(magnitude)
    pieces = [] if magnitude == 1.0 else [format_number(magnitude)]
    for s, k in pairs:
        pieces.append(s if k == 1 else f"{s}^{k}")
    return " ".join(pieces)


def render(
    p: Mvp,
    order: str = "canonical",
    varorder: Optional[Sequence[str]] = None,
) -> str:
    """Render a polynomial to its canonical text form.

    ``order="lex"`` takes an optional ``varorder`` giving the variable
    precedence (alphabetical by default); when given it must cover every
    symbol of ``p``.  The output parses back to an equal polynomial.
    """
    if order == "canonical":
        if varorder is not None:
            raise ValueError("varorder is only meaningful with order='lex'")
        items = [(t, c) for t, c in p.terms()]
    elif order == "lex":
        syms = p.symbols()
        vo = list(varorder) if varorder is not None else sorted(syms)
        missing = set(syms) - set(vo)
        if missing:
            raise ValueError(f"varorder does not cover symbols: {sorted(missing)}")
        ordered = []
        for t, c in p.terms():
            vec = tuple(power_of(t, s) for s in vo)
            pairs = tuple((s, k) for s, k in zip(vo, vec) if k != 0)
            ordered.append((vec, pairs, c))
        ordered.sort(key=lambda e: e[0], reverse=True)
        items = [(pairs, c) for _, pairs, c in ordered]
    else:
        raise ValueError(f"unknown order {order!r}; expected 'canonical' or 'lex'")

    if not items:
        return "0"

    out = []
    for i, (pairs, c) in enumerate(items):
        body = _term_text(pairs, abs(c))
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def render_series(decomposition) -> str:
    """Render a series decomposition: components as ``v^k(...)`` joined by " + "."""
    head = decomposition.display or decomposition.variable
    parts = [
        f"{head}^{k}({render(coeff)})" for k, coeff in decomposition.components
    ]
    return " + ".join(parts) if parts else f"{head}^0(0)"
