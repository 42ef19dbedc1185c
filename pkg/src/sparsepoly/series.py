"""Truncation, exact-power extraction, and univariate series decomposition.

A polynomial can be viewed as a power series in any one of its symbols;
``series`` performs that regrouping and ``taylor`` composes it with a
shift substitution to expand about a point.  A variable named like
``x_m_foo`` displays as ``(x-foo)``, marking an expansion about ``foo``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Mvp, power_of, total_degree
from .parser import parse
from .transform import subs


@dataclass(frozen=True)
class SeriesDecomposition:
    """A polynomial regrouped by powers of one variable.

    ``components`` holds (power, coefficient) pairs sorted by ascending
    power; no coefficient is zero, and summing coefficient * variable**power
    reconstructs the source polynomial.
    """

    variable: str
    display: Optional[str]
    components: tuple

    def __str__(self) -> str:
        from .printer import render_series

        return render_series(self)

    __repr__ = __str__


def trunc(p: Mvp, n: int) -> Mvp:
    """Keep the terms of total degree at most ``n`` (negatives included)."""
    return Mvp._from_clean(
        {t: c for t, c in p._terms.items() if total_degree(t) <= n}
    )


def trunc1(p: Mvp, limits: Optional[dict] = None, **by_name) -> Mvp:
    """Keep terms whose power of each listed symbol is at most its limit.

    A symbol absent from a term counts as power 0.
    """
    merged = dict(limits or {})
    merged.update(by_name)
    out = {
        t: c
        for t, c in p._terms.items()
        if all(power_of(t, s) <= lim for s, lim in merged.items())
    }
    return Mvp._from_clean(out)


def onevarpow(p: Mvp, targets: Optional[dict] = None, **by_name) -> Mvp:
    """Extract the coefficient polynomial of an exact power pattern.

    Keeps the terms whose power of each target symbol equals the target
    exactly (absent counting as 0), then deletes those symbols from what
    remains: the result is the factor multiplying the requested monomial.
    """
    merged = dict(targets or {})
    merged.update(by_name)
    out: dict = {}
    for t, c in p._terms.items():
        if all(power_of(t, s) == k for s, k in merged.items()):
            rest = tuple(pair for pair in t if pair[0] not in merged)
            s2 = out.get(rest, 0.0) + c
            if s2 == 0.0:
                out.pop(rest, None)
            else:
                out[rest] = s2
    return Mvp._from_clean(out)


def _display_for(variable: str) -> Optional[str]:
    head, sep, tail = variable.partition("_m_")
    if sep and head and tail:
        return f"({head}-{tail})"
    return None


def series(p: Mvp, variable: str) -> SeriesDecomposition:
    """Decompose into a power series in one variable.

    The component at power k collects every term carrying variable**k,
    with the variable itself removed, so components never mention it.
    """
    groups: dict[int, dict] = {}
    for t, c in p._terms.items():
        k = power_of(t, variable)
        rest = tuple(pair for pair in t if pair[0] != variable)
        g = groups.setdefault(k, {})
        g[rest] = g.get(rest, 0.0) + c
    components = tuple(
        (k, Mvp._from_clean(groups[k])) for k in sorted(groups)
    )
    return SeriesDecomposition(variable, _display_for(variable), components)


def taylor(p: Mvp, variable: str, about: str) -> SeriesDecomposition:
    """Series expansion of ``p`` in ``variable`` about the symbol ``about``.

    Substitutes ``variable -> variable_m_about + about`` and decomposes in
    the shifted variable, which displays as ``(variable-about)``.  The
    variable must occur with nonnegative powers only.
    """
    shifted_name = f"{variable}_m_{about}"
    shifted = subs(
        p, [(variable, parse(f"{shifted_name} + {about}"))], lose=False
    )
    return series(shifted, shifted_name)


def reconstruct(decomposition: SeriesDecomposition) -> Mvp:
    """Sum coefficient * variable**power back into a single polynomial."""
    v = decomposition.variable
    total = Mvp.zero()
    for k, coeff in decomposition.components:
        factor = Mvp.from_number(1.0) if k == 0 else Mvp.monomial(v, k)
        total = total + coeff * factor
    return total
