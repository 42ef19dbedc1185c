"""Ordered-map storage for sparse multivariate Laurent polynomials.

A polynomial is a finite map from *terms* to nonzero double coefficients,
and a term is a map from symbol names to nonzero signed integer powers.
The empty term is the constant term; the empty polynomial is zero.  Both
maps are kept in a canonical sorted order (symbols alphabetically inside a
term, terms by lexicographic comparison of their (symbol, power) pairs) so
that serialization is deterministic, but no public operation attaches
meaning to that order; coefficient-level work goes through the disord
module instead.
"""

from __future__ import annotations

import json
import math
import operator
import re
from typing import Iterator, Mapping

Symbol = str

# A term is ((symbol, power), ...) sorted by symbol, every power nonzero.
Term = tuple

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

_SYMBOL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class PowerOverflowError(OverflowError):
    """A power left the signed 64-bit range during power arithmetic."""


def require_symbol(name: str) -> str:
    """Validate a symbol name against ``[A-Za-z][A-Za-z0-9_]*``."""
    if not isinstance(name, str) or not _SYMBOL_RE.match(name):
        raise ValueError(f"invalid symbol name: {name!r}")
    return name


def check_power(k: int) -> int:
    if not INT64_MIN <= k <= INT64_MAX:
        raise PowerOverflowError(f"power {k} outside the signed 64-bit range")
    return k


def normalize_term(raw_pairs) -> Term:
    """Collapse raw (symbol, power) pairs into a canonical term.

    Powers of repeated symbols are summed and symbols whose summed power is
    zero are dropped: ``[("x", 1), ("x", 1)]`` gives ``(("x", 2),)`` and
    ``[("y", 0)]`` contributes nothing.  An empty input is the constant
    term.  Accepts a mapping or any iterable of pairs.
    """
    if isinstance(raw_pairs, Mapping):
        raw_pairs = raw_pairs.items()
    acc: dict[str, int] = {}
    for name, k in raw_pairs:
        require_symbol(name)
        k = operator.index(k)
        acc[name] = acc.get(name, 0) + k
    return tuple(sorted((s, check_power(k)) for s, k in acc.items() if k != 0))


def total_degree(t: Term) -> int:
    """Sum of all powers in a term, negatives included; 0 for the constant."""
    return sum(k for _, k in t)


def power_of(t: Term, symbol: str) -> int:
    """Power of ``symbol`` in a term, 0 when absent."""
    for s, k in t:
        if s == symbol:
            return k
    return 0


class Mvp:
    """A sparse multivariate Laurent polynomial.

    Immutable; all operations return new values, so instances are safe to
    share across threads.  Stored coefficients are never zero and stored
    powers are never zero.  Supports the ring operators ``+ - * **`` with
    polynomial or numeric operands, and ``/`` by a number.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict[Term, float] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for raw_term, c in items:
                t = normalize_term(raw_term)
                c = data.get(t, 0.0) + float(c)
                if c == 0.0:
                    data.pop(t, None)
                else:
                    data[t] = c
        self._terms = dict(sorted(data.items()))

    @classmethod
    def _from_clean(cls, data: dict) -> "Mvp":
        # Trusted path: terms already normalized, coefficients nonzero.
        obj = object.__new__(cls)
        obj._terms = dict(sorted(data.items()))
        return obj

    @classmethod
    def zero(cls) -> "Mvp":
        return cls._from_clean({})

    @classmethod
    def from_number(cls, value) -> "Mvp":
        value = float(value)
        return cls._from_clean({} if value == 0.0 else {(): value})

    @classmethod
    def monomial(cls, symbol: str, power: int, coeff: float = 1.0) -> "Mvp":
        t = normalize_term([(symbol, power)])
        coeff = float(coeff)
        return cls._from_clean({} if coeff == 0.0 else {t: coeff})

    def terms(self) -> Iterator[tuple[Term, float]]:
        """Iterate (term, coefficient) pairs in canonical order."""
        return iter(self._terms.items())

    def coefficient(self, term) -> float:
        """Coefficient of a term (raw pairs accepted), 0.0 when absent."""
        return self._terms.get(normalize_term(term), 0.0)

    def symbols(self) -> tuple[str, ...]:
        """All symbols appearing in the polynomial, sorted."""
        seen = {s for t in self._terms for s, _ in t}
        return tuple(sorted(seen))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return len(self._terms) == 0 or (len(self._terms) == 1 and () in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Mvp):
            return self._terms == other._terms
        if isinstance(other, (int, float)):
            return self._terms == Mvp.from_number(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    # Ring operators delegate to the arith module; imports are deferred to
    # keep the module graph acyclic.
    def __add__(self, other):
        from . import arith

        other = _lift_operand(other)
        if other is None:
            return NotImplemented
        return arith.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        from . import arith

        other = _lift_operand(other)
        if other is None:
            return NotImplemented
        return arith.subtract(self, other)

    def __rsub__(self, other):
        from . import arith

        other = _lift_operand(other)
        if other is None:
            return NotImplemented
        return arith.subtract(other, self)

    def __neg__(self):
        from . import arith

        return arith.negate(self)

    def __pos__(self):
        return self

    def __mul__(self, other):
        from . import arith

        if isinstance(other, (int, float)):
            return arith.scale(self, other)
        if isinstance(other, Mvp):
            return arith.multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        from . import arith

        if isinstance(other, (int, float)):
            return arith.scale(self, 1.0 / other)
        raise TypeError("polynomials can only be divided by a number")

    def __pow__(self, n):
        from . import arith

        return arith.power(self, n)

    def __str__(self) -> str:
        from . import printer

        return printer.render(self)

    __repr__ = __str__


def _lift_operand(other):
    if isinstance(other, Mvp):
        return other
    if isinstance(other, (int, float)):
        return Mvp.from_number(other)
    return None


def accumulate(p: Mvp, term, coeff: float) -> Mvp:
    """Add ``coeff`` onto one term's coefficient, deleting exact zeros.

    The insertion primitive behind every other operation: the result maps
    ``term`` to its old coefficient plus ``coeff``, with the entry removed
    when the sum is exactly 0.0.  ``coeff == 0`` is a no-op.
    """
    t = normalize_term(term)
    out = dict(p._terms)
    c = out.get(t, 0.0) + float(coeff)
    if c == 0.0:
        out.pop(t, None)
    else:
        out[t] = c
    return Mvp._from_clean(out)


def constant(p: Mvp) -> float:
    """Coefficient of the empty term, 0.0 when absent."""
    return p._terms.get((), 0.0)


def equals(p: Mvp, q: Mvp) -> bool:
    """Exact equality: same term set, bitwise-equal coefficients."""
    return p._terms == q._terms


def equals_approx(p: Mvp, q: Mvp, rel: float = 1e-9, abs_tol: float = 0.0) -> bool:
    """Equality up to a relative tolerance on coefficients (test helper)."""
    if p._terms.keys() != q._terms.keys():
        return False
    return all(
        math.isclose(c, q._terms[t], rel_tol=rel, abs_tol=abs_tol)
        for t, c in p._terms.items()
    )


def validate(p: Mvp) -> None:
    """Walk the maps and assert every storage invariant; raises on breach."""
    for t, c in p._terms.items():
        if c == 0.0:
            raise AssertionError(f"stored zero coefficient at {t!r}")
        if not isinstance(c, float):
            raise AssertionError(f"non-float coefficient {c!r}")
        names = [s for s, _ in t]
        if names != sorted(names) or len(set(names)) != len(names):
            raise AssertionError(f"term not in canonical symbol order: {t!r}")
        for s, k in t:
            require_symbol(s)
            if k == 0:
                raise AssertionError(f"stored zero power in {t!r}")
            check_power(k)


def canonical_json(p: Mvp) -> str:
    """Serialize to the canonical JSON form.

    ``{"terms":[{"powers":{"x":2,"y":3},"coeff":-3.0}, ...]}`` with terms
    and symbols in canonical order; the byte-exact contract used by golden
    tests and as the provenance-hash preimage.
    """
    doc = {
        "terms": [
            {"powers": {s: k for s, k in t}, "coeff": c} for t, c in p.terms()
        ]
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> Mvp:
    """Rebuild a polynomial from its canonical JSON form."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or "terms" not in doc:
        raise ValueError("expected an object with a 'terms' array")
    pairs = []
    for entry in doc["terms"]:
        powers = entry["powers"]
        coeff = entry["coeff"]
        norm = {}
        for s, k in powers.items():
            if isinstance(k, float):
                if not k.is_integer():
                    raise ValueError(f"non-integer power {k!r} for symbol {s!r}")
                k = int(k)
            norm[s] = k
        pairs.append((norm, float(coeff)))
    return Mvp(pairs)
