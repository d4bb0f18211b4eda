"""Exact arithmetic in Z[v, v^-1] with the bar and iota involutions."""

from __future__ import annotations

import re
from typing import Mapping


class LaurentPoly:
    """Sparse Laurent polynomial in ``v`` with integer coefficients.

    Immutable; terms are stored as a sorted tuple of ``(exponent, coeff)``
    pairs with no zero coefficients, so equality is structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        items = sorted((int(e), int(c)) for e, c in (terms or {}).items() if c)
        self._terms = tuple(items)
        self._hash = hash(self._terms)

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls({e: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def coeff(self, e: int) -> int:
        return dict(self._terms).get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @staticmethod
    def _lift(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self._terms)
        for e, c in o._terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in o._terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only signed monomials are invertible")
            (e, c), = self._terms
            return LaurentPoly({-e * (-n): c ** (-n)})
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self._terms == o._terms

    def __hash__(self):
        return self._hash

    def bar(self) -> LaurentPoly:
        """``v -> v^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms})

    def iota(self) -> LaurentPoly:
        """``v -> -v^-1``."""
        return LaurentPoly({-e: c * (-1) ** (e % 2) for e, c in self._terms})

    def at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def min_degree(self) -> int | None:
        return self._terms[0][0] if self._terms else None

    def max_degree(self) -> int | None:
        return self._terms[-1][0] if self._terms else None

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            if e == 0:
                body = str(abs(c))
            else:
                mono = "v" if e == 1 else f"v^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"


v = LaurentPoly.monomial(1)
vinv = LaurentPoly.monomial(-1)

_TERM = re.compile(r"^(\d+)?\s*\*?\s*(v(?:\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?$")


def lp_parse(text: str) -> LaurentPoly:
    """Parse the rendering grammar, e.g. ``"v^-1 + 2 + v^3"`` or ``"-3v^2"``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Laurent polynomial")
    if s == "0":
        return LaurentPoly()
    # split on + or - that is not an exponent sign
    tokens = re.findall(r"[+-]?(?:[^+-]|(?<=\^)[+-])+", s)
    if "".join(tokens) != s:
        raise ValueError(f"cannot parse {text!r}")
    out = LaurentPoly()
    for tok in tokens:
        sign = -1 if tok[0] == "-" else 1
        body = tok.lstrip("+-")
        m = _TERM.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {tok!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if m.group(2):
            e = int(m.group(3)) if m.group(3) else 1
        else:
            e = 0
        out = out + LaurentPoly({e: sign * c})
    return out
