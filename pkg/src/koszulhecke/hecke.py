"""The Hecke algebra of a Coxeter system in the standard basis.

Conventions: ``(delta_s + v)(delta_s - v^-1) = 0``, so
``delta_s^2 = 1 + (v^-1 - v) delta_s``.  The Kazhdan-Lusztig element ``b_w``
is bar-invariant with ``b_w in delta_w + sum_{x<w} v Z[v] delta_x``; in
particular ``b_s = delta_s + v``.
"""

from __future__ import annotations

import threading
from typing import Iterable, Mapping

from .coxeter import CoxElement, CoxeterGroup
from .laurent import LaurentPoly

_ONE = LaurentPoly.const(1)
_V = LaurentPoly.monomial(1)
_VINV = LaurentPoly.monomial(-1)


class HeckeElt:
    """Immutable element ``sum_w c_w delta_w``."""

    __slots__ = ("group", "_terms")

    def __init__(self, group: CoxeterGroup, terms: Mapping[CoxElement, LaurentPoly] | None = None):
        self.group = group
        clean = {}
        for w, c in (terms or {}).items():
            c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
            if c:
                clean[w] = c
        self._terms = clean

    # ----- constructors -----------------------------------------------
    @classmethod
    def zero(cls, group: CoxeterGroup) -> HeckeElt:
        return cls(group)

    @classmethod
    def one(cls, group: CoxeterGroup) -> HeckeElt:
        return cls(group, {group.identity: _ONE})

    @classmethod
    def delta(cls, w: CoxElement) -> HeckeElt:
        return cls(w.group, {w: _ONE})

    @classmethod
    def scalar(cls, group: CoxeterGroup, c) -> HeckeElt:
        return cls(group, {group.identity: c})

    # ----- access -----------------------------------------------------
    @property
    def terms(self) -> dict[CoxElement, LaurentPoly]:
        return dict(self._terms)

    def coeff(self, w: CoxElement) -> LaurentPoly:
        return self._terms.get(w, LaurentPoly())

    def support(self) -> list[CoxElement]:
        return sorted(self._terms, key=CoxElement.sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    # ----- arithmetic -------------------------------------------------
    def _lift(self, other) -> HeckeElt:
        if isinstance(other, HeckeElt):
            if other.group is not self.group:
                raise ValueError("Hecke elements of different Coxeter groups")
            return other
        if isinstance(other, (int, LaurentPoly)):
            return HeckeElt.scalar(self.group, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self._terms)
        for w, c in o._terms.items():
            out[w] = out.get(w, LaurentPoly()) + c
        return HeckeElt(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElt(self.group, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> HeckeElt:
        c = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
        return HeckeElt(self.group, {w: c * x for w, x in self._terms.items()})

    def mul_generator(self, s: int) -> HeckeElt:
        """Right multiplication by ``delta_s``."""
        out: dict[CoxElement, LaurentPoly] = {}
        for w, c in self._terms.items():
            ws = self.group.element(w.word + (s,))
            out[ws] = out.get(ws, LaurentPoly()) + c
            if len(ws.word) < len(w.word):
                out[w] = out.get(w, LaurentPoly()) + c * (_VINV - _V)
        return HeckeElt(self.group, out)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        total = HeckeElt(self.group)
        for y, c in o._terms.items():
            acc = self
            for s in y.word:
                acc = acc.mul_generator(s)
            total = total + acc.scale(c)
        return total

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = HeckeElt.scalar(self.group, other)
        if not isinstance(other, HeckeElt):
            return False
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # ----- involutions ------------------------------------------------
    def bar(self) -> HeckeElt:
        """Ring involution with ``v -> v^-1`` and ``delta_s -> delta_s^-1``."""
        total = HeckeElt(self.group)
        for w, c in self._terms.items():
            total = total + bar_delta(w).scale(c.bar())
        return total

    def iota(self) -> HeckeElt:
        """Ring involution with ``v -> -v^-1`` and ``delta_w -> delta_w``."""
        return HeckeElt(self.group, {w: c.iota() for w, c in self._terms.items()})

    def specialize_v1(self) -> GroupAlgElt:
        return GroupAlgElt(self.group, {w: c.at_one() for w, c in self._terms.items()})

    # ----- rendering --------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms, key=lambda x: (-len(x.word), x.word)):
            c = self._terms[w]
            basis = "" if not w.word else f"d[{w}]"
            coeff = str(c)
            if not basis:
                parts.append(coeff)
            elif coeff == "1":
                parts.append(basis)
            elif coeff == "-1":
                parts.append("-" + basis)
            elif len(c.terms) == 1:
                parts.append(f"{coeff} {basis}")
            else:
                parts.append(f"({coeff}) {basis}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"HeckeElt({self})"

    def to_json(self) -> dict[str, str]:
        return {str(w): str(self._terms[w]) for w in self.support()}


class GroupAlgElt:
    """Element of the integral group ring ``Z[W]``."""

    __slots__ = ("group", "_terms")

    def __init__(self, group: CoxeterGroup, terms: Mapping[CoxElement, int] | None = None):
        self.group = group
        self._terms = {w: int(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w: CoxElement) -> GroupAlgElt:
        return cls(w.group, {w: 1})

    @property
    def terms(self) -> dict[CoxElement, int]:
        return dict(self._terms)

    def __add__(self, other: GroupAlgElt) -> GroupAlgElt:
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return GroupAlgElt(self.group, out)

    def __neg__(self):
        return GroupAlgElt(self.group, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupAlgElt(self.group, {w: c * other for w, c in self._terms.items()})
        out: dict[CoxElement, int] = {}
        for x, a in self._terms.items():
            for y, b in other._terms.items():
                xy = x * y
                out[xy] = out.get(xy, 0) + a * b
        return GroupAlgElt(self.group, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupAlgElt(self.group, {self.group.identity: other})
        return isinstance(other, GroupAlgElt) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms, key=CoxElement.sort_key):
            c = self._terms[w]
            name = f"e[{w}]" if w.word else ""
            if not name:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{c} {name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"GroupAlgElt({self})"


# ----- generator-level data ---------------------------------------------
def delta_s_inverse(group: CoxeterGroup, s: int) -> HeckeElt:
    """``delta_s^-1 = delta_s + (v - v^-1)``."""
    return HeckeElt(group, {group.element((s,)): _ONE, group.identity: _V - _VINV})


def bar_delta(w: CoxElement) -> HeckeElt:
    group = w.group
    cache = _bar_cache(group)
    hit = cache.get(w)
    if hit is not None:
        return hit
    out = HeckeElt.one(group)
    for s in w.word:
        out = out * delta_s_inverse(group, s)
    cache[w] = out
    return out


def _bar_cache(group: CoxeterGroup) -> dict:
    if not hasattr(group, "_hecke_bar_cache"):
        group._hecke_bar_cache = {}
    return group._hecke_bar_cache


def delta(group: CoxeterGroup, word: Iterable[int] | str) -> HeckeElt:
    w = group.parse(word) if isinstance(word, str) else group.element(word)
    return HeckeElt.delta(w)


# ----- Kazhdan-Lusztig basis --------------------------------------------
class KLBasis:
    """Memoized KL basis of one Coxeter group."""

    def __init__(self, group: CoxeterGroup):
        self.group = group
        self._table: dict[CoxElement, HeckeElt] = {group.identity: HeckeElt.one(group)}
        self._lock = threading.RLock()

    def b_s(self, s: int) -> HeckeElt:
        g = self.group
        return HeckeElt(g, {g.element((s,)): _ONE, g.identity: _V})

    def __call__(self, w: CoxElement) -> HeckeElt:
        hit = self._table.get(w)
        if hit is not None:
            return hit
        with self._lock:
            hit = self._table.get(w)
            if hit is not None:
                return hit
            s = w.word[-1]
            prev = self(self.group.element(w.word[:-1]))
            candidate = prev * self.b_s(s)
            # remove lower terms whose coefficient is not in vZ[v], longest first
            while True:
                bad = [
                    x for x, p in candidate._terms.items()
                    if x != w and p.min_degree() <= 0
                ]
                if not bad:
                    break
                x = min(bad, key=lambda y: (-len(y.word), y.word))
                p = candidate.coeff(x)
                nonpos = LaurentPoly({e: c for e, c in p if e <= 0})
                neg = LaurentPoly({e: c for e, c in p if e < 0})
                candidate = candidate - self(x).scale(nonpos + neg.bar())
            self._table[w] = candidate
            return candidate

    def mu(self, x: CoxElement, w: CoxElement) -> int:
        """Coefficient of ``v`` in the ``delta_x`` coefficient of ``b_w``."""
        return self(w).coeff(x).coeff(1)


def kl_basis(group: CoxeterGroup) -> KLBasis:
    if not hasattr(group, "_kl_basis"):
        group._kl_basis = KLBasis(group)
    return group._kl_basis


def kl_element(w: CoxElement) -> HeckeElt:
    return kl_basis(w.group)(w)


def t_element(w: CoxElement) -> HeckeElt:
    return kl_element(w).iota()


def specialize_v1(a: HeckeElt) -> GroupAlgElt:
    return a.specialize_v1()
