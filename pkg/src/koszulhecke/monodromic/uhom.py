"""Sequences of bimodules and the bigraded Hom spaces
``Lambda(V*) (x) uHom(F, G) (x) Sym(V)``.

A term is keyed by ``(lam, sym, p, q, d)``: an exterior monomial ``lam``
(increasing index tuple over the ``V*`` basis), a ``Sym(V)`` exponent vector,
source position ``p``, target position ``q`` and internal shift ``d``; its
value is a ``BimodMap`` ``F^p -> G^q(d)``.  The bidegree of such a term is
``(q - p + d + |lam|, d + 2|lam| - 2|sym|)``.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from ..bimod import BimodMap, DSum
from ..fields import render_scalar
from ..polyalg import Poly, _normalize, dual_poly_ring, poly_ring
from .conventions import current


class HSeq:
    """Finite-support sequence ``position -> DSum``."""

    def __init__(self, h, entries: Mapping[int, DSum]):
        self.h = h
        self.entries = {int(p): M for p, M in entries.items() if not M.is_zero()}

    def __getitem__(self, p: int) -> DSum:
        return self.entries.get(p, DSum(self.h, []))

    def positions(self) -> list[int]:
        return sorted(self.entries)

    def shifted(self, k: int) -> HSeq:
        """``F[k]``: position ``p`` holds ``F^{p+k}``."""
        return HSeq(self.h, {p - k: M for p, M in self.entries.items()})

    def __eq__(self, other):
        return isinstance(other, HSeq) and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(sorted(self.entries.items())))

    def label(self) -> str:
        return ", ".join(f"{p}: {self.entries[p].label()}" for p in self.positions())

    def __repr__(self):
        return f"HSeq({self.label()})"


Key = tuple  # (lam, sym, p, q, d)


class UHomElt:
    def __init__(self, src: HSeq, tgt: HSeq, terms: Mapping[Key, BimodMap] | None = None):
        self.src = src
        self.tgt = tgt
        self.h = src.h
        self.terms: dict[Key, BimodMap] = {}
        for k, f in (terms or {}).items():
            self._accumulate(k, f)

    def _accumulate(self, key: Key, f: BimodMap):
        if f.is_zero():
            return
        old = self.terms.get(key)
        new = f if old is None else old + f
        if new.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    # ----- construction -----------------------------------------------
    @classmethod
    def zero(cls, src: HSeq, tgt: HSeq | None = None) -> UHomElt:
        return cls(src, tgt if tgt is not None else src)

    @classmethod
    def term(cls, src: HSeq, tgt: HSeq, p: int, q: int, f: BimodMap,
             lam: Sequence[int] = (), sym: Sequence[int] | None = None) -> UHomElt:
        if f.source != src[p] or f.target != tgt[q]:
            raise ValueError(
                f"component {p}->{q} has shape {f.source.label()} -> {f.target.label()}, "
                f"expected {src[p].label()} -> {tgt[q].label()}"
            )
        sign, lam_n = _normalize(tuple(lam))
        if lam_n is None:
            return cls(src, tgt)
        n = src.h.dim
        sym = tuple(sym) if sym is not None else (0,) * n
        g = f if sign == 1 else -f
        return cls(src, tgt, {(lam_n, sym, p, q, f.shift): g})

    @classmethod
    def with_sym(cls, src: HSeq, tgt: HSeq, p: int, q: int, f: BimodMap,
                 lam: Sequence[int] = (), sym: Poly | None = None) -> UHomElt:
        """Term whose ``Sym(V)`` factor is an arbitrary polynomial."""
        if sym is None:
            return cls.term(src, tgt, p, q, f, lam)
        out = cls(src, tgt)
        for e, c in sym.items():
            out = out + cls.term(src, tgt, p, q, f.scale(c), lam, e)
        return out

    @classmethod
    def identity(cls, F: HSeq) -> UHomElt:
        out = cls(F, F)
        for p in F.positions():
            out = out + cls.term(F, F, p, p, BimodMap.identity(F[p]))
        return out

    # ----- arithmetic -------------------------------------------------
    def _same(self, other: UHomElt):
        if self.src != other.src or self.tgt != other.tgt:
            raise ValueError("UHom elements over different sequences")

    def __add__(self, other: UHomElt) -> UHomElt:
        self._same(other)
        out = UHomElt(self.src, self.tgt, self.terms)
        for k, f in other.terms.items():
            out._accumulate(k, f)
        return out

    def __neg__(self):
        return UHomElt(self.src, self.tgt, {k: -f for k, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> UHomElt:
        return UHomElt(self.src, self.tgt, {k: f.scale(c) for k, f in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def compose(self, other: UHomElt) -> UHomElt:
        """``self o other``; ``other: F -> G`` and ``self: G -> H``."""
        if other.tgt != self.src:
            raise ValueError("cannot compose: sequences do not match")
        conv = current()
        out = UHomElt(other.src, self.tgt)
        by_src: dict[int, list] = {}
        for k1, f1 in self.terms.items():
            by_src.setdefault(k1[2], []).append((k1, f1))
        for (lam2, sym2, p2, q2, d2), f2 in other.terms.items():
            for (lam1, sym1, p1, q1, d1), f1 in by_src.get(q2, ()):
                sign, lam = _normalize(lam1 + lam2)
                if lam is None:
                    continue
                chain1 = q1 - p1 + d1
                if conv.koszul_compose and (len(lam2) * chain1) % 2:
                    sign = -sign
                g = f1.compose(f2)
                if g.is_zero():
                    continue
                sym = tuple(a + b for a, b in zip(sym1, sym2))
                out._accumulate((lam, sym, p2, q1, d1 + d2), g if sign == 1 else -g)
        return out

    __matmul__ = compose

    # ----- structure maps ---------------------------------------------
    def kappa(self) -> UHomElt:
        """Koszul differential on the ``Lambda`` factor; each removed generator
        becomes left multiplication on the bimodule map."""
        conv = current()
        ring = poly_ring(self.h)
        out = UHomElt(self.src, self.tgt)
        for (lam, sym, p, q, d), f in self.terms.items():
            for j, i in enumerate(lam):
                sign = conv.kappa_sign * ((-1) ** j if conv.kappa_alternating else 1)
                g = f.lmul(ring.gen(i))
                rest = lam[:j] + lam[j + 1:]
                out._accumulate((rest, sym, p, q, d + 2), g if sign == 1 else -g)
        return out

    def cap(self, x: Sequence) -> UHomElt:
        """Contraction of the ``Lambda`` factor with ``x in V``."""
        conv = current()
        field = self.h.field
        out = UHomElt(self.src, self.tgt)
        for (lam, sym, p, q, d), f in self.terms.items():
            for j, i in enumerate(lam):
                c = field(x[i])
                if not c:
                    continue
                if conv.cap_alternating and j % 2:
                    c = -c
                rest = lam[:j] + lam[j + 1:]
                out._accumulate((rest, sym, p, q, d), f.scale(c))
        return out

    def eval_sym_zero(self) -> UHomElt:
        """Apply the counit of ``Sym(V)``."""
        zero = (0,) * self.h.dim
        return UHomElt(self.src, self.tgt, {k: f for k, f in self.terms.items() if k[1] == zero})

    def lambda_free(self) -> UHomElt:
        return UHomElt(self.src, self.tgt, {k: f for k, f in self.terms.items() if not k[0]})

    def classical(self) -> UHomElt:
        """Terms with trivial ``Lambda`` and ``Sym`` parts."""
        zero = (0,) * self.h.dim
        return UHomElt(self.src, self.tgt, {k: f for k, f in self.terms.items() if not k[0] and k[1] == zero})

    def sym_coefficient(self, i: int) -> UHomElt:
        """Coefficient of the ``i``-th ``Sym(V)`` generator (terms linear in it)."""
        n = self.h.dim
        unit = tuple(1 if j == i else 0 for j in range(n))
        zero = (0,) * n
        return UHomElt(self.src, self.tgt, {(k[0], zero) + k[2:]: f for k, f in self.terms.items() if k[1] == unit})

    def lambda_coefficient(self, lam: Sequence[int]) -> UHomElt:
        lam = tuple(lam)
        return UHomElt(self.src, self.tgt, {((),) + k[1:]: f for k, f in self.terms.items() if k[0] == lam})

    def tensor_sym(self, exps: Sequence[int]) -> UHomElt:
        """Multiply the ``Sym(V)`` factor by a monomial."""
        out = UHomElt(self.src, self.tgt)
        for (lam, sym, p, q, d), f in self.terms.items():
            out._accumulate((lam, tuple(a + b for a, b in zip(sym, exps)), p, q, d), f)
        return out

    # ----- queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, UHomElt):
            return NotImplemented
        return self.src == other.src and self.tgt == other.tgt and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @staticmethod
    def term_bidegree(key: Key) -> tuple[int, int]:
        lam, sym, p, q, d = key
        return (q - p + d + len(lam), d + 2 * len(lam) - 2 * sum(sym))

    def bidegrees(self) -> set[tuple[int, int]]:
        return {self.term_bidegree(k) for k in self.terms}

    def bidegree(self) -> tuple[int, int] | None:
        """The common bidegree, ``None`` for zero; raises if inhomogeneous."""
        degs = self.bidegrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element with bidegrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous_of(self, bideg: tuple[int, int]) -> bool:
        return all(self.term_bidegree(k) == tuple(bideg) for k in self.terms) and all(
            f.is_homogeneous() for f in self.terms.values()
        )

    def component(self, p: int, q: int, lam: Sequence[int] = (), sym: Sequence[int] | None = None) -> BimodMap | None:
        """The (single) map at the given position pair and ``Lambda``/``Sym`` monomials."""
        sym = tuple(sym) if sym is not None else (0,) * self.h.dim
        hits = [f for k, f in self.terms.items() if k[0] == tuple(lam) and k[1] == sym and k[2] == p and k[3] == q]
        if not hits:
            return None
        if len(hits) > 1:
            raise ValueError("several internal shifts at one component")
        return hits[0]

    def coords(self) -> dict:
        """Flat coordinates for linear algebra."""
        out = {}
        for k, f in self.terms.items():
            for ek, poly in f.entries.items():
                for e, c in poly.items():
                    out[(k, ek, e)] = c
        return out

    # ----- rendering --------------------------------------------------
    def render_terms(self) -> list[str]:
        names = self.h.vstar_names
        vnames = self.h.v_names
        lines = []
        for key in sorted(self.terms, key=lambda k: (k[2], k[3], len(k[0]), k[0], k[1], k[4])):
            lam, sym, p, q, d = key
            f = self.terms[key]
            body = f.render()
            if lam:
                body = f"{'^'.join(names[i] for i in lam)} (x) {body}"
            if any(sym):
                mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(vnames, sym) if k)
                body = f"{body} (x) {mono}"
            lines.append(f"{p}->{q}: {body}")
        return lines

    def render(self) -> str:
        if not self.terms:
            return "0"
        if len(self.terms) == 1:
            (key,) = self.terms
            lam, sym, _, _, _ = key
            if not lam and not any(sym):
                return self.terms[key].render()
        return "; ".join(self.render_terms())

    def __repr__(self):
        return f"UHomElt({self.render()})"


def theta(F: HSeq, basis: Sequence[Sequence] | None = None) -> UHomElt:
    """``Theta = sum_i (id_F * e_i) (x) e_check_i``.

    ``basis`` optionally gives the ``e_i`` as coordinate vectors in ``V*``;
    the dual basis ``e_check_i`` of ``V`` is then solved for exactly.
    """
    from ..bimod import BimodMap as BM

    h = F.h
    ring = poly_ring(h)
    vring = dual_poly_ring(h)
    es, duals = dual_bases(h, basis)
    sign = current().theta_sign
    out = UHomElt(F, F)
    for e, ec in zip(es, duals):
        ep = ring.linear(e)
        ecp = vring.linear(ec)
        for p in F.positions():
            rm = BM.right_mult(F[p], ep)
            out = out + UHomElt.with_sym(F, F, p, p, rm.scale(sign), (), ecp)
    return out


def dual_bases(h, basis: Sequence[Sequence] | None = None) -> tuple[list[tuple], list[tuple]]:
    """Bases ``e_i`` of ``V*`` and ``e_check_i`` of ``V`` with ``e_i(e_check_j) = [i == j]``."""
    from ..linalg import solve

    n, f = h.dim, h.field
    if basis is None:
        es = [tuple(f.one if i == j else f.zero for j in range(n)) for i in range(n)]
    else:
        es = [tuple(f(x) for x in e) for e in basis]
    duals = []
    for j in range(n):
        rhs = [f.one if i == j else f.zero for i in range(n)]
        x = solve([list(e) for e in es], rhs, n, f)
        if x is None:
            raise ValueError("the given covectors do not form a basis of V*")
        duals.append(tuple(x))
    return es, duals


def lam_label(h, lam: Sequence[int]) -> str:
    return "^".join(h.vstar_names[i] for i in lam) or "1"


def scalar_label(c) -> str:
    return render_scalar(c)
