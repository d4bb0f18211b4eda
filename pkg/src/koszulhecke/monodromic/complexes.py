"""Left- and free-monodromic complexes, the Hom differential, chain maps,
homotopies, monodromy, cones and forgetful functors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from ..bimod import BimodMap, DSum, dot_down, dot_up, hom_basis, quotient_eq, B, character
from ..hecke import HeckeElt
from ..linalg import solve_columns
from ..polyalg import act_generator, monomial_exponents, poly_ring, subsets
from ..report import Report
from .conventions import current
from .uhom import HSeq, UHomElt, dual_bases, theta


class ComplexError(ValueError):
    pass


@dataclass
class LMComplex:
    seq: HSeq
    delta: UHomElt
    name: str = ""

    def __post_init__(self):
        if self.delta.src != self.seq or self.delta.tgt != self.seq:
            raise ComplexError("differential must be an endomorphism of the sequence")
        if any(any(k[1]) for k in self.delta.terms):
            raise ComplexError("left-monodromic differentials have no Sym(V) part")

    @property
    def h(self):
        return self.seq.h


@dataclass
class FMComplex:
    seq: HSeq
    delta: UHomElt
    name: str = ""

    def __post_init__(self):
        if self.delta.src != self.seq or self.delta.tgt != self.seq:
            raise ComplexError("differential must be an endomorphism of the sequence")

    @property
    def h(self):
        return self.seq.h


Complex = LMComplex | FMComplex


def _residual(x: UHomElt) -> str | None:
    return None if x.is_zero() else x.render()


# ----- structure equations ------------------------------------------------
def lm_residual(C: Complex) -> UHomElt:
    """``delta o delta + kappa(delta)``."""
    return C.delta.compose(C.delta) + C.delta.kappa()


def lm_check(C: LMComplex, item: str = "") -> Report:
    rep = Report(item or C.name or "LM complex", convention=current().identifier)
    rep.add("bidegree (1,0)", C.delta.is_homogeneous_of((1, 0)), str(sorted(C.delta.bidegrees())))
    r = lm_residual(C)
    rep.add("delta o delta + kappa(delta) = 0", r.is_zero(), _residual(r))
    return rep


def fm_residual(C: FMComplex) -> UHomElt:
    """``delta o delta + kappa(delta) - Theta``."""
    return C.delta.compose(C.delta) + C.delta.kappa() - theta(C.seq)


def fm_check(C: FMComplex, item: str = "") -> Report:
    rep = Report(item or C.name or "FM complex", convention=current().identifier)
    rep.add("bidegree (1,0)", C.delta.is_homogeneous_of((1, 0)), str(sorted(C.delta.bidegrees())))
    r = fm_residual(C)
    rep.add("delta o delta + kappa(delta) = Theta", r.is_zero(), _residual(r))
    return rep


def classical_square(C: Complex) -> UHomElt:
    """``delta o delta`` for a differential read as a genuine complex."""
    return C.delta.compose(C.delta)


# ----- Hom complexes ----------------------------------------------------
def d_uhom(F: Complex, G: Complex, f: UHomElt) -> UHomElt:
    """``dG o f - (-1)^{|f|} f o dF + kappa(f)``, termwise in the chain degree."""
    conv = current()
    out = G.delta.compose(f) + f.kappa()
    by_chain: dict[int, UHomElt] = {}
    for k, g in f.terms.items():
        c = UHomElt.term_bidegree(k)[0]
        by_chain.setdefault(c, UHomElt(f.src, f.tgt))
        by_chain[c]._accumulate(k, g)
    for c, part in by_chain.items():
        sign = -((-1) ** c) if conv.d_uhom_minus else (-1) ** c
        out = out + part.compose(F.delta).scale(sign)
    return out


def is_chain_map(F: Complex, G: Complex, f: UHomElt) -> bool:
    return d_uhom(F, G, f).is_zero()


def homotopy_space(F: Complex, G: Complex, bideg: tuple[int, int], with_sym: bool = False) -> list[UHomElt]:
    """A field basis of the elements of ``uHom(F, G)`` of the given bidegree
    (exterior degree up to ``dim V*``; ``Sym(V)`` parts only if ``with_sym``)."""
    a, b = bideg
    h = F.h
    n = h.dim
    out = []
    for p in F.seq.positions():
        for q in G.seq.positions():
            for k in range(n + 1):
                d = a - k - (q - p)
                twice_m = d + 2 * k - b
                if twice_m < 0 or twice_m % 2:
                    continue
                m = twice_m // 2
                if m and not with_sym:
                    continue
                maps = hom_basis(F.seq[p], G.seq[q], d)
                if not maps:
                    continue
                for lam in subsets(n, k):
                    for sym in monomial_exponents(n, m):
                        for g in maps:
                            out.append(UHomElt.term(F.seq, G.seq, p, q, g, lam, sym))
    return out


def find_homotopy(F: Complex, G: Complex, f: UHomElt, with_sym: bool | None = None) -> UHomElt | None:
    """Some ``h`` with ``d(h) = f``, or ``None``; the search is complete within
    the finite space of homogeneous elements of the forced bidegree."""
    if f.is_zero():
        return UHomElt(F.seq, G.seq)
    a, b = f.bidegree()
    if with_sym is None:
        with_sym = isinstance(F, FMComplex) or isinstance(G, FMComplex)
    basis = homotopy_space(F, G, (a - 1, b), with_sym)
    cols = [d_uhom(F, G, x).coords() for x in basis]
    coeffs = solve_columns(cols, f.coords(), F.h.field)
    if coeffs is None:
        return None
    out = UHomElt(F.seq, G.seq)
    for c, x in zip(coeffs, basis):
        if c:
            out = out + x.scale(c)
    return out


# ----- monodromy and right multiplication ---------------------------------
def monodromy_mu(x: Sequence, C: LMComplex) -> UHomElt:
    """``mu(x) = x -| delta``."""
    return C.delta.cap(x)


def right_mult_uhom(F: HSeq, e: Sequence) -> UHomElt:
    """``id_F * e`` for a covector ``e`` given by coordinates."""
    ring = poly_ring(F.h)
    ep = ring.linear(e)
    out = UHomElt(F, F)
    for p in F.positions():
        out = out + UHomElt.term(F, F, p, p, BimodMap.right_mult(F[p], ep))
    return out


# ----- cones --------------------------------------------------------------
def _embed(f: BimodMap, src: DSum, tgt: DSum, src_off: int, tgt_off: int) -> BimodMap:
    entries = {((t[0] + tgt_off, t[1]), (s[0] + src_off, s[1])): p for (t, s), p in f.entries.items()}
    return BimodMap(src, tgt, f.shift, entries)


def cone(f: UHomElt, F: LMComplex, G: LMComplex, check: bool = True) -> LMComplex:
    """``Cone(f)``: position ``i`` holds ``G^i + F^{i+1}``."""
    if check and not is_chain_map(F, G, f):
        raise ComplexError("cone needs a chain map")
    conv = current()
    h = F.h
    positions = set(G.seq.positions()) | {p - 1 for p in F.seq.positions()}
    seq = HSeq(h, {i: G.seq[i] + F.seq[i + 1] for i in positions})
    out = UHomElt(seq, seq)
    off = {i: len(G.seq[i].summands) for i in positions | {i + 1 for i in positions}}

    def put(key, g: BimodMap, sp: int, tp: int, so: int, to: int, sign: int = 1):
        lam, sym, _, _, d = key
        emb = _embed(g, seq[sp], seq[tp], so, to)
        out._accumulate((lam, sym, sp, tp, d), emb if sign == 1 else -emb)

    for key, g in G.delta.terms.items():
        put(key, g, key[2], key[3], 0, 0)
    for key, g in f.terms.items():
        p, q = key[2], key[3]
        put(key, g, p - 1, q, off[p - 1], 0)
    for key, g in F.delta.terms.items():
        lam, p, q = key[0], key[2], key[3]
        sign = (-1) ** len(lam)
        if conv.cone_minus:
            sign = -sign
        put(key, g, p - 1, q - 1, off[p - 1], off[q - 1], sign)
    name = f"Cone({F.name or 'F'} -> {G.name or 'G'})"
    return LMComplex(seq, out, name)


# ----- forgetful functors ---------------------------------------------------
def forget_fm_to_lm(C: FMComplex) -> LMComplex:
    return LMComplex(C.seq, C.delta.eval_sym_zero(), C.name)


def forget_kb_to_lm(seq: HSeq, delta: UHomElt, name: str = "") -> LMComplex:
    if any(k[0] or any(k[1]) for k in delta.terms):
        raise ComplexError("a genuine complex has no Lambda or Sym parts")
    return LMComplex(seq, delta, name)


@dataclass
class QuotientComplex:
    """A complex in the left quotient: adjacent components only."""

    seq: HSeq
    maps: dict[int, BimodMap]  # p -> (F^p -> F^{p+1})

    def square_vanishes(self) -> bool:
        for p, f in self.maps.items():
            g = self.maps.get(p + 1)
            if g is None:
                continue
            comp = g.compose(f)
            if not quotient_eq(comp, BimodMap.zero(comp.source, comp.target, comp.shift)):
                return False
        return True

    def equals(self, other: QuotientComplex) -> bool:
        if self.seq != other.seq:
            return False
        for p in set(self.maps) | set(other.maps):
            a = self.maps.get(p) or BimodMap.zero(self.seq[p], self.seq[p + 1])
            b = other.maps.get(p) or BimodMap.zero(self.seq[p], self.seq[p + 1])
            if not quotient_eq(a, b):
                return False
        return True


def forget_lm_to_kb(C: LMComplex) -> QuotientComplex:
    maps: dict[int, BimodMap] = {}
    for (lam, sym, p, q, d), g in C.delta.terms.items():
        if lam or any(sym):
            continue
        if q != p + 1 or d != 0:
            raise ComplexError("classical part has a non-adjacent component")
        maps[p] = g if p not in maps else maps[p] + g
    return QuotientComplex(C.seq, maps)


# ----- characters -----------------------------------------------------------
def character_class(C: Complex | HSeq) -> HeckeElt:
    """``sum_i (-1)^i [F^i]``."""
    seq = C if isinstance(C, HSeq) else C.seq
    total = HeckeElt.zero(seq.h.group)
    for p in seq.positions():
        c = character(seq[p])
        total = total + (c if p % 2 == 0 else -c)
    return total


# ----- splitting lemma ------------------------------------------------------
def fm_from_split(C: LMComplex, deltas: Sequence[UHomElt], basis: Sequence[Sequence] | None = None) -> FMComplex:
    """``delta_LM (x) 1 + sum_i delta_i (x) e_check_i``."""
    from ..polyalg import dual_poly_ring

    _, duals = dual_bases(C.h, basis)
    vring = dual_poly_ring(C.h)
    total = C.delta
    for di, ec in zip(deltas, duals):
        for e, c in vring.linear(ec).items():
            total = total + di.tensor_sym(e).scale(c)
    return FMComplex(C.seq, total, C.name)


def lemma_split_check(C: LMComplex, deltas: Sequence[UHomElt], basis: Sequence[Sequence] | None = None,
                      item: str = "") -> Report:
    """Compare the FM equation for the assembled differential with the three
    conditions on the ``delta_i``; both sides are evaluated independently."""
    rep = Report(item or f"split lemma on {C.name or 'complex'}", convention=current().identifier)
    es, _ = dual_bases(C.h, basis)
    fm = fm_from_split(C, deltas, basis)
    fm_rep = fm_check(fm)
    fm_ok = fm_rep.ok
    rep.add("FM equation for assembled delta", fm_ok, fm_rep.checks[-1].residual)

    side_b = True
    for i, (di, e) in enumerate(zip(deltas, es)):
        r = d_uhom(C, C, di) - right_mult_uhom(C.seq, e)
        ok = r.is_zero() and di.is_homogeneous_of((1, 2))
        side_b &= ok
        rep.add(f"d(delta_{i}) = id * e_{i}", ok, _residual(r))
    for i, di in enumerate(deltas):
        r = di.compose(di)
        side_b &= r.is_zero()
        rep.add(f"delta_{i} o delta_{i} = 0", r.is_zero(), _residual(r))
    for i, j in itertools.combinations(range(len(deltas)), 2):
        r = deltas[i].compose(deltas[j]) + deltas[j].compose(deltas[i])
        side_b &= r.is_zero()
        rep.add(f"delta_{i} o delta_{j} + delta_{j} o delta_{i} = 0", r.is_zero(), _residual(r))
    rep.add("both sides agree", fm_ok == side_b, f"FM equation {'holds' if fm_ok else 'fails'}, "
            f"conditions {'hold' if side_b else 'fail'}")
    rep.fm_side = fm_ok  # type: ignore[attr-defined]
    rep.condition_side = side_b  # type: ignore[attr-defined]
    return rep


# ----- polynomial forcing ---------------------------------------------------
def polynomial_forcing_check(h, s: int, item: str = "") -> Report:
    """``id_{B_s} * e = s(e) . id_{B_s} + e(coroot_s) (dot_down o dot_up)`` for
    each basis covector ``e``."""
    ring = poly_ring(h)
    name = h.generator_names[s]
    rep = Report(item or f"polynomial forcing ({name})", convention=current().identifier)
    Bs = B(h, s)
    dd = dot_down(h, s).twist(2).compose(dot_up(h, s)).shift_target(-2)
    for i, e in enumerate(ring.gens()):
        lhs = BimodMap.right_mult(Bs, e)
        rhs = BimodMap.left_mult(Bs, act_generator(h, s, e)) + dd.scale(h.coroots[s][i])
        diff = lhs - rhs
        rep.add(f"right mult by {h.vstar_names[i]} on B_{name}", diff.is_zero(), diff.render())
    return rep
