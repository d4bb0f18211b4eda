"""Worked objects as catalog entries, each wired to its expected checks.

``build(id, h)`` constructs the object exactly as drawn; ``verify(id, field)``
runs the entry's checks and returns a ``Report``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bimod import (
    BimodMap,
    B,
    BS,
    R_obj,
    dot_down,
    dot_up,
    hom_dim,
    split_bsbs,
)
from .fields import FieldSpec, parse_field
from .hecke import HeckeElt, kl_basis, t_element
from .laurent import LaurentPoly
from .monodromic.complexes import (
    FMComplex,
    LMComplex,
    character_class,
    classical_square,
    cone,
    d_uhom,
    find_homotopy,
    fm_check,
    forget_fm_to_lm,
    forget_kb_to_lm,
    forget_lm_to_kb,
    is_chain_map,
    lemma_split_check,
    lm_check,
    monodromy_mu,
    polynomial_forcing_check,
    right_mult_uhom,
)
from .monodromic.conventions import current
from .monodromic.lifting import FOUND, NONE, lift_search
from .monodromic.uhom import HSeq, UHomElt, dual_bases, theta
from .polyalg import act_generator, dual_poly_ring, koszul_exactness_check, poly_ring
from .realization import Realization, RealizationError, builtin
from .report import Report


class CatalogError(KeyError):
    pass


def _gen(h, s) -> int:
    return h.generator_names.index(s) if isinstance(s, str) else s


def _need_rank(h: Realization, rank: int, item: str):
    if h.rank != rank:
        raise RealizationError(f"{item} needs a rank {rank} realization, got rank {h.rank}")


def scalar_map(src, tgt, d: int, poly) -> BimodMap:
    """``poly * id`` between one-summand ``R``-objects, as ``src -> tgt(d)``."""
    return BimodMap(src, tgt, d, {((0, ()), (0, ())): poly})


def _lin_terms(h, F: HSeq, p: int, q: int, f: BimodMap, covector) -> UHomElt:
    """``e (x) f`` for a covector ``e`` written in the ``V*`` basis."""
    out = UHomElt(F, F)
    for j, c in enumerate(covector):
        if c:
            out = out + UHomElt.term(F, F, p, q, f.scale(c), lam=(j,))
    return out


def _coords(poly, n):
    return tuple(poly.coeff(tuple(1 if j == i else 0 for j in range(n))) for i in range(n))


# ----- the rank-one style objects --------------------------------------
def ts_sequence(h, s=0) -> HSeq:
    s = _gen(h, s)
    return HSeq(h, {-1: R_obj(h, -1), 0: B(h, s), 1: R_obj(h, 1)})


def ts_classical(h, s=0) -> UHomElt:
    """The two dot maps alone."""
    s = _gen(h, s)
    F = ts_sequence(h, s)
    return UHomElt.term(F, F, -1, 0, dot_down(h, s)) + UHomElt.term(F, F, 0, 1, dot_up(h, s))


def ts_lm(h, s=0) -> LMComplex:
    """``T_s`` with the extra component ``-alpha_s (x) id``."""
    s = _gen(h, s)
    F = ts_sequence(h, s)
    extra = _lin_terms(h, F, -1, 1, scalar_map(R_obj(h, -1), R_obj(h, 1), -2, poly_ring(h).one),
                       [-c for c in h.roots[s]])
    return LMComplex(F, ts_classical(h, s) + extra, f"T_{h.generator_names[s]}")


def tid_seq(h) -> HSeq:
    return HSeq(h, {0: R_obj(h)})


def tid_lm(h) -> LMComplex:
    F = tid_seq(h)
    return forget_kb_to_lm(F, UHomElt(F, F), "T_id")


def fm_unit(h, basis=None) -> FMComplex:
    """``R`` with the single loop ``theta = sum e_i (x) id (x) e_check_i``."""
    F = tid_seq(h)
    return FMComplex(F, fm_unit_deltas(h, basis)[1], "T~_id")


def fm_unit_deltas(h, basis=None) -> tuple[list[UHomElt], UHomElt]:
    F = tid_seq(h)
    R = R_obj(h)
    es, duals = dual_bases(h, basis)
    vring = dual_poly_ring(h)
    idR = BimodMap.identity(R)
    deltas = [_lin_terms(h, F, 0, 0, idR, e) for e in es]
    total = UHomElt(F, F)
    for di, ec in zip(deltas, duals):
        for ex, c in vring.linear(ec).items():
            total = total + di.tensor_sym(ex).scale(c)
    return deltas, total


def fm_tilt_deltas(h, s=0, basis=None) -> list[UHomElt]:
    """The ``e_check_i`` coefficients of the tilting differential."""
    s = _gen(h, s)
    F = ts_sequence(h, s)
    ring = poly_ring(h)
    es, _ = dual_bases(h, basis)
    out = []
    for e in es:
        se = _coords(act_generator(h, s, ring.linear(e)), h.dim)
        di = _lin_terms(h, F, 1, 1, BimodMap.identity(R_obj(h, 1)), se)
        di = di + _lin_terms(h, F, 0, 0, BimodMap.identity(B(h, s)), se)
        di = di + _lin_terms(h, F, -1, -1, BimodMap.identity(R_obj(h, -1)), e)
        k = h.pair(e, h.coroots[s])
        if k:
            down = dot_down(h, s).twist(2).shift_target(-2)  # R(1) -> B_s, shift 2
            di = di + UHomElt.term(F, F, 1, 0, down.scale(k))
        out.append(di)
    return out


def fm_tilt(h, s=0, basis=None) -> FMComplex:
    from .monodromic.complexes import fm_from_split

    s = _gen(h, s)
    C = ts_lm(h, s)
    fm = fm_from_split(C, fm_tilt_deltas(h, s, basis), basis)
    fm.name = f"T~_{h.generator_names[s]}"
    return fm


# ----- SL3 objects ---------------------------------------------------------
def _sl3_maps(h):
    s, t = 0, 1
    r = poly_ring(h)
    return {
        "RBs": dot_down(h, s),  # R(-1) -> B_s
        "BsRBt": dot_down(h, t).twist(2).compose(dot_up(h, s)),  # B_s -> B_t(2)
        "BtR": dot_up(h, t).twist(2),  # B_t(2) -> R(3)
        "BsR": dot_up(h, s).shift_target(2),  # B_s -> R(3), shift -2
        "RBt": dot_down(h, t).shift_target(2),  # R(-1) -> B_t(2), shift -2
        "id": scalar_map(R_obj(h, -1), R_obj(h, 3), -4, r.one),
    }


def sl3_F(h) -> LMComplex:
    """The four-term complex with components up to chain degree 3."""
    _need_rank(h, 2, "LM-sl3-F")
    m = _sl3_maps(h)
    F = HSeq(h, {-1: R_obj(h, -1), 0: B(h, 0), 1: B(h, 1, 2), 2: R_obj(h, 3)})
    d = (UHomElt.term(F, F, -1, 0, m["RBs"]) + UHomElt.term(F, F, 0, 1, m["BsRBt"])
         + UHomElt.term(F, F, 1, 2, m["BtR"])
         + UHomElt.term(F, F, 0, 2, -m["BsR"], lam=(1,))
         + UHomElt.term(F, F, -1, 1, -m["RBt"], lam=(0,))
         + UHomElt.term(F, F, -1, 2, m["id"], lam=(0, 1)))
    return LMComplex(F, d, "F")


def sl3_cone_map(h) -> tuple[LMComplex, LMComplex, UHomElt]:
    """Source, target and the chain map whose cone is ``sl3_F``."""
    _need_rank(h, 2, "LM-sl3-cone-map")
    m = _sl3_maps(h)
    Fs = HSeq(h, {0: R_obj(h, -1), 1: B(h, 0)})
    src = LMComplex(Fs, UHomElt.term(Fs, Fs, 0, 1, -m["RBs"]), "source")
    Gs = HSeq(h, {1: B(h, 1, 2), 2: R_obj(h, 3)})
    tgt = LMComplex(Gs, UHomElt.term(Gs, Gs, 1, 2, m["BtR"]), "target")
    f = (UHomElt.term(Fs, Gs, 1, 1, m["BsRBt"])
         + UHomElt.term(Fs, Gs, 1, 2, -m["BsR"], lam=(1,))
         + UHomElt.term(Fs, Gs, 0, 1, -m["RBt"], lam=(0,))
         + UHomElt.term(Fs, Gs, 0, 2, m["id"], lam=(0, 1)))
    return src, tgt, f


def no_lift_F(h) -> LMComplex:
    """``R(-2) -> B_s B_t -> R(2)`` with the extra ``-alpha_s (x) (alpha_t . id)``."""
    _need_rank(h, 2, "LM-sl3-no-lift")
    r = poly_ring(h)
    a_t = r.gen(1)
    F = HSeq(h, {-1: R_obj(h, -2), 0: BS(h, (0, 1)), 1: R_obj(h, 2)})
    dd = dot_down(h, 0).tensor(dot_down(h, 1))
    uu = dot_up(h, 0).tensor(dot_up(h, 1))
    d = (UHomElt.term(F, F, -1, 0, dd) + UHomElt.term(F, F, 0, 1, uu)
         + UHomElt.term(F, F, -1, 1, scalar_map(R_obj(h, -2), R_obj(h, 2), -2, -a_t), lam=(0,)))
    return LMComplex(F, d, "F")


def no_lift_witness(h, x) -> UHomElt:
    """``-alpha_t (x) (alpha_s(x) . id)``."""
    F = no_lift_F(h).seq
    r = poly_ring(h)
    c = h.pair(h.roots[0], x)
    return UHomElt.term(F, F, -1, 1, scalar_map(R_obj(h, -2), R_obj(h, 2), -4, r.const(-c)), lam=(1,))


# ----- displayed monodromy maps ------------------------------------------
def mu_ts_display(h, x, s=0) -> UHomElt:
    s = _gen(h, s)
    C = ts_lm(h, s)
    c = h.pair(h.roots[s], x)
    return UHomElt.term(C.seq, C.seq, -1, 1, scalar_map(R_obj(h, -1), R_obj(h, 1), -2, poly_ring(h).const(-c)))


def mu_sl3_display(h, x) -> UHomElt:
    C = sl3_F(h)
    F = C.seq
    m = _sl3_maps(h)
    a_s, a_t = (h.pair(h.roots[i], x) for i in (0, 1))
    star = (UHomElt.term(F, F, -1, 2, m["id"].scale(a_s), lam=(1,))
            - UHomElt.term(F, F, -1, 2, m["id"].scale(a_t), lam=(0,)))
    return (UHomElt.term(F, F, 0, 2, m["BsR"].scale(-a_t))
            + UHomElt.term(F, F, -1, 1, m["RBt"].scale(-a_s)) + star)


def mu_no_lift_display(h, x) -> UHomElt:
    F = no_lift_F(h).seq
    r = poly_ring(h)
    c = h.pair(h.roots[0], x)
    return UHomElt.term(F, F, -1, 1, scalar_map(R_obj(h, -2), R_obj(h, 2), -2, r.const(-c) * r.gen(1)))


def v_basis(h) -> list[tuple]:
    f = h.field
    return [tuple(f.one if i == j else f.zero for j in range(h.dim)) for i in range(h.dim)]


# ----- verifiers -----------------------------------------------------------
def _report(item: str) -> Report:
    return Report(item, convention=current().identifier)


def _v_ts(h) -> Report:
    rep = _report("Ts")
    C = ts_lm(h)
    F = C.seq
    sq = classical_square(LMComplex(F, ts_classical(h)))
    rep.add("delta o delta = alpha_s * id (not a complex)", sq.render() == "alpha_s * id", sq.render())
    rep.add("square vanishes in the left quotient", forget_lm_to_kb(C).square_vanishes())
    chi = character_class(F)
    rep.add("character = t_s", chi == t_element(h.group.parse("s")), str(chi))
    return rep


def _v_ts_as_complex(h) -> Report:
    rep = _report("Ts-as-complex")
    C = LMComplex(ts_sequence(h), ts_classical(h), "T_s")
    r = classical_square(C)
    rep.add("delta o delta = 0", r.is_zero(), r.render())
    return rep


def _v_tid(h) -> Report:
    rep = _report("Tid")
    C = tid_lm(h)
    rep.extend(lm_check(C))
    rep.add("mu(x) = 0", all(monodromy_mu(x, C).is_zero() for x in v_basis(h)))
    rep.add("character = 1", character_class(C) == HeckeElt.one(h.group))
    v = lift_search(C)
    rep.add("lift found (delta' = 0)", v.status == FOUND, v.status)
    return rep


def _v_dots(h) -> Report:
    rep = _report("dot-morphisms")
    s = 0
    up, down = dot_up(h, s), dot_down(h, s)
    rep.add("dot_up is a bimodule map", up.is_valid())
    rep.add("dot_down is a bimodule map", down.is_valid())
    comp = up.compose(down)
    rep.add("dot_up o dot_down = alpha_s * id", comp.render() == "alpha_s * id", comp.render())
    Bs, R = B(h, s), R_obj(h)
    rep.add("dim Hom(R, R) = 1", hom_dim(R, R) == 1)
    rep.add("dim Hom(B_s, R(1)) = 1", hom_dim(Bs, R_obj(h, 1)) == 1)
    rep.add("dim Hom(R(-1), B_s) = 1", hom_dim(R_obj(h, -1), Bs) == 1)
    rep.add("dim Hom(B_s, R) = 0", hom_dim(Bs, R) == 0)
    return rep


def _v_lm_sl2(h) -> Report:
    rep = _report("LM-sl2")
    C = ts_lm(h)
    rep.extend(lm_check(C))
    rep.add("quotient complex squares to zero", forget_lm_to_kb(C).square_vanishes())
    v = lift_search(C)
    rep.add("no genuine lift in search space", v.status == NONE, v.status)
    return rep


def _v_lm_sl3_F(h) -> Report:
    rep = _report("LM-sl3-F")
    C = sl3_F(h)
    rep.extend(lm_check(C))
    chi = character_class(C)
    g = h.group
    kl = kl_basis(g)
    v = LaurentPoly.monomial
    want = (HeckeElt.one(g).scale(-v(-1)) + kl.b_s(0) - kl.b_s(1).scale(v(2)) + HeckeElt.one(g).scale(v(3)))
    rep.add("character = -v^-1 + b_s - v^2 b_t + v^3", chi == want, str(chi))
    return rep


def _v_cone(h) -> Report:
    rep = _report("LM-sl3-cone-map")
    src, tgt, f = sl3_cone_map(h)
    rep.add("chain map", is_chain_map(src, tgt, f), d_uhom(src, tgt, f).render())
    rep.add("bidegree (0,0)", f.is_homogeneous_of((0, 0)))
    if not is_chain_map(src, tgt, f):
        return rep
    C = cone(f, src, tgt)
    F = sl3_F(h)
    rep.add("cone sequence = F sequence", C.seq == F.seq, C.seq.label())
    diff = C.delta - F.delta if C.seq == F.seq else None
    rep.add("cone differential = F differential", diff is not None and diff.is_zero(),
            diff.render() if diff is not None else "sequences differ")
    rep.add("character(cone) = character(target) - character(source)",
            character_class(C) == character_class(tgt) - character_class(src))
    return rep


def _check_mu(rep: Report, h, C: LMComplex, display) -> None:
    for i, x in enumerate(v_basis(h)):
        mu = monodromy_mu(x, C)
        want = display(h, x)
        rep.add(f"mu({h.v_names[i]}) matches the displayed chain map", (mu - want).is_zero(), (mu - want).render())
        rep.add(f"mu({h.v_names[i]}) is a chain map", is_chain_map(C, C, mu), d_uhom(C, C, mu).render())
        rep.add(f"mu({h.v_names[i]}) has bidegree (0,-2)", mu.is_homogeneous_of((0, -2)) or mu.is_zero())


def _check_commutators(rep: Report, h, C: LMComplex) -> None:
    xs = v_basis(h)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            a, b = monodromy_mu(xs[i], C), monodromy_mu(xs[j], C)
            comm = a.compose(b) - b.compose(a)
            rep.add(f"[mu({h.v_names[i]}), mu({h.v_names[j]})] nullhomotopic",
                    find_homotopy(C, C, comm) is not None, comm.render())


def _v_mu_ts(h) -> Report:
    rep = _report("mu-Ts")
    C = ts_lm(h)
    _check_mu(rep, h, C, mu_ts_display)
    _check_commutators(rep, h, C)
    return rep


def _v_mu_sl3(h) -> Report:
    rep = _report("mu-sl3-F")
    C = sl3_F(h)
    _check_mu(rep, h, C, mu_sl3_display)
    _check_commutators(rep, h, C)
    return rep


def _v_mu_no_lift(h) -> Report:
    rep = _report("mu-no-lift")
    C = no_lift_F(h)
    _check_mu(rep, h, C, mu_no_lift_display)
    for i, x in enumerate(v_basis(h)):
        mu = monodromy_mu(x, C)
        w = no_lift_witness(h, x)
        r = d_uhom(C, C, w) - mu
        rep.add(f"witness for mu({h.v_names[i]}) accepted", r.is_zero(), r.render())
        rep.add(f"mu({h.v_names[i]}) nullhomotopic by search", find_homotopy(C, C, mu) is not None)
    _check_commutators(rep, h, C)
    return rep


def _v_no_lift(h) -> Report:
    rep = _report("LM-sl3-no-lift")
    C = no_lift_F(h)
    rep.extend(lm_check(C))
    rep.add("quotient complex squares to zero", forget_lm_to_kb(C).square_vanishes())
    for x in v_basis(h):
        mu = monodromy_mu(x, C)
        rep.add(f"mu({h.v_names[v_basis(h).index(x)]}) nullhomotopic", find_homotopy(C, C, mu) is not None)
    v = lift_search(C)
    rep.add("no genuine lift in search space", v.status == NONE, f"{v.status} ({v.method})")
    return rep


def _v_fm_unit(h) -> Report:
    rep = _report("FM-unit")
    C = fm_unit(h)
    rep.extend(fm_check(C))
    k = C.delta.kappa()
    rep.add("kappa(theta) = Theta", (k - theta(C.seq)).is_zero())
    L = forget_fm_to_lm(C)
    T = tid_lm(h)
    rep.add("forget to LM = T_id", L.seq == T.seq and (L.delta - T.delta).is_zero(), L.delta.render())
    return rep


def _v_fm_tilt(h) -> Report:
    rep = _report("FM-tilt-s")
    C = fm_tilt(h)
    rep.extend(fm_check(C))
    L = forget_fm_to_lm(C)
    T = ts_lm(h)
    rep.add("forget to LM = T_s", L.seq == T.seq and (L.delta - T.delta).is_zero(), (L.delta - T.delta).render())
    lem = lemma_split_check(T, fm_tilt_deltas(h))
    rep.add("split lemma sides agree", lem.check("both sides agree").ok and lem.ok)
    return rep


def _homotopy_checks(rep: Report, h, C: LMComplex, deltas: list[UHomElt]) -> None:
    es, _ = dual_bases(h)
    for i, (hi, e) in enumerate(zip(deltas, es)):
        rm = right_mult_uhom(C.seq, e)
        r = d_uhom(C, C, hi) - rm
        name = h.vstar_names[i]
        rep.add(f"d(h_{name}) = id * {name}", r.is_zero(), r.render())
        rep.add(f"h_{name} has bidegree (1,2)", hi.is_homogeneous_of((1, 2)))
        rep.add(f"id * {name} nullhomotopic by search", find_homotopy(C, C, rm) is not None)


def _v_h_unit(h) -> Report:
    rep = _report("homotopy-FM-unit")
    _homotopy_checks(rep, h, tid_lm(h), fm_unit_deltas(h)[0])
    return rep


def _v_h_tilt(h) -> Report:
    rep = _report("homotopy-FM-tilt-s")
    _homotopy_checks(rep, h, ts_lm(h), fm_tilt_deltas(h))
    return rep


def _v_koszul(h) -> Report:
    rep = _report("koszul-resolution")
    top = 8 if h.dim == 1 else 6
    for D in range(0, top + 1, 2):
        res = koszul_exactness_check(h, D)
        rep.add(f"exact in internal degree {D}", res["exact"], str(res["homology"]))
    return rep


def _v_split(h) -> Report:
    rep = _report("split-BsBs")
    for s, name in enumerate(h.generator_names):
        for k, ok in split_bsbs(h, s).identities().items():
            rep.add(f"{name}: {k}", ok)
    return rep


def _v_forcing(h) -> Report:
    rep = _report("poly-forcing")
    for s in range(h.rank):
        rep.extend(polynomial_forcing_check(h, s))
    return rep


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    realization: str
    description: str
    builder: Callable
    verifier: Callable[[Realization], Report]
    in_all: bool = True
    expect_pass: bool = True


def _build_cone(h):
    src, tgt, f = sl3_cone_map(h)
    return f


ENTRIES: dict[str, CatalogEntry] = {e.id: e for e in [
    CatalogEntry("Ts", "SL2", "T_s with its two dot maps; not a genuine complex", lambda h: ts_sequence(h), _v_ts),
    CatalogEntry("Ts-as-complex", "SL2", "T_s tested as a genuine complex",
                 lambda h: LMComplex(ts_sequence(h), ts_classical(h), "T_s"), _v_ts_as_complex,
                 in_all=False, expect_pass=False),
    CatalogEntry("Tid", "SL2", "T_id = R in degree 0", tid_lm, _v_tid),
    CatalogEntry("dot-morphisms", "SL2", "dot maps and small Hom spaces", lambda h: (dot_up(h, 0), dot_down(h, 0)),
                 _v_dots),
    CatalogEntry("LM-sl2", "SL2", "left-monodromic T_s", ts_lm, _v_lm_sl2),
    CatalogEntry("LM-sl3-F", "SL3", "four-term left-monodromic complex", sl3_F, _v_lm_sl3_F),
    CatalogEntry("LM-sl3-cone-map", "SL3", "chain map whose cone is LM-sl3-F", _build_cone, _v_cone),
    CatalogEntry("LM-sl3-no-lift", "SL3", "trivial monodromy without a genuine lift", no_lift_F, _v_no_lift),
    CatalogEntry("mu-Ts", "SL2", "monodromy of T_s", lambda h: [monodromy_mu(x, ts_lm(h)) for x in v_basis(h)],
                 _v_mu_ts),
    CatalogEntry("mu-sl3-F", "SL3", "monodromy of LM-sl3-F",
                 lambda h: [monodromy_mu(x, sl3_F(h)) for x in v_basis(h)], _v_mu_sl3),
    CatalogEntry("mu-no-lift", "SL3", "monodromy of LM-sl3-no-lift and its nullhomotopy",
                 lambda h: [no_lift_witness(h, x) for x in v_basis(h)], _v_mu_no_lift),
    CatalogEntry("FM-unit", "SL2", "free-monodromic unit", fm_unit, _v_fm_unit),
    CatalogEntry("FM-tilt-s", "SL2", "free-monodromic tilting object for s", fm_tilt, _v_fm_tilt),
    CatalogEntry("homotopy-FM-unit", "SL2", "nullhomotopies of right multiplication on T_id",
                 lambda h: fm_unit_deltas(h)[0], _v_h_unit),
    CatalogEntry("homotopy-FM-tilt-s", "SL2", "nullhomotopies of right multiplication on T_s", fm_tilt_deltas,
                 _v_h_tilt),
    CatalogEntry("koszul-resolution", "SL2", "exactness of the Koszul complex", lambda h: h, _v_koszul),
    CatalogEntry("split-BsBs", "SL2", "B_s B_s = B_s(-1) + B_s(1)", lambda h: split_bsbs(h, 0), _v_split),
    CatalogEntry("poly-forcing", "SL3", "polynomial forcing on B_s", lambda h: h, _v_forcing),
]}


def entry(id: str) -> CatalogEntry:
    try:
        return ENTRIES[id]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {id!r}; known: {', '.join(ENTRIES)}") from None


def build(id: str, h: Realization):
    return entry(id).builder(h)


def verify(id: str, field: FieldSpec | str = "Q", h: Realization | None = None) -> Report:
    e = entry(id)
    if h is None:
        h = builtin(e.realization, parse_field(field) if isinstance(field, str) else field)
    rep = e.verifier(h)
    rep.item = f"{id} [{h.name or 'custom'} over {h.field.name}]"
    return rep


def verify_all(fields=("Q",)) -> list[Report]:
    out = []
    for f in fields:
        for e in ENTRIES.values():
            if e.in_all:
                out.append(verify(e.id, f))
    return out
