"""Bounded search for genuine complexes lifting a left-monodromic complex.

A lift replaces each classical component ``delta_p: F^p -> F^{p+1}`` by
``delta_p + P_p`` with ``P_p`` in the left ideal ``V* . Hom(F^p, F^{p+1})``
(so the quotient image is unchanged) and asks for ``delta'^2 = 0``.  The
conditions are bilinear in consecutive families; even-indexed families are
swept and odd-indexed ones solved linearly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from ..bimod import BimodMap, _map_coords, hom_basis
from ..linalg import independent_subset, solve_columns
from ..polyalg import poly_ring
from .complexes import LMComplex, forget_lm_to_kb

FOUND = "lift found"
NONE = "no lift in search space"
UNDECIDED = "undecided"


class SearchCapExceeded(RuntimeError):
    pass


@dataclass
class LiftVerdict:
    status: str
    differential: dict | None = None
    dims: dict = dc_field(default_factory=dict)
    method: str = ""

    @property
    def found(self) -> bool:
        return self.status == FOUND


def _perturbations(src, tgt, field) -> list[BimodMap]:
    ring = poly_ring(src.h)
    cands = [g.lmul(x) for g in hom_basis(src, tgt, -2) for x in ring.gens()]
    keep = independent_subset([_map_coords(c) for c in cands], field)
    return [cands[i] for i in keep]


def _combo(base: BimodMap, basis: list[BimodMap], coeffs) -> BimodMap:
    out = base
    for c, g in zip(coeffs, basis):
        if c:
            out = out + g.scale(c)
    return out


def lift_search(C: LMComplex, cap: int = 200_000, samples: int = 200, seed: int = 0,
                symbolic: bool = True) -> LiftVerdict:
    h = C.h
    fld = h.field
    classical = forget_lm_to_kb(C).maps
    seq = C.seq
    pos = seq.positions()
    if not pos:
        return LiftVerdict(FOUND, {}, {}, "empty")
    chain = list(range(pos[0], pos[-1]))
    bases, families = {}, {}
    for p in chain:
        base = classical.get(p) or BimodMap.zero(seq[p], seq[p + 1])
        bases[p] = base
        families[p] = _perturbations(seq[p], seq[p + 1], fld) if not seq[p].is_zero() and not seq[p + 1].is_zero() else []
    dims = {p: len(families[p]) for p in chain}
    even = [p for i, p in enumerate(chain) if i % 2 == 0]
    odd = [p for i, p in enumerate(chain) if i % 2 == 1]

    def solve_odd(even_vals: dict):
        fixed = {p: _combo(bases[p], families[p], even_vals[p]) for p in even}
        rhs = {}
        index = [(p, k) for p in odd for k in range(dims[p])]
        col_coords = {key: {} for key in index}
        for p in chain[:-1]:
            q = p + 1
            # (delta_q + P_q) o (delta_p + P_p) = 0
            if p in fixed:
                left_fixed = fixed[p]
                const = bases[q].compose(left_fixed)
                for k, g in enumerate(families[q]):
                    for key, c in _map_coords(g.compose(left_fixed)).items():
                        col_coords[(q, k)][(p, key)] = c
            else:
                right_fixed = fixed[q]
                const = right_fixed.compose(bases[p])
                for k, g in enumerate(families[p]):
                    for key, c in _map_coords(right_fixed.compose(g)).items():
                        col_coords[(p, k)][(p, key)] = c
            for key, c in _map_coords(const).items():
                rhs[(p, key)] = -c
        cols = [col_coords[key] for key in index]
        sol = solve_columns(cols, rhs, fld) if cols else (None if rhs else [])
        if sol is None:
            return None
        vals = {p: [fld.zero] * dims[p] for p in odd}
        for (p, k), c in zip(index, sol):
            vals[p][k] = c
        out = {p: _combo(bases[p], families[p], vals[p]) for p in odd}
        out.update(fixed)
        return out

    def check(d: dict) -> bool:
        return all(d[p + 1].compose(d[p]).is_zero() for p in chain[:-1])

    even_dim = sum(dims[p] for p in even)
    if fld.characteristic:
        total = fld.characteristic ** even_dim
        if total > cap:
            raise SearchCapExceeded(f"{total} sweep points exceed the cap {cap}")
        elements = fld.elements()
        for flat in itertools.product(elements, repeat=even_dim):
            vals, i = {}, 0
            for p in even:
                vals[p] = list(flat[i:i + dims[p]])
                i += dims[p]
            d = solve_odd(vals)
            if d is not None and check(d):
                return LiftVerdict(FOUND, d, dims, "exhaustive sweep")
        return LiftVerdict(NONE, None, dims, "exhaustive sweep")

    rng = random.Random(seed)
    points = [[0] * even_dim] if even_dim == 0 else (
        [[0] * even_dim] + [[rng.randint(-3, 3) for _ in range(even_dim)] for _ in range(samples)])
    for flat in points:
        vals, i = {}, 0
        for p in even:
            vals[p] = [fld(x) for x in flat[i:i + dims[p]]]
            i += dims[p]
        d = solve_odd(vals)
        if d is not None and check(d):
            return LiftVerdict(FOUND, d, dims, "sampled sweep")
    if even_dim == 0:
        return LiftVerdict(NONE, None, dims, "exhaustive sweep")
    if symbolic and _groebner_inconsistent(bases, families, chain):
        return LiftVerdict(NONE, None, dims, "Groebner elimination")
    return LiftVerdict(UNDECIDED, None, dims, "sampled sweep")


def _groebner_inconsistent(bases, families, chain) -> bool:
    """True when the bilinear system has no solution over an algebraic closure."""
    import sympy

    syms = {p: sympy.symbols(f"a{p - chain[0]}_0:{len(families[p])}") if families[p] else () for p in chain}
    eqs: dict = {}
    for p in chain[:-1]:
        q = p + 1
        terms = [(1, bases[q].compose(bases[p]))]
        terms += [(syms[p][k], bases[q].compose(g)) for k, g in enumerate(families[p])]
        terms += [(syms[q][k], g.compose(bases[p])) for k, g in enumerate(families[q])]
        terms += [(syms[q][k] * syms[p][l], g.compose(f))
                  for k, g in enumerate(families[q]) for l, f in enumerate(families[p])]
        for coef, m in terms:
            for key, c in _map_coords(m).items():
                eqs[(p, key)] = eqs.get((p, key), 0) + coef * sympy.Rational(c.numerator, c.denominator)
    polys = [sympy.expand(e) for e in eqs.values() if sympy.expand(e) != 0]
    if not polys:
        return False
    gens = [s for p in chain for s in syms[p]]
    gb = sympy.groebner(polys, *gens, order="lex", domain=sympy.QQ)
    return list(gb.exprs) == [1]


__all__ = ["FOUND", "NONE", "UNDECIDED", "LiftVerdict", "SearchCapExceeded", "lift_search"]
