"""Polynomial rings ``R = Sym(V*)`` and ``Sym(V)``, the exterior algebra on
``V*``, the Weyl group action, Demazure operators and the Koszul complex
``A = Lambda (x) R``.

Internal degree is twice the polynomial degree.  Exterior monomials are
strictly increasing index tuples over the ``V*`` basis.
"""

from __future__ import annotations

import itertools
import random
from functools import cached_property
from typing import Mapping, Sequence

from .fields import FieldSpec, render_scalar
from .linalg import rank_columns


class PolyRing:
    """Polynomial ring over ``field`` in the named variables."""

    def __init__(self, field: FieldSpec, names: Sequence[str]):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.field == other.field and self.names == other.names

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"PolyRing({self.field.name}[{', '.join(self.names)}])"

    @cached_property
    def zero(self) -> Poly:
        return Poly(self, {})

    @cached_property
    def one(self) -> Poly:
        return Poly(self, {(0,) * self.nvars: 1})

    def const(self, c) -> Poly:
        return Poly(self, {(0,) * self.nvars: c})

    def gen(self, i: int) -> Poly:
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): 1})

    def gens(self) -> list[Poly]:
        return [self.gen(i) for i in range(self.nvars)]

    def linear(self, coords: Sequence) -> Poly:
        """The linear form ``sum coords[i] x_i``."""
        out = {}
        for i, c in enumerate(coords):
            e = [0] * self.nvars
            e[i] = 1
            out[tuple(e)] = c
        return Poly(self, out)

    def monomial(self, exps: Sequence[int], c=1) -> Poly:
        return Poly(self, {tuple(exps): c})

    def exponents_of_degree(self, k: int) -> list[tuple[int, ...]]:
        """Exponent vectors of total degree ``k`` in graded-lex order."""
        return monomial_exponents(self.nvars, k)

    def monomials_of_degree(self, k: int) -> list[Poly]:
        return [self.monomial(e) for e in self.exponents_of_degree(k)]

    def random(self, max_degree: int = 3, rng: random.Random | None = None, coeff_range: int = 3) -> Poly:
        rng = rng or random.Random()
        out = {}
        for k in range(max_degree + 1):
            for e in self.exponents_of_degree(k):
                if rng.random() < 0.5:
                    out[e] = rng.randint(-coeff_range, coeff_range)
        return Poly(self, out)

    def random_homogeneous(self, k: int, rng: random.Random | None = None, coeff_range: int = 3) -> Poly:
        rng = rng or random.Random()
        return Poly(self, {e: rng.randint(-coeff_range, coeff_range) for e in self.exponents_of_degree(k)})


def monomial_exponents(n: int, k: int) -> list[tuple[int, ...]]:
    if k < 0:
        return []
    if n == 0:
        return [()] if k == 0 else []
    out = []
    for first in range(k, -1, -1):
        for rest in monomial_exponents(n - 1, k - first):
            out.append((first,) + rest)
    return out


class Poly:
    """Immutable sparse polynomial: exponent vector -> nonzero field element."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], object]):
        self.ring = ring
        f = ring.field
        clean = {}
        for e, c in terms.items():
            c = f(c)
            if c:
                clean[tuple(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> Poly:
        p = object.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, exps: Sequence[int]):
        return self._terms.get(tuple(exps), self.ring.field.zero)

    def constant_term(self):
        return self.coeff((0,) * self.ring.nvars)

    def degree(self) -> int | None:
        """Total polynomial degree (``None`` for zero)."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def internal_degree(self) -> int | None:
        d = self.degree()
        return None if d is None else 2 * d

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_part(self, k: int) -> Poly:
        return Poly._raw(self.ring, {e: c for e, c in self._terms.items() if sum(e) == k})

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self._terms)
        for e, c in o._terms.items():
            x = out.get(e)
            x = c if x is None else x + c
            if x:
                out[e] = x
            else:
                out.pop(e, None)
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero
            return Poly._raw(self.ring, {e: x * c for e, x in self._terms.items()})
        o = self._coerce(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = self.ring.const(other)
            except Exception:
                return False
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute(self, images: Sequence[Poly]) -> Poly:
        """Algebra map sending variable ``i`` to ``images[i]``."""
        ring = images[0].ring if images else self.ring
        out = ring.zero
        powers: dict[tuple[int, int], Poly] = {}
        for e, c in self._terms.items():
            term = ring.const(c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = images[i] ** k
                    term = term * powers[key]
            out = out + term
        return out

    def divide_linear(self, ell: Poly) -> Poly:
        """Exact quotient by a nonzero linear form; raises if not divisible."""
        lin = {e: c for e, c in ell._terms.items()}
        if not lin or any(sum(e) != 1 for e in lin):
            raise ValueError("divisor must be a nonzero linear form")
        k = min(e.index(1) for e in lin)
        lead = next(c for e, c in lin.items() if e[k] == 1)
        inv = self.ring.field.one / lead

        def key(e):
            return (e[k],) + e

        rem = dict(self._terms)
        quot: dict = {}
        while rem:
            e = max(rem, key=key)
            if e[k] == 0:
                raise ArithmeticError("polynomial is not divisible by the linear form")
            c = rem[e] * inv
            qe = tuple(x - (1 if i == k else 0) for i, x in enumerate(e))
            quot[qe] = quot.get(qe, 0) + c
            for le, lc in lin.items():
                te = tuple(a + b for a, b in zip(qe, le))
                x = rem.get(te, 0) - c * lc
                if x:
                    rem[te] = x
                else:
                    rem.pop(te, None)
        return Poly(self.ring, quot)

    def linear_coords(self) -> tuple:
        """Coordinates of a linear form (degree-0 part must vanish)."""
        if any(sum(e) != 1 for e in self._terms):
            raise ValueError("not a linear form")
        return tuple(self.coeff(tuple(1 if j == i else 0 for j in range(self.ring.nvars))) for i in range(self.ring.nvars))

    def evaluate_zero(self):
        return self.constant_term()

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda ec: (-sum(ec[0]), tuple(-x for x in ec[0])))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(self.ring.names, e) if k
            )
            cs = render_scalar(c)
            neg = cs.startswith("-")
            mag = cs.lstrip("-")
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            parts.append(("-" if neg else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sgn, body in parts[1:]:
            out += f" {sgn} {body}"
        return out

    def __repr__(self):
        return f"Poly({self})"

    def is_single_term(self) -> bool:
        return len(self._terms) == 1


# ----- realization-bound rings and the W-action ---------------------------
def poly_ring(h) -> PolyRing:
    """``R = Sym(V*)`` for a realization (cached on it)."""
    key = ("R",)
    if key not in h._cache:
        h._cache[key] = PolyRing(h.field, h.vstar_names)
    return h._cache[key]


def dual_poly_ring(h) -> PolyRing:
    """``Sym(V)`` for a realization."""
    key = ("Rv",)
    if key not in h._cache:
        h._cache[key] = PolyRing(h.field, h.v_names)
    return h._cache[key]


def root(h, s: int) -> Poly:
    return poly_ring(h).linear(h.roots[s])


def coroot_vector(h, s: int) -> tuple:
    return h.coroots[s]


def _generator_images(h, s: int) -> list[Poly]:
    key = ("act", s)
    if key not in h._cache:
        ring = poly_ring(h)
        n = h.dim
        imgs = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            imgs.append(ring.linear(h.reflect_vdual(s, e)))
        h._cache[key] = imgs
    return h._cache[key]


def act_generator(h, s: int, f: Poly) -> Poly:
    key = ("acts", s, f)
    hit = h._cache.get(key)
    if hit is None:
        hit = f.substitute(_generator_images(h, s))
        h._cache[key] = hit
    return hit


def act_w(h, w, f: Poly) -> Poly:
    """``w(f)`` for a group element or a word; ``w = s1 ... sk`` acts as
    ``s1(s2(...sk(f)))``."""
    word = w.word if hasattr(w, "word") else tuple(w)
    for s in reversed(word):
        f = act_generator(h, s, f)
    return f


def demazure(h, s: int, f: Poly) -> Poly:
    """``(f - s(f)) / alpha_s``."""
    key = ("dem", s, f)
    hit = h._cache.get(key)
    if hit is None:
        diff = f - act_generator(h, s, f)
        hit = diff.divide_linear(root(h, s)) if diff else poly_ring(h).zero
        h._cache[key] = hit
    return hit


# ----- exterior algebra ---------------------------------------------------
def wedge_sign(a: Sequence[int], b: Sequence[int]) -> tuple[int, tuple[int, ...] | None]:
    """Sign and sorted index tuple of ``e_a ^ e_b`` (``None`` if zero)."""
    if set(a) & set(b):
        return 0, None
    seq = list(a) + list(b)
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return (-1) ** inversions, tuple(sorted(seq))


def subsets(n: int, k: int | None = None) -> list[tuple[int, ...]]:
    """Index subsets, in binary order when ``k`` is None."""
    if k is not None:
        return list(itertools.combinations(range(n), k))
    return sorted(
        (tuple(i for i in range(n) if mask >> i & 1) for mask in range(1 << n)),
        key=lambda t: sum(1 << i for i in t),
    )


class ExtElt:
    """Element of ``Lambda(V*)`` with field coefficients."""

    __slots__ = ("field", "n", "_terms")

    def __init__(self, field: FieldSpec, n: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.field = field
        self.n = n
        clean = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if list(lam) != sorted(set(lam)):
                sign, norm = _normalize(lam)
                if norm is None:
                    continue
                c = sign * field(c)
                lam = norm
            c = field(c) + clean.get(lam, field.zero)
            if c:
                clean[lam] = c
            else:
                clean.pop(lam, None)
        self._terms = clean

    @classmethod
    def gen(cls, field: FieldSpec, n: int, i: int) -> ExtElt:
        return cls(field, n, {(i,): 1})

    @classmethod
    def linear(cls, field: FieldSpec, coords: Sequence) -> ExtElt:
        return cls(field, len(coords), {(i,): c for i, c in enumerate(coords)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __add__(self, other: ExtElt) -> ExtElt:
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, self.field.zero) + c
        return ExtElt(self.field, self.n, out)

    def __neg__(self):
        return ExtElt(self.field, self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Wedge product (or scalar multiplication)."""
        if not isinstance(other, ExtElt):
            c = self.field(other)
            return ExtElt(self.field, self.n, {k: x * c for k, x in self._terms.items()})
        out: dict = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                sign, lam = wedge_sign(a, b)
                if lam is not None:
                    out[lam] = out.get(lam, self.field.zero) + sign * x * y
        return ExtElt(self.field, self.n, out)

    def __rmul__(self, other):
        return self * other

    wedge = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, ExtElt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def is_zero(self):
        return not self._terms

    def __repr__(self):
        if not self._terms:
            return "ExtElt(0)"
        return "ExtElt(" + " + ".join(f"{render_scalar(c)}*e{list(k)}" for k, c in sorted(self._terms.items())) + ")"


def _normalize(lam: Sequence[int]):
    sign, out = 1, ()
    for i in lam:
        s, out = wedge_sign(out, (i,))
        if out is None:
            return 0, None
        sign *= s
    return sign, out


def cap_lambda(x: Sequence, lam: ExtElt) -> ExtElt:
    """Contraction ``x -| (r_1 ^ ... ^ r_k) = sum_j (-1)^j (... r_j omitted ...) r_j(x)``
    (``j`` counted from zero)."""
    f = lam.field
    out: dict = {}
    for idx, c in lam.terms.items():
        for j, i in enumerate(idx):
            val = f(x[i])
            if not val:
                continue
            rest = idx[:j] + idx[j + 1:]
            out[rest] = out.get(rest, f.zero) + (-1) ** j * c * val
    return ExtElt(f, lam.n, out)


class KoszulElt:
    """Element of ``A = Lambda(V*) (x) R``: exterior monomial -> polynomial."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple[int, ...], Poly] | None = None):
        self.ring = ring
        clean: dict = {}
        for lam, p in (terms or {}).items():
            sign, norm = _normalize(tuple(lam))
            if norm is None:
                continue
            q = clean.get(norm, ring.zero) + p * sign
            if q:
                clean[norm] = q
            else:
                clean.pop(norm, None)
        self._terms = clean

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __add__(self, other: KoszulElt) -> KoszulElt:
        out = dict(self._terms)
        for k, p in other._terms.items():
            out[k] = out.get(k, self.ring.zero) + p
        return KoszulElt(self.ring, out)

    def __neg__(self):
        return KoszulElt(self.ring, {k: -p for k, p in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, KoszulElt) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def is_zero(self):
        return not self._terms

    def __repr__(self):
        if not self._terms:
            return "KoszulElt(0)"
        parts = []
        for lam, p in sorted(self._terms.items()):
            wedge = "^".join(self.ring.names[i] for i in lam) or "1"
            parts.append(f"{wedge} (x) ({p})")
        return "KoszulElt(" + " + ".join(parts) + ")"


def koszul_kappa(x: KoszulElt) -> KoszulElt:
    """``kappa(r_1^...^r_k (x) f) = sum_j (-1)^j (... r_j omitted ...) (x) r_j f``."""
    ring = x.ring
    out: dict = {}
    for lam, p in x.terms.items():
        for j, i in enumerate(lam):
            rest = lam[:j] + lam[j + 1:]
            out[rest] = out.get(rest, ring.zero) + ring.gen(i) * p * (-1) ** j
    return KoszulElt(ring, out)


def koszul_exactness_check(h, D: int) -> dict:
    """Homology of ``A -> k`` per internal degree ``<= D`` and exterior degree.

    Returns ``{"exact": bool, "homology": {(D, k): dim}}``; the only expected
    nonzero entry is ``(0, 0)`` (the augmentation), which the report treats
    as exactness of ``A -> k``.
    """
    if D < 0:
        raise ValueError("degree bound must be non-negative")
    ring = poly_ring(h)
    n = h.dim
    homology = {}
    exact = True

    def basis(deg: int, k: int):
        pd = deg - 2 * k
        if pd < 0 or pd % 2:
            return []
        return [(lam, e) for lam in subsets(n, k) for e in ring.exponents_of_degree(pd // 2)]

    def kappa_rank(deg: int, k: int) -> int:
        cols = []
        for lam, e in basis(deg, k):
            img = koszul_kappa(KoszulElt(ring, {lam: ring.monomial(e)}))
            col = {}
            for mu, p in img.terms.items():
                for ee, c in p.items():
                    col[(mu, ee)] = c
            cols.append(col)
        return rank_columns(cols, ring.field) if cols else 0

    for deg in range(0, D + 1, 2):
        for k in range(0, n + 1):
            dim = len(basis(deg, k))
            r_out = kappa_rank(deg, k) if k > 0 else 0
            r_in = kappa_rank(deg, k + 1) if k < n else 0
            hom = dim - r_out - r_in
            # augmentation: in degree 0, R_0 = k maps isomorphically onto k
            if deg == 0 and k == 0:
                hom -= 1
            homology[(deg, k)] = hom
            if hom:
                exact = False
    return {"exact": exact, "homology": homology}
