"""Realizations ``(V, {coroots}, {roots})`` of a Coxeter system over Q or F_p.

Coordinates: ``V*`` carries a fixed ordered basis (the polynomial generators
of ``R = Sym(V*)``) and ``V`` the dual basis.  Roots are stored as coordinate
vectors in the ``V*`` basis and coroots in the ``V`` basis, so the pairing is
the dot product.

For a Cartan matrix ``a`` with ``a_st = alpha_t(coroot_s)`` the simple roots
themselves form the ``V*`` basis and coroot ``s`` is row ``s`` of ``a``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Sequence

from .coxeter import INF, CoxeterError, CoxeterGroup, CoxeterMatrix, dihedral
from .fields import QQ, FieldError, FieldSpec, parse_field


class RealizationError(ValueError):
    pass


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "not checked"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


@dataclass
class ValidationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def status(self, name: str) -> str:
        return next(c.status for c in self.checks if c.name == name)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if c.status == "fail"]

    def __str__(self):
        return "\n".join(f"{c.name}: {c.status}" + (f" ({c.detail})" if c.detail else "") for c in self.checks)


Matrix = tuple[tuple, ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return tuple(tuple(sum((a[i][t] * b[t][j] for t in range(k)), a[0][0] * 0) for j in range(m)) for i in range(n))


class Realization:
    def __init__(
        self,
        field: FieldSpec,
        cox: CoxeterMatrix,
        roots: Sequence[Sequence],
        coroots: Sequence[Sequence],
        vstar_names: Sequence[str] | None = None,
        v_names: Sequence[str] | None = None,
        name: str = "",
        cartan: Sequence[Sequence[int]] | None = None,
        validate: bool = True,
    ):
        self.field = field
        self.cox = cox
        self.rank = cox.rank
        if len(roots) != self.rank or len(coroots) != self.rank:
            raise RealizationError("one root and one coroot per simple reflection required")
        dims = {len(r) for r in roots} | {len(c) for c in coroots}
        if len(dims) != 1:
            raise RealizationError("roots and coroots must all have the same dimension")
        self.dim = dims.pop()
        self.roots = tuple(tuple(field(x) for x in r) for r in roots)
        self.coroots = tuple(tuple(field(x) for x in c) for c in coroots)
        self.vstar_names = tuple(vstar_names or (f"x{i + 1}" for i in range(self.dim)))
        self.v_names = tuple(v_names or (f"y{i + 1}" for i in range(self.dim)))
        self.name = name
        self.cartan = tuple(tuple(int(x) for x in row) for row in cartan) if cartan is not None else None
        self._cache: dict = {}
        if validate:
            report = self.validate()
            if not report.ok:
                raise RealizationError(f"invalid realization: failed {', '.join(report.failures())}")

    # ----- basic data -------------------------------------------------
    @cached_property
    def group(self) -> CoxeterGroup:
        return CoxeterGroup(self.cox)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return self.cox.names

    def pair(self, covector: Sequence, vector: Sequence):
        """``f(x)`` for ``f`` in ``V*`` and ``x`` in ``V`` given by coordinates."""
        return sum((self.field(a) * self.field(b) for a, b in zip(covector, vector)), self.field.zero)

    def cartan_entry(self, s: int, t: int):
        """``alpha_t(coroot_s)``."""
        return self.pair(self.roots[t], self.coroots[s])

    def action_v(self, s: int) -> Matrix:
        """Matrix of ``x -> x - alpha_s(x) coroot_s`` acting on column vectors."""
        n, f = self.dim, self.field
        a, c = self.roots[s], self.coroots[s]
        return tuple(tuple((f.one if i == j else f.zero) - c[i] * a[j] for j in range(n)) for i in range(n))

    def action_vdual(self, s: int) -> Matrix:
        """Matrix of ``g -> g - g(coroot_s) alpha_s`` acting on covector coordinates."""
        n, f = self.dim, self.field
        a, c = self.roots[s], self.coroots[s]
        return tuple(tuple((f.one if i == j else f.zero) - a[i] * c[j] for j in range(n)) for i in range(n))

    def reflect_vdual(self, s: int, covector: Sequence) -> tuple:
        g = tuple(self.field(x) for x in covector)
        k = self.pair(g, self.coroots[s])
        return tuple(x - k * a for x, a in zip(g, self.roots[s]))

    def reflect_v(self, s: int, vector: Sequence) -> tuple:
        x = tuple(self.field(y) for y in vector)
        k = self.pair(self.roots[s], x)
        return tuple(y - k * c for y, c in zip(x, self.coroots[s]))

    def _identity(self) -> Matrix:
        f = self.field
        return tuple(tuple(f.one if i == j else f.zero for j in range(self.dim)) for i in range(self.dim))

    # ----- validation -------------------------------------------------
    def validate(self) -> ValidationReport:
        rep = ValidationReport()
        bad = [self.generator_names[s] for s in range(self.rank) if self.cartan_entry(s, s) != self.field(2)]
        rep.checks.append(CheckResult("pairing", "fail" if bad else "pass", f"alpha(coroot) != 2 for {bad}" if bad else ""))

        ident = self._identity()
        failures = []
        for s in range(self.rank):
            sq = _matmul(self.action_v(s), self.action_v(s))
            if sq != ident:
                failures.append(f"{self.generator_names[s]}^2")
            for t in range(s + 1, self.rank):
                m = self.cox.order(s, t)
                if m is None:
                    continue
                st = _matmul(self.action_v(s), self.action_v(t))
                p = ident
                for _ in range(m):
                    p = _matmul(p, st)
                if p != ident:
                    failures.append(f"({self.generator_names[s]}{self.generator_names[t]})^{m}")
        rep.checks.append(CheckResult("Coxeter relations", "fail" if failures else "pass", ", ".join(failures)))

        zero = self.field.zero
        dead = [self.generator_names[s] for s in range(self.rank)
                if all(x == zero for x in self.roots[s]) or all(x == zero for x in self.coroots[s])]
        rep.checks.append(CheckResult("Demazure surjectivity", "fail" if dead else "pass",
                                      f"zero root or coroot for {dead}" if dead else ""))
        rep.checks.append(CheckResult("balanced", "not checked", "condition not defined here"))
        return rep

    # ----- duality ----------------------------------------------------
    def dual(self) -> Realization:
        cartan = None
        if self.cartan is not None:
            cartan = tuple(zip(*self.cartan))
        return Realization(
            self.field, self.cox, self.coroots, self.roots,
            vstar_names=self.v_names, v_names=self.vstar_names,
            name=f"{self.name}*" if self.name and not self.name.endswith("*") else self.name.rstrip("*"),
            cartan=cartan, validate=False,
        )

    def isomorphism_to(self, other: Realization, attempts: int = 50, seed: int = 0):
        """An invertible ``g: V -> V'`` with ``g(coroot_s) = coroot'_s`` and
        ``alpha'_s o g = alpha_s``, as a matrix on coordinates, or ``None``.

        ``None`` is definitive when the linear conditions are inconsistent;
        otherwise invertible solutions are sampled from the solution space.
        """
        import random

        from .linalg import nullspace, rank, solve

        if self.field != other.field or self.cox != other.cox or self.dim != other.dim:
            return None
        n, f = self.dim, self.field
        rows, rhs = [], []
        # unknown g[i][j] at index i * n + j
        for s in range(self.rank):
            for i in range(n):
                rows.append([self.coroots[s][k % n] if k // n == i else f.zero for k in range(n * n)])
                rhs.append(other.coroots[s][i])
            for j in range(n):
                rows.append([other.roots[s][k // n] if k % n == j else f.zero for k in range(n * n)])
                rhs.append(self.roots[s][j])
        base = solve(rows, rhs, n * n, f)
        if base is None:
            return None
        kernel = nullspace(rows, n * n, f)
        rng = random.Random(seed)
        for attempt in range(attempts if kernel else 1):
            x = list(base)
            if attempt:
                for v in kernel:
                    c = f(rng.randint(-3, 3))
                    x = [a + c * b for a, b in zip(x, v)]
            g = [x[i * n:(i + 1) * n] for i in range(n)]
            if rank(g, f, n) == n:
                return tuple(tuple(r) for r in g)
        return None

    def is_isomorphic(self, other: Realization) -> bool:
        return self.isomorphism_to(other) is not None

    def cartan_matrix(self) -> tuple[tuple, ...]:
        return tuple(tuple(self.cartan_entry(s, t) for t in range(self.rank)) for s in range(self.rank))

    def dual_basis(self) -> list[tuple]:
        """Vectors ``e_check_i`` in ``V`` with ``e_j(e_check_i) = [i == j]`` for the
        coordinate basis ``e_j`` of ``V*``; here simply the coordinate basis of ``V``."""
        return [row for row in self._identity()]

    def __eq__(self, other):
        return (
            isinstance(other, Realization)
            and self.field == other.field
            and self.cox == other.cox
            and self.roots == other.roots
            and self.coroots == other.coroots
        )

    def __hash__(self):
        return hash((self.field, self.cox, self.roots, self.coroots))

    def __repr__(self):
        label = self.name or "realization"
        return f"Realization({label} over {self.field.name})"

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "coxeter_matrix": [list(r) for r in self.cox.m],
            "field": self.field.name,
            "roots": [[_plain(x) for x in r] for r in self.roots],
            "coroots": [[_plain(x) for x in c] for c in self.coroots],
        }


def _plain(x):
    from .fields import Fp

    if isinstance(x, Fp):
        return x.signed()
    return int(x) if x.denominator == 1 else str(x)


def from_cartan(
    cox: CoxeterMatrix,
    cartan: Sequence[Sequence[int]],
    field: FieldSpec = QQ,
    name: str = "",
    validate: bool = True,
) -> Realization:
    """Cartan realization: roots form the basis of ``V*``, coroot ``s`` is the
    ``s``-th row of ``cartan``, so ``alpha_t(coroot_s) = cartan[s][t]``."""
    n = cox.rank
    if len(cartan) != n or any(len(r) != n for r in cartan):
        raise RealizationError("Cartan matrix must be square of the Coxeter rank")
    for s in range(n):
        if cartan[s][s] != 2:
            if validate:
                raise RealizationError(f"pairing: cartan[{s}][{s}] must be 2")
    roots = [[1 if i == s else 0 for i in range(n)] for s in range(n)]
    coroots = [list(cartan[s]) for s in range(n)]
    names = cox.names
    return Realization(
        field, cox, roots, coroots,
        vstar_names=[f"alpha_{x}" for x in names],
        v_names=[f"cw_{x}" for x in names],
        name=name, cartan=cartan, validate=validate,
    )


# ----- built-in catalog -------------------------------------------------
BUILTIN_CARTAN = {
    "SL2": (None, ((2,),)),
    "SL3": (3, ((2, -1), (-1, 2))),
    "B2": (4, ((2, -1), (-2, 2))),
    "G2": (6, ((2, -1), (-3, 2))),
    "A1~": (INF, ((2, -2), (-2, 2))),
}


def builtin(name: str, field: FieldSpec | str = QQ) -> Realization:
    if isinstance(field, str):
        field = parse_field(field)
    key = name.strip()
    if key not in BUILTIN_CARTAN:
        raise RealizationError(f"unknown builtin realization {name!r}; choose from {sorted(BUILTIN_CARTAN)}")
    m, cartan = BUILTIN_CARTAN[key]
    cox = CoxeterMatrix(((1,),)) if len(cartan) == 1 else dihedral(None if m == INF else m)
    return from_cartan(cox, cartan, field, name=key)


def sl2(field: FieldSpec | str = QQ) -> Realization:
    return builtin("SL2", field)


def sl3(field: FieldSpec | str = QQ) -> Realization:
    return builtin("SL3", field)


# ----- realization files ------------------------------------------------
def parse_realization(data: dict, field_override: FieldSpec | str | None = None) -> Realization:
    """Build a realization from a parsed file (``rank``, ``coxeter_matrix``,
    ``cartan_matrix`` or ``roots``/``coroots``, ``field``)."""
    if not isinstance(data, dict):
        raise RealizationError("realization file must contain a mapping")
    try:
        rank = int(data["rank"])
        m = data["coxeter_matrix"]
    except (KeyError, TypeError, ValueError) as exc:
        raise RealizationError(f"missing or malformed field: {exc}") from None
    if field_override is not None:
        field = parse_field(field_override) if isinstance(field_override, str) else field_override
    else:
        field = parse_field(str(data.get("field", "Q")))
    try:
        cox = CoxeterMatrix(tuple(tuple(int(x) for x in row) for row in m))
    except (CoxeterError, TypeError, ValueError) as exc:
        raise RealizationError(f"bad coxeter_matrix: {exc}") from None
    if cox.rank != rank:
        raise RealizationError("rank does not match coxeter_matrix")
    name = str(data.get("name", ""))
    if "cartan_matrix" in data:
        cartan = [[_int_entry(x) for x in row] for row in data["cartan_matrix"]]
        return from_cartan(cox, cartan, field, name=name)
    if "roots" in data and "coroots" in data:
        roots = [[_int_entry(x) for x in r] for r in data["roots"]]
        coroots = [[_int_entry(x) for x in c] for c in data["coroots"]]
        return Realization(field, cox, roots, coroots, name=name)
    raise RealizationError("realization file needs cartan_matrix or roots and coroots")


def _int_entry(x):
    if isinstance(x, bool) or not isinstance(x, int):
        raise RealizationError(f"entries must be integers, got {x!r}")
    return x


def load_realization(path: str | Path, field_override: FieldSpec | str | None = None) -> Realization:
    text = Path(path).read_text()
    if str(path).endswith(".json"):
        data = json.loads(text)
    else:
        import yaml

        data = yaml.safe_load(text)
    return parse_realization(data, field_override)


__all__ = [
    "CheckResult", "FieldError", "Realization", "RealizationError", "ValidationReport",
    "builtin", "from_cartan", "load_realization", "parse_realization", "sl2", "sl3",
]
