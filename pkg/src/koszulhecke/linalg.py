"""Gaussian elimination over an exact field.

Matrices are lists of rows of field elements.  Most callers build systems
column-wise from sparse coordinate dicts, so the ``*_columns`` helpers accept
a list of ``{coordinate: coefficient}`` dicts and index the coordinates
themselves.
"""

from __future__ import annotations

from typing import Hashable, Sequence

from .fields import FieldSpec


def rref(rows: Sequence[Sequence], field: FieldSpec, ncols: int | None = None):
    """Reduced row echelon form.  Returns ``(matrix, pivot_columns)``."""
    m = [list(map(field, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    zero = field.zero
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != zero), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != zero:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence], field: FieldSpec, ncols: int | None = None) -> int:
    return len(rref(rows, field, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, field: FieldSpec) -> list[list]:
    """Basis of ``{x : A x = 0}``."""
    m, pivots = rref(rows, field, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for i, pc in enumerate(pivots):
            x[pc] = -m[i][f]
        basis.append(x)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int, field: FieldSpec):
    """One solution of ``A x = b`` or ``None`` if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug, field, ncols + 1)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = m[i][ncols]
    return x


def _index(columns: Sequence[dict], extra: Sequence[dict] = ()) -> dict:
    coords: dict[Hashable, int] = {}
    for col in list(columns) + list(extra):
        for k in col:
            if k not in coords:
                coords[k] = len(coords)
    return coords


def _dense(columns: Sequence[dict], coords: dict, field: FieldSpec) -> list[list]:
    rows = [[field.zero] * len(columns) for _ in coords]
    for j, col in enumerate(columns):
        for k, v in col.items():
            rows[coords[k]][j] = field(v)
    return rows


def nullspace_columns(columns: Sequence[dict], field: FieldSpec) -> list[list]:
    """Coefficient vectors ``c`` with ``sum c_j columns[j] = 0``."""
    coords = _index(columns)
    return nullspace(_dense(columns, coords, field), len(columns), field)


def solve_columns(columns: Sequence[dict], target: dict, field: FieldSpec):
    """Coefficients ``c`` with ``sum c_j columns[j] = target``, or ``None``."""
    coords = _index(columns, [target])
    rows = _dense(columns, coords, field)
    rhs = [field.zero] * len(coords)
    for k, v in target.items():
        rhs[coords[k]] = field(v)
    if not columns:
        return [] if all(v == 0 for v in rhs) else None
    return solve(rows, rhs, len(columns), field)


def rank_columns(columns: Sequence[dict], field: FieldSpec) -> int:
    coords = _index(columns)
    if not coords:
        return 0
    return rank(_dense(columns, coords, field), field, len(columns))


def independent_subset(columns: Sequence[dict], field: FieldSpec) -> list[int]:
    """Indices of a maximal linearly independent subfamily (greedy, in order)."""
    coords = _index(columns)
    if not coords:
        return []
    _, pivots = rref(_dense(columns, coords, field), field, len(columns))
    return pivots
