"""Coxeter systems: normal forms, lengths, descents, Bruhat order, enumeration.

The word problem is solved in a faithful integral reflection representation.
When every ``m_st`` lies in {2, 3, 4, 6, inf} the system is the Weyl group of
a generalized Cartan matrix with ``a_st * a_ts = 4 cos^2(pi/m_st)``; in that
representation ``w(alpha_s) < 0`` iff ``s`` is a right descent of ``w``.  For
other orders (5, 7, ...) we fall back to Tits' solution of the word problem
by braid moves and deletions, which is slower but needs no irrational
numbers.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

INF = 0  # encoding of m_st = infinity, as in realization files

# a_st * a_ts for each crystallographic order
_CARTAN_PRODUCT = {2: 0, 3: 1, 4: 2, 6: 3, INF: 4}

DEFAULT_ENUMERATION_CAP = 200_000


class CoxeterError(ValueError):
    pass


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of orders; ``0`` encodes infinity."""

    m: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.m)
        object.__setattr__(self, "m", m)
        n = len(m)
        for i in range(n):
            if len(m[i]) != n:
                raise CoxeterError("Coxeter matrix must be square")
            if m[i][i] != 1:
                raise CoxeterError(f"diagonal entry m[{i}][{i}] must be 1")
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise CoxeterError("Coxeter matrix must be symmetric")
                if i != j and m[i][j] != INF and m[i][j] < 2:
                    raise CoxeterError(f"off-diagonal entry m[{i}][{j}] must be >= 2 or infinity")
        if self.names is None:
            object.__setattr__(self, "names", default_names(n))
        elif len(self.names) != n:
            raise CoxeterError("one name per generator required")

    @property
    def rank(self) -> int:
        return len(self.m)

    def order(self, s: int, t: int) -> int | None:
        """``m_st`` or ``None`` for infinity."""
        x = self.m[s][t]
        return None if x == INF else x


def default_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return tuple("stu"[:n])
    return tuple(f"s{i}" for i in range(1, n + 1))


def dihedral(m: int | None) -> CoxeterMatrix:
    """Rank-2 system with ``m_st = m`` (``None`` for infinity)."""
    x = INF if m is None else m
    return CoxeterMatrix(((1, x), (x, 1)))


def type_A(n: int) -> CoxeterMatrix:
    rows = [[1 if i == j else 3 if abs(i - j) == 1 else 2 for j in range(n)] for i in range(n)]
    return CoxeterMatrix(tuple(map(tuple, rows)))


@dataclass(frozen=True, eq=False)
class CoxElement:
    """Group element, identified by its ShortLex-minimal reduced word."""

    group: "CoxeterGroup" = field(repr=False)
    word: tuple[int, ...]

    def __len__(self):
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, CoxElement) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __mul__(self, other: CoxElement) -> CoxElement:
        return self.group.multiply(self, other)

    def inverse(self) -> CoxElement:
        return self.group.element(reversed(self.word))

    def sort_key(self):
        return (len(self.word), self.word)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return self.group.render(self.word)

    def __repr__(self):
        return f"CoxElement({self})"


class CoxeterGroup:
    def __init__(self, matrix: CoxeterMatrix, enumeration_cap: int = DEFAULT_ENUMERATION_CAP):
        self.matrix = matrix
        self.rank = matrix.rank
        self.names = matrix.names
        self.enumeration_cap = enumeration_cap
        self._crystallographic = all(
            matrix.m[i][j] in _CARTAN_PRODUCT for i in range(self.rank) for j in range(self.rank) if i != j
        )
        self._nf_cache: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._bruhat_cache: dict[tuple, bool] = {}
        self._lock = threading.Lock()

    # ----- representation ---------------------------------------------
    @cached_property
    def _generator_matrices(self) -> list[tuple[tuple[int, ...], ...]]:
        n = self.rank
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                prod = _CARTAN_PRODUCT[self.matrix.m[i][j]]
                if prod:
                    a[i][j], a[j][i] = -1, -prod
        mats = []
        for i in range(n):
            # s_i(alpha_j) = alpha_j - a_ij alpha_i; column j is the image of alpha_j
            rows = [[(1 if r == c else 0) - (a[i][c] if r == i else 0) for c in range(n)] for r in range(n)]
            mats.append(tuple(map(tuple, rows)))
        return mats

    def _matmul(self, x, y):
        n = self.rank
        return tuple(
            tuple(sum(x[r][k] * y[k][c] for k in range(n)) for c in range(n)) for r in range(n)
        )

    @cached_property
    def _identity(self):
        n = self.rank
        return tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))

    def _matrix_of(self, word: Sequence[int]):
        out = self._identity
        for s in word:
            out = self._matmul(out, self._generator_matrices[s])
        return out

    @staticmethod
    def _column_negative(mat, s: int) -> bool:
        col = [row[s] for row in mat]
        return all(x <= 0 for x in col) and any(x < 0 for x in col)

    # ----- word problem -----------------------------------------------
    def _check_word(self, word: Iterable[int]) -> tuple[int, ...]:
        w = tuple(int(x) for x in word)
        for x in w:
            if not 0 <= x < self.rank:
                raise CoxeterError(f"generator index {x} out of range for rank {self.rank}")
        return w

    def normal_form(self, word: Iterable[int]) -> tuple[int, ...]:
        """ShortLex-minimal reduced word of the element represented by ``word``."""
        w = self._check_word(word)
        cached = self._nf_cache.get(w)
        if cached is not None:
            return cached
        nf = self._nf_matrix(w) if self._crystallographic else self._nf_tits(w)
        with self._lock:
            self._nf_cache[w] = nf
        return nf

    def _nf_matrix(self, w: tuple[int, ...]) -> tuple[int, ...]:
        # left descents of x are right descents of x^{-1}; peel off the smallest one
        inv = self._matrix_of(tuple(reversed(w)))
        out = []
        while inv != self._identity:
            s = next(s for s in range(self.rank) if self._column_negative(inv, s))
            out.append(s)
            inv = self._matmul(inv, self._generator_matrices[s])
        return tuple(out)

    def braid_class(self, word: Sequence[int]) -> set[tuple[int, ...]]:
        """All words reachable from ``word`` by braid moves."""
        start = tuple(word)
        seen = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for s in range(self.rank):
                for t in range(self.rank):
                    m = self.matrix.order(s, t)
                    if s == t or m is None:
                        continue
                    alt = tuple(s if k % 2 == 0 else t for k in range(m))
                    rep = tuple(t if k % 2 == 0 else s for k in range(m))
                    for i in range(len(w) - m + 1):
                        if w[i:i + m] == alt:
                            nw = w[:i] + rep + w[i + m:]
                            if nw not in seen:
                                seen.add(nw)
                                queue.append(nw)
        return seen

    def _nf_tits(self, w: tuple[int, ...]) -> tuple[int, ...]:
        while True:
            cls = self.braid_class(w)
            for u in sorted(cls):
                i = next((k for k in range(len(u) - 1) if u[k] == u[k + 1]), None)
                if i is not None:
                    w = u[:i] + u[i + 2:]
                    break
            else:
                return min(cls)

    def element(self, word: Iterable[int] = ()) -> CoxElement:
        return CoxElement(self, self.normal_form(word))

    def parse(self, text: str) -> CoxElement:
        return self.element(self.parse_word(text))

    def parse_word(self, text: str) -> tuple[int, ...]:
        t = text.strip()
        if t in ("", "id", "e", "1"):
            return ()
        lookup = {name: i for i, name in enumerate(self.names)}
        if all(len(n) == 1 for n in self.names) and "." not in t and " " not in t:
            parts = list(t)
        else:
            parts = [p for p in t.replace(".", " ").split() if p]
        try:
            return tuple(lookup[p] for p in parts)
        except KeyError as exc:
            raise CoxeterError(f"unknown generator {exc.args[0]!r} in {text!r}") from None

    def render(self, word: Sequence[int]) -> str:
        if not word:
            return "id"
        sep = "" if all(len(n) == 1 for n in self.names) else "."
        return sep.join(self.names[s] for s in word)

    @property
    def identity(self) -> CoxElement:
        return CoxElement(self, ())

    @property
    def generators(self) -> list[CoxElement]:
        return [self.element((s,)) for s in range(self.rank)]

    def multiply(self, x: CoxElement, y: CoxElement) -> CoxElement:
        return self.element(x.word + y.word)

    def length(self, x: CoxElement | Sequence[int]) -> int:
        if isinstance(x, CoxElement):
            return len(x.word)
        return len(self.normal_form(x))

    def descents(self, x: CoxElement, side: str = "right") -> set[int]:
        if side == "right":
            return {s for s in range(self.rank) if len(self.normal_form(x.word + (s,))) < len(x.word)}
        if side == "left":
            return {s for s in range(self.rank) if len(self.normal_form((s,) + x.word)) < len(x.word)}
        raise ValueError("side must be 'left' or 'right'")

    # ----- Bruhat order -----------------------------------------------
    def bruhat_leq(self, x: CoxElement, y: CoxElement) -> bool:
        """Bruhat order via Deodhar's property Z: for ``ys < y``,
        ``x <= y`` iff ``min(x, xs) <= ys``."""
        key = (x.word, y.word)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        if len(x.word) > len(y.word):
            result = False
        elif not y.word:
            result = not x.word
        elif not x.word:
            result = True
        else:
            s = y.word[-1]
            ys = self.element(y.word[:-1])
            xs = self.element(x.word + (s,))
            smaller = xs if len(xs.word) < len(x.word) else x
            result = self.bruhat_leq(smaller, ys)
        with self._lock:
            self._bruhat_cache[key] = result
        return result

    def bruhat_lt(self, x: CoxElement, y: CoxElement) -> bool:
        return x != y and self.bruhat_leq(x, y)

    def bruhat_interval_below(self, y: CoxElement) -> list[CoxElement]:
        """``{x : x <= y}`` sorted by (length, ShortLex)."""
        subwords = {()}
        for s in y.word:
            subwords |= {w + (s,) for w in subwords}
        return sorted({self.element(w) for w in subwords}, key=CoxElement.sort_key)

    # ----- enumeration ------------------------------------------------
    def enumerate_upto(self, max_length: int, cap: int | None = None) -> list[CoxElement]:
        """All elements of length <= ``max_length``, sorted by (length, ShortLex)."""
        if max_length < 0:
            raise CoxeterError("length bound must be non-negative")
        cap = self.enumeration_cap if cap is None else cap
        level = [self.identity]
        out = [self.identity]
        for _ in range(max_length):
            nxt = set()
            for x in level:
                for s in range(self.rank):
                    y = self.element(x.word + (s,))
                    if len(y.word) > len(x.word):
                        nxt.add(y)
            if not nxt:
                break
            level = sorted(nxt, key=CoxElement.sort_key)
            out.extend(level)
            if len(out) > cap:
                raise EnumerationCapExceeded(f"more than {cap} elements up to length {max_length}")
        return out

    def is_finite_upto(self, max_length: int) -> bool:
        """True if the group has no element of length ``max_length + 1``."""
        return len(self.enumerate_upto(max_length + 1)) == len(self.enumerate_upto(max_length))
