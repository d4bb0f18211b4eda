"""Exact coefficient fields: the rationals and prime fields F_p (p odd)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


class FieldError(ValueError):
    pass


class Fp:
    """An element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldError(f"cannot mix F{self.p} and F{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return Fp(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) / self

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return Fp(pow(self.value, -n, self.p), self.p).inverse()
        return Fp(pow(self.value, n, self.p), self.p)

    def inverse(self) -> Fp:
        return Fp(1, self.p) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.value == o

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def signed(self) -> int:
        """Representative in (-p/2, p/2], used for rendering."""
        return self.value - self.p if self.value > self.p // 2 else self.value

    def __repr__(self):
        return f"{self.signed()}"


class FieldSpec:
    """A coefficient field: ``Q`` or ``F<p>`` with p an odd prime.

    Calling a FieldSpec coerces ints and Fractions into the field.
    """

    def __init__(self, characteristic: int = 0):
        if characteristic == 2:
            raise FieldError("characteristic 2 is not supported (2 must be invertible)")
        if characteristic < 0 or characteristic == 1:
            raise FieldError(f"invalid characteristic {characteristic}")
        if characteristic and not _is_prime(characteristic):
            raise FieldError(f"{characteristic} is not prime")
        self.characteristic = characteristic

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            if isinstance(x, Fp):
                raise FieldError("cannot coerce an F_p element into Q")
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != p:
                raise FieldError(f"cannot coerce F{x.p} element into F{p}")
            return x
        if isinstance(x, Rational):
            x = Fraction(x)
            return Fp(x.numerator * pow(x.denominator, -1, p), p)
        raise FieldError(f"cannot coerce {x!r} into {self.name}")

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self):
        """All elements of a finite field."""
        if not self.characteristic:
            raise FieldError("Q is infinite")
        return [Fp(i, self.characteristic) for i in range(self.characteristic)]

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("field", self.characteristic))

    def __repr__(self):
        return f"FieldSpec({self.name})"


QQ = FieldSpec(0)


def parse_field(text: str) -> FieldSpec:
    """Parse ``"Q"`` or ``"F<p>"`` (e.g. ``"F3"``)."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return QQ
    if t[:1] in ("F", "f") and t[1:].isdigit():
        return FieldSpec(int(t[1:]))
    raise FieldError(f"unrecognized field {text!r}; expected Q or F<p>")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def render_scalar(c) -> str:
    if isinstance(c, Fp):
        return str(c.signed())
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
