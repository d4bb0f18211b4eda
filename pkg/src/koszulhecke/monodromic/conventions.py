"""The sign-convention menu for the monodromic layer.

Every sign choice that the structure equations depend on is a flag here.
The default is the frozen convention; flipping any single flag is used as a
negative control.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class SignConvention:
    # (l1 (x) f1) o (l2 (x) f2) picks up (-1)^{|l2| |f1|}
    koszul_compose: bool = True
    # kappa removes the j-th wedge factor with sign (-1)^j
    kappa_alternating: bool = True
    # overall sign of kappa
    kappa_sign: int = 1
    # contraction removes the j-th wedge factor with sign (-1)^j
    cap_alternating: bool = True
    # d(f) = dG f - (-1)^{|f|} f dF + kappa(f)
    d_uhom_minus: bool = True
    # the shifted source in a cone carries -(-1)^{|l|} times its differential
    cone_minus: bool = True
    # overall sign of Theta
    theta_sign: int = 1

    @property
    def identifier(self) -> str:
        flips = [f.name for f in fields(self) if getattr(self, f.name) != getattr(FROZEN, f.name)]
        return "koszul-std-v1" + (f"[flip:{','.join(flips)}]" if flips else "")

    def flipped(self, name: str) -> SignConvention:
        value = getattr(self, name)
        new = (not value) if isinstance(value, bool) else -value
        return replace(self, **{name: new})


FROZEN = SignConvention()
FLAGS = tuple(f.name for f in fields(SignConvention))

_current: contextvars.ContextVar[SignConvention] = contextvars.ContextVar("sign_convention", default=FROZEN)


def current() -> SignConvention:
    return _current.get()


@contextlib.contextmanager
def using(conv: SignConvention):
    token = _current.set(conv)
    try:
        yield conv
    finally:
        _current.reset(token)


def single_flips() -> list[SignConvention]:
    return [FROZEN.flipped(name) for name in FLAGS]
