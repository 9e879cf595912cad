"""Hexahedron relation as a staggered Yang-Baxter identity of U/V matrices.

With ``R_i(x,a,b,c,d) = V_i(c,b,x) U_i(x,d,a)`` and
``S_i(x,a,b,c,d) = U_i(b,x,a) V_i(c,x,d)`` in GL3,

    R1(b2,a2,a3,a4,c) S2(b1,a1,a2,c,a6) R1(b3,a6,c,a4,a5)
        = S2(b3',a1,a2,a3,c') R1(b1',c',a3,a4,a5) S2(b2',a1,c',a5,a6)

exactly when the primed values are given by :func:`hex_mutate`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .connection import _gl, check_braiding, check_exchange, check_exchange_a1, check_tetra_flip
from .errors import ZeroDenominator
from .matrix import matrices_equal
from .ring import LaurentPoly, RatFunc, field_div, values_equal


def _is_zero(x) -> bool:
    if isinstance(x, (LaurentPoly, RatFunc)):
        return RatFunc.coerce(x) == RatFunc.coerce(0)
    return x == 0


@dataclass(frozen=True)
class HexState:
    """Six boundary values ``a``, three face values ``b`` and the vertex value ``c``."""

    a: tuple
    b: tuple
    c: object

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != 6 or len(self.b) != 3:
            raise ValueError("a hexahedron state needs six a's and three b's")

    @classmethod
    def ones(cls) -> "HexState":
        return cls((1,) * 6, (1,) * 3, 1)

    @classmethod
    def symbolic(cls) -> "HexState":
        v = LaurentPoly.var
        return cls(
            tuple(v("a%d" % n) for n in range(1, 7)),
            tuple(v("b%d" % n) for n in range(1, 4)),
            v("c"),
        )

    @classmethod
    def random(cls, rng: random.Random, lo: int = 1, hi: int = 9) -> "HexState":
        def q():
            return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))

        return cls(tuple(q() for _ in range(6)), tuple(q() for _ in range(3)), q())


def hex_mutate(s: HexState) -> tuple:
    """``(b1', b2', b3', c')`` solving the hexahedron system."""
    a1, a2, a3, a4, a5, a6 = s.a
    b1, b2, b3 = s.b
    c = s.c
    if any(_is_zero(x) for x in (b1, b2, b3, c)):
        raise ZeroDenominator("b1 b2 b3 c must be nonzero")
    k = a2 * a4 * a6 + b1 * b2 * b3
    b1p = field_div(k + c * a1 * a4, c * b1)
    b2p = field_div(k + c * a3 * a6, c * b2)
    b3p = field_div(k + c * a2 * a5, c * b3)
    num = (
        k * k
        + k * (a1 * a4 + a3 * a6 + a2 * a5) * c
        + (a1 * a2 * a4 * a5 + a1 * a3 * a4 * a6 + a2 * a3 * a5 * a6) * c * c
        + a1 * a3 * a5 * c * c * c
    )
    cp = field_div(num, b1 * b2 * b3 * c * c)
    return b1p, b2p, b3p, cp


def _r(i: int, x, a, b, c, d):
    return [("V", i, (c, b, x)), ("U", i, (x, d, a))]


def _s(i: int, x, a, b, c, d):
    return [("U", i, (b, x, a)), ("V", i, (c, x, d))]


def hex_sides(s: HexState, primed: tuple) -> tuple:
    """Both GL3 products of the identity, the right one built from ``primed``."""
    a1, a2, a3, a4, a5, a6 = s.a
    b1, b2, b3 = s.b
    c = s.c
    b1p, b2p, b3p, cp = primed
    lhs = _gl(3, *_r(1, b2, a2, a3, a4, c), *_s(2, b1, a1, a2, c, a6), *_r(1, b3, a6, c, a4, a5))
    rhs = _gl(3, *_s(2, b3p, a1, a2, a3, cp), *_r(1, b1p, cp, a3, a4, a5), *_s(2, b2p, a1, cp, a5, a6))
    return lhs, rhs


def verify_hex_identity(s: HexState, primed: tuple | None = None) -> bool:
    lhs, rhs = hex_sides(s, primed if primed is not None else hex_mutate(s))
    return matrices_equal(lhs, rhs)


def reflect(s: HexState, primed: tuple) -> HexState:
    """The up/down reflected hexagon: primed values become the initial ones."""
    a1, a2, a3, a4, a5, a6 = s.a
    b1p, b2p, b3p, cp = primed
    return HexState((a4, a3, a2, a1, a6, a5), (b1p, b3p, b2p), cp)


def hex_involution_check(s: HexState) -> bool:
    """Mutating the reflected state gives back ``(b1, b3, b2, c)``, i.e. the original."""
    back = hex_mutate(reflect(s, hex_mutate(s)))
    b1, b2, b3 = s.b
    return all(values_equal(x, y) for x, y in zip(back, (b1, b3, b2, s.c)))


# ---------------------------------------------------------------------------
# local identity suite


def _values(rng: random.Random | None, names: str) -> list:
    if rng is None:
        return [LaurentPoly.var(n) for n in names.split()]
    return [Fraction(rng.randint(1, 20), rng.randint(1, 20)) for _ in names.split()]


def _a1_exchange(rng):
    return check_exchange_a1(*_values(rng, "a b c"))[1]


def _exchange(rng):
    return check_exchange(*_values(rng, "a b c u v"))[1]


def _flip(rng):
    return check_tetra_flip("whiteflip", _values(rng, "a b c d")) and check_tetra_flip(
        "commute", _values(rng, "u a b c d v")
    )


def _braiding(rng):
    return check_braiding(*_values(rng, "u a b c d e"))[1]


def _hexahedron(rng):
    s = HexState.symbolic() if rng is None else HexState.random(rng)
    return verify_hex_identity(s)


IDENTITIES = {
    "a1-exchange": _a1_exchange,
    "exchange": _exchange,
    "flip": _flip,
    "braiding": _braiding,
    "hexahedron": _hexahedron,
}


def check_identity(name: str, rng: random.Random | None = None) -> bool:
    """One instance of a local identity: symbolic when ``rng`` is None, random rationals otherwise."""
    return IDENTITIES[name](rng)


def identity_suite(name: str, points: int, seed: int = 0) -> bool:
    """Symbolic check followed by ``points`` random rational checks."""
    rng = random.Random(seed)
    return check_identity(name) and all(check_identity(name, rng) for _ in range(points))
