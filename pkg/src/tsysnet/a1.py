"""The A1 T-system ``T[j,k+1] T[j,k-1] = T[j+1,k] T[j-1,k] + 1``.

Initial data live on a finite lattice path ``(j, k_j)`` with unit steps and
``j + k_j`` even. Solutions are computed by direct recursion, by the 2x2
connection-matrix formula ``T = t_{j1} * M(j0, j1)[1, 1]``, and by dimers on
the transformed ladder graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .connection import Factor, FactorProduct, product_matrix
from .errors import NotMutable, OutOfCone, ParseError
from .ring import LaurentPoly, canonical_text, divide, field_div, parse_laurent, to_laurent, var_name

HEADER = "# tsysnet-a1-path"


def default_label(j: int) -> LaurentPoly:
    return LaurentPoly.var(var_name("t", j))


@dataclass(frozen=True)
class InitPathA1:
    j_min: int
    heights: tuple
    assignments: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(int(k) for k in self.heights))
        object.__setattr__(self, "assignments", dict(self.assignments))
        if not self.heights:
            raise ValueError("empty path")
        for n in range(len(self.heights) - 1):
            if abs(self.heights[n + 1] - self.heights[n]) != 1:
                raise ValueError("path steps must be +-1 (at j=%d)" % (self.j_min + n))
        if (self.j_min + self.heights[0]) % 2:
            raise ValueError("j + k_j must be even")

    # -- constructors -----------------------------------------------------------
    @classmethod
    def from_steps(cls, j_min: int, k_start: int, steps: str, assignments=None) -> "InitPathA1":
        heights = [k_start]
        for s in steps:
            if s == "U":
                heights.append(heights[-1] + 1)
            elif s in ("D", "V"):
                heights.append(heights[-1] - 1)
            else:
                raise ValueError("step letters are U and D, got %r" % s)
        return cls(j_min, tuple(heights), assignments or {})

    @classmethod
    def flat(cls, j_min: int, j_max: int, assignments=None) -> "InitPathA1":
        """The flat path ``k_j = j mod 2``."""
        return cls(j_min, tuple(j % 2 for j in range(j_min, j_max + 1)), assignments or {})

    @classmethod
    def random(cls, rng, length: int, j_min: int = 0, symbolic: bool = True) -> "InitPathA1":
        """Random path with ``length`` steps; rational values in 1..9 unless ``symbolic``."""
        from fractions import Fraction

        steps = "".join(rng.choice("UD") for _ in range(length))
        p = cls.from_steps(j_min, j_min % 2 + 2 * rng.randint(-1, 1), steps)
        if symbolic:
            return p
        return p.with_values({j: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for j in range(p.j_min, p.j_max + 1)})

    # -- access -------------------------------------------------------------------
    @property
    def j_max(self) -> int:
        return self.j_min + len(self.heights) - 1

    def __contains__(self, point) -> bool:
        j, k = point
        return self.j_min <= j <= self.j_max and self.k(j) == k

    def k(self, j: int) -> int:
        if not self.j_min <= j <= self.j_max:
            raise OutOfCone("j=%d outside window [%d, %d]" % (j, self.j_min, self.j_max))
        return self.heights[j - self.j_min]

    def t(self, j: int):
        self.k(j)
        if j in self.assignments:
            return self.assignments[j]
        return default_label(j)

    def steps(self) -> str:
        return "".join(
            "U" if b > a else "D" for a, b in zip(self.heights, self.heights[1:])
        )

    def with_values(self, values: Mapping) -> "InitPathA1":
        merged = dict(self.assignments)
        merged.update(values)
        return InitPathA1(self.j_min, self.heights, merged)

    # -- literal format ---------------------------------------------------------
    def to_text(self) -> str:
        lines = [HEADER, "anchor %d %d" % (self.j_min, self.heights[0]), "steps %s" % (self.steps() or "-")]
        for j in sorted(self.assignments):
            lines.append("t %d = %s" % (j, _value_text(self.assignments[j])))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "InitPathA1":
        anchor = steps = None
        values = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, _, rest = line.partition(" ")
            if key == "anchor":
                try:
                    anchor = tuple(int(x) for x in rest.split())
                except ValueError:
                    raise ParseError("bad anchor line %r" % line) from None
            elif key == "steps":
                steps = rest.strip()
                if steps == "-":
                    steps = ""
            elif key == "t":
                lhs, eq, rhs = rest.partition("=")
                if not eq:
                    raise ParseError("bad assignment %r" % line)
                values[int(lhs)] = _parse_value(rhs)
            else:
                raise ParseError("unknown path directive %r" % key)
        if anchor is None or len(anchor) != 2 or steps is None:
            raise ParseError("path literal needs 'anchor J K' and 'steps ...'")
        try:
            return cls.from_steps(anchor[0], anchor[1], steps, values)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def _value_text(x) -> str:
    if isinstance(x, LaurentPoly):
        return canonical_text(x)
    return str(x)


def _parse_value(text: str):
    from fractions import Fraction

    text = text.strip()
    try:
        return Fraction(text)
    except ValueError:
        return parse_laurent(text)


# ---------------------------------------------------------------------------
# mutation and recursion


def mutate_a1(p: InitPathA1, j: int) -> InitPathA1:
    """Flip a local valley or peak at ``j``, updating ``t_j`` by the exchange relation."""
    if not p.j_min < j < p.j_max:
        raise NotMutable("j=%d is not an interior point" % j)
    kl, k0, kr = p.k(j - 1), p.k(j), p.k(j + 1)
    if kl != kr:
        raise NotMutable("no valley or peak at j=%d" % j)
    eps = kl - k0
    heights = list(p.heights)
    heights[j - p.j_min] = k0 + 2 * eps
    values = dict(p.assignments)
    values[j] = divide(p.t(j - 1) * p.t(j + 1) + 1, p.t(j))
    return InitPathA1(p.j_min, tuple(heights), values)


class _A1Solver:
    def __init__(self, p: InitPathA1):
        self.p = p
        self.memo: dict = {}

    def value(self, j: int, k: int):
        key = (j, k)
        if key in self.memo:
            return self.memo[key]
        p = self.p
        if not p.j_min <= j <= p.j_max:
            raise OutOfCone("(%d, %d) needs data outside the window" % (j, k))
        kj = p.k(j)
        if (j + k) % 2:
            raise OutOfCone("(%d, %d) has the wrong parity" % (j, k))
        if k == kj:
            out = p.t(j)
        elif k < kj:
            raise OutOfCone("(%d, %d) lies below the initial path" % (j, k))
        else:
            out = divide(self.value(j + 1, k - 1) * self.value(j - 1, k - 1) + 1, self.value(j, k - 2))
        self.memo[key] = out
        return out


def recurse_a1(p: InitPathA1, j: int, k: int):
    """Direct memoised recursion upward from the path."""
    return _A1Solver(p).value(j, k)


def light_cone_a1(p: InitPathA1, j: int, k: int) -> tuple:
    """``(j0, j1)``: where the backward light cone of ``(j, k)`` meets the path."""
    if (j + k) % 2:
        raise OutOfCone("(%d, %d) has the wrong parity" % (j, k))
    if k < p.k(j):
        raise OutOfCone("(%d, %d) lies below the initial path" % (j, k))
    j0 = next((m for m in range(j, p.j_min - 1, -1) if p.k(m) == k + m - j), None)
    j1 = next((m for m in range(j, p.j_max + 1) if p.k(m) == k + j - m), None)
    if j0 is None or j1 is None:
        raise OutOfCone("light cone of (%d, %d) leaves the window" % (j, k))
    return j0, j1


def a1_factor_product(p: InitPathA1, j0: int, j1: int) -> FactorProduct:
    """``U(t_j, t_{j+1})`` per up step, ``V(t_j, t_{j+1})`` per down step."""
    factors = []
    for j in range(j0, j1):
        a, b = p.t(j), p.t(j + 1)
        if p.k(j + 1) > p.k(j):
            factors.append(Factor("U", 1, (a, b, 1)))
        else:
            factors.append(Factor("V", 1, (1, a, b)))
    return FactorProduct(factors, 2)


def a1_connection_matrix(p: InitPathA1, j0: int, j1: int):
    return product_matrix(a1_factor_product(p, j0, j1))


def solve_a1(p: InitPathA1, j: int, k: int):
    """Connection-matrix solution ``t_{j1} * M(j0, j1)[1, 1]``."""
    j0, j1 = light_cone_a1(p, j, k)
    m = a1_connection_matrix(p, j0, j1)
    return to_laurent(p.t(j1) * m[0][0]) if j1 > j0 else p.t(j)


def ladder_graph_a1(p: InitPathA1, j0: int, j1: int):
    """Transformed ladder between ``j0`` and ``j1`` with labels ``t_j0 .. t_j1``."""
    from .dimer import ladder_graph

    steps = ["U" if p.k(j + 1) > p.k(j) else "V" for j in range(j0, j1)]
    return ladder_graph(steps, [p.t(j) for j in range(j0, j1 + 1)])


def dimer_a1(p: InitPathA1, j: int, k: int):
    from .dimer import partition_function

    j0, j1 = light_cone_a1(p, j, k)
    return partition_function(ladder_graph_a1(p, j0, j1))


# ---------------------------------------------------------------------------
# conserved quantities


def conserved_at(p: InitPathA1, ray: str, j: int, k: int, solver: _A1Solver | None = None):
    """``c`` or ``d`` evaluated from the three solution values around ``(j, k)``.

    ``c = (T[j-1,k+1] + T[j+1,k-1]) / T[j,k]`` is constant along ``j - k = m``
    and ``d = (T[j-1,k-1] + T[j+1,k+1]) / T[j,k]`` along ``j + k = m``: each
    ratio is invariant under translation perpendicular to its own triple.
    """
    s = solver or _A1Solver(p)
    if ray == "c":
        num = s.value(j - 1, k + 1) + s.value(j + 1, k - 1)
    elif ray == "d":
        num = s.value(j - 1, k - 1) + s.value(j + 1, k + 1)
    else:
        raise ValueError("ray must be 'c' or 'd'")
    return field_div(num, s.value(j, k))


def ray_points(p: InitPathA1, ray: str, m: int) -> list:
    """Points ``(j, k)`` of the ray labelled ``m`` where the quantity is computable."""
    s = _A1Solver(p)
    lo = min(p.heights)
    hi = max(p.heights) + (p.j_max - p.j_min) + 2
    out = []
    for k in range(lo, hi + 1):
        j = m + k if ray == "c" else m - k
        try:
            conserved_at(p, ray, j, k, s)
        except OutOfCone:
            continue
        out.append((j, k))
    return out


def conserved_a1(p: InitPathA1, ray: str, m: int):
    """Conserved quantity on ray ``m``, computed at its lowest available point."""
    pts = ray_points(p, ray, m)
    if not pts:
        raise OutOfCone("no computable point on ray %s_%d" % (ray, m))
    j, k = pts[0]
    return conserved_at(p, ray, j, k)
