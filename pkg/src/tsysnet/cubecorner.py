"""Cube-corner evolution ``θ[a,b,c] θ[a+1,b+1,c+1] = θ[a+1,b,c] θ[a,b+1,c+1] + θ[a,b+1,c] θ[a+1,b,c+1]``.

A state is a stepped surface of unit cubes seen along ``(1,1,1)``: heights
``z`` (the time ``a+b+c``) over the triangular lattice ``x f1 + y f2`` with
``x = a-c`` and ``y = b-c``. Adding a cube over the bottom vertex ``P``
replaces it by ``P + (1,1,1)`` and updates its value by the equation above.

Read with level ``c - a - b`` and column ``b - a``, every face of such a
surface is a V-type lozenge (bottom, left, right, top). The augmented shadow
of ``(a, b, c)`` is a fixed region tiled by these lozenges; its matrix
product gives ``θ[a,b,c]`` through a ``N x N`` minor, ``N = a+b+c-2``.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .connection import Factor, FactorProduct, product_matrix
from .errors import NotAddable, NotEvaporable, OutOfCone, ParseError, WindowTooSmall
from .matrix import minor_det
from .ring import LaurentPoly, canonical_text, divide, field_div, parse_laurent, to_laurent, var_name

HEADER = "# tsysnet-cubecorner"

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
# projected steps +f1, +f2, +f3 = -f1 - f2
_STEPS = ((1, 0), (0, 1), (-1, -1))
FACE_TYPES = ("12", "13", "23")


def default_label(a: int, b: int, c: int) -> LaurentPoly:
    return LaurentPoly.var(var_name("tau", a, b, c))


def _add(p, q):
    return (p[0] + q[0], p[1] + q[1], p[2] + q[2])


def project(p) -> tuple:
    """``(a, b, c) -> (x, y, z)`` with ``z`` the time ``a + b + c``."""
    a, b, c = p
    return (a - c, b - c, a + b + c)


def lift(x: int, y: int, z: int) -> tuple:
    c, r = divmod(z - x - y, 3)
    if r:
        raise ValueError("height %d does not lift at (%d, %d)" % (z, x, y))
    return (x + c, y + c, c)


def level(p) -> int:
    return p[2] - p[0] - p[1]


def column(p) -> int:
    return p[1] - p[0]


@dataclass(frozen=True)
class CubeCornerState:
    x0: int
    x1: int
    y0: int
    y1: int
    heights: tuple
    assignments: Mapping = field(default_factory=dict)

    def __post_init__(self):
        rows = tuple(tuple(int(z) for z in row) for row in self.heights)
        object.__setattr__(self, "heights", rows)
        object.__setattr__(self, "assignments", dict(self.assignments))
        if len(rows) != self.x1 - self.x0 + 1 or any(len(r) != self.y1 - self.y0 + 1 for r in rows):
            raise ValueError("height table does not match the window")
        for x in range(self.x0, self.x1 + 1):
            for y in range(self.y0, self.y1 + 1):
                z = self.z(x, y)
                if (z - x - y) % 3:
                    raise ValueError("height %d at (%d, %d) is not a lattice time" % (z, x, y))
                for dx, dy in _STEPS:
                    u = (x + dx, y + dy)
                    if u in self and self.z(*u) - z not in (1, -2):
                        raise ValueError("step condition fails between (%d, %d) and %r" % (x, y, u))

    # -- constructors -----------------------------------------------------------
    @classmethod
    def flat(cls, x0: int, x1: int, y0: int, y1: int, assignments=None) -> "CubeCornerState":
        """Three consecutive layers: times ``0, 1, 2``."""
        heights = [[(x + y) % 3 for y in range(y0, y1 + 1)] for x in range(x0, x1 + 1)]
        return cls(x0, x1, y0, y1, heights, assignments or {})

    @classmethod
    def flat_for(cls, a: int, b: int, c: int, assignments=None) -> "CubeCornerState":
        """Flat state whose window covers the augmented shadow of ``(a, b, c)``."""
        pts = _region_points(a, b, c) if a + b + c > 2 else [(a, b, c)]
        xs = [p[0] - p[2] for p in pts]
        ys = [p[1] - p[2] for p in pts]
        return cls.flat(min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1, assignments)

    # -- access -------------------------------------------------------------------
    def __contains__(self, u) -> bool:
        x, y = u
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1

    def is_flat(self) -> bool:
        return all(
            self.heights[x - self.x0][y - self.y0] == (x + y) % 3
            for x in range(self.x0, self.x1 + 1)
            for y in range(self.y0, self.y1 + 1)
        )

    def z(self, x: int, y: int) -> int:
        if (x, y) not in self:
            raise WindowTooSmall("(%d, %d) outside the window" % (x, y))
        return self.heights[x - self.x0][y - self.y0]

    def point(self, x: int, y: int) -> tuple:
        return lift(x, y, self.z(x, y))

    def on_surface(self, p) -> bool:
        x, y, z = project(p)
        return (x, y) in self and self.z(x, y) == z

    def vertices(self) -> list:
        return [self.point(x, y) for x in range(self.x0, self.x1 + 1) for y in range(self.y0, self.y1 + 1)]

    def t(self, p):
        if not self.on_surface(p):
            raise OutOfCone("%r is not on the surface" % (p,))
        v = self.assignments.get(tuple(p))
        return default_label(*p) if v is None else v

    def with_values(self, values: Mapping) -> "CubeCornerState":
        merged = dict(self.assignments)
        merged.update(values)
        return CubeCornerState(self.x0, self.x1, self.y0, self.y1, self.heights, merged)

    def _with_height(self, x: int, y: int, z: int, values: Mapping) -> "CubeCornerState":
        rows = [list(r) for r in self.heights]
        rows[x - self.x0][y - self.y0] = z
        merged = dict(self.assignments)
        merged.update(values)
        return CubeCornerState(self.x0, self.x1, self.y0, self.y1, rows, merged)

    # -- literal format ---------------------------------------------------------
    def to_text(self) -> str:
        lines = [HEADER, "window %d %d %d %d" % (self.x0, self.x1, self.y0, self.y1)]
        for x in range(self.x0, self.x1 + 1):
            lines.append("z %d: %s" % (x, " ".join(str(z) for z in self.heights[x - self.x0])))
        for p in sorted(self.assignments):
            lines.append("tau %d %d %d = %s" % (*p, _value_text(self.assignments[p])))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CubeCornerState":
        window = None
        rows: dict = {}
        values = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, _, rest = line.partition(" ")
            try:
                if key == "window":
                    window = tuple(int(v) for v in rest.split())
                elif key == "z":
                    x, _, zs = rest.partition(":")
                    rows[int(x)] = [int(v) for v in zs.split()]
                elif key == "tau":
                    lhs, eq, rhs = rest.partition("=")
                    if not eq:
                        raise ValueError
                    values[tuple(int(v) for v in lhs.split())] = _parse_value(rhs)
                else:
                    raise ParseError("unknown cube-corner directive %r" % key)
            except ValueError:
                raise ParseError("bad cube-corner line %r" % line) from None
        if window is None or len(window) != 4:
            raise ParseError("cube-corner literal needs 'window X0 X1 Y0 Y1'")
        x0, x1, y0, y1 = window
        if sorted(rows) != list(range(x0, x1 + 1)):
            raise ParseError("need one 'z X: ...' row per window row")
        try:
            return cls(x0, x1, y0, y1, [rows[x] for x in range(x0, x1 + 1)], values)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def _value_text(x) -> str:
    return canonical_text(x) if isinstance(x, LaurentPoly) else str(x)


def _parse_value(text: str):
    text = text.strip()
    try:
        return Fraction(text)
    except ValueError:
        return parse_laurent(text)


# ---------------------------------------------------------------------------
# cube moves


def _ring(s: CubeCornerState, x: int, y: int):
    """Heights of the six neighbours as ``(plus, minus)`` lists, or None at the window edge."""
    plus, minus = [], []
    for dx, dy in _STEPS:
        if (x + dx, y + dy) not in s or (x - dx, y - dy) not in s:
            return None
        plus.append(s.z(x + dx, y + dy))
        minus.append(s.z(x - dx, y - dy))
    return plus, minus


def is_addable(s: CubeCornerState, x: int, y: int) -> bool:
    ring = _ring(s, x, y)
    if ring is None:
        return False
    z = s.z(x, y)
    return all(h == z + 1 for h in ring[0]) and all(h == z + 2 for h in ring[1])


def is_evaporable(s: CubeCornerState, x: int, y: int) -> bool:
    ring = _ring(s, x, y)
    if ring is None:
        return False
    z = s.z(x, y)
    return all(h == z - 2 for h in ring[0]) and all(h == z - 1 for h in ring[1])


def _exchange(s: CubeCornerState, p, divide_by):
    num = s.t(_add(p, E1)) * s.t(_add(_add(p, E2), E3)) + s.t(_add(p, E2)) * s.t(_add(_add(p, E1), E3))
    return divide(num, divide_by)


def add_cube(s: CubeCornerState, x: int, y: int) -> CubeCornerState:
    """Replace the bottom vertex ``P`` at ``(x, y)`` by ``P + (1,1,1)``."""
    if not is_addable(s, x, y):
        raise NotAddable("no cube can be added at (%d, %d)" % (x, y))
    p = s.point(x, y)
    top = _add(p, (1, 1, 1))
    return s._with_height(x, y, s.z(x, y) + 3, {top: _exchange(s, p, s.t(p))})


def evaporate_cube(s: CubeCornerState, x: int, y: int) -> CubeCornerState:
    """Inverse of :func:`add_cube`."""
    if not is_evaporable(s, x, y):
        raise NotEvaporable("no cube can be removed at (%d, %d)" % (x, y))
    top = s.point(x, y)
    p = _add(top, (-1, -1, -1))
    return s._with_height(x, y, s.z(x, y) - 3, {p: _exchange(s, p, s.t(top))})


def addable_sites(s: CubeCornerState, bound=None) -> list:
    """Addable sites, lexicographic; with ``bound`` only cubes whose top is ``<= bound``."""
    out = []
    for x in range(s.x0 + 1, s.x1):
        for y in range(s.y0 + 1, s.y1):
            if not is_addable(s, x, y):
                continue
            if bound is not None:
                top = _add(s.point(x, y), (1, 1, 1))
                if any(t > b for t, b in zip(top, bound)):
                    continue
            out.append((x, y))
    return out


def fill_corner(s: CubeCornerState, a: int, b: int, c: int, rng: random.Random | None = None) -> CubeCornerState:
    """Add every cube inside the corner ``x <= a, y <= b, z <= c``.

    Without ``rng`` each sweep adds the addable sites in lexicographic order;
    with it the next site is drawn at random.
    """
    bound = (a, b, c)
    while True:
        sites = addable_sites(s, bound)
        if not sites:
            return s
        if rng is not None:
            s = add_cube(s, *rng.choice(sites))
            continue
        for u in sites:
            if is_addable(s, *u):
                s = add_cube(s, *u)


def recurse_theta(s: CubeCornerState, a: int, b: int, c: int, rng: random.Random | None = None):
    """``θ[a,b,c]`` by filling the corner with cubes and reading the apex."""
    apex = (a, b, c)
    x, y, z = project(apex)
    if (x, y) not in s:
        raise WindowTooSmall("apex %r projects outside the window" % (apex,))
    if z < s.z(x, y):
        raise OutOfCone("%r lies below the surface" % (apex,))
    filled = fill_corner(s, a, b, c, rng)
    if not filled.on_surface(apex):
        raise WindowTooSmall("the window cannot hold the corner of %r" % (apex,))
    return filled.t(apex)


# ---------------------------------------------------------------------------
# faces as V-type lozenges


@dataclass(frozen=True)
class CubeLozenge:
    """A surface face read as ``V(bottom, left, right)``; ``top`` is not used by the matrix."""

    bottom: tuple
    left: tuple
    right: tuple
    top: tuple

    @property
    def level(self) -> int:
        return level(self.bottom)

    def corners(self) -> tuple:
        return (self.bottom, self.left, self.top, self.right)


def face_lozenge(kind: str, q) -> CubeLozenge:
    """The face spanned by two unit directions at its lowest-level vertex ``q``."""
    if kind == "12":
        return CubeLozenge(_add(_add(q, E1), E2), _add(q, E1), _add(q, E2), q)
    if kind == "13":
        return CubeLozenge(_add(q, E1), _add(_add(q, E1), E3), q, _add(q, E3))
    if kind == "23":
        return CubeLozenge(_add(q, E2), q, _add(_add(q, E2), E3), _add(q, E3))
    raise ValueError("face type must be one of %s" % (FACE_TYPES,))


def surface_lozenges(s: CubeCornerState) -> list:
    out = []
    for q in s.vertices():
        for kind in FACE_TYPES:
            z = face_lozenge(kind, q)
            if all(s.on_surface(p) for p in z.corners()):
                out.append(z)
    return out


def _hexagon_centers(a: int, b: int, c: int) -> list:
    """Time-0 points ``P`` with ``P + (1,1,1) <= (a, b, c)``."""
    n = a + b + c - 2
    out = []
    for cc in range(c - n, c):
        for aa in range(a - n, a):
            bb = -aa - cc
            if bb <= b - 1:
                out.append((aa, bb, cc))
    return out


def _hexagon_lozenges(a: int, b: int, c: int) -> list:
    n = a + b + c - 2
    if n < 1:
        raise OutOfCone("(%d, %d, %d) is not above the flat layers" % (a, b, c))
    return [face_lozenge(kind, p) for p in _hexagon_centers(a, b, c) for kind in FACE_TYPES]


def _augmentation(a: int, b: int, c: int) -> list:
    """Triangle of 12-faces on top of the hexagons.

    Their tops sit below the flat layers, but only bottom, left and right
    enter the matrix, and these have third coordinate ``c`` so no cube in the
    corner ever moves them.
    """
    n = a + b + c - 2
    out = []
    for x in range(a - n, a - 1):
        for y in range(b - n, b - 1):
            if x + y + c <= 0:
                out.append(face_lozenge("12", (x, y, c)))
    return out


def _flat_region(a: int, b: int, c: int) -> list:
    return _hexagon_lozenges(a, b, c) + _augmentation(a, b, c)


def _region_points(a: int, b: int, c: int) -> set:
    return {p for z in _flat_region(a, b, c) for p in z.corners()}


def _lk(p) -> tuple:
    return (level(p), column(p))


def _inside(pt, quad) -> bool:
    """Point in a convex quadrilateral (corners in cyclic order), boundary included."""
    sign = 0
    for n in range(4):
        (l0, k0), (l1, k1) = quad[n], quad[(n + 1) % 4]
        cross = (l1 - l0) * (pt[1] - k0) - (k1 - k0) * (pt[0] - l0)
        if cross:
            if sign and (cross > 0) != (sign > 0):
                return False
            sign = cross
    return True


def _centroid(z: CubeLozenge) -> tuple:
    pts = [_lk(p) for p in z.corners()]
    return (Fraction(sum(p[0] for p in pts), 4), Fraction(sum(p[1] for p in pts), 4))


def _sweep_order(lozenges: list) -> list:
    """Left-to-right product order: within every strip, pieces sorted by position."""
    strips: dict = {}
    for n, z in enumerate(lozenges):
        kb, kl, kr, kt = (column(p) for p in (z.bottom, z.left, z.right, z.top))
        strips.setdefault(z.level, []).append((Fraction(2 * kb + kl + kr, 4), n))
        strips.setdefault(z.level + 1, []).append((Fraction(kl + kr + 2 * kt, 4), n))
    succ: dict = {n: set() for n in range(len(lozenges))}
    indeg = [0] * len(lozenges)
    for pieces in strips.values():
        pieces.sort()
        for (_, u), (_, v) in zip(pieces, pieces[1:]):
            if v not in succ[u]:
                succ[u].add(v)
                indeg[v] += 1
    key = [(_centroid(z)[1], z.level) for z in lozenges]
    heap = [(key[n], n) for n in range(len(lozenges)) if indeg[n] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, u = heapq.heappop(heap)
        out.append(lozenges[u])
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, (key[v], v))
    if len(out) != len(lozenges):
        raise ValueError("lozenges do not tile a planar region")
    return out


def _flat_word(a: int, b: int, c: int) -> list:
    """Hexagons ``H_i = V_{i+1} V_i V_{i+1}`` and spectators, swept by decreasing ``a``.

    Within one sweep line the higher strip comes first.
    """
    units = []
    for p in _hexagon_centers(a, b, c):
        hexagon = [face_lozenge(kind, p) for kind in ("13", "12", "23")]
        units.append(((-p[0], -hexagon[1].level), hexagon))
    for z in _augmentation(a, b, c):
        units.append(((-z.top[0], -z.level), [z]))
    units.sort(key=lambda u: u[0])
    return [z for _, unit in units for z in unit]


@dataclass(frozen=True)
class AugmentedShadow:
    apex: tuple
    n: int
    lozenges: tuple  # product order
    base_level: int
    west: tuple  # sigma_1 .. sigma_{3N+1}, bottom to top
    east: tuple  # tau_1 .. tau_{3N+1}
    spectators: tuple = ()  # top triangle, never touched by cube additions

    @property
    def dim(self) -> int:
        return 3 * self.n

    def index(self, z: CubeLozenge) -> int:
        return z.level - self.base_level + 1

    def word(self) -> str:
        return " ".join("V%d" % self.index(z) for z in self.lozenges)

    def compact_word(self) -> str:
        """Like :meth:`word`, with each run ``V_{i+1} V_i V_{i+1}`` written ``H_i``."""
        idx = [self.index(z) for z in self.lozenges]
        out, n = [], 0
        while n < len(idx):
            i = idx[n]
            if n + 2 < len(idx) and idx[n + 1] == i - 1 and idx[n + 2] == i:
                out.append("H%d" % (i - 1))
                n += 3
            else:
                out.append("V%d" % i)
                n += 1
        return " ".join(out)

    def hexagon_count(self) -> int:
        return len(_hexagon_centers(*self.apex))

    def value(self, s: CubeCornerState, p):
        # augmentation corners under the flat layers cancel out of the minor
        return s.t(p) if s.on_surface(p) else 1

    def factor_product(self, s: CubeCornerState) -> FactorProduct:
        val = self.value
        return FactorProduct(
            [Factor("V", self.index(z), (val(s, z.bottom), val(s, z.left), val(s, z.right))) for z in self.lozenges],
            self.dim,
        )


def augmented_shadow(a: int, b: int, c: int, state: CubeCornerState | None = None) -> AugmentedShadow:
    """The augmented shadow of ``(a, b, c)``, tiled as on ``state`` (flat by default).

    On a state reached by cube additions the region is unchanged; its tiling
    is read off the faces of the current surface.
    """
    hexes = _hexagon_lozenges(a, b, c)
    if state is not None:
        quads = [[_lk(p) for p in z.corners()] for z in hexes]
        found = [z for z in surface_lozenges(state) if any(_inside(_centroid(z), q) for q in quads)]
        if len(found) != len(hexes):
            raise WindowTooSmall("state does not tile the augmented shadow of %r" % ((a, b, c),))
        hexes = found
    extra = _augmentation(a, b, c)
    tiles = hexes + extra
    pts = {p for z in tiles for p in z.corners()}
    rows: dict = {}
    for p in pts:
        rows.setdefault(level(p), []).append(p)
    lo = min(rows)
    west = tuple(min(rows[l], key=column) for l in sorted(rows))
    east = tuple(max(rows[l], key=column) for l in sorted(rows))
    n = a + b + c - 2
    if len(west) != 3 * n + 1:
        raise ValueError("augmented shadow has %d levels, expected %d" % (len(west), 3 * n + 1))
    flat = state is None or set(hexes) == set(_hexagon_lozenges(a, b, c))
    order = _flat_word(a, b, c) if flat else _sweep_order(tiles)
    return AugmentedShadow((a, b, c), n, tuple(order), lo, west, east, tuple(extra))


def theta_prefactor(sh: AugmentedShadow, s: CubeCornerState):
    n = sh.n
    out = 1
    for j in range(2 * n + 1, 3 * n + 1):
        out = out * sh.value(s, sh.east[j - 1])
    for i in range(n + 2, 2 * n + 1):
        out = field_div(out, sh.value(s, sh.west[i - 1]))
    return out


def solve_theta(s: CubeCornerState, a: int, b: int, c: int):
    """Prefactor times the minor on rows ``N+1..2N`` and columns ``2N+1..3N``.

    ``s`` may be flat or any state reached from it by adding cubes inside
    the corner of ``(a, b, c)``.
    """
    if a + b + c <= 2 and s.on_surface((a, b, c)):
        return s.t((a, b, c))
    sh = augmented_shadow(a, b, c, s)
    n = sh.n
    m = product_matrix(sh.factor_product(s))
    rows = list(range(n + 1, 2 * n + 1))
    cols = list(range(2 * n + 1, 3 * n + 1))
    return to_laurent(theta_prefactor(sh, s) * minor_det(m, rows, cols))


# ---------------------------------------------------------------------------
# embedding into the octahedron lattice


def embed_cc(a: int, b: int, c: int) -> tuple:
    """``(a, b, c) -> (a - c, b - c, a + b - 1)``."""
    return (a - c, b - c, a + b - 1)


def unembed_cc(i: int, j: int, k: int) -> tuple:
    c2 = k + 1 - i - j
    if c2 % 2:
        raise ValueError("(%d, %d, %d) is not an embedded point" % (i, j, k))
    c = c2 // 2
    return (i + c, j + c, c)


def cc_surface(s: CubeCornerState, x0: int, x1: int, y0: int, y1: int):
    """Octahedron initial data carrying the flat cube-corner layers.

    Over each ``(i, j)`` the embedded surface point is the unique one whose
    preimage has time 0, 1 or 2; its value is that of ``s``.
    """
    from .surface import SteppedSurface

    def height(i, j):
        for k in range(-abs(i) - abs(j) - 3, abs(i) + abs(j) + 4):
            if (i + j + k) % 2 and (k + 1 - i - j) % 2 == 0:
                if sum(unembed_cc(i, j, k)) in (0, 1, 2):
                    return k
        raise ValueError("no flat layer over (%d, %d)" % (i, j))

    surface = SteppedSurface.from_function(x0, x1, y0, y1, height)
    values = {}
    for i, j in surface.vertices():
        p = unembed_cc(i, j, surface.k(i, j))
        values[(i, j)] = s.t(p) if s.on_surface(p) else default_label(*p)
    return surface.with_values(values)


def _embedded(s: CubeCornerState, a: int, b: int, c: int):
    i, j, k = embed_cc(a, b, c)
    r = 2 * (a + b + c) + 3
    return cc_surface(s, i - r, i + r, j - r, j + r), (i, j, k)


def recurse_theta_cc(s: CubeCornerState, a: int, b: int, c: int):
    """``θ[a,b,c]`` from the octahedron recursion on the embedded flat layers."""
    from .octahedron import recurse_t

    surface, point = _embedded(s, a, b, c)
    return recurse_t(surface, point)


def gamma_apex(n: int) -> tuple:
    """Balanced apex with ``a + b + c = n + 2`` and ``a >= b >= c``; ``(2, 2, 1)`` for ``n = 3``."""
    if n < 1:
        raise ValueError("N must be positive")
    c = (n + 2) // 3
    b = (n + 2 - c) // 2
    return (n + 2 - b - c, b, c)


def gamma_graph(s: CubeCornerState, a: int, b: int, c: int):
    """Dimer graph of ``θ[a,b,c]`` on flat layers: the dual of the embedded shadow.

    Faces are renamed after the cube-corner points they carry.
    """
    from .dimer import build_468_dual
    from .surface import shadow

    if not s.is_flat():
        raise ValueError("the cube-corner graph is built on flat layers only")
    surface, point = _embedded(s, a, b, c)
    g = build_468_dual(shadow(surface, point))
    for f in g.faces:
        i, j = f.site
        f.site = unembed_cc(i, j, surface.k(i, j))
        f.name = var_name("tau", *f.site)
    return g


def dimer_theta(s: CubeCornerState, a: int, b: int, c: int):
    from .dimer import partition_function

    if a + b + c <= 2 and s.on_surface((a, b, c)):
        return s.t((a, b, c))
    return partition_function(gamma_graph(s, a, b, c))
