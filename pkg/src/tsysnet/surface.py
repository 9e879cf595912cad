"""Stepped surfaces, their mutations, shadows and lozenge decompositions.

Lattice conventions: a vertex is ``(x, y)`` with ``x`` the row coordinate
(growing upward, it is also the matrix row) and ``y`` the column coordinate
(growing to the right, it orders matrix factors). A horizontal edge joins
``(x, y)`` and ``(x, y+1)``. The unit square ``(x, y)`` has corners
``(x, y), (x, y+1), (x+1, y), (x+1, y+1)``; it is cut either along the
anti-diagonal ``(x, y+1)-(x+1, y)`` or the main diagonal ``(x, y)-(x+1, y+1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .connection import Factor, FactorProduct
from .errors import NotLozengeable, NotMutable, OutOfCone, ParseError, WindowTooSmall
from .ring import LaurentPoly, canonical_text, divide, parse_laurent, var_name

HEADER = "# tsysnet-surface"

ANTI = "anti"  # (x, y+1)-(x+1, y)
MAIN = "main"  # (x, y)-(x+1, y+1)


def default_label(x: int, y: int) -> LaurentPoly:
    return LaurentPoly.var(var_name("t", x, y))


def _nbrs(v):
    x, y = v
    return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))


@dataclass(frozen=True)
class SteppedSurface:
    """Heights ``k[x, y]`` on the window ``[x0, x1] x [y0, y1]`` plus assignments."""

    x0: int
    x1: int
    y0: int
    y1: int
    heights: tuple  # rows x0..x1, each a tuple over y0..y1
    assignments: Mapping = field(default_factory=dict)

    def __post_init__(self):
        rows = tuple(tuple(int(k) for k in row) for row in self.heights)
        object.__setattr__(self, "heights", rows)
        object.__setattr__(self, "assignments", dict(self.assignments))
        if self.x1 < self.x0 or self.y1 < self.y0:
            raise ValueError("empty window")
        if len(rows) != self.x1 - self.x0 + 1 or any(len(r) != self.y1 - self.y0 + 1 for r in rows):
            raise ValueError("height table does not match the window")
        for x, y in self.vertices():
            k = self.k(x, y)
            if (x + y + k) % 2 != 1:
                raise ValueError("x + y + k must be odd at (%d, %d)" % (x, y))
            for v in ((x + 1, y), (x, y + 1)):
                if v in self and abs(self.k(*v) - k) != 1:
                    raise ValueError("heights must step by 1 between (%d, %d) and %r" % (x, y, v))

    # -- constructors -----------------------------------------------------------
    @classmethod
    def flat(cls, x0: int, x1: int, y0: int, y1: int, assignments=None) -> "SteppedSurface":
        """``k = (x + y + 1) mod 2``."""
        heights = [[(x + y + 1) % 2 for y in range(y0, y1 + 1)] for x in range(x0, x1 + 1)]
        return cls(x0, x1, y0, y1, heights, assignments or {})

    @classmethod
    def from_function(cls, x0, x1, y0, y1, fn: Callable[[int, int], int], assignments=None):
        heights = [[fn(x, y) for y in range(y0, y1 + 1)] for x in range(x0, x1 + 1)]
        return cls(x0, x1, y0, y1, heights, assignments or {})

    # -- access -------------------------------------------------------------------
    def __contains__(self, v) -> bool:
        x, y = v
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1

    def vertices(self):
        return [(x, y) for x in range(self.x0, self.x1 + 1) for y in range(self.y0, self.y1 + 1)]

    def k(self, x: int, y: int) -> int:
        if (x, y) not in self:
            raise OutOfCone("(%d, %d) outside the surface window" % (x, y))
        return self.heights[x - self.x0][y - self.y0]

    def t(self, x: int, y: int):
        self.k(x, y)
        v = self.assignments.get((x, y))
        return default_label(x, y) if v is None else v

    def with_values(self, values: Mapping) -> "SteppedSurface":
        merged = dict(self.assignments)
        merged.update(values)
        return SteppedSurface(self.x0, self.x1, self.y0, self.y1, self.heights, merged)

    def is_interior(self, x: int, y: int) -> bool:
        return self.x0 < x < self.x1 and self.y0 < y < self.y1

    # -- literal format ---------------------------------------------------------
    def to_text(self) -> str:
        lines = [HEADER, "window %d %d %d %d" % (self.x0, self.x1, self.y0, self.y1)]
        for x in range(self.x0, self.x1 + 1):
            lines.append("k %d: %s" % (x, " ".join(str(k) for k in self.heights[x - self.x0])))
        for (x, y) in sorted(self.assignments):
            v = self.assignments[(x, y)]
            text = canonical_text(v) if isinstance(v, LaurentPoly) else str(v)
            lines.append("t %d %d = %s" % (x, y, text))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SteppedSurface":
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
                elif key == "k":
                    x, _, ks = rest.partition(":")
                    rows[int(x)] = [int(v) for v in ks.split()]
                elif key == "t":
                    lhs, eq, rhs = rest.partition("=")
                    if not eq:
                        raise ValueError
                    x, y = (int(v) for v in lhs.split())
                    values[(x, y)] = _parse_value(rhs)
                else:
                    raise ParseError("unknown surface directive %r" % key)
            except ValueError:
                raise ParseError("bad surface line %r" % line) from None
        if window is None or len(window) != 4:
            raise ParseError("surface literal needs 'window X0 X1 Y0 Y1'")
        x0, x1, y0, y1 = window
        if sorted(rows) != list(range(x0, x1 + 1)):
            raise ParseError("need one 'k X: ...' row per window row")
        try:
            return cls(x0, x1, y0, y1, [rows[x] for x in range(x0, x1 + 1)], values)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


def _parse_value(text: str):
    text = text.strip()
    try:
        return Fraction(text)
    except ValueError:
        return parse_laurent(text)


def mutate_surface(s: SteppedSurface, i: int, j: int) -> SteppedSurface:
    """Push the local extremum at ``(i, j)`` through its octahedron."""
    if not s.is_interior(i, j):
        raise NotMutable("(%d, %d) is not an interior vertex" % (i, j))
    k0 = s.k(i, j)
    around = {s.k(*v) for v in _nbrs((i, j))}
    if len(around) != 1:
        raise NotMutable("(%d, %d) is not a local extremum" % (i, j))
    eps = around.pop() - k0
    heights = [list(r) for r in s.heights]
    heights[i - s.x0][j - s.y0] = k0 + 2 * eps
    values = dict(s.assignments)
    values[(i, j)] = divide(s.t(i + 1, j) * s.t(i - 1, j) + s.t(i, j + 1) * s.t(i, j - 1), s.t(i, j))
    return SteppedSurface(s.x0, s.x1, s.y0, s.y1, heights, values)


def mutable_sites(s: SteppedSurface, direction: int | None = None) -> list:
    """Interior local extrema; ``direction`` +1 keeps minima, -1 maxima."""
    out = []
    for x, y in s.vertices():
        if not s.is_interior(x, y):
            continue
        around = {s.k(*v) for v in _nbrs((x, y))}
        if len(around) == 1:
            eps = around.pop() - s.k(x, y)
            if direction is None or eps == direction:
                out.append((x, y))
    return out


# ---------------------------------------------------------------------------
# tessellation


class DiagonalPolicy(enum.Enum):
    FIRST = "first"  # anti-diagonal in every uni-colour square
    SECOND = "second"  # main diagonal


FirstDiagonal = DiagonalPolicy.FIRST
SecondDiagonal = DiagonalPolicy.SECOND


@dataclass(frozen=True)
class Cell:
    kind: str  # "square" or "triangle"
    corners: tuple
    color: str  # "gray" or "white"


@dataclass
class Tessellation:
    surface: SteppedSurface
    vertices: frozenset
    cells: list
    forced: dict  # square -> diagonal fixed by heights or by the domain boundary
    unicolor: list  # squares where either diagonal may be drawn

    def square_color(self, sq) -> str | None:
        for c in self.cells:
            if c.kind == "square" and c.corners[0] == sq:
                return c.color
        return None


def _corners(sq):
    x, y = sq
    return ((x, y), (x, y + 1), (x + 1, y), (x + 1, y + 1))


def equal_diagonals(s: SteppedSurface, sq) -> list:
    """Diagonals of the unit square whose endpoints share a height."""
    a, b, c, d = (s.k(*v) for v in _corners(sq))
    out = []
    if b == c:
        out.append(ANTI)
    if a == d:
        out.append(MAIN)
    return out


def _triangle(sq, diagonal: str, lower: bool) -> tuple:
    (x, y) = sq
    v00, v01, v10, v11 = _corners(sq)
    if diagonal == ANTI:
        return (v00, v01, v10) if lower else (v01, v10, v11)
    return (v00, v01, v11) if lower else (v00, v10, v11)


def _up_gray(s: SteppedSurface, x: int, y: int) -> bool:
    """Colour of the triangle above the horizontal edge at ``(x, y)``."""
    return s.k(x, y + 1) > s.k(x, y)


def tessellate(s: SteppedSurface, domain=None) -> Tessellation:
    """Square/triangle tessellation of ``domain`` (default: whole window)."""
    verts = frozenset(domain) if domain is not None else frozenset(s.vertices())
    for v in verts:
        if v not in s:
            raise WindowTooSmall("vertex %r outside the window" % (v,))
    cells, forced, unicolor = [], {}, []
    xs = sorted({v[0] for v in verts})
    ys = sorted({v[1] for v in verts})
    if not xs:
        return Tessellation(s, verts, cells, forced, unicolor)
    for x in range(xs[0], xs[-1]):
        for y in range(ys[0], ys[-1]):
            sq = (x, y)
            inside = [v in verts for v in _corners(sq)]
            n = sum(inside)
            if n < 3:
                continue
            diags = equal_diagonals(s, sq)
            lower_gray = _up_gray(s, x, y)
            upper_gray = not _up_gray(s, x + 1, y)
            if n == 4:
                if len(diags) == 2:
                    unicolor.append(sq)
                    cells.append(Cell("square", (sq,), "gray" if lower_gray else "white"))
                    continue
                forced[sq] = diags[0]
                for lower, gray in ((True, lower_gray), (False, upper_gray)):
                    cells.append(Cell("triangle", _triangle(sq, diags[0], lower), "gray" if gray else "white"))
                continue
            missing = inside.index(False)
            need = MAIN if missing in (1, 2) else ANTI
            if need not in diags:
                raise NotLozengeable("square %r cannot be cut along the domain boundary" % (sq,))
            forced[sq] = need
            lower = missing in (2, 3) if need == ANTI else missing == 2
            cells.append(
                Cell("triangle", _triangle(sq, need, lower), "gray" if (lower_gray if lower else upper_gray) else "white")
            )
    return Tessellation(s, verts, cells, forced, unicolor)


# ---------------------------------------------------------------------------
# lozenges


@dataclass(frozen=True)
class Lozenge:
    kind: str  # "U" or "V"
    row: int  # x of the horizontal edge
    col: int  # y of its left end
    labels: tuple  # (apex, left, right) for V, (left, right, apex) for U
    points: tuple  # lattice points matching ``labels``

    def __str__(self):
        return "%s%d" % (self.kind, self.row)


@dataclass
class LozengeSeq:
    lozenges: list
    base: int  # lattice row mapped to matrix row 1
    dim: int
    diagonals: dict = field(default_factory=dict)  # square -> cut used

    def word(self) -> str:
        return " ".join(str(z) for z in self.lozenges)

    def relative_word(self, center_row: int) -> str:
        """Word with indices written relative to ``center_row`` (``i``, ``i+1``, ``i-2`` ...)."""
        out = []
        for z in self.lozenges:
            d = z.row - center_row
            out.append("%s_i%s" % (z.kind, "" if d == 0 else "%+d" % d))
        return " ".join(out)

    def factor_product(self) -> FactorProduct:
        return FactorProduct(
            [Factor(z.kind, z.row - self.base + 1, z.labels) for z in self.lozenges], self.dim
        )

    def __len__(self):
        return len(self.lozenges)


def _choose(policy, sq):
    if isinstance(policy, DiagonalPolicy):
        return ANTI if policy is DiagonalPolicy.FIRST else MAIN
    if callable(policy):
        d = policy(sq)
        if isinstance(d, DiagonalPolicy):
            return ANTI if d is DiagonalPolicy.FIRST else MAIN
        if d not in (ANTI, MAIN):
            raise ValueError("diagonal callback must return a DiagonalPolicy")
        return d
    raise TypeError("policy must be a DiagonalPolicy or a callable")


def _diagonal(t: Tessellation, sq, policy):
    if sq in t.forced:
        return t.forced[sq]
    s = t.surface
    if all(v in s for v in _corners(sq)):
        diags = equal_diagonals(s, sq)
        return diags[0] if len(diags) == 1 else _choose(policy, sq)
    # completion square hanging off the window: any diagonal will do
    return _choose(policy, sq)


def _label(s: SteppedSurface, v, filler):
    if v in s:
        return s.t(*v)
    return filler(v)


def lozenge_decompose(
    t: Tessellation,
    policy=DiagonalPolicy.FIRST,
    rows: tuple | None = None,
    filler=None,
) -> LozengeSeq:
    """Lozenges of a tessellated domain, in left-to-right order.

    Each horizontal edge of the domain carries one lozenge: ``U`` when the
    height grows along it, ``V`` otherwise. Lozenges in adjacent rows are
    ordered by column, and inside one square by the drawn diagonal; rows two
    apart commute. Ties are broken by column, then bottom to top.
    Completion triangles whose apex lies outside the window take their label
    from ``filler(point)``.
    """
    s = t.surface
    verts = t.vertices
    filler = filler or (lambda v: default_label(*v))
    edges = sorted(
        ((x, y) for (x, y) in verts if (x, y + 1) in verts), key=lambda e: (e[1], e[0])
    )
    diag: dict = {}

    def d_of(sq):
        if sq not in diag:
            diag[sq] = _diagonal(t, sq, policy)
        return diag[sq]

    lozenges = []
    for x, y in edges:
        d_of((x - 1, y))
        d_of((x, y))
        left, right = (x, y), (x, y + 1)
        if s.k(*right) > s.k(*left):
            apex = (x + 1, y) if d_of((x, y)) == ANTI else (x + 1, y + 1)
            pts = (left, right, apex)
            kind = "U"
        else:
            apex = (x - 1, y + 1) if d_of((x - 1, y)) == ANTI else (x - 1, y)
            pts = (apex, left, right)
            kind = "V"
        labels = tuple(_label(s, p, filler) for p in pts)
        lozenges.append(Lozenge(kind, x, y, labels, pts))

    order = _topo_order(lozenges, d_of)
    xs = [v[0] for v in verts]
    lo = min(xs) if rows is None else min(min(xs), rows[0])
    hi = max(xs) if rows is None else max(max(xs), rows[1])
    if lozenges:
        hi = max(hi, max(z.row for z in lozenges) + 1)
    return LozengeSeq([lozenges[n] for n in order], lo, max(hi - lo + 1, 2), diag)


def _topo_order(lozenges, d_of) -> list:
    import heapq

    n = len(lozenges)
    by_row: dict = {}
    for idx, z in enumerate(lozenges):
        by_row.setdefault(z.row, []).append(idx)
    succ = [[] for _ in range(n)]
    indeg = [0] * n

    def before(a, b):
        succ[a].append(b)
        indeg[b] += 1

    for idx, z in enumerate(lozenges):
        for jdx in by_row.get(z.row, ()):
            if lozenges[jdx].col > z.col:
                before(idx, jdx)
        for jdx in by_row.get(z.row + 1, ()):
            w = lozenges[jdx]
            if w.col > z.col:
                before(idx, jdx)
            elif w.col < z.col:
                before(jdx, idx)
            elif d_of((z.row, z.col)) == ANTI:
                before(idx, jdx)
            else:
                before(jdx, idx)
    heap = [((lozenges[i].col, lozenges[i].row), i) for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, i = heapq.heappop(heap)
        out.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, ((lozenges[j].col, lozenges[j].row), j))
    if len(out) != n:
        raise NotLozengeable("lozenge order has a cycle")
    return out


# ---------------------------------------------------------------------------
# shadows


@dataclass
class ShadowDomain:
    center: tuple  # (i, j, k)
    vertices: frozenset
    tessellation: Tessellation
    sw: list
    se: list

    @property
    def ell(self) -> int:
        return len(self.se)

    def boundary(self) -> list:
        return sorted(v for v in self.vertices if any(u not in self.vertices for u in _nbrs(v)))

    def minor_rows(self) -> list:
        i = self.center[0]
        return list(range(i - self.ell + 1, i + 1))


def cone_interior(s: SteppedSurface, i: int, j: int, k: int) -> set:
    """Surface points strictly inside the backward light cone of ``(i, j, k)``."""
    return {
        (x, y)
        for (x, y) in s.vertices()
        if abs(x - i) + abs(y - j) < k - s.k(x, y)
    }


def shadow(s: SteppedSurface, point) -> ShadowDomain:
    """Shadow of ``(i, j, k)``: the strict cone interior plus its neighbours."""
    i, j, k = point
    if (i, j) not in s:
        raise WindowTooSmall("(%d, %d) outside the window" % (i, j))
    if (i + j + k) % 2 != 1:
        raise OutOfCone("(%d, %d, %d) has the wrong parity" % (i, j, k))
    k0 = s.k(i, j)
    if k < k0:
        raise OutOfCone("(%d, %d, %d) lies below the surface" % (i, j, k))
    inner = cone_interior(s, i, j, k)
    verts = set(inner)
    for v in inner:
        for u in _nbrs(v):
            if u not in s:
                raise WindowTooSmall("shadow of (%d, %d, %d) leaves the window" % (i, j, k))
            verts.add(u)
    if not verts:
        verts = {(i, j)}
    verts = frozenset(verts)
    tess = tessellate(s, verts)
    # boundary ends of each row, read bottom to top
    ends: dict = {}
    for x, y in verts:
        lo, hi = ends.get(x, (y, y))
        ends[x] = (min(lo, y), max(hi, y))
    bottom = min(ends)
    sw = [(x, ends[x][0]) for x in range(bottom, i)]
    se = [(x, ends[x][1]) for x in range(bottom, i + 1)]
    return ShadowDomain((i, j, k), verts, tess, sw, se)


def shadow_lozenges(sh: ShadowDomain, policy=DiagonalPolicy.FIRST, filler=None) -> LozengeSeq:
    rows = (sh.center[0] - sh.ell + 1, sh.center[0])
    return lozenge_decompose(sh.tessellation, policy, rows=rows, filler=filler)
