"""Face-weighted dimer models and their partition functions.

A :class:`FaceWeightedGraph` is a vertex-bicoloured planar graph whose faces
carry labels (initial-data values). A face with label ``a`` whose edges carry
``D`` dimers contributes ``a ** (base - D)``; inner faces have
``base = valency / 2 - 1`` and external faces ``base = 1``, corrected at
the boundary where a solution prefactor has been absorbed. The partition
function is the sum over perfect matchings of the product of face weights.

Graph families built here: transformed ladders (A1 initial paths), duals of
tessellated shadows (Aztec-diamond duals for flat data, 4-6-8 graphs in
general) and the cube-corner graphs.
"""

from __future__ import annotations

import sys
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .ring import LaurentPoly, RatFunc, canonical_text, field_div, to_laurent


@dataclass
class Face:
    label: object
    edges: frozenset
    inner: bool
    base: int
    name: str = ""
    site: tuple | None = None

    @property
    def valency(self) -> int:
        return len(self.edges)


@dataclass
class FaceWeightedGraph:
    colors: dict = field(default_factory=dict)  # vertex -> "B" | "W"
    edges: dict = field(default_factory=dict)  # edge id -> (black, white)
    faces: list = field(default_factory=list)
    separators: list = field(default_factory=list)  # dashed label boundaries, metadata only

    def add_vertex(self, v, color: str) -> None:
        if color not in ("B", "W"):
            raise ValueError("vertex colour must be B or W")
        self.colors[v] = color

    def add_edge(self, u, v) -> int:
        cu, cv = self.colors[u], self.colors[v]
        if cu == cv:
            raise ValueError("edge %r-%r joins two %s vertices" % (u, v, cu))
        eid = len(self.edges)
        self.edges[eid] = (u, v) if cu == "B" else (v, u)
        return eid

    def add_face(self, label, edges, inner: bool, base: int | None = None, name: str = "") -> Face:
        edges = frozenset(edges)
        if base is None:
            base = len(edges) // 2 - 1 if inner else 1
        face = Face(label, edges, inner, base, name)
        self.faces.append(face)
        return face

    def black(self):
        return sorted((v for v, c in self.colors.items() if c == "B"), key=repr)

    def white(self):
        return sorted((v for v, c in self.colors.items() if c == "W"), key=repr)

    def is_bipartite(self) -> bool:
        return all(self.colors[b] == "B" and self.colors[w] == "W" for b, w in self.edges.values())

    def face_census(self) -> Counter:
        """Valency histogram of inner faces."""
        return Counter(f.valency for f in self.faces if f.inner)

    def export_text(self) -> str:
        """Plain-text listing: vertices, edges, faces with labels and weights."""
        lines = ["# tsysnet-graph"]
        index = {v: n for n, v in enumerate(sorted(self.colors, key=repr))}
        for v in sorted(self.colors, key=repr):
            lines.append("vertex %d %s %s" % (index[v], self.colors[v], _vtext(v)))
        for eid in sorted(self.edges):
            b, w = self.edges[eid]
            lines.append("edge %d %d %d" % (eid, index[b], index[w]))
        for n, f in enumerate(self.faces):
            lines.append(
                "face %d %s base=%d label=%s edges=%s"
                % (
                    n,
                    "inner" if f.inner else "external",
                    f.base,
                    _label_text(f.label),
                    ",".join(str(e) for e in sorted(f.edges)),
                )
            )
        for sep in self.separators:
            lines.append("separator %s" % (sep,))
        return "\n".join(lines) + "\n"


def _vtext(v) -> str:
    return repr(v).replace(" ", "")


def _label_text(x) -> str:
    if isinstance(x, LaurentPoly):
        return canonical_text(x)
    return str(x)


def check_graph(g: FaceWeightedGraph) -> None:
    """Raise ``ValueError`` if bipartiteness or face/edge incidence is broken."""
    if not g.is_bipartite():
        raise ValueError("graph is not bipartite")
    for f in g.faces:
        missing = f.edges - set(g.edges)
        if missing:
            raise ValueError("face %s references unknown edges %s" % (f.name, sorted(missing)))


# ---------------------------------------------------------------------------
# perfect matchings


def enumerate_matchings(g: FaceWeightedGraph) -> Iterator[frozenset]:
    """All perfect matchings as frozensets of edge ids, in a fixed order.

    Branches on the uncovered vertex with fewest usable edges; an uncovered
    vertex with none left prunes the branch.
    """
    incident: dict = {v: [] for v in g.colors}
    for eid in sorted(g.edges):
        b, w = g.edges[eid]
        incident[b].append((eid, w))
        incident[w].append((eid, b))
    order = {v: n for n, v in enumerate(sorted(g.colors, key=repr))}
    if len(g.black()) != len(g.white()):
        return

    covered: set = set()
    chosen: list = []

    def pick():
        best, best_opts = None, None
        for v in incident:
            if v in covered:
                continue
            opts = [(e, u) for e, u in incident[v] if u not in covered]
            if best_opts is None or len(opts) < len(best_opts) or (
                len(opts) == len(best_opts) and order[v] < order[best]
            ):
                best, best_opts = v, opts
                if not opts:
                    break
        return best, best_opts

    def rec():
        if len(covered) == len(incident):
            yield frozenset(chosen)
            return
        v, opts = pick()
        for eid, u in opts:
            covered.add(v)
            covered.add(u)
            chosen.append(eid)
            yield from rec()
            chosen.pop()
            covered.discard(v)
            covered.discard(u)

    yield from rec()


def matching_exponents(g: FaceWeightedGraph, matching: frozenset) -> tuple:
    """Per-face exponent ``base - D`` for one matching."""
    return tuple(f.base - len(f.edges & matching) for f in g.faces)


def matching_weight(g: FaceWeightedGraph, matching: frozenset):
    return _weight(g, matching_exponents(g, matching))


def _weight(g: FaceWeightedGraph, exps: tuple):
    w = 1
    for f, e in zip(g.faces, exps):
        if e > 0:
            w = w * f.label ** e
        elif e < 0:
            w = field_div(w, f.label ** (-e))
    return w


def _vertex_order(g: FaceWeightedGraph) -> list:
    try:
        return sorted(g.colors)
    except TypeError:
        return sorted(g.colors, key=repr)


def _matching_sum(g: FaceWeightedGraph, edge_value, zero, one):
    """Sum over perfect matchings of the product of ``edge_value(eid)``.

    Vertices are matched in a fixed order; the memo key is the first free
    vertex plus the set of later vertices already used, so graphs with a
    narrow profile (ladders, Aztec-like duals) stay cheap.
    """
    order = _vertex_order(g)
    pos = {v: n for n, v in enumerate(order)}
    forward: dict = {v: [] for v in order}
    for eid in sorted(g.edges):
        b, w = g.edges[eid]
        lo, hi = (b, w) if pos[b] < pos[w] else (w, b)
        forward[lo].append((pos[hi], edge_value(eid)))
    if len(g.black()) != len(g.white()):
        return zero
    n = len(order)
    memo: dict = {}

    def rec(i: int, used: frozenset):
        while i < n and i in used:
            used = used - {i}
            i += 1
        if i == n:
            return one
        key = (i, used)
        if key in memo:
            return memo[key]
        total = zero
        for j, val in forward[order[i]]:
            if j not in used:
                total = total + val * rec(i + 1, used | {j})
        memo[key] = total
        return total

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 100))
    try:
        return rec(0, frozenset())
    finally:
        sys.setrecursionlimit(limit)


class _Census:
    """Multiset of face-exponent vectors, closed under sum and product."""

    __slots__ = ("c",)

    def __init__(self, c):
        self.c = c

    def __add__(self, other):
        out = Counter(self.c)
        out.update(other.c)
        return _Census(out)

    def __mul__(self, other):
        out: Counter = Counter()
        for a, m in self.c.items():
            for b, k in other.c.items():
                out[tuple(x + y for x, y in zip(a, b))] += m * k
        return _Census(out)


def partition_function(g: FaceWeightedGraph):
    """Sum over perfect matchings of the product of face weights.

    Numeric labels are folded into edge weights. Otherwise matchings are
    grouped by exponent vector before the labels are multiplied out, so
    repeated weights cost one evaluation.
    """
    faces_of: dict = {e: [] for e in g.edges}
    for n, f in enumerate(g.faces):
        for e in f.edges:
            faces_of[e].append(n)
    if all(isinstance(f.label, (int, Fraction)) for f in g.faces):
        pre = Fraction(1)
        for f in g.faces:
            pre *= Fraction(f.label) ** f.base

        def value(eid):
            w = Fraction(1)
            for n in faces_of[eid]:
                w /= g.faces[n].label
            return w

        return pre * _matching_sum(g, value, Fraction(0), Fraction(1))

    nf = len(g.faces)

    def vec(eid):
        v = [0] * nf
        for n in faces_of[eid]:
            v[n] -= 1
        return _Census(Counter({tuple(v): 1}))

    base = tuple(f.base for f in g.faces)
    census = _matching_sum(g, vec, _Census(Counter()), _Census(Counter({base: 1}))).c
    total = 0
    for exps in sorted(census):
        total = total + census[exps] * _weight(g, exps)
    return to_laurent(total) if isinstance(total, RatFunc) else total


def count_matchings(g: FaceWeightedGraph) -> int:
    return _matching_sum(g, lambda eid: 1, 0, 1)


# ---------------------------------------------------------------------------
# transformed ladders (A1)


def ladder_graph(steps: Sequence[str], labels: Sequence) -> FaceWeightedGraph:
    """Transformed ladder for a word of ``U`` (up) / ``V`` (down) steps.

    One rung per step: a ``V`` rung has its black end on the bottom rail, a
    ``U`` rung on the top rail. Between two rungs whose rail ends share a
    colour a single opposite-colour vertex is inserted, so equal consecutive
    steps bound a hexagon and alternating steps a square. ``labels`` holds
    ``len(steps) + 1`` values: left boundary, inner faces, right boundary.
    """
    n = len(steps)
    if len(labels) != n + 1:
        raise ValueError("need len(steps) + 1 labels")
    g = FaceWeightedGraph()
    if n == 0:
        g.add_face(labels[0], (), inner=False, name="ext")
        return g
    rungs = []
    for r, s in enumerate(steps):
        if s not in ("U", "V"):
            raise ValueError("steps must be U or V")
        bot, top = ("bot", r), ("top", r)
        g.add_vertex(bot, "B" if s == "V" else "W")
        g.add_vertex(top, "W" if s == "V" else "B")
        rungs.append(g.add_edge(bot, top))
    for r in range(n - 1):
        face_edges = [rungs[r], rungs[r + 1]]
        for rail in ("bot", "top"):
            u, v = (rail, r), (rail, r + 1)
            if g.colors[u] == g.colors[v]:
                mid = (rail, r + 0.5)
                g.add_vertex(mid, "W" if g.colors[u] == "B" else "B")
                face_edges += [g.add_edge(u, mid), g.add_edge(mid, v)]
            else:
                face_edges.append(g.add_edge(u, v))
        g.add_face(labels[r + 1], face_edges, inner=True, name="F%d" % (r + 1))
    g.add_face(labels[0], [rungs[0]], inner=False, name="left")
    g.add_face(labels[n], [rungs[-1]], inner=False, name="right")
    return g


def build_ladder(p, j0: int, j1: int) -> FaceWeightedGraph:
    from .a1 import ladder_graph_a1

    return ladder_graph_a1(p, j0, j1)


# ---------------------------------------------------------------------------
# duals of tessellated shadows (4-6-8 graphs)


def _cell_points(sq, diagonal: str, lower: bool) -> frozenset:
    x, y = sq
    v00, v01, v10, v11 = (x, y), (x, y + 1), (x + 1, y), (x + 1, y + 1)
    if diagonal == "anti":
        return frozenset((v00, v01, v10) if lower else (v01, v10, v11))
    return frozenset((v00, v01, v11) if lower else (v00, v10, v11))


def _is_cycle(g: FaceWeightedGraph, eids) -> bool:
    """True if the edges form one closed cycle (the face is bounded)."""
    if len(eids) < 4:
        return False
    deg: Counter = Counter()
    adj: dict = {}
    for e in eids:
        b, w = g.edges[e]
        deg[b] += 1
        deg[w] += 1
        adj.setdefault(b, []).append(w)
        adj.setdefault(w, []).append(b)
    if any(d != 2 for d in deg.values()):
        return False
    start = next(iter(adj))
    seen, stack = {start}, [start]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(adj)


def build_468_dual(sh, policy=None, filler=None) -> FaceWeightedGraph:
    """Dual graph of a tessellated shadow, with the boundary prefactor absorbed.

    Every lozenge becomes a vertical edge between the lines ``x - 1/2`` and
    ``x + 1/2`` (its black end on the gray triangle). Along a line the cells
    of one strip are read left to right; neighbours of equal colour merge
    into one vertex, neighbours of opposite colour are joined. A vertex alone
    on its line is erased together with its vertical edges. Faces carry the
    labels of the shadow vertices they surround.
    """
    from .surface import DiagonalPolicy, cone_interior, default_label, shadow_lozenges

    seq = shadow_lozenges(sh, policy or DiagonalPolicy.FIRST, filler)
    surface = sh.tessellation.surface
    filler = filler or (lambda v: default_label(*v))
    diag = seq.diagonals

    i, j, k = sh.center
    core = cone_interior(surface, i, j, k) or {(i, j)}

    cells: dict = {}  # (strip, y, order) -> (points, gray)
    vertical = []
    for z in seq.lozenges:
        x, y = z.row, z.col
        d_up, d_dn = diag[(x, y)], diag[(x - 1, y)]
        up = (x, y, 0 if d_up == "anti" else 1)
        dn = (x - 1, y, 1 if d_dn == "anti" else 0)
        pts_up = _cell_points((x, y), d_up, True)
        pts_dn = _cell_points((x - 1, y), d_dn, False)
        # cells with every corner on the shadow boundary lie outside it
        if pts_up & core:
            cells[up] = (pts_up, z.kind == "U")
        if pts_dn & core:
            cells[dn] = (pts_dn, z.kind == "V")
        vertical.append((dn, up, ((x, y), (x, y + 1))))

    # merge runs of equal colour along each line
    owner: dict = {}
    lines: dict = {}
    for key in sorted(cells):
        lines.setdefault(key[0], []).append(key)
    hedges = []
    for strip, keys in lines.items():
        prev = None
        for key in keys:
            pts, gray = cells[key]
            if prev is not None:
                ppts, pgray = cells[prev]
                shared = pts & ppts
                if len(shared) == 2 and pgray == gray:
                    owner[key] = owner[prev]
                    prev = key
                    continue
                if len(shared) == 2 and shared <= sh.vertices:
                    hedges.append((prev, key, tuple(sorted(shared))))
            owner[key] = ("v", strip, key[1], key[2])
            prev = key

    joined = {owner[a] for a, b, _ in hedges} | {owner[b] for a, b, _ in hedges}
    erased = set(owner.values()) - joined

    g = FaceWeightedGraph()
    for key, v in owner.items():
        if v not in erased and v not in g.colors:
            g.add_vertex(v, "B" if cells[key][1] else "W")
    face_edges: dict = {}
    for a, b, pts in hedges:
        eid = g.add_edge(owner[a], owner[b])
        for p in pts:
            face_edges.setdefault(p, []).append(eid)
    for a, b, pts in vertical:
        if a not in owner or b not in owner or owner[a] in erased or owner[b] in erased:
            g.separators.append("%r-%r" % pts)
            continue
        eid = g.add_edge(owner[a], owner[b])
        for p in pts:
            face_edges.setdefault(p, []).append(eid)

    for p in sorted(face_edges):
        inner = _is_cycle(g, face_edges[p])
        label = surface.t(*p) if p in surface else filler(p)
        g.add_face(label, face_edges[p], inner, name="t(%d,%d)" % p).site = p
    return g


def build_gamma(n: int, assignments=None) -> FaceWeightedGraph:
    """The cube-corner graph for ``N = n`` at the apex of :func:`cubecorner.gamma_apex`.

    ``assignments`` maps points ``(a, b, c)`` of the flat layers to labels.
    """
    from .cubecorner import CubeCornerState, gamma_apex, gamma_graph

    apex = gamma_apex(n)
    return gamma_graph(CubeCornerState.flat_for(*apex, assignments), *apex)


def build_aztec_dual(k: int, assignments=None, center=None) -> FaceWeightedGraph:
    """Dual of the flat square domain of ``(i, j, k)`` (an Aztec-diamond dual).

    ``center`` defaults to the point ``(0, j)`` with the parity that fits ``k``.
    """
    from .octahedron import flat_surface_for
    from .surface import shadow

    i, j = center if center is not None else (0, (k + 1) % 2)
    s = flat_surface_for(i, j, k, assignments)
    return build_468_dual(shadow(s, (i, j, k)))
