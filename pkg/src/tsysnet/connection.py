"""GL2 building blocks of the flat connection, their GLn embeddings and networks.

``U(a, b, c) = [[1, 0], [c/b, a/b]]`` and ``V(a, b, c) = [[b/c, a/c], [0, 1]]``.
An embedded factor ``U_i`` / ``V_i`` acts as that block on rows and columns
``i, i+1`` (1-based) of an N x N identity. Row index grows upward, toward
positive lattice ``i``.

A factor product doubles as a layered network: each chip connects the
wires of one layer to the next, the edge ``r -> s`` carrying the ``(r, s)``
entry of the chip matrix. Path sums over that network reproduce the
product matrix, and vertex-disjoint path families reproduce its minors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Iterator, Mapping, Sequence

from .matrix import Matrix, identity, matmul, matrices_equal
from .ring import LaurentPoly, RatFunc, field_div, values_equal


def u_matrix(a, b, c) -> Matrix:
    return [[1, 0], [field_div(c, b), field_div(a, b)]]


def v_matrix(a, b, c) -> Matrix:
    return [[field_div(b, c), field_div(a, c)], [0, 1]]


def u_a1(a, b) -> Matrix:
    """The A1 specialisation ``U(a, b) = U(a, b, 1)``."""
    return u_matrix(a, b, 1)


def v_a1(a, b) -> Matrix:
    """The A1 specialisation ``V(a, b) = V(1, a, b)``."""
    return v_matrix(1, a, b)


@dataclass(frozen=True)
class Factor:
    kind: str  # "U" or "V"
    index: int
    args: tuple

    def __post_init__(self):
        if self.kind not in ("U", "V"):
            raise ValueError("factor kind must be U or V, got %r" % self.kind)
        if self.index < 1:
            raise ValueError("factor index must be >= 1")
        if len(self.args) != 3:
            raise ValueError("factor takes three arguments")

    def block(self, bindings: Mapping[str, object] | None = None) -> Matrix:
        a, b, c = (_resolve(x, bindings) for x in self.args)
        return u_matrix(a, b, c) if self.kind == "U" else v_matrix(a, b, c)

    def __str__(self):
        return "%s%d" % (self.kind, self.index)


def _resolve(x, bindings):
    if isinstance(x, str):
        if bindings is not None and x in bindings:
            return bindings[x]
        return LaurentPoly.var(x)
    if bindings and isinstance(x, LaurentPoly):
        return x.subs(bindings)
    return x


@dataclass
class FactorProduct:
    factors: list = field(default_factory=list)
    dim: int = 2

    def __post_init__(self):
        self.factors = list(self.factors)
        for f in self.factors:
            if not 1 <= f.index < self.dim:
                raise ValueError("factor %s does not fit in GL_%d" % (f, self.dim))

    def word(self) -> str:
        return " ".join(str(f) for f in self.factors)

    def __len__(self):
        return len(self.factors)


def embed(block: Matrix, index: int, dim: int) -> Matrix:
    m = identity(dim)
    for r in range(2):
        for c in range(2):
            m[index - 1 + r][index - 1 + c] = block[r][c]
    return m


def product_matrix(fp: FactorProduct, bindings: Mapping[str, object] | None = None) -> Matrix:
    """Left-to-right product of the embedded factors."""
    m = identity(fp.dim)
    for f in fp.factors:
        (f11, f12), (f21, f22) = f.block(bindings)
        i = f.index - 1
        for row in m:
            x, y = row[i], row[i + 1]
            if x == 0 and y == 0:
                continue
            row[i] = _lin(x, f11, y, f21)
            row[i + 1] = _lin(x, f12, y, f22)
    return m


def _lin(x, a, y, b):
    out = 0
    if x != 0 and a != 0:
        out = x * a
    if y != 0 and b != 0:
        out = out + y * b
    return out


# ---------------------------------------------------------------------------
# local identities


def _gl(dim: int, *factors) -> Matrix:
    m = identity(dim)
    for kind, index, args in factors:
        block = u_matrix(*args) if kind == "U" else v_matrix(*args)
        m = matmul(m, embed(block, index, dim))
    return m


def check_exchange(a, b, c, u, v):
    """Octahedron move ``V(u,a,b) U(b,c,v) = U(a,b',v) V(u,b',c)``.

    Returns ``(b', holds)`` with ``b' = (ac + uv) / b``.
    """
    bp = field_div(a * c + u * v, b)
    lhs = matmul(v_matrix(u, a, b), u_matrix(b, c, v))
    rhs = matmul(u_matrix(a, bp, v), v_matrix(u, bp, c))
    return bp, matrices_equal(lhs, rhs)


def check_exchange_a1(a, b, c):
    """A1 exchange ``V(a,b) U(b,c) = U(a,b') V(b',c)`` with ``b b' = ac + 1``."""
    bp = field_div(a * c + 1, b)
    lhs = matmul(v_a1(a, b), u_a1(b, c))
    rhs = matmul(u_a1(a, bp), v_a1(bp, c))
    return bp, matrices_equal(lhs, rhs)


def check_tetra_flip(kind: str, labels: Sequence) -> bool:
    """The two diagonal choices of a unicolour square give one product.

    ``whiteflip``: ``U_1(a,b,c) V_2(b,c,d) = V_2(a,c,d) U_1(a,b,d)`` with
    labels ``(a, b, c, d)``. ``commute``: ``V_1(u,a,b) U_2(c,d,v) =
    U_2(c,d,v) V_1(u,a,b)`` with labels ``(u, a, b, c, d, v)``.
    """
    if kind == "whiteflip":
        a, b, c, d = labels
        lhs = _gl(3, ("U", 1, (a, b, c)), ("V", 2, (b, c, d)))
        rhs = _gl(3, ("V", 2, (a, c, d)), ("U", 1, (a, b, d)))
    elif kind == "commute":
        u, a, b, c, d, v = labels
        lhs = _gl(3, ("V", 1, (u, a, b)), ("U", 2, (c, d, v)))
        rhs = _gl(3, ("U", 2, (c, d, v)), ("V", 1, (u, a, b)))
    else:
        raise ValueError("unknown flip kind %r" % kind)
    return matrices_equal(lhs, rhs)


def check_braiding(u, a, b, c, d, e):
    """Braiding ``V1(u,a,b)V2(b,c,d)V1(u,b,e) = V2(a,c,b')V1(u,a,e)V2(e,b',d)``.

    Returns ``(b', holds)`` with ``b b' = ec + ad``.
    """
    bp = field_div(e * c + a * d, b)
    lhs = _gl(3, ("V", 1, (u, a, b)), ("V", 2, (b, c, d)), ("V", 1, (u, b, e)))
    rhs = _gl(3, ("V", 2, (a, c, bp)), ("V", 1, (u, a, e)), ("V", 2, (e, bp, d)))
    return bp, matrices_equal(lhs, rhs)


# ---------------------------------------------------------------------------
# networks


@dataclass
class Network:
    """Layered DAG; vertex ``(layer, row)``, rows 1..dim."""

    dim: int
    layers: int
    edges: dict  # (layer, row) -> list of ((layer + 1, row'), weight, solid)

    def out_edges(self, vertex):
        return self.edges.get(vertex, ())

    def vertices(self):
        return [(layer, r) for layer in range(self.layers + 1) for r in range(1, self.dim + 1)]

    def edge_list(self):
        for src in sorted(self.edges):
            for dst, w, solid in self.edges[src]:
                yield src, dst, w, solid

    def export_text(self) -> str:
        """Plain-text listing: header, vertices, weighted edges, connectors."""
        lines = ["# tsysnet-network", "dim %d" % self.dim, "layers %d" % self.layers]
        for layer, r in self.vertices():
            lines.append("vertex %d %d" % (layer, r))
        for (l0, r0), (l1, r1), w, solid in self.edge_list():
            lines.append(
                "edge %d %d %d %d %s %s" % (l0, r0, l1, r1, "solid" if solid else "dashed", _wtext(w))
            )
        for r in range(1, self.dim + 1):
            lines.append("entry %d 0 %d" % (r, r))
            lines.append("exit %d %d %d" % (r, self.layers, r))
        return "\n".join(lines) + "\n"


def _wtext(w) -> str:
    if isinstance(w, RatFunc):
        return "(%s)/(%s)" % (w.num, w.den)
    return str(w)


def build_network(fp: FactorProduct, bindings: Mapping[str, object] | None = None) -> Network:
    """Concatenate one chip per factor; untouched wires get weight-1 edges."""
    edges: dict = {}
    for layer, f in enumerate(fp.factors):
        block = f.block(bindings)
        for r in range(1, fp.dim + 1):
            if r in (f.index, f.index + 1):
                continue
            edges.setdefault((layer, r), []).append(((layer + 1, r), 1, False))
        for a in range(2):
            for b in range(2):
                w = block[a][b]
                if w == 0:
                    continue
                solid = not (isinstance(w, int) and w == 1 and a == b)
                edges.setdefault((layer, f.index + a), []).append(
                    ((layer + 1, f.index + b), w, solid)
                )
    return Network(fp.dim, len(fp.factors), edges)


def transfer_matrix(net: Network) -> Matrix:
    """Entry ``(r, s)`` is the sum over directed paths from entry r to exit s."""
    out = []
    for r in range(1, net.dim + 1):
        weights = {r: 1}
        for layer in range(net.layers):
            nxt: dict = {}
            for row, w in weights.items():
                for (_, row2), ew, _solid in net.out_edges((layer, row)):
                    term = w * ew if not (isinstance(ew, int) and ew == 1) else w
                    nxt[row2] = nxt[row2] + term if row2 in nxt else term
            weights = nxt
        out.append([weights.get(s, 0) for s in range(1, net.dim + 1)])
    return out


def _family_steps(net: Network, layer: int, rows: tuple):
    """All vertex-disjoint one-layer moves of the occupied rows."""
    choices = [net.out_edges((layer, r)) for r in rows]
    for combo in iproduct(*choices):
        targets = tuple(dst[1] for dst, _, _ in combo)
        if len(set(targets)) != len(targets):
            continue
        yield targets, combo


def path_partition(net: Network, sources: Sequence[int], sinks: Sequence[int]):
    """Weighted sum over vertex-disjoint path families ``sources -> sinks``.

    Computed layer by layer over occupancy states; rows are sorted so
    each state is the set of occupied vertices of one layer.
    """
    if len(sources) != len(sinks):
        raise ValueError("need as many sources as sinks")
    if not sources:
        return 1
    states = {tuple(sorted(sources)): 1}
    for layer in range(net.layers):
        nxt: dict = {}
        for rows, w in states.items():
            for targets, combo in _family_steps(net, layer, rows):
                term = w
                for _, ew, _solid in combo:
                    if not (isinstance(ew, int) and ew == 1):
                        term = term * ew
                key = tuple(sorted(targets))
                nxt[key] = nxt[key] + term if key in nxt else term
        states = nxt
    return states.get(tuple(sorted(sinks)), 0)


def enumerate_path_families(
    net: Network, sources: Sequence[int], sinks: Sequence[int]
) -> Iterator[tuple[tuple, object]]:
    """Yield ``(paths, weight)`` for each vertex-disjoint family.

    ``paths`` holds one row sequence per source, in source order.
    """
    order = sorted(range(len(sources)), key=lambda k: sources[k])
    start = tuple(sources[k] for k in order)
    target = tuple(sorted(sinks))

    def rec(layer, rows, history, weight):
        if layer == net.layers:
            if tuple(sorted(rows)) == target:
                paths = tuple(tuple(h[k] for h in history) for k in range(len(rows)))
                yield paths, weight
            return
        for targets, combo in _family_steps(net, layer, rows):
            w = weight
            for _, ew, _solid in combo:
                if not (isinstance(ew, int) and ew == 1):
                    w = w * ew
            yield from rec(layer + 1, targets, history + [targets], w)

    yield from rec(0, start, [start], 1)


__all__ = [
    "Factor",
    "FactorProduct",
    "Network",
    "build_network",
    "check_braiding",
    "check_exchange",
    "check_exchange_a1",
    "check_tetra_flip",
    "embed",
    "enumerate_path_families",
    "path_partition",
    "product_matrix",
    "transfer_matrix",
    "u_a1",
    "u_matrix",
    "v_a1",
    "v_matrix",
]
