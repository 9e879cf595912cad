"""Solving the octahedron recurrence three ways.

``T[i,j,k+1] T[i,j,k-1] = T[i,j+1,k] T[i,j-1,k] + T[i+1,j,k] T[i-1,j,k]``
with initial data on a stepped surface. ``recurse_t`` runs the recursion,
``solve_t_general`` takes a principal minor of the shadow's connection
matrix times a boundary prefactor, and ``dimer_t`` sums matchings of the
dual graph of the tessellated shadow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .connection import product_matrix
from .errors import OutOfCone, WindowTooSmall
from .matrix import minor_det
from .ring import divide, field_div, to_laurent
from .surface import DiagonalPolicy, SteppedSurface, mutable_sites, mutate_surface, shadow, shadow_lozenges

__all__ = [
    "OctahedronSolution",
    "recurse_t",
    "minor_det",
    "solve_t_flat",
    "solve_t_general",
    "dimer_t",
    "solve_t",
    "flat_surface_for",
    "flat_prefactor",
    "random_instance",
]


@dataclass(frozen=True)
class OctahedronSolution:
    value: object
    method: str
    provenance: object = None


class _TSolver:
    def __init__(self, s: SteppedSurface):
        self.s = s
        self.memo: dict = {}

    def value(self, i: int, j: int, k: int):
        key = (i, j, k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        s = self.s
        if (i, j) not in s:
            raise OutOfCone("(%d, %d, %d) needs data outside the window" % key)
        if (i + j + k) % 2 != 1:
            raise OutOfCone("(%d, %d, %d) has the wrong parity" % key)
        k0 = s.k(i, j)
        if k == k0:
            out = s.t(i, j)
        elif k < k0:
            raise OutOfCone("(%d, %d, %d) lies below the surface" % key)
        else:
            num = self.value(i, j + 1, k - 1) * self.value(i, j - 1, k - 1) + self.value(
                i + 1, j, k - 1
            ) * self.value(i - 1, j, k - 1)
            out = divide(num, self.value(i, j, k - 2))
        self.memo[key] = out
        return out


def recurse_t(s: SteppedSurface, point):
    """Memoised exact recursion upward from the surface."""
    return _TSolver(s).value(*point)


def prefactor(sh, surface: SteppedSurface):
    out = 1
    for v in sh.se:
        out = out * surface.t(*v)
    for v in sh.sw:
        out = field_div(out, surface.t(*v))
    return out


def solve_t_general(s: SteppedSurface, point, policy=DiagonalPolicy.FIRST, filler=None):
    """Prefactor times the principal ``ell x ell`` minor ending at row ``i``."""
    sh = shadow(s, point)
    seq = shadow_lozenges(sh, policy, filler)
    m = product_matrix(seq.factor_product())
    idx = [r - seq.base + 1 for r in sh.minor_rows()]
    return to_laurent(prefactor(sh, s) * minor_det(m, idx, idx))


def flat_surface_for(i: int, j: int, k: int, assignments=None) -> SteppedSurface:
    """Flat surface whose window holds the whole backward cone of ``(i, j, k)``."""
    r = max(k, 1) + 1
    s = SteppedSurface.flat(i - r, i + r, j - r, j + r)
    if assignments:
        s = s.with_values({v: x for v, x in assignments.items() if v in s})
    return s


def flat_prefactor(surface: SteppedSurface, i: int, j: int, k: int):
    """Closed-form boundary prefactor of the flat minor formula."""
    out = 1
    for p in range(1, k + 1):
        out = out * surface.t(p + i - k, j - 1 + p)
    for m in range(1, k):
        out = field_div(out, surface.t(m + i - k, j + 1 - m))
    return out


def solve_t_flat(assignments, i: int, j: int, k: int, policy=DiagonalPolicy.FIRST):
    """Flat initial data: prefactor times the minor on rows ``i-k+2 .. i``.

    ``assignments`` maps ``(x, y)`` to values; missing points keep their
    symbols ``t(x,y)``.
    """
    s = flat_surface_for(i, j, k, assignments)
    if (i + j + k) % 2 != 1:
        raise OutOfCone("(%d, %d, %d) has the wrong parity" % (i, j, k))
    if k < s.k(i, j):
        raise OutOfCone("(%d, %d, %d) lies below the surface" % (i, j, k))
    if k == s.k(i, j):
        return s.t(i, j)
    sh = shadow(s, (i, j, k))
    seq = shadow_lozenges(sh, policy)
    m = product_matrix(seq.factor_product())
    idx = [r - seq.base + 1 for r in range(i - k + 2, i + 1)]
    return to_laurent(flat_prefactor(s, i, j, k) * minor_det(m, idx, idx))


def dimer_t(s: SteppedSurface, point, policy=DiagonalPolicy.FIRST, filler=None):
    """Partition function of the dual graph of the tessellated shadow."""
    from .dimer import build_468_dual, partition_function

    i, j, k = point
    if (i, j) in s and k == s.k(i, j):
        return s.t(i, j)
    return partition_function(build_468_dual(shadow(s, point), policy, filler))


METHODS = ("recursion", "minor", "dimer")


def solve_t(s: SteppedSurface, point, method: str = "minor", policy=DiagonalPolicy.FIRST) -> OctahedronSolution:
    """Dispatch to one method; ``"all"`` runs every method and insists they agree."""
    if method == "all":
        sols = [solve_t(s, point, m, policy) for m in METHODS]
        first = sols[0].value
        for sol in sols[1:]:
            if to_laurent(sol.value) != to_laurent(first):
                raise ArithmeticError("methods disagree at %r: %s vs %s" % (point, sols[0].method, sol.method))
        return OctahedronSolution(first, "all", tuple(m for m in METHODS))
    if method == "recursion":
        return OctahedronSolution(recurse_t(s, point), method, "recursion from the surface")
    if method == "minor":
        return OctahedronSolution(solve_t_general(s, point, policy), method, policy)
    if method == "dimer":
        return OctahedronSolution(dimer_t(s, point, policy), method, policy)
    raise ValueError("unknown method %r" % method)


def random_instance(rng, radius: int = 8, core: int = 3, mutations: int = 14, gap: int = 6, symbolic: bool = False):
    """A randomly mutated surface and a point at most ``gap`` above it.

    Values are small positive rationals unless ``symbolic``. Mutations are
    drawn near the origin so the shadow stays inside the window.
    """
    while True:
        s = SteppedSurface.flat(-radius, radius, -radius, radius)
        if not symbolic:
            s = s.with_values({v: Fraction(rng.randint(1, 5), rng.randint(1, 3)) for v in s.vertices()})
        for _ in range(rng.randint(0, mutations)):
            sites = [v for v in mutable_sites(s) if abs(v[0]) <= core and abs(v[1]) <= core]
            s = mutate_surface(s, *rng.choice(sites))
        i, j = rng.randint(-2, 2), rng.randint(-2, 2)
        k = s.k(i, j) + rng.randint(1, gap)
        if (i + j + k) % 2 == 0:
            k += 1 if k + 1 - s.k(i, j) <= gap else -1
        try:
            shadow(s, (i, j, k))
        except (OutOfCone, WindowTooSmall):
            continue
        return s, (i, j, k)
