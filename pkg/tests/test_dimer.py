import random
from collections import Counter
from fractions import Fraction

import pytest

from helpers import tvar
from tsysnet.dimer import (
    FaceWeightedGraph,
    build_468_dual,
    build_aztec_dual,
    build_gamma,
    check_graph,
    count_matchings,
    enumerate_matchings,
    matching_weight,
    partition_function,
)
from tsysnet.octahedron import flat_surface_for, recurse_t
from tsysnet.ring import LaurentPoly, values_equal
from tsysnet.surface import SteppedSurface, mutate_surface, shadow


def _square(label):
    g = FaceWeightedGraph()
    for v, c in (("p", "B"), ("q", "W"), ("r", "B"), ("s", "W")):
        g.add_vertex(v, c)
    es = [g.add_edge("p", "q"), g.add_edge("q", "r"), g.add_edge("r", "s"), g.add_edge("s", "p")]
    g.add_face(label, es, inner=True)
    return g


def test_single_edge():
    g = FaceWeightedGraph()
    g.add_vertex(0, "B")
    g.add_vertex(1, "W")
    g.add_edge(0, 1)
    assert list(enumerate_matchings(g)) == [frozenset({0})]
    assert partition_function(g) == 1


def test_four_cycle():
    a = LaurentPoly.var("a")
    g = _square(a)
    ms = list(enumerate_matchings(g))
    assert len(ms) == 2
    # both matchings use two edges of the face: a^(1 - 2)
    assert all(values_equal(matching_weight(g, m), 1 / a) for m in ms)
    assert values_equal(partition_function(g), 2 / a)


def test_no_matching():
    g = FaceWeightedGraph()
    g.add_vertex(0, "B")
    g.add_vertex(1, "B")
    assert list(enumerate_matchings(g)) == []
    assert count_matchings(g) == 0


def test_same_colour_edge_rejected():
    g = FaceWeightedGraph()
    g.add_vertex(0, "W")
    g.add_vertex(1, "W")
    with pytest.raises(ValueError):
        g.add_edge(0, 1)


def test_partition_function_matches_enumeration():
    g = build_aztec_dual(3)
    total = sum(matching_weight(g, m) for m in enumerate_matchings(g))
    assert values_equal(total, partition_function(g))
    assert count_matchings(g) == len(list(enumerate_matchings(g))) == 8


def test_aztec_one_step():
    g = build_aztec_dual(2, center=(1, 0))
    expected = (tvar(0, 0) * tvar(2, 0) + tvar(1, -1) * tvar(1, 1)) / tvar(1, 0)
    assert values_equal(partition_function(g), expected)


def test_aztec_four_ones():
    s = flat_surface_for(0, 1, 4)
    g = build_aztec_dual(4, {v: 1 for v in s.vertices()}, center=(0, 1))
    assert partition_function(g) == 64


def test_aztec_four_caption_monomial():
    i, j = 0, 1
    z = partition_function(build_aztec_dual(4, center=(i, j)))
    weight = (
        tvar(i - 2, j - 1) * tvar(i - 1, j + 2) * tvar(i, j) * tvar(i + 1, j - 2) * tvar(i + 2, j + 1)
    ) / (tvar(i - 1, j - 1) * tvar(i - 1, j + 1) * tvar(i + 1, j - 1) * tvar(i + 1, j + 1))
    assert len(z.terms) == 64
    assert len((z - weight).terms) == 63


def test_flat_468_dual_is_aztec():
    s = flat_surface_for(0, 0, 5)
    a = build_468_dual(shadow(s, (0, 0, 5)))
    b = build_aztec_dual(5, center=(0, 0))
    assert set(a.face_census()) == {4}
    assert a.face_census() == b.face_census()
    assert values_equal(partition_function(a), partition_function(b))


def test_single_lozenge_shadow():
    g = build_468_dual(shadow(flat_surface_for(1, 0, 2), (1, 0, 2)))
    assert count_matchings(g) == 2


def test_mutated_shadow_has_larger_faces():
    rng = random.Random(5)
    s = SteppedSurface.flat(-7, 7, -7, 7)
    s = s.with_values({v: Fraction(rng.randint(1, 6), rng.randint(1, 6)) for v in s.vertices()})
    for site in [(1, 0), (0, 1), (-1, 0), (0, -1), (0, 0)]:
        s = mutate_surface(s, *site)
    g = build_468_dual(shadow(s, (0, 0, 5)))
    census = g.face_census()
    assert set(census) - {4}
    check_graph(g)
    assert values_equal(partition_function(g), recurse_t(s, (0, 0, 5)))


@pytest.mark.parametrize("n,count", [(1, 2), (2, 4), (3, 16), (4, 64), (7, 2**16)])
def test_gamma_counts(n, count):
    g = build_gamma(n)
    assert g.is_bipartite()
    assert count_matchings(g) == count


def _ones(r):
    span = range(-r, r + 1)
    return {(a, b, c): 1 for a in span for b in span for c in span}


def test_gamma_one_ones():
    g = build_gamma(1, _ones(4))
    assert partition_function(g) == 2


def test_gamma_three_ones():
    g = build_gamma(3, _ones(5))
    assert partition_function(g) == 16


def _bottom_row(g):
    inner = [f for f in g.faces if f.inner]
    low = min(f.site[2] for f in inner)
    return Counter(f.valency for f in inner if f.site[2] == low)


def test_gamma_bottom_row_parity():
    assert _bottom_row(build_gamma(7)) == Counter({4: 4})
    assert _bottom_row(build_gamma(3)) == Counter({4: 2})
    assert _bottom_row(build_gamma(4))[6] == 2
    assert _bottom_row(build_gamma(2))[6] == 1


def test_export_text():
    text = _square(LaurentPoly.var("a")).export_text()
    assert text.startswith("# tsysnet-graph")
    assert text.count("\nedge ") == 4
    assert "label=1*a^1" in text
