import pytest

from helpers import tvar
from tsysnet.connection import product_matrix
from tsysnet.errors import NotLozengeable, NotMutable, OutOfCone, ParseError, WindowTooSmall
from tsysnet.matrix import matrices_equal
from tsysnet.ring import values_equal
from tsysnet.surface import (
    DiagonalPolicy,
    SteppedSurface,
    cone_interior,
    mutable_sites,
    mutate_surface,
    shadow,
    shadow_lozenges,
    tessellate,
)


@pytest.fixture
def flat():
    return SteppedSurface.flat(-6, 6, -6, 6)


def test_flat_heights_alternate(flat):
    assert flat.k(0, 0) == 1 and flat.k(1, 0) == 0
    assert all((x + y + flat.k(x, y)) % 2 == 1 for x, y in flat.vertices())


def test_bad_heights_rejected():
    with pytest.raises(ValueError):
        SteppedSurface(0, 1, 0, 0, [[1], [1]])
    with pytest.raises(ValueError):
        SteppedSurface(0, 1, 0, 0, [[1], [4]])


def test_valley_on_all_ones_gives_two(flat):
    ones = flat.with_values({v: 1 for v in flat.vertices()})
    up = mutate_surface(ones, 1, 0)
    assert up.k(1, 0) == 2
    assert up.t(1, 0) == 2


def test_mutation_formula_symbolic(flat):
    up = mutate_surface(flat, 1, 0)
    expected = (tvar(2, 0) * tvar(0, 0) + tvar(1, 1) * tvar(1, -1)) / tvar(1, 0)
    assert values_equal(up.t(1, 0), expected)


def test_up_then_down_is_identity(flat):
    there = mutate_surface(flat, 1, 0)
    back = mutate_surface(there, 1, 0)
    assert back.heights == flat.heights
    assert values_equal(back.t(1, 0), flat.t(1, 0))


def test_mutation_keeps_invariants(flat):
    s = flat
    for site in [(1, 0), (0, 1), (-1, 0), (0, -1), (0, 0)]:
        s = mutate_surface(s, *site)
        # construction re-validates parity and unit steps
        SteppedSurface(s.x0, s.x1, s.y0, s.y1, s.heights)
    assert s.k(0, 0) == 3


def test_not_mutable(flat):
    with pytest.raises(NotMutable):
        mutate_surface(flat, 6, 0)
    bumped = mutate_surface(flat, 1, 0)
    with pytest.raises(NotMutable):
        mutate_surface(bumped, 1, 1)


def test_mutable_sites_direction(flat):
    minima = mutable_sites(flat, +1)
    maxima = mutable_sites(flat, -1)
    assert all(flat.k(*v) == 0 for v in minima)
    assert all(flat.k(*v) == 1 for v in maxima)
    assert len(minima) + len(maxima) == len(mutable_sites(flat)) == 11 * 11


def test_text_round_trip(flat):
    s = mutate_surface(flat.with_values({(2, 2): 3}), 1, 0)
    again = SteppedSurface.from_text(s.to_text())
    assert again.heights == s.heights
    assert values_equal(again.t(1, 0), s.t(1, 0))
    assert again.t(2, 2) == 3


def test_bad_text():
    with pytest.raises(ParseError):
        SteppedSurface.from_text("window 0 1 0 1\nk 0: 1 0\n")
    with pytest.raises(ParseError):
        SteppedSurface.from_text("window 0 0 0 0\nk 0: 1\nbogus\n")


def test_flat_shadow_is_diamond(flat):
    sh = shadow(flat, (0, 0, 3))
    assert sh.vertices == {(x, y) for x in range(-2, 3) for y in range(-2, 3) if abs(x) + abs(y) <= 2}
    assert sh.ell == 3
    assert sh.minor_rows() == [-2, -1, 0]
    assert cone_interior(flat, 0, 0, 3) == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}


def test_degenerate_shadow(flat):
    sh = shadow(flat, (0, 0, 1))
    assert sh.vertices == {(0, 0)}
    assert sh.ell == 1


def test_shadow_errors(flat):
    with pytest.raises(OutOfCone):
        shadow(flat, (0, 0, 2))
    with pytest.raises(OutOfCone):
        shadow(flat, (1, 0, -2))
    with pytest.raises(WindowTooSmall):
        shadow(flat, (0, 0, 9))


def test_flat_tessellation_checkerboard(flat):
    t = tessellate(flat, [(x, y) for x in range(-2, 3) for y in range(-2, 3)])
    assert not t.forced
    assert len(t.unicolor) == 16
    colors = {sq: t.square_color(sq) for sq in t.unicolor}
    for (x, y), c in colors.items():
        for nb in ((x + 1, y), (x, y + 1)):
            if nb in colors:
                assert colors[nb] != c


def test_policies_give_equal_products(flat):
    sh = shadow(flat, (0, 0, 5))
    first = shadow_lozenges(sh, DiagonalPolicy.FIRST)
    second = shadow_lozenges(sh, DiagonalPolicy.SECOND)
    assert first.word() != second.word()
    assert matrices_equal(product_matrix(first.factor_product(), {}), product_matrix(second.factor_product(), {}))


def test_lozenge_count(flat):
    # one lozenge per horizontal edge of the shadow
    sh = shadow(flat, (0, 0, 5))
    edges = [v for v in sh.vertices if (v[0], v[1] + 1) in sh.vertices]
    assert len(shadow_lozenges(sh)) == len(edges)


def test_unlozengeable_domain(flat):
    bumped = mutate_surface(flat, 1, 0)
    with pytest.raises(NotLozengeable):
        tessellate(bumped, [(0, 1), (1, 0), (1, 1)])
