import random
from fractions import Fraction

import pytest

from helpers import positive_integral, tvar
from tsysnet.cubecorner import (
    CubeCornerState,
    add_cube,
    addable_sites,
    augmented_shadow,
    dimer_theta,
    embed_cc,
    evaporate_cube,
    fill_corner,
    gamma_apex,
    is_addable,
    recurse_theta,
    recurse_theta_cc,
    solve_theta,
    unembed_cc,
)
from tsysnet.errors import NotAddable, NotEvaporable, OutOfCone, ParseError
from tsysnet.ring import values_equal


def tau(a, b, c):
    return tvar(a, b, c, prefix="tau")


def _ones(s):
    return s.with_values({p: 1 for p in s.vertices()})


@pytest.fixture
def flat():
    return CubeCornerState.flat(-3, 3, -3, 3)


def test_flat_layers(flat):
    assert flat.is_flat()
    assert {sum(p) for p in flat.vertices()} == {0, 1, 2}
    assert flat.point(0, 0) == (0, 0, 0)


def test_step_condition_enforced():
    with pytest.raises(ValueError):
        CubeCornerState(0, 1, 0, 0, [[0], [0]])


def test_add_on_ones_gives_two(flat):
    s = add_cube(_ones(flat), 0, 0)
    assert s.t((1, 1, 1)) == 2
    assert not s.on_surface((0, 0, 0))


def test_add_symbolic(flat):
    s = add_cube(flat, 0, 0)
    expected = (tau(1, 0, 0) * tau(0, 1, 1) + tau(0, 1, 0) * tau(1, 0, 1)) / tau(0, 0, 0)
    assert values_equal(s.t((1, 1, 1)), expected)


def test_add_then_evaporate(flat):
    back = evaporate_cube(add_cube(flat, 0, 0), 0, 0)
    assert back.heights == flat.heights
    assert values_equal(back.t((0, 0, 0)), tau(0, 0, 0))


def test_illegal_moves(flat):
    assert not is_addable(flat, 1, 0)
    with pytest.raises(NotAddable):
        add_cube(flat, 1, 0)
    with pytest.raises(NotEvaporable):
        evaporate_cube(flat, 0, 0)
    with pytest.raises(NotAddable):
        add_cube(flat, 3, 0)


def test_theta_111():
    s = CubeCornerState.flat_for(1, 1, 1)
    expected = (tau(1, 0, 0) * tau(0, 1, 1) + tau(0, 1, 0) * tau(1, 0, 1)) / tau(0, 0, 0)
    for value in (recurse_theta(s, 1, 1, 1), solve_theta(s, 1, 1, 1), dimer_theta(s, 1, 1, 1)):
        assert values_equal(value, expected)
    assert recurse_theta(_ones(s), 1, 1, 1) == 2


def test_theta_below_surface(flat):
    with pytest.raises(OutOfCone):
        recurse_theta(flat, -1, -1, -1)


def test_n3_all_ones_three_ways():
    s = _ones(CubeCornerState.flat_for(2, 2, 1))
    assert recurse_theta(s, 2, 2, 1) == solve_theta(s, 2, 2, 1) == dimer_theta(s, 2, 2, 1) == 16


def test_n3_symbolic():
    s = CubeCornerState.flat_for(2, 2, 1)
    ref = recurse_theta(s, 2, 2, 1)
    assert values_equal(solve_theta(s, 2, 2, 1), ref)
    assert values_equal(dimer_theta(s, 2, 2, 1), ref)
    assert positive_integral(ref)
    assert len(ref.terms) == 16


def test_single_hexagon_word():
    sh = augmented_shadow(1, 1, 1)
    assert sh.n == 1 and sh.dim == 3
    assert sh.compact_word() == "H1"
    assert sh.word().split() == ["V2", "V1", "V2"]


def test_n3_word():
    sh = augmented_shadow(2, 2, 1)
    assert sh.compact_word() == "H5 H3 H1 V7 H5 H3 V8 V7 H5"
    assert sh.dim == 9


@pytest.mark.parametrize("apex", [(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2), (3, 3, 2)])
def test_shadow_counts(apex):
    sh = augmented_shadow(*apex)
    n = sh.n
    assert n == sum(apex) - 2
    assert sh.hexagon_count() == (n + 1) * n // 2
    assert len(sh.spectators) == n * (n - 1) // 2
    assert len(sh.west) == len(sh.east) == 3 * n + 1
    assert sh.west[0] == sh.east[0] and sh.west[-1] == sh.east[-1]


def test_intermediate_surfaces():
    rng = random.Random(4)
    apex = (2, 2, 2)
    s = CubeCornerState.flat_for(*apex)
    s = s.with_values({p: Fraction(rng.randint(1, 5), rng.randint(1, 3)) for p in s.vertices()})
    ref = recurse_theta(s, *apex)
    for _ in range(10):
        st = s
        for _ in range(rng.randint(1, 5)):
            sites = addable_sites(st, apex)
            if sites:
                st = add_cube(st, *rng.choice(sites))
        assert solve_theta(st, *apex) == ref
        assert recurse_theta(st, *apex) == ref


def test_confluence():
    s = CubeCornerState.flat_for(3, 2, 2)
    s = s.with_values({p: Fraction(n % 7 + 1, n % 3 + 1) for n, p in enumerate(s.vertices())})
    ref = recurse_theta(s, 3, 2, 2)
    rng = random.Random(9)
    for _ in range(5):
        assert recurse_theta(s, 3, 2, 2, rng) == ref


def test_fill_corner_reaches_apex():
    s = fill_corner(CubeCornerState.flat_for(2, 2, 2), 2, 2, 2)
    assert s.on_surface((2, 2, 2))
    assert not addable_sites(s, (2, 2, 2))


def test_embedding():
    assert embed_cc(1, 1, 1) == (0, 0, 1)
    i, j, k = embed_cc(2, 3, 1)
    assert embed_cc(3, 4, 2) == (i, j, k + 2)
    assert (i + j + k) % 2 == 1
    assert unembed_cc(i, j, k) == (2, 3, 1)


def test_embedding_hexagon_table():
    # the hexagon picture is the formula composed with (i, j) -> (-i, -j)
    a, b, c = 3, 1, 2
    i, j, k = embed_cc(a, b, c)
    table = {
        (a, b, c + 1): (i + 1, j + 1, k),
        (a + 1, b, c): (i - 1, j, k + 1),
        (a, b + 1, c): (i, j - 1, k + 1),
        (a + 1, b + 1, c): (i - 1, j - 1, k + 2),
        (a + 1, b, c + 1): (i, j + 1, k + 1),
        (a, b + 1, c + 1): (i + 1, j, k + 1),
    }
    for p, (x, y, z) in table.items():
        ex, ey, ez = embed_cc(*p)
        assert (ex - i, ey - j, ez - k) == (i - x, j - y, z - k)


def test_embedded_recursion():
    for apex in [(1, 1, 1), (2, 1, 1), (1, 2, 2), (3, 2, 1)]:
        s = CubeCornerState.flat_for(*apex)
        assert values_equal(recurse_theta_cc(s, *apex), recurse_theta(s, *apex))


def test_gamma_apex():
    assert gamma_apex(3) == (2, 2, 1)
    assert sum(gamma_apex(7)) == 9
    with pytest.raises(ValueError):
        gamma_apex(0)


def test_text_round_trip(flat):
    s = add_cube(flat.with_values({(1, 0, 0): 3}), 0, 0)
    again = CubeCornerState.from_text(s.to_text())
    assert again.heights == s.heights
    assert values_equal(again.t((1, 1, 1)), s.t((1, 1, 1)))
    assert again.t((1, 0, 0)) == 3


def test_bad_text():
    with pytest.raises(ParseError):
        CubeCornerState.from_text("window 0 1 0 1\nz 0: 0 1\n")
