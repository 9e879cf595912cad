import itertools
import random
from fractions import Fraction

import pytest

from tsysnet.connection import (
    Factor,
    FactorProduct,
    build_network,
    check_braiding,
    check_exchange,
    check_exchange_a1,
    check_tetra_flip,
    embed,
    enumerate_path_families,
    path_partition,
    product_matrix,
    transfer_matrix,
    u_a1,
    u_matrix,
    v_a1,
    v_matrix,
)
from tsysnet.matrix import identity, matmul, matrices_equal, minor_det
from tsysnet.ring import RatFunc, field_div, to_laurent, values_equal, var

from helpers import tvar

a, b, c, d, e, u, v = (var(n) for n in "abcdeuv")


def worked_example_value():
    t = tvar
    return (
        t(-2) / (t(-1) * t(1))
        + t(0) / (t(-1) * t(1))
        + t(-2) / (t(0) * t(2))
        + 1 / (t(-1) * t(1) * t(2))
        + t(-2) / (t(-1) * t(0) * t(1) * t(2))
        + t(3) / (t(-1) * t(2))
        + t(-2) * t(3) / (t(-1) * t(0) * t(2))
        + t(-2) * t(1) * t(3) / (t(0) * t(2))
    )


def example_product():
    t = tvar
    return FactorProduct(
        [
            Factor("V", 1, (1, t(-2), t(-1))),
            Factor("V", 1, (1, t(-1), t(0))),
            Factor("U", 1, (t(0), t(1), 1)),
            Factor("V", 1, (1, t(1), t(2))),
            Factor("U", 1, (t(2), t(3), 1)),
        ],
        2,
    )


def rand_q(rng):
    return Fraction(rng.randint(1, 30), rng.randint(1, 30))


def test_block_shapes():
    assert u_matrix(a, b, 1) == [[1, 0], [b ** -1, a * b ** -1]]
    assert u_a1(a, b) == u_matrix(a, b, 1)
    assert v_matrix(1, a, b) == [[a * b ** -1, b ** -1], [0, 1]]
    assert v_a1(a, b) == v_matrix(1, a, b)
    assert u_matrix(1, 1, 1) == [[1, 0], [1, 1]]


def test_exchange_symbolic_and_trivial():
    bp, holds = check_exchange(a, b, c, u, v)
    assert holds and values_equal(bp, (a * c + u * v) / b)
    bp, holds = check_exchange(1, 1, 1, 1, 1)
    assert holds and bp == 2


def test_exchange_a1():
    bp, holds = check_exchange_a1(a, b, c)
    assert holds and values_equal(bp, (a * c + 1) / b)


def test_exchange_fails_for_wrong_value():
    lhs = matmul(v_matrix(u, a, b), u_matrix(b, c, v))
    rhs = matmul(u_matrix(a, 3 * b, v), v_matrix(u, 3 * b, c))
    assert not matrices_equal(lhs, rhs)


@pytest.mark.parametrize("kind,n", [("whiteflip", 4), ("commute", 6)])
def test_flips(kind, n):
    assert check_tetra_flip(kind, [var("x%d" % k) for k in range(n)])
    assert check_tetra_flip(kind, [1] * n)
    rng = random.Random(n)
    assert all(check_tetra_flip(kind, [rand_q(rng) for _ in range(n)]) for _ in range(50))


def test_flip_kind_is_validated():
    with pytest.raises(ValueError):
        check_tetra_flip("sideways", [1, 1, 1, 1])


def test_braiding():
    bp, holds = check_braiding(u, a, b, c, d, e)
    assert holds and values_equal(bp, (e * c + a * d) / b)
    bp, holds = check_braiding(1, 1, 1, 1, 1, 1)
    assert holds and bp == 2
    rng = random.Random(7)
    assert all(check_braiding(*[rand_q(rng) for _ in range(6)])[1] for _ in range(50))


def test_product_matrix_basics():
    assert product_matrix(FactorProduct([], 3)) == identity(3)
    m = product_matrix(FactorProduct([Factor("U", 2, (a, b, c))], 4))
    assert m == embed(u_matrix(a, b, c), 2, 4)
    assert m[0] == [1, 0, 0, 0] and m[3] == [0, 0, 0, 1]


def test_factor_validation():
    with pytest.raises(ValueError):
        Factor("W", 1, (a, b, c))
    with pytest.raises(ValueError):
        FactorProduct([Factor("U", 3, (a, b, c))], 3)


def test_worked_example_entry():
    m = product_matrix(example_product())
    assert to_laurent(tvar(3) * m[0][0]) == worked_example_value()


def test_string_arguments_and_bindings():
    fp = FactorProduct([Factor("V", 1, ("p", "q", "r"))], 2)
    assert product_matrix(fp, {"p": 1, "q": 2, "r": 4})[0] == [Fraction(1, 2), Fraction(1, 4)]


def test_far_factors_commute():
    f = Factor("U", 1, (a, b, c))
    g = Factor("V", 3, (d, e, u))
    assert product_matrix(FactorProduct([f, g], 4)) == product_matrix(FactorProduct([g, f], 4))


def test_network_chips():
    net = build_network(FactorProduct([Factor("U", 1, (a, b, c))], 2))
    weights = {(s[1], t[1]): w for s, t, w, _ in net.edge_list()}
    assert values_equal(weights[(2, 1)], field_div(c, b))
    assert values_equal(weights[(2, 2)], field_div(a, b))
    empty = build_network(FactorProduct([], 3))
    assert transfer_matrix(empty) == identity(3)
    assert path_partition(empty, [1], [1]) == 1


def test_network_example_gives_worked_polynomial():
    net = build_network(example_product())
    assert to_laurent(tvar(3) * path_partition(net, [1], [1])) == worked_example_value()


def random_product(rng, dim, length):
    factors = []
    for _ in range(length):
        factors.append(Factor(rng.choice("UV"), rng.randint(1, dim - 1), tuple(rand_q(rng) for _ in range(3))))
    return FactorProduct(factors, dim)


def test_transfer_matrix_equals_product():
    rng = random.Random(3)
    for _ in range(20):
        fp = random_product(rng, 4, 8)
        assert transfer_matrix(build_network(fp)) == product_matrix(fp)


def test_path_families_equal_minors():
    rng = random.Random(5)
    for _ in range(15):
        fp = random_product(rng, 4, 9)
        m = product_matrix(fp)
        net = build_network(fp)
        for size in (1, 2, 3):
            for rows in itertools.combinations(range(1, 5), size):
                cols = sorted(rng.sample(range(1, 5), size))
                assert path_partition(net, rows, cols) == minor_det(m, list(rows), cols)


def test_enumerated_families_sum_to_partition():
    rng = random.Random(9)
    fp = random_product(rng, 3, 7)
    net = build_network(fp)
    total = sum(w for _, w in enumerate_path_families(net, [1, 2], [2, 3]))
    assert total == path_partition(net, [1, 2], [2, 3])


def test_symbolic_minor_matches_path_sum():
    fp = FactorProduct(
        [Factor("V", 1, (u, a, b)), Factor("U", 2, (b, c, v)), Factor("V", 2, (a, d, e))], 3
    )
    m = product_matrix(fp)
    net = build_network(fp)
    assert RatFunc.coerce(path_partition(net, [1, 2], [2, 3])) == RatFunc.coerce(minor_det(m, [1, 2], [2, 3]))
