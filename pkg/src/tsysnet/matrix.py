"""Dense matrices over the package's value types, and exact minors."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .ring import LaurentPoly, RatFunc, exact_div

Matrix = list  # list of rows, each a list of values


def identity(n: int) -> Matrix:
    return [[1 if r == c else 0 for c in range(n)] for r in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = [0] * p
        ai = a[i]
        for k in range(m):
            x = ai[k]
            if x == 0:
                continue
            bk = b[k]
            for j in range(p):
                y = bk[j]
                if y == 0:
                    continue
                row[j] = row[j] + x * y
        out.append(row)
    return out


def matrices_equal(a: Matrix, b: Matrix) -> bool:
    from .ring import values_equal

    if len(a) != len(b):
        return False
    return all(
        len(ra) == len(rb) and all(values_equal(x, y) for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def submatrix(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    """Rows/cols are 1-based, as in the matrix-index convention of the lattice."""
    return [[m[r - 1][c - 1] for c in cols] for r in rows]


def _common_domain(entries):
    kinds = {type(x) for x in entries}
    if RatFunc in kinds:
        return RatFunc.coerce
    if LaurentPoly in kinds:
        return LaurentPoly.coerce
    return Fraction


def _cofactor_det(m: Matrix):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for r, c in enumerate(perm):
            x = m[r][c]
            if x == 0:
                term = 0
                break
            term = term * x
        if term == 0:
            continue
        total = total - term if inv % 2 else total + term
    return total


def determinant(m: Matrix):
    """Exact determinant.

    Fraction-free Bareiss elimination; plain permutation expansion for
    n <= 4. Over Laurent polynomials every Bareiss division is exact.
    """
    n = len(m)
    if n == 0:
        return 1
    if n <= 4:
        return _cofactor_det(m)
    conv = _common_domain(x for row in m for x in row)
    a = [[conv(x) for x in row] for row in m]
    sign = 1
    prev = conv(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return conv(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = a[i][j] * pivot - a[i][k] * a[k][j]
                if isinstance(val, LaurentPoly):
                    val = exact_div(val, prev)
                else:
                    val = val / prev
                a[i][j] = val
            a[i][k] = conv(0)
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def minor_det(m: Matrix, rows: Sequence[int], cols: Sequence[int]):
    """Minor on 1-based ``rows`` x ``cols``."""
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    return determinant(submatrix(m, rows, cols))
