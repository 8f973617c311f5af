"""Exact linear algebra kernel: frozen examples and randomized invariants."""

from __future__ import annotations

import random
from itertools import product

import pytest

from stratikit.fields import GF, QQ, field_from_token
from stratikit.linalg import (
    Matrix,
    RowSpace,
    kernel_basis,
    left_kernel_basis,
    solve_left,
    solve_linear,
)


def test_rref_rank_one_over_q():
    m = Matrix(QQ, [[2, 4], [1, 2]])
    red, pivots = m.rref()
    assert red.rows == ((QQ.one * 1, QQ.one * 2),)
    assert pivots == (0,)
    assert m.rank() == 1


def test_kernel_over_f2():
    f2 = GF(2)
    m = Matrix(f2, [[1, 1]])
    ker = kernel_basis(m)
    assert ker == ((1, 1),)


def test_solve_free_variables_zero():
    m = Matrix(QQ, [[1, 1]])
    x = solve_linear(m, [1])
    assert x == (QQ.one, QQ.zero)


def test_solve_inconsistent():
    m = Matrix(QQ, [[1, 2], [2, 4]])
    assert solve_linear(m, [1, 3]) is None


def test_rational_entries_stay_exact():
    m = Matrix(QQ, [["1/3", "1/7"], ["2/3", "5"]])
    red, piv = m.rref()
    assert piv == (0, 1)
    assert red == Matrix.identity(QQ, 2)


def _random_matrix(field, rng, m, n):
    if field.char == 0:
        return Matrix(field, [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)])
    return Matrix(field, [[rng.randrange(field.p) for _ in range(n)] for _ in range(m)])


@pytest.mark.parametrize("token", ["Q", "F32003", "F2", "F101"])
def test_rref_randomized_invariants(token):
    field = field_from_token(token)
    rng = random.Random(12001)
    for _ in range(40):
        m = _random_matrix(field, rng, rng.randint(1, 6), rng.randint(1, 6))
        red, pivots = m.rref()
        # idempotence: rref of the rref is itself
        red2, piv2 = red.rref()
        assert red2 == red and piv2 == pivots
        # rank equals rank of the transpose
        assert len(pivots) == m.transpose().rank()
        # rank-nullity
        assert len(kernel_basis(m)) == m.ncols - len(pivots)
        # every kernel vector is annihilated
        for v in kernel_basis(m):
            assert all(not x for x in m.mul(Matrix(field, [[c] for c in v])).column(0))


def test_kernel_exhaustive_oracle_f3():
    """Brute-force kernel over a tiny field agrees with kernel_basis."""
    f3 = GF(3)
    rng = random.Random(7)
    for _ in range(20):
        rows, cols = rng.randint(1, 3), rng.randint(1, 4)
        m = _random_matrix(f3, rng, rows, cols)
        brute = {
            v
            for v in product(range(3), repeat=cols)
            if all(
                sum(m.entry(i, j) * v[j] for j in range(cols)) % 3 == 0
                for i in range(rows)
            )
        }
        ker = kernel_basis(m)
        spanned = set()
        for coeffs in product(range(3), repeat=len(ker)):
            w = tuple(
                sum(c * kv[j] for c, kv in zip(coeffs, ker)) % 3 for j in range(cols)
            )
            spanned.add(w)
        assert spanned == brute


def test_solve_randomized_roundtrip():
    field = GF(101)
    rng = random.Random(99)
    for _ in range(40):
        m = _random_matrix(field, rng, rng.randint(1, 5), rng.randint(1, 5))
        x = [rng.randrange(101) for _ in range(m.ncols)]
        b = [
            sum(m.entry(i, j) * x[j] for j in range(m.ncols)) % 101
            for i in range(m.nrows)
        ]
        got = solve_linear(m, b)
        assert got is not None
        back = [
            sum(m.entry(i, j) * got[j] for j in range(m.ncols)) % 101
            for i in range(m.nrows)
        ]
        assert back == b


def test_matmul_and_apply_agree():
    rng = random.Random(5)
    a = _random_matrix(QQ, rng, 3, 4)
    b = _random_matrix(QQ, rng, 4, 2)
    ab = a.mul(b)
    for i in range(3):
        assert ab.row(i) == b.apply(a.row(i))


def test_left_variants():
    field = GF(5)
    m = Matrix(field, [[1, 2], [3, 4], [4, 1]])
    for v in left_kernel_basis(m):
        prod = Matrix(field, [v]).mul(m)
        assert prod.is_zero()
    b = Matrix(field, [[2, 3]]).mul(m.transpose()).row(0)  # no-op sanity
    x = solve_left(m, m.apply((1, 0, 2)))
    assert x is not None


def test_rowspace_coords_and_reduce():
    space = RowSpace.from_rows(QQ, [[1, 2, 0], [0, 0, 1]])
    assert space.dim == 2
    v = (3, 6, 5)
    coords = space.coords([QQ.normalize(c) for c in v])
    assert coords == (QQ.normalize(3), QQ.normalize(5))
    assert space.contains((1, 2, 1))
    assert not space.contains((1, 0, 0))
    rem = space.reduce((1, 3, 2))
    assert rem == (QQ.zero, QQ.one * 1, QQ.zero)


def test_rowspace_free_columns_quotient_coords():
    space = RowSpace.from_rows(GF(7), [[1, 3, 0, 2]])
    assert space.free_columns() == (1, 2, 3)


def test_power():
    m = Matrix(QQ, [[0, 1], [0, 0]])
    assert m.power(0) == Matrix.identity(QQ, 2)
    assert m.power(2).is_zero()
