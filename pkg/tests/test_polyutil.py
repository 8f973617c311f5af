import random

import sympy

from stratikit.fields import GF, QQ
from stratikit.linalg import Matrix
from stratikit.polyutil import (
    characteristic_polynomial,
    evaluate_at_matrix,
    factor_polynomial,
    matrix_minimal_polynomial,
    poly_divmod,
    poly_gcd,
    poly_lcm,
    poly_mul,
    poly_xgcd,
)


def test_poly_divmod_and_gcd_over_q():
    f = QQ
    # (x^2 - 1) = (x + 1)(x - 1)
    p = [f.normalize(-1), f.zero, f.one]
    a = [f.one, f.one]
    b = [f.normalize(-1), f.one]
    assert poly_mul(f, a, b) == p
    q, r = poly_divmod(f, p, a)
    assert q == b and r == []
    assert poly_gcd(f, p, a) == [f.one, f.one]


def test_xgcd_bezout_identity():
    f = GF(7)
    p = [f.normalize(1), f.normalize(0), f.one]  # x^2 + 1
    q = [f.normalize(3), f.one]  # x + 3
    g, u, v = poly_xgcd(f, p, q)
    lhs = [f.add(a, b) for a, b in _pad(f, poly_mul(f, u, p), poly_mul(f, v, q))]
    while lhs and not lhs[-1]:
        lhs.pop()
    assert lhs == g
    assert g[-1] == f.one


def _pad(f, a, b):
    n = max(len(a), len(b))
    a = list(a) + [f.zero] * (n - len(a))
    b = list(b) + [f.zero] * (n - len(b))
    return zip(a, b)


def test_factor_over_f101_frozen():
    f = GF(101)
    # x^2 + 1 = (x + 10)(x + 91) over F_101 since 10^2 = 100 = -1
    p = [f.one, f.zero, f.one]
    factors = factor_polynomial(f, p)
    assert factors == (((10, 1), 1), ((91, 1), 1))


def test_factor_over_q_frozen():
    f = QQ
    one = f.one
    # x^4 - 1 = (x - 1)(x + 1)(x^2 + 1)
    p = [f.normalize(-1), f.zero, f.zero, f.zero, one]
    factors = factor_polynomial(f, p)
    assert len(factors) == 3
    degs = sorted(len(fac) - 1 for fac, _ in factors)
    assert degs == [1, 1, 2]
    total = [one]
    for fac, mult in factors:
        for _ in range(mult):
            total = poly_mul(f, total, list(fac))
    assert total == p


def test_minimal_polynomial_nilpotent_jordan():
    f = GF(5)
    m = Matrix(f, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    mp = matrix_minimal_polynomial(m)
    assert mp == [0, 0, 0, 1]  # x^3
    assert evaluate_at_matrix(mp, m).is_zero()


def test_minimal_polynomial_diagonal_over_q():
    f = QQ
    m = Matrix(f, [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "2"]])
    mp = matrix_minimal_polynomial(m)
    # (x-1)(x-2) = x^2 - 3x + 2
    assert mp == [f.normalize(2), f.normalize(-3), f.one]


def test_charpoly_matches_sympy_over_fp():
    rng = random.Random(4242)
    f = GF(101)
    for _ in range(8):
        n = rng.randint(1, 6)
        ints = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
        m = Matrix(f, ints)
        got = characteristic_polynomial(m)
        sp = sympy.Matrix(ints).charpoly().all_coeffs()  # descending, over ZZ
        want = [f.normalize(int(c)) for c in reversed(sp)]
        assert got == want


def test_charpoly_matches_sympy_over_q():
    rng = random.Random(977)
    f = QQ
    for _ in range(5):
        n = rng.randint(1, 5)
        ints = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        m = Matrix(f, ints)
        got = characteristic_polynomial(m)
        sp = sympy.Matrix(ints).charpoly().all_coeffs()
        want = [f.normalize(int(c)) for c in reversed(sp)]
        assert got == want


def test_cayley_hamilton_and_minpoly_divides_charpoly():
    rng = random.Random(31337)
    f = GF(13)
    for _ in range(6):
        n = rng.randint(1, 5)
        m = Matrix(f, [[rng.randrange(13) for _ in range(n)] for _ in range(n)])
        cp = characteristic_polynomial(m)
        assert evaluate_at_matrix(cp, m).is_zero()
        mp = matrix_minimal_polynomial(m)
        _, rem = poly_divmod(f, cp, mp)
        assert rem == []
        assert poly_lcm(f, mp, cp) == cp
