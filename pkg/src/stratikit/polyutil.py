"""Dense univariate polynomial helpers over the exact fields.

Polynomials are lists of scalars in ascending degree order with no trailing
zeros (the zero polynomial is []). Degrees stay small (bounded by algebra
dimension), so the naive algorithms are fine. Factorization is delegated to
sympy (exact, over QQ or GF(p)) and re-canonicalized so the result order is
deterministic.
"""

from __future__ import annotations

import sympy

from .linalg import EchelonBasis, Matrix


def trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def poly_add(field, p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else field.zero
        b = q[i] if i < len(q) else field.zero
        out.append(field.add(a, b))
    return trim(out)


def poly_sub(field, p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else field.zero
        b = q[i] if i < len(q) else field.zero
        out.append(field.sub(a, b))
    return trim(out)


def poly_scale(field, c, p):
    return trim([field.mul(c, a) for a in p])


def poly_mul(field, p, q):
    if not p or not q:
        return []
    out = [field.zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = field.add(out[i + j], field.mul(a, b))
    return trim(out)


def poly_divmod(field, p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    inv_lead = field.inv(q[-1])
    dq = len(q) - 1
    quot = [field.zero] * max(0, len(p) - dq)
    while len(p) - 1 >= dq and p:
        c = field.mul(p[-1], inv_lead)
        k = len(p) - 1 - dq
        quot[k] = c
        for i, b in enumerate(q):
            p[k + i] = field.sub(p[k + i], field.mul(c, b))
        trim(p)
        if not p:
            break
    return trim(quot), p


def poly_monic(field, p):
    if not p:
        return []
    return poly_scale(field, field.inv(p[-1]), p)


def poly_gcd(field, p, q):
    a, b = list(p), list(q)
    while b:
        a, b = b, poly_divmod(field, a, b)[1]
    return poly_monic(field, a)


def poly_xgcd(field, p, q):
    """Extended gcd: returns (g, u, v) monic with u p + v q = g."""
    a, b = list(p), list(q)
    ua, va = [field.one], []
    ub, vb = [], [field.one]
    while b:
        quot, rem = poly_divmod(field, a, b)
        a, b = b, rem
        ua, ub = ub, poly_sub(field, ua, poly_mul(field, quot, ub))
        va, vb = vb, poly_sub(field, va, poly_mul(field, quot, vb))
    if not a:
        return [], [], []
    c = field.inv(a[-1])
    return (
        poly_monic(field, a),
        poly_scale(field, c, ua),
        poly_scale(field, c, va),
    )


def poly_pow(field, p, k):
    out = [field.one]
    for _ in range(k):
        out = poly_mul(field, out, p)
    return out


def poly_to_string(field, p):
    return "[" + ", ".join(field.to_str(c) for c in p) + "]"


_X = sympy.Symbol("x")


def factor_polynomial(field, p):
    """Factor a nonzero polynomial into monic irreducibles.

    Returns a tuple of (factor, multiplicity) pairs sorted by (degree,
    printed coefficients) so the order never depends on sympy internals.
    """
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    if field.char == 0:
        coeffs = [sympy.Rational(int(c.numerator), int(c.denominator)) for c in reversed(p)]
        poly = sympy.Poly(coeffs, _X, domain="QQ")
    else:
        coeffs = [int(c) for c in reversed(p)]
        poly = sympy.Poly(coeffs, _X, domain=sympy.GF(field.char, symmetric=False))
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        cs = fac.all_coeffs()  # descending
        ours = [field.normalize(_from_sympy(c)) for c in reversed(cs)]
        ours = poly_monic(field, trim(ours))
        out.append((ours, int(mult)))
    out.sort(key=lambda fm: (len(fm[0]), tuple(field.to_str(c) for c in fm[0])))
    return tuple((tuple(f), m) for f, m in out)


def _from_sympy(c):
    if c.is_Integer:
        return int(c)
    return str(c)


def poly_lcm(field, p, q):
    if not p or not q:
        return []
    g = poly_gcd(field, p, q)
    quot, rem = poly_divmod(field, poly_mul(field, p, q), g)
    assert not rem
    return poly_monic(field, quot)


def vector_annihilator(field, v, step):
    """Monic minimal p with v p(step) = 0, where step maps row vectors."""
    basis = EchelonBasis(field, len(v), track=True)
    cur = tuple(v)
    while True:
        independent, combo = basis.insert(cur)
        if not independent:
            k = basis.n_inserted - 1
            coeffs = [field.zero] * (k + 1)
            for j, c in combo.items():
                coeffs[j] = field.neg(c)
            coeffs[k] = field.one
            return trim(coeffs)
        cur = step(cur)


def matrix_minimal_polynomial(m: Matrix):
    """Monic minimal polynomial, as the lcm of cyclic-vector annihilators."""
    if m.nrows != m.ncols:
        raise ValueError("minimal polynomial of a non-square matrix")
    field = m.field
    n = m.nrows
    if n == 0:
        return [field.one]
    mp = [field.one]
    step = m.apply
    for i in range(n):
        v = tuple(field.one if j == i else field.zero for j in range(n))
        # skip vectors the current candidate already annihilates
        r = [field.zero] * n
        for c in reversed(mp):
            r = list(m.apply(r))
            if c:
                for j in range(n):
                    r[j] = field.add(r[j], field.mul(c, v[j]))
        if all(not x for x in r):
            continue
        mp = poly_lcm(field, mp, vector_annihilator(field, v, step))
        if len(mp) == n + 1:
            break
    return mp


def characteristic_polynomial(m: Matrix):
    """Characteristic polynomial det(xI - m), monic, ascending coefficients.

    Reduces to upper Hessenberg form by similarity transformations, then runs
    the leading-principal-minor recurrence; O(n^3) field operations.
    """
    if m.nrows != m.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    field = m.field
    n = m.nrows
    if n == 0:
        return [field.one]
    add, sub, mul, neg, inv = field.add, field.sub, field.mul, field.neg, field.inv
    h = [list(r) for r in m.rows]
    for k in range(1, n - 1):
        piv = None
        for i in range(k, n):
            if h[i][k - 1]:
                piv = i
                break
        if piv is None:
            continue
        if piv != k:
            h[piv], h[k] = h[k], h[piv]
            for row in h:
                row[piv], row[k] = row[k], row[piv]
        c = inv(h[k][k - 1])
        for i in range(k + 1, n):
            f = mul(h[i][k - 1], c)
            if f:
                hk = h[k]
                hi = h[i]
                for j in range(n):
                    hi[j] = sub(hi[j], mul(f, hk[j]))
                for row in h:
                    row[k] = add(row[k], mul(f, row[i]))
    # det(xI - H) for Hessenberg H via the minor recurrence
    polys = [[field.one]]
    for k in range(1, n + 1):
        head = poly_mul(field, [neg(h[k - 1][k - 1]), field.one], polys[k - 1])
        prod = field.one
        for i in range(1, k):
            prod = mul(prod, h[k - i][k - i - 1])
            if not prod:
                break
            coef = mul(h[k - 1 - i][k - 1], prod)
            if coef:
                head = poly_sub(field, head, poly_scale(field, coef, polys[k - 1 - i]))
        polys.append(head)
    out = polys[n]
    # pad in case of accidental trailing-zero trims (cannot happen: monic)
    assert len(out) == n + 1 and out[-1] == field.one
    return out


def evaluate_at_matrix(p, m: Matrix) -> Matrix:
    """p(m) by Horner."""
    field = m.field
    n = m.nrows
    acc = Matrix.zeros(field, n, n)
    ident = Matrix.identity(field, n)
    for c in reversed(p):
        acc = acc.mul(m)
        if c:
            acc = acc.add(ident.scale(c))
    return acc
