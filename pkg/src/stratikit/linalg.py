"""Exact linear algebra over F_p and Q.

Conventions used throughout the package:

* matrices are immutable once built; entries are field scalars (ints in
  [0, p) or gmpy2.mpq),
* vectors are tuples and are treated as *row* vectors; linear maps act on
  the right, so the composite "first F then G" is the product F * G,
* `kernel_basis` is the right kernel {x : M x = 0}, `solve_linear` solves
  M x = b with free variables set to zero after row reduction,
* row reduction is the canonical reduced row echelon form, so every
  derived basis (kernels, row spaces, hom spaces) is deterministic.

The row-reduction engine works on sparse rows (dict column -> scalar);
everything the rest of the package does funnels through it.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def _red(field):
    """Return the canonicalizer for accumulated scalars (mod p or None)."""
    p = getattr(field, "p", None)
    return p


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None, _raw=False):
        if _raw:
            object.__setattr__(self, "rows", rows)
        else:
            norm = field.normalize
            object.__setattr__(
                self, "rows", tuple(tuple(norm(x) for x in r) for r in rows)
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(self.rows))
        if self.rows:
            ncols = len(self.rows[0])
            if any(len(r) != ncols for r in self.rows):
                raise ValueError("ragged rows")
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, *a):
        raise AttributeError("matrices are immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(field, n):
        one, zero = field.one, field.zero
        return Matrix(
            field,
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
            ncols=n,
            _raw=True,
        )

    @staticmethod
    def zeros(field, m, n):
        zero = field.zero
        row = tuple(zero for _ in range(n))
        return Matrix(field, tuple(row for _ in range(m)), ncols=n, _raw=True)

    @staticmethod
    def from_function(field, m, n, fn):
        return Matrix(
            field, tuple(tuple(fn(i, j) for j in range(n)) for i in range(m)), ncols=n
        )

    # -- basic accessors ---------------------------------------------------

    def row(self, i) -> tuple:
        return self.rows[i]

    def column(self, j) -> tuple:
        return tuple(r[j] for r in self.rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"

    def to_strings(self):
        ts = self.field.to_str
        return [[ts(x) for x in r] for r in self.rows]

    # -- arithmetic --------------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            tuple(zip(*self.rows)) if self.rows else (),
            ncols=self.nrows,
            _raw=True,
        )

    def add(self, other) -> "Matrix":
        p = _red(self.field)
        if p is None:
            rows = tuple(
                tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
            )
        else:
            rows = tuple(
                tuple((a + b) % p for a, b in zip(r, s))
                for r, s in zip(self.rows, other.rows)
            )
        return Matrix(self.field, rows, ncols=self.ncols, _raw=True)

    def sub(self, other) -> "Matrix":
        p = _red(self.field)
        if p is None:
            rows = tuple(
                tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
            )
        else:
            rows = tuple(
                tuple((a - b) % p for a, b in zip(r, s))
                for r, s in zip(self.rows, other.rows)
            )
        return Matrix(self.field, rows, ncols=self.ncols, _raw=True)

    def scale(self, c) -> "Matrix":
        c = self.field.normalize(c)
        p = _red(self.field)
        if p is None:
            rows = tuple(tuple(c * a for a in r) for r in self.rows)
        else:
            rows = tuple(tuple((c * a) % p for a in r) for r in self.rows)
        return Matrix(self.field, rows, ncols=self.ncols, _raw=True)

    def mul(self, other: "Matrix") -> "Matrix":
        """Matrix product; in row-vector convention self is applied first."""
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.ncols} vs {other.nrows}")
        p = _red(self.field)
        zero = self.field.zero
        brows = other.rows
        n = other.ncols
        out = []
        for arow in self.rows:
            acc = [zero] * n
            for j, a in enumerate(arow):
                if a:
                    brow = brows[j]
                    for k, b in enumerate(brow):
                        if b:
                            acc[k] = acc[k] + a * b
            if p is not None:
                acc = [v % p for v in acc]
            out.append(tuple(acc))
        return Matrix(self.field, tuple(out), ncols=n, _raw=True)

    def apply(self, vec: Sequence) -> tuple:
        """Row vector times matrix: vec * self."""
        if len(vec) != self.nrows:
            raise ValueError("vector length mismatch")
        p = _red(self.field)
        zero = self.field.zero
        acc = [zero] * self.ncols
        for j, a in enumerate(vec):
            if a:
                row = self.rows[j]
                for k, b in enumerate(row):
                    if b:
                        acc[k] = acc[k] + a * b
        if p is not None:
            acc = [v % p for v in acc]
        return tuple(acc)

    def power(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result.mul(base)
            base = base.mul(base) if k > 1 else base
            k >>= 1
        return result

    # -- stacking ----------------------------------------------------------

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column mismatch in vstack")
        return Matrix(self.field, self.rows + other.rows, ncols=self.ncols, _raw=True)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row mismatch in hstack")
        rows = tuple(r + s for r, s in zip(self.rows, other.rows))
        return Matrix(self.field, rows, ncols=self.ncols + other.ncols, _raw=True)

    # -- reduction ---------------------------------------------------------

    def rref(self):
        """Reduced row echelon form. Returns (Matrix, pivot column tuple)."""
        sparse = [
            {j: x for j, x in enumerate(r) if x} for r in self.rows
        ]
        reduced, pivots = rref_sparse(self.field, sparse, self.ncols)
        zero = self.field.zero
        dense = []
        for piv, row in zip(pivots, reduced):
            dr = [zero] * self.ncols
            for j, x in row.items():
                dr[j] = x
            dense.append(tuple(dr))
        return Matrix(self.field, tuple(dense), ncols=self.ncols, _raw=True), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])


def rref_sparse(field, rows, ncols):
    """RREF of sparse rows (list of dicts col -> nonzero scalar).

    Returns (rows, pivots) with rows fully reduced, pivot entries 1, sorted
    by pivot column. Input dicts are consumed. Deterministic: the result is
    the canonical reduced echelon form of the row space.
    """
    inv = field.inv
    p = _red(field)
    pivot_rows = {}  # pivot column -> row dict
    for row in rows:
        # fully reduce: pivot rows contain no other pivot columns, so one
        # elimination per shared pivot column suffices
        shared = sorted(c for c in row if c in pivot_rows)
        for c in shared:
            f = row.pop(c, None)
            if not f:
                continue
            pr = pivot_rows[c]
            if p is None:
                for j, v in pr.items():
                    if j == c:
                        continue
                    w = row.get(j, 0) - f * v
                    if w:
                        row[j] = w
                    elif j in row:
                        del row[j]
            else:
                for j, v in pr.items():
                    if j == c:
                        continue
                    w = (row.get(j, 0) - f * v) % p
                    if w:
                        row[j] = w
                    elif j in row:
                        del row[j]
        if not row:
            continue
        lead = min(row)
        c = inv(row[lead])
        if p is None:
            row = {j: c * v for j, v in row.items()}
        else:
            row = {j: (c * v) % p for j, v in row.items()}
        row[lead] = field.one
        # back-eliminate the new pivot column from older rows
        for pc, pr in pivot_rows.items():
            f = pr.get(lead)
            if f:
                del pr[lead]
                if p is None:
                    for j, v in row.items():
                        if j == lead:
                            continue
                        w = pr.get(j, 0) - f * v
                        if w:
                            pr[j] = w
                        elif j in pr:
                            del pr[j]
                else:
                    for j, v in row.items():
                        if j == lead:
                            continue
                        w = (pr.get(j, 0) - f * v) % p
                        if w:
                            pr[j] = w
                        elif j in pr:
                            del pr[j]
        pivot_rows[lead] = row
    pivots = sorted(pivot_rows)
    return [pivot_rows[c] for c in pivots], pivots


def kernel_basis(m: Matrix):
    """Basis of the right kernel {x : m x = 0}, echelon-normalized.

    Each basis vector has 1 at its own free column, and the basis is ordered
    by free column index.
    """
    red, pivots = m.rref()
    field = m.field
    zero, one = field.zero, field.one
    pivset = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivset]
    neg = field.neg
    basis = []
    for f in free:
        v = [zero] * m.ncols
        v[f] = one
        for r, c in enumerate(pivots):
            x = red.rows[r][f]
            if x:
                v[c] = neg(x)
        basis.append(tuple(v))
    return tuple(basis)


def left_kernel_basis(m: Matrix):
    """Basis of {x : x m = 0} (row vectors)."""
    return kernel_basis(m.transpose())


def kernel_from_rref(field, reduced_rows, ncols):
    """Solution basis of the homogeneous system given by rref_sparse output.

    Each equation is a fully reduced sparse row (dict col -> scalar, pivot
    coefficient 1). Normalization matches kernel_basis: one basis vector per
    free column, carrying 1 there, ordered by free column index.
    """
    zero, one, neg = field.zero, field.one, field.neg
    pivots = [min(r) for r in reduced_rows]
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for c, row in zip(pivots, reduced_rows):
            x = row.get(f)
            if x:
                v[c] = neg(x)
        basis.append(tuple(v))
    return tuple(basis)


def solve_linear(m: Matrix, b: Sequence):
    """One solution of m x = b (free variables zero), or None."""
    field = m.field
    bb = [field.normalize(x) for x in b]
    if len(bb) != m.nrows:
        raise ValueError("rhs length mismatch")
    aug = Matrix(
        field,
        tuple(r + (bb[i],) for i, r in enumerate(m.rows)),
        ncols=m.ncols + 1,
        _raw=True,
    )
    red, pivots = aug.rref()
    if m.ncols in pivots:
        return None
    x = [field.zero] * m.ncols
    for r, c in enumerate(pivots):
        x[c] = red.rows[r][m.ncols]
    return tuple(x)


def solve_left(m: Matrix, b: Sequence):
    """One solution of x m = b, or None."""
    return solve_linear(m.transpose(), b)


def vec_matmul(vec: Sequence, m: Matrix) -> tuple:
    return m.apply(vec)


def vec_add(field, u, v):
    p = _red(field)
    if p is None:
        return tuple(a + b for a, b in zip(u, v))
    return tuple((a + b) % p for a, b in zip(u, v))


def vec_sub(field, u, v):
    p = _red(field)
    if p is None:
        return tuple(a - b for a, b in zip(u, v))
    return tuple((a - b) % p for a, b in zip(u, v))


def vec_scale(field, c, v):
    p = _red(field)
    if p is None:
        return tuple(c * a for a in v)
    return tuple((c * a) % p for a in v)


def vec_is_zero(v) -> bool:
    return all(not x for x in v)


class RowSpace:
    """A subspace of K^n stored as its canonical RREF basis.

    Membership tests and coordinate extraction read off pivot columns, so
    they cost one row combination instead of a fresh elimination.
    """

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, basis: Matrix, pivots):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "ambient", basis.ncols)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, *a):
        raise AttributeError("row spaces are immutable")

    @staticmethod
    def from_rows(field, rows, ncols=None):
        m = rows if isinstance(rows, Matrix) else Matrix(field, rows, ncols=ncols)
        red, pivots = m.rref()
        return RowSpace(field, red, pivots)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def coords(self, vec: Sequence):
        """Coefficients of vec over the basis rows, or None if outside."""
        field = self.field
        cs = tuple(vec[c] for c in self.pivots)
        rem = self.reduce(vec)
        if not vec_is_zero(rem):
            return None
        return cs

    def contains(self, vec: Sequence) -> bool:
        return self.coords(vec) is not None

    def reduce(self, vec: Sequence) -> tuple:
        """Canonical representative of vec modulo this subspace."""
        field = self.field
        p = _red(field)
        v = list(vec)
        for r, c in enumerate(self.pivots):
            f = v[c]
            if f:
                row = self.basis.rows[r]
                if p is None:
                    for j, x in enumerate(row):
                        if x:
                            v[j] = v[j] - f * x
                else:
                    for j, x in enumerate(row):
                        if x:
                            v[j] = (v[j] - f * x) % p
        return tuple(v)

    def contains_rows(self, rows) -> bool:
        return all(self.contains(r) for r in rows)

    def sum(self, other: "RowSpace") -> "RowSpace":
        return RowSpace.from_rows(
            self.field, self.basis.vstack(other.basis), ncols=self.ambient
        )

    def free_columns(self):
        pivset = set(self.pivots)
        return tuple(j for j in range(self.ambient) if j not in pivset)


class EchelonBasis:
    """Mutable online echelon form, optionally tracking combinations.

    Rows are inserted one at a time; each insert either extends the basis or
    reports the dependency. With track=True, `insert` additionally returns
    the coefficients of the inserted row over the previously *inserted* rows
    (Krylov-style dependency extraction).
    """

    __slots__ = ("field", "ncols", "pivot_rows", "combos", "n_inserted", "track")

    def __init__(self, field, ncols, track=False):
        self.field = field
        self.ncols = ncols
        self.pivot_rows = {}  # pivot col -> sparse row dict
        self.combos = {}  # pivot col -> sparse combo dict (insert index -> scalar)
        self.n_inserted = 0
        self.track = track

    @property
    def dim(self):
        return len(self.pivot_rows)

    def _residue(self, vec):
        """Reduce vec against the basis; returns (sparse residue, combo)."""
        field = self.field
        p = _red(field)
        row = {j: x for j, x in enumerate(vec) if x} if not isinstance(vec, dict) else dict(vec)
        combo = {}
        shared = sorted(c for c in row if c in self.pivot_rows)
        for c in shared:
            f = row.pop(c, None)
            if not f:
                continue
            pr = self.pivot_rows[c]
            if p is None:
                for j, v in pr.items():
                    if j == c:
                        continue
                    w = row.get(j, 0) - f * v
                    if w:
                        row[j] = w
                    elif j in row:
                        del row[j]
            else:
                for j, v in pr.items():
                    if j == c:
                        continue
                    w = (row.get(j, 0) - f * v) % p
                    if w:
                        row[j] = w
                    elif j in row:
                        del row[j]
            if self.track:
                for k, v in self.combos[c].items():
                    w = combo.get(k, field.zero) + f * v
                    if p is not None:
                        w %= p
                    if w:
                        combo[k] = w
                    elif k in combo:
                        del combo[k]
        return row, combo

    def residue(self, vec):
        """Canonical sparse remainder of vec modulo the current row space."""
        return self._residue(vec)[0]

    def contains(self, vec) -> bool:
        return not self._residue(vec)[0]

    def insert(self, vec):
        """Insert a row. Returns (independent, combo-or-None).

        combo is only meaningful when track=True: if the row was dependent it
        maps insert-index -> coefficient with vec = sum combo[k] * row_k; if
        independent it is the expression of the *residue* subtracted part.
        """
        field = self.field
        p = _red(field)
        row, combo = self._residue(vec)
        idx = self.n_inserted
        self.n_inserted += 1
        if not row:
            return False, combo
        lead = min(row)
        c = field.inv(row[lead])
        if p is None:
            row = {j: c * v for j, v in row.items()}
        else:
            row = {j: (c * v) % p for j, v in row.items()}
        row[lead] = field.one
        if self.track:
            neg = field.neg
            newcombo = {k: field.mul(c, neg(v)) for k, v in combo.items()}
            newcombo[idx] = c
            self.combos[lead] = newcombo
        # back-eliminate from older rows
        for pc in list(self.pivot_rows):
            pr = self.pivot_rows[pc]
            f = pr.get(lead)
            if not f:
                continue
            del pr[lead]
            if p is None:
                for j, v in row.items():
                    if j == lead:
                        continue
                    w = pr.get(j, 0) - f * v
                    if w:
                        pr[j] = w
                    elif j in pr:
                        del pr[j]
            else:
                for j, v in row.items():
                    if j == lead:
                        continue
                    w = (pr.get(j, 0) - f * v) % p
                    if w:
                        pr[j] = w
                    elif j in pr:
                        del pr[j]
            if self.track:
                cb = self.combos[pc]
                for k, v in self.combos[lead].items():
                    w = cb.get(k, field.zero) - f * v
                    if p is not None:
                        w %= p
                    if w:
                        cb[k] = w
                    elif k in cb:
                        del cb[k]
        self.pivot_rows[lead] = row
        return True, None

    def to_rowspace(self) -> RowSpace:
        field = self.field
        zero = field.zero
        pivots = sorted(self.pivot_rows)
        dense = []
        for c in pivots:
            dr = [zero] * self.ncols
            for j, x in self.pivot_rows[c].items():
                dr[j] = x
            dense.append(tuple(dr))
        basis = Matrix(field, tuple(dense), ncols=self.ncols, _raw=True)
        return RowSpace(field, basis, pivots)


def inverse(m: Matrix):
    """Inverse of a square matrix, or None if singular."""
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    field = m.field
    aug = m.hstack(Matrix.identity(field, n))
    red, pivots = aug.rref()
    if tuple(pivots) != tuple(range(n)):
        return None
    rows = tuple(r[n:] for r in red.rows)
    return Matrix(field, rows, ncols=n, _raw=True)
