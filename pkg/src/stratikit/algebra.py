"""Finite-dimensional associative algebras given by structure constants.

An algebra is a basis b_0..b_{N-1} with a multiplication tensor
T[i][j] = coordinates of b_i * b_j, a unit vector, and (optionally) a
complete list of orthogonal idempotents e_0..e_{n-1} summing to the unit.
When idempotents are installed the basis must be *vertex homogeneous*: each
basis element lies in a single Peirce block e_s A e_t. All the block
bookkeeping (Cartan matrix, corners, homogeneous radical generators) reads
straight off that decomposition.

Radical computation is exact: the regular-representation trace form in
characteristic zero or characteristic larger than the dimension, and the
iterated p-power-coefficient forms otherwise. Primitive idempotents are
obtained by splitting the semisimple quotient with minimal-polynomial
factorizations and Newton-lifting through the radical.
"""

from __future__ import annotations

import random

from .errors import (
    InputError,
    InternalInconsistency,
    LiftingFailed,
    NotBasicSplit,
)
from .linalg import (
    EchelonBasis,
    Matrix,
    RowSpace,
    inverse,
    left_kernel_basis,
    vec_add,
    vec_is_zero,
    vec_sub,
)
from .polyutil import (
    characteristic_polynomial,
    factor_polynomial,
    poly_mul,
    poly_xgcd,
    trim,
)

_FULL_ASSOC_LIMIT = 30
_SPOT_ASSOC_TRIALS = 500
_VERIFY_DIM_LIMIT = 40


class AssocAlgebra:
    """Associative unital algebra over an exact field."""

    def __init__(self, field, tensor, unit, labels=None, idempotents=None, check="auto"):
        self.field = field
        norm = field.normalize
        self.dim = len(tensor)
        tens = []
        for row in tensor:
            if len(row) != self.dim:
                raise InputError("multiplication tensor is not square")
            trow = []
            for vec in row:
                if len(vec) != self.dim:
                    raise InputError("tensor entry has wrong length")
                trow.append(tuple(norm(x) for x in vec))
            tens.append(tuple(trow))
        self.tensor = tuple(tens)
        if len(unit) != self.dim:
            raise InputError("unit vector has wrong length")
        self.unit = tuple(norm(x) for x in unit)
        if labels is None:
            labels = tuple(f"b{i}" for i in range(self.dim))
        self.labels = tuple(str(s) for s in labels)
        if len(self.labels) != self.dim:
            raise InputError("label count does not match dimension")
        if len(set(self.labels)) != self.dim:
            raise InputError("duplicate basis labels")
        self._sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(vec) if c) for vec in row)
            for row in self.tensor
        )
        self._cache = {}
        self.idempotents = None
        self.n_vertices = 0
        self.vertex_pairs = None  # per basis element: (left vertex, right vertex)
        self.block_coords = None  # (s, t) -> tuple of basis indices
        self._check_unital()
        self._check_associative(check)
        if idempotents is not None:
            self._install_idempotents(idempotents)

    # -- multiplication ------------------------------------------------------

    def mult(self, u, v):
        """Product of two elements given as coordinate vectors."""
        field = self.field
        p = field.char if field.char else None
        acc = [field.zero] * self.dim
        sparse = self._sparse
        for i, a in enumerate(u):
            if a:
                srow = sparse[i]
                for j, b in enumerate(v):
                    if b:
                        ab = a * b
                        for k, c in srow[j]:
                            acc[k] = acc[k] + ab * c
        if p is not None:
            return tuple(x % p for x in acc)
        return tuple(field.normalize(x) for x in acc)

    def right_matrix(self, x) -> Matrix:
        """Matrix of v -> v*x on row vectors."""
        field = self.field
        p = field.char if field.char else None
        rows = []
        for i in range(self.dim):
            srow = self._sparse[i]
            acc = [field.zero] * self.dim
            for j, b in enumerate(x):
                if b:
                    for k, c in srow[j]:
                        acc[k] = acc[k] + b * c
            if p is not None:
                acc = [v % p for v in acc]
            else:
                acc = [field.normalize(v) for v in acc]
            rows.append(tuple(acc))
        return Matrix(self.field, tuple(rows), ncols=self.dim, _raw=True)

    def left_matrix(self, x) -> Matrix:
        """Matrix of v -> x*v on row vectors."""
        field = self.field
        p = field.char if field.char else None
        rows = []
        for i in range(self.dim):
            acc = [field.zero] * self.dim
            for j, b in enumerate(x):
                if b:
                    for k, c in self._sparse[j][i]:
                        acc[k] = acc[k] + b * c
            if p is not None:
                acc = [v % p for v in acc]
            else:
                acc = [field.normalize(v) for v in acc]
            rows.append(tuple(acc))
        return Matrix(self.field, tuple(rows), ncols=self.dim, _raw=True)

    def element_power(self, x, k):
        out = self.unit
        for _ in range(k):
            out = self.mult(out, x)
        return out

    def element_minimal_polynomial(self, x):
        field = self.field
        basis = EchelonBasis(field, self.dim, track=True)
        cur = self.unit
        for _ in range(self.dim + 2):
            independent, combo = basis.insert(cur)
            if not independent:
                k = basis.n_inserted - 1
                coeffs = [field.zero] * (k + 1)
                for j, c in combo.items():
                    coeffs[j] = field.neg(c)
                coeffs[k] = field.one
                return trim(coeffs)
            cur = self.mult(cur, x)
        raise InternalInconsistency("minimal polynomial iteration did not terminate")

    def evaluate_polynomial(self, poly, x):
        """poly(x) inside the algebra, by Horner."""
        acc = tuple(self.field.zero for _ in range(self.dim))
        for c in reversed(poly):
            acc = self.mult(acc, x)
            if c:
                acc = vec_add(self.field, acc, tuple(self.field.mul(c, u) for u in self.unit))
        return acc

    # -- structural checks ---------------------------------------------------

    def _check_unital(self):
        for k in range(self.dim):
            bk = tuple(
                self.field.one if i == k else self.field.zero for i in range(self.dim)
            )
            if self.mult(self.unit, bk) != bk or self.mult(bk, self.unit) != bk:
                raise InputError(f"unit vector fails on basis element {k}")

    def _assoc_triple_ok(self, i, j, k):
        field = self.field
        p = field.char if field.char else None
        lhs = [field.zero] * self.dim
        for m, c in self._sparse[i][j]:
            for t, d in self._sparse[m][k]:
                lhs[t] = lhs[t] + c * d
        rhs = [field.zero] * self.dim
        for m, c in self._sparse[j][k]:
            for t, d in self._sparse[i][m]:
                rhs[t] = rhs[t] + c * d
        if p is not None:
            return all((a - b) % p == 0 for a, b in zip(lhs, rhs))
        return all(field.normalize(a) == field.normalize(b) for a, b in zip(lhs, rhs))

    def _check_associative(self, check):
        if check == "none":
            return
        if check == "full" or (check == "auto" and self.dim <= _FULL_ASSOC_LIMIT):
            for i in range(self.dim):
                for j in range(self.dim):
                    for k in range(self.dim):
                        if not self._assoc_triple_ok(i, j, k):
                            raise InputError(
                                f"multiplication tensor is not associative at "
                                f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                            )
        else:
            rng = random.Random(7919)
            for _ in range(_SPOT_ASSOC_TRIALS):
                i = rng.randrange(self.dim)
                j = rng.randrange(self.dim)
                k = rng.randrange(self.dim)
                if not self._assoc_triple_ok(i, j, k):
                    raise InputError(
                        f"multiplication tensor is not associative at "
                        f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                    )

    def _install_idempotents(self, idempotents):
        field = self.field
        idems = tuple(tuple(field.normalize(x) for x in e) for e in idempotents)
        if not idems:
            raise InputError("empty idempotent list")
        total = tuple(field.zero for _ in range(self.dim))
        for e in idems:
            total = vec_add(field, total, e)
        if total != self.unit:
            raise InputError("idempotents do not sum to the unit")
        for a, ea in enumerate(idems):
            for b, eb in enumerate(idems):
                prod = self.mult(ea, eb)
                want = ea if a == b else tuple(field.zero for _ in range(self.dim))
                if prod != want:
                    raise InputError(f"idempotents {a}, {b} are not orthogonal idempotents")
        n = len(idems)
        pairs = []
        blocks = {}
        for k in range(self.dim):
            bvec = tuple(
                field.one if i == k else field.zero for i in range(self.dim)
            )
            found = None
            for s in range(n):
                left = self.mult(idems[s], bvec)
                if vec_is_zero(left):
                    continue
                for t in range(n):
                    piece = self.mult(left, idems[t])
                    if not vec_is_zero(piece):
                        if found is not None:
                            raise InputError(
                                f"basis element {self.labels[k]} meets several "
                                f"Peirce blocks; basis is not vertex homogeneous"
                            )
                        if piece != bvec:
                            raise InputError(
                                f"basis element {self.labels[k]} is not contained "
                                f"in a single Peirce block"
                            )
                        found = (s, t)
            if found is None:
                raise InputError(f"basis element {self.labels[k]} vanishes under all blocks")
            pairs.append(found)
            blocks.setdefault(found, []).append(k)
        self.idempotents = idems
        self.n_vertices = n
        self.vertex_pairs = tuple(pairs)
        self.block_coords = {st: tuple(ix) for st, ix in blocks.items()}

    # -- radical -------------------------------------------------------------

    def radical_rowspace(self) -> RowSpace:
        if "radical" not in self._cache:
            self._cache["radical"] = _compute_radical(self)
        return self._cache["radical"]

    @property
    def radical_dim(self) -> int:
        return self.radical_rowspace().dim

    def is_semisimple(self) -> bool:
        return self.radical_dim == 0

    def is_basic_split(self) -> bool:
        """True when A/rad A is a product of copies of the base field indexed
        by the installed idempotents."""
        if self.idempotents is None:
            return False
        return self.dim == self.n_vertices + self.radical_dim

    def require_basic_split(self):
        if not self.is_basic_split():
            raise NotBasicSplit(
                "operation needs a basic algebra with a complete set of "
                "primitive idempotents and split simple quotients"
            )

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.tensor[i][j] != self.tensor[j][i]:
                    return False
        return True

    def cartan_matrix(self):
        """C[i][j] = dim e_i A e_j, as a tuple of tuples of ints."""
        self.require_basic_split()
        n = self.n_vertices
        return tuple(
            tuple(len(self.block_coords.get((i, j), ())) for j in range(n))
            for i in range(n)
        )

    # -- split basis: idempotents + radical ----------------------------------

    def split_basis_vectors(self):
        """Idempotent vectors followed by the canonical radical basis rows."""
        if "split_basis" not in self._cache:
            self.require_basic_split()
            rad = self.radical_rowspace()
            vecs = tuple(self.idempotents) + tuple(rad.basis.rows)
            labels = tuple(f"e{i}" for i in range(self.n_vertices)) + tuple(
                f"j{i}" for i in range(rad.dim)
            )
            mat = Matrix(self.field, vecs, ncols=self.dim, _raw=True)
            inv = inverse(mat)
            if inv is None:
                raise InternalInconsistency("idempotents + radical do not span")
            self._cache["split_basis"] = (labels, vecs, inv)
        return self._cache["split_basis"]

    def split_coords(self, x):
        """Coefficients of x over the split basis (idempotents, radical)."""
        _, _, inv = self.split_basis_vectors()
        return inv.apply(tuple(self.field.normalize(c) for c in x))

    def action_labels(self):
        return self.split_basis_vectors()[0]

    def radical_generators(self):
        """Vertex-homogeneous lifts of a basis of rad/rad^2.

        Returns a tuple of (label, source, target, vector). Together with the
        idempotents these generate the algebra, so intertwining with them is
        intertwining with everything.
        """
        if "rad_gens" in self._cache:
            return self._cache["rad_gens"]
        self.require_basic_split()
        field = self.field
        rad = self.radical_rowspace()
        sq_rows = []
        rows = rad.basis.rows
        for u in rows:
            for v in rows:
                w = self.mult(u, v)
                if not vec_is_zero(w):
                    sq_rows.append(w)
        basis = EchelonBasis(field, self.dim)
        for r in sq_rows:
            basis.insert(r)
        lifts = []
        for r in rows:
            independent, _ = basis.insert(r)
            if independent:
                lifts.append(r)
        gens = []
        k = 0
        for lift in lifts:
            for (s, t), coords in sorted(self.block_coords.items()):
                piece = [field.zero] * self.dim
                nonzero = False
                for c in coords:
                    if lift[c]:
                        piece[c] = lift[c]
                        nonzero = True
                if nonzero:
                    gens.append((f"r{k}", s, t, tuple(piece)))
                    k += 1
        self._cache["rad_gens"] = tuple(gens)
        return self._cache["rad_gens"]

    # -- derived algebras ------------------------------------------------------

    def opposite(self) -> "AssocAlgebra":
        if "opposite" not in self._cache:
            tensor = tuple(
                tuple(self.tensor[j][i] for j in range(self.dim))
                for i in range(self.dim)
            )
            opp = AssocAlgebra(
                self.field,
                tensor,
                self.unit,
                labels=self.labels,
                idempotents=self.idempotents,
                check="none",
            )
            opp._cache["opposite"] = self
            self._cache["opposite"] = opp
        return self._cache["opposite"]

    def corner_algebra(self, vertices):
        """The algebra eAe for e = sum of the chosen vertex idempotents.

        Returns (corner, coords) with coords the ambient basis indices kept;
        corner vertex i is the i-th entry of `vertices` (given order kept).
        """
        self.require_basic_split()
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise InputError("repeated vertices in corner")
        coords = []
        for s in vertices:
            for t in vertices:
                coords.extend(self.block_coords.get((s, t), ()))
        coords = tuple(sorted(coords))
        pos = {c: i for i, c in enumerate(coords)}
        field = self.field
        dim = len(coords)

        def restrict(vec):
            out = [field.zero] * dim
            for j, x in enumerate(vec):
                if x:
                    if j not in pos:
                        raise InternalInconsistency("corner product escapes the corner")
                    out[pos[j]] = x
            return tuple(out)

        tensor = tuple(
            tuple(restrict(self.tensor[a][b]) for b in coords) for a in coords
        )
        unit = [field.zero] * dim
        idems = []
        for s in vertices:
            e = restrict(self.idempotents[s])
            idems.append(e)
            unit = [field.add(a, b) for a, b in zip(unit, e)]
        corner = AssocAlgebra(
            field,
            tensor,
            tuple(unit),
            labels=tuple(self.labels[c] for c in coords),
            idempotents=tuple(idems),
            check="none",
        )
        return corner, coords

    def quotient_by_ideal(self, ideal_rows):
        """Quotient by a two-sided ideal spanned by the given rows.

        Returns (quotient, project, surviving) where project maps ambient
        coordinate vectors to quotient coordinates and surviving lists the
        vertices whose idempotents stay nonzero (in the original order).
        """
        self.require_basic_split()
        field = self.field
        pieces = []
        for r in ideal_rows:
            rr = tuple(field.normalize(x) for x in r)
            for (s, t), coords in sorted(self.block_coords.items()):
                piece = [field.zero] * self.dim
                nonzero = False
                for c in coords:
                    if rr[c]:
                        piece[c] = rr[c]
                        nonzero = True
                if nonzero:
                    pieces.append(tuple(piece))
        ideal = RowSpace.from_rows(field, pieces, ncols=self.dim)
        # guard: the span must be a two-sided ideal
        if self.dim <= _VERIFY_DIM_LIMIT:
            probe = range(self.dim)
        else:
            rng = random.Random(4271)
            probe = sorted(rng.sample(range(self.dim), 10))
        for r in ideal.basis.rows:
            for i in probe:
                bi = tuple(
                    field.one if m == i else field.zero for m in range(self.dim)
                )
                if not ideal.contains(self.mult(r, bi)) or not ideal.contains(
                    self.mult(bi, r)
                ):
                    raise InputError("quotient rows do not span a two-sided ideal")
        free = ideal.free_columns()

        def project(vec):
            red = ideal.reduce(tuple(field.normalize(x) for x in vec))
            return tuple(red[c] for c in free)

        tensor = tuple(
            tuple(project(self.tensor[a][b]) for b in free) for a in free
        )
        unit = project(self.unit)
        idem_imgs = [project(e) for e in self.idempotents]
        surviving = tuple(i for i, e in enumerate(idem_imgs) if not vec_is_zero(e))
        quotient = AssocAlgebra(
            field,
            tensor,
            unit,
            labels=tuple(self.labels[c] for c in free),
            idempotents=tuple(idem_imgs[i] for i in surviving),
            check="none",
        )
        return quotient, project, surviving

    def __repr__(self):
        return f"AssocAlgebra(dim={self.dim}, field={self.field})"


# -- radical computation -------------------------------------------------------


def _compute_radical(algebra: AssocAlgebra) -> RowSpace:
    field = algebra.field
    n = algebra.dim
    if n == 0:
        return RowSpace.from_rows(field, [], ncols=0)
    # tau[k] = trace of left multiplication by basis element k
    tau = []
    for k in range(n):
        acc = field.zero
        for i in range(n):
            acc = field.add(acc, algebra.tensor[k][i][i])
        tau.append(acc)
    # theta[i][j] = trace of left multiplication by b_i b_j
    theta_rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = field.zero
            for k, c in algebra._sparse[i][j]:
                acc = field.add(acc, field.mul(c, tau[k]))
            row.append(acc)
        theta_rows.append(tuple(row))
    theta = Matrix(field, tuple(theta_rows), ncols=n, _raw=True)

    v = Matrix.identity(field, n)
    p = field.char
    if p == 0:
        stages = [0]
    else:
        stages = []
        q = 1
        j = 0
        while q <= n:
            stages.append(j)
            q *= p
            j += 1
    for j in stages:
        m = v.nrows
        if m == 0:
            break
        if j == 0:
            gram = v.mul(theta).mul(v.transpose())
        else:
            q = p**j
            rows = []
            for a in range(m):
                row = []
                for b in range(m):
                    prod = algebra.mult(v.rows[a], v.rows[b])
                    cp = characteristic_polynomial(algebra.left_matrix(prod))
                    row.append(cp[n - q])
                rows.append(tuple(row))
            gram = Matrix(field, tuple(rows), ncols=m, _raw=True)
        kernel = left_kernel_basis(gram)
        if len(kernel) == m:
            continue
        v = Matrix(field, kernel, ncols=m).mul(v)
    rad = RowSpace.from_rows(field, v, ncols=n)
    _verify_radical(algebra, rad)
    return rad


def _verify_radical(algebra: AssocAlgebra, rad: RowSpace):
    """Cheap certification: the span must be nilpotent (and an ideal)."""
    field = algebra.field
    if algebra.dim > _VERIFY_DIM_LIMIT:
        return
    for r in rad.basis.rows:
        for i in range(algebra.dim):
            bi = tuple(
                field.one if m == i else field.zero for m in range(algebra.dim)
            )
            if not rad.contains(algebra.mult(r, bi)) or not rad.contains(
                algebra.mult(bi, r)
            ):
                raise InternalInconsistency("computed radical is not an ideal")
    cur = rad
    while cur.dim:
        prods = []
        for u in cur.basis.rows:
            for w in cur.basis.rows:
                prods.append(algebra.mult(u, w))
        nxt = RowSpace.from_rows(field, prods, ncols=algebra.dim)
        if nxt.dim >= cur.dim:
            raise InternalInconsistency("computed radical is not nilpotent")
        cur = nxt


# -- idempotent lifting ----------------------------------------------------------


def _vs_quotient_algebra(algebra: AssocAlgebra, ideal: RowSpace):
    """Quotient algebra by a two-sided ideal, without idempotent decoration.

    Returns (quotient, project, section); section is the free-coordinate
    linear splitting of project.
    """
    field = algebra.field
    free = ideal.free_columns()

    def project(vec):
        red = ideal.reduce(vec)
        return tuple(red[c] for c in free)

    def section(qvec):
        out = [field.zero] * algebra.dim
        for i, c in enumerate(free):
            out[c] = qvec[i]
        return tuple(out)

    tensor = tuple(
        tuple(project(algebra.mult(section_unit(a, free, field, algebra.dim),
                                   section_unit(b, free, field, algebra.dim)))
              for b in range(len(free)))
        for a in range(len(free))
    )
    unit = project(algebra.unit)
    quotient = AssocAlgebra(field, tensor, unit, check="none")
    return quotient, project, section


def section_unit(i, free, field, dim):
    out = [field.zero] * dim
    out[free[i]] = field.one
    return tuple(out)


def _corner_of(algebra: AssocAlgebra, e):
    """Corner eAe of an idempotent e: (corner algebra, embed function)."""
    field = algebra.field
    basis = EchelonBasis(field, algebra.dim)
    for i in range(algebra.dim):
        bi = tuple(field.one if m == i else field.zero for m in range(algebra.dim))
        basis.insert(algebra.mult(algebra.mult(e, bi), e))
    space = basis.to_rowspace()
    rows = space.basis.rows
    k = len(rows)

    def coords(vec):
        cs = space.coords(vec)
        if cs is None:
            raise InternalInconsistency("corner product escapes the corner")
        return cs

    tensor = tuple(
        tuple(coords(algebra.mult(rows[a], rows[b])) for b in range(k))
        for a in range(k)
    )
    unit = coords(e)
    corner = AssocAlgebra(field, tensor, unit, check="none")

    def embed(cvec):
        out = tuple(field.zero for _ in range(algebra.dim))
        for i, c in enumerate(cvec):
            if c:
                out = vec_add(field, out, tuple(field.mul(c, x) for x in rows[i]))
        return out

    return corner, embed


def _split_candidates(algebra: AssocAlgebra, rng):
    field = algebra.field
    n = algebra.dim
    for i in range(n):
        yield tuple(field.one if m == i else field.zero for m in range(n))
    for i in range(n):
        for j in range(i + 1, n):
            yield tuple(
                field.add(
                    field.one if m == i else field.zero,
                    field.one if m == j else field.zero,
                )
                for m in range(n)
            )
    for i in range(n):
        for j in range(n):
            if i != j:
                bi = tuple(field.one if m == i else field.zero for m in range(n))
                bj = tuple(field.one if m == j else field.zero for m in range(n))
                yield algebra.mult(bi, bj)
    for _ in range(200):
        if field.char:
            yield tuple(field.normalize(rng.randrange(field.char)) for _ in range(n))
        else:
            yield tuple(field.normalize(rng.randint(-9, 9)) for _ in range(n))


def _primitive_idempotents_semisimple(algebra: AssocAlgebra, rng):
    """Primitive idempotents of a (semisimple) algebra, as vectors."""
    field = algebra.field
    if algebra.dim == 0:
        return []
    if algebra.dim == 1:
        return [algebra.unit]
    zero = tuple(field.zero for _ in range(algebra.dim))
    best_irreducible_deg = 0
    for z in _split_candidates(algebra, rng):
        if vec_is_zero(z):
            continue
        mp = algebra.element_minimal_polynomial(z)
        factors = factor_polynomial(field, mp)
        if len(factors) < 2:
            if factors and factors[0][1] == 1:
                best_irreducible_deg = max(best_irreducible_deg, len(factors[0][0]) - 1)
            continue
        g = [field.one]
        f0, m0 = factors[0]
        for _ in range(m0):
            g = poly_mul(field, g, list(f0))
        h = [field.one]
        for f, m in factors[1:]:
            for _ in range(m):
                h = poly_mul(field, h, list(f))
        gcd, u, _ = poly_xgcd(field, g, h)
        if len(gcd) != 1:
            raise InternalInconsistency("primary factors are not coprime")
        e = algebra.evaluate_polynomial(poly_mul(field, u, g), z)
        if algebra.mult(e, e) != e or vec_is_zero(e) or e == algebra.unit:
            raise InternalInconsistency("polynomial idempotent extraction failed")
        comp = vec_sub(field, algebra.unit, e)
        out = []
        for part in (e, comp):
            corner, embed = _corner_of(algebra, part)
            for prim in _primitive_idempotents_semisimple(corner, rng):
                out.append(embed(prim))
        return out
    if algebra.is_commutative() and best_irreducible_deg == algebra.dim:
        return [algebra.unit]
    raise LiftingFailed(
        "could not split the semisimple quotient into primitive idempotents; "
        "a division-algebra block may be present"
    )


def _newton_idempotent(algebra: AssocAlgebra, x):
    field = algebra.field
    e = tuple(x)
    for _ in range(64):
        sq = algebra.mult(e, e)
        if sq == e:
            return e
        cube = algebra.mult(sq, e)
        e = vec_sub(
            field,
            tuple(field.mul(field.normalize(3), c) for c in sq),
            tuple(field.mul(field.normalize(2), c) for c in cube),
        )
    raise LiftingFailed("idempotent refinement did not converge")


def lift_primitive_idempotents(algebra: AssocAlgebra, seed=20021):
    """A complete list of orthogonal primitive idempotents summing to 1.

    Splits the semisimple quotient, orders the pieces canonically, and lifts
    them one by one through the radical, conjugating each lift into the
    corner orthogonal to the previously accepted ones.
    """
    field = algebra.field
    rad = algebra.radical_rowspace()
    quotient, _, section = _vs_quotient_algebra(algebra, rad)
    rng = random.Random(seed)
    prims = _primitive_idempotents_semisimple(quotient, rng)
    prims.sort(key=lambda v: tuple(field.to_str(c) for c in v))
    lifted = []
    total = tuple(field.zero for _ in range(algebra.dim))
    for pv in prims:
        cand = section(pv)
        complement = vec_sub(field, algebra.unit, total)
        cand = algebra.mult(algebra.mult(complement, cand), complement)
        e = _newton_idempotent(algebra, cand)
        if vec_is_zero(e):
            raise LiftingFailed("a lifted idempotent collapsed to zero")
        lifted.append(e)
        total = vec_add(field, total, e)
    if total != algebra.unit:
        raise LiftingFailed("lifted idempotents do not sum to the unit")
    for a in range(len(lifted)):
        for b in range(len(lifted)):
            prod = algebra.mult(lifted[a], lifted[b])
            want = lifted[a] if a == b else tuple(field.zero for _ in range(algebra.dim))
            if prod != want:
                raise LiftingFailed("lifted idempotents are not orthogonal")
    for e in lifted:
        if not _is_primitive(algebra, rad, e):
            raise LiftingFailed("a lifted idempotent is not primitive")
    return tuple(lifted)


def _is_primitive(algebra: AssocAlgebra, rad: RowSpace, e) -> bool:
    """e is primitive iff dim eAe - dim e(rad)e == 1."""
    field = algebra.field
    corner = EchelonBasis(field, algebra.dim)
    for i in range(algebra.dim):
        bi = tuple(field.one if m == i else field.zero for m in range(algebra.dim))
        corner.insert(algebra.mult(algebra.mult(e, bi), e))
    radpart = EchelonBasis(field, algebra.dim)
    for r in rad.basis.rows:
        radpart.insert(algebra.mult(algebra.mult(e, r), e))
    return corner.dim - radpart.dim == 1
