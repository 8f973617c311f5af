"""Right modules over basic structure-constant algebras.

A module is stored as action matrices (row convention: vectors are rows and
x acts by v -> v * rho(x)) for the algebra's split basis: the idempotents
e_0..e_{n-1} followed by the canonical radical basis. The module basis is
*adapted*: every rho(e_i) is a 0/1 diagonal projection, so each module
coordinate belongs to a single vertex (`coord_vertex`). All submodules and
quotients produced here keep that property automatically (echelon bases of
invariant subspaces are vertex pure).

Hom spaces are computed as intertwiners with the idempotents and a set of
vertex-homogeneous radical generators; since those generate the algebra this
is exact, and the block structure keeps the linear systems small.

Endomorphism algebras are composed classically: the product f * g is the
composite "apply g first, then f", so End of the regular module is the
algebra itself (acting by left multiplication) and End of a projective sum
has Cartan blocks Hom(P_t, P_s) = e_s A e_t.
"""

from __future__ import annotations

import random

from . import config
from .algebra import AssocAlgebra, lift_primitive_idempotents
from .errors import (
    DecompositionFailed,
    InputError,
    InternalInconsistency,
    LiftingFailed,
)
from .linalg import (
    EchelonBasis,
    Matrix,
    RowSpace,
    inverse,
    kernel_from_rref,
    left_kernel_basis,
    rref_sparse,
    vec_is_zero,
)
from .polyutil import evaluate_at_matrix, factor_polynomial, matrix_minimal_polynomial

_MODULE_CHECK_LIMIT = 24


class ModuleRep:
    """A right module, given by action matrices over the split basis."""

    def __init__(self, algebra: AssocAlgebra, action, check="auto"):
        algebra.require_basic_split()
        self.algebra = algebra
        labels = algebra.action_labels()
        if set(action) != set(labels):
            raise InputError(
                "module action must cover exactly the algebra's split basis"
            )
        dims = {m.nrows for m in action.values()} | {m.ncols for m in action.values()}
        if len(dims) > 1:
            raise InputError("module action matrices must be square of equal size")
        self.dim = dims.pop() if dims else 0
        self.action = {lab: action[lab] for lab in labels}
        self._cache = {}
        field = algebra.field
        n = algebra.n_vertices
        # adapted basis: idempotents act as 0/1 diagonal projections summing to 1
        vertex = [None] * self.dim
        for i in range(n):
            m = self.action[f"e{i}"]
            for r in range(self.dim):
                for c in range(self.dim):
                    x = m.entry(r, c)
                    if r != c:
                        if x:
                            raise InputError(
                                f"idempotent e{i} does not act diagonally"
                            )
                    elif x:
                        if x != field.one:
                            raise InputError(
                                f"idempotent e{i} has a non-idempotent diagonal"
                            )
                        if vertex[r] is not None:
                            raise InputError(
                                "module coordinate belongs to two vertices"
                            )
                        vertex[r] = i
        if any(v is None for v in vertex):
            raise InputError("module coordinate not covered by any idempotent")
        self.coord_vertex = tuple(vertex)
        self.summands = None  # optional [(module, offset)] metadata
        self._check_structure(check)

    # -- validation ---------------------------------------------------------

    def _check_structure(self, check):
        if check == "none":
            return
        labels, vecs, _ = self.algebra.split_basis_vectors()
        pairs = [(a, b) for a in range(len(labels)) for b in range(len(labels))]
        if check != "full" and self.dim > _MODULE_CHECK_LIMIT:
            rng = random.Random(9176)
            pairs = [
                (rng.randrange(len(labels)), rng.randrange(len(labels)))
                for _ in range(60)
            ]
        for a, b in pairs:
            prod = self.algebra.mult(vecs[a], vecs[b])
            lhs = self.action[labels[a]].mul(self.action[labels[b]])
            if lhs != self.act(prod):
                raise InputError(
                    f"module action is not multiplicative on "
                    f"({labels[a]}, {labels[b]})"
                )

    # -- actions ------------------------------------------------------------

    def act(self, x) -> Matrix:
        """Action matrix of an arbitrary algebra element."""
        field = self.algebra.field
        coords = self.algebra.split_coords(x)
        labels = self.algebra.action_labels()
        acc = Matrix.zeros(field, self.dim, self.dim)
        for c, lab in zip(coords, labels):
            if c:
                acc = acc.add(self.action[lab].scale(c))
        return acc

    def basis_act(self, k) -> Matrix:
        """Action of the k-th algebra basis element (cached)."""
        cache = self._cache.setdefault("basis_act", {})
        if k not in cache:
            field = self.algebra.field
            vec = tuple(
                field.one if i == k else field.zero for i in range(self.algebra.dim)
            )
            cache[k] = self.act(vec)
        return cache[k]

    def gen_action(self):
        """[(label, source, target, Matrix)] for the radical generators."""
        if "gen_action" not in self._cache:
            out = []
            for lab, s, t, vec in self.algebra.radical_generators():
                out.append((lab, s, t, self.act(vec)))
            self._cache["gen_action"] = tuple(out)
        return self._cache["gen_action"]

    @property
    def vertex_dims(self):
        n = self.algebra.n_vertices
        counts = [0] * n
        for v in self.coord_vertex:
            counts[v] += 1
        return tuple(counts)

    def coords_of_vertex(self, i):
        return tuple(c for c, v in enumerate(self.coord_vertex) if v == i)

    def is_zero(self):
        return self.dim == 0

    def __repr__(self):
        return f"ModuleRep(dim={self.dim} over {self.algebra!r})"


# -- constructors ---------------------------------------------------------------


def regular_module(algebra: AssocAlgebra) -> ModuleRep:
    labels, vecs, _ = algebra.split_basis_vectors()
    action = {lab: algebra.right_matrix(v) for lab, v in zip(labels, vecs)}
    return ModuleRep(algebra, action, check="none")


def projective_module(algebra: AssocAlgebra, i) -> ModuleRep:
    """P(i) = e_i A, as the coordinate submodule of the regular module."""
    coords = []
    for (s, t), cs in sorted(algebra.block_coords.items()):
        if s == i:
            coords.extend(cs)
    coords = tuple(sorted(coords))
    labels, vecs, _ = algebra.split_basis_vectors()
    action = {}
    for lab, v in zip(labels, vecs):
        m = algebra.right_matrix(v)
        action[lab] = Matrix(
            algebra.field,
            tuple(tuple(m.entry(r, c) for c in coords) for r in coords),
            ncols=len(coords),
            _raw=True,
        )
    return ModuleRep(algebra, action, check="none")


def simple_module(algebra: AssocAlgebra, i) -> ModuleRep:
    field = algebra.field
    algebra.require_basic_split()
    action = {}
    for lab in algebra.action_labels():
        if lab == f"e{i}":
            action[lab] = Matrix(field, ((field.one,),), ncols=1, _raw=True)
        else:
            action[lab] = Matrix(field, ((field.zero,),), ncols=1, _raw=True)
    return ModuleRep(algebra, action, check="none")


def zero_module(algebra: AssocAlgebra) -> ModuleRep:
    field = algebra.field
    action = {lab: Matrix(field, (), ncols=0) for lab in algebra.action_labels()}
    return ModuleRep(algebra, action, check="none")


def dual_module(m: ModuleRep) -> ModuleRep:
    """K-linear dual, a right module over the opposite algebra (cached)."""
    if "dual" not in m._cache:
        op = m.algebra.opposite()
        action = {}
        for lab, vec in zip(op.action_labels(), op.split_basis_vectors()[1]):
            action[lab] = m.act(vec).transpose()
        d = ModuleRep(op, action, check="none")
        m._cache["dual"] = d
    return m._cache["dual"]


def module_from_action(algebra: AssocAlgebra, action, check="full") -> ModuleRep:
    return ModuleRep(algebra, dict(action), check=check)


def direct_sum(mods) -> ModuleRep:
    mods = list(mods)
    if not mods:
        raise InputError("direct sum needs at least one summand")
    algebra = mods[0].algebra
    field = algebra.field
    if any(x.algebra is not algebra for x in mods):
        raise InputError("direct sum needs modules over the same algebra")
    total = sum(x.dim for x in mods)
    action = {}
    for lab in algebra.action_labels():
        rows = []
        for k, x in enumerate(mods):
            pre = sum(y.dim for y in mods[:k])
            post = total - pre - x.dim
            for r in range(x.dim):
                row = (
                    (field.zero,) * pre
                    + x.action[lab].row(r)
                    + (field.zero,) * post
                )
                rows.append(row)
        action[lab] = Matrix(field, tuple(rows), ncols=total, _raw=True)
    out = ModuleRep(algebra, action, check="none")
    offsets = []
    pre = 0
    for x in mods:
        offsets.append((x, pre))
        pre += x.dim
    out.summands = tuple(offsets)
    return out


# -- sub/quotient structure -------------------------------------------------------


def invariant_rowspace(m: ModuleRep, rows) -> RowSpace:
    """Row space of the submodule *generated* by the given rows."""
    field = m.algebra.field
    basis = EchelonBasis(field, m.dim)
    labels = m.algebra.action_labels()
    work = []
    for r in rows:
        rr = tuple(field.normalize(x) for x in r)
        independent, _ = basis.insert(rr)
        if independent:
            work.append(rr)
    while work:
        r = work.pop()
        for lab in labels:
            img = m.action[lab].apply(r)
            if not vec_is_zero(img):
                independent, _ = basis.insert(img)
                if independent:
                    work.append(img)
    return basis.to_rowspace()


def submodule(m: ModuleRep, rows, generated=False):
    """(S, embed) for the invariant span of rows; embed rows are S's basis.

    With generated=False the rows must already span an invariant subspace.
    """
    field = m.algebra.field
    if generated:
        space = invariant_rowspace(m, rows)
    else:
        space = RowSpace.from_rows(field, [tuple(field.normalize(x) for x in r) for r in rows], ncols=m.dim)
    action = {}
    for lab, mat in m.action.items():
        out_rows = []
        for r in space.basis.rows:
            img = mat.apply(r)
            coords = space.coords(img)
            if coords is None:
                raise InputError("rows do not span an invariant subspace")
            out_rows.append(coords)
        action[lab] = Matrix(field, tuple(out_rows), ncols=space.dim)
    sub = ModuleRep(m.algebra, action, check="none")
    return sub, space.basis


def quotient_module(m: ModuleRep, rows, generated=False):
    """(Q, project) for the quotient by the invariant span of rows.

    project is the dim(M) x dim(Q) matrix of the canonical surjection.
    """
    field = m.algebra.field
    if generated:
        space = invariant_rowspace(m, rows)
    else:
        space = RowSpace.from_rows(field, [tuple(field.normalize(x) for x in r) for r in rows], ncols=m.dim)
        for r in space.basis.rows:
            for lab, mat in m.action.items():
                if not space.contains(mat.apply(r)):
                    raise InputError("rows do not span an invariant subspace")
    free = space.free_columns()

    def project_vec(v):
        red = space.reduce(v)
        return tuple(red[c] for c in free)

    action = {}
    for lab, mat in m.action.items():
        out_rows = []
        for c in free:
            unit = tuple(
                field.one if k == c else field.zero for k in range(m.dim)
            )
            out_rows.append(project_vec(mat.apply(unit)))
        action[lab] = Matrix(field, tuple(out_rows), ncols=len(free))
    quot = ModuleRep(m.algebra, action, check="none")
    proj = Matrix(
        field,
        tuple(project_vec(tuple(field.one if k == r else field.zero for k in range(m.dim)))
              for r in range(m.dim)),
        ncols=len(free),
    )
    return quot, proj


def radical_rowspace(m: ModuleRep) -> RowSpace:
    """Row space of M * rad(A)."""
    field = m.algebra.field
    basis = EchelonBasis(field, m.dim)
    rad_dim = m.algebra.radical_dim
    for k in range(rad_dim):
        mat = m.action[f"j{k}"]
        for r in mat.rows:
            if not vec_is_zero(r):
                basis.insert(r)
    return basis.to_rowspace()


def radical_submodule(m: ModuleRep):
    return submodule(m, radical_rowspace(m).basis.rows)


def radical_power_rowspace(m: ModuleRep, k) -> RowSpace:
    """Row space of M * rad(A)^k."""
    field = m.algebra.field
    rows = list(Matrix.identity(field, m.dim).rows)
    rad_dim = m.algebra.radical_dim
    for _ in range(k):
        basis = EchelonBasis(field, m.dim)
        for r in rows:
            for j in range(rad_dim):
                img = m.action[f"j{j}"].apply(r)
                if not vec_is_zero(img):
                    basis.insert(img)
        rows = list(basis.to_rowspace().basis.rows)
        if not rows:
            break
    return RowSpace.from_rows(field, rows, ncols=m.dim)


def loewy_length(m: ModuleRep) -> int:
    """Least k with M * rad(A)^k = 0."""
    field = m.algebra.field
    rows = list(Matrix.identity(field, m.dim).rows)
    rad_dim = m.algebra.radical_dim
    k = 0
    while rows:
        basis = EchelonBasis(field, m.dim)
        for r in rows:
            for j in range(rad_dim):
                img = m.action[f"j{j}"].apply(r)
                if not vec_is_zero(img):
                    basis.insert(img)
        rows = list(basis.to_rowspace().basis.rows)
        k += 1
    return k


def top_module(m: ModuleRep):
    return quotient_module(m, radical_rowspace(m).basis.rows)


def socle_rowspace(m: ModuleRep) -> RowSpace:
    """Largest subspace killed by the radical (the socle)."""
    field = m.algebra.field
    rad_dim = m.algebra.radical_dim
    if rad_dim == 0:
        return RowSpace.from_rows(
            field, Matrix.identity(field, m.dim), ncols=m.dim
        )
    stacked = m.action["j0"]
    for k in range(1, rad_dim):
        stacked = stacked.hstack(m.action[f"j{k}"])
    rows = left_kernel_basis(stacked)
    return RowSpace.from_rows(field, rows, ncols=m.dim)


def socle_submodule(m: ModuleRep):
    return submodule(m, socle_rowspace(m).basis.rows)


def trace_rowspace(m: ModuleRep, i) -> RowSpace:
    """Row space of the trace of P(i) in M, i.e. M e_i A."""
    field = m.algebra.field
    gens = [
        tuple(field.one if k == c else field.zero for k in range(m.dim))
        for c in m.coords_of_vertex(i)
    ]
    return invariant_rowspace(m, gens)


def top_multiplicities(m: ModuleRep):
    """Multiplicity of each simple in top(M)."""
    top, _ = top_module(m)
    return top.vertex_dims


# -- hom spaces -------------------------------------------------------------------


def hom_basis(m: ModuleRep, n: ModuleRep):
    """Canonical basis of Hom_A(M, N) as dim(M) x dim(N) matrices."""
    if m.algebra is not n.algebra:
        raise InputError("hom spaces need modules over the same algebra")
    field = m.algebra.field
    unknowns = []
    pos = {}
    for a in range(m.dim):
        for b in range(n.dim):
            if m.coord_vertex[a] == n.coord_vertex[b]:
                pos[(a, b)] = len(unknowns)
                unknowns.append((a, b))
    if not unknowns:
        return ()
    rows = []
    gens = m.algebra.radical_generators()
    for lab, s, t, vec in gens:
        gm = m.act(vec)
        gn = n.act(vec)
        for a in m.coords_of_vertex(s):
            for c in n.coords_of_vertex(t):
                row = {}
                for b in n.coords_of_vertex(s):
                    x = gn.entry(b, c)
                    if x:
                        row[pos[(a, b)]] = field.add(
                            row.get(pos[(a, b)], field.zero), x
                        )
                for d in m.coords_of_vertex(t):
                    x = gm.entry(a, d)
                    if x:
                        key = pos[(d, c)]
                        row[key] = field.sub(row.get(key, field.zero), x)
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    reduced, _ = rref_sparse(field, rows, len(unknowns))
    kernel = kernel_from_rref(field, reduced, len(unknowns))
    out = []
    zero = field.zero
    for vec in kernel:
        entries = [[zero] * n.dim for _ in range(m.dim)]
        for k, x in enumerate(vec):
            if x:
                a, b = unknowns[k]
                entries[a][b] = x
        out.append(Matrix(field, tuple(tuple(r) for r in entries), ncols=n.dim, _raw=True))
    return tuple(out)


def hom_dim(m: ModuleRep, n: ModuleRep) -> int:
    return len(hom_basis(m, n))


def endomorphism_algebra(m: ModuleRep):
    """End(M) as an AssocAlgebra; composition is classical (g first in f*g).

    If M carries direct-sum metadata the basis is assembled blockwise from
    Hom(summand, summand) and the summand projections are installed as the
    algebra's idempotents (block (s, t) of End is Hom(M_t, M_s)).
    """
    field = m.algebra.field
    if m.summands is None:
        mats = list(hom_basis(m, m))
        # a single block: the identity is the whole idempotent set, which
        # is complete and primitive exactly when M is indecomposable
        idems = [Matrix.identity(field, m.dim)]
    else:
        mats = []
        parts = m.summands
        for _, (x, xoff) in enumerate(parts):
            for _, (y, yoff) in enumerate(parts):
                # block (x -> y), contributing to e_? End e_?; order chosen
                # so projections come out as the installed idempotents
                for f in hom_basis(x, y):
                    big = [[field.zero] * m.dim for _ in range(m.dim)]
                    for a in range(x.dim):
                        for b in range(y.dim):
                            v = f.entry(a, b)
                            if v:
                                big[xoff + a][yoff + b] = v
                    mats.append(
                        Matrix(field, tuple(tuple(r) for r in big), ncols=m.dim, _raw=True)
                    )
        idems = []
        for x, xoff in parts:
            big = [[field.zero] * m.dim for _ in range(m.dim)]
            for a in range(x.dim):
                big[xoff + a][xoff + a] = field.one
            idems.append(
                Matrix(field, tuple(tuple(r) for r in big), ncols=m.dim, _raw=True)
            )
    if not mats:
        raise InputError("endomorphism algebra of the zero module")
    flat = [tuple(x for row in f.rows for x in row) for f in mats]
    space = RowSpace.from_rows(field, flat, ncols=m.dim * m.dim)
    if space.dim != len(mats):
        raise InternalInconsistency("endomorphism basis is not independent")
    # coordinates over `mats` itself: restrict to the pivot columns, where
    # the flattened basis becomes an invertible square matrix
    pivots = space.pivots
    piv_inv = inverse(
        Matrix(
            field,
            tuple(tuple(row[c] for c in pivots) for row in flat),
            ncols=len(pivots),
            _raw=True,
        )
    )
    if piv_inv is None:
        raise InternalInconsistency("endomorphism basis is not independent")

    def coords(mat):
        vec = tuple(x for row in mat.rows for x in row)
        if not space.contains(vec):
            raise InternalInconsistency("endomorphism space is not closed")
        return piv_inv.apply(tuple(vec[c] for c in pivots))

    dim = len(mats)
    tensor = []
    for a in range(dim):
        row = []
        for b in range(dim):
            row.append(coords(mats[b].mul(mats[a])))  # a * b = compose b then a
        tensor.append(tuple(row))
    unit = coords(Matrix.identity(field, m.dim))
    labels = [f"f{i}" for i in range(dim)]
    idem_coords = tuple(coords(e) for e in idems) if idems is not None else None
    alg = AssocAlgebra(
        field,
        tuple(tensor),
        unit,
        labels=labels,
        idempotents=idem_coords,
        check="auto",
    )
    alg.hom_matrices = tuple(mats)
    return alg


# -- projective covers and syzygies ------------------------------------------------


def projective_cover(m: ModuleRep):
    """(P, F, gens) with F: P -> M a projective cover (rows of F span M).

    P is the direct sum of P(v) over the chosen top generators; gens records
    the vertex of each summand in order.
    """
    field = m.algebra.field
    rad = radical_rowspace(m)
    free = rad.free_columns()
    gens = [m.coord_vertex[c] for c in free]
    summands = [projective_module(m.algebra, v) for v in gens]
    if not summands:
        p = zero_module(m.algebra)
        return p, Matrix(field, (), ncols=m.dim), ()
    p = direct_sum(summands)
    rows = []
    for c, v in zip(free, gens):
        coords = []
        for (s, t), cs in sorted(m.algebra.block_coords.items()):
            if s == v:
                coords.extend(cs)
        for k in sorted(coords):
            rows.append(m.basis_act(k).row(c))
    f = Matrix(field, tuple(rows), ncols=m.dim)
    if f.rank() != m.dim:
        raise InternalInconsistency("projective cover candidate is not surjective")
    return p, f, tuple(gens)


def syzygy(m: ModuleRep):
    """(Omega, embed, P, F): kernel of a projective cover F: P -> M."""
    p, f, _ = projective_cover(m)
    if p.dim == 0:
        return zero_module(m.algebra), Matrix(m.algebra.field, (), ncols=0), p, f
    ker = left_kernel_basis(f)
    omega, embed = submodule(p, ker)
    prad = radical_rowspace(p)
    for r in embed.rows:
        if not prad.contains(r):
            raise InternalInconsistency("cover kernel is not contained in rad(P)")
    return omega, embed, p, f


def is_projective(m: ModuleRep) -> bool:
    if m.dim == 0:
        return True
    omega, _, _, _ = syzygy(m)
    return omega.dim == 0


# -- decomposition -----------------------------------------------------------------


def _split_by_matrix(m: ModuleRep, z: Matrix):
    """Try to split M along the primary decomposition of z in End(M)."""
    field = m.algebra.field
    mp = matrix_minimal_polynomial(z)
    factors = factor_polynomial(field, mp)
    if len(factors) < 2:
        return None
    parts = []
    total = 0
    for fac, mult in factors:
        g = evaluate_at_matrix(list(fac), z).power(mult)
        rows = left_kernel_basis(g)
        sub, embed = submodule(m, rows)
        parts.append((sub, embed))
        total += sub.dim
    if total != m.dim:
        raise InternalInconsistency("primary decomposition does not fill the module")
    return parts


def decompose(m: ModuleRep, seed=None):
    """Indecomposable summands of M (Krull-Schmidt list, deterministic).

    Raises DecompositionFailed when no splitting idempotent can be certified.
    """
    if seed is None:
        seed = config.stream_seed(11213)
    if m.dim == 0:
        return []
    ends = hom_basis(m, m)
    if len(ends) == 1:
        return [m]
    field = m.algebra.field
    rng = random.Random(seed)
    candidates = []
    ident = Matrix.identity(field, m.dim)
    for f in ends:
        candidates.append(f)
    for _ in range(24):
        coeffs = [
            field.normalize(rng.randrange(field.char))
            if field.char
            else field.normalize(rng.randint(-5, 5))
            for _ in ends
        ]
        acc = Matrix.zeros(field, m.dim, m.dim)
        for c, f in zip(coeffs, ends):
            if c:
                acc = acc.add(f.scale(c))
        candidates.append(acc)
    for z in candidates:
        if z == ident or z.is_zero():
            continue
        parts = _split_by_matrix(m, z)
        if parts is not None:
            out = []
            for sub, _ in parts:
                out.extend(decompose(sub, seed))
            return out
    # rigorous fallback: lift primitive idempotents in End(M)
    end_alg = endomorphism_algebra(m)
    try:
        idems = lift_primitive_idempotents(end_alg, seed)
    except LiftingFailed as exc:
        raise DecompositionFailed(str(exc)) from exc
    if len(idems) == 1:
        return [m]
    out = []
    total = 0
    for vec in idems:
        mat = Matrix.zeros(field, m.dim, m.dim)
        for c, f in zip(vec, end_alg.hom_matrices):
            if c:
                mat = mat.add(f.scale(c))
        rows = [r for r in mat.rows if not vec_is_zero(r)]
        sub, _ = submodule(m, rows)
        total += sub.dim
        out.extend(decompose(sub, seed))
    if total != m.dim:
        raise InternalInconsistency("idempotent images do not fill the module")
    return out


def module_invariants(m: ModuleRep):
    """Cheap isomorphism invariants (equal for isomorphic modules)."""
    top, _ = top_module(m)
    soc, _ = socle_submodule(m)
    rad, _ = radical_submodule(m)
    return (
        m.dim,
        m.vertex_dims,
        top.vertex_dims,
        soc.vertex_dims,
        rad.vertex_dims,
    )


def is_isomorphic(m: ModuleRep, n: ModuleRep, seed=None):
    """(verdict, witness): True with an invertible hom, False, or None.

    None means the decomposition fallback failed; it is never used to claim
    non-isomorphism silently.
    """
    if seed is None:
        seed = config.stream_seed(5077)
    if m.algebra is not n.algebra:
        raise InputError("isomorphism test needs modules over the same algebra")
    if m.dim != n.dim:
        return False, "dimension mismatch"
    if m.dim == 0:
        return True, None
    if module_invariants(m) != module_invariants(n):
        return False, "invariant mismatch"
    homs = hom_basis(m, n)
    if not homs:
        return False, "no homomorphisms"
    for f in homs:
        if inverse(f) is not None:
            return True, f
    field = m.algebra.field
    rng = random.Random(seed)
    for _ in range(200):
        coeffs = [
            field.normalize(rng.randrange(field.char))
            if field.char
            else field.normalize(rng.randint(-9, 9))
            for _ in homs
        ]
        acc = Matrix.zeros(field, m.dim, n.dim)
        for c, f in zip(coeffs, homs):
            if c:
                acc = acc.add(f.scale(c))
        if inverse(acc) is not None:
            return True, acc
    # exact route: Krull-Schmidt matching of indecomposable summands
    try:
        parts_m = decompose(m, seed)
        parts_n = decompose(n, seed)
    except DecompositionFailed as exc:
        return None, f"decomposition failed: {exc}"
    if len(parts_m) != len(parts_n):
        return False, "different number of indecomposable summands"
    used = [False] * len(parts_n)
    for x in parts_m:
        found = False
        for k, y in enumerate(parts_n):
            if used[k] or x.dim != y.dim:
                continue
            if _indecomposable_isomorphic(x, y):
                used[k] = True
                found = True
                break
        if not found:
            return False, "unmatched indecomposable summand"
    return True, "matched indecomposable summands"


def _indecomposable_isomorphic(x: ModuleRep, y: ModuleRep) -> bool:
    """For indecomposables: isomorphic iff some hom basis element inverts."""
    for f in hom_basis(x, y):
        if inverse(f) is not None:
            return True
    return False
