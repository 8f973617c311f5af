"""Constructions of the example algebras used throughout the test battery.

Three parametric families plus a handful of fixed examples:

* centraliser algebras ``End_U(U + U/J^{p_1} + ... + U/J^{p_r})`` over the
  truncated polynomial ring ``U = K[x]/(x^n)``, indexed by a :class:`JordanType`;
* blocks of Schur-algebra type ``A_m`` (a two-way A_m quiver with commuting
  relations) and their partner blocks ``B_n = End_{A_{n+1}}(P(0) + ... + P(n-1))``;
* a five-dimensional commutative local algebra together with the endomorphism
  algebra of a four-summand generator-cogenerator over it.

Every constructor returns genuinely computed objects; expected dimensions are
asserted where a closed formula exists.  :func:`catalogue_example` and
:func:`catalogue` package the examples as records carrying the algebra, a
default stratification order, and construction metadata that downstream
verification uses to rebuild companion objects (for instance the syzygy-dual
of a centraliser algebra).  Default orders are starting points for
``stratification_check``; nothing downstream trusts them without validating.
"""

from __future__ import annotations

import re

from .errors import InputError, InternalInconsistency
from .fields import default_field
from .linalg import Matrix
from .quiver import Quiver, compile_bqa
from .algebra import AssocAlgebra
from .modules import (
    direct_sum,
    endomorphism_algebra,
    projective_module,
    quotient_module,
    radical_power_rowspace,
    regular_module,
    submodule,
)

__all__ = [
    "JordanType",
    "as_jordan_type",
    "centraliser_algebra",
    "centraliser_record",
    "centraliser_selfdual_criterion",
    "schur_block",
    "brauer_block",
    "commutative_base_algebra",
    "endo_of_local_generators",
    "catalogue_example",
    "example_ids",
    "catalogue",
]


# -- Jordan types -----------------------------------------------------------


class JordanType:
    """A nilpotency degree ``n`` with a set of proper chain lengths.

    ``JordanType(n, parts)`` describes the multiplicity-free module
    ``U + U/J^{p_1} + ... + U/J^{p_r}`` over ``U = K[x]/(x^n)``: ``parts`` must
    be strictly increasing with ``1 <= p_1`` and ``p_r <= n - 1``.  A Jordan
    partition with repeated block sizes normalizes to the same type (repeats
    do not change the basic endomorphism algebra).
    """

    __slots__ = ("n", "parts")

    def __init__(self, n, parts):
        n = int(n)
        parts = tuple(int(p) for p in parts)
        if n < 2:
            raise InputError(f"nilpotency degree must be at least 2, got {n}")
        if not parts:
            raise InputError("at least one proper chain length is required")
        if any(p < 1 or p > n - 1 for p in parts):
            raise InputError(f"chain lengths must lie in [1, {n - 1}], got {parts}")
        if tuple(sorted(set(parts))) != parts:
            raise InputError(f"chain lengths must be strictly increasing, got {parts}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *a):
        raise AttributeError("JordanType is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, JordanType)
            and other.n == self.n
            and other.parts == self.parts
        )

    def __hash__(self):
        return hash(("JordanType", self.n, self.parts))

    def __repr__(self):
        return f"JordanType({self.n}, {self.parts})"

    @property
    def lengths(self):
        """All chain lengths including the full one, increasing."""
        return self.parts + (self.n,)

    def syzygy_dual(self) -> "JordanType":
        """The type with every proper length ``p`` replaced by ``n - p``."""
        return JordanType(self.n, sorted(self.n - p for p in self.parts))

    @staticmethod
    def from_partition(blocks) -> "JordanType":
        """Normalize a Jordan partition (multiset of block sizes)."""
        sizes = sorted((int(b) for b in blocks), reverse=True)
        if not sizes or sizes[-1] < 1:
            raise InputError(f"not a partition: {blocks!r}")
        n = sizes[0]
        parts = sorted({s for s in sizes if s < n})
        if not parts:
            raise InputError(
                "the partition must contain at least two distinct block sizes"
            )
        return JordanType(n, parts)

    @staticmethod
    def from_matrix(field, rows) -> "JordanType":
        """Read off the Jordan partition of a nilpotent matrix."""
        mat = rows if isinstance(rows, Matrix) else Matrix(field, rows)
        if mat.nrows != mat.ncols:
            raise InputError("a nilpotent matrix must be square")
        d = mat.nrows
        # kernel-chain dimensions k_i = dim ker(x^i); blocks of size >= i
        # number k_i - k_{i-1}.
        kdims = [0]
        power = Matrix.identity(field, d)
        for _ in range(d):
            power = power.mul(mat)
            kdims.append(d - power.rank())
            if kdims[-1] == d:
                break
        if kdims[-1] != d:
            raise InputError("the matrix is not nilpotent")
        at_least = [kdims[i] - kdims[i - 1] for i in range(1, len(kdims))]
        blocks = []
        for size in range(len(at_least), 0, -1):
            exactly = at_least[size - 1] - (
                at_least[size] if size < len(at_least) else 0
            )
            blocks.extend([size] * exactly)
        return JordanType.from_partition(blocks)


def as_jordan_type(value) -> JordanType:
    """Coerce a JordanType, an (n, parts) pair, or a partition iterable."""
    if isinstance(value, JordanType):
        return value
    try:
        items = tuple(value)
    except TypeError:
        raise InputError(f"cannot interpret {value!r} as a Jordan type")
    if (
        len(items) == 2
        and isinstance(items[0], int)
        and not isinstance(items[1], int)
    ):
        return JordanType(items[0], items[1])
    return JordanType.from_partition(items)


# -- centraliser algebras ---------------------------------------------------


def truncated_polynomial(field, n: int) -> AssocAlgebra:
    """``K[x]/(x^n)`` as a one-vertex bound quiver algebra."""
    if n < 1:
        raise InputError(f"truncation degree must be positive, got {n}")
    q = Quiver(1, [("x", 1, 1)] if n > 1 else [])
    rels = [[(1, ["x"] * n)]] if n > 1 else []
    return compile_bqa(field, q, rels)


def chain_module(u: AssocAlgebra, k: int):
    """The cyclic module ``U/J^k`` over ``U = K[x]/(x^n)``."""
    reg = regular_module(u)
    if not 1 <= k <= reg.dim:
        raise InputError(f"chain length must lie in [1, {reg.dim}], got {k}")
    space = radical_power_rowspace(reg, k)
    chain, _ = quotient_module(reg, space.basis.rows)
    if chain.dim != k:
        raise InternalInconsistency(
            f"chain module has dimension {chain.dim}, expected {k}"
        )
    return chain


def centraliser_algebra(jordan_type, field=None):
    """``(U, summands, A)`` with ``A = End_U(U/J^{p_1} + ... + U/J^{p_r} + U)``.

    ``U = K[x]/(x^n)``.  Summands, and hence the vertices of ``A``, are
    numbered by increasing chain length with the full chain ``U`` last.  The
    dimension of ``A`` is checked against ``sum(min(s, t))`` over all pairs of
    chain lengths.
    """
    field = field if field is not None else default_field()
    jt = as_jordan_type(jordan_type)
    u = truncated_polynomial(field, jt.n)
    summands = [chain_module(u, p) for p in jt.parts]
    summands.append(regular_module(u))
    algebra = endomorphism_algebra(direct_sum(summands))
    expected = sum(min(s, t) for s in jt.lengths for t in jt.lengths)
    if algebra.dim != expected:
        raise InternalInconsistency(
            f"centraliser algebra has dimension {algebra.dim}, expected {expected}"
        )
    return u, summands, algebra


def centraliser_selfdual_criterion(jordan_type) -> bool:
    """Whether the proper chain lengths satisfy ``p_i = n - p_{r+1-i}``."""
    jt = as_jordan_type(jordan_type)
    return jt.syzygy_dual() == jt


def centraliser_record(jordan_type, field=None) -> dict:
    """Catalogue record for a centraliser algebra.

    The default stratification order lists vertices by decreasing chain
    length (the full chain first).
    """
    field = field if field is not None else default_field()
    jt = as_jordan_type(jordan_type)
    u, summands, algebra = centraliser_algebra(jt, field)
    order = tuple(reversed(range(algebra.n_vertices)))
    ident = f"cent-{jt.n}-" + "".join(str(p) for p in jt.parts)
    return {
        "id": ident,
        "kind": "cent",
        "field": field,
        "algebra": algebra,
        "order": order,
        "construction": {"kind": "cent", "n": jt.n, "parts": list(jt.parts)},
        "base": u,
        "summands": tuple(summands),
        "manifest": {
            "dimension": algebra.dim,
            "vertices": algebra.n_vertices,
            "selfdual_criterion": centraliser_selfdual_criterion(jt),
            "properly_stratified": True,
            "gendo_symmetric": True,
            "gorenstein_dimension": 2,
            "dominant_dimension": 2,
            "minimal_auslander_gorenstein": True,
        },
    }


# -- Schur-type blocks and their partners -----------------------------------


def schur_block(m: int, field=None) -> AssocAlgebra:
    """The two-way A_m quiver algebra with commuting relations.

    Vertices ``1..m`` with arrows ``a_i: i -> i+1`` and ``b_i: i+1 -> i``;
    relations (paths composing left to right) ``b_{m-1} a_{m-1}`` and, for
    each inner vertex ``i``, ``b_{i-1} a_{i-1} - a_i b_i``, ``a_{i-1} a_i``
    and ``b_i b_{i-1}``.  For ``m = 1`` this is the ground field.
    """
    field = field if field is not None else default_field()
    if m < 1:
        raise InputError(f"the block size must be positive, got {m}")
    if m == 1:
        return compile_bqa(field, Quiver(1, []), [])
    arrows = [(f"a{i}", i, i + 1) for i in range(1, m)]
    arrows += [(f"b{i}", i + 1, i) for i in range(1, m)]
    rels = [[(1, [f"b{m-1}", f"a{m-1}"])]]
    for i in range(2, m):
        rels.append([(1, [f"b{i-1}", f"a{i-1}"]), (-1, [f"a{i}", f"b{i}"])])
        rels.append([(1, [f"a{i-1}", f"a{i}"])])
        rels.append([(1, [f"b{i}", f"b{i-1}"])])
    return compile_bqa(field, Quiver(m, arrows), rels)


def brauer_block(n: int, field=None) -> AssocAlgebra:
    """``End(P(0) + ... + P(n-1))`` over the block :func:`schur_block(n+1)`."""
    field = field if field is not None else default_field()
    if n < 1:
        raise InputError(f"the block size must be positive, got {n}")
    big = schur_block(n + 1, field)
    projs = [projective_module(big, v) for v in range(n)]
    return endomorphism_algebra(direct_sum(projs))


# -- the commutative-base endomorphism example ------------------------------


def commutative_base_algebra(field) -> AssocAlgebra:
    """The five-dimensional local algebra ``K[x, y]/(x*y, x^2 - y^3)``.

    Basis ``1, x, y, y^2, z`` with ``z = x^2 = y^3``; the radical has basis
    ``x, y, y^2, z`` and cube ``(z)``.
    """
    one, zero = field.one, field.zero
    dim = 5

    def vec(k=None, coeff=None):
        row = [zero] * dim
        if k is not None:
            row[k] = one if coeff is None else coeff
        return tuple(row)

    names = ("1", "x", "y", "y2", "z")
    # nonzero products among the non-unit basis vectors
    prods = {(1, 1): 4, (2, 2): 3, (2, 3): 4, (3, 2): 4}
    tensor = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i == 0:
                row.append(vec(j))
            elif j == 0:
                row.append(vec(i))
            elif (i, j) in prods:
                row.append(vec(prods[(i, j)]))
            else:
                row.append(vec())
        tensor.append(tuple(row))
    return AssocAlgebra(
        field, tuple(tensor), vec(0), labels=names, idempotents=(vec(0),)
    )


def endo_of_local_generators(field=None) -> dict:
    """``End(zA + xA + yA + A)`` over :func:`commutative_base_algebra`.

    Summands are numbered by increasing dimension (1, 2, 3) with the free
    module (dimension 5) last.
    """
    field = field if field is not None else default_field()
    base = commutative_base_algebra(field)
    reg = regular_module(base)

    def principal(idx):
        row = [field.zero] * reg.dim
        row[idx] = field.one
        part, _ = submodule(reg, [tuple(row)], generated=True)
        return part

    z_part = principal(4)
    x_part = principal(1)
    y_part = principal(2)
    for part, expected in ((z_part, 1), (x_part, 2), (y_part, 3)):
        if part.dim != expected:
            raise InternalInconsistency(
                f"principal module has dimension {part.dim}, expected {expected}"
            )
    summands = (z_part, x_part, y_part, reg)
    algebra = endomorphism_algebra(direct_sum(list(summands)))
    return {
        "id": "gigs-kxy",
        "kind": "gigs",
        "field": field,
        "algebra": algebra,
        "order": (3, 2, 1, 0),
        "construction": {"kind": "gigs"},
        "base": base,
        "summands": summands,
        "manifest": {
            "dimension": algebra.dim,
            "vertices": 4,
            "properly_stratified": True,
            "gendo_symmetric": True,
            "gorenstein_dimension": 4,
            "dominant_dimension": 2,
            "global_dimension": "above-cutoff",
        },
    }


# -- fixed quiver examples --------------------------------------------------


def _radical_square_zero_record(field) -> dict:
    # vertex 1 carries a loop a with a^2 = 0; vertex 2 maps into it by b
    # with b*a = 0.
    q = Quiver(2, [("a", 1, 1), ("b", 2, 1)])
    algebra = compile_bqa(field, q, [[(1, ["a", "a"])], [(1, ["b", "a"])]])
    return {
        "id": "rad-square-zero-2v",
        "kind": "quiver",
        "field": field,
        "algebra": algebra,
        "order": (0, 1),
        "construction": {"kind": "quiver"},
        "manifest": {
            "dimension": algebra.dim,
            "vertices": 2,
            "properly_stratified": True,
            "gorenstein": False,
            "end_of_first_standard": {"dimension": 2, "frobenius": True},
        },
    }


def _recollement_record(field) -> dict:
    # a three-vertex two-way A_3 quiver whose middle projective has a
    # four-step Loewy series; the unique stratifying order is (0, 1, 2).
    q = Quiver(3, [("a1", 1, 2), ("a2", 2, 3), ("c1", 2, 1), ("c2", 3, 2)])
    rels = [
        [(1, ["c1", "a1", "a2"])],
        [(1, ["c2", "c1", "a1"])],
        [(1, ["c2", "a2"])],
        [(1, ["a2", "c2"]), (-1, ["c1", "a1", "c1", "a1"])],
    ]
    algebra = compile_bqa(field, q, rels)
    return {
        "id": "recollement-3v",
        "kind": "quiver",
        "field": field,
        "algebra": algebra,
        "order": (0, 1, 2),
        "construction": {"kind": "quiver"},
        "manifest": {
            "dimension": algebra.dim,
            "vertices": 3,
            "properly_stratified": True,
            "injective_dimension": 2,
            "infinite_id_proper_standard_position": 1,
        },
    }


def _schur_record(field, m: int) -> dict:
    algebra = schur_block(m, field)
    return {
        "id": f"schur-A{m}",
        "kind": "schur",
        "field": field,
        "algebra": algebra,
        "order": tuple(range(algebra.n_vertices)),
        "construction": {"kind": "schur", "m": m},
        "manifest": {
            "dimension": algebra.dim,
            "vertices": m,
            "properly_stratified": True,
            "global_dimension": 2 * (m - 1),
            "dominant_dimension": 2 * (m - 1) if m > 1 else "above-cutoff",
            "ringel_selfdual": True,
        },
    }


def _brauer_record(field, n: int) -> dict:
    algebra = brauer_block(n, field)
    return {
        "id": f"brauer-B{n}",
        "kind": "brauer",
        "field": field,
        "algebra": algebra,
        "order": None,
        "construction": {"kind": "brauer", "n": n},
        "manifest": {"dimension": algebra.dim, "vertices": n, "symmetric": True},
    }


# -- the catalogue ----------------------------------------------------------

_FIXED_EXAMPLES = {
    "rad-square-zero-2v": _radical_square_zero_record,
    "recollement-3v": _recollement_record,
    "gigs-kxy": endo_of_local_generators,
}

_SCHUR_ID = re.compile(r"^schur-A(\d+)$")
_BRAUER_ID = re.compile(r"^brauer-B(\d+)$")
_CENT_ID = re.compile(r"^cent-(\d+)-(\d+)$")


def catalogue_example(example_id: str, field=None) -> dict:
    """Build a named example record.

    Recognized identifiers: ``rad-square-zero-2v``, ``recollement-3v``,
    ``gigs-kxy``, ``cent-<n>-<digits>`` (one digit per chain length, e.g.
    ``cent-3-1`` or ``cent-4-13``), ``schur-A<m>`` and ``brauer-B<n>``.
    """
    field = field if field is not None else default_field()
    if example_id in _FIXED_EXAMPLES:
        return _FIXED_EXAMPLES[example_id](field)
    m = _SCHUR_ID.match(example_id)
    if m:
        return _schur_record(field, int(m.group(1)))
    m = _BRAUER_ID.match(example_id)
    if m:
        return _brauer_record(field, int(m.group(1)))
    m = _CENT_ID.match(example_id)
    if m:
        n = int(m.group(1))
        parts = [int(c) for c in m.group(2)]
        return centraliser_record(JordanType(n, parts), field)
    raise InputError(f"unknown example id {example_id!r}")


def example_ids() -> tuple:
    """Identifiers of the catalogue examples, in catalogue order."""
    return (
        "rad-square-zero-2v",
        "recollement-3v",
        "cent-2-1",
        "cent-3-1",
        "cent-4-13",
        "gigs-kxy",
        "schur-A2",
        "schur-A3",
        "brauer-B1",
        "brauer-B2",
    )


def catalogue(field=None) -> list:
    """All catalogue example records."""
    field = field if field is not None else default_field()
    return [catalogue_example(ident, field) for ident in example_ids()]
