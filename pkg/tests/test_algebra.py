import pytest

from stratikit.algebra import AssocAlgebra, lift_primitive_idempotents
from stratikit.errors import InputError
from stratikit.fields import GF, QQ

from test_quiver import (
    nilpotent_centralizer_small,
    schur_like_three,
    three_vertex_recollement,
    truncated_polynomial_algebra,
    two_vertex_radical_square_zero,
)


def group_algebra_cyclic(field, n):
    """K[C_n]: basis g^0..g^{n-1}, g^i g^j = g^{i+j mod n}."""
    dim = n
    tensor = []
    for i in range(dim):
        row = []
        for j in range(dim):
            vec = [field.zero] * dim
            vec[(i + j) % n] = field.one
            row.append(tuple(vec))
        tensor.append(tuple(row))
    unit = tuple(field.one if k == 0 else field.zero for k in range(dim))
    return AssocAlgebra(field, tensor, unit, labels=[f"g{i}" for i in range(dim)])


def matrix_algebra(field, n):
    """M_n(K) with basis E_{ij}, E_{ij} E_{kl} = delta_{jk} E_{il}."""
    idx = [(i, j) for i in range(n) for j in range(n)]
    pos = {ij: k for k, ij in enumerate(idx)}
    dim = n * n
    tensor = []
    for (i, j) in idx:
        row = []
        for (k, l) in idx:
            vec = [field.zero] * dim
            if j == k:
                vec[pos[(i, l)]] = field.one
            row.append(tuple(vec))
        tensor.append(tuple(row))
    unit = [field.zero] * dim
    for i in range(n):
        unit[pos[(i, i)]] = field.one
    return AssocAlgebra(
        field, tensor, tuple(unit), labels=[f"E{i}{j}" for i, j in idx]
    )


def test_non_associative_tensor_rejected():
    f = QQ
    # basis 1, x, y with x*x = y, x*y = 0 but y*x = x:
    # (x x) x = y x = x while x (x x) = x y = 0
    tensor = [
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
        [(0, 1, 0), (0, 0, 1), (0, 0, 0)],
        [(0, 0, 1), (1, 0, 0), (0, 0, 0)],
    ]
    with pytest.raises(InputError):
        AssocAlgebra(f, tensor, (1, 0, 0))


def test_radical_of_truncated_polynomial_over_q():
    a = truncated_polynomial_algebra(QQ, 3)
    rad = a.radical_rowspace()
    assert rad.dim == 2
    x = a.quiver_info["arrow_vectors"]["x"]
    assert rad.contains(x)
    assert rad.contains(a.mult(x, x))
    assert not rad.contains(a.unit)


def test_radical_group_algebra_modular():
    # F_2[C_2]: radical is spanned by 1 + g
    a = group_algebra_cyclic(GF(2), 2)
    rad = a.radical_rowspace()
    assert rad.dim == 1
    assert rad.contains((1, 1))
    # F_3[C_3]: the augmentation ideal, dimension 2
    b = group_algebra_cyclic(GF(3), 3)
    assert b.radical_dim == 2
    assert b.radical_rowspace().contains((1, 2, 0))  # g - 1
    # F_2[C_3] is semisimple (order coprime to characteristic)
    c = group_algebra_cyclic(GF(2), 3)
    assert c.radical_dim == 0
    # char 0: always semisimple
    d = group_algebra_cyclic(QQ, 4)
    assert d.radical_dim == 0


def test_radical_matrix_algebra_is_zero():
    assert matrix_algebra(GF(2), 2).radical_dim == 0
    assert matrix_algebra(GF(3), 2).radical_dim == 0
    assert matrix_algebra(QQ, 2).radical_dim == 0


@pytest.mark.parametrize("field", [QQ, GF(32003), GF(2)])
def test_bqa_radical_is_arrow_ideal(field):
    a = two_vertex_radical_square_zero(field)
    rad = a.radical_rowspace()
    assert rad.dim == a.dim - a.n_vertices
    for lab, vec in a.quiver_info["arrow_vectors"].items():
        assert rad.contains(vec), lab


def test_bqa_radical_positive_length_paths():
    a = nilpotent_centralizer_small(QQ)
    rad = a.radical_rowspace()
    assert rad.dim == 4
    for i, lab in enumerate(a.labels):
        vec = tuple(QQ.one if k == i else QQ.zero for k in range(a.dim))
        if lab.startswith("e") and lab[1:].isdigit():
            assert not rad.contains(vec)
        else:
            assert rad.contains(vec)


def test_basic_split_and_cartan():
    a = schur_like_three(QQ)
    assert a.is_basic_split()
    assert a.cartan_matrix() == ((2, 1, 0), (1, 2, 1), (0, 1, 1))
    m = matrix_algebra(QQ, 2)
    assert m.idempotents is None
    assert not m.is_basic_split()


def test_split_coords_roundtrip():
    a = three_vertex_recollement(QQ)
    labels, vecs, _ = a.split_basis_vectors()
    assert len(labels) == a.dim
    x = tuple(QQ.normalize(i % 3 - 1) for i in range(a.dim))
    coords = a.split_coords(x)
    rebuilt = tuple(QQ.zero for _ in range(a.dim))
    from stratikit.linalg import vec_add, vec_scale

    for c, v in zip(coords, vecs):
        rebuilt = vec_add(QQ, rebuilt, vec_scale(QQ, c, v))
    assert rebuilt == x


def test_radical_generators_are_homogeneous_and_generate():
    a = nilpotent_centralizer_small(QQ)
    gens = a.radical_generators()
    # rad/rad^2 is spanned by the three arrows: b3^2 is a product
    assert len(gens) == 3
    rad = a.radical_rowspace()
    for _, s, t, vec in gens:
        assert rad.contains(vec)
        left = a.mult(a.idempotents[s], vec)
        piece = a.mult(left, a.idempotents[t])
        assert piece == vec


def test_opposite_involution_and_blocks():
    a = two_vertex_radical_square_zero(QQ)
    op = a.opposite()
    assert op.opposite() is a
    # Cartan matrix of the opposite is the transpose
    assert a.cartan_matrix() == ((2, 0), (1, 1))
    assert op.cartan_matrix() == ((2, 1), (0, 1))
    b = nilpotent_centralizer_small(QQ)
    bop = b.opposite()
    x = b.quiver_info["arrow_vectors"]["b1"]
    y = b.quiver_info["arrow_vectors"]["b3"]
    assert bop.mult(x, y) == b.mult(y, x)
    assert bop.mult(y, x) == b.mult(x, y)


def test_corner_algebra_loop_block():
    a = nilpotent_centralizer_small(QQ)
    corner, coords = a.corner_algebra([1])
    assert corner.dim == 3
    assert corner.is_commutative()
    assert corner.radical_dim == 2
    assert len(coords) == 3


def test_quotient_by_trace_ideal():
    a = two_vertex_radical_square_zero(QQ)
    # ideal A e2 A is spanned by e2 and the arrow b
    rows = []
    for i, lab in enumerate(a.labels):
        if lab in ("e2", "b"):
            rows.append(
                tuple(QQ.one if k == i else QQ.zero for k in range(a.dim))
            )
    quotient, project, surviving = a.quotient_by_ideal(rows)
    assert surviving == (0,)
    assert quotient.dim == 2
    assert quotient.radical_dim == 1
    img = project(a.unit)
    assert img == quotient.unit


def test_quotient_rejects_non_ideal():
    a = two_vertex_radical_square_zero(QQ)
    # the span of e2 alone is not an ideal (e2 * b = b escapes)
    rows = [
        tuple(
            QQ.one if a.labels[k] == "e2" else QQ.zero for k in range(a.dim)
        )
    ]
    with pytest.raises(InputError):
        a.quotient_by_ideal(rows)


def test_element_minimal_polynomial():
    a = truncated_polynomial_algebra(QQ, 4)
    x = a.quiver_info["arrow_vectors"]["x"]
    assert a.element_minimal_polynomial(x) == [QQ.zero] * 4 + [QQ.one]
    assert a.element_minimal_polynomial(a.unit) == [QQ.normalize(-1), QQ.one]


def test_lift_idempotents_on_stripped_bqa():
    base = two_vertex_radical_square_zero(GF(32003))
    stripped = AssocAlgebra(
        base.field, base.tensor, base.unit, labels=base.labels
    )
    idems = lift_primitive_idempotents(stripped)
    assert len(idems) == 2
    total = tuple(GF(32003).zero for _ in range(base.dim))
    from stratikit.linalg import vec_add

    for e in idems:
        assert stripped.mult(e, e) == e
        total = vec_add(base.field, total, e)
    assert total == base.unit


def test_lift_idempotents_matrix_algebra():
    m = matrix_algebra(GF(2), 2)
    idems = lift_primitive_idempotents(m)
    assert len(idems) == 2
    e, f = idems
    assert m.mult(e, f) == tuple(GF(2).zero for _ in range(4))
    assert m.mult(e, e) == e and m.mult(f, f) == f


def test_lift_idempotents_local_algebra():
    a = group_algebra_cyclic(GF(2), 2)  # local: unique primitive idempotent 1
    idems = lift_primitive_idempotents(a)
    assert idems == (a.unit,)


def test_lift_idempotents_through_radical_mixing():
    # K[x]/(x^2) x K: 3-dim commutative, two primitive idempotents
    f = QQ
    # basis: u (unit of first factor), x, w (unit of second factor)
    tensor = [
        [(1, 0, 0), (0, 1, 0), (0, 0, 0)],
        [(0, 1, 0), (0, 0, 0), (0, 0, 0)],
        [(0, 0, 0), (0, 0, 0), (0, 0, 1)],
    ]
    a = AssocAlgebra(f, tensor, (1, 0, 1), labels=["u", "x", "w"])
    assert a.radical_dim == 1
    idems = lift_primitive_idempotents(a)
    assert len(idems) == 2
    assert set(idems) == {(f.one, f.zero, f.zero), (f.zero, f.zero, f.one)}


def test_commutativity_flag():
    assert truncated_polynomial_algebra(QQ, 3).is_commutative()
    assert not nilpotent_centralizer_small(QQ).is_commutative()
