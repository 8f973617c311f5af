"""Quivers and bound quiver algebras.

Paths compose left to right: in the word ``a*b`` the arrow ``a`` is applied
first, which requires target(a) == source(b). Vertices are numbered 1..n.

`compile_bqa` turns a quiver with admissible relations into a structure
constant algebra whose basis is the set of path normal forms. It works level
by level: at level L it row-reduces the span of all relation products
truncated to length <= L, with columns ordered so that *longer* paths are
eliminated in favour of shorter ones, and stops at the first L where every
length-L path reduces to zero. For an admissible ideal this happens no later
than the nilpotency degree and the result is exactly the bound quiver
algebra. Generating sets that fail to be admissible either never stabilize
(detected: `NotAdmissible`) or force extra nilpotency on the quotient, so
callers must supply admissible relations.
"""

from __future__ import annotations

from .algebra import AssocAlgebra
from .errors import InputError, InvalidRelation, NotAdmissible
from .linalg import rref_sparse

_TRIVIAL_LABEL_PREFIX = "e"


class Arrow:
    __slots__ = ("label", "source", "target")

    def __init__(self, label, source, target):
        self.label = str(label)
        self.source = int(source)
        self.target = int(target)

    def __repr__(self):
        return f"Arrow({self.label!r}, {self.source} -> {self.target})"


class Quiver:
    """A finite quiver with vertices 1..n_vertices and labelled arrows."""

    def __init__(self, n_vertices, arrows):
        n = int(n_vertices)
        if n < 1:
            raise InputError("a quiver needs at least one vertex")
        self.n_vertices = n
        arrs = []
        seen = set()
        for spec in arrows:
            label, source, target = spec
            a = Arrow(label, source, target)
            if not a.label:
                raise InputError("arrow labels must be nonempty")
            if a.label in seen:
                raise InputError(f"duplicate arrow label {a.label!r}")
            if a.label.startswith(_TRIVIAL_LABEL_PREFIX) and a.label[1:].isdigit():
                raise InputError(
                    f"arrow label {a.label!r} collides with trivial path labels"
                )
            if "*" in a.label:
                raise InputError("arrow labels must not contain '*'")
            if not (1 <= a.source <= n and 1 <= a.target <= n):
                raise InputError(f"arrow {a.label!r} uses an unknown vertex")
            seen.add(a.label)
            arrs.append(a)
        self.arrows = tuple(arrs)
        self.arrow_index = {a.label: i for i, a in enumerate(self.arrows)}
        self.out_arrows = {v: [] for v in range(1, n + 1)}
        for i, a in enumerate(self.arrows):
            self.out_arrows[a.source].append(i)

    def __repr__(self):
        return f"Quiver({self.n_vertices} vertices, {len(self.arrows)} arrows)"


def _normalize_relations(field, quiver, relations):
    """Validate and normalize relations to [(source, target, terms)].

    terms is a tuple of (coefficient, arrow-index word); every word in a
    relation must be a composable path of length >= 2 and all words must be
    parallel. Zero relations are dropped.
    """
    out = []
    for rel_no, rel in enumerate(relations):
        merged = {}
        ends = None
        for coeff, word in rel:
            if len(word) < 2:
                raise InvalidRelation(
                    f"relation {rel_no}: words must have length at least 2"
                )
            idxs = []
            for lab in word:
                if lab not in quiver.arrow_index:
                    raise InvalidRelation(
                        f"relation {rel_no}: unknown arrow {lab!r}"
                    )
                idxs.append(quiver.arrow_index[lab])
            for a, b in zip(idxs, idxs[1:]):
                if quiver.arrows[a].target != quiver.arrows[b].source:
                    raise InvalidRelation(
                        f"relation {rel_no}: word {'*'.join(word)} is not composable"
                    )
            st = (quiver.arrows[idxs[0]].source, quiver.arrows[idxs[-1]].target)
            if ends is None:
                ends = st
            elif ends != st:
                raise InvalidRelation(
                    f"relation {rel_no}: words are not parallel"
                )
            key = tuple(idxs)
            c = field.normalize(coeff)
            prev = merged.get(key, field.zero)
            merged[key] = field.add(prev, c)
        terms = tuple(
            (c, w) for w, c in sorted(merged.items()) if c
        )
        if not terms:
            continue
        out.append((ends[0], ends[1], terms))
    return out


class _Path:
    __slots__ = ("source", "target", "arrows")

    def __init__(self, source, target, arrows):
        self.source = source
        self.target = target
        self.arrows = arrows

    def key(self):
        return (self.source, self.arrows)

    def __len__(self):
        return len(self.arrows)


def compile_bqa(field, quiver, relations, max_len=30, path_cap=200000):
    """Bound quiver algebra as an `AssocAlgebra` with path-label basis.

    The returned algebra carries `quiver_info` with the quiver, the arrow
    coordinate vectors and the stabilization level.
    """
    rels = _normalize_relations(field, quiver, relations)
    n = quiver.n_vertices
    arrows = quiver.arrows

    levels = [[_Path(v, v, ()) for v in range(1, n + 1)]]
    total = n

    def grow():
        nonlocal total
        nxt = []
        for p in levels[-1]:
            for ai in quiver.out_arrows[p.target]:
                nxt.append(_Path(p.source, arrows[ai].target, p.arrows + (ai,)))
        total += len(nxt)
        if total > path_cap:
            raise NotAdmissible(
                f"path count exceeded {path_cap} while compiling; "
                f"the relations are unlikely to be admissible"
            )
        levels.append(nxt)

    stable_level = None
    reduced_rows = []
    col_of = {}
    for level in range(1, max_len + 1):
        while len(levels) <= level:
            grow()
        if not levels[level]:
            # no paths of this length at all: vacuously stable
            stable_level = level
            reduced_rows, col_of = _reduce_ideal(field, quiver, rels, levels, level)
            break
        reduced_rows, col_of = _reduce_ideal(field, quiver, rels, levels, level)
        pivot_map = {min(row): row for row in reduced_rows}
        ok = True
        for p in levels[level]:
            col = col_of[p.key()]
            row = pivot_map.get(col)
            if row is None or len(row) != 1:
                ok = False
                break
        if ok:
            stable_level = level
            break
    if stable_level is None:
        raise NotAdmissible(
            f"no stabilization up to path length {max_len}; "
            f"the relation ideal does not appear to be admissible"
        )

    pivot_map = {min(row): row for row in reduced_rows}
    # basis: non-pivot paths, in (length, enumeration) order
    basis_paths = []
    basis_col = {}
    for level in range(0, stable_level + 1):
        if level >= len(levels):
            break
        for p in levels[level]:
            col = col_of[p.key()]
            if col not in pivot_map:
                basis_col[col] = len(basis_paths)
                basis_paths.append(p)
    dim = len(basis_paths)
    zero_vec = tuple(field.zero for _ in range(dim))

    def class_of(path):
        """Coordinates of a path's residue class over the basis."""
        if len(path.arrows) >= stable_level:
            return zero_vec
        col = col_of[path.key()]
        row = pivot_map.get(col)
        if row is None:
            out = [field.zero] * dim
            out[basis_col[col]] = field.one
            return tuple(out)
        out = [field.zero] * dim
        for c, x in row.items():
            if c == col:
                continue
            out[basis_col[c]] = field.neg(x)
        return tuple(out)

    tensor = []
    for p in basis_paths:
        row = []
        for q in basis_paths:
            if p.target != q.source:
                row.append(zero_vec)
            else:
                row.append(
                    class_of(_Path(p.source, q.target, p.arrows + q.arrows))
                )
        tensor.append(tuple(row))

    labels = []
    for p in basis_paths:
        if not p.arrows:
            labels.append(f"e{p.source}")
        else:
            labels.append("*".join(arrows[i].label for i in p.arrows))

    idempotents = []
    for v in range(1, n + 1):
        vec = [field.zero] * dim
        for i, p in enumerate(basis_paths):
            if not p.arrows and p.source == v:
                vec[i] = field.one
        idempotents.append(tuple(vec))
    unit = [field.zero] * dim
    for e in idempotents:
        unit = [field.add(a, b) for a, b in zip(unit, e)]

    algebra = AssocAlgebra(
        field,
        tuple(tensor),
        tuple(unit),
        labels=tuple(labels),
        idempotents=tuple(idempotents),
        check="auto",
    )
    arrow_vectors = {}
    for i, p in enumerate(basis_paths):
        if len(p.arrows) == 1:
            arrow_vectors[arrows[p.arrows[0]].label] = tuple(
                field.one if k == i else field.zero for k in range(dim)
            )
    algebra.quiver_info = {
        "quiver": quiver,
        "arrow_vectors": arrow_vectors,
        "level": stable_level,
    }
    return algebra


def _reduce_ideal(field, quiver, rels, levels, level):
    """RREF of the relation-product span truncated to paths of length <= level.

    Columns are ordered by descending (length, enumeration), so row reduction
    rewrites long paths in terms of shorter ones. Returns (reduced sparse
    rows, column index map keyed by path key).
    """
    col_of = {}
    ncols = 0
    for lv in range(level, -1, -1):
        for p in levels[lv]:
            col_of[p.key()] = ncols
            ncols += 1
    path_at = {}
    for lv in range(0, level + 1):
        for p in levels[lv]:
            path_at[p.key()] = p

    by_target = {}
    by_source = {}
    for lv in range(0, level + 1):
        for p in levels[lv]:
            by_target.setdefault(p.target, []).append(p)
            by_source.setdefault(p.source, []).append(p)

    rows = []
    for src, tgt, terms in rels:
        min_len = min(len(w) for _, w in terms)
        for left in by_target.get(src, ()):
            room_right = level - min_len - len(left.arrows)
            if room_right < 0:
                continue
            for right in by_source.get(tgt, ()):
                if len(right.arrows) > room_right:
                    continue
                row = {}
                for coeff, word in terms:
                    tot = len(left.arrows) + len(word) + len(right.arrows)
                    if tot > level:
                        continue
                    key = (left.source, left.arrows + word + right.arrows)
                    col = col_of[key]
                    prev = row.get(col, field.zero)
                    s = field.add(prev, coeff)
                    if s:
                        row[col] = s
                    elif col in row:
                        del row[col]
                if row:
                    rows.append(row)
    reduced, _ = rref_sparse(field, rows, ncols)
    return reduced, col_of
