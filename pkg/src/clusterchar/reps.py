"""Quiver representations with integer matrices.

A Representation is a representation of its own quiver: one matrix per
arrow, acting on column vectors, of shape dims[target] x dims[source].

Modules over the path algebra of a quiver Q are representations of the
opposite quiver (right modules compose against arrow direction), so the
module constructors standard_module and interval_module take Q and return
representations over Q.opposite().  The composition-series names used
throughout ("3/2/1" for the interval [1,3] on linear A4, socle at the
bottom) pin this convention; see the tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadInterval,
    InputError,
    NegativeSolution,
    NotAcyclic,
    NotPrime,
    NotTypeA,
    PathInvalid,
    QuiverMismatch,
    ShapeMismatch,
    VertexOutOfRange,
)
from .quivers import Quiver, count_paths, enumerate_paths

Matrix = tuple  # tuple of row tuples, entries int


def _as_matrix(rows, nrows: int, ncols: int) -> Matrix:
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    if len(rows) != nrows or any(len(row) != ncols for row in rows):
        raise ShapeMismatch(f"expected a {nrows}x{ncols} matrix, got {rows}")
    return rows


def zero_matrix(nrows: int, ncols: int) -> Matrix:
    return tuple((0,) * ncols for _ in range(nrows))


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ShapeMismatch("inner dimensions do not match")
    ncols = len(b[0]) if b else 0
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(ncols))
        for i in range(len(a))
    )


@dataclass(frozen=True)
class Relation:
    """Integer combination of parallel paths, each of length >= 2.

    Paths list their arrow ids in traversal order (first arrow first)."""

    paths: tuple
    coeffs: tuple

    def __post_init__(self):
        if len(self.paths) != len(self.coeffs):
            raise InputError("relation needs one coefficient per path")


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: tuple
    mats: tuple  # aligned with quiver.arrows
    modulus: int | None = None
    relations: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.dims) != self.quiver.n:
            raise ShapeMismatch("one dimension per vertex required")
        if any(d < 0 for d in self.dims):
            raise ShapeMismatch("dimensions must be nonnegative")
        if len(self.mats) != len(self.quiver.arrows):
            raise ShapeMismatch("one matrix per arrow required")
        for a, m in zip(self.quiver.arrows, self.mats):
            _as_matrix(m, self.dims[a.target - 1], self.dims[a.source - 1])

    def matrix(self, arrow_id: str) -> Matrix:
        for a, m in zip(self.quiver.arrows, self.mats):
            if a.id == arrow_id:
                return m
        raise InputError(f"no arrow with id {arrow_id!r}")

    def dim_total(self) -> int:
        return sum(self.dims)

    # ------------------------------------------------------------------- io

    def to_json(self) -> dict:
        doc = {
            "quiver": self.quiver.to_json(),
            "dims": list(self.dims),
            "matrices": {
                a.id: [list(row) for row in m]
                for a, m in zip(self.quiver.arrows, self.mats)
            },
        }
        if self.relations:
            doc["relations"] = [
                {"paths": [list(p) for p in r.paths], "coeffs": list(r.coeffs)}
                for r in self.relations
            ]
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "Representation":
        try:
            quiver = Quiver.from_json(doc["quiver"])
            dims = tuple(int(d) for d in doc["dims"])
            matdoc = doc.get("matrices", {})
            mats = []
            for a in quiver.arrows:
                rows = matdoc.get(a.id)
                if rows is None:
                    rows = zero_matrix(dims[a.target - 1], dims[a.source - 1])
                mats.append(_as_matrix(rows, dims[a.target - 1], dims[a.source - 1]))
            relations = tuple(
                Relation(
                    tuple(tuple(p) for p in r["paths"]),
                    tuple(int(c) for c in r["coeffs"]),
                )
                for r in doc.get("relations", [])
            )
        except ShapeMismatch:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed representation document: {exc}") from exc
        return cls(quiver, dims, tuple(mats), relations=relations)

    @classmethod
    def from_file(cls, path: str) -> "Representation":
        with open(path) as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"{path}: {exc}") from exc
        return cls.from_json(doc)


def make_rep(quiver: Quiver, dims: Sequence[int], matrices: dict | None = None) -> Representation:
    """Representation from {arrow id: rows}; missing arrows act as zero."""
    dims = tuple(dims)
    if len(dims) != quiver.n:
        raise ShapeMismatch("one dimension per vertex required")
    matrices = matrices or {}
    mats = []
    for a in quiver.arrows:
        rows = matrices.get(a.id)
        if rows is None:
            rows = zero_matrix(dims[a.target - 1], dims[a.source - 1])
        mats.append(_as_matrix(rows, dims[a.target - 1], dims[a.source - 1]))
    return Representation(quiver, dims, tuple(mats))


# ----------------------------------------------------------- basic operations


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def specialize_mod_p(v: Representation, p: int) -> Representation:
    """Reduce all matrix entries modulo a prime p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    mats = tuple(tuple(tuple(x % p for x in row) for row in m) for m in v.mats)
    return Representation(v.quiver, v.dims, mats, modulus=p)


def direct_sum(v: Representation, w: Representation) -> Representation:
    if v.quiver != w.quiver or v.modulus != w.modulus:
        raise QuiverMismatch("direct summands must live over the same quiver")
    dims = tuple(dv + dw for dv, dw in zip(v.dims, w.dims))
    mats = []
    for a, mv, mw in zip(v.quiver.arrows, v.mats, w.mats):
        s, t = a.source - 1, a.target - 1
        rows = []
        for i in range(v.dims[t]):
            rows.append(tuple(mv[i]) + (0,) * w.dims[s])
        for i in range(w.dims[t]):
            rows.append((0,) * v.dims[s] + tuple(mw[i]))
        mats.append(tuple(rows))
    return Representation(v.quiver, dims, tuple(mats), modulus=v.modulus)


def zero_rep(quiver: Quiver) -> Representation:
    return make_rep(quiver, (0,) * quiver.n)


def _path_matrix(v: Representation, arrow_ids: Sequence[str]) -> Matrix:
    """Matrix of a path given in traversal order (first arrow applied first)."""
    arrows = {a.id: a for a in v.quiver.arrows}
    prev_target = None
    for aid in arrow_ids:
        if aid not in arrows:
            raise PathInvalid(f"unknown arrow {aid!r}")
        a = arrows[aid]
        if prev_target is not None and a.source != prev_target:
            raise PathInvalid(f"arrows do not compose at {aid!r}")
        prev_target = a.target
    first = arrows[arrow_ids[0]]
    m = identity_matrix(v.dims[first.source - 1])
    for aid in arrow_ids:
        m = mat_mul(v.matrix(aid), m)
    return m


def check_relations(v: Representation, rels: Sequence[Relation]) -> bool:
    """True iff every relation evaluates to the zero matrix on v."""
    arrows = {a.id: a for a in v.quiver.arrows}
    for rel in rels:
        if not rel.paths:
            continue
        endpoints = set()
        for word in rel.paths:
            if len(word) < 2:
                raise PathInvalid("admissible relations use paths of length >= 2")
            for aid in word:
                if aid not in arrows:
                    raise PathInvalid(f"unknown arrow {aid!r}")
            endpoints.add((arrows[word[0]].source, arrows[word[-1]].target))
        if len(endpoints) != 1:
            raise PathInvalid("relation paths must share source and target")
        (s, t), = endpoints
        total = [[0] * v.dims[s - 1] for _ in range(v.dims[t - 1])]
        for word, coeff in zip(rel.paths, rel.coeffs):
            m = _path_matrix(v, word)
            for i in range(len(total)):
                for j in range(len(total[0]) if total else 0):
                    total[i][j] += coeff * m[i][j]
        mod = v.modulus
        for row in total:
            for x in row:
                if (x % mod if mod else x) != 0:
                    return False
    return True


# ------------------------------------------------------------ module builders


def standard_module(quiver: Quiver, kind: str, j: int) -> Representation:
    """Simple, projective or injective module at vertex j, as a
    representation of quiver.opposite() with the canonical path-basis maps.

    dim(P_j)_i = #paths i->j and dim(I_j)_i = #paths j->i, both counted in
    the given quiver.
    """
    if not 1 <= j <= quiver.n:
        raise VertexOutOfRange(f"vertex {j} out of range 1..{quiver.n}")
    if not quiver.is_acyclic():
        raise NotAcyclic("standard modules require an acyclic quiver")
    op = quiver.opposite()
    if kind == "simple":
        dims = tuple(1 if i == j else 0 for i in range(1, quiver.n + 1))
        return make_rep(op, dims)
    if kind not in ("projective", "injective"):
        raise InputError(f"unknown module kind {kind!r}")

    paths = enumerate_paths(quiver)
    if kind == "projective":
        # basis of (P_j)_i: paths i -> j; right action appends the arrow
        # at the source end
        basis = {i: [p for p in paths if p.source == i and p.target == j] for i in range(1, quiver.n + 1)}

        def image(path, arrow):  # arrow a: i -> k acts (P_j)_k -> (P_j)_i
            return type(path)(arrow.source, path.target, (arrow.id,) + path.arrow_ids)

    else:
        # basis of (I_j)_i: duals of paths j -> i; the action is the
        # transpose of prepending the arrow, which in the dual basis drops
        # the arrow from the path's end
        basis = {i: [p for p in paths if p.source == j and p.target == i] for i in range(1, quiver.n + 1)}

        def image(path, arrow):  # arrow a: i -> k acts (I_j)_k -> (I_j)_i
            if path.arrow_ids and path.arrow_ids[-1] == arrow.id:
                return type(path)(path.source, arrow.source, path.arrow_ids[:-1])
            return None

    dims = tuple(len(basis[i]) for i in range(1, quiver.n + 1))
    matrices = {}
    for a in quiver.arrows:
        src_basis = basis[a.target]   # over the opposite quiver the arrow
        dst_basis = basis[a.source]   # runs target -> source
        index = {p: r for r, p in enumerate(dst_basis)}
        rows = [[0] * len(src_basis) for _ in range(len(dst_basis))]
        for c, p in enumerate(src_basis):
            img = image(p, a)
            if img is not None and img in index:
                rows[index[img]][c] = 1
        matrices[a.id] = rows
    return make_rep(op, dims, matrices)


def underlying_path_graph(quiver: Quiver) -> bool:
    """True iff the underlying graph is the path 1 - 2 - ... - n."""
    if len(quiver.arrows) != quiver.n - 1:
        return False
    edges = sorted((min(a.source, a.target), max(a.source, a.target)) for a in quiver.arrows)
    return edges == [(i, i + 1) for i in range(1, quiver.n)]


def interval_module(quiver: Quiver, a: int, b: int) -> Representation:
    """The indecomposable supported on vertices a..b of a type A quiver,
    as a representation of quiver.opposite() with identity arrow maps.

    On linear A4 the interval [1,3] is the module written 3/2/1, with
    submodule chain 0 < [1,1] < [1,2] < [1,3].
    """
    if not underlying_path_graph(quiver):
        raise NotTypeA("interval modules require a type A quiver")
    if not (1 <= a <= b <= quiver.n):
        raise BadInterval(f"[{a},{b}] is not an interval in 1..{quiver.n}")
    op = quiver.opposite()
    dims = tuple(1 if a <= i <= b else 0 for i in range(1, quiver.n + 1))
    matrices = {}
    for arr in op.arrows:
        if a <= arr.source <= b and a <= arr.target <= b:
            matrices[arr.id] = [[1]]
    return make_rep(op, dims, matrices)


def interval_of(v: Representation) -> tuple | None:
    """Recover (a, b) if v has the dimension vector of an interval module."""
    support = [i + 1 for i, d in enumerate(v.dims) if d != 0]
    if not support:
        return None
    a, b = support[0], support[-1]
    if support != list(range(a, b + 1)) or any(v.dims[i - 1] != 1 for i in support):
        return None
    return (a, b)


def composition_series_str(a: int, b: int) -> str:
    """Top-down composition series label, e.g. [1,3] -> "3/2/1"."""
    return "/".join(str(k) for k in range(b, a - 1, -1))


# ------------------------------------------------- exact rational linear algebra


def _frac_rref(rows: list) -> tuple:
    """In-place reduced row echelon form over Fraction; returns pivot columns."""
    if not rows:
        return ()
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(pivots)


def frac_rank(matrix_rows: Sequence[Sequence]) -> int:
    rows = [[Fraction(x) for x in row] for row in matrix_rows if row]
    return len(_frac_rref(rows))


def solve_exact(a_rows: Sequence[Sequence[int]], b: Sequence) -> list:
    """Solve the square system A x = b over the rationals; A must be invertible."""
    n = len(a_rows)
    rows = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a_rows)]
    pivots = _frac_rref(rows)
    if list(pivots) != list(range(n)):
        raise ShapeMismatch("coefficient matrix is singular")
    return [rows[i][n] for i in range(n)]


# ------------------------------------------------------- socle / presentations


def socle(v: Representation) -> tuple:
    """Dimension vector of the largest semisimple subrepresentation:
    at each vertex, the intersection of the kernels of the outgoing maps."""
    if v.modulus is not None:
        raise ShapeMismatch("socle is computed over exact rationals")
    soc = []
    for i in range(1, v.quiver.n + 1):
        stacked = []
        for a, m in zip(v.quiver.arrows, v.mats):
            if a.source == i:
                stacked.extend(m)
        soc.append(v.dims[i - 1] - frac_rank(stacked))
    return tuple(soc)


def injective_dim_matrix(quiver: Quiver) -> tuple:
    """Columns are the dimension vectors of the indecomposable injectives of
    the representation category of this quiver: N[i][j] = #paths i->j."""
    return tuple(
        tuple(count_paths(quiver, i, j) for j in range(1, quiver.n + 1))
        for i in range(1, quiver.n + 1)
    )


def injective_copresentation(v: Representation) -> tuple:
    """Multiplicities (b, a) of the minimal copresentation
    0 -> V -> (+) I_j^{b_j} -> (+) I_j^{a_j} over a hereditary quiver.

    b is the socle; a solves sum_j a_j dim I_j = sum_j b_j dim I_j - dim V
    against the (unitriangular, hence invertible) matrix of injective
    dimension vectors."""
    if not v.quiver.is_acyclic():
        raise NotAcyclic("copresentations require a hereditary (acyclic) quiver")
    b = socle(v)
    n = v.quiver.n
    nmat = injective_dim_matrix(v.quiver)
    target = [
        sum(nmat[i][j] * b[j] for j in range(n)) - v.dims[i]
        for i in range(n)
    ]
    solution = solve_exact(nmat, target)
    a = []
    for x in solution:
        if x.denominator != 1 or x < 0:
            raise NegativeSolution(f"copresentation multiplicities {solution} are invalid")
        a.append(int(x))
    return b, tuple(a)


def dim_hom(v: Representation, w: Representation) -> int:
    """Dimension of Hom(v, w): solution space of the commuting-square system
    w_a f_s = f_t v_a over the rationals."""
    if v.quiver != w.quiver:
        raise QuiverMismatch("hom spaces require a common quiver")
    if v.modulus is not None or w.modulus is not None:
        raise ShapeMismatch("dim_hom is computed over exact rationals")
    n = v.quiver.n
    offsets = []
    total = 0
    for i in range(n):
        offsets.append(total)
        total += w.dims[i] * v.dims[i]
    if total == 0:
        return 0
    equations = []
    for a, mv, mw in zip(v.quiver.arrows, v.mats, w.mats):
        s, t = a.source - 1, a.target - 1
        # rows of (w_a f_s - f_t v_a), one equation per (row r, col c)
        for r in range(w.dims[t]):
            for c in range(v.dims[s]):
                eq = [Fraction(0)] * total
                for k in range(w.dims[s]):
                    eq[offsets[s] + k * v.dims[s] + c] += mw[r][k]
                for k in range(v.dims[t]):
                    eq[offsets[t] + r * v.dims[t] + k] -= mv[k][c]
                equations.append(eq)
    rank = len(_frac_rref(equations)) if equations else 0
    return total - rank
