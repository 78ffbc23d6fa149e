"""Indices, the cluster character, the value table over the cluster
category of a type A quiver, and mutation of cluster-tilting objects
through exchange relations.

The reference cluster-tilting object is the shifted path algebra, so the
exchange matrix is read off the quiver itself, and every interval module
keeps its own name under the projection to the module category.  The
normative pins are the index and character values of the linear A4
examples; see the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arquiver import (
    ARQuiver,
    IndecObject,
    cluster_indecomposables,
    knit,
)
from .errors import (
    CollisionDetected,
    IdentityFailed,
    NotDivisible,
    NotInTable,
    VariableCountMismatch,
)
from .fpoly import f_polynomial
from .laurent import LaurentPoly, exact_div
from .quivers import Quiver, b_matrix, mutate_quiver
from .reps import injective_copresentation, interval_module


def index_vector(quiver: Quiver, x: IndecObject) -> tuple:
    """Index of an object with respect to the shifted path algebra.

    Shifted projectives are the reference summands, so their index is a
    unit vector.  A module contributes a - b, where b and a are the
    multiplicities of its minimal injective copresentation."""
    n = quiver.n
    if not x.is_module:
        return tuple(1 if i == x.shifted else 0 for i in range(1, n + 1))
    m = interval_module(quiver, *x.interval)
    b, a = injective_copresentation(m)
    return tuple(ai - bi for ai, bi in zip(a, b))


def iota(e, b: tuple) -> tuple:
    """The linear map with x^(-iota(e)) = prod_i yhat_i^(e_i):
    iota(e)_j = -sum_i b[j][i] e[i]."""
    n = len(b)
    if len(e) != n:
        raise VariableCountMismatch(f"vector length {len(e)} != matrix size {n}")
    return tuple(-sum(b[j][i] * e[i] for i in range(n)) for j in range(n))


def yhat_values(quiver: Quiver) -> list:
    """yhat_i = prod_j x_j^(b_ji), one Laurent monomial per vertex."""
    b = b_matrix(quiver)
    n = quiver.n
    return [
        LaurentPoly.monomial(n, tuple(b[j][i] for j in range(n)))
        for i in range(n)
    ]


@lru_cache(maxsize=None)
def _cc_cached(quiver: Quiver, x: IndecObject) -> LaurentPoly:
    n = quiver.n
    if not x.is_module:
        return LaurentPoly.variable(n, x.shifted)
    m = interval_module(quiver, *x.interval)
    fp = f_polynomial(m)
    ind = index_vector(quiver, x)
    return LaurentPoly.monomial(n, ind) * fp.poly.substitute(yhat_values(quiver))


def cc(quiver: Quiver, x: IndecObject) -> LaurentPoly:
    """Cluster character of an indecomposable object:
    x^(index) times the F-polynomial of the module evaluated at yhat."""
    return _cc_cached(quiver, x)


def cc_of_summands(quiver: Quiver, objects) -> LaurentPoly:
    """Character of a direct sum, extended multiplicatively.
    The empty sum is the zero object, with character 1."""
    out = LaurentPoly.one(quiver.n)
    for x in objects:
        out = out * cc(quiver, x)
    return out


class CCTable:
    """Character values of every indecomposable of the cluster category,
    with the inverse lookup used by cluster-tilting mutation.  Injectivity
    of the character on these objects is verified at build time."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.objects = cluster_indecomposables(quiver)
        self.values: dict = {}
        self.by_string: dict = {}
        for x in self.objects:
            val = cc(quiver, x)
            key = val.to_str()
            if key in self.by_string:
                raise CollisionDetected(
                    f"{x.label()} and {self.by_string[key].label()} share the value {key}"
                )
            self.values[x] = val
            self.by_string[key] = x

    def value(self, x: IndecObject) -> LaurentPoly:
        return self.values[x]

    def lookup(self, value: LaurentPoly) -> IndecObject:
        key = value.to_str()
        if key not in self.by_string:
            raise NotInTable(f"no indecomposable has character {key}")
        return self.by_string[key]


@lru_cache(maxsize=None)
def cc_table(quiver: Quiver) -> CCTable:
    return CCTable(quiver)


# ---------------------------------------------------- cluster-tilting objects


@dataclass(frozen=True)
class CTObject:
    """Basic cluster-tilting object: one indecomposable summand per vertex
    of its Gabriel quiver (slot k corresponds to vertex k)."""

    summands: tuple
    quiver: Quiver

    def canonical(self) -> tuple:
        return tuple(sorted(x.label() for x in self.summands))

    def labels(self) -> list:
        return [x.label() for x in self.summands]


def initial_ct(quiver: Quiver) -> CTObject:
    return CTObject(
        tuple(IndecObject.shifted_projective(i) for i in range(1, quiver.n + 1)),
        quiver,
    )


def ct_mutate(r: CTObject, i: int, table: CCTable) -> CTObject:
    """Replace the i-th summand by its exchange partner.

    The partner is pinned by its character: the exchange relation determines
    CC(R_i^*) as (prod over arrows out of i + prod over arrows into i) / CC(R_i),
    the division is exact, and the character is injective on rigid
    indecomposables, so a table lookup identifies the new summand."""
    n = r.quiver.n
    numerator = LaurentPoly.one(n)
    for a in r.quiver.arrows:
        if a.source == i:
            numerator = numerator * table.value(r.summands[a.target - 1])
    second = LaurentPoly.one(n)
    for a in r.quiver.arrows:
        if a.target == i:
            second = second * table.value(r.summands[a.source - 1])
    new_value = exact_div(numerator + second, table.value(r.summands[i - 1]))
    new_summand = table.lookup(new_value)
    summands = list(r.summands)
    summands[i - 1] = new_summand
    return CTObject(tuple(summands), mutate_quiver(r.quiver, i))


def ct_enumerate(quiver: Quiver, table: CCTable) -> list:
    """BFS closure of the initial object under mutation at every vertex,
    one representative per summand set, sorted canonically."""
    start = initial_ct(quiver)
    seen = {start.canonical(): start}
    frontier = [start]
    while frontier:
        new = []
        for r in frontier:
            for i in range(1, quiver.n + 1):
                s = ct_mutate(r, i, table)
                key = s.canonical()
                if key not in seen:
                    seen[key] = s
                    new.append(s)
        frontier = new
    return [seen[k] for k in sorted(seen)]


# ------------------------------------------------------------- verifications


def verify_ar_multiplication(quiver: Quiver, ar: ARQuiver | None = None) -> list:
    """Check CC(tau X) * CC(X) = prod over middle CC + 1 for every mesh.

    Returns the list of checked identities as (x, tau_x, middle) triples;
    raises IdentityFailed with the counterexample on the first failure."""
    if ar is None:
        ar = knit(quiver)
    checked = []
    for tau_x, middle, x in ar.meshes():
        lhs = cc(quiver, IndecObject.module(*tau_x)) * cc(quiver, IndecObject.module(*x))
        rhs = cc_of_summands(quiver, [IndecObject.module(*m) for m in middle]) + 1
        if lhs != rhs:
            raise IdentityFailed(
                f"almost-split multiplication fails at {x}: {lhs.to_str()} != {rhs.to_str()}",
                witness=(tau_x, middle, x),
            )
        checked.append((tau_x, middle, x))
    return checked


def verify_exchange(r: CTObject, i: int, table: CCTable) -> bool:
    """Recompute the exchange identity
    CC(R_i) * CC(R_i^*) = prod_(i->j) CC(R_j) + prod_(h->i) CC(R_h)
    from scratch and compare as Laurent polynomials."""
    try:
        mutated = ct_mutate(r, i, table)
    except (NotInTable, NotDivisible):
        return False
    lhs = table.value(r.summands[i - 1]) * table.value(mutated.summands[i - 1])
    out_prod = LaurentPoly.one(r.quiver.n)
    in_prod = LaurentPoly.one(r.quiver.n)
    for a in r.quiver.arrows:
        if a.source == i:
            out_prod = out_prod * table.value(r.summands[a.target - 1])
        if a.target == i:
            in_prod = in_prod * table.value(r.summands[a.source - 1])
    return lhs == out_prod + in_prod
