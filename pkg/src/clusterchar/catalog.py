"""Builders for the small representations used by the verification suites:
the Kronecker examples, the nilpotent loop modules, free modules over a
point, the indecomposable two-cycle module, and the type A intervals."""

from __future__ import annotations

from .quivers import Quiver, kronecker, linear_an, loop_quiver, make_quiver
from .reps import Relation, Representation, interval_module, make_rep


def one_vertex_quiver() -> Quiver:
    return make_quiver(1, [])


def free_module(d: int) -> Representation:
    """The d-dimensional module over the one-vertex, no-arrow quiver."""
    return make_rep(one_vertex_quiver(), (d,))


def kronecker_rep() -> Representation:
    """Dimension (2,2) over the Kronecker quiver, maps the identity and a
    Jordan block; its Grassmannian table has six nonempty entries."""
    return make_rep(
        kronecker(),
        (2, 2),
        {"a1": [[1, 0], [0, 1]], "a2": [[1, 1], [0, 1]]},
    )


def kronecker_nonisomorphic_pair() -> tuple:
    """Two non-isomorphic (1,1) Kronecker representations sharing the same
    F-polynomial 1 + y2 + y1*y2."""
    q = kronecker()
    v1 = make_rep(q, (1, 1), {"a1": [[0]], "a2": [[1]]})
    v2 = make_rep(q, (1, 1), {"a1": [[1]], "a2": [[0]]})
    return v1, v2


def loop_squared_relation() -> Relation:
    return Relation(paths=(("a1", "a1"),), coeffs=(1,))


def loop_module_1() -> Representation:
    """One-dimensional module over the loop with the loop acting as zero."""
    rep = make_rep(loop_quiver(), (1,), {"a1": [[0]]})
    return Representation(rep.quiver, rep.dims, rep.mats, relations=(loop_squared_relation(),))


def loop_module_2() -> Representation:
    """Two-dimensional module over the loop, nilpotent of index two."""
    rep = make_rep(loop_quiver(), (2,), {"a1": [[0, 0], [1, 0]]})
    return Representation(rep.quiver, rep.dims, rep.mats, relations=(loop_squared_relation(),))


def two_cycle_quiver() -> Quiver:
    return make_quiver(2, [(1, 2), (2, 1)])


def two_cycle_module() -> Representation:
    """Indecomposable (2,1) module over the two-cycle quiver whose
    F-polynomial 1 + y1 + y1*y2 + y1^2*y2 factors."""
    return make_rep(
        two_cycle_quiver(),
        (2, 1),
        {"a1": [[1, 0]], "a2": [[0], [1]]},
    )


def a_n_intervals(n: int) -> list:
    q = linear_an(n)
    return [interval_module(q, a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
