"""F-polynomials of representations and their structural identities.

F_V(y) = sum over e of chi(Gr_e(V)) y^e, a polynomial in one y-variable per
vertex.  Two identities are checked at desk scale: multiplicativity over
direct sums, and the almost-split relation F_tauV * F_V = F_E + y^(dim V).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import QuiverMismatch, ShapeMismatch
from .grassmann import grass_table
from .laurent import LaurentPoly
from .reps import Representation, direct_sum


@dataclass(frozen=True)
class FPolynomial:
    """F-polynomial together with the dimension vector it came from.

    Always has constant term 1 and leading term y^dims with coefficient 1
    (the empty and full subrepresentations are single points)."""

    poly: LaurentPoly
    dims: tuple

    def __post_init__(self):
        if self.poly.constant_coefficient() != 1:
            raise ShapeMismatch("F-polynomial must have constant term 1")
        if self.poly.coefficient(self.dims) != 1:
            raise ShapeMismatch("F-polynomial must have leading coefficient 1 at dim V")
        if any(e < 0 for exps in self.poly.terms for e in exps):
            raise ShapeMismatch("F-polynomial exponents must be nonnegative")

    def to_str(self) -> str:
        return self.poly.to_str(var="y")


@lru_cache(maxsize=None)
def f_polynomial(v: Representation) -> FPolynomial:
    """Generating function of Euler characteristics of the submodule
    Grassmannians of v."""
    table = grass_table(v)
    terms = {e: chi for e, chi in table.items() if chi != 0}
    return FPolynomial(LaurentPoly(v.quiver.n, terms), tuple(v.dims))


def check_product(v: Representation, w: Representation) -> bool:
    """True iff F_v * F_w equals the independently computed F_(v + w)."""
    if v.quiver != w.quiver:
        raise QuiverMismatch("direct-sum identity needs a common quiver")
    lhs = f_polynomial(v).poly * f_polynomial(w).poly
    rhs = f_polynomial(direct_sum(v, w)).poly
    return lhs == rhs


def check_ar_identity(tau_v: Representation, middle: Representation, v: Representation) -> bool:
    """True iff F_tauV * F_V = F_E + y^(dim V) holds structurally.

    The caller supplies the almost-split sequence 0 -> tauV -> E -> V -> 0;
    for type A these come from the knitted AR quiver."""
    lhs = f_polynomial(tau_v).poly * f_polynomial(v).poly
    n = v.quiver.n
    rhs = f_polynomial(middle).poly + LaurentPoly.monomial(n, tuple(v.dims))
    return lhs == rhs
