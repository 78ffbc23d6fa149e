"""Exact sparse multivariate Laurent polynomials and univariate interpolation.

A Laurent polynomial in variables x1..xn is stored as a dict mapping exponent
tuples (one int per variable, negatives allowed) to nonzero integer
coefficients.  All arithmetic is exact; coefficients are Python ints, so
arbitrary precision comes for free.

Canonical term order, used for serialization and hashing: ascending total
degree, then descending lexicographic within a degree.  This reproduces the
conventional way these polynomials are written, e.g.

    x1^-1*x4 + 2*x2
    x1*x2 + x1*x4 + x3*x4 + x2*x3*x4
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DivisionByZero,
    InconsistentExtraPoint,
    InsufficientPoints,
    NonIntegerCoefficients,
    NotDivisible,
    VariableCountMismatch,
)

ExpVec = tuple  # tuple[int, ...], length = number of variables


def _term_key(exps: ExpVec):
    # ascending grade, then descending lex within the grade
    return (sum(exps), tuple(-e for e in exps))


class LaurentPoly:
    """Immutable exact Laurent polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[ExpVec, int] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise VariableCountMismatch(
                        f"exponent vector {exps} does not have length {nvars}"
                    )
                clean[exps] = coeff
        self.terms = clean
        self._hash = None

    # ------------------------------------------------------------ constructors

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPoly":
        """The variable x_i (1-based index)."""
        return cls.monomial(nvars, {i: 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Mapping[int, int] | Sequence[int], coeff: int = 1) -> "LaurentPoly":
        """Monomial from either a dense exponent sequence or a sparse
        {1-based index: exponent} mapping."""
        if isinstance(exps, Mapping):
            vec = [0] * nvars
            for i, e in exps.items():
                if not 1 <= i <= nvars:
                    raise VariableCountMismatch(f"variable index {i} out of range 1..{nvars}")
                vec[i - 1] = e
            exps = vec
        return cls(nvars, {tuple(exps): coeff})

    # ------------------------------------------------------------- predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_coefficient(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self) -> list:
        """Terms as (exponents, coefficient) in canonical order."""
        return [(e, self.terms[e]) for e in sorted(self.terms, key=_term_key)]

    # ------------------------------------------------------------- arithmetic

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise VariableCountMismatch(
                f"variable counts differ: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        self._check_compatible(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            out[exps] = out.get(exps, 0) + coeff
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check_compatible(other)
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            # only units (monomials with coefficient +-1) are invertible
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial")
            ((exps, coeff),) = self.terms.items()
            if coeff not in (1, -1):
                raise NotDivisible("negative power of a non-unit coefficient")
            return LaurentPoly(self.nvars, {tuple(e * k for e in exps): coeff if k % 2 else 1})
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self.sorted_terms())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self.to_str()})"

    # ----------------------------------------------------------- substitution

    def substitute(self, values: Sequence["LaurentPoly"]) -> "LaurentPoly":
        """Evaluate at values[i] in place of x_{i+1}.

        Defined for polynomials with nonnegative exponents only (negative
        exponents would require the substituted values to be invertible).
        """
        if len(values) != self.nvars:
            raise VariableCountMismatch(
                f"expected {self.nvars} substitution values, got {len(values)}"
            )
        if not values:
            raise VariableCountMismatch("cannot substitute into a 0-variable polynomial")
        m = values[0].nvars
        for v in values[1:]:
            if v.nvars != m:
                raise VariableCountMismatch("substitution values live in different rings")
        result = LaurentPoly.zero(m)
        for exps, coeff in self.terms.items():
            if any(e < 0 for e in exps):
                raise NotDivisible("substitution requires nonnegative exponents")
            term = LaurentPoly.constant(m, coeff)
            for v, e in zip(values, exps):
                if e:
                    term = term * v**e
            result = result + term
        return result

    # -------------------------------------------------------------- rendering

    def _term_str(self, exps: ExpVec, coeff: int, var: str) -> str:
        factors = []
        for i, e in enumerate(exps, start=1):
            if e == 0:
                continue
            factors.append(f"{var}{i}" if e == 1 else f"{var}{i}^{e}")
        mag = abs(coeff)
        if not factors:
            return str(mag)
        if mag != 1:
            factors.insert(0, str(mag))
        return "*".join(factors)

    def to_str(self, var: str = "x") -> str:
        """Canonical string, e.g. "x1^-1*x4 + 2*x2".  Parseable by parse()."""
        if not self.terms:
            return "0"
        parts = []
        for k, (exps, coeff) in enumerate(self.sorted_terms()):
            body = self._term_str(exps, coeff, var)
            if k == 0:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)

    def fraction_str(self, var: str = "x") -> str:
        """Display form with a common monomial denominator, e.g. "(x1 + x3)/x2".

        Equals to_str() when no variable occurs with a negative exponent."""
        if not self.terms:
            return "0"
        shift = [0] * self.nvars
        for exps in self.terms:
            for i, e in enumerate(exps):
                shift[i] = min(shift[i], e)
        if not any(shift):
            return self.to_str(var)
        num = self * LaurentPoly.monomial(self.nvars, [-s for s in shift])
        num_str = num.to_str(var)
        if len(num.terms) > 1:
            num_str = f"({num_str})"
        den_factors = []
        for i, s in enumerate(shift, start=1):
            if s < 0:
                den_factors.append(f"{var}{i}" if s == -1 else f"{var}{i}^{-s}")
        den_str = "*".join(den_factors)
        if len(den_factors) > 1:
            den_str = f"({den_str})"
        return f"{num_str}/{den_str}"


def parse_laurent(text: str, nvars: int, var: str = "x") -> LaurentPoly:
    """Parse the canonical string grammar produced by LaurentPoly.to_str()."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(nvars)
    # split into signed terms on " + " / " - "
    chunks: list[tuple[int, str]] = []
    sign = 1
    rest = text
    if rest.startswith("-"):
        sign = -1
        rest = rest[1:].strip()
    while True:
        plus = rest.find(" + ")
        minus = rest.find(" - ")
        cut = min(p for p in (plus, minus) if p >= 0) if (plus >= 0 or minus >= 0) else -1
        if cut < 0:
            chunks.append((sign, rest))
            break
        chunks.append((sign, rest[:cut]))
        sign = 1 if rest[cut : cut + 3] == " + " else -1
        rest = rest[cut + 3 :]
    terms: dict = {}
    for sgn, chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty term in {text!r}")
        coeff = sgn
        exps = [0] * nvars
        for factor in chunk.split("*"):
            factor = factor.strip()
            if factor.lstrip("-").isdigit():
                coeff *= int(factor)
                continue
            if not factor.startswith(var):
                raise ValueError(f"cannot parse factor {factor!r}")
            body = factor[len(var):]
            if "^" in body:
                idx_s, exp_s = body.split("^", 1)
                idx, exp = int(idx_s), int(exp_s)
            else:
                idx, exp = int(body), 1
            if not 1 <= idx <= nvars:
                raise VariableCountMismatch(f"variable index {idx} out of range 1..{nvars}")
            exps[idx - 1] += exp
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(nvars, terms)


# ------------------------------------------------------------ exact division


def _leading(terms: dict) -> ExpVec:
    # graded-lex maximum; a genuine well-order on nonnegative exponents,
    # which is what guarantees the division loop below terminates
    return max(terms, key=lambda e: (sum(e), e))


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return c with c * den == num exactly, else raise NotDivisible.

    The Laurent problem is shifted to an ordinary polynomial division: divide
    num and den by their componentwise-minimal monomials, then run iterated
    leading-term elimination.  If the shifted denominator divides the shifted
    numerator the quotient is automatically a polynomial, so the remainder
    check is sound and the loop terminates (leading terms strictly decrease
    in a well-ordered monomial order).
    """
    num._check_compatible(den)
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero(num.nvars)
    n = num.nvars

    def min_shift(p: LaurentPoly) -> tuple:
        mins = [min(e[i] for e in p.terms) for i in range(n)]
        return tuple(mins)

    num_shift = min_shift(num)
    den_shift = min_shift(den)
    nterms = {tuple(e - s for e, s in zip(exps, num_shift)): c for exps, c in num.terms.items()}
    dterms = {tuple(e - s for e, s in zip(exps, den_shift)): c for exps, c in den.terms.items()}

    lead_d = _leading(dterms)
    lc_d = dterms[lead_d]
    quot: dict = {}
    rem = dict(nterms)
    while rem:
        lead_r = _leading(rem)
        lc_r = rem[lead_r]
        t_exps = tuple(r - d for r, d in zip(lead_r, lead_d))
        if any(e < 0 for e in t_exps) or lc_r % lc_d != 0:
            raise NotDivisible(f"{num.to_str()} is not divisible by {den.to_str()}")
        t_coeff = lc_r // lc_d
        quot[t_exps] = quot.get(t_exps, 0) + t_coeff
        for exps, c in dterms.items():
            key = tuple(e + t for e, t in zip(exps, t_exps))
            v = rem.get(key, 0) - t_coeff * c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    back = tuple(a - b for a, b in zip(num_shift, den_shift))
    return LaurentPoly(n, {tuple(e + s for e, s in zip(exps, back)): c for exps, c in quot.items()})


# -------------------------------------------------- univariate interpolation


class UniPoly:
    """Univariate polynomial with exact rational coefficients (ascending)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                mono = "q" if d == 1 else f"q^{d}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    __repr__ = __str__


def interpolate(points: Sequence[tuple], degree_bound: int) -> UniPoly:
    """Interpolate a degree <= degree_bound polynomial through the first
    degree_bound+1 points, in exact rational arithmetic.

    Any extra points act as consistency checks (InconsistentExtraPoint on
    failure), and the result must have integer coefficients
    (NonIntegerCoefficients otherwise).  Both guards protect the assumption
    that the input counts come from a single counting polynomial.
    """
    need = degree_bound + 1
    if len(points) < need:
        raise InsufficientPoints(f"need {need} points, got {len(points)}")
    base = points[:need]
    xs = [Fraction(x) for x, _ in base]
    if len(set(xs)) != need:
        raise InsufficientPoints("interpolation points must have distinct q values")
    ys = [Fraction(y) for _, y in base]

    # Newton divided differences
    table = list(ys)
    for level in range(1, need):
        for i in range(need - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    # expand Newton form to coefficients
    coeffs = [Fraction(0)] * need
    for k in range(need - 1, -1, -1):
        # multiply running polynomial by (x - xs[k]) and add table[k]
        for i in range(need - 1, 0, -1):
            coeffs[i] = coeffs[i - 1] - xs[k] * coeffs[i]
        coeffs[0] = table[k] - xs[k] * coeffs[0]
    poly = UniPoly(coeffs)

    for x, y in points[need:]:
        if poly(Fraction(x)) != Fraction(y):
            raise InconsistentExtraPoint(
                f"point ({x}, {y}) does not lie on the interpolated curve {poly}"
            )
    if not poly.is_integral():
        raise NonIntegerCoefficients(f"interpolated polynomial {poly} is not integral")
    return poly
