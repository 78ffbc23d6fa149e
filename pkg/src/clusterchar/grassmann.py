"""Submodule Grassmannians: subspace enumeration over prime fields,
subrepresentation counting, and Euler characteristics via counting-polynomial
interpolation.

The Euler characteristic of Gr_e(V) is recovered as N(1), where N(q) is the
polynomial interpolated through exact point counts over the first few prime
fields.  The degree bound is dim prod_i Gr_{e_i}(V_i) = sum_i e_i(d_i - e_i);
counts are sampled at degree+2 primes so that one extra point checks
consistency.  Counts that no integer polynomial explains raise
NotPolynomialCount instead of guessing.

Counting is delegated to a kernel (compiled Cython when available, pure
Python otherwise) that enumerates reduced row-echelon bases vertex by vertex
and prunes on arrow stability.  Two exact shortcuts keep large examples
feasible without touching exhaustiveness:

* vertices with no incident arrows contribute a plain Gaussian-binomial
  factor, and
* sink vertices (all incident arrows incoming) are counted by completion:
  once the sources are fixed, the admissible subspaces at the sink are those
  containing the span U of the images, of which there are
  [d - dim U choose e - dim U]_q.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from . import _countpure
from .errors import (
    BadDims,
    NotPolynomialCount,
    NotPrime,
    InconsistentExtraPoint,
    NonIntegerCoefficients,
)
from .laurent import interpolate
from .reps import Representation, is_prime, specialize_mod_p

try:
    from . import _countcore
except ImportError:  # compiled kernel not built; fall back
    _countcore = None

_backend = _countcore if _countcore is not None else _countpure


def backend_name() -> str:
    return _backend.BACKEND_NAME


def available_backends() -> dict:
    out = {"pure": _countpure}
    if _countcore is not None:
        out["compiled"] = _countcore
    return out


def set_backend(name: str) -> None:
    """Select the counting kernel ("pure" or "compiled"); used by the
    benchmark and the backend-agreement tests."""
    global _backend
    backends = available_backends()
    if name not in backends:
        raise ValueError(f"unknown backend {name!r}; have {sorted(backends)}")
    _backend = backends[name]


# ----------------------------------------------------------------- subspaces


def first_primes(k: int) -> list:
    primes = []
    p = 2
    while len(primes) < k:
        if is_prime(p):
            primes.append(p)
        p += 1
    return primes


def gaussian_binomial(d: int, e: int, q: int) -> int:
    """Closed-form number of e-dimensional subspaces of F_q^d."""
    if e < 0 or e > d:
        return 0
    num = den = 1
    for i in range(e):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def count_subspaces(d: int, e: int, q: int) -> int:
    """Number of e-dimensional subspaces of F_q^d, by enumerating the
    row-echelon pivot patterns and summing q^(#free entries) per pattern."""
    if d < 0 or e < 0 or e > d:
        raise BadDims(f"no {e}-dimensional subspaces of a {d}-dimensional space")
    total = 0
    for pivots in combinations(range(d), e):
        free = sum(d - p - 1 - (e - 1 - i) for i, p in enumerate(pivots))
        total += q**free
    return total


class SubspaceIter:
    """Iterator over all e-dimensional subspaces of F_q^d, each produced
    exactly once as an immutable reduced row-echelon basis."""

    def __init__(self, d: int, e: int, q: int):
        if d < 0 or e < 0 or e > d:
            raise BadDims(f"no {e}-dimensional subspaces of a {d}-dimensional space")
        if not is_prime(q):
            raise NotPrime(f"{q} is not prime")
        self.d, self.e, self.q = d, e, q

    def __iter__(self):
        for rows, _pivots in _countpure.iter_subspaces_raw(self.d, self.e, self.q):
            yield tuple(tuple(row) for row in rows)


# ------------------------------------------------------------ subrep counting


def _make_plan(v: Representation, e: tuple, q: int):
    """Split vertices into isolated / sink / enumerated and lay out the
    kernel arguments.  Matrices are flattened row-major, reduced mod q."""
    n = v.quiver.n
    arrows = [(a.source - 1, a.target - 1) for a in v.quiver.arrows]
    incident = [[] for _ in range(n)]
    for idx, (s, t) in enumerate(arrows):
        incident[s].append(idx)
        if t != s:
            incident[t].append(idx)

    isolated, sinks, enum = [], [], []
    for vert in range(n):
        if not incident[vert]:
            isolated.append(vert)
        elif all(arrows[idx][1] == vert and arrows[idx][0] != vert for idx in incident[vert]):
            sinks.append(vert)
        else:
            enum.append(vert)

    iso_factor = 1
    for vert in isolated:
        iso_factor *= count_subspaces(v.dims[vert], e[vert], q)

    pos_of = {vert: i for i, vert in enumerate(enum)}
    mats_flat = []
    for (s, t), m in zip(arrows, v.mats):
        mats_flat.append([x % q for row in m for x in row])

    checks = [[] for _ in enum]
    sink_specs = []
    for idx, (s, t) in enumerate(arrows):
        if s in pos_of and t in pos_of:
            pos = max(pos_of[s], pos_of[t])
            mat_rows = [mats_flat[idx][i * v.dims[s] : (i + 1) * v.dims[s]] for i in range(v.dims[t])]
            checks[pos].append((mat_rows, pos_of[s], pos_of[t]))
    for vert in sinks:
        incoming = []
        for idx in incident[vert]:
            s, t = arrows[idx]
            mat_rows = [mats_flat[idx][i * v.dims[s] : (i + 1) * v.dims[s]] for i in range(v.dims[t])]
            incoming.append((mat_rows, pos_of[s]))
        d_sink = v.dims[vert]
        table = [gaussian_binomial(d_sink - u, e[vert] - u, q) for u in range(d_sink + 1)]
        sink_specs.append((d_sink, incoming, table))

    enum_dims = [v.dims[vert] for vert in enum]
    enum_subdims = [e[vert] for vert in enum]
    return iso_factor, enum_dims, enum_subdims, checks, sink_specs


def count_subreps(v: Representation, e, q: int) -> int:
    """Exact number of subrepresentation tuples (W_i) of v over F_q with
    dim W_i = e_i: subspaces at every vertex with V_a(W_s) contained in W_t
    for every arrow."""
    e = tuple(e)
    if len(e) != v.quiver.n or any(x < 0 or x > d for x, d in zip(e, v.dims)):
        raise BadDims(f"subdimension vector {e} does not fit dims {v.dims}")
    if v.modulus is None:
        v = specialize_mod_p(v, q)
    elif v.modulus != q:
        raise NotPrime(f"representation is reduced mod {v.modulus}, not {q}")
    elif not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    iso_factor, enum_dims, enum_subdims, checks, sink_specs = _make_plan(v, e, q)
    if iso_factor == 0:
        return 0
    stable = _backend.count_tuples(q, enum_dims, enum_subdims, checks, sink_specs)
    return iso_factor * stable


# ------------------------------------------------------- Euler characteristic


def euler_char(v: Representation, e) -> int:
    """Euler characteristic of the submodule Grassmannian Gr_e(v)."""
    e = tuple(e)
    if len(e) != v.quiver.n or any(x < 0 or x > d for x, d in zip(e, v.dims)):
        raise BadDims(f"subdimension vector {e} does not fit dims {v.dims}")
    degree = sum(x * (d - x) for x, d in zip(e, v.dims))
    points = []
    for q in first_primes(degree + 2):
        points.append((q, count_subreps(v, e, q)))
    try:
        poly = interpolate(points, degree)
    except (InconsistentExtraPoint, NonIntegerCoefficients) as exc:
        raise NotPolynomialCount(str(exc)) from exc
    value = poly(1)
    return int(value)


@lru_cache(maxsize=None)
def grass_table(v: Representation) -> dict:
    """euler_char for every subdimension vector e <= dim v, zeros included,
    keyed in lexicographic order of e."""
    table = {}
    for e in product(*(range(d + 1) for d in v.dims)):
        table[e] = euler_char(v, e)
    return table
