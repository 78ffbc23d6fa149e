"""Combinatorial model of the module category and the cluster category in
type A: AR-quiver knitting, the translation tau, almost-split sequences,
the suspension on objects, and the list of indecomposables.

Indecomposables of the module category are interval modules [a, b]; the
cluster category adds one shifted projective T_i per vertex.  Knitting
starts from the projectives and repeatedly completes meshes using dimension
additivity dim tau^-1(X) = sum(middle dims) - dim X, stopping at injectives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadInterval, IsProjective, NotTypeA
from .quivers import Quiver, count_paths
from .reps import (
    Representation,
    composition_series_str,
    interval_module,
    solve_exact,
    underlying_path_graph,
)

Interval = tuple  # (a, b) with 1 <= a <= b <= n


@dataclass(frozen=True)
class IndecObject:
    """Indecomposable object of the cluster category of a type A quiver:
    either an interval module or a shifted projective summand T_i."""

    interval: Interval | None = None
    shifted: int | None = None

    def __post_init__(self):
        if (self.interval is None) == (self.shifted is None):
            raise BadInterval("exactly one of interval/shifted must be set")

    @classmethod
    def module(cls, a: int, b: int) -> "IndecObject":
        return cls(interval=(a, b))

    @classmethod
    def shifted_projective(cls, i: int) -> "IndecObject":
        return cls(shifted=i)

    @property
    def is_module(self) -> bool:
        return self.interval is not None

    def label(self) -> str:
        """Stable identifier: "[1,3]" for modules, "T2" for summands."""
        if self.is_module:
            return f"[{self.interval[0]},{self.interval[1]}]"
        return f"T{self.shifted}"

    def name(self) -> str:
        """Human-readable name: composition series for modules."""
        if self.is_module:
            return composition_series_str(*self.interval)
        return f"T{self.shifted}"

    def sort_key(self):
        if self.is_module:
            return (0, self.interval)
        return (1, self.shifted)


def parse_object(text: str) -> IndecObject:
    """Parse an object label: "[1,3]" or "T2"."""
    text = text.strip()
    if text.startswith("T"):
        return IndecObject.shifted_projective(int(text[1:]))
    if text.startswith("[") and text.endswith("]"):
        a, b = (int(x) for x in text[1:-1].split(","))
        return IndecObject.module(a, b)
    raise BadInterval(f"cannot parse object {text!r}")


def _interval_dims(n: int, interval: Interval) -> tuple:
    a, b = interval
    return tuple(1 if a <= i <= b else 0 for i in range(1, n + 1))


def _dims_to_interval(dims) -> Interval:
    support = [i + 1 for i, d in enumerate(dims) if d != 0]
    if (
        not support
        or support != list(range(support[0], support[-1] + 1))
        or any(dims[i - 1] != 1 for i in support)
    ):
        raise NotTypeA(f"dimension vector {tuple(dims)} is not an interval")
    return (support[0], support[-1])


class ARQuiver:
    """Knitted AR quiver of the module category of a type A quiver.

    Built once by knit(); treated as immutable afterwards."""

    def __init__(self, quiver: Quiver, vertices, arrows, tau_map, middles):
        self.quiver = quiver
        self.n = quiver.n
        self.vertices = tuple(sorted(vertices))
        self.arrows = tuple(sorted(arrows))
        self._tau = dict(tau_map)
        self._middles = {k: tuple(sorted(v)) for k, v in middles.items()}
        self.projectives = tuple(projective_interval(quiver, j) for j in range(1, quiver.n + 1))
        self.injectives = tuple(injective_interval(quiver, j) for j in range(1, quiver.n + 1))

    def is_projective(self, x: Interval) -> bool:
        return x in self.projectives

    def is_injective(self, x: Interval) -> bool:
        return x in self.injectives

    def tau(self, x: Interval) -> Interval:
        if self.is_projective(x):
            raise IsProjective(f"tau is undefined on the projective {x}")
        return self._tau[x]

    def tau_inverse(self, x: Interval) -> Interval:
        if self.is_injective(x):
            raise IsProjective(f"tau^-1 is undefined on the injective {x}")
        for z, w in self._tau.items():
            if w == x:
                return z
        raise NotTypeA(f"{x} is not a vertex")  # unreachable for valid input

    def ar_sequence(self, x: Interval) -> tuple:
        """Almost-split sequence 0 -> tau(x) -> middle -> x -> 0."""
        if self.is_projective(x):
            raise IsProjective(f"{x} admits no almost-split sequence ending in it")
        return (self._tau[x], self._middles[x], x)

    def meshes(self) -> list:
        """All meshes as (tau_x, middle, x), in deterministic order."""
        return [(self._tau[x], self._middles[x], x) for x in sorted(self._middles)]

    def module_of(self, x: Interval) -> Representation:
        return interval_module(self.quiver, *x)

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "vertices": [
                {
                    "interval": list(v),
                    "name": composition_series_str(*v),
                    "dims": list(_interval_dims(self.n, v)),
                    "projective": self.is_projective(v),
                    "injective": self.is_injective(v),
                }
                for v in self.vertices
            ],
            "arrows": [{"from": list(s), "to": list(t)} for s, t in self.arrows],
            "tau": [{"from": list(z), "to": list(x)} for z, x in sorted(self._tau.items())],
            "meshes": [
                {
                    "tau": list(t),
                    "middle": [list(m) for m in mid],
                    "top": list(x),
                }
                for t, mid, x in self.meshes()
            ],
        }


def _reachable_interval(quiver: Quiver, j: int, forward: bool) -> Interval:
    """Vertices connected to j by a directed path (to j if forward=False
    means paths i->j; from j if forward=True).  In type A this set is an
    interval containing j."""
    hits = [
        i
        for i in range(1, quiver.n + 1)
        if (count_paths(quiver, i, j) if not forward else count_paths(quiver, j, i)) > 0
    ]
    return (min(hits), max(hits))


def projective_interval(quiver: Quiver, j: int) -> Interval:
    """Support of the projective module P_j: vertices with a path to j."""
    return _reachable_interval(quiver, j, forward=False)


def injective_interval(quiver: Quiver, j: int) -> Interval:
    """Support of the injective module I_j: vertices reachable from j."""
    return _reachable_interval(quiver, j, forward=True)


def knit(quiver: Quiver) -> ARQuiver:
    """Knit the AR quiver of the module category of a type A quiver.

    Projectives come first, with one arrow P_i -> P_j per arrow i -> j of
    the quiver.  A mesh at X can be completed once every non-injective
    predecessor of X has had its own mesh completed (the new arrows into X
    are then all present)."""
    if not underlying_path_graph(quiver):
        raise NotTypeA("knitting is implemented for type A quivers only")
    n = quiver.n
    projectives = {projective_interval(quiver, j) for j in range(1, n + 1)}
    injectives = {injective_interval(quiver, j) for j in range(1, n + 1)}

    vertices = set(projectives)
    arrows = set()
    for a in quiver.arrows:
        arrows.add((projective_interval(quiver, a.source), projective_interval(quiver, a.target)))

    tau_map: dict = {}
    middles: dict = {}
    knitted: set = set()
    while True:
        ready = None
        for x in sorted(vertices):
            if x in knitted or x in injectives:
                continue
            preds = [s for (s, t) in arrows if t == x]
            if all(p in knitted or p in injectives for p in preds):
                ready = x
                break
        if ready is None:
            break
        middle = sorted(t for (s, t) in arrows if s == ready)
        dims = [-d for d in _interval_dims(n, ready)]
        for m in middle:
            for i, d in enumerate(_interval_dims(n, m)):
                dims[i] += d
        z = _dims_to_interval(dims)
        vertices.add(z)
        for m in middle:
            arrows.add((m, z))
        tau_map[z] = ready
        middles[z] = middle
        knitted.add(ready)

    if len(vertices) != n * (n + 1) // 2:
        raise NotTypeA(
            f"knitting produced {len(vertices)} vertices, expected {n * (n + 1) // 2}"
        )
    return ARQuiver(quiver, vertices, arrows, tau_map, middles)


def cluster_indecomposables(quiver: Quiver) -> list:
    """All indecomposables of the cluster category: every interval module
    plus one shifted projective per vertex; n(n+3)/2 objects in total."""
    if not underlying_path_graph(quiver):
        raise NotTypeA("cluster indecomposables are implemented for type A only")
    objs = [
        IndecObject.module(a, b)
        for a in range(1, quiver.n + 1)
        for b in range(a, quiver.n + 1)
    ]
    objs.sort(key=IndecObject.sort_key)
    objs.extend(IndecObject.shifted_projective(i) for i in range(1, quiver.n + 1))
    return objs


def sigma(ar: ARQuiver, x: IndecObject) -> IndecObject:
    """Suspension on objects of the cluster category:
    modules translate by tau, projectives shift, shifted projectives land
    on the corresponding injectives."""
    if not x.is_module:
        return IndecObject.module(*ar.injectives[x.shifted - 1])
    if x.interval in ar.projectives:
        return IndecObject.shifted_projective(ar.projectives.index(x.interval) + 1)
    return IndecObject.module(*ar.tau(x.interval))


def coxeter_matrix(quiver: Quiver) -> tuple:
    """Matrix Phi with Phi . dim X = dim tau(X) for non-projective X
    (column-vector action), derived from the Cartan matrix whose columns
    are the dimension vectors of the projectives."""
    n = quiver.n
    cartan = [[count_paths(quiver, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    # invert the Cartan matrix exactly, column by column
    inv_cols = []
    for j in range(n):
        unit = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        inv_cols.append(solve_exact(cartan, unit))
    # Phi = -C^T C^-1
    phi = []
    for i in range(n):
        row = []
        for j in range(n):
            val = -sum(Fraction(cartan[k][i]) * inv_cols[j][k] for k in range(n))
            if val.denominator != 1:
                raise NotTypeA("Coxeter matrix is not integral")
            row.append(int(val))
        phi.append(tuple(row))
    return tuple(phi)


def tau_dims_via_coxeter(quiver: Quiver, dims) -> tuple:
    phi = coxeter_matrix(quiver)
    return tuple(sum(phi[i][j] * dims[j] for j in range(quiver.n)) for i in range(quiver.n))
