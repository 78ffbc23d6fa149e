"""Seeds, seed mutation, and breadth-first enumeration of the exchange
graph of a finite-type quiver.

A seed pairs a mutable quiver with one Laurent polynomial per vertex.
Mutation at vertex i replaces u_i by (prod over arrows out of i + prod over
arrows into i) / u_i; the division must be exact (Laurent phenomenon) and a
failure is fatal."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DepthExceeded, NotDivisible, VertexOutOfRange
from .laurent import LaurentPoly, exact_div
from .quivers import Quiver, mutate_quiver, validate_mutable


@dataclass(frozen=True)
class Seed:
    quiver: Quiver
    cluster: tuple  # one LaurentPoly per vertex

    def __post_init__(self):
        validate_mutable(self.quiver)
        if len(self.cluster) != self.quiver.n:
            raise VertexOutOfRange("one cluster variable per vertex required")
        if any(u.is_zero() for u in self.cluster):
            raise NotDivisible("cluster variables must be nonzero")

    def canonical(self) -> tuple:
        """Canonical form used for deduplication: the sorted variable
        strings, plus the arrow multiset with vertices renamed by the rank
        of their variable.  The renaming quotients out simultaneous
        relabelings of slots and quiver vertices, which otherwise double
        count (the labeled exchange graph of two vertices is a decagon,
        the seed pentagon only appears after identification)."""
        strings = [u.to_str() for u in self.cluster]
        order = sorted(range(len(strings)), key=lambda k: strings[k])
        rank = {slot: r + 1 for r, slot in enumerate(order)}
        variables = tuple(strings[k] for k in order)
        arrows = tuple(
            sorted((rank[a.source - 1], rank[a.target - 1]) for a in self.quiver.arrows)
        )
        return (variables, arrows)

    def variable_strings(self) -> list:
        return [u.to_str() for u in self.cluster]


def initial_seed(quiver: Quiver) -> Seed:
    validate_mutable(quiver)
    n = quiver.n
    return Seed(quiver, tuple(LaurentPoly.variable(n, i) for i in range(1, n + 1)))


def mutate_seed(seed: Seed, i: int) -> Seed:
    """Exchange at vertex i; empty arrow products are 1."""
    q = seed.quiver
    if not 1 <= i <= q.n:
        raise VertexOutOfRange(f"vertex {i} out of range 1..{q.n}")
    n = q.n
    out_prod = LaurentPoly.one(n)
    in_prod = LaurentPoly.one(n)
    for a in q.arrows:
        if a.source == i:
            out_prod = out_prod * seed.cluster[a.target - 1]
        if a.target == i:
            in_prod = in_prod * seed.cluster[a.source - 1]
    try:
        new_var = exact_div(out_prod + in_prod, seed.cluster[i - 1])
    except NotDivisible as exc:
        raise NotDivisible(
            f"exchange at vertex {i} is not exact for seed {seed.variable_strings()}: {exc}"
        ) from exc
    cluster = list(seed.cluster)
    cluster[i - 1] = new_var
    return Seed(mutate_quiver(q, i), tuple(cluster))


def enumerate_seeds(quiver: Quiver, max_depth: int = 12) -> tuple:
    """BFS closure of the initial seed under mutation at every vertex.

    Returns (seeds, variables): one Seed per canonical form, sorted, and the
    set of all cluster variables encountered.  Raises DepthExceeded carrying
    the partial sets when the graph has not closed within max_depth
    mutations (infinite type)."""
    start = initial_seed(quiver)
    seen = {start.canonical(): start}
    variables = set(start.cluster)
    frontier = [start]
    depth = 0
    while frontier:
        if depth >= max_depth:
            seeds = [seen[k] for k in sorted(seen)]
            raise DepthExceeded(
                f"exchange graph not closed after {max_depth} mutation rounds",
                seeds=seeds,
                variables=variables,
            )
        new = []
        for seed in frontier:
            for i in range(1, quiver.n + 1):
                s = mutate_seed(seed, i)
                variables.update(s.cluster)
                key = s.canonical()
                if key not in seen:
                    seen[key] = s
                    new.append(s)
        frontier = new
        depth += 1
    seeds = [seen[k] for k in sorted(seen)]
    return seeds, variables
