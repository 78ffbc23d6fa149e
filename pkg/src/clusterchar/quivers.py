"""Finite quivers, path enumeration, exchange matrices and quiver mutation.

Vertices are the integers 1..n.  Arrows carry stable string ids so that
representations can key their matrices by arrow.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    HasLoop,
    HasTwoCycle,
    InputError,
    NotAcyclic,
    VertexOutOfRange,
)


class Arrow(NamedTuple):
    id: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple

    def __post_init__(self):
        seen = set()
        for a in self.arrows:
            if not (1 <= a.source <= self.n and 1 <= a.target <= self.n):
                raise VertexOutOfRange(f"arrow {a} is not within 1..{self.n}")
            if a.id in seen:
                raise InputError(f"duplicate arrow id {a.id!r}")
            seen.add(a.id)

    # ------------------------------------------------------------- structure

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise InputError(f"no arrow with id {arrow_id!r}")

    def arrows_from(self, i: int) -> list:
        return [a for a in self.arrows if a.source == i]

    def arrows_to(self, i: int) -> list:
        return [a for a in self.arrows if a.target == i]

    def opposite(self) -> "Quiver":
        """Same vertices, all arrows reversed (ids preserved)."""
        return Quiver(self.n, tuple(Arrow(a.id, a.target, a.source) for a in self.arrows))

    def is_acyclic(self) -> bool:
        indeg = {i: 0 for i in range(1, self.n + 1)}
        for a in self.arrows:
            indeg[a.target] += 1
        queue = [i for i, d in indeg.items() if d == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for a in self.arrows_from(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    queue.append(a.target)
        return seen == self.n

    # ------------------------------------------------------------------- io

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "arrows": [{"id": a.id, "s": a.source, "t": a.target} for a in self.arrows],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Quiver":
        try:
            n = int(doc["n"])
            raw = doc.get("arrows", [])
            arrows = []
            for k, entry in enumerate(raw):
                aid = entry.get("id", f"a{k + 1}")
                arrows.append(Arrow(str(aid), int(entry["s"]), int(entry["t"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed quiver document: {exc}") from exc
        return cls(n, tuple(arrows))

    @classmethod
    def from_file(cls, path: str) -> "Quiver":
        with open(path) as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"{path}: {exc}") from exc
        return cls.from_json(doc)


def make_quiver(n: int, arrows: Iterable[tuple]) -> Quiver:
    """Quiver from (source, target) pairs; ids are assigned in list order."""
    return Quiver(n, tuple(Arrow(f"a{k + 1}", s, t) for k, (s, t) in enumerate(arrows)))


def linear_an(n: int) -> Quiver:
    """The linearly oriented type A quiver 1 -> 2 -> ... -> n."""
    return make_quiver(n, [(i, i + 1) for i in range(1, n)])


def kronecker() -> Quiver:
    """Two vertices, two parallel arrows 1 => 2."""
    return make_quiver(2, [(1, 2), (1, 2)])


def loop_quiver() -> Quiver:
    """One vertex with a single loop."""
    return make_quiver(1, [(1, 1)])


# ------------------------------------------------------------------ mutation


def validate_mutable(q: Quiver) -> None:
    """Mutation requires no loops and no 2-cycles."""
    pair_counts: dict = {}
    for a in q.arrows:
        if a.source == a.target:
            raise HasLoop(a.source)
        pair_counts[(a.source, a.target)] = pair_counts.get((a.source, a.target), 0) + 1
    for (s, t) in pair_counts:
        if (t, s) in pair_counts:
            raise HasTwoCycle(min(s, t), max(s, t))


def b_matrix(q: Quiver) -> tuple:
    """Skew-symmetric exchange matrix: b[i][j] = #(i->j) - #(j->i)."""
    validate_mutable(q)
    b = [[0] * q.n for _ in range(q.n)]
    for a in q.arrows:
        b[a.source - 1][a.target - 1] += 1
        b[a.target - 1][a.source - 1] -= 1
    return tuple(tuple(row) for row in b)


def mutate_quiver(q: Quiver, i: int) -> Quiver:
    """Fomin-Zelevinsky quiver mutation at vertex i.

    Reverses all arrows at i, adds one arrow h->j per path h->i->j, then
    cancels 2-cycles maximally.  Arrow ids are regenerated (mutation has no
    natural correspondence of arrows).
    """
    validate_mutable(q)
    if not 1 <= i <= q.n:
        raise VertexOutOfRange(f"vertex {i} out of range 1..{q.n}")
    into = [a for a in q.arrows if a.target == i]
    outof = [a for a in q.arrows if a.source == i]
    pairs = []
    for a in q.arrows:
        if a.source == i or a.target == i:
            pairs.append((a.target, a.source))
        else:
            pairs.append((a.source, a.target))
    for b in into:
        for c in outof:
            pairs.append((b.source, c.target))
    # cancel 2-cycles: remove pairs h->j, j->h greedily until none remain
    counts: dict = {}
    for s, t in pairs:
        counts[(s, t)] = counts.get((s, t), 0) + 1
    for (s, t) in list(counts):
        if s < t and (t, s) in counts:
            k = min(counts[(s, t)], counts[(t, s)])
            counts[(s, t)] -= k
            counts[(t, s)] -= k
    result = []
    for (s, t), k in sorted(counts.items()):
        result.extend([(s, t)] * k)
    out = make_quiver(q.n, result)
    validate_mutable(out)
    return out


def mutate_b_matrix(b: Sequence[Sequence[int]], i: int) -> tuple:
    """Matrix mutation at vertex i (1-based), for cross-checking."""
    n = len(b)
    k = i - 1
    out = [[0] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            if r == k or c == k:
                out[r][c] = -b[r][c]
            else:
                out[r][c] = b[r][c] + max(0, b[r][k]) * b[k][c] + b[r][k] * max(0, -b[k][c])
    return tuple(tuple(row) for row in out)


# --------------------------------------------------------------------- paths


class Path(NamedTuple):
    """A path in a quiver.

    arrow_ids lists the arrows in order of traversal; as algebra elements
    paths compose right to left, so the word for this path is the reversed
    id sequence.  A lazy path e_i has an empty id sequence and source ==
    target == i.
    """

    source: int
    target: int
    arrow_ids: tuple

    @property
    def length(self) -> int:
        return len(self.arrow_ids)

    def word(self) -> str:
        if not self.arrow_ids:
            return f"e{self.source}"
        return "*".join(reversed(self.arrow_ids))


def enumerate_paths(q: Quiver) -> list:
    """All paths of an acyclic quiver, lazy paths included.

    Deterministic order: by length, then by source vertex, then by the
    id sequence.
    """
    if not q.is_acyclic():
        raise NotAcyclic("path enumeration requires an acyclic quiver")
    paths = [Path(i, i, ()) for i in range(1, q.n + 1)]
    frontier = list(paths)
    while frontier:
        new = []
        for p in frontier:
            for a in q.arrows_from(p.target):
                new.append(Path(p.source, a.target, p.arrow_ids + (a.id,)))
        paths.extend(new)
        frontier = new
    paths.sort(key=lambda p: (p.length, p.source, p.arrow_ids))
    return paths


def count_paths(q: Quiver, i: int, j: int) -> int:
    """Number of paths i -> j (the Cartan matrix entry)."""
    if not (1 <= i <= q.n and 1 <= j <= q.n):
        raise VertexOutOfRange(f"vertices {i},{j} out of range 1..{q.n}")
    if not q.is_acyclic():
        raise NotAcyclic("path counting requires an acyclic quiver")
    # dynamic programming along reverse topological order from i
    counts = {i: 1}
    order = _topological_order(q)
    for v in order:
        c = counts.get(v)
        if not c:
            continue
        for a in q.arrows_from(v):
            counts[a.target] = counts.get(a.target, 0) + c
    return counts.get(j, 0)


def _topological_order(q: Quiver) -> list:
    indeg = {i: 0 for i in range(1, q.n + 1)}
    for a in q.arrows:
        indeg[a.target] += 1
    queue = sorted(i for i, d in indeg.items() if d == 0)
    order = []
    while queue:
        v = queue.pop(0)
        order.append(v)
        for a in q.arrows_from(v):
            indeg[a.target] -= 1
            if indeg[a.target] == 0:
                queue.append(a.target)
    if len(order) != q.n:
        raise NotAcyclic("quiver has an oriented cycle")
    return order


def topological_order(q: Quiver) -> list:
    return _topological_order(q)
