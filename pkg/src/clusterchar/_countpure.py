"""Pure-Python kernel for counting stable subspace tuples over F_q.

This mirrors the compiled kernel in _countcore.pyx; the public entry point
is count_tuples, with the call plan prepared by grassmann.py.  Subspaces are
enumerated as reduced row-echelon bases grouped by pivot pattern, with one
odometer pass over the free entries per pattern.
"""

from __future__ import annotations

from itertools import combinations

BACKEND_NAME = "pure"


def iter_subspaces_raw(d: int, e: int, q: int):
    """Yield (rows, pivots) for every e-dimensional subspace of F_q^d.

    rows is a list of e lists of length d (a reduced row-echelon basis) that
    is REUSED between yields; callers must not keep references across steps.
    """
    if e == 0:
        yield [], ()
        return
    for pivots in combinations(range(d), e):
        rows = [[0] * d for _ in range(e)]
        for i, p in enumerate(pivots):
            rows[i][p] = 1
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i, p in enumerate(pivots)
            for j in range(p + 1, d)
            if j not in pivot_set
        ]
        if not free:
            yield rows, pivots
            continue
        while True:
            yield rows, pivots
            # odometer over the free entries, base q
            for k, (i, j) in enumerate(free):
                rows[i][j] += 1
                if rows[i][j] < q:
                    break
                rows[i][j] = 0
            else:
                break


def _reduces_to_zero(vec, rows, pivots, q: int) -> bool:
    for row, p in zip(rows, pivots):
        c = vec[p]
        if c:
            for j in range(len(vec)):
                vec[j] = (vec[j] - c * row[j]) % q
    return not any(vec)


def _apply(mat, vec, q: int):
    return [sum(mr[i] * vec[i] for i in range(len(vec))) % q for mr in mat]


def _rank_mod(rows, q: int) -> int:
    """Rank of a list of vectors over F_q (destructive on the copy made here)."""
    work = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(work[0]) if work else 0
    col = 0
    while work and col < ncols:
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], q - 2, q)
        work[rank] = [(x * inv) % q for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [(x - f * y) % q for x, y in zip(work[i], work[rank])]
        rank += 1
        col += 1
        if rank == len(work):
            break
    return rank


def count_tuples(q, enum_dims, enum_subdims, checks, sinks):
    """Count stable assignments; see grassmann._make_plan for the argument
    layout.  Returns a Python int."""
    k = len(enum_dims)
    bases = [None] * k  # (rows, pivots) per enumerated position
    total = 0

    def leaf() -> int:
        factor = 1
        for d_sink, incoming, table in sinks:
            images = []
            for mat, src_pos in incoming:
                rows, _ = bases[src_pos]
                for row in rows:
                    images.append(_apply(mat, row, q))
            u = _rank_mod(images, q) if images else 0
            f = table[u] if u < len(table) else 0
            if f == 0:
                return 0
            factor *= f
        return factor

    def rec(pos: int):
        nonlocal total
        if pos == k:
            total += leaf()
            return
        for rows, pivots in iter_subspaces_raw(enum_dims[pos], enum_subdims[pos], q):
            bases[pos] = (rows, pivots)
            ok = True
            for mat, src_pos, dst_pos in checks[pos]:
                src_rows, _ = bases[src_pos]
                dst_rows, dst_pivots = bases[dst_pos]
                for row in src_rows:
                    if not _reduces_to_zero(_apply(mat, row, q), dst_rows, dst_pivots, q):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                rec(pos + 1)

    if k == 0:
        return leaf()
    rec(0)
    return total
