# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for counting stable subspace tuples over F_q.

Same contract as _countpure.count_tuples; the reduced row-echelon bases are
enumerated in C buffers and the arrow-stability checks and sink rank
computations run on flat int arrays.  Entries stay in [0, q); q is assumed
small enough that q*q fits comfortably in an int (true for every prime this
package samples)."""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset

BACKEND_NAME = "compiled"


cdef long long _modpow(long long base, long long exp, long long m):
    cdef long long result = 1
    base %= m
    while exp > 0:
        if exp & 1:
            result = (result * base) % m
        base = (base * base) % m
        exp >>= 1
    return result


cdef class _Run:
    cdef int q, k
    cdef int* dims
    cdef int* subs
    cdef int** rows      # rows[pos]: subs[pos] x dims[pos], flattened
    cdef int** pivs      # pivs[pos]: subs[pos] pivot columns
    cdef int** fr        # free-entry row indices per position
    cdef int** fc        # free-entry column indices per position
    # checks, flattened across positions
    cdef int* check_start   # k+1 offsets
    cdef int** cmat
    cdef int* csrc
    cdef int* cdst
    # sinks
    cdef int nsink
    cdef int* sink_d
    cdef int* sink_in_start  # nsink+1 offsets into imat/isrc
    cdef int** imat
    cdef int* isrc
    cdef list tables
    cdef bint has_sinks
    cdef object total
    cdef unsigned long long plain
    cdef int* vec       # scratch, max_d
    cdef int* rankbuf   # scratch, max_images x max_d
    cdef int max_d, max_images

    def __cinit__(self, int q, list enum_dims, list enum_subdims, list checks, list sinks):
        cdef int k = len(enum_dims)
        cdef int i, j, pos, n
        self.q = q
        self.k = k
        self.total = 0
        self.plain = 0
        self.tables = []
        self.dims = <int*>calloc(max(k, 1), sizeof(int))
        self.subs = <int*>calloc(max(k, 1), sizeof(int))
        self.rows = <int**>calloc(max(k, 1), sizeof(int*))
        self.pivs = <int**>calloc(max(k, 1), sizeof(int*))
        self.fr = <int**>calloc(max(k, 1), sizeof(int*))
        self.fc = <int**>calloc(max(k, 1), sizeof(int*))
        self.max_d = 1
        for pos in range(k):
            self.dims[pos] = enum_dims[pos]
            self.subs[pos] = enum_subdims[pos]
            if self.dims[pos] > self.max_d:
                self.max_d = self.dims[pos]
            n = max(self.subs[pos] * self.dims[pos], 1)
            self.rows[pos] = <int*>calloc(n, sizeof(int))
            self.pivs[pos] = <int*>calloc(max(self.subs[pos], 1), sizeof(int))
            self.fr[pos] = <int*>calloc(n, sizeof(int))
            self.fc[pos] = <int*>calloc(n, sizeof(int))

        cdef int ncheck_total = 0
        for pos in range(k):
            ncheck_total += len(checks[pos])
        self.check_start = <int*>calloc(k + 1, sizeof(int))
        self.cmat = <int**>calloc(max(ncheck_total, 1), sizeof(int*))
        self.csrc = <int*>calloc(max(ncheck_total, 1), sizeof(int))
        self.cdst = <int*>calloc(max(ncheck_total, 1), sizeof(int))
        cdef int c = 0
        cdef list mat_rows
        cdef int d_src, d_dst, r, t
        for pos in range(k):
            self.check_start[pos] = c
            for mat_rows, src, dst in checks[pos]:
                d_dst = len(mat_rows)
                d_src = self.dims[src]
                self.cmat[c] = <int*>calloc(max(d_dst * d_src, 1), sizeof(int))
                for r in range(d_dst):
                    for t in range(d_src):
                        self.cmat[c][r * d_src + t] = mat_rows[r][t] % q
                if d_dst > self.max_d:
                    self.max_d = d_dst
                self.csrc[c] = src
                self.cdst[c] = dst
                c += 1
        self.check_start[k] = c

        self.nsink = len(sinks)
        self.has_sinks = self.nsink > 0
        self.sink_d = <int*>calloc(max(self.nsink, 1), sizeof(int))
        self.sink_in_start = <int*>calloc(self.nsink + 1, sizeof(int))
        cdef int nin_total = 0
        for i in range(self.nsink):
            nin_total += len(sinks[i][1])
        self.imat = <int**>calloc(max(nin_total, 1), sizeof(int*))
        self.isrc = <int*>calloc(max(nin_total, 1), sizeof(int))
        self.max_images = 1
        c = 0
        cdef int nimg
        for i in range(self.nsink):
            self.sink_in_start[i] = c
            self.sink_d[i] = sinks[i][0]
            if self.sink_d[i] > self.max_d:
                self.max_d = self.sink_d[i]
            self.tables.append(sinks[i][2])
            nimg = 0
            for mat_rows, src in sinks[i][1]:
                d_dst = len(mat_rows)
                d_src = self.dims[src]
                self.imat[c] = <int*>calloc(max(d_dst * d_src, 1), sizeof(int))
                for r in range(d_dst):
                    for t in range(d_src):
                        self.imat[c][r * d_src + t] = mat_rows[r][t] % q
                self.isrc[c] = src
                nimg += self.subs[src]
                c += 1
            if nimg > self.max_images:
                self.max_images = nimg
        self.sink_in_start[self.nsink] = c

        self.vec = <int*>calloc(self.max_d, sizeof(int))
        self.rankbuf = <int*>calloc(self.max_images * self.max_d, sizeof(int))

    def __dealloc__(self):
        cdef int pos, c
        if self.rows != NULL:
            for pos in range(self.k):
                if self.rows[pos] != NULL:
                    free(self.rows[pos])
        if self.pivs != NULL:
            for pos in range(self.k):
                if self.pivs[pos] != NULL:
                    free(self.pivs[pos])
        if self.fr != NULL:
            for pos in range(self.k):
                if self.fr[pos] != NULL:
                    free(self.fr[pos])
        if self.fc != NULL:
            for pos in range(self.k):
                if self.fc[pos] != NULL:
                    free(self.fc[pos])
        if self.cmat != NULL and self.check_start != NULL:
            for c in range(self.check_start[self.k]):
                if self.cmat[c] != NULL:
                    free(self.cmat[c])
        if self.imat != NULL and self.sink_in_start != NULL:
            for c in range(self.sink_in_start[self.nsink]):
                if self.imat[c] != NULL:
                    free(self.imat[c])
        free(self.dims); free(self.subs); free(self.rows); free(self.pivs)
        free(self.fr); free(self.fc); free(self.check_start); free(self.cmat)
        free(self.csrc); free(self.cdst); free(self.sink_d); free(self.sink_in_start)
        free(self.imat); free(self.isrc); free(self.vec); free(self.rankbuf)

    cdef bint _run_checks(self, int pos):
        cdef int c, r, j, t, coeff, p
        cdef int q = self.q
        cdef int* mat
        cdef int* src_rows
        cdef int* dst_rows
        cdef int* dst_pivs
        cdef int ns, ds, dd, nd
        cdef long long acc
        for c in range(self.check_start[pos], self.check_start[pos + 1]):
            mat = self.cmat[c]
            src_rows = self.rows[self.csrc[c]]
            ns = self.subs[self.csrc[c]]
            ds = self.dims[self.csrc[c]]
            dst_rows = self.rows[self.cdst[c]]
            dst_pivs = self.pivs[self.cdst[c]]
            nd = self.subs[self.cdst[c]]
            dd = self.dims[self.cdst[c]]
            for r in range(ns):
                for j in range(dd):
                    acc = 0
                    for t in range(ds):
                        acc += mat[j * ds + t] * src_rows[r * ds + t]
                    self.vec[j] = <int>(acc % q)
                for t in range(nd):
                    p = dst_pivs[t]
                    coeff = self.vec[p]
                    if coeff:
                        for j in range(dd):
                            self.vec[j] = (self.vec[j] + (q - coeff) * dst_rows[t * dd + j]) % q
                for j in range(dd):
                    if self.vec[j]:
                        return False
        return True

    cdef int _sink_rank(self, int sink):
        cdef int q = self.q
        cdef int d = self.sink_d[sink]
        cdef int nimg = 0
        cdef int c, r, j, t
        cdef int* mat
        cdef int* src_rows
        cdef int ns, ds
        cdef long long acc
        for c in range(self.sink_in_start[sink], self.sink_in_start[sink + 1]):
            mat = self.imat[c]
            src_rows = self.rows[self.isrc[c]]
            ns = self.subs[self.isrc[c]]
            ds = self.dims[self.isrc[c]]
            for r in range(ns):
                for j in range(d):
                    acc = 0
                    for t in range(ds):
                        acc += mat[j * ds + t] * src_rows[r * ds + t]
                    self.rankbuf[nimg * self.max_d + j] = <int>(acc % q)
                nimg += 1
        # Gaussian elimination for the rank
        cdef int rank = 0
        cdef int col = 0
        cdef int pivot_row, f
        cdef long long inv
        while rank < nimg and col < d:
            pivot_row = -1
            for r in range(rank, nimg):
                if self.rankbuf[r * self.max_d + col]:
                    pivot_row = r
                    break
            if pivot_row < 0:
                col += 1
                continue
            if pivot_row != rank:
                for j in range(d):
                    t = self.rankbuf[rank * self.max_d + j]
                    self.rankbuf[rank * self.max_d + j] = self.rankbuf[pivot_row * self.max_d + j]
                    self.rankbuf[pivot_row * self.max_d + j] = t
            inv = _modpow(self.rankbuf[rank * self.max_d + col], q - 2, q)
            for r in range(rank + 1, nimg):
                f = <int>((self.rankbuf[r * self.max_d + col] * inv) % q)
                if f:
                    for j in range(col, d):
                        self.rankbuf[r * self.max_d + j] = (
                            self.rankbuf[r * self.max_d + j]
                            + (q - f) * self.rankbuf[rank * self.max_d + j]
                        ) % q
            rank += 1
            col += 1
        return rank

    cdef int _leaf(self) except -1:
        cdef int sink, u
        if not self.has_sinks:
            self.plain += 1
            return 0
        factor = 1
        for sink in range(self.nsink):
            u = self._sink_rank(sink)
            table = <list>self.tables[sink]
            if u >= len(table):
                return 0
            f = table[u]
            if f == 0:
                return 0
            factor = factor * f
        self.total = self.total + factor
        return 0

    cdef int _rec(self, int pos) except -1:
        if pos == self.k:
            return self._leaf()
        cdef int d = self.dims[pos]
        cdef int e = self.subs[pos]
        cdef int* rows = self.rows[pos]
        cdef int* pivs = self.pivs[pos]
        cdef int* fr = self.fr[pos]
        cdef int* fc = self.fc[pos]
        cdef int i, j, t, nf, idx, cell
        cdef bint is_piv
        if e == 0:
            if self._run_checks(pos):
                self._rec(pos + 1)
            return 0
        for i in range(e):
            pivs[i] = i
        while True:
            memset(rows, 0, e * d * sizeof(int))
            for i in range(e):
                rows[i * d + pivs[i]] = 1
            nf = 0
            for i in range(e):
                for j in range(pivs[i] + 1, d):
                    is_piv = False
                    for t in range(e):
                        if pivs[t] == j:
                            is_piv = True
                            break
                    if not is_piv:
                        fr[nf] = i
                        fc[nf] = j
                        nf += 1
            while True:
                if self._run_checks(pos):
                    self._rec(pos + 1)
                idx = 0
                while idx < nf:
                    cell = fr[idx] * d + fc[idx]
                    rows[cell] += 1
                    if rows[cell] < self.q:
                        break
                    rows[cell] = 0
                    idx += 1
                if idx == nf:
                    break
            i = e - 1
            while i >= 0 and pivs[i] == d - e + i:
                i -= 1
            if i < 0:
                break
            pivs[i] += 1
            for j in range(i + 1, e):
                pivs[j] = pivs[j - 1] + 1
        return 0

    def run(self):
        self._rec(0)
        if self.has_sinks:
            return self.total
        return self.plain


def count_tuples(q, enum_dims, enum_subdims, checks, sinks):
    """Count stable assignments; see grassmann._make_plan for the layout."""
    runner = _Run(
        int(q),
        [int(x) for x in enum_dims],
        [int(x) for x in enum_subdims],
        [list(c) for c in checks],
        [tuple(s) for s in sinks],
    )
    return runner.run()
