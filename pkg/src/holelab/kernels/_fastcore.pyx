# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hole-search kernel.

Same algorithm as the pure-Python kernel (see _pycore.py for the full
description): anchored DFS over induced paths with a chain-contraction
completion-feasibility prune. Bitsets are fixed-width word arrays instead of
Python ints. The emitted hole stream is identical to the pure kernel's:
superedges are discovered in the same order, the same odd superedges are
tracked, and pruning is sound, so DFS emissions coincide exactly.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.string cimport memset

from ..errors import BudgetExceededError

IMPLEMENTATION = "compiled"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int hl_popcount64(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int hl_ctz64(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    #else
    static inline int hl_popcount64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    static inline int hl_ctz64(unsigned long long x) {
        int c = 0;
        while (!(x & 1ULL)) { x >>= 1; c++; }
        return c;
    }
    #endif
    """
    int hl_popcount64(unsigned long long x) nogil
    int hl_ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64

cdef int MAX_TRACKED_ODD = 6
cdef int MAX_RESIDUE_MOD = 64


cdef inline bint get_bit(u64* words, int v) nogil:
    return (words[v >> 6] >> (v & 63)) & 1ULL


cdef inline void set_bit(u64* words, int v) nogil:
    words[v >> 6] |= 1ULL << (v & 63)


cdef inline void clear_bit(u64* words, int v) nogil:
    words[v >> 6] &= ~(1ULL << (v & 63))


cdef inline int lowest_bit(u64* words, int nw) nogil:
    cdef int i
    for i in range(nw):
        if words[i]:
            return (i << 6) + hl_ctz64(words[i])
    return -1


cdef inline bint any_bit(u64* words, int nw) nogil:
    cdef int i
    for i in range(nw):
        if words[i]:
            return True
    return False


cdef class HoleSearch:
    """Iterator over the canonical hole stream of one graph."""

    cdef int n, nw, min_len, max_len, anchor, depth
    cdef long long budget, nodes
    cdef bint has_max, exhausted
    cdef u64* adj            # n rows of nw words
    cdef u64* gt             # vertices greater than the current anchor
    cdef int* path
    cdef u64* ext            # per-frame extension candidates
    cdef u64* clos           # per-frame closure candidates
    cdef u64* banned         # per-frame banned set
    # completion-feasibility scratch
    cdef u64* live
    cdef u64* branch
    cdef u64* scratch
    cdef int* deg
    cdef int* se_u
    cdef int* se_v
    cdef int* se_w
    cdef int* se_odd
    cdef int se_cap
    cdef int* vert_index
    cdef int* branch_verts
    cdef int* adj_off        # CSR over the contracted branch graph
    cdef int* adj_to
    cdef int* adj_wt
    cdef int* adj_odd
    cdef int* dist
    cdef int* bucket_head
    cdef int* bucket_next
    cdef int* state_of
    cdef long long dist_cap, pool_cap

    def __cinit__(self, object masks, int n, int min_len=4, object max_len=None,
                  object budget=None):
        cdef int i, v, cap
        cdef long long edge_count = 0
        cdef object m
        self.n = n
        self.nw = ((n + 63) >> 6) if n else 1
        self.min_len = min_len if min_len > 4 else 4
        self.has_max = max_len is not None
        self.max_len = 0
        if self.has_max:
            self.max_len = max_len
            if self.max_len > n:
                self.max_len = n  # no hole can be longer than the graph
        self.budget = budget if budget is not None else -1
        self.nodes = 0
        self.anchor = -1
        self.depth = 0
        self.exhausted = self.has_max and self.max_len < self.min_len
        cap = n + 2
        self.adj = <u64*> PyMem_Malloc(max(n, 1) * self.nw * sizeof(u64))
        self.gt = <u64*> PyMem_Malloc(self.nw * sizeof(u64))
        self.path = <int*> PyMem_Malloc(cap * sizeof(int))
        self.ext = <u64*> PyMem_Malloc(cap * self.nw * sizeof(u64))
        self.clos = <u64*> PyMem_Malloc(cap * self.nw * sizeof(u64))
        self.banned = <u64*> PyMem_Malloc(cap * self.nw * sizeof(u64))
        self.live = <u64*> PyMem_Malloc(self.nw * sizeof(u64))
        self.branch = <u64*> PyMem_Malloc(self.nw * sizeof(u64))
        self.scratch = <u64*> PyMem_Malloc(self.nw * sizeof(u64))
        self.deg = <int*> PyMem_Malloc(max(n, 1) * sizeof(int))
        self.vert_index = <int*> PyMem_Malloc(max(n, 1) * sizeof(int))
        self.branch_verts = <int*> PyMem_Malloc(max(n, 1) * sizeof(int))
        self.adj_off = <int*> PyMem_Malloc(cap * sizeof(int))
        self.bucket_head = <int*> PyMem_Malloc(cap * sizeof(int))
        self.dist = NULL
        self.bucket_next = NULL
        self.state_of = NULL
        self.dist_cap = 0
        self.pool_cap = 0
        if (self.adj == NULL or self.gt == NULL or self.path == NULL
                or self.ext == NULL or self.clos == NULL or self.banned == NULL
                or self.live == NULL or self.branch == NULL
                or self.scratch == NULL or self.deg == NULL
                or self.vert_index == NULL or self.branch_verts == NULL
                or self.adj_off == NULL or self.bucket_head == NULL):
            raise MemoryError()
        memset(self.adj, 0, max(n, 1) * self.nw * sizeof(u64))
        for v in range(n):
            m = masks[v]
            edge_count += m.bit_count()
            i = 0
            while m:
                self.adj[v * self.nw + i] = <u64> (m & 0xFFFFFFFFFFFFFFFF)
                m >>= 64
                i += 1
        self.se_cap = <int> (edge_count // 2) + 2
        self.se_u = <int*> PyMem_Malloc(self.se_cap * sizeof(int))
        self.se_v = <int*> PyMem_Malloc(self.se_cap * sizeof(int))
        self.se_w = <int*> PyMem_Malloc(self.se_cap * sizeof(int))
        self.se_odd = <int*> PyMem_Malloc(self.se_cap * sizeof(int))
        self.adj_to = <int*> PyMem_Malloc(2 * self.se_cap * sizeof(int))
        self.adj_wt = <int*> PyMem_Malloc(2 * self.se_cap * sizeof(int))
        self.adj_odd = <int*> PyMem_Malloc(2 * self.se_cap * sizeof(int))
        if (self.se_u == NULL or self.se_v == NULL or self.se_w == NULL
                or self.se_odd == NULL or self.adj_to == NULL
                or self.adj_wt == NULL or self.adj_odd == NULL):
            raise MemoryError()

    def __dealloc__(self):
        PyMem_Free(self.adj); PyMem_Free(self.gt); PyMem_Free(self.path)
        PyMem_Free(self.ext); PyMem_Free(self.clos); PyMem_Free(self.banned)
        PyMem_Free(self.live); PyMem_Free(self.branch); PyMem_Free(self.scratch)
        PyMem_Free(self.deg); PyMem_Free(self.vert_index)
        PyMem_Free(self.branch_verts); PyMem_Free(self.adj_off)
        PyMem_Free(self.bucket_head)
        PyMem_Free(self.se_u); PyMem_Free(self.se_v); PyMem_Free(self.se_w)
        PyMem_Free(self.se_odd); PyMem_Free(self.adj_to); PyMem_Free(self.adj_wt)
        PyMem_Free(self.adj_odd)
        PyMem_Free(self.dist); PyMem_Free(self.bucket_next)
        PyMem_Free(self.state_of)

    def __iter__(self):
        return self

    cdef void _start_anchor(self):
        cdef int i, a = self.anchor
        memset(self.gt, 0, self.nw * sizeof(u64))
        for i in range(a + 1, self.n):
            set_bit(self.gt, i)
        self.path[0] = a
        memset(self.banned, 0, self.nw * sizeof(u64))
        set_bit(self.banned, a)
        memset(self.clos, 0, self.nw * sizeof(u64))
        for i in range(self.nw):
            self.ext[i] = self.adj[a * self.nw + i] & self.gt[i]
        self.depth = 1

    cdef bint _ensure_state_arrays(self, long long nstates):
        cdef long long pool = 4 * nstates + 64
        if nstates > self.dist_cap:
            PyMem_Free(self.dist)
            self.dist = <int*> PyMem_Malloc(nstates * sizeof(int))
            self.dist_cap = nstates if self.dist != NULL else 0
        if pool > self.pool_cap:
            PyMem_Free(self.bucket_next)
            PyMem_Free(self.state_of)
            self.bucket_next = <int*> PyMem_Malloc(pool * sizeof(int))
            self.state_of = <int*> PyMem_Malloc(pool * sizeof(int))
            self.pool_cap = pool
            if self.bucket_next == NULL or self.state_of == NULL:
                self.pool_cap = 0
        return self.dist_cap >= nstates and self.pool_cap >= pool

    cdef bint _residue_hits(self, int d, int lo, int hi, int modulus) nogil:
        # smallest r >= max(d, lo) with r congruent to d mod modulus
        cdef int r = d
        if d < lo:
            r = d + modulus * ((lo - d + modulus - 1) // modulus)
        return r <= hi

    cdef bint _completion_feasible(self, u64* allowed, int start, int lo, int hi):
        """Sound test: can a simple path of length in [lo, hi] from start back
        to the current anchor still exist inside `allowed`?"""
        cdef int i, v, w, u, prev, cur, weight, nse, g, t, modulus, n_odd
        cdef int nb, nstates_per_v, a_idx, s_idx, nd, d, state, sub, res
        cdef int e, oddid, bit, lo_r
        cdef long long nstates, pool, si
        cdef u64 word
        cdef int anchor = self.anchor
        if hi < lo or hi < 2:
            return False
        if lo < 2:
            lo = 2
        for i in range(self.nw):
            self.live[i] = allowed[i]
        set_bit(self.live, start)
        set_bit(self.live, anchor)
        # branch vertices: residual degree != 2, plus start and anchor
        memset(self.branch, 0, self.nw * sizeof(u64))
        nb = 0
        for i in range(self.nw):
            word = self.live[i]
            while word:
                v = (i << 6) + hl_ctz64(word)
                word &= word - 1
                weight = 0
                for w in range(self.nw):
                    weight += hl_popcount64(self.adj[v * self.nw + w] & self.live[w])
                self.deg[v] = weight
                if weight != 2 or v == start or v == anchor:
                    set_bit(self.branch, v)
                    self.vert_index[v] = nb
                    self.branch_verts[nb] = v
                    nb += 1
        if self.deg[start] == 0 or self.deg[anchor] == 0:
            return False
        # contract degree-2 chains into weighted superedges; each chain is
        # seen from both ends, keep only the lower-endpoint discovery
        nse = 0
        for i in range(nb):
            u = self.branch_verts[i]
            for w in range(self.nw):
                word = self.adj[u * self.nw + w] & self.live[w]
                while word:
                    v = (w << 6) + hl_ctz64(word)
                    word &= word - 1
                    if get_bit(self.branch, v):
                        if u < v:
                            self.se_u[nse] = u; self.se_v[nse] = v
                            self.se_w[nse] = 1; nse += 1
                        continue
                    prev = u; cur = v; weight = 1
                    while not get_bit(self.branch, cur):
                        for t in range(self.nw):
                            self.scratch[t] = (
                                self.adj[cur * self.nw + t] & self.live[t]
                            )
                        clear_bit(self.scratch, prev)
                        prev = cur
                        cur = lowest_bit(self.scratch, self.nw)
                        weight += 1
                    if u < cur:
                        self.se_u[nse] = u; self.se_v[nse] = cur
                        self.se_w[nse] = weight; nse += 1
        if nse == 0:
            return False
        # residue modulus from the even superedge weights
        g = 0
        for e in range(nse):
            if self.se_w[e] % 2 == 0:
                w = self.se_w[e]
                while w:
                    t = g % w
                    g = w
                    w = t
        modulus = 2 * g if 0 < 2 * g <= MAX_RESIDUE_MOD else 2
        # first few odd superedges become tracked use-once resources
        n_odd = 0
        for e in range(nse):
            if self.se_w[e] % 2 == 1:
                if n_odd < MAX_TRACKED_ODD:
                    self.se_odd[e] = n_odd
                    n_odd += 1
                else:
                    self.se_odd[e] = -2  # untracked odd: reusable in the bound
            else:
                self.se_odd[e] = -1
        nstates_per_v = (1 << n_odd) * modulus
        nstates = <long long> nb * nstates_per_v
        if not self._ensure_state_arrays(nstates):
            return True  # cannot allocate: skip pruning, stays sound
        # CSR over the branch graph
        for i in range(nb + 1):
            self.adj_off[i] = 0
        for e in range(nse):
            self.adj_off[self.vert_index[self.se_u[e]] + 1] += 1
            self.adj_off[self.vert_index[self.se_v[e]] + 1] += 1
        for i in range(nb):
            self.adj_off[i + 1] += self.adj_off[i]
        for e in range(nse):
            u = self.vert_index[self.se_u[e]]
            v = self.vert_index[self.se_v[e]]
            self.adj_to[self.adj_off[u]] = v
            self.adj_wt[self.adj_off[u]] = self.se_w[e]
            self.adj_odd[self.adj_off[u]] = self.se_odd[e]
            self.adj_off[u] += 1
            self.adj_to[self.adj_off[v]] = u
            self.adj_wt[self.adj_off[v]] = self.se_w[e]
            self.adj_odd[self.adj_off[v]] = self.se_odd[e]
            self.adj_off[v] += 1
        for i in range(nb, 0, -1):
            self.adj_off[i] = self.adj_off[i - 1]
        self.adj_off[0] = 0
        # bucketed shortest-path sweep over (vertex, odd subset, residue)
        for si in range(nstates):
            self.dist[si] = hi + 1
        for i in range(hi + 2):
            self.bucket_head[i] = -1
        s_idx = self.vert_index[start]
        a_idx = self.vert_index[anchor]
        state = s_idx * nstates_per_v
        self.dist[state] = 0
        pool = 0
        self.state_of[pool] = state
        self.bucket_next[pool] = self.bucket_head[0]
        self.bucket_head[0] = <int> pool
        pool += 1
        lo_r = lo
        for d in range(hi + 1):
            i = self.bucket_head[d]
            while i != -1:
                state = self.state_of[i]
                i = self.bucket_next[i]
                if self.dist[state] != d:
                    continue
                v = state // nstates_per_v
                sub = (state % nstates_per_v) // modulus
                for e in range(self.adj_off[v], self.adj_off[v + 1]):
                    w = self.adj_to[e]
                    nd = d + self.adj_wt[e]
                    if nd > hi:
                        continue
                    oddid = self.adj_odd[e]
                    res = sub
                    if oddid >= 0:
                        bit = 1 << oddid
                        if sub & bit:
                            continue
                        res = sub | bit
                    if w == a_idx and nd >= 2 \
                            and self._residue_hits(nd, lo_r, hi, modulus):
                        return True
                    si = <long long> w * nstates_per_v + res * modulus \
                        + nd % modulus
                    if nd < self.dist[si]:
                        self.dist[si] = nd
                        if pool >= self.pool_cap:
                            return True  # pool overflow: skip pruning, sound
                        self.state_of[pool] = si
                        self.bucket_next[pool] = self.bucket_head[nd]
                        self.bucket_head[nd] = <int> pool
                        pool += 1
        for si in range(<long long> a_idx * nstates_per_v,
                        <long long> (a_idx + 1) * nstates_per_v):
            d = self.dist[si]
            if 2 <= d <= hi and self._residue_hits(d, lo_r, hi, modulus):
                return True
        return False

    def __next__(self):
        cdef int d, u, v, i, new_depth, lo, hi, edges_used
        cdef u64* cand = self.scratch
        cdef u64* frame
        if self.exhausted:
            raise StopIteration
        while True:
            if self.depth == 0:
                self.anchor += 1
                if self.anchor >= self.n:
                    self.exhausted = True
                    raise StopIteration
                self._start_anchor()
                continue
            d = self.depth - 1
            u = lowest_bit(self.clos + d * self.nw, self.nw)
            if u >= 0:
                clear_bit(self.clos + d * self.nw, u)
                return tuple(self.path[i] for i in range(self.depth)) + (u,)
            u = lowest_bit(self.ext + d * self.nw, self.nw)
            if u < 0:
                self.depth -= 1
                continue
            clear_bit(self.ext + d * self.nw, u)
            self.nodes += 1
            if self.budget >= 0 and self.nodes > self.budget:
                self.exhausted = True
                raise BudgetExceededError(
                    f"hole search exceeded budget of {self.budget} nodes"
                )
            new_depth = self.depth + 1
            frame = self.banned + self.depth * self.nw
            if self.depth >= 2:
                v = self.path[self.depth - 1]
                for i in range(self.nw):
                    frame[i] = self.banned[d * self.nw + i] \
                        | self.adj[v * self.nw + i]
            else:
                for i in range(self.nw):
                    frame[i] = self.banned[d * self.nw + i]
            set_bit(frame, u)
            for i in range(self.nw):
                cand[i] = self.adj[u * self.nw + i] & self.gt[i] & ~frame[i]
            # closures: candidates adjacent to the anchor, if the resulting
            # cycle length lands in the requested window
            frame = self.clos + self.depth * self.nw
            if (new_depth + 1 >= self.min_len
                    and (not self.has_max or new_depth + 1 <= self.max_len)):
                for i in range(self.nw):
                    frame[i] = cand[i] & self.adj[self.anchor * self.nw + i]
                if self.depth >= 2:
                    # kill reflections: closing vertex must exceed the second
                    v = self.path[1]
                    for i in range(v + 1):
                        clear_bit(frame, i)
            else:
                memset(frame, 0, self.nw * sizeof(u64))
            # extensions: candidates not adjacent to the anchor
            frame = self.ext + self.depth * self.nw
            if self.has_max and new_depth + 2 > self.max_len:
                memset(frame, 0, self.nw * sizeof(u64))
            else:
                for i in range(self.nw):
                    frame[i] = cand[i] \
                        & ~self.adj[self.anchor * self.nw + i]
                if self.has_max and any_bit(frame, self.nw):
                    edges_used = new_depth - 1
                    lo = self.min_len - edges_used
                    if lo < 2:
                        lo = 2
                    hi = self.max_len - edges_used
                    for i in range(self.nw):
                        self.live[i] = self.gt[i] \
                            & ~self.banned[self.depth * self.nw + i]
                    if not self._completion_feasible(self.live, u, lo, hi):
                        memset(frame, 0, self.nw * sizeof(u64))
            if (any_bit(self.clos + self.depth * self.nw, self.nw)
                    or any_bit(self.ext + self.depth * self.nw, self.nw)):
                self.path[self.depth] = u
                self.depth = new_depth


def find_holes(adj, int n, int min_len=4, max_len=None, budget=None):
    """Compiled counterpart of the pure kernel's find_holes."""
    return HoleSearch(adj, n, min_len, max_len, budget)
