# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels. Same algorithms and contracts as ``potbranch._pure``."""
from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc


cdef struct Heaps:
    double* w
    double* add
    int64_t* left
    int64_t* right


cdef inline void _push(Heaps* h, int64_t x) noexcept nogil:
    cdef double d = h.add[x]
    if d != 0:
        h.w[x] += d
        if h.left[x] >= 0:
            h.add[h.left[x]] += d
        if h.right[x] >= 0:
            h.add[h.right[x]] += d
        h.add[x] = 0


cdef int64_t _merge(Heaps* h, int64_t a, int64_t b) noexcept nogil:
    cdef int64_t root = -1, tail = -1, t
    while a >= 0 and b >= 0:
        _push(h, a)
        _push(h, b)
        if h.w[b] < h.w[a] or (h.w[b] == h.w[a] and b < a):
            t = a
            a = b
            b = t
        if tail < 0:
            root = a
        else:
            h.left[tail] = a
        tail = a
        t = h.right[a]
        h.right[a] = h.left[a]
        a = t
    if a < 0:
        a = b
    if tail < 0:
        return a
    h.left[tail] = a
    return root


cdef inline int64_t _pop(Heaps* h, int64_t x) noexcept nogil:
    _push(h, x)
    return _merge(h, h.left[x], h.right[x])


cdef inline int64_t _find(int64_t* uf, int64_t x) noexcept nogil:
    while uf[x] >= 0:
        x = uf[x]
    return x


cdef void* _alloc(size_t nbytes) except NULL:
    cdef void* p = malloc(nbytes if nbytes > 0 else 1)
    if p == NULL:
        raise MemoryError()
    return p


def min_arborescence(Py_ssize_t n, Py_ssize_t root, const int64_t[:] src,
                     const int64_t[:] dst, const double[:] w):
    cdef Py_ssize_t m = src.shape[0]
    cdef Heaps h
    h.w = NULL
    h.add = NULL
    h.left = NULL
    h.right = NULL
    cdef int64_t* heap = NULL
    cdef int64_t* uf = NULL
    cdef int64_t* hist_idx = NULL
    cdef int64_t* hist_old = NULL
    cdef int64_t* seen = NULL
    cdef int64_t* in_arc = NULL
    cdef int64_t* path_arc = NULL
    cdef int64_t* path_vtx = NULL
    # per-cycle records: representative, history length, slice of cyc_arcs
    cdef int64_t* cyc_rep = NULL
    cdef int64_t* cyc_time = NULL
    cdef int64_t* cyc_lo = NULL
    cdef int64_t* cyc_hi = NULL
    cdef int64_t* cyc_arcs = NULL
    cdef Py_ssize_t a, s, u, x, b, e, qi, end, i, c
    cdef Py_ssize_t nhist = 0, ncyc = 0, narcs = 0
    cdef int64_t hp, cyc
    cdef double ew
    cdef bint infeasible = False

    try:
        h.w = <double*>_alloc(m * sizeof(double))
        h.add = <double*>_alloc(m * sizeof(double))
        h.left = <int64_t*>_alloc(m * sizeof(int64_t))
        h.right = <int64_t*>_alloc(m * sizeof(int64_t))
        heap = <int64_t*>_alloc(n * sizeof(int64_t))
        uf = <int64_t*>_alloc(n * sizeof(int64_t))
        hist_idx = <int64_t*>_alloc(2 * n * sizeof(int64_t))
        hist_old = <int64_t*>_alloc(2 * n * sizeof(int64_t))
        seen = <int64_t*>_alloc(n * sizeof(int64_t))
        in_arc = <int64_t*>_alloc(n * sizeof(int64_t))
        path_arc = <int64_t*>_alloc(n * sizeof(int64_t))
        path_vtx = <int64_t*>_alloc(n * sizeof(int64_t))
        cyc_rep = <int64_t*>_alloc(n * sizeof(int64_t))
        cyc_time = <int64_t*>_alloc(n * sizeof(int64_t))
        cyc_lo = <int64_t*>_alloc(n * sizeof(int64_t))
        cyc_hi = <int64_t*>_alloc(n * sizeof(int64_t))
        # each popped arc is recorded at most once; pops <= m
        cyc_arcs = <int64_t*>_alloc((m + n) * sizeof(int64_t))

        with nogil:
            for a in range(m):
                h.w[a] = w[a]
                h.add[a] = 0
                h.left[a] = -1
                h.right[a] = -1
            for x in range(n):
                heap[x] = -1
                uf[x] = -1
                seen[x] = -1
                in_arc[x] = -1
            for a in range(m):
                heap[dst[a]] = _merge(&h, heap[dst[a]], a)
            seen[root] = root

            for s in range(n):
                u = s
                qi = 0
                while seen[u] < 0:
                    hp = heap[u]
                    while hp >= 0 and _find(uf, src[hp]) == u:
                        hp = _pop(&h, hp)
                    if hp < 0:
                        infeasible = True
                        break
                    e = hp
                    _push(&h, e)
                    ew = h.w[e]
                    hp = _pop(&h, e)
                    if hp >= 0:
                        h.add[hp] -= ew
                    heap[u] = hp
                    path_arc[qi] = e
                    path_vtx[qi] = u
                    qi += 1
                    seen[u] = s
                    u = _find(uf, src[e])
                    if seen[u] == s:
                        cyc = -1
                        end = qi
                        cyc_time[ncyc] = nhist
                        while True:
                            qi -= 1
                            x = path_vtx[qi]
                            cyc = _merge(&h, cyc, heap[x])
                            # rollback-able union of u and x
                            a = _find(uf, u)
                            b = _find(uf, x)
                            if a == b:
                                break
                            if uf[a] > uf[b]:
                                c = a
                                a = b
                                b = c
                            hist_idx[nhist] = a
                            hist_old[nhist] = uf[a]
                            hist_idx[nhist + 1] = b
                            hist_old[nhist + 1] = uf[b]
                            nhist += 2
                            uf[a] += uf[b]
                            uf[b] = a
                        u = _find(uf, u)
                        heap[u] = cyc
                        seen[u] = -1
                        cyc_rep[ncyc] = u
                        cyc_lo[ncyc] = narcs
                        for i in range(qi, end):
                            cyc_arcs[narcs] = path_arc[i]
                            narcs += 1
                        cyc_hi[ncyc] = narcs
                        ncyc += 1
                if infeasible:
                    break
                for i in range(qi):
                    e = path_arc[i]
                    in_arc[_find(uf, dst[e])] = e

            if not infeasible:
                for c in range(ncyc - 1, -1, -1):
                    while nhist > cyc_time[c]:
                        nhist -= 1
                        uf[hist_idx[nhist]] = hist_old[nhist]
                    e = in_arc[cyc_rep[c]]
                    for i in range(cyc_lo[c], cyc_hi[c]):
                        in_arc[_find(uf, dst[cyc_arcs[i]])] = cyc_arcs[i]
                    in_arc[_find(uf, dst[e])] = e

        if infeasible:
            return None
        return [int(in_arc[x]) for x in range(n) if x != root]
    finally:
        free(h.w)
        free(h.add)
        free(h.left)
        free(h.right)
        free(heap)
        free(uf)
        free(hist_idx)
        free(hist_old)
        free(seen)
        free(in_arc)
        free(path_arc)
        free(path_vtx)
        free(cyc_rep)
        free(cyc_time)
        free(cyc_lo)
        free(cyc_hi)
        free(cyc_arcs)


cdef inline Py_ssize_t _find_compress(int64_t* parent, Py_ssize_t x) noexcept nogil:
    cdef Py_ssize_t r = x, nxt
    while parent[r] != r:
        r = parent[r]
    while parent[x] != r:
        nxt = parent[x]
        parent[x] = r
        x = nxt
    return r


def kruskal_select(Py_ssize_t n, const int64_t[:] u, const int64_t[:] v,
                   const int64_t[:] order):
    cdef int64_t* parent = NULL
    cdef int64_t* rank = NULL
    cdef int64_t* taken = NULL
    cdef Py_ssize_t i, e, a, b, t, cnt = 0
    try:
        parent = <int64_t*>_alloc(n * sizeof(int64_t))
        rank = <int64_t*>_alloc(n * sizeof(int64_t))
        taken = <int64_t*>_alloc(n * sizeof(int64_t))
        with nogil:
            for i in range(n):
                parent[i] = i
                rank[i] = 0
            for i in range(order.shape[0]):
                if cnt == n - 1:
                    break
                e = order[i]
                a = _find_compress(parent, u[e])
                b = _find_compress(parent, v[e])
                if a == b:
                    continue
                if rank[a] < rank[b]:
                    t = a
                    a = b
                    b = t
                parent[b] = a
                if rank[a] == rank[b]:
                    rank[a] += 1
                taken[cnt] = e
                cnt += 1
        return [int(taken[i]) for i in range(cnt)]
    finally:
        free(parent)
        free(rank)
        free(taken)
