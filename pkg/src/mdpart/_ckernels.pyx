# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdlib cimport malloc, free

IMPLEMENTATION = "cython"


def peel(const long long[::1] indptr, const long long[::1] indices,
         const long long[::1] mults, member, budget):
    cdef Py_ssize_t n = len(member)
    cdef Py_ssize_t v, u, j, top = 0
    cdef bytearray out = bytearray(member)
    cdef unsigned char[::1] alive = out
    cdef long long[::1] bud
    cdef long long *deg = <long long *> malloc(max(n, 1) * sizeof(long long))
    cdef Py_ssize_t *stack = <Py_ssize_t *> malloc(max(n, 1) * sizeof(Py_ssize_t))
    cdef unsigned char *queued = <unsigned char *> malloc(max(n, 1))
    cdef long long s
    if deg == NULL or stack == NULL or queued == NULL:
        free(deg); free(stack); free(queued)
        raise MemoryError()
    bud = _as_int64(budget)
    try:
        for v in range(n):
            queued[v] = 0
            deg[v] = 0
            if alive[v]:
                s = 0
                for j in range(indptr[v], indptr[v + 1]):
                    if alive[indices[j]]:
                        s += mults[j]
                deg[v] = s
        for v in range(n - 1, -1, -1):
            if alive[v] and deg[v] < bud[v]:
                queued[v] = 1
                stack[top] = v
                top += 1
        while top > 0:
            top -= 1
            v = stack[top]
            alive[v] = 0
            for j in range(indptr[v], indptr[v + 1]):
                u = indices[j]
                if alive[u]:
                    deg[u] -= mults[j]
                    if not queued[u] and deg[u] < bud[u]:
                        queued[u] = 1
                        stack[top] = u
                        top += 1
    finally:
        free(deg)
        free(stack)
        free(queued)
    return out


cdef long long[::1] _as_int64(seq):
    from array import array
    if isinstance(seq, array) and seq.typecode == "q":
        return seq
    return array("q", seq)


cdef bint _split_ok(const long long[::1] mat, int n, unsigned long long mask,
                    const long long[::1] a, const long long[::1] b) nogil:
    cdef int v, u
    cdef unsigned long long inside
    cdef long long d
    for v in range(n):
        inside = (mask >> v) & 1
        d = 0
        for u in range(n):
            if ((mask >> u) & 1) == inside:
                d += mat[v * n + u]
        if inside:
            if d < a[v]:
                return False
        elif d < b[v]:
            return False
    return True


def find_feasible_split(int n, dense, a, b):
    if n > 62:
        raise ValueError("enumeration supports at most 62 vertices")
    cdef const long long[::1] mat = _as_int64(dense)
    cdef const long long[::1] av = _as_int64(a)
    cdef const long long[::1] bv = _as_int64(b)
    cdef int idx[64]
    cdef unsigned long long mask
    cdef int k, i, j
    cdef long long found = -1
    with nogil:
        for k in range(1, n):
            # k-subsets of 0..n-1 in lexicographic order of their sorted ids
            for i in range(k):
                idx[i] = i
            while True:
                mask = 0
                for i in range(k):
                    mask |= 1ULL << idx[i]
                if _split_ok(mat, n, mask, av, bv):
                    found = <long long> mask
                    break
                i = k - 1
                while i >= 0 and idx[i] == n - k + i:
                    i -= 1
                if i < 0:
                    break
                idx[i] += 1
                for j in range(i + 1, k):
                    idx[j] = idx[j - 1] + 1
            if found >= 0:
                break
    return found


def find_nice_subset(int n, dense, long long xmask, thresh):
    if n > 62:
        raise ValueError("enumeration supports at most 62 vertices")
    cdef const long long[::1] mat = _as_int64(dense)
    cdef const long long[::1] th = _as_int64(thresh)
    cdef unsigned long long x = <unsigned long long> xmask
    cdef unsigned long long sub = (~x + 1) & x
    cdef int v, u
    cdef long long d
    cdef bint ok
    cdef long long found = -1
    with nogil:
        while sub:
            ok = True
            for v in range(n):
                if (sub >> v) & 1:
                    d = 0
                    for u in range(n):
                        if (sub >> u) & 1:
                            d += mat[v * n + u]
                    if d < th[v]:
                        ok = False
                        break
            if ok:
                found = <long long> sub
                break
            sub = (sub - x) & x
    return found
