# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the dot-count kernels; see ``_kernels_py`` for layout."""


def pack_dots(perms, int m):
    cdef Py_ssize_t n = len(perms)
    cdef bytearray out = bytearray(n * m * m)
    cdef unsigned char[:] view = out
    cdef int col[256]
    cdef Py_ssize_t k, i, j, x, pos = 0
    cdef int acc
    if m > 254:
        raise ValueError("ground set too large for byte dot tables")
    for k in range(n):
        u = perms[k]
        for j in range(m + 2):
            col[j] = 0
        for i in range(m):
            col[<int>u[i]] += 1
            acc = 0
            for j in range(m, 0, -1):
                acc += col[j]
                view[pos + j - 1] = <unsigned char>acc
            pos += m
    return bytes(out)


def leq_table(const unsigned char[:] dots_a, Py_ssize_t na,
              const unsigned char[:] dots_b, Py_ssize_t nb, Py_ssize_t mm):
    cdef bytearray out = bytearray(na * nb)
    cdef unsigned char[:] view = out
    cdef Py_ssize_t p, q, e, oa, ob
    cdef bint ok
    for p in range(na):
        oa = p * mm
        for q in range(nb):
            ob = q * mm
            ok = True
            for e in range(mm):
                if dots_a[oa + e] > dots_b[ob + e]:
                    ok = False
                    break
            if ok:
                view[p * nb + q] = 1
    return out


def inversions(u):
    cdef Py_ssize_t n = len(u), a, b
    cdef long c = 0
    cdef int ua
    for a in range(n):
        ua = u[a]
        for b in range(a + 1, n):
            if ua > <int>u[b]:
                c += 1
    return c
