"""Pure-Python versions of the hot loops in ``_kernels.pyx``.

Dot tables are packed as ``bytes``: permutation ``k`` of size ``m`` owns the
slice ``[k*m*m, (k+1)*m*m)`` and entry ``(i-1)*m + (j-1)`` holds
``|{x <= i : u(x) >= j}|``.
"""


def pack_dots(perms, m):
    out = bytearray(len(perms) * m * m)
    pos = 0
    for u in perms:
        for i in range(m):
            # row i counts dots in columns >= j among the first i+1 positions
            col = [0] * (m + 2)
            for x in range(i + 1):
                col[u[x]] += 1
            acc = 0
            row = [0] * m
            for j in range(m, 0, -1):
                acc += col[j]
                row[j - 1] = acc
            out[pos:pos + m] = bytes(row)
            pos += m
    return bytes(out)


def leq_table(dots_a, na, dots_b, nb, mm):
    """Flags ``A[p] <= B[q]`` (entrywise dot counts), row-major ``na x nb``."""
    out = bytearray(na * nb)
    rows_a = [dots_a[p * mm:(p + 1) * mm] for p in range(na)]
    rows_b = [dots_b[q * mm:(q + 1) * mm] for q in range(nb)]
    for p, ra in enumerate(rows_a):
        base = p * nb
        for q, rb in enumerate(rows_b):
            for x, y in zip(ra, rb):
                if x > y:
                    break
            else:
                out[base + q] = 1
    return out


def inversions(u):
    n = len(u)
    c = 0
    for a in range(n):
        ua = u[a]
        for b in range(a + 1, n):
            if ua > u[b]:
                c += 1
    return c
