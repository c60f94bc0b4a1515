# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels; see ``_pykernels`` for the reference."""

from libc.stdlib cimport malloc, free
from math import gcd


def find_divisor(leads, e):
    """Index of the first exponent in ``leads`` dividing ``e``, or -1."""
    cdef Py_ssize_t n = len(e)
    cdef Py_ssize_t i, j, k = len(leads)
    cdef long *ev
    cdef tuple a
    cdef bint ok
    if n <= 64:
        # small exponent vectors: copy e once into a C buffer
        ev = <long *> malloc(n * sizeof(long))
        if ev == NULL:
            raise MemoryError()
        try:
            for j in range(n):
                ev[j] = e[j]
            for i in range(k):
                a = tuple(leads[i])
                ok = True
                for j in range(n):
                    if <long> a[j] > ev[j]:
                        ok = False
                        break
                if ok:
                    return i
            return -1
        finally:
            free(ev)
    for i in range(k):
        a = tuple(leads[i])
        ok = True
        for j in range(n):
            if a[j] > e[j]:
                ok = False
                break
        if ok:
            return i
    return -1


def rank_mod_p(rows, Py_ssize_t ncols, long long p):
    """Rank of an integer matrix over F_p, ``p < 2**31``."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, j, c, r = 0, piv
    cdef long long f, inv, t
    cdef long long *M
    if nrows == 0 or ncols == 0:
        return 0
    if p >= 2147483648:
        raise ValueError("prime too large for the compiled kernel")
    M = <long long *> malloc(nrows * ncols * sizeof(long long))
    if M == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                M[i * ncols + j] = row[j] % p
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if M[i * ncols + c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    t = M[r * ncols + j]
                    M[r * ncols + j] = M[piv * ncols + j]
                    M[piv * ncols + j] = t
            inv = pow(M[r * ncols + c], -1, p)
            for i in range(r + 1, nrows):
                f = M[i * ncols + c]
                if f:
                    f = f * inv % p
                    for j in range(c, ncols):
                        if M[r * ncols + j]:
                            M[i * ncols + j] = (M[i * ncols + j] - f * M[r * ncols + j]) % p
                            if M[i * ncols + j] < 0:
                                M[i * ncols + j] += p
            r += 1
            if r == nrows:
                break
        return r
    finally:
        free(M)


def rank_q(rows, Py_ssize_t ncols):
    """Exact rank over Q by fraction-free elimination with row content removal."""
    cdef list M = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(M)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list prow, row
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if M[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        M[r], M[piv] = M[piv], M[r]
        prow = M[r]
        a = prow[c]
        for i in range(r + 1, nrows):
            row = M[i]
            f = row[c]
            if not f:
                continue
            g = 0
            for j in range(c, ncols):
                v = row[j] * a - f * prow[j]
                row[j] = v
                g = gcd(g, v)
            if g > 1:
                for j in range(c, ncols):
                    row[j] //= g
        r += 1
        if r == nrows:
            break
    return r


def koszul_faces(tuple a, E, supp):
    """Faces ``S`` (sorted index tuples) with ``a - sum_{k in S} E[k]`` in ``supp``."""
    if a not in supp:
        return []
    cdef Py_ssize_t d = len(E), m = len(a), k, j, start
    cdef list faces = [()]
    cdef list stack = [((), a)]
    cdef tuple S, b, ek, S2
    cdef list buf
    Et = [tuple(e) for e in E]
    while stack:
        S, b = stack.pop()
        start = S[len(S) - 1] + 1 if S else 0
        for k in range(start, d):
            ek = Et[k]
            buf = [0] * m
            for j in range(m):
                buf[j] = b[j] - ek[j]
            c = tuple(buf)
            if c in supp:
                S2 = S + (k,)
                faces.append(S2)
                stack.append((S2, c))
    return faces
