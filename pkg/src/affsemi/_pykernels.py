"""Pure-Python versions of the hot kernels (fallback for ``_ckernels``)."""

from math import gcd


def find_divisor(leads, e):
    """Index of the first exponent in ``leads`` dividing ``e``, or -1."""
    for i, a in enumerate(leads):
        for x, y in zip(a, e):
            if x > y:
                break
        else:
            return i
    return -1


def rank_mod_p(rows, ncols, p):
    """Rank of an integer matrix over F_p (rows are consumed as copies)."""
    M = [[v % p for v in row] for row in rows]
    r = 0
    nrows = len(M)
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
        inv = pow(prow[c], -1, p)
        for i in range(r + 1, nrows):
            f = M[i][c]
            if f:
                f = f * inv % p
                row = M[i]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = (row[j] - f * prow[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def rank_q(rows, ncols):
    """Exact rank over Q by fraction-free elimination with row content removal."""
    M = [list(row) for row in rows]
    r = 0
    nrows = len(M)
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


def koszul_faces(a, E, supp):
    """Faces ``S`` (sorted index tuples) with ``a - sum_{k in S} E[k]`` in ``supp``."""
    if a not in supp:
        return []
    d = len(E)
    faces = [()]
    stack = [((), a)]
    while stack:
        S, b = stack.pop()
        start = S[-1] + 1 if S else 0
        for k in range(start, d):
            c = tuple([x - y for x, y in zip(b, E[k])])
            if c in supp:
                S2 = S + (k,)
                faces.append(S2)
                stack.append((S2, c))
    return faces
