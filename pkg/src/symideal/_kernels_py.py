"""Pure-Python exact elimination kernels.

Reference implementation of the interface in ``symideal._kernels``; the
compiled module must produce identical output (same pivoting: columns left
to right, first nonzero row wins).  Selected automatically when the
compiled extension is unavailable, or forced with SYMIDEAL_PURE=1.
"""

from __future__ import annotations

BACKEND = "pure-python"


def rank_mod_p(rows, p):
    """Rank of an integer matrix over the prime field mod p."""
    m = [[x % p for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        mr = m[r]
        for i in range(r + 1, nrows):
            mi = m[i]
            t = mi[c]
            if t:
                factor = (t * inv) % p
                for j in range(c, ncols):
                    mi[j] = (mi[j] - factor * mr[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def rref_mod_p(rows, p):
    """Reduced row echelon form mod p.

    Returns (matrix, pivots) where pivots[k] is the pivot column of row k;
    rows past len(pivots) are zero.
    """
    m = [[x % p for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        mr = m[r]
        for j in range(c, ncols):
            mr[j] = (mr[j] * inv) % p
        for i in range(nrows):
            if i != r:
                t = m[i][c]
                if t:
                    mi = m[i]
                    for j in range(c, ncols):
                        mi[j] = (mi[j] - t * mr[j]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free elimination.

    Intermediate entries are minors of the input, so every division below
    is exact; coefficients stay integers of moderate size instead of the
    exponential growth plain integer elimination would produce.
    """
    m = [[int(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        mr = m[r]
        pv = mr[c]
        for i in range(r + 1, nrows):
            mi = m[i]
            t = mi[c]
            for j in range(c + 1, ncols):
                mi[j] = (mi[j] * pv - t * mr[j]) // prev
            mi[c] = 0
        prev = pv
        r += 1
        if r == nrows:
            break
    return r
