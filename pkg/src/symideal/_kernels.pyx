# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact elimination kernels.

Same interface and pivoting rules as symideal._kernels_py.  The mod-p
routines run on C int64 (safe: p < 2**31, so products fit); the
fraction-free rank keeps Python integers because Bareiss intermediates
are minors of the input and overflow any fixed width.
"""

import array

from cpython cimport array

BACKEND = "compiled"


cdef long long _modinv(long long a, long long p):
    # extended Euclid; a in [1, p)
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef array.array _flatten_mod(rows, Py_ssize_t nrows, Py_ssize_t ncols, long long p):
    cdef array.array data = array.array("q", bytes(8 * nrows * ncols))
    cdef long long[::1] m = data
    cdef Py_ssize_t i, j
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            m[i * ncols + j] = row[j] % p
    return data


def rank_mod_p(rows, long long p):
    """Rank of an integer matrix over the prime field mod p."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return 0
    cdef array.array data = _flatten_mod(rows, nrows, ncols, p)
    cdef long long[::1] m = data
    cdef Py_ssize_t r = 0, c, i, j, pivot
    cdef long long inv, factor, t
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            for j in range(ncols):
                t = m[r * ncols + j]
                m[r * ncols + j] = m[pivot * ncols + j]
                m[pivot * ncols + j] = t
        inv = _modinv(m[r * ncols + c], p)
        for i in range(r + 1, nrows):
            t = m[i * ncols + c]
            if t != 0:
                factor = (t * inv) % p
                for j in range(c, ncols):
                    m[i * ncols + j] = (m[i * ncols + j] - factor * m[r * ncols + j]) % p
                    if m[i * ncols + j] < 0:
                        m[i * ncols + j] += p
        r += 1
        if r == nrows:
            break
    return r


def rref_mod_p(rows, long long p):
    """Reduced row echelon form mod p; returns (matrix, pivot columns)."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return [list(row) for row in rows], []
    cdef array.array data = _flatten_mod(rows, nrows, ncols, p)
    cdef long long[::1] m = data
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, pivot
    cdef long long inv, t
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if m[i * ncols + c] != 0:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            for j in range(ncols):
                t = m[r * ncols + j]
                m[r * ncols + j] = m[pivot * ncols + j]
                m[pivot * ncols + j] = t
        inv = _modinv(m[r * ncols + c], p)
        for j in range(c, ncols):
            m[r * ncols + j] = (m[r * ncols + j] * inv) % p
        for i in range(nrows):
            if i != r:
                t = m[i * ncols + c]
                if t != 0:
                    for j in range(c, ncols):
                        m[i * ncols + j] = (m[i * ncols + j] - t * m[r * ncols + j]) % p
                        if m[i * ncols + j] < 0:
                            m[i * ncols + j] += p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = [[m[i * ncols + j] for j in range(ncols)] for i in range(nrows)]
    return out, pivots


def bareiss_rank(rows):
    """Rank of an integer matrix by fraction-free elimination (exact)."""
    cdef list m = [[int(x) for x in row] for row in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t ncols = len(m[0]) if nrows else 0
    cdef Py_ssize_t r = 0, c, i, j, pivot
    if nrows == 0 or ncols == 0:
        return 0
    prev = 1  # Python int: minors overflow fixed-width types
    cdef list mr, mi
    for c in range(ncols):
        pivot = -1
        for i in range(r, nrows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
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
