# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled pairwise L-infinity kernels; mirror ``_kernels_py`` exactly.

When every coordinate and radius fits comfortably in 62 bits the scans run
on C ``long long`` arrays. Otherwise they fall back to Python-object
arithmetic, still without interpreter dispatch in the loops.
"""

from libc.stdlib cimport malloc, free

cdef long long LIMIT = 1LL << 61


cdef bint _fits(rows, extra):
    cdef object x
    for row in rows:
        for x in row:
            if not (-LIMIT < x < LIMIT):
                return False
    for x in extra:
        if not (-LIMIT < x < LIMIT):
            return False
    return True


cdef long long* _pack(rows, Py_ssize_t d) except NULL:
    cdef Py_ssize_t n = len(rows), i, k
    cdef long long* buf = <long long*> malloc(max(n * d, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        row = rows[i]
        for k in range(d):
            buf[i * d + k] = row[k]
    return buf


cdef inline long long _cdist(long long* a, long long* b, Py_ssize_t d) noexcept nogil:
    cdef long long best = 0, diff
    cdef Py_ssize_t k
    for k in range(d):
        diff = a[k] - b[k]
        if diff < 0:
            diff = -diff
        if diff > best:
            best = diff
    return best


cdef object _odist(tuple a, tuple b, Py_ssize_t d):
    cdef object best = 0, diff
    cdef Py_ssize_t k
    for k in range(d):
        diff = a[k] - b[k]
        if diff < 0:
            diff = -diff
        if diff > best:
            best = diff
    return best


def _dim(rows):
    return len(rows[0]) if len(rows) else 0


def nearest_distances(rows):
    cdef Py_ssize_t n = len(rows), d = _dim(rows), i, j
    cdef long long* buf
    cdef long long* best
    cdef long long dist
    cdef list out
    cdef tuple ri
    cdef object od
    if n == 0:
        return []
    if _fits(rows, ()):
        buf = _pack(rows, d)
        best = <long long*> malloc(n * sizeof(long long))
        try:
            for i in range(n):
                best[i] = -1
            with nogil:
                for i in range(n):
                    for j in range(i + 1, n):
                        dist = _cdist(buf + i * d, buf + j * d, d)
                        if best[i] < 0 or dist < best[i]:
                            best[i] = dist
                        if best[j] < 0 or dist < best[j]:
                            best[j] = dist
            return [best[i] if best[i] >= 0 else None for i in range(n)]
        finally:
            free(buf)
            free(best)
    trows = [tuple(r) for r in rows]
    out = [None] * n
    for i in range(n):
        ri = trows[i]
        for j in range(i + 1, n):
            od = _odist(ri, trows[j], d)
            if out[i] is None or od < out[i]:
                out[i] = od
            if out[j] is None or od < out[j]:
                out[j] = od
    return out


def close_pairs(rows, radii):
    cdef Py_ssize_t n = len(rows), d = _dim(rows), i, j
    cdef long long* buf
    cdef long long* rad
    cdef list out = []
    cdef tuple ri
    cdef object r
    if n == 0:
        return out
    if _fits(rows, radii):
        buf = _pack(rows, d)
        rad = <long long*> malloc(n * sizeof(long long))
        try:
            for i in range(n):
                rad[i] = radii[i]
            for i in range(n):
                for j in range(i + 1, n):
                    if _cdist(buf + i * d, buf + j * d, d) < rad[i] + rad[j]:
                        out.append((i, j))
            return out
        finally:
            free(buf)
            free(rad)
    trows = [tuple(x) for x in rows]
    rlist = list(radii)
    for i in range(n):
        ri = trows[i]
        r = rlist[i]
        for j in range(i + 1, n):
            if _odist(ri, trows[j], d) < r + rlist[j]:
                out.append((i, j))
    return out


def pair_distances(rows, left, right):
    cdef Py_ssize_t n = len(rows), d = _dim(rows), m = len(left), p, a, b
    cdef long long* buf
    cdef list out
    if m != len(right):
        raise ValueError("left and right index lists differ in length")
    if m == 0:
        return []
    for p in range(m):
        a = left[p]
        b = right[p]
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"pair ({a}, {b}) outside 0..{n - 1}")
    if _fits(rows, ()):
        buf = _pack(rows, d)
        out = [None] * m
        try:
            for p in range(m):
                a = left[p]
                b = right[p]
                out[p] = _cdist(buf + a * d, buf + b * d, d)
            return out
        finally:
            free(buf)
    trows = [tuple(x) for x in rows]
    return [_odist(trows[left[p]], trows[right[p]], d) for p in range(m)]
