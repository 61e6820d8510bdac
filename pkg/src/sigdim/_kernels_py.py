"""Pure-Python pairwise L-infinity kernels over integer coordinates.

Reference implementation and fallback for the compiled ``_ckernels`` module;
both must return identical results. Rows are tuples of Python ints that
share one implicit denominator (see ``kernels.scale_to_integers``).
"""

from operator import sub


def _dist(a, b):
    return max(map(abs, map(sub, a, b)))


def nearest_distances(rows):
    """Distance from every row to its nearest other row."""
    n = len(rows)
    best = [None] * n
    for i in range(n):
        ri = rows[i]
        bi = best[i]
        for j in range(i + 1, n):
            d = _dist(ri, rows[j])
            if bi is None or d < bi:
                bi = d
            bj = best[j]
            if bj is None or d < bj:
                best[j] = d
        best[i] = bi
    return best


def close_pairs(rows, radii):
    """All ``(i, j)``, ``i < j``, whose open balls of the given radii meet."""
    n = len(rows)
    out = []
    for i in range(n):
        ri = rows[i]
        r = radii[i]
        for j in range(i + 1, n):
            if _dist(ri, rows[j]) < r + radii[j]:
                out.append((i, j))
    return out


def pair_distances(rows, left, right):
    if len(left) != len(right):
        raise ValueError("left and right index lists differ in length")
    n = len(rows)
    for a, b in zip(left, right):
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"pair ({a}, {b}) outside 0..{n - 1}")
    return [_dist(rows[a], rows[b]) for a, b in zip(left, right)]
