"""Backend selection for the pairwise L-infinity kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels_py`` module takes over. Setting ``SIGDIM_PURE_PYTHON=1``
forces the fallback. Both operate on integer rows that share one implicit
denominator, which :func:`scale_to_integers` produces from exact rationals.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

from . import _kernels_py

if os.environ.get("SIGDIM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

nearest_distances = _impl.nearest_distances
close_pairs = _impl.close_pairs
pair_distances = _impl.pair_distances


def scale_to_integers(points, radii=()):
    """Multiply all coordinates and radii by the lcm of their denominators.

    Returns ``(denominator, rows, scaled_radii)`` where ``rows`` is a list of
    int tuples. L-infinity comparisons are invariant under this scaling.
    """
    dens = {Fraction(x).denominator for p in points for x in p}
    dens.update(Fraction(r).denominator for r in radii)
    scale = math.lcm(*dens) if dens else 1
    rows = [tuple(x.numerator * (scale // x.denominator) for x in map(Fraction, p)) for p in points]
    scaled = [r.numerator * (scale // r.denominator) for r in map(Fraction, radii)]
    return scale, rows, scaled
