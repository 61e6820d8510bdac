"""Compare the compiled and pure-Python L-infinity kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times the three kernels on random integer rows (small values take the int64
path, huge values the object path) and one end-to-end verify+audit of an
embedded random tree under each backend.
"""

import argparse
import importlib
import os
import random
import subprocess
import sys
import timeit

from sigdim import _kernels_py

try:
    _ckernels = importlib.import_module("sigdim._ckernels")
except ImportError:
    _ckernels = None


def rows(n, d, bits, seed):
    rng = random.Random(seed)
    hi = 2 ** bits
    return [tuple(rng.randrange(-hi, hi) for _ in range(d)) for _ in range(n)]


def bench(mod, data, repeat):
    near = _kernels_py.nearest_distances(data)
    left = list(range(len(data)))
    right = left[1:] + left[:1]
    out = {}
    for name, fn in [
        ("nearest_distances", lambda: mod.nearest_distances(data)),
        ("close_pairs", lambda: mod.close_pairs(data, near)),
        ("pair_distances", lambda: mod.pair_distances(data, left, right)),
    ]:
        out[name] = min(timeit.repeat(fn, number=1, repeat=repeat))
    return out


END_TO_END = """
import time
from sigdim import BACKEND, audit, embed, gen_random_tree, is_sig_representation
t = gen_random_tree(400, 5)
rep = embed(t)
s = time.perf_counter()
assert is_sig_representation(t, rep).ok and audit(rep).all_pass
print(BACKEND, time.perf_counter() - s)
"""


def end_to_end(pure):
    env = dict(os.environ, SIGDIM_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    backend, secs = out.stdout.split()
    return backend, float(secs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'case':34} {'kernel':18} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n, d, bits in [(500, 3, 40), (1500, 4, 40), (500, 3, 200)]:
        data = rows(n, d, bits, seed=n + bits)
        py = bench(_kernels_py, data, args.repeat)
        cy = bench(_ckernels, data, args.repeat) if _ckernels else None
        for k, v in py.items():
            c = cy[k] if cy else float("nan")
            case = f"n={n} d={d} {bits}-bit"
            print(f"{case:34} {k:18} {v:10.4f} {c:10.4f} {v / c:8.1f}x")
    for pure in (True, False):
        backend, secs = end_to_end(pure)
        print(f"{'verify+audit, 400-vertex tree':34} {backend:18} {secs:10.4f}")


if __name__ == "__main__":
    main()
