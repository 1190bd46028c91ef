"""Compare the numba kernels with the pure Python fallback.

Each backend runs in its own interpreter because the choice is made at
import time from ``LANTERNKIT_DISABLE_NUMBA``.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import numpy as np
from lanternkit import backend
from lanternkit import _kernels
from lanternkit.families import w_family, n_family, linear_family
from lanternkit.words import reduce
from lanternkit.braids import _sigma, interval_twist
from lanternkit.planar import compile_twist

rng = np.random.default_rng(0)
words = [rng.integers(1, 9, 5000) * rng.choice([-1, 1], 5000) for _ in range(50)]
reduce(words[0], 8)  # warm up (jit compile)
w_family(0, 0, 0)

def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        for cache in (_sigma, interval_twist, compile_twist):
            cache.cache_clear()
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best

repeat = REPEAT
out = {"backend": backend()}
out["reduce_50x5000"] = timed(lambda: [reduce(w, 8) for w in words], repeat)
out["w_family_2_2_2"] = timed(lambda: w_family(2, 2, 2), repeat)
out["n_family_2_2_2"] = timed(lambda: n_family(2, 2, 2), repeat)
out["linear_17_7"] = timed(lambda: linear_family(17, 7), repeat)
print(json.dumps(out))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ, LANTERNKIT_DISABLE_NUMBA="1" if disable else "0")
    code = WORKLOAD.replace("REPEAT", str(repeat))
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    print(f"{'task':<18}{fast['backend']:>12}{slow['backend']:>12}{'speedup':>10}")
    for key in fast:
        if key == "backend":
            continue
        print(f"{key:<18}{fast[key]:>12.4f}{slow[key]:>12.4f}{slow[key] / fast[key]:>9.1f}x")


if __name__ == "__main__":
    main()
