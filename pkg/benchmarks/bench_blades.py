"""Compare the compiled blade kernel against the pure-Python fallback.

Run from the repository root after an editable install:

    python3 benchmarks/bench_blades.py [--pairs 200000] [--dim 10]

Both backends are imported directly (bypassing the import-time selection in
grstacks.blades), cross-checked for exact agreement on every sampled pair,
then timed on the same workload.
"""

import argparse
import random
import time

from grstacks import _blademask_py as pure

try:
    from grstacks import _blademask as compiled
except ImportError:
    compiled = None


def run(pairs: int, dim: int, seed: int) -> None:
    rng = random.Random(seed)
    top = 1 << dim
    work = [(rng.randrange(top), rng.randrange(top)) for _ in range(pairs)]

    backends = [("pure", pure)]
    if compiled is not None:
        backends.append(("compiled", compiled))

    for s, t in work[: min(pairs, 20000)]:
        want = pure.blade_mul_mask(s, t)
        for name, mod in backends[1:]:
            got = mod.blade_mul_mask(s, t)
            if got != want:
                raise SystemExit(f"{name} disagrees at ({s}, {t}): {got} != {want}")

    results = []
    for name, mod in backends:
        fn = mod.blade_mul_mask
        t0 = time.perf_counter()
        acc = 0
        for s, t in work:
            sign, u = fn(s, t)
            acc ^= u ^ (sign & 2)
        dt = time.perf_counter() - t0
        results.append((name, dt))
        rate = pairs / dt / 1e6
        print(f"{name:9} ({mod.BACKEND:7}): {dt * 1e3:8.1f} ms  {rate:6.2f} M pairs/s  [acc {acc}]")

    if len(results) == 2:
        print(f"speedup: {results[0][1] / results[1][1]:.2f}x")
    else:
        print("compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=200_000)
    ap.add_argument("--dim", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    run(args.pairs, args.dim, args.seed)
