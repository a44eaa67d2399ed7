"""Time the numba kernels against their pure-numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat R] [--seed S]

Each kernel runs on identical inputs under both backends; outputs are
compared before any timing is reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from gf2mat import _kernels


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(rng):
    n = 16
    x = (rng.random(1 << n) < 0.5).astype(np.int64)
    yield "wht n=16", "wht", lambda: (x.copy(),)
    rows = (rng.random((256, 256)) < 0.5).astype(np.int64)
    yield "wht_rows 256x256", "wht_rows", lambda: (rows.copy(),)
    mask = rng.random(1 << 14) < 0.8
    shifts = rng.integers(0, 1 << 14, size=16).astype(np.int64)
    yield "translates_all_in n=14, 16 shifts", "translates_all_in", lambda: (mask, shifts)
    pts = np.flatnonzero(rng.random(1 << 12) < 0.25).astype(np.int64)
    yield "pair_xor_counts n=12, ~1000 pts", "pair_xor_counts", lambda: (pts, 1 << 12)
    s = rng.random(1 << 10) < 0.6
    s[0] = True
    yield "subspace_search linear n=10", "subspace_search", lambda: (s, 0, 0, True, -1, 0, -1)
    yield "subspace_search affine n=10", "subspace_search", lambda: (s, 0, 0, False, -1, 0, -1)


def same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return bool(np.array_equal(np.asarray(a), np.asarray(b)))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not _kernels.NUMBA_KERNELS:
        raise SystemExit("numba is not importable; nothing to compare")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':40s} {'numpy s':>10s} {'numba s':>10s} {'speedup':>8s}")
    for label, key, make in cases(rng):
        npf, nbf = _kernels.NUMPY_KERNELS[key], _kernels.NUMBA_KERNELS[key]
        nbf(*make())  # compile outside the timing
        a, b = npf(*make()), nbf(*make())
        if not same(a, b):
            raise SystemExit(f"{label}: backends disagree")
        t_np = best_of(lambda: npf(*make()), args.repeat)
        t_nb = best_of(lambda: nbf(*make()), args.repeat)
        print(f"{label:40s} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:8.1f}")


if __name__ == "__main__":
    main()
