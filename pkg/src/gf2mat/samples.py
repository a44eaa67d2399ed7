"""Random instance generators used by the property suites and the CLI."""

from __future__ import annotations

import numpy as np

from .gf2 import PointSet, Subspace
from .matroid import Matroid, is_i1t_free, is_triangle_free


def random_pointset(n: int, rng: np.random.Generator, density: float = 0.5,
                    nonzero: bool = False) -> PointSet:
    mask = rng.random(1 << n) < density
    if nonzero:
        mask[0] = False
    return PointSet(n, mask)


def random_gl(n: int, rng: np.random.Generator) -> tuple[int, ...]:
    """Images of e_1 .. e_n under a uniformly random invertible map."""
    while True:
        cols = tuple(int(c) for c in rng.integers(1, 1 << n, size=n)) if n else ()
        if Subspace.span(n, cols).dim == n:
            return cols


def random_surjection(n: int, m: int, rng: np.random.Generator) -> np.ndarray:
    """phi[v] for a random linear map F_2^n -> F_2^m of rank m."""
    while True:
        rows = rng.integers(0, 1 << n, size=m)
        if Subspace.span(n, [int(r) for r in rows]).dim == m:
            break
    v = np.arange(1 << n, dtype=np.int64)
    phi = np.zeros(1 << n, dtype=np.int64)
    for j, r in enumerate(rows):
        parity = np.zeros(1 << n, dtype=np.int64)
        w = v & int(r)
        for b in range(n):
            parity ^= (w >> b) & 1
        phi |= parity << j
    return phi


def transform(m: Matroid, images: tuple[int, ...]) -> Matroid:
    """Image of m under the invertible map e_i -> images[i-1]."""
    v = np.arange(1 << m.n, dtype=np.int64)
    out = np.zeros(1 << m.n, dtype=np.int64)
    for i, img in enumerate(images):
        out ^= ((v >> i) & 1) * img
    return Matroid.from_points(m.n, out[m.points()])


def lift(base: Matroid, n: int, rng: np.random.Generator) -> Matroid:
    """Preimage of base's ground set under a random surjection F_2^n -> F_2^base.n."""
    phi = random_surjection(n, base.n, rng)
    mask = base.ground.mask[phi]
    mask[0] = False
    return Matroid(n, PointSet(n, mask))


def random_maximal_triangle_free(n: int, rng: np.random.Generator) -> Matroid:
    """Greedy triangle-free set over a random point order, maximal by construction."""
    size = 1 << n
    inside = np.zeros(size, dtype=np.bool_)
    blocked = np.zeros(size, dtype=np.bool_)  # v would close a triangle
    blocked[0] = True
    for v in rng.permutation(np.arange(1, size)):
        v = int(v)
        if blocked[v] or inside[v]:
            continue
        pts = np.flatnonzero(inside)
        inside[v] = True
        blocked[pts ^ v] = True
        # any w with w ^ v in E is blocked too
        blocked[np.flatnonzero(inside) ^ v] = True
    return Matroid(n, PointSet(n, inside))


def triangle_free_i1t_free_samples(count: int, n_range: tuple[int, int], t: int,
                                   rng: np.random.Generator, max_tries: int = 10_000) -> list[Matroid]:
    """Nonempty triangle-free, I_(1,t)-free matroids with n in n_range (inclusive).

    Alternates lifts of small triangle-free sets (one or two points in
    dimension <= 2, so every t-flat with t >= 3 meets the kernel) with random
    maximal triangle-free sets filtered by the I_(1,t) decider, each under a
    random change of basis.  Duplicates are dropped.
    """
    lo, hi = n_range
    seen: set[tuple[int, tuple[int, ...]]] = set()
    out: list[Matroid] = []
    smalls = [Matroid.from_points(1, [1]), Matroid.from_points(2, [1, 2]), Matroid.from_points(2, [1])]
    for attempt in range(max_tries):
        if len(out) >= count:
            break
        n = int(rng.integers(lo, hi + 1))
        kind = attempt % 3
        if kind == 0:
            base = smalls[int(rng.integers(len(smalls)))]
            if base.n > n:
                continue
            m = lift(base, n, rng)
        elif kind == 1:
            m = random_maximal_triangle_free(n, rng)
        else:
            m = random_maximal_triangle_free(n, rng)
            keep = rng.random(len(m)) < 0.7
            m = Matroid.from_points(n, m.points()[keep])
        m = transform(m, random_gl(n, rng))
        key = (n, tuple(int(p) for p in m.points()))
        if not m.ground or key in seen:
            continue
        if not is_triangle_free(m) or not is_i1t_free(m, t):
            continue
        seen.add(key)
        out.append(m)
    return out
