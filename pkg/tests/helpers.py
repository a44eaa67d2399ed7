"""Random structured inputs shared by the suites."""

from __future__ import annotations

import numpy as np

from gf2mat.gf2 import PointSet, Subspace, coset_table


def coset_union(n: int, rng: np.random.Generator, codim: int | None = None, noise: float = 0.05) -> PointSet:
    """Random cosets of a random subspace, with a few bits flipped."""
    if codim is None:
        codim = int(rng.integers(1, min(n, 4) + 1))
    while True:
        h = Subspace.span(n, [int(v) for v in rng.integers(1, 1 << n, size=n - codim)])
        if h.dim == n - codim:
            break
    table = coset_table(h)
    keep = rng.random(table.shape[0]) < 0.5
    keep[int(rng.integers(table.shape[0]))] = True
    mask = np.zeros(1 << n, dtype=bool)
    mask[table[keep].ravel()] = True
    mask ^= rng.random(1 << n) < noise
    return PointSet(n, mask)
