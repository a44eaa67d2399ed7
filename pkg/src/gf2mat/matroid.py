"""Simple binary matroids (E, PG(n-1, 2)) and their freeness predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels, _parallel
from .errors import BudgetExceeded, InputError
from .gf2 import (
    PointSet,
    Subspace,
    find_subspace_within,
    largest_subspace_in,
    restrict_to,
)


@dataclass(frozen=True)
class Matroid:
    """Ground set E of nonzero vectors inside the ambient PG(n-1, 2)."""

    n: int
    ground: PointSet

    def __post_init__(self):
        if self.ground.n != self.n:
            raise InputError("ground set dimension does not match n")
        if 0 in self.ground:
            raise InputError("the zero vector is not a point")

    @classmethod
    def from_points(cls, n: int, points: Iterable[int]) -> Matroid:
        return cls(n, PointSet.from_points(n, points))

    @classmethod
    def empty(cls, n: int) -> Matroid:
        return cls(n, PointSet.empty(n))

    @classmethod
    def full(cls, n: int) -> Matroid:
        return cls(n, PointSet.full(n).without_zero())

    def points(self) -> np.ndarray:
        return self.ground.points()

    def __len__(self) -> int:
        return len(self.ground)

    def __contains__(self, v: int) -> bool:
        return v in self.ground

    def complement(self) -> Matroid:
        """M^c: every other point of the geometry."""
        return Matroid(self.n, self.ground.complement().without_zero())

    def restrict(self, flat: Subspace) -> Matroid:
        """Induced restriction to ``flat``, in the flat's own coordinates."""
        return Matroid(flat.dim, restrict_to(flat, self.ground))

    def __repr__(self) -> str:
        pts = self.points()
        shown = " ".join(str(p) for p in pts[:12])
        if pts.size > 12:
            shown += " ..."
        return f"Matroid(n={self.n}, |E|={pts.size}: {shown})"


def is_triangle_free(m: Matroid) -> bool:
    pair = _kernels.pair_xor_support(m.points(), 1 << m.n)
    return not bool((pair & m.ground.mask).any())


def find_triangle(m: Matroid) -> tuple[int, int, int] | None:
    pts = m.points()
    for i, a in enumerate(pts):
        for b in pts[i + 1:]:
            if int(a) ^ int(b) in m.ground:
                return int(a), int(b), int(a) ^ int(b)
    return None


def i1t_witness(m: Matroid, t: int, budget: int | None = None) -> Subspace | None:
    """A dim-t flat meeting E in exactly one point, or None.

    Such a flat always contains its single ground point, so anchoring the
    search on each e in E in turn is complete.
    """
    if not 1 <= t <= m.n:
        raise InputError(f"t={t} outside [1, {m.n}]")
    avoid = m.ground.complement()  # 0 is allowed: it is never a point

    def anchored(e: int) -> Subspace | None:
        base = Subspace.span(m.n, [e])
        return find_subspace_within(avoid, t, base=base, budget=budget)

    return _parallel.first_hit(anchored, [int(e) for e in m.points()])


def is_i1t_free(m: Matroid, t: int, budget: int | None = None) -> bool:
    return i1t_witness(m, t, budget) is None


def omega(m: Matroid, budget: int | None = None) -> int:
    """Dimension of the largest flat inside E."""
    return largest_subspace_in(m.ground.with_zero(), budget).dim


def largest_flat_in(m: Matroid, budget: int | None = None) -> Subspace:
    return largest_subspace_in(m.ground.with_zero(), budget)


def critical_number(m: Matroid, budget: int | None = None) -> int:
    return m.n - omega(m.complement(), budget)


# --------------------------------------------------------------------------
# embeddings


def find_embedding(
    m: Matroid, pattern: Matroid, induced: bool, budget: int | None = None
) -> tuple[int, ...] | None:
    """Images of the pattern's standard basis under a suitable injection.

    The injective linear map phi must send pattern points into E and, when
    ``induced``, every other nonzero vector of the pattern's space outside E.
    Basis images are chosen in increasing order with forward checking: once
    e_1..e_i are placed, every pattern vector with top bit i is determined
    and tested immediately.
    """
    p, n = pattern.n, m.n
    if p > n:
        return None
    inside = m.ground.mask
    outside = ~m.ground.mask
    outside[0] = False  # images are nonzero anyway
    pat = pattern.ground.mask
    nodes = [0]

    def rec(i: int, img: np.ndarray) -> tuple[int, ...] | None:
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise BudgetExceeded(f"embedding search exceeded {budget} nodes")
        if i == p:
            return ()
        bit = 1 << i
        q = np.arange(bit, dtype=np.int64)
        hit = pat[q | bit]
        ok = _kernels.translates_all_in(inside, img[hit])
        if induced:
            ok &= _kernels.translates_all_in(outside, img[~hit])
        ok[img] = False  # injectivity: stay outside the current span
        for c in np.flatnonzero(ok):
            c = int(c)
            rest = rec(i + 1, np.concatenate([img, img ^ c]))
            if rest is not None:
                return (c, *rest)
        return None

    return rec(0, np.zeros(1, dtype=np.int64))


def embedding_image(images: tuple[int, ...], n: int) -> Subspace:
    return Subspace.span(n, images)


def induced_iso_exists(m: Matroid, pattern: Matroid, budget: int | None = None) -> bool:
    """Whether some flat of m induces a copy of ``pattern``."""
    return find_embedding(m, pattern, True, budget) is not None


def restriction_embedding_exists(
    m: Matroid, pattern: Matroid, budget: int | None = None
) -> bool:
    """Whether ``pattern`` maps into m as a (not necessarily induced) restriction."""
    return find_embedding(m, pattern, False, budget) is not None


def apply_linear(images: tuple[int, ...], v: int) -> int:
    out = 0
    for j, b in enumerate(images):
        if (v >> j) & 1:
            out ^= b
    return out


def image_of(images: tuple[int, ...], s: PointSet, n: int) -> PointSet:
    """phi(s) for the linear map with the given basis images."""
    table = np.zeros(1, dtype=np.int64)
    for b in images:
        table = np.concatenate([table, table ^ b])
    mask = np.zeros(1 << n, dtype=np.bool_)
    mask[table[s.mask]] = True
    return PointSet(n, mask)

