"""Monochromatic flats, tiny geometric Ramsey numbers, and the Bose-Burton bound."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceeded, InputError, InternalConsistencyError
from .gf2 import PointSet, Subspace, find_subspace_within, iter_subspaces
from .matroid import Matroid, largest_flat_in


@dataclass(frozen=True)
class Coloring:
    """color_of[v - 1] is the colour of the nonzero vector v."""

    n: int
    color_of: tuple[int, ...]
    c: int

    def __post_init__(self):
        if len(self.color_of) != (1 << self.n) - 1:
            raise InputError(f"a colouring of PG({self.n - 1},2) needs {(1 << self.n) - 1} entries")
        if any(not 0 <= col < self.c for col in self.color_of):
            raise InputError(f"colour ids must lie in [0, {self.c})")

    def color(self, v: int) -> int:
        return self.color_of[v - 1]

    def color_class(self, col: int) -> PointSet:
        mask = np.zeros(1 << self.n, dtype=np.bool_)
        mask[1:] = np.asarray(self.color_of) == col
        return PointSet(self.n, mask)


def is_monochromatic(col: Coloring, flat: Subspace) -> bool:
    pts = flat.elements()[1:]
    return len({col.color(int(v)) for v in pts}) <= 1


def find_monochromatic_flat(col: Coloring, r: int) -> tuple[int, Subspace] | None:
    """First (colour, dim-r flat) in colour order, then greedy-basis order."""
    if not 1 <= r <= col.n:
        raise InputError(f"r={r} outside [1, {col.n}]")
    for c in range(col.c):
        found = find_subspace_within(col.color_class(c).with_zero(), r)
        if found is not None:
            if not is_monochromatic(col, found):
                raise InternalConsistencyError("reported flat is not monochromatic")
            return c, found
    return None


# --------------------------------------------------------------------------
# GR(c, r) by exhaustive search


def _flats_by_top_point(n: int, r: int) -> list[list[np.ndarray]]:
    """For each point p, the point lists of dim-r flats whose largest point is p."""
    out: list[list[np.ndarray]] = [[] for _ in range(1 << n)]
    for sp in iter_subspaces(n, r):
        pts = np.sort(sp.elements()[1:])
        out[int(pts[-1])].append(pts[:-1])
    return out


def flat_free_colorings(n: int, c: int, r: int, budget: int | None = None,
                        symmetry: bool = True, limit: int | None = 1) -> tuple[list[Coloring], int]:
    """Colourings of PG(n-1,2) with c colours and no monochromatic dim-r flat.

    Points are coloured in increasing order; a point closes every flat whose
    largest point it is, and those flats are checked on the spot.  With
    ``symmetry`` the enumeration is restricted to colourings in which colours
    first appear in increasing order (colour permutations) and, when
    2^n - 1 > c, e1 and e2 share a colour (any two points can be moved to
    e1, e2 by GL(n, 2), and some colour class has two points).
    Returns up to ``limit`` colourings (all when None) and the node count.
    """
    size = 1 << n
    closing = _flats_by_top_point(n, r) if r <= n else [[] for _ in range(size)]
    colors = np.full(size, -1, dtype=np.int64)
    found: list[Coloring] = []
    nodes = [0]
    pair_rule = symmetry and size - 1 > c and n >= 2

    def rec(p: int, used: int) -> bool:
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            raise BudgetExceeded(f"colouring search exceeded {budget} nodes")
        if p == size:
            found.append(Coloring(n, tuple(int(x) for x in colors[1:]), c))
            return limit is not None and len(found) >= limit
        top = min(c, used + 1) if symmetry else c
        choices = range(top)
        if pair_rule and p == 2:
            choices = [int(colors[1])]
        for col in choices:
            colors[p] = col
            if all(not (colors[rest] == col).all() for rest in closing[p]):
                if rec(p + 1, max(used, col + 1)):
                    return True
        colors[p] = -1
        return False

    rec(1, 0)
    return found, nodes[0]


@dataclass
class GRResult:
    c: int
    r: int
    n: int | None  # None when not found within n_max
    certificates: dict[int, Coloring] = field(default_factory=dict)
    nodes: int = 0


def gr_search(c: int, r: int, n_max: int, budget: int | None = 5_000_000) -> GRResult:
    """Least n <= n_max such that every c-colouring of PG(n-1,2) has a
    monochromatic dim-r flat, with a flat-free certificate for each smaller n."""
    if c < 1 or r < 1:
        raise InputError("need c >= 1 and r >= 1")
    res = GRResult(c, r, None)
    for n in range(1, n_max + 1):
        remaining = None if budget is None else budget - res.nodes
        cols, nodes = flat_free_colorings(n, c, r, budget=remaining)
        res.nodes += nodes
        if not cols:
            res.n = n
            return res
        cert = cols[0]
        if r <= n and find_monochromatic_flat(cert, r) is not None:
            raise InternalConsistencyError("certificate colouring has a monochromatic flat")
        res.certificates[n] = cert
    return res


# --------------------------------------------------------------------------
# Bose-Burton


@dataclass(frozen=True)
class BoseBurtonVerdict:
    n: int
    t: int
    size: int
    omega: int
    contains_flat: bool  # E contains a (t+1)-dimensional flat
    bound: int  # 2^n (1 - 2^-t) = 2^n - 2^(n-t)
    holds: bool | None  # None when a (t+1)-flat exists (bound not applicable)


def bose_burton_bound(n: int, t: int) -> int:
    return (1 << n) - (1 << (n - t)) if t <= n else (1 << n) - 1


def bose_burton_check(m: Matroid, t: int, omega: int | None = None) -> BoseBurtonVerdict:
    if not 0 <= t <= m.n:
        raise InputError(f"t={t} outside [0, {m.n}]")
    w = largest_flat_in(m).dim if omega is None else omega
    contains = w >= t + 1
    bound = bose_burton_bound(m.n, t)
    holds = None
    if not contains:
        holds = len(m) <= bound
        if not holds:
            raise InternalConsistencyError(
                f"|E| = {len(m)} exceeds {bound} with no {t + 1}-flat"
            )
    return BoseBurtonVerdict(m.n, t, len(m), w, contains, bound, holds)


@dataclass
class BoseBurtonSweep:
    n: int
    subsets: int
    max_flat_free: dict[int, int]  # t -> largest |E| with no (t+1)-flat
    bounds: dict[int, int]
    attained_by: dict[int, tuple[int, ...]]  # t -> lexicographically first extremal E


def bose_burton_exhaustive(n: int) -> BoseBurtonSweep:
    """Run ``bose_burton_check`` on every subset of PG(n-1,2), every t <= n."""
    if n > 4:
        raise InputError("the exhaustive sweep is limited to n <= 4")
    npts = (1 << n) - 1
    best = {t: -1 for t in range(n + 1)}
    arg: dict[int, tuple[int, ...]] = {}
    for bits in range(1 << npts):
        pts = [p + 1 for p in range(npts) if (bits >> p) & 1]
        m = Matroid.from_points(n, pts)
        w = largest_flat_in(m).dim
        for t in range(n + 1):
            v = bose_burton_check(m, t, omega=w)
            if not v.contains_flat and v.size > best[t]:
                best[t] = v.size
                arg[t] = tuple(pts)
    return BoseBurtonSweep(
        n=n,
        subsets=1 << npts,
        max_flat_free=best,
        bounds={t: bose_burton_bound(n, t) for t in range(n + 1)},
        attained_by=arg,
    )
