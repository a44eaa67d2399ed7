"""Tripods, five-point circuits, affine geometries, and the tripod checks.

Coordinates are fixed so output is bit-reproducible: T_0 = ({e1}, F_2^1)
and T_k adds x = e_{3k-1}, y = e_{3k}, z = e_{3k+1} on top of
H = span{e1 .. e_{3k-2}}:

    E_k = E_{k-1} + {0, x, y, z}  union  {x + y + z}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import InputError, InternalConsistencyError
from .gf2 import MAX_SET_DIM, PointSet, Subspace
from .matroid import Matroid


def e(i: int) -> int:
    """Standard basis vector e_i (1-based)."""
    return 1 << (i - 1)


@dataclass(frozen=True)
class TripodWitness:
    matroid: Matroid
    order: int
    f_flat: Subspace | None  # None for k = 0
    h_flat: Subspace | None
    xyz: tuple[int, int, int] | None


def tripod_points(k: int) -> np.ndarray:
    pts = np.array([1], dtype=np.int64)
    for j in range(1, k + 1):
        x, y, z = e(3 * j - 1), e(3 * j), e(3 * j + 1)
        pts = np.concatenate([pts, pts ^ x, pts ^ y, pts ^ z, [x ^ y ^ z]])
    return np.sort(pts)


def tripod(k: int) -> TripodWitness:
    if k < 0:
        raise InputError("tripod order must be non-negative")
    n = 3 * k + 1
    if n > MAX_SET_DIM:
        raise InputError(f"T_{k} needs dimension {n} > {MAX_SET_DIM}")
    m = Matroid.from_points(n, tripod_points(k))
    if k == 0:
        return TripodWitness(m, 0, None, None, None)
    f = Subspace.full(n) if k == 1 else None
    if k > 1:
        f = Subspace.coordinate(n, range(1, 5))
        for j in range(2, k + 1):
            x, y, z = e(3 * j - 1), e(3 * j), e(3 * j + 1)
            f = f.join([x ^ y, x ^ z])
    h = Subspace.coordinate(n, range(1, 3 * k - 1))
    xyz = (e(3 * k - 1), e(3 * k), e(3 * k + 1))
    return TripodWitness(m, k, f, h, xyz)


def c5t(t: int) -> Matroid:
    """Five points summing to zero, spanning dimension 4, inside F_2^t."""
    if t < 4:
        raise InputError("C_{5,t} needs t >= 4")
    return Matroid.from_points(t, [1, 2, 4, 8, 15])


def c5() -> Matroid:
    return c5t(4)


def affine_geometry(n: int) -> Matroid:
    """The vectors whose last coordinate is 1 (PG minus the hyperplane x_n = 0)."""
    if n < 1:
        raise InputError("affine geometry needs n >= 1")
    idx = np.arange(1 << n, dtype=np.int64)
    return Matroid(n, PointSet(n, (idx >> (n - 1)) & 1 == 1))


def triangle() -> Matroid:
    return Matroid.full(2)


def i1t(t: int) -> Matroid:
    """One point inside a t-dimensional geometry."""
    return Matroid.from_points(t, [1])


# --------------------------------------------------------------------------
# tripod lemma


class TripodLemmaError(InternalConsistencyError):
    def __init__(self, bullet: int, message: str, point: int | None = None):
        self.bullet = bullet
        self.point = point
        where = "" if point is None else f" (point {point})"
        super().__init__(f"bullet {bullet}: {message}{where}")


@dataclass
class TripodLemmaRecord:
    k: int
    dimension: int
    ground_size: int
    f_dim: int
    f_ground: tuple[int, ...]
    bullets: dict[int, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.bullets.get(b, False) for b in (1, 2, 3))


def _f_flat_independent(k: int) -> Subspace:
    # recomputed from the coordinate recipe, not from tripod()
    vecs = [e(1), e(2), e(3), e(4)]
    for j in range(2, k + 1):
        vecs += [e(3 * j - 1) ^ e(3 * j), e(3 * j - 1) ^ e(3 * j + 1)]
    return Subspace.span(3 * k + 1, vecs)


def verify_tripod_lemma(k: int) -> TripodLemmaRecord:
    """Check the three tripod properties for T_k exhaustively; raise on failure."""
    if k < 1:
        raise InputError("the tripod lemma is stated for k >= 1")
    t = tripod(k)
    m = t.matroid
    n = 3 * k + 1
    rec = TripodLemmaRecord(k=k, dimension=m.n, ground_size=len(m), f_dim=0, f_ground=())

    # bullet 1: dimension 3k+1 and ground spans it
    if m.n != n:
        raise TripodLemmaError(1, f"dimension {m.n} != {n}")
    if Subspace.span(n, m.points()).dim != n:
        raise TripodLemmaError(1, "ground set does not span the geometry")
    rec.bullets[1] = True

    # bullet 2: E & F_k is a five-point circuit spanning dimension 4, and
    # F_k has dimension 2k+2
    f = _f_flat_independent(k)
    rec.f_dim = f.dim
    if f.dim != 2 * k + 2:
        raise TripodLemmaError(2, f"F_{k} has dimension {f.dim} != {2 * k + 2}")
    inside = np.array([int(v) for v in f.elements()[1:] if int(v) in m.ground], dtype=np.int64)
    rec.f_ground = tuple(int(v) for v in inside)
    if inside.size != 5:
        extra = int(inside[5]) if inside.size > 5 else None
        raise TripodLemmaError(2, f"F_{k} meets E in {inside.size} points, expected 5", extra)
    if int(np.bitwise_xor.reduce(inside)) != 0:
        raise TripodLemmaError(2, "the five points do not sum to zero")
    if Subspace.span(n, inside).dim != 4:
        raise TripodLemmaError(2, "the five points do not span dimension 4")
    rec.bullets[2] = True

    # bullet 3: F_k inside E u (E + E)
    sums = _kernels.pair_xor_support(m.points(), 1 << n)
    covered = m.ground.mask | sums
    for v in f.elements()[1:]:
        if not covered[int(v)]:
            raise TripodLemmaError(3, "point of F_k is neither in E nor a sum of two", int(v))
    rec.bullets[3] = True
    return rec
