"""Vectors, point sets, subspaces and cosets of F_2^n.

Vectors are plain ints; bit ``i`` is coordinate ``e_{i+1}``.  A
``PointSet`` is a boolean membership table over all ``2**n`` vectors.  A
``Subspace`` stores its basis in reduced row-echelon form (pivot = leading
bit, pivots strictly decreasing, each pivot cleared from the other rows),
which makes equality, hashing and coset representatives canonical.

Set operations are practical up to n = 28.  The two exponential searches
``largest_subspace_in`` / ``largest_affine_in`` are meant for n <= 14.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, InputError

MAX_SET_DIM = 28
MAX_SEARCH_DIM = 14


def _check_dim(n: int) -> None:
    if not (0 <= n <= MAX_SET_DIM):
        raise InputError(f"ambient dimension {n} outside [0, {MAX_SET_DIM}]")


def vector_index(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


class PointSet:
    """Immutable subset of F_2^n stored as a membership mask."""

    __slots__ = ("n", "mask", "_hash")

    def __init__(self, n: int, mask: np.ndarray):
        _check_dim(n)
        mask = np.array(mask, dtype=np.bool_, copy=True).ravel()
        if mask.shape[0] != 1 << n:
            raise InputError(f"mask length {mask.shape[0]} != 2**{n}")
        mask.setflags(write=False)
        self.n = n
        self.mask = mask
        self._hash = None

    @classmethod
    def from_points(cls, n: int, points: Iterable[int]) -> PointSet:
        _check_dim(n)
        mask = np.zeros(1 << n, dtype=np.bool_)
        pts = np.fromiter((int(p) for p in points), dtype=np.int64)
        if pts.size and (pts.min() < 0 or pts.max() >= 1 << n):
            raise InputError(f"point outside F_2^{n}")
        mask[pts] = True
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> PointSet:
        return cls(n, np.zeros(1 << n, dtype=np.bool_))

    @classmethod
    def full(cls, n: int) -> PointSet:
        return cls(n, np.ones(1 << n, dtype=np.bool_))

    def points(self) -> np.ndarray:
        """Members as a sorted int64 array."""
        return np.flatnonzero(self.mask).astype(np.int64)

    def __len__(self) -> int:
        return int(np.count_nonzero(self.mask))

    def __bool__(self) -> bool:
        return bool(self.mask.any())

    def __contains__(self, v: int) -> bool:
        v = int(v)
        return 0 <= v < self.mask.shape[0] and bool(self.mask[v])

    def __iter__(self) -> Iterator[int]:
        return (int(p) for p in self.points())

    def _same_space(self, other: PointSet) -> None:
        if not isinstance(other, PointSet) or other.n != self.n:
            raise InputError("point sets live in different ambient spaces")

    def __and__(self, other: PointSet) -> PointSet:
        self._same_space(other)
        return PointSet(self.n, self.mask & other.mask)

    def __or__(self, other: PointSet) -> PointSet:
        self._same_space(other)
        return PointSet(self.n, self.mask | other.mask)

    def __sub__(self, other: PointSet) -> PointSet:
        self._same_space(other)
        return PointSet(self.n, self.mask & ~other.mask)

    def __xor__(self, other: PointSet) -> PointSet:
        self._same_space(other)
        return PointSet(self.n, self.mask ^ other.mask)

    def __le__(self, other: PointSet) -> bool:
        self._same_space(other)
        return not bool((self.mask & ~other.mask).any())

    def __ge__(self, other: PointSet) -> bool:
        return other <= self

    def isdisjoint(self, other: PointSet) -> bool:
        self._same_space(other)
        return not bool((self.mask & other.mask).any())

    def complement(self) -> PointSet:
        return PointSet(self.n, ~self.mask)

    def translate(self, v: int) -> PointSet:
        """The set {x ^ v : x in self}."""
        return PointSet(self.n, self.mask[vector_index(self.n) ^ int(v)])

    def without_zero(self) -> PointSet:
        mask = self.mask.copy()
        mask[0] = False
        return PointSet(self.n, mask)

    def with_zero(self) -> PointSet:
        mask = self.mask.copy()
        mask[0] = True
        return PointSet(self.n, mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.mask.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        pts = self.points()
        body = ", ".join(str(p) for p in pts[:16])
        if pts.size > 16:
            body += f", ... ({pts.size} points)"
        return f"PointSet(n={self.n}, {{{body}}})"


# --------------------------------------------------------------------------
# subspaces


def _leading_bit(v: int) -> int:
    return v.bit_length() - 1


def rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row-echelon basis of span(vectors), pivots decreasing."""
    rows: dict[int, int] = {}  # pivot bit -> row
    for v in vectors:
        v = int(v)
        for p in sorted(rows, reverse=True):
            if (v >> p) & 1:
                v ^= rows[p]
        if v == 0:
            continue
        p = _leading_bit(v)
        # v has no existing pivot bits, so only the new pivot needs clearing
        for q, row in rows.items():
            if (row >> p) & 1:
                rows[q] = row ^ v
        rows[p] = v
    return tuple(rows[p] for p in sorted(rows, reverse=True))


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of F_2^n; its projective flat is the nonzero vectors.

    ``basis`` is in canonical reduced row-echelon form.  Internal
    coordinates put bit j on the basis vector with the j-th smallest pivot,
    so a coordinate subspace span{e1..ek} has identity coordinates.
    """

    n: int
    basis: tuple[int, ...]

    def __post_init__(self):
        _check_dim(self.n)
        canon = rref(self.basis)
        if canon != tuple(self.basis):
            object.__setattr__(self, "basis", canon)
        if canon and canon[0] >= 1 << self.n:
            raise InputError(f"basis vector outside F_2^{self.n}")

    @classmethod
    def span(cls, n: int, vectors: Iterable[int]) -> Subspace:
        return cls(n, rref(vectors))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, tuple(1 << i for i in reversed(range(n))))

    @classmethod
    def coordinate(cls, n: int, coords: Iterable[int]) -> Subspace:
        """span{e_i : i in coords}, coordinates 1-based."""
        return cls.span(n, (1 << (i - 1) for i in coords))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.n - len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_leading_bit(b) for b in self.basis)

    @property
    def pivot_mask(self) -> int:
        m = 0
        for b in self.basis:
            m |= 1 << _leading_bit(b)
        return m

    @property
    def free_bits(self) -> tuple[int, ...]:
        """Non-pivot coordinate bits, ascending."""
        pm = self.pivot_mask
        return tuple(i for i in range(self.n) if not (pm >> i) & 1)

    def reduce(self, v: int) -> int:
        """Least element of the coset v + self (all pivot bits cleared)."""
        v = int(v)
        for b in self.basis:
            if (v >> _leading_bit(b)) & 1:
                v ^= b
        return v

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def contains_subspace(self, other: Subspace) -> bool:
        return all(b in self for b in other.basis)

    def join(self, vectors: Iterable[int]) -> Subspace:
        return Subspace.span(self.n, (*self.basis, *vectors))

    def extended(self, v: int) -> Subspace:
        return Subspace.span(self.n, (*self.basis, v))

    def elements(self) -> np.ndarray:
        """All 2**dim vectors, indexed by internal coordinates."""
        out = np.zeros(1, dtype=np.int64)
        for b in reversed(self.basis):
            out = np.concatenate([out, out ^ b])
        return out

    def to_internal(self, v: int) -> int:
        """Internal coordinates of v (must lie in the subspace)."""
        out = 0
        for j, p in enumerate(reversed(self.pivots)):
            out |= ((int(v) >> p) & 1) << j
        return out

    def from_internal(self, c: int) -> int:
        out = 0
        for j, b in enumerate(reversed(self.basis)):
            if (c >> j) & 1:
                out ^= b
        return out

    def points(self) -> PointSet:
        mask = np.zeros(1 << self.n, dtype=np.bool_)
        mask[self.elements()[1:]] = True
        return PointSet(self.n, mask)

    def annihilator(self) -> Subspace:
        """{a : a.v = 0 for every v in self}."""
        piv = self.pivots
        vecs = []
        for j in self.free_bits:
            v = 1 << j
            for b, p in zip(self.basis, piv):
                if (b >> j) & 1:
                    v |= 1 << p
            vecs.append(v)
        return Subspace.span(self.n, vecs)

    def sort_key(self) -> tuple:
        return (self.dim, self.basis)

    def __repr__(self) -> str:
        return f"Subspace(n={self.n}, dim={self.dim}, basis={list(self.basis)})"


@dataclass(frozen=True)
class AffineFlat:
    """Coset space + shift, with shift the least element of the coset."""

    space: Subspace
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "shift", self.space.reduce(int(self.shift)))

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def is_linear(self) -> bool:
        return self.shift == 0

    def __contains__(self, v: int) -> bool:
        return self.space.reduce(int(v)) == self.shift

    def elements(self) -> np.ndarray:
        return self.space.elements() ^ self.shift

    def as_pointset(self) -> PointSet:
        """Every vector of the coset (0 included when linear)."""
        return PointSet.from_points(self.n, self.elements())

    def __repr__(self) -> str:
        return f"AffineFlat({self.space!r}, shift={self.shift})"


# --------------------------------------------------------------------------
# operations


def closure(points: PointSet | Sequence[int], n: int | None = None) -> Subspace:
    """Smallest subspace containing every given vector."""
    if isinstance(points, PointSet):
        return Subspace.span(points.n, points.points())
    if n is None:
        raise InputError("closure of a plain sequence needs the ambient n")
    return Subspace.span(n, points)


def flat_points(space: Subspace) -> PointSet:
    return space.points()


def coset_shifts(space: Subspace) -> np.ndarray:
    """Canonical coset representatives in increasing order (0 first)."""
    out = np.zeros(1, dtype=np.int64)
    for bit in space.free_bits:
        out = np.concatenate([out, out | (1 << bit)])
    return out


def cosets(space: Subspace) -> list[AffineFlat]:
    return [AffineFlat(space, int(s)) for s in coset_shifts(space)]


def coset_table(space: Subspace) -> np.ndarray:
    """table[j, i] = shift_j ^ (element with internal coordinates i)."""
    return coset_shifts(space)[:, None] ^ space.elements()[None, :]


def complement_flat(space: Subspace) -> Subspace:
    """Coordinate complement: span of the non-pivot standard vectors."""
    return Subspace.span(space.n, (1 << b for b in space.free_bits))


def restrict_to(space: Subspace, s: PointSet) -> PointSet:
    """s intersected with the subspace, in the subspace's own coordinates."""
    return PointSet(space.dim, s.mask[space.elements()])


def embed_from(space: Subspace, s: PointSet) -> PointSet:
    """Inverse of ``restrict_to``: carry an internal set into the ambient space."""
    if s.n != space.dim:
        raise InputError("internal set has wrong dimension")
    mask = np.zeros(1 << space.n, dtype=np.bool_)
    mask[space.elements()[s.mask]] = True
    return PointSet(space.n, mask)


def embed_subspace(space: Subspace, inner: Subspace) -> Subspace:
    """Image in the ambient space of a subspace given in internal coordinates."""
    return Subspace.span(space.n, (space.from_internal(b) for b in inner.basis))


# --------------------------------------------------------------------------
# subspace-in-set search
#
# Subspaces are generated through their greedy basis: b1 = least nonzero
# element, b_{i+1} = least element outside span(b1..bi).  A sequence
# c1 < c2 < ... with each c_i free of the pivot bits of span(c1..c_{i-1}) is
# exactly a greedy basis, so every subspace is visited once, in
# lexicographic order of greedy bases.  The kernel tracks the table
# F_H[a] = "a + H lies in the allowed set", which obeys
# F_{H+c} = F_H & F_H[. ^ c].


def _run_search(full0, base: Subspace, linear: bool, target: int, at_least: int,
                budget: int | None, what: str):
    status, best_dim, chosen, shift, nodes = _kernels.subspace_search(
        full0, base.pivot_mask, base.dim, linear, target, at_least,
        -1 if budget is None else budget,
    )
    found = None
    if best_dim >= 0 and best_dim >= target:
        found = AffineFlat(base.join(int(c) for c in chosen), shift)
    if status == 1:
        raise BudgetExceeded(f"{what} exceeded {budget} nodes", partial=found)
    return found


def find_subspace_within(
    allowed: PointSet, dim: int, base: Subspace | None = None, budget: int | None = None
) -> Subspace | None:
    """Some dim-``dim`` subspace W containing ``base`` whose other cosets of
    ``base`` all lie inside ``allowed`` (``base`` itself is exempt)."""
    if base is None:
        base = Subspace.zero(allowed.n)
    if dim < base.dim or dim > allowed.n:
        return None
    mask = allowed.mask.copy()
    # cosets of base other than base never meet it, so exempting the base
    # elements only frees the base coset itself
    mask[base.elements()] = True
    full0 = _kernels.translates_all_in(mask, base.elements())
    found = _run_search(full0, base, True, dim, 0, budget, "subspace search")
    return None if found is None else found.space


def largest_subspace_in(s: PointSet, budget: int | None = None) -> Subspace | None:
    """Largest subspace (0 included) contained in s; None if 0 is not in s.

    Ties go to the first subspace in greedy-basis order.
    """
    if 0 not in s:
        return None
    found = _run_search(s.mask, Subspace.zero(s.n), True, -1, 0, budget, "subspace search")
    return found.space


def largest_affine_in(s: PointSet, budget: int | None = None) -> AffineFlat | None:
    """Largest coset contained in s; None iff s is empty.

    The search runs over the linear part H, tracking the union of cosets of
    H inside s.  Ties go to the first space in greedy order, then to its
    least contained coset.
    """
    if not s:
        return None
    return _run_search(s.mask, Subspace.zero(s.n), False, -1, 0, budget, "affine search")


def iter_subspaces(n: int, dim: int) -> Iterator[Subspace]:
    """Every dim-``dim`` subspace of F_2^n, in greedy-basis order."""
    idx = vector_index(n)

    def rec(space: Subspace, last: int):
        if space.dim == dim:
            yield space
            return
        ok = (idx & space.pivot_mask) == 0
        ok[: last + 1] = False
        for c in np.flatnonzero(ok):
            yield from rec(space.extended(int(c)), int(c))

    yield from rec(Subspace.zero(n), 0)
