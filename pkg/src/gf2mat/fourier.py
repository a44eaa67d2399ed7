"""Walsh-Hadamard spectra, uniformity, and exact three-fold sum counts.

Everything here is exact integer/rational arithmetic.  For a set X,
``coeffs[a] = sum_{x in X} (-1)^{a.x}``, which for the hyperplane
``{x : a.x = 0}`` is the signed balance |H & X| - |X \\ H|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

import numpy as np

from . import _kernels
from .errors import InputError, InternalConsistencyError, PreconditionError
from .gf2 import PointSet

MAX_TRIPLE_DIM = 20


def as_fraction(eps) -> Fraction:
    """Accept Fraction, int, 'p/q' strings, or (p, q) pairs; floats are refused."""
    if isinstance(eps, Fraction):
        return eps
    if isinstance(eps, int):
        return Fraction(eps)
    if isinstance(eps, str):
        return Fraction(eps.strip())
    if isinstance(eps, tuple) and len(eps) == 2:
        return Fraction(int(eps[0]), int(eps[1]))
    raise InputError(f"expected an exact rational, got {eps!r}")


@dataclass(frozen=True)
class SpectrumTable:
    n: int
    coeffs: np.ndarray

    @property
    def size(self) -> int:
        """|X|, which is the zero coefficient."""
        return int(self.coeffs[0])

    def balance(self, a: int) -> int:
        return int(self.coeffs[a])

    def parseval_holds(self) -> bool:
        sq = sum(int(c) * int(c) for c in self.coeffs)
        return sq == (1 << self.n) * self.size


@dataclass(frozen=True)
class TripleCountTable:
    n: int
    counts: np.ndarray

    def __getitem__(self, u: int) -> int:
        return int(self.counts[u])

    def support(self) -> PointSet:
        return PointSet(self.n, self.counts > 0)


def wht(x: PointSet) -> SpectrumTable:
    a = x.mask.astype(np.int64)
    _kernels.wht(a)
    a.setflags(write=False)
    return SpectrumTable(x.n, a)


def inverse_wht(values: np.ndarray) -> np.ndarray:
    """Exact inverse transform of an integer table (raises if not integral)."""
    a = np.array(values, dtype=np.int64)
    _kernels.wht(a)
    n = a.shape[0].bit_length() - 1
    if np.any(a & ((1 << n) - 1)):
        raise InternalConsistencyError("inverse transform is not integral")
    return a >> n


def worst_character(spec: SpectrumTable) -> tuple[int, int]:
    """(a, |coeffs[a]|) maximising the imbalance over a != 0; least a on ties."""
    if spec.coeffs.shape[0] == 1:
        return 0, 0
    mags = np.abs(spec.coeffs[1:])
    a = int(np.argmax(mags)) + 1
    return a, int(mags[a - 1])


def is_epsilon_uniform(x: PointSet, eps) -> tuple[bool, int | None]:
    """Uniformity verdict plus the worst nonzero character (None when n = 0)."""
    eps = as_fraction(eps)
    spec = wht(x)
    if x.n == 0:
        return True, None
    a, mag = worst_character(spec)
    # |coeff| <= eps * 2^n  <=>  |coeff| * q <= p * 2^n
    ok = mag * eps.denominator <= eps.numerator * (1 << x.n)
    return ok, a


def triple_counts(x: PointSet) -> TripleCountTable:
    """counts[u] = #{(x1, x2, x3) in X^3 : x1 ^ x2 ^ x3 = u}.

    Cube the spectrum and invert.  Every partial sum of the inverse
    butterfly is bounded by sum |c|^3 <= |X| * 2^n * |X| <= 2^(3n), so int64
    is exact for n <= 20.
    """
    if x.n > MAX_TRIPLE_DIM:
        raise InputError(f"triple_counts is capped at n <= {MAX_TRIPLE_DIM}")
    c = x.mask.astype(np.int64)
    _kernels.wht(c)
    c = c * c * c
    counts = inverse_wht(c)
    if int(counts.sum()) != len(x) ** 3:
        raise InternalConsistencyError("triple counts do not sum to |X|^3")
    counts.setflags(write=False)
    return TripleCountTable(x.n, counts)


def sumset3_support(x: PointSet) -> PointSet:
    """X + X + X."""
    return triple_counts(x).support()


def counting_threshold(x: PointSet, eps) -> Fraction:
    """(alpha^3 - eps) * |V|^2 with alpha = |X| / |V|."""
    eps = as_fraction(eps)
    size = 1 << x.n
    alpha = Fraction(len(x), size)
    return (alpha ** 3 - eps) * size * size


def counting_bound_check(x: PointSet, eps, u: int) -> bool:
    """Whether the three-fold sum count at u meets the uniform-set lower bound."""
    eps = as_fraction(eps)
    ok, _ = is_epsilon_uniform(x, eps)
    if not ok:
        raise PreconditionError("set is not eps-uniform")
    return triple_counts(x)[int(u)] >= counting_threshold(x, eps)


def counting_bound_all(x: PointSet, eps) -> tuple[bool, int | None]:
    """Check every u at once; returns (all hold, first failing u)."""
    eps = as_fraction(eps)
    ok, _ = is_epsilon_uniform(x, eps)
    if not ok:
        raise PreconditionError("set is not eps-uniform")
    counts = triple_counts(x).counts
    need = ceil(counting_threshold(x, eps))
    if need <= 0:
        return True, None
    bad = np.flatnonzero(counts < need)
    return (bad.size == 0), (int(bad[0]) if bad.size else None)
