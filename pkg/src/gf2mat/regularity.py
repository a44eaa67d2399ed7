"""Regular subspaces for a set X in F_2^n and the three-fold sumset witness.

A subspace H is eps-regular for X when all but an eps-fraction of its
cosets H + a carry an eps-uniform translated slice (X & (H + a)) + a,
uniformity being measured inside H.  ``refine_to_regular`` finds such an H
by repeatedly cutting H with the most popular non-uniformity witness; the
mean-square coset density can only grow under refinement and is recorded
at every step.

The codimension guarantee of the existence proof is a tower of 2's of
height about eps^-3; it is reported, never enforced.  ``max_codim``
defaults to min(n, 12).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, InternalConsistencyError, PreconditionError
from .fourier import as_fraction, triple_counts
from .gf2 import AffineFlat, PointSet, Subspace, coset_shifts, coset_table


@dataclass(frozen=True)
class CosetVerdict:
    shift: int
    size: int
    density: Fraction
    uniform: bool
    witness_character: int | None  # lifted to F_2^n, None when uniform


@dataclass
class RegularityReport:
    subspace: Subspace
    eps: Fraction
    alpha: Fraction
    coset_verdicts: list[CosetVerdict]
    sparse_set: tuple[int, ...]
    bad_set: tuple[int, ...]
    energy: Fraction
    energies: list[Fraction] = field(default_factory=list)
    characters: list[int] = field(default_factory=list)

    @property
    def codim(self) -> int:
        return self.subspace.codim

    @property
    def regular(self) -> bool:
        # |bad| <= eps * 2^codim
        return len(self.bad_set) * self.eps.denominator <= self.eps.numerator << self.codim


@dataclass(frozen=True)
class KeyLemmaWitness:
    flat: AffineFlat
    good_coset: int
    epsilon_used: Fraction
    verified: bool
    report: RegularityReport

    @property
    def linear(self) -> bool:
        return self.flat.is_linear

    @property
    def codim(self) -> int:
        return self.flat.space.codim


def _check_eps(eps: Fraction) -> None:
    if not 0 < eps < Fraction(1, 2):
        raise PreconditionError(f"eps must lie in (0, 1/2), got {eps}")


def lift_character(h: Subspace, internal: int) -> int:
    """Extend a character of H (internal coordinates) to F_2^n, vanishing on
    the coordinate complement of H."""
    out = 0
    for j, p in enumerate(reversed(h.pivots)):
        if (internal >> j) & 1:
            out |= 1 << p
    return out


def is_epsilon_regular(h: Subspace, x: PointSet, eps, alpha=None) -> RegularityReport:
    eps = as_fraction(eps)
    _check_eps(eps)
    if alpha is None:
        alpha = Fraction(len(x), 1 << x.n)
    alpha = as_fraction(alpha)
    dim = h.dim
    hsize = 1 << dim
    slices = x.mask[coset_table(h)]
    sizes = slices.sum(axis=1)
    spec = slices.astype(np.int64)
    _kernels.wht_rows(spec)
    if dim:
        mags = np.abs(spec[:, 1:])
        worst = np.argmax(mags, axis=1) + 1
        worst_mag = mags[np.arange(mags.shape[0]), worst - 1]
        uniform = worst_mag.astype(object) * eps.denominator <= eps.numerator * hsize
        uniform = uniform.astype(np.bool_)
    else:
        worst = np.zeros(spec.shape[0], dtype=np.int64)
        uniform = np.ones(spec.shape[0], dtype=np.bool_)
    # density < alpha/2  <=>  2 * size * q < p * |H|
    sparse = (2 * sizes.astype(object) * alpha.denominator < alpha.numerator * hsize).astype(np.bool_)
    verdicts = []
    for j, shift in enumerate(coset_shifts(h)):
        uni = bool(uniform[j])
        verdicts.append(
            CosetVerdict(
                shift=int(shift),
                size=int(sizes[j]),
                density=Fraction(int(sizes[j]), hsize),
                uniform=uni,
                witness_character=None if uni else lift_character(h, int(worst[j])),
            )
        )
    energy = Fraction(int((sizes.astype(object) ** 2).sum()), hsize * hsize * len(verdicts))
    return RegularityReport(
        subspace=h,
        eps=eps,
        alpha=alpha,
        coset_verdicts=verdicts,
        sparse_set=tuple(int(j) for j in np.flatnonzero(sparse)),
        bad_set=tuple(int(j) for j in np.flatnonzero(~uniform)),
        energy=energy,
    )


def refine_to_regular(x: PointSet, eps, max_codim: int | None = None, alpha=None) -> RegularityReport:
    eps = as_fraction(eps)
    _check_eps(eps)
    n = x.n
    if max_codim is None:
        max_codim = min(n, 12)
    chars: list[int] = []
    h = Subspace.full(n)
    energies: list[Fraction] = []
    while True:
        report = is_epsilon_regular(h, x, eps, alpha)
        if energies and report.energy < energies[-1]:
            raise InternalConsistencyError("energy decreased under refinement")
        energies.append(report.energy)
        report.energies = list(energies)
        report.characters = list(chars)
        if report.regular:
            return report
        if h.codim >= max_codim:
            raise BudgetExceeded(
                f"no {eps}-regular subspace within codimension {max_codim}", partial=report
            )
        votes = Counter(report.coset_verdicts[j].witness_character for j in report.bad_set)
        top = max(votes.values())
        a = min(c for c, v in votes.items() if v == top)
        chars.append(a)
        h_next = Subspace.span(n, chars).annihilator()
        if h_next.codim != h.codim + 1:
            raise InternalConsistencyError("witness character was trivial on H")
        h = h_next


def key_lemma_witness(x: PointSet, alpha, max_codim: int | None = None) -> KeyLemmaWitness:
    """A coset of a regular subspace lying entirely inside X + X + X."""
    alpha = as_fraction(alpha)
    if not 0 < alpha <= 1:
        raise PreconditionError(f"alpha must lie in (0, 1], got {alpha}")
    if len(x) * alpha.denominator < alpha.numerator << x.n:
        raise PreconditionError(f"|X| = {len(x)} is below alpha * 2^{x.n}")
    eps = alpha ** 3 / 9
    report = refine_to_regular(x, eps, max_codim, alpha)
    excluded = set(report.sparse_set) | set(report.bad_set)
    good = [j for j in range(len(report.coset_verdicts)) if j not in excluded]
    if not good:
        raise InternalConsistencyError("regular subspace has no dense uniform coset")
    a0 = report.coset_verdicts[good[0]].shift
    flat = AffineFlat(report.subspace, a0)
    counts = triple_counts(x).counts
    verified = bool((counts[flat.elements()] > 0).all())
    return KeyLemmaWitness(flat=flat, good_coset=a0, epsilon_used=eps, verified=verified, report=report)
