from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

import oracles
from gf2mat.errors import BudgetExceeded, PreconditionError
from gf2mat.fourier import sumset3_support
from gf2mat.gf2 import PointSet, Subspace
from gf2mat.regularity import (
    is_epsilon_regular,
    key_lemma_witness,
    lift_character,
    refine_to_regular,
)
from helpers import coset_union


def slice_coeff(x, h, shift, internal_char):
    """Brute-force coefficient of (X & (H + shift)) + shift inside H."""
    total = 0
    for i, v in enumerate(h.elements()):
        if int(v) ^ shift in x:
            total += -1 if oracles.popcount(i & internal_char) % 2 else 1
    return total


def test_regularity_verdicts_match_brute_force(rng):
    for _ in range(10):
        n = 6
        x = coset_union(n, rng)
        h = Subspace.span(n, [int(v) for v in rng.integers(1, 64, size=3)])
        eps = Fraction(1, 4)
        rep = is_epsilon_regular(h, x, eps)
        assert len(rep.coset_verdicts) == 1 << h.codim
        for j, cv in enumerate(rep.coset_verdicts):
            coeffs = [abs(slice_coeff(x, h, cv.shift, a)) for a in range(1, 1 << h.dim)]
            worst = max(coeffs) if coeffs else 0
            assert cv.uniform == (worst <= eps * (1 << h.dim))
            assert cv.size == sum(1 for v in h.elements() if int(v) ^ cv.shift in x)
            assert (j in rep.bad_set) == (not cv.uniform)


def test_lift_character_vanishes_on_complement():
    h = Subspace.span(5, [3, 12])
    for c in range(4):
        a = lift_character(h, c)
        for i, v in enumerate(h.elements()):
            assert oracles.popcount(a & int(v)) % 2 == oracles.popcount(i & c) % 2


def test_refine_structured_sets(rng):
    for _ in range(10):
        x = coset_union(8, rng)
        for eps in (Fraction(1, 4), Fraction(1, 10)):
            rep = refine_to_regular(x, eps, 8)
            assert rep.regular
            assert is_epsilon_regular(rep.subspace, x, eps).regular
            assert all(a <= b for a, b in zip(rep.energies, rep.energies[1:]))


def test_refine_budget_raises_with_partial(rng):
    x = coset_union(8, rng, codim=4, noise=0.0)
    with pytest.raises(BudgetExceeded) as exc:
        refine_to_regular(x, Fraction(1, 10), max_codim=0)
    assert exc.value.partial is not None and not exc.value.partial.regular


def test_eps_range_checked():
    x = PointSet(4, np.ones(16, dtype=bool))
    with pytest.raises(PreconditionError):
        refine_to_regular(x, Fraction(1, 2))


def test_key_lemma_structured(rng):
    for _ in range(6):
        x = coset_union(8, rng, noise=0.02)
        if len(x) * 4 < 256:
            continue
        w = key_lemma_witness(x, Fraction(len(x), 256))
        assert w.verified
        support = sumset3_support(x)
        assert all(int(v) in support for v in w.flat.elements())


def test_key_lemma_density_precondition():
    x = PointSet.from_points(6, [1, 2])
    with pytest.raises(PreconditionError):
        key_lemma_witness(x, Fraction(1, 4))
