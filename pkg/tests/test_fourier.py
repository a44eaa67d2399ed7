from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from gf2mat.errors import InputError, PreconditionError
from gf2mat.fourier import (
    as_fraction,
    counting_bound_all,
    counting_bound_check,
    counting_threshold,
    inverse_wht,
    is_epsilon_uniform,
    sumset3_support,
    triple_counts,
    wht,
)
from gf2mat.gf2 import PointSet, Subspace

masks = st.integers(min_value=0, max_value=5).flatmap(
    lambda n: st.lists(st.booleans(), min_size=1 << n, max_size=1 << n).map(lambda b: PointSet(n, np.array(b)))
)


@given(masks)
def test_spectrum_matches_definition_and_parseval(x):
    spec = wht(x)
    assert spec.coeffs.tolist() == oracles.wht(x.n, x.points())
    assert spec.parseval_holds()
    assert spec.size == len(x)


@given(masks)
def test_triple_counts_match_oracle(x):
    assert triple_counts(x).counts.tolist() == oracles.triple_counts(x.n, x.points())


@given(masks)
def test_inverse_roundtrip(x):
    assert inverse_wht(wht(x).coeffs).tolist() == x.mask.astype(int).tolist()


def test_hyperplane_balance():
    x = PointSet.from_points(3, [1, 2, 4, 7])
    spec = wht(x)
    for a in range(1, 8):
        inside = sum(1 for v in x.points() if oracles.popcount(int(v) & a) % 2 == 0)
        assert spec.balance(a) == inside - (len(x) - inside)


def test_as_fraction():
    assert as_fraction("1/4") == Fraction(1, 4)
    assert as_fraction((1, 8)) == Fraction(1, 8)
    with pytest.raises(InputError):
        as_fraction(0.25)


def test_subspace_is_not_uniform():
    h = Subspace.span(6, [1, 2, 4, 8, 16])
    x = h.points().with_zero()
    ok, a = is_epsilon_uniform(x, Fraction(1, 4))
    assert not ok and a not in (0, None)


def test_random_sets_uniform_and_counting(rng):
    for _ in range(10):
        x = PointSet(10, rng.random(1024) < 0.5)
        ok, _ = is_epsilon_uniform(x, Fraction(1, 4))
        assert ok
        assert counting_bound_all(x, Fraction(1, 4)) == (True, None)
        assert counting_bound_check(x, Fraction(1, 4), 5)


def test_counting_requires_uniform():
    x = Subspace.span(6, [1, 2, 4, 8, 16]).points().with_zero()
    with pytest.raises(PreconditionError):
        counting_bound_all(x, Fraction(1, 8))


def test_counting_threshold_value():
    x = PointSet(4, np.arange(16) < 8)
    assert counting_threshold(x, Fraction(1, 16)) == (Fraction(1, 8) - Fraction(1, 16)) * 256


def test_sumset_of_subspace_is_subspace():
    h = Subspace.span(5, [3, 5])
    s = sumset3_support(h.points().with_zero())
    assert s == h.points().with_zero()
