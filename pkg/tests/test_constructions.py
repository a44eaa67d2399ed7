from __future__ import annotations

import pytest

from gf2mat.constructions import (
    TripodLemmaError,
    affine_geometry,
    c5,
    c5t,
    e,
    i1t,
    triangle,
    tripod,
    tripod_points,
    verify_tripod_lemma,
)
from gf2mat.errors import InputError
from gf2mat.matroid import is_triangle_free


def recursive_points(k):
    # independent restatement of the tripod recursion on Python sets
    pts = {1}
    for j in range(1, k + 1):
        x, y, z = 1 << (3 * j - 2), 1 << (3 * j - 1), 1 << (3 * j)
        pts = {p ^ s for p in pts for s in (0, x, y, z)} | {x ^ y ^ z}
    return sorted(pts)


@pytest.mark.parametrize("k", range(0, 5))
def test_tripod_points_recursion(k):
    assert tripod_points(k).tolist() == recursive_points(k)
    assert len(tripod(k).matroid) == (4 ** (k + 1) - 1) // 3


def test_small_families():
    assert c5().points().tolist() == [1, 2, 4, 8, 15]
    assert c5t(6).n == 6
    assert len(affine_geometry(4)) == 8
    assert len(triangle()) == 3
    assert i1t(3).points().tolist() == [1]
    assert e(3) == 4
    with pytest.raises(InputError):
        c5t(3)
    with pytest.raises(InputError):
        tripod(-1)


def test_tripod_witness_fields():
    t = tripod(2)
    assert t.f_flat.dim == 6 and t.h_flat.dim == 4
    assert t.xyz == (e(5), e(6), e(7))
    assert tripod(0).f_flat is None


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tripod_lemma(k):
    rec = verify_tripod_lemma(k)
    assert rec.passed and rec.f_dim == 2 * k + 2 and len(rec.f_ground) == 5


def test_tripod_lemma_error_carries_bullet():
    err = TripodLemmaError(2, "broken", 7)
    assert err.bullet == 2 and err.point == 7 and "bullet 2" in str(err)


@pytest.mark.parametrize("k", range(0, 4))
def test_tripods_triangle_free(k):
    assert is_triangle_free(tripod(k).matroid)
