from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

import oracles
from gf2mat import _kernels

needs_numba = pytest.mark.skipif(not _kernels.NUMBA_KERNELS, reason="numba not importable")
BACKENDS = [_kernels.NUMPY_KERNELS] + ([_kernels.NUMBA_KERNELS] if _kernels.NUMBA_KERNELS else [])


@pytest.mark.parametrize("kernels", BACKENDS, ids=lambda k: "numba" if k is _kernels.NUMBA_KERNELS else "numpy")
def test_wht_matches_definition(kernels, rng):
    for n in range(0, 7):
        pts = [int(p) for p in np.flatnonzero(rng.random(1 << n) < 0.5)]
        a = np.zeros(1 << n, dtype=np.int64)
        a[pts] = 1
        kernels["wht"](a)
        assert a.tolist() == oracles.wht(n, pts)


@pytest.mark.parametrize("kernels", BACKENDS, ids=lambda k: "numba" if k is _kernels.NUMBA_KERNELS else "numpy")
def test_translates_and_pairs(kernels, rng):
    for _ in range(10):
        n = 6
        mask = rng.random(1 << n) < 0.7
        shifts = rng.integers(0, 1 << n, size=3).astype(np.int64)
        out = kernels["translates_all_in"](mask, shifts)
        want = [all(mask[v ^ int(s)] for s in shifts) for v in range(1 << n)]
        assert out.tolist() == want
        pts = np.flatnonzero(mask).astype(np.int64)
        sup = kernels["pair_xor_support"](pts, 1 << n)
        cnt = kernels["pair_xor_counts"](pts, 1 << n)
        want_cnt = [0] * (1 << n)
        for a in pts:
            for b in pts:
                want_cnt[int(a) ^ int(b)] += 1
        assert cnt.tolist() == want_cnt
        assert sup.tolist() == [c > 0 for c in want_cnt]


@needs_numba
def test_backend_parity_wht_rows(rng):
    a = rng.integers(0, 2, size=(8, 64)).astype(np.int64)
    b = a.copy()
    _kernels.NUMPY_KERNELS["wht_rows"](a)
    _kernels.NUMBA_KERNELS["wht_rows"](b)
    assert (a == b).all()


@needs_numba
@pytest.mark.parametrize("linear", [True, False])
def test_backend_parity_subspace_search(rng, linear):
    for _ in range(40):
        n = int(rng.integers(2, 8))
        full0 = rng.random(1 << n) < 0.3 + 0.6 * rng.random()
        full0[0] = full0[0] or linear
        args = (full0, 0, 0, linear, -1, 0, -1)
        r1 = _kernels.NUMPY_KERNELS["subspace_search"](*args)
        r2 = _kernels.NUMBA_KERNELS["subspace_search"](*args)
        assert r1[0] == r2[0] and r1[1] == r2[1]
        assert list(r1[2]) == list(r2[2]) and r1[3] == r2[3]


def test_env_flag_selects_numpy_backend():
    code = (
        "from gf2mat import BACKEND; from gf2mat.constructions import tripod;"
        "from gf2mat.matroid import critical_number;"
        "print(BACKEND, critical_number(tripod(2).matroid))"
    )
    env = dict(os.environ, GF2MAT_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, chi = out.stdout.split()
    assert backend == "numpy"
    from gf2mat.constructions import tripod
    from gf2mat.matroid import critical_number
    assert int(chi) == critical_number(tripod(2).matroid)
