"""Hot inner loops, each in two flavours.

Every kernel has a pure-numpy implementation and a numba ``@njit`` one with
identical results.  The numba path is used when numba imports cleanly and
neither ``GF2MAT_NO_NUMBA=1`` nor ``NUMBA_DISABLE_JIT=1`` is set in the
environment at import time.  ``benchmarks/bench_kernels.py`` times both.

All kernels operate on flat arrays indexed by the integer encoding of
vectors of F_2^n, so an array of length ``2**n`` is a function on F_2^n.
"""

from __future__ import annotations

import os

import numpy as np


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes", "on")


# --------------------------------------------------------------------------
# pure numpy


def wht_numpy(a: np.ndarray) -> np.ndarray:
    """In-place unnormalised Walsh-Hadamard transform of an int64 vector."""
    size = a.shape[0]
    h = 1
    while h < size:
        v = a.reshape(-1, 2, h)
        lo = v[:, 0, :].copy()
        hi = v[:, 1, :]
        v[:, 0, :] += hi
        v[:, 1, :] = lo - hi
        h *= 2
    return a


def wht_rows_numpy(a: np.ndarray) -> np.ndarray:
    """In-place transform of every row of a 2-d int64 array."""
    rows, size = a.shape
    h = 1
    while h < size:
        v = a.reshape(rows, -1, 2, h)
        lo = v[:, :, 0, :].copy()
        hi = v[:, :, 1, :]
        v[:, :, 0, :] += hi
        v[:, :, 1, :] = lo - hi
        h *= 2
    return a


def translates_all_in_numpy(mask: np.ndarray, shifts: np.ndarray) -> np.ndarray:
    """out[v] = AND over s in shifts of mask[v ^ s]  (empty shifts -> all True)."""
    idx = np.arange(mask.shape[0], dtype=np.int64)
    out = np.ones(mask.shape[0], dtype=np.bool_)
    for s in shifts:
        out &= mask[idx ^ s]
    return out


def pair_xor_support_numpy(points: np.ndarray, size: int) -> np.ndarray:
    """Mask of {a ^ b : a, b in points} (includes 0 when points is nonempty)."""
    out = np.zeros(size, dtype=np.bool_)
    if points.shape[0] == 0:
        return out
    # chunk rows to keep the temporary bounded
    step = max(1, (1 << 22) // max(1, points.shape[0]))
    for start in range(0, points.shape[0], step):
        block = points[start:start + step, None] ^ points[None, :]
        out[block.ravel()] = True
    return out


def pair_xor_counts_numpy(points: np.ndarray, size: int) -> np.ndarray:
    """counts[w] = #{(a, b) in points^2 : a ^ b = w}."""
    out = np.zeros(size, dtype=np.int64)
    if points.shape[0] == 0:
        return out
    step = max(1, (1 << 22) // max(1, points.shape[0]))
    for start in range(0, points.shape[0], step):
        block = points[start:start + step, None] ^ points[None, :]
        out += np.bincount(block.ravel(), minlength=size)
    return out


def _autocorr_numpy(f: np.ndarray) -> np.ndarray:
    a = f.astype(np.int64)
    wht_numpy(a)
    a *= a
    wht_numpy(a)
    return a >> (a.shape[0].bit_length() - 1)


def subspace_search_numpy(full0, base_pivmask, base_dim, linear, target, at_least, budget):
    """Greedy-order DFS over subspaces H extending a base.

    ``full0[a]`` says whether the coset a + base is admissible.  Adjoining c
    maps the table F to F & F[. ^ c].  ``linear`` additionally requires the
    coset through 0 to stay admissible.  ``target >= 0`` stops at the first
    subspace of that dimension; otherwise the largest one is returned (the
    first in greedy order among ties) provided its dimension is at least
    ``at_least``.  ``budget < 0`` means unlimited.

    Returns (status, best_dim, chosen, shift, nodes) where status 1 means
    the node budget ran out, chosen holds the adjoined vectors and shift is
    the least admissible coset of the best subspace.
    """
    size = full0.shape[0]
    idx = np.arange(size, dtype=np.int64)
    st = {"best_dim": at_least - 1, "chosen": np.zeros(0, np.int64), "shift": -1,
          "nodes": 0, "status": 0, "found": False}
    path = []

    class _Stop(Exception):
        pass

    def rec(full, pivmask, last):
        st["nodes"] += 1
        if budget >= 0 and st["nodes"] > budget:
            st["status"] = 1
            raise _Stop
        k = base_dim + len(path)
        if k > st["best_dim"]:
            st["best_dim"] = k
            st["chosen"] = np.array(path, dtype=np.int64)
            st["shift"] = int(np.flatnonzero(full)[0])
            st["found"] = True
            if 0 <= target <= k:
                raise _Stop
        goal = target if target >= 0 else st["best_dim"] + 1
        corr = _autocorr_numpy(full)
        ok = ((idx & pivmask) == 0) & (corr >= (1 << goal))
        ok[: last + 1] = False
        if linear:
            ok &= full
        cand = np.flatnonzero(ok)
        for i in range(cand.size):
            goal = target if target >= 0 else st["best_dim"] + 1
            if cand.size - i < (1 << (goal - k)) - 1:
                return
            c = int(cand[i])
            if corr[c] < (1 << goal):
                continue
            path.append(c)
            rec(full & full[idx ^ c], pivmask | (1 << (c.bit_length() - 1)), c)
            path.pop()

    try:
        rec(np.asarray(full0, dtype=np.bool_), base_pivmask, 0)
    except _Stop:
        pass
    if not st["found"]:
        return st["status"], -1, np.zeros(0, np.int64), -1, st["nodes"]
    return st["status"], st["best_dim"], st["chosen"], st["shift"], st["nodes"]


# --------------------------------------------------------------------------
# numba

_NUMBA_IMPORTED = False
try:  # pragma: no cover - exercised implicitly depending on environment
    from numba import njit

    _NUMBA_IMPORTED = True
except ImportError:  # pragma: no cover
    njit = None


if _NUMBA_IMPORTED:

    @njit(cache=True, nogil=True)
    def wht_numba(a):
        size = a.shape[0]
        h = 1
        while h < size:
            for i in range(0, size, 2 * h):
                for j in range(i, i + h):
                    x = a[j]
                    y = a[j + h]
                    a[j] = x + y
                    a[j + h] = x - y
            h *= 2
        return a

    @njit(cache=True, nogil=True)
    def wht_rows_numba(a):
        rows, size = a.shape
        for r in range(rows):
            h = 1
            while h < size:
                for i in range(0, size, 2 * h):
                    for j in range(i, i + h):
                        x = a[r, j]
                        y = a[r, j + h]
                        a[r, j] = x + y
                        a[r, j + h] = x - y
                h *= 2
        return a

    @njit(cache=True, nogil=True)
    def translates_all_in_numba(mask, shifts):
        size = mask.shape[0]
        out = np.ones(size, dtype=np.bool_)
        for v in range(size):
            for s in shifts:
                if not mask[v ^ s]:
                    out[v] = False
                    break
        return out

    @njit(cache=True, nogil=True)
    def pair_xor_support_numba(points, size):
        out = np.zeros(size, dtype=np.bool_)
        m = points.shape[0]
        for i in range(m):
            a = points[i]
            for j in range(i, m):
                out[a ^ points[j]] = True
        return out

    @njit(cache=True, nogil=True)
    def pair_xor_counts_numba(points, size):
        out = np.zeros(size, dtype=np.int64)
        m = points.shape[0]
        for i in range(m):
            a = points[i]
            for j in range(m):
                out[a ^ points[j]] += 1
        return out


    @njit(cache=True, nogil=True)
    def _autocorr_into(full, buf):
        size = full.shape[0]
        for i in range(size):
            buf[i] = 1 if full[i] else 0
        wht_numba(buf)
        for i in range(size):
            buf[i] = buf[i] * buf[i]
        wht_numba(buf)
        shift = 0
        while (1 << shift) < size:
            shift += 1
        for i in range(size):
            buf[i] = buf[i] >> shift

    @njit(cache=True, nogil=True)
    def _leading_bit_numba(c):
        b = -1
        while c > 0:
            c >>= 1
            b += 1
        return b

    @njit(cache=True, nogil=True)
    def subspace_search_numba(full0, base_pivmask, base_dim, linear, target, at_least, budget):
        size = full0.shape[0]
        n = 0
        while (1 << n) < size:
            n += 1
        levels = n - base_dim + 2
        F = np.zeros((levels, size), dtype=np.bool_)
        corr = np.zeros((levels, size), dtype=np.int64)
        cand = np.zeros((levels, size), dtype=np.int64)
        ncand = np.zeros(levels, dtype=np.int64)
        pos = np.zeros(levels, dtype=np.int64)
        chosen = np.zeros(levels, dtype=np.int64)
        pivmask = np.zeros(levels, dtype=np.int64)
        best_dim = at_least - 1
        best_chosen = np.zeros(levels, dtype=np.int64)
        best_len = 0
        best_shift = -1
        found = False
        status = 0
        nodes = 0
        for i in range(size):
            F[0, i] = full0[i]
        pivmask[0] = base_pivmask
        depth = 0
        entering = True
        while depth >= 0:
            k = base_dim + depth
            if entering:
                entering = False
                nodes += 1
                if budget >= 0 and nodes > budget:
                    status = 1
                    break
                if k > best_dim:
                    best_dim = k
                    best_len = depth
                    for j in range(depth):
                        best_chosen[j] = chosen[j + 1]
                    for i in range(size):
                        if F[depth, i]:
                            best_shift = i
                            break
                    found = True
                    if target >= 0 and k >= target:
                        break
                goal = target if target >= 0 else best_dim + 1
                _autocorr_into(F[depth], corr[depth])
                thr = 1 << goal
                last = chosen[depth]
                pm = pivmask[depth]
                m = 0
                for c in range(last + 1, size):
                    if (c & pm) != 0:
                        continue
                    if corr[depth, c] < thr:
                        continue
                    if linear and not F[depth, c]:
                        continue
                    cand[depth, m] = c
                    m += 1
                ncand[depth] = m
                pos[depth] = 0
            goal = target if target >= 0 else best_dim + 1
            need = (1 << (goal - k)) - 1
            i = pos[depth]
            if i >= ncand[depth] or ncand[depth] - i < need:
                depth -= 1
                continue
            c = cand[depth, i]
            pos[depth] = i + 1
            if corr[depth, c] < (1 << goal):
                continue
            for v in range(size):
                F[depth + 1, v] = F[depth, v] and F[depth, v ^ c]
            chosen[depth + 1] = c
            pivmask[depth + 1] = pivmask[depth] | (1 << _leading_bit_numba(c))
            depth += 1
            entering = True
        if not found:
            return status, -1, np.zeros(0, dtype=np.int64), -1, nodes
        return status, best_dim, best_chosen[:best_len].copy(), best_shift, nodes


NUMPY_KERNELS = {
    "wht": wht_numpy,
    "wht_rows": wht_rows_numpy,
    "translates_all_in": translates_all_in_numpy,
    "pair_xor_support": pair_xor_support_numpy,
    "pair_xor_counts": pair_xor_counts_numpy,
    "subspace_search": subspace_search_numpy,
}

NUMBA_KERNELS = (
    {
        "wht": wht_numba,
        "wht_rows": wht_rows_numba,
        "translates_all_in": translates_all_in_numba,
        "pair_xor_support": pair_xor_support_numba,
        "pair_xor_counts": pair_xor_counts_numba,
        "subspace_search": subspace_search_numba,
    }
    if _NUMBA_IMPORTED
    else {}
)

USE_NUMBA = (
    _NUMBA_IMPORTED
    and not _env_flag("GF2MAT_NO_NUMBA")
    and not _env_flag("NUMBA_DISABLE_JIT")
)
BACKEND = "numba" if USE_NUMBA else "numpy"

_active = NUMBA_KERNELS if USE_NUMBA else NUMPY_KERNELS


def wht(a: np.ndarray) -> np.ndarray:
    return _active["wht"](a)


def wht_rows(a: np.ndarray) -> np.ndarray:
    return _active["wht_rows"](a)


def translates_all_in(mask: np.ndarray, shifts: np.ndarray) -> np.ndarray:
    return _active["translates_all_in"](
        np.ascontiguousarray(mask, dtype=np.bool_),
        np.ascontiguousarray(shifts, dtype=np.int64),
    )


def pair_xor_support(points: np.ndarray, size: int) -> np.ndarray:
    return _active["pair_xor_support"](np.ascontiguousarray(points, dtype=np.int64), size)


def pair_xor_counts(points: np.ndarray, size: int) -> np.ndarray:
    return _active["pair_xor_counts"](np.ascontiguousarray(points, dtype=np.int64), size)


def subspace_search(full0, base_pivmask, base_dim, linear, target, at_least, budget):
    status, best_dim, chosen, shift, nodes = _active["subspace_search"](
        np.ascontiguousarray(full0, dtype=np.bool_),
        int(base_pivmask),
        int(base_dim),
        bool(linear),
        int(target),
        int(at_least),
        int(budget),
    )
    return int(status), int(best_dim), np.asarray(chosen, dtype=np.int64), int(shift), int(nodes)
