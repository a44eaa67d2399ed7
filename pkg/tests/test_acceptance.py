"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
"""

from __future__ import annotations

import io
import time
from fractions import Fraction

import numpy as np

import oracles
from gf2mat.cli import run
from gf2mat.constructions import affine_geometry, c5, c5t, tripod, verify_tripod_lemma
from gf2mat.fileformat import emit_matroid, parse_matroid
from gf2mat.fourier import counting_bound_check, is_epsilon_uniform, sumset3_support, triple_counts, wht
from gf2mat.matroid import (
    Matroid,
    critical_number,
    i1t_witness,
    induced_iso_exists,
    is_i1t_free,
    is_triangle_free,
    omega,
)
from gf2mat.pipeline import (
    chi_bound_pipeline,
    extract_x,
    g2_coloring,
    max_tripod_order,
    verify_thirdpoint,
)
from gf2mat.ramsey import bose_burton_bound, bose_burton_exhaustive
from gf2mat.regularity import is_epsilon_regular, key_lemma_witness, refine_to_regular
from gf2mat.samples import random_pointset, triangle_free_i1t_free_samples
from helpers import coset_union

SEED = 20240101


def verdict(num: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = "") -> None:
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    extra = f" | {detail}" if detail else ""
    print(f"\n[{status}] AC{num:02d} {title}: {elapsed:.2f}s (limit {limit:g}s){extra}")
    assert ok, f"criterion {num} failed: {detail}"
    assert within, f"criterion {num} exceeded {limit}s ({elapsed:.2f}s)"


def test_ac01_tripod_arithmetic():
    t0 = time.perf_counter()
    rows = []
    for k in range(6):
        m = tripod(k).matroid
        rows.append(m.n == 3 * k + 1 and len(m) == (4 ** (k + 1) - 1) // 3)
    verdict(1, "tripod dimensions and sizes, k=0..5", all(rows), time.perf_counter() - t0, 1.0,
            "sizes " + " ".join(str(len(tripod(k).matroid)) for k in range(6)))


def test_ac02_tripod_lemma():
    t0 = time.perf_counter()
    recs = [verify_tripod_lemma(k) for k in range(1, 5)]
    ok = all(r.passed and all(r.bullets[b] for b in (1, 2, 3)) for r in recs)
    verdict(2, "three tripod properties, k=1..4", ok, time.perf_counter() - t0, 60.0,
            f"k=4: dim {recs[-1].dimension}, F dim {recs[-1].f_dim}")


def test_ac03_t1_is_c5():
    t0 = time.perf_counter()
    ok = induced_iso_exists(tripod(1).matroid, c5t(4)) and induced_iso_exists(c5t(4), tripod(1).matroid)
    verdict(3, "T1 induced-isomorphic to C5 both ways", ok, time.perf_counter() - t0, 1.0)


def test_ac04_tripods_triangle_free():
    t0 = time.perf_counter()
    ok = all(is_triangle_free(tripod(k).matroid) for k in range(5))
    verdict(4, "tripods triangle-free, k<=4", ok, time.perf_counter() - t0, 10.0)


def test_ac05_fourier_exactness():
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    bad = 0
    for n in (6, 8, 10):
        for _ in range(50):
            x = random_pointset(n, rng, 0.05 + 0.9 * rng.random())
            pts = [int(p) for p in x.points()]
            if triple_counts(x).counts.tolist() != oracles.triple_counts(n, pts):
                bad += 1
            if not wht(x).parseval_holds():
                bad += 1
    verdict(5, "spectral triple counts equal brute force; Parseval exact", bad == 0,
            time.perf_counter() - t0, 30.0, f"150 sets, {bad} mismatches")


def test_ac06_counting_lemma():
    rng = np.random.default_rng(SEED + 6)
    t0 = time.perf_counter()
    checked = failures = 0
    for n in (10, 12):
        for eps in (Fraction(1, 8), Fraction(1, 4)):
            got = 0
            while got < 25:
                x = random_pointset(n, rng, 0.3 + 0.4 * rng.random())
                if not is_epsilon_uniform(x, eps)[0]:
                    continue
                got += 1
                counts = triple_counts(x).counts
                # every u, exactly: counts[u] >= (alpha^3 - eps) |V|^2
                for u in np.flatnonzero(counts == counts.min())[:1]:
                    if not counting_bound_check(x, eps, int(u)):
                        failures += 1
                alpha = Fraction(len(x), 1 << n)
                need = (alpha ** 3 - eps) * (1 << (2 * n))
                failures += int(sum(1 for c in counts.tolist() if c < need))
                checked += 1
    verdict(6, "counting bound for every u on uniform sets", failures == 0 and checked == 100,
            time.perf_counter() - t0, 120.0, f"{checked} sets, {failures} failures")


def test_ac07_regularity():
    rng = np.random.default_rng(SEED + 7)
    t0 = time.perf_counter()
    ok = True
    codims = []
    for i in range(100):
        x = random_pointset(12, rng, 0.2 + 0.6 * rng.random()) if i % 2 else coset_union(12, rng)
        for eps in (Fraction(1, 4), Fraction(1, 10)):
            rep = refine_to_regular(x, eps, 12)
            again = is_epsilon_regular(rep.subspace, x, eps)
            monotone = all(a <= b for a, b in zip(rep.energies, rep.energies[1:]))
            ok &= rep.regular and again.regular and monotone and rep.codim <= 12
            codims.append(rep.codim)
    verdict(7, "refined subspace independently regular; energy monotone", ok, time.perf_counter() - t0,
            300.0, f"200 runs, codim max {max(codims)}, mean {np.mean(codims):.2f}")


def test_ac08_key_lemma():
    rng = np.random.default_rng(SEED + 8)
    t0 = time.perf_counter()
    ok = True
    runs = 0
    linear = 0
    for i in range(100):
        n = (8, 10, 12)[i % 3]
        while True:
            x = random_pointset(n, rng, 0.25 + 0.6 * rng.random()) if i % 2 else coset_union(n, rng, noise=0.02)
            if len(x) >= 1 << (n - 2):
                break
        w = key_lemma_witness(x, Fraction(len(x), 1 << n))
        support = sumset3_support(x)
        inside = bool(support.mask[w.flat.elements()].all())
        ok &= w.verified and inside
        linear += w.linear
        runs += 1
    verdict(8, "key-lemma coset inside X+X+X", ok and runs == 100, time.perf_counter() - t0, 300.0,
            f"{runs} sets, {linear} linear witnesses")


def test_ac09_bose_burton():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 5):
        sweep = bose_burton_exhaustive(n)
        ok &= all(sweep.max_flat_free[t] <= bose_burton_bound(n, t) for t in range(n + 1))
    n3 = bose_burton_exhaustive(3)
    ag = affine_geometry(3)
    ag_ok = len(ag) == 4 and omega(ag) < 2  # four points, no 2-flat
    ok &= n3.max_flat_free[1] == 4 and ag_ok
    verdict(9, "no flat-free set beats the bound, n<=4", ok, time.perf_counter() - t0, 120.0,
            f"n=3,t=1 max {n3.max_flat_free[1]}, AG(2,2) size {len(ag)}")


def test_ac10_critical_number():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 7):
        for m, want in ((Matroid.empty(n), 0), (Matroid.full(n), n), (affine_geometry(n), 1)):
            got = critical_number(m)
            ok &= got == want == oracles.critical_number(n, m.points())
    verdict(10, "chi of empty, full, affine geometry vs exhaustive oracle", ok, time.perf_counter() - t0, 60.0)


def _sample():
    rng = np.random.default_rng(SEED + 11)
    return triangle_free_i1t_free_samples(24, (3, 8), 3, rng)


def test_ac11_claim11():
    t0 = time.perf_counter()
    ms = _sample()
    ok = len(ms) >= 20
    certified = 0
    for m in ms:
        emb = max_tripod_order(m, budget=None)
        certified += emb.certified
        x = extract_x(g2_coloring(m, emb.g1), m, emb.g1)
        ok &= emb.certified and verify_thirdpoint(m, 3, emb.g1, x, certified=True)
    verdict(11, "(X+X+X) misses E under certified maximal k", ok, time.perf_counter() - t0, 600.0,
            f"{len(ms)} matroids, n in {sorted({m.n for m in ms})}, {certified} certified")


def test_ac12_pipeline_soundness():
    t0 = time.perf_counter()
    ms = _sample()
    ok = len(ms) >= 20
    gaps = []
    for m in ms:
        w = chi_bound_pipeline(m, 3)
        chi = critical_number(m)
        ok &= w.verify(m) and m.ground.isdisjoint(w.flat.points()) and w.chi_bound >= chi
        gaps.append(w.chi_bound - chi)
    verdict(12, "pipeline witness disjoint from E and bound >= chi", ok, time.perf_counter() - t0, 600.0,
            f"{len(ms)} matroids, bound - chi in {sorted(set(gaps))}")


def test_ac13_i1t_semantics():
    rng = np.random.default_rng(SEED + 13)
    t0 = time.perf_counter()
    m = c5()
    w = i1t_witness(m, 3)
    ok = w is not None and w.dim == 3 and len(m.ground & w.points()) == 1
    for _ in range(50):
        n = int(rng.integers(1, 9))
        r = Matroid(n, random_pointset(n, rng, rng.random(), nonzero=True))
        if r.ground:
            ok &= not is_i1t_free(r, 1)
    for n in range(1, 4):
        for bits in range(1, 1 << ((1 << n) - 1)):
            r = Matroid.from_points(n, [p + 1 for p in range((1 << n) - 1) if (bits >> p) & 1])
            ok &= not is_i1t_free(r, 1)
    verdict(13, "C5 has an I_(1,3) witness; nonempty never I_(1,1)-free", ok, time.perf_counter() - t0, 1.0,
            f"witness basis {list(w.basis)}")


def _call(argv):
    out, err = io.BytesIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue()


def test_ac14_cli(tmp_path, monkeypatch):
    t0 = time.perf_counter()
    ok = True
    generated = []
    for fam, flag, vals in (("tripod", "-k", range(0, 5)), ("c5t", "-t", range(4, 9)), ("ag", "-n", range(1, 9))):
        for v in vals:
            code, out = _call(["gen", fam, flag, str(v)])
            text = out.decode()
            ok &= code == 0 and emit_matroid(parse_matroid(text)).encode() == out
            generated.append(text)
    f = tmp_path / "c5.txt"
    f.write_text(generated[5])
    bad = tmp_path / "bad.txt"
    bad.write_text("dim: 2\npoints: 4\n")
    codes = {
        0: _call(["chi", str(f)])[0],
        2: _call(["chi", str(bad)])[0],
        3: _call(["ramsey", "gr", "-c", "3", "-r", "2", "--nmax", "5", "--budget", "50"])[0],
    }

    from gf2mat import cli
    from gf2mat.errors import InternalConsistencyError

    def falsified(args):
        raise InternalConsistencyError("simulated lemma failure")

    with monkeypatch.context() as mp:
        mp.setattr(cli, "cmd_chi", falsified)
        codes[4] = _call(["chi", str(f)])[0]
    ok &= all(k == v for k, v in codes.items())
    same = True
    for argv in (["check", "--triangle-free", "--i1t", "3", "--json", str(f)],
                 ["pipeline", "-t", "4", "--json", str(f)],
                 ["verify", "counting", "--trials", "4", "-n", "8", "--json"]):
        outs = {_call(argv + ["--threads", str(k)])[1] for k in (1, 2, 4)}
        same &= len(outs) == 1
    ok &= same
    verdict(14, "round-trip, exit codes, thread-independent reports", ok, time.perf_counter() - t0, 60.0,
            f"{len(generated)} generated files, exit codes {codes}")
