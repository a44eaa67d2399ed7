"""Command-line frontend.

Reports go to stdout, diagnostics to stderr.  Exit codes: 0 success,
2 input error, 3 budget exhausted, 4 internal-consistency failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

import numpy as np

from . import __version__, _parallel
from .constructions import affine_geometry, c5t, tripod, verify_tripod_lemma
from .errors import BudgetExceeded, Gf2MatError, InputError, InternalConsistencyError
from .fileformat import emit_coloring, emit_matroid, parse_matroid
from .fourier import (
    as_fraction,
    counting_bound_all,
    is_epsilon_uniform,
    triple_counts,
    wht,
)
from .matroid import Matroid, find_triangle, i1t_witness, largest_flat_in
from .pipeline import PipelineConfig, chi_bound_pipeline
from .ramsey import bose_burton_check, bose_burton_exhaustive, gr_search
from .regularity import is_epsilon_regular, key_lemma_witness, refine_to_regular
from .report import RunReport, digest, emit_report
from .samples import random_pointset

DEFAULT_SEED = 20240101


def _fraction(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}") from None


def _load(path: str) -> tuple[Matroid, str]:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8 text") from None
    return parse_matroid(text), digest(data)


def _args_digest(args: argparse.Namespace, keys: list[str]) -> str:
    return digest(" ".join(f"{k}={getattr(args, k)}" for k in keys))


# --------------------------------------------------------------------------
# commands; each returns (results, inputs digest) or raw text


def cmd_gen(args):
    if args.family == "tripod":
        if args.k is None:
            raise InputError("gen tripod needs -k")
        m = tripod(args.k).matroid
        label = f"tripod of order {args.k}"
    elif args.family == "c5t":
        if args.t is None:
            raise InputError("gen c5t needs -t")
        m = c5t(args.t)
        label = f"five-point circuit in dimension {args.t}"
    else:
        if args.n is None:
            raise InputError("gen ag needs -n")
        m = affine_geometry(args.n)
        label = f"affine geometry AG({args.n - 1},2)"
    if not args.json:
        return emit_matroid(m)
    return {"family": args.family, "label": label, "dim": m.n, "size": len(m), "points": m.points()}, \
        _args_digest(args, ["family", "k", "t", "n"])


def cmd_chi(args):
    m, dg = _load(args.file)
    flat = largest_flat_in(m.complement(), args.budget)
    if not m.ground.isdisjoint(flat.points()):
        raise InternalConsistencyError("complement flat meets E")
    return {"dim": m.n, "size": len(m), "chi": m.n - flat.dim, "witness_flat": flat}, dg


def cmd_check(args):
    m, dg = _load(args.file)
    res: dict = {"dim": m.n, "size": len(m)}
    if not args.triangle_free and args.i1t is None:
        raise InputError("check needs --triangle-free and/or --i1t T")
    if args.triangle_free:
        tri = find_triangle(m)
        res["triangle_free"] = tri is None
        res["triangle"] = list(tri) if tri else None
    if args.i1t is not None:
        w = i1t_witness(m, args.i1t, args.budget)
        res["i1t"] = args.i1t
        res["i1t_free"] = w is None
        if w is not None:
            hits = m.ground & w.points()
            if len(hits) != 1:
                raise InternalConsistencyError("I_(1,t) witness does not meet E in one point")
            res["i1t_witness"] = w
            res["i1t_point"] = int(hits.points()[0])
        else:
            res["i1t_witness"] = None
    return res, dg


def cmd_omega(args):
    m, dg = _load(args.file)
    flat = largest_flat_in(m, args.budget)
    return {"dim": m.n, "size": len(m), "omega": flat.dim, "flat": flat}, dg


def cmd_sumset3(args):
    m, dg = _load(args.file)
    table = triple_counts(m.ground)
    support = table.support()
    res = {"dim": m.n, "size": len(m), "support_size": len(support), "support": support,
           "meets_ground": not support.isdisjoint(m.ground)}
    if args.counts:
        res["counts"] = {str(int(u)): int(table.counts[u]) for u in support.points()}
    return res, dg


def cmd_uniform(args):
    m, dg = _load(args.file)
    ok, a = is_epsilon_uniform(m.ground, args.eps)
    spec = wht(m.ground)
    return {"dim": m.n, "size": len(m), "eps": args.eps, "uniform": ok, "worst_character": a,
            "worst_coefficient": None if a is None else spec.balance(a)}, dg


def _regularity_fields(rep) -> dict:
    return {
        "subspace": rep.subspace,
        "codim": rep.codim,
        "regular": rep.regular,
        "bad_cosets": len(rep.bad_set),
        "sparse_cosets": len(rep.sparse_set),
        "cosets": len(rep.coset_verdicts),
        "energies": rep.energies,
        "characters": rep.characters,
    }


def cmd_regularize(args):
    m, dg = _load(args.file)
    rep = refine_to_regular(m.ground, args.eps, args.max_codim)
    check = is_epsilon_regular(rep.subspace, m.ground, args.eps)
    if not check.regular:
        raise InternalConsistencyError("refined subspace fails the regularity check")
    return {"dim": m.n, "size": len(m), "eps": args.eps, **_regularity_fields(rep)}, dg


def cmd_keylemma(args):
    m, dg = _load(args.file)
    w = key_lemma_witness(m.ground, args.alpha, args.max_codim)
    if not w.verified:
        raise InternalConsistencyError("key lemma witness is not inside X + X + X")
    return {"dim": m.n, "size": len(m), "alpha": args.alpha, "epsilon_used": w.epsilon_used,
            "flat": w.flat, "codim": w.codim, "linear": w.linear, "verified": w.verified}, dg


def cmd_verify(args):
    what = args.what
    if what == "tripod-lemma":
        if args.k is None:
            raise InputError("verify tripod-lemma needs -k")
        rec = verify_tripod_lemma(args.k)
        return {"k": rec.k, "dimension": rec.dimension, "ground_size": rec.ground_size,
                "f_dim": rec.f_dim, "f_ground": list(rec.f_ground),
                "bullets": {str(b): v for b, v in sorted(rec.bullets.items())},
                "passed": rec.passed}, _args_digest(args, ["what", "k"])
    if what == "counting":
        if args.n is None:
            raise InputError("verify counting needs -n")
        rng = np.random.default_rng(args.seed)
        eps = args.eps if args.eps is not None else Fraction(1, 4)
        checked = skipped = 0
        failures = []
        for _ in range(args.trials):
            x = random_pointset(args.n, rng, 0.25 + 0.5 * rng.random())
            if not is_epsilon_uniform(x, eps)[0]:
                skipped += 1
                continue
            ok, u = counting_bound_all(x, eps)
            checked += 1
            if not ok:
                failures.append(u)
        if failures:
            raise InternalConsistencyError(f"counting bound failed at u = {failures[0]}")
        return {"n": args.n, "eps": eps, "trials": args.trials, "checked": checked,
                "skipped_nonuniform": skipped, "all_hold": True}, \
            _args_digest(args, ["what", "n", "trials", "eps", "seed"])
    if what == "bose-burton":
        if args.n is None:
            raise InputError("verify bose-burton needs -n")
        if args.exhaustive:
            sweep = bose_burton_exhaustive(args.n)
            ts = range(args.n + 1) if args.t is None else [args.t]
            rows = {str(t): {"max_flat_free": sweep.max_flat_free[t], "bound": sweep.bounds[t],
                             "attained_by": list(sweep.attained_by.get(t, ())),
                             "holds": sweep.max_flat_free[t] <= sweep.bounds[t]} for t in ts}
            return {"n": args.n, "subsets": sweep.subsets, "exhaustive": True, "by_t": rows}, \
                _args_digest(args, ["what", "n", "t", "exhaustive"])
        if args.t is None:
            raise InputError("verify bose-burton without --exhaustive needs -t")
        rng = np.random.default_rng(args.seed)
        applicable = 0
        for _ in range(args.trials):
            ps = random_pointset(args.n, rng, rng.random(), nonzero=True)
            v = bose_burton_check(Matroid(args.n, ps), args.t)
            applicable += v.holds is not None
        return {"n": args.n, "t": args.t, "exhaustive": False, "trials": args.trials,
                "applicable": applicable, "all_hold": True}, \
            _args_digest(args, ["what", "n", "t", "trials", "seed"])
    raise InputError(f"unknown verification {what!r}")


def cmd_pipeline(args):
    m, dg = _load(args.file)
    cfg = PipelineConfig(k_cap=args.k_cap, node_budget=args.budget, strategy=args.strategy,
                         max_codim=args.max_codim, gr_value=args.gr)
    w = chi_bound_pipeline(m, args.t, cfg)
    return {"dim": m.n, "size": len(m), "t": args.t, "chi_bound": w.chi_bound,
            "witness_flat": w.flat, "verified_disjoint": w.verify(m), "bound_form": w.bound_form,
            "induction_constant": "c_{t-1} (not evaluated)", "trace": w.trace}, dg


def cmd_ramsey(args):
    res = gr_search(args.c, args.r, args.nmax, args.budget)
    certs = {str(n): {"dim": col.n, "color_of": list(col.color_of)} for n, col in sorted(res.certificates.items())}
    if args.certificate_out and res.certificates:
        try:
            with open(args.certificate_out, "w", encoding="utf-8") as fh:
                fh.write(emit_coloring(res.certificates[max(res.certificates)]))
        except OSError as exc:
            raise InputError(f"cannot write {args.certificate_out}: {exc.strerror}") from None
    return {"c": args.c, "r": args.r, "nmax": args.nmax, "gr": res.n, "found": res.n is not None,
            "certificates": certs, "nodes": res.nodes}, \
        _args_digest(args, ["c", "r", "nmax"])


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized suites")
    common.add_argument("--threads", type=int, default=1, help="cap on internal parallelism")
    common.add_argument("--budget", type=int, default=None, help="node budget for searches")
    common.add_argument("--timing", action="store_true", help="print wall time to stderr")

    p = argparse.ArgumentParser(prog="gf2mat", description="Exact computations on binary matroids in PG(n-1,2).")
    p.add_argument("--version", action="version", version=f"gf2mat {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a matroid file")
    g.add_argument("family", choices=["tripod", "c5t", "ag"])
    g.add_argument("-k", type=int)
    g.add_argument("-t", type=int)
    g.add_argument("-n", type=int)
    g.set_defaults(func=cmd_gen)

    for name, func, helptext in [
        ("chi", cmd_chi, "critical number with a witness flat"),
        ("omega", cmd_omega, "largest flat inside E"),
    ]:
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("file")
        s.set_defaults(func=func)

    s = sub.add_parser("check", parents=[common], help="triangle / I_(1,t) freeness")
    s.add_argument("--triangle-free", action="store_true")
    s.add_argument("--i1t", type=int, metavar="T")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("sumset3", parents=[common], help="support of E + E + E")
    s.add_argument("--counts", action="store_true", help="include representation counts")
    s.add_argument("file")
    s.set_defaults(func=cmd_sumset3)

    s = sub.add_parser("uniform", parents=[common], help="eps-uniformity of E")
    s.add_argument("--eps", type=_fraction, required=True)
    s.add_argument("file")
    s.set_defaults(func=cmd_uniform)

    s = sub.add_parser("regularize", parents=[common], help="find an eps-regular subspace for E")
    s.add_argument("--eps", type=_fraction, required=True)
    s.add_argument("--max-codim", type=int, default=None)
    s.add_argument("file")
    s.set_defaults(func=cmd_regularize)

    s = sub.add_parser("keylemma", parents=[common], help="coset inside E + E + E")
    s.add_argument("--alpha", type=_fraction, required=True)
    s.add_argument("--max-codim", type=int, default=None)
    s.add_argument("file")
    s.set_defaults(func=cmd_keylemma)

    s = sub.add_parser("verify", parents=[common], help="built-in verification suites")
    s.add_argument("what", choices=["tripod-lemma", "counting", "bose-burton"])
    s.add_argument("-k", type=int)
    s.add_argument("-n", type=int)
    s.add_argument("-t", type=int)
    s.add_argument("--trials", type=int, default=20)
    s.add_argument("--eps", type=_fraction, default=None)
    s.add_argument("--exhaustive", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("pipeline", parents=[common], help="critical-number bound by tripod descent")
    s.add_argument("-t", type=int, required=True)
    s.add_argument("--strategy", choices=["search", "regularity"], default="search")
    s.add_argument("--k-cap", type=int, default=None)
    s.add_argument("--max-codim", type=int, default=None)
    s.add_argument("--gr", type=int, default=None, help="a known geometric Ramsey value to display")
    s.add_argument("file")
    s.set_defaults(func=cmd_pipeline)

    s = sub.add_parser("ramsey", parents=[common], help="tiny geometric Ramsey numbers")
    s.add_argument("what", choices=["gr"])
    s.add_argument("-c", type=int, required=True)
    s.add_argument("-r", type=int, required=True)
    s.add_argument("--nmax", type=int, default=4)
    s.add_argument("--certificate-out", metavar="FILE",
                   help="write the largest flat-free colouring found as a colouring file")
    s.set_defaults(func=cmd_ramsey)
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        stderr.write("error: --threads must be at least 1\n")
        return 2
    _parallel.set_threads(args.threads)
    start = time.perf_counter()
    try:
        out = args.func(args)
    except BudgetExceeded as exc:
        stderr.write(f"budget exceeded: {exc}\n")
        return exc.exit_code
    except InternalConsistencyError as exc:
        stderr.write(f"internal consistency failure: {exc}\n")
        return exc.exit_code
    except Gf2MatError as exc:
        stderr.write(f"error: {exc}\n")
        return exc.exit_code
    finally:
        _parallel.set_threads(1)
    elapsed = time.perf_counter() - start
    if isinstance(out, str):
        stdout.write(out.encode("utf-8"))
    else:
        results, dg = out
        name = args.command + (f" {args.what}" if hasattr(args, "what") else "") \
            + (f" {args.family}" if hasattr(args, "family") else "")
        report = RunReport(command=name, inputs_digest=dg, results=results, version=__version__,
                           timing={"wall_seconds": elapsed})
        stdout.write(emit_report(report, "json" if args.json else "text"))
    if args.timing:
        stderr.write(f"wall time: {elapsed:.3f} s\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
