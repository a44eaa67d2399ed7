"""Constructive critical-number bound for triangle-free, I_{1,t}-free matroids.

One descent step, for M = (E, F_2^n):

1. find the largest k with a (not necessarily induced) copy of T_k in M,
   spanning the flat G1;
2. fix the coordinate complement G2 of G1 and colour each v in G2 by
   (v in E, S) with S = {g in G1 : v + g in E};
3. X = points of G2 outside E whose S covers G1 & E.  When k is maximal,
   X + X + X misses E;
4. look for a large subspace (case 2) or affine flat (case 1) inside
   X + X + X.  A subspace W there is a flat disjoint from E.  An affine
   flat a + W means the flat W is I_{1,t-1}-free, so descend into M|W with
   t - 1.

The bound kept is the best of the available cases; every returned flat is
re-checked to be disjoint from E.  If a violation of step 3 shows up while
k is not certified maximal, it yields an explicit T_{k+1} and the step is
redone with the larger tripod.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .constructions import tripod
from .errors import BudgetExceeded, InternalConsistencyError, PreconditionError
from .fourier import sumset3_support
from .gf2 import (
    PointSet,
    Subspace,
    complement_flat,
    embed_subspace,
    largest_affine_in,
    largest_subspace_in,
    restrict_to,
)
from .matroid import Matroid, apply_linear, i1t_witness, is_triangle_free
from .regularity import key_lemma_witness


@dataclass(frozen=True)
class ColorKey:
    e: int
    s: PointSet


@dataclass(frozen=True)
class TripodEmbedding:
    k: int
    images: tuple[int, ...]  # images of the pattern basis e_1 .. e_{3k+1}
    g1: Subspace
    certified: bool  # True when no T_{k+1} exists (exhaustive or by dimension)
    stopped_by: str  # "dimension", "no-embedding", "k_cap", "budget", "extended"


@dataclass
class PipelineConfig:
    k_cap: int | None = None
    node_budget: int | None = 2_000_000
    strategy: str = "search"  # or "regularity"
    max_codim: int | None = None
    gr_value: int | None = None
    check_preconditions: bool = True


@dataclass
class TraceStep:
    t: int
    n: int
    k: int
    k_certified: bool
    g1_dim: int
    x_size: int
    sumset_size: int
    case: str  # "empty", "case1", "case2", "degenerate"
    flat_dim: int  # dimension of the located flat inside X+X+X (in G2)
    codim_used: int  # codimension of that flat inside M
    chi_bound: int
    tripod_extensions: int = 0
    claim10: dict | None = None

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        return d


@dataclass
class ChiWitness:
    n: int
    flat: Subspace
    chi_bound: int
    trace: list[TraceStep] = field(default_factory=list)
    bound_form: str = ""

    def verify(self, m: Matroid) -> bool:
        return m.ground.isdisjoint(self.flat.points())


# --------------------------------------------------------------------------
# steps


def _span_mask(n: int, images) -> np.ndarray:
    table = np.zeros(1, dtype=np.int64)
    for b in images:
        table = np.concatenate([table, table ^ b])
    mask = np.zeros(1 << n, dtype=np.bool_)
    mask[table] = True
    return mask


def _extend_tripods(m: Matroid, copies, first_only: bool, nodes: list[int], budget: int | None):
    """All T_{j+1} copies (up to image point set) grown from the given T_j copies.

    A T_{j+1} copy restricts to a T_j copy P on the span of its first 3j+1
    basis images, plus x, y, z independent modulo span(P) with P + x, P + y,
    P + z inside E and x + y + z in E.  The pattern is symmetric in x, y, z,
    so only x < y < z is tried.
    """
    n = m.n
    size = 1 << n
    emask = m.ground.mask
    vidx = np.arange(size, dtype=np.int64)
    out = []
    seen: set[bytes] = set()
    for images, pts in copies:
        span = _span_mask(n, images)
        a = np.flatnonzero(_kernels.translates_all_in(emask, pts) & ~span)
        for x in a:
            x = int(x)
            nodes[0] += 1
            if budget is not None and nodes[0] > budget:
                raise BudgetExceeded(f"tripod search exceeded {budget} nodes")
            ax = a[(a > x) & ~span[a ^ x]]
            if ax.size < 2:
                continue
            sums = _kernels.pair_xor_support(ax, size)
            shifted = vidx ^ x
            good = sums & emask[shifted] & ~span & ~span[shifted]
            if not good.any():
                continue
            members = np.zeros(size, dtype=np.bool_)
            members[ax] = True
            for s in np.flatnonzero(good):
                s = int(s)
                ys = ax[members[ax ^ s] & (ax < (ax ^ s))]
                for y in ys:
                    y = int(y)
                    z = y ^ s
                    new = np.unique(np.concatenate([pts, pts ^ x, pts ^ y, pts ^ z, [x ^ y ^ z]]))
                    key = new.tobytes()
                    if key in seen:
                        continue
                    seen.add(key)
                    out.append(((*images, x, y, z), new))
                    if first_only:
                        return out
    return out


def find_tripod(m: Matroid, k: int, budget: int | None = None) -> tuple[int, ...] | None:
    """Basis images of some T_k copy in M, or None when none exists."""
    nodes = [0]
    level = [((int(e),), np.array([e], dtype=np.int64)) for e in m.points()]
    for j in range(k):
        if not level or 3 * (j + 1) + 1 > m.n:
            return None
        level = _extend_tripods(m, level, j + 1 == k, nodes, budget)
    return level[0][0] if level else None


def max_tripod_order(m: Matroid, k_cap: int | None = None, budget: int | None = None) -> TripodEmbedding:
    """Largest k <= k_cap such that T_k maps into E, with its image flat.

    Copies are grown level by level; every T_k copy is kept while a T_{k+2}
    could still fit the dimension, so a failure to extend is exhaustive.
    """
    if not m.ground:
        raise PreconditionError("an empty ground set contains no tripod")
    if k_cap is None:
        k_cap = m.n
    nodes = [0]
    level = [((int(e),), np.array([e], dtype=np.int64)) for e in m.points()]
    k = 0
    while True:
        if k + 1 > k_cap:
            stopped = "k_cap"
            break
        if 3 * (k + 1) + 1 > m.n:
            stopped = "dimension"
            break
        first_only = 3 * (k + 2) + 1 > m.n or k + 2 > k_cap
        try:
            nxt = _extend_tripods(m, level, first_only, nodes, budget)
        except BudgetExceeded:
            stopped = "budget"
            break
        if not nxt:
            stopped = "no-embedding"
            break
        level = nxt
        k += 1
    images = level[0][0]
    return TripodEmbedding(
        k=k,
        images=images,
        g1=Subspace.span(m.n, images),
        certified=stopped in ("dimension", "no-embedding"),
        stopped_by=stopped,
    )


def g2_coloring(m: Matroid, g1: Subspace) -> dict[int, ColorKey]:
    g2 = complement_flat(g1)
    g1_pts = g1.elements()[1:]
    out = {}
    for v in g2.elements()[1:]:
        v = int(v)
        hit = m.ground.mask[v ^ g1_pts]
        out[v] = ColorKey(int(v in m.ground), PointSet.from_points(m.n, g1_pts[hit]))
    return out


def color_count_bound(k: int) -> int:
    return 1 << (3 * k + 2)


def extract_x(coloring: dict[int, ColorKey], m: Matroid, g1: Subspace) -> PointSet:
    """Points of G2 outside E whose colour set covers G1 & E (ambient coordinates)."""
    g1_ground = m.ground & g1.points()
    keep = [v for v, key in coloring.items() if key.e == 0 and g1_ground <= key.s]
    return PointSet.from_points(m.n, keep)


def thirdpoint_violation(m: Matroid, x: PointSet) -> tuple[int, int, int] | None:
    """Some (v1, v2, v3) in X^3 with v1 + v2 + v3 in E, or None."""
    hit = sumset3_support(x) & m.ground
    if not hit:
        return None
    u = int(hit.points()[0])
    xs = x.points()
    for a in xs:
        for b in xs:
            c = u ^ int(a) ^ int(b)
            if c in x:
                return int(a), int(b), c
    raise InternalConsistencyError("sumset support disagrees with direct search")


def verify_thirdpoint(m: Matroid, t: int, g1: Subspace, x: PointSet, certified: bool = True) -> bool:
    """Whether (X + X + X) & E is empty; a failure under certified maximality
    is an internal error."""
    if thirdpoint_violation(m, x) is None:
        return True
    if certified:
        raise InternalConsistencyError(
            "X + X + X meets E although the tripod order is certified maximal"
        )
    return False


def extend_tripod(m: Matroid, emb: TripodEmbedding, triple: tuple[int, int, int]) -> TripodEmbedding:
    """A T_{k+1} copy built from a T_k copy and a third-point violation."""
    images = (*emb.images, *triple)
    pattern = tripod(emb.k + 1).matroid
    for p in pattern.points():
        if apply_linear(images, int(p)) not in m.ground:
            raise InternalConsistencyError("extended tripod does not map into E")
    g1 = Subspace.span(m.n, images)
    if g1.dim != 3 * (emb.k + 1) + 1:
        raise InternalConsistencyError("extended tripod map is not injective")
    return TripodEmbedding(emb.k + 1, images, g1, False, "extended")


# --------------------------------------------------------------------------
# descent


def _check_preconditions(m: Matroid, t: int, budget: int | None) -> None:
    if t < 1:
        raise PreconditionError("t must be at least 1")
    if not is_triangle_free(m):
        raise PreconditionError("matroid is not triangle-free")
    if t <= m.n and i1t_witness(m, t, budget) is not None:
        raise PreconditionError(f"matroid is not I_(1,{t})-free")


def chi_bound_pipeline(m: Matroid, t: int, config: PipelineConfig | None = None) -> ChiWitness:
    config = config or PipelineConfig()
    if config.check_preconditions:
        _check_preconditions(m, t, config.node_budget)
    wit = _descend(m, t, config)
    if not wit.verify(m):
        raise InternalConsistencyError("witness flat meets the ground set")
    if wit.chi_bound != m.n - wit.flat.dim:
        raise InternalConsistencyError("witness bound does not match its flat")
    return wit


def _claim10(config: PipelineConfig, dim_n: int, x_size: int) -> dict | None:
    if config.gr_value is None:
        return None
    need = Fraction(1 << dim_n, 1 << config.gr_value) if config.gr_value >= 0 else None
    return {
        "gr_value": config.gr_value,
        "required": str(need),
        "x_size": x_size,
        "holds": x_size >= need,
    }


def _descend(m: Matroid, t: int, config: PipelineConfig) -> ChiWitness:
    n = m.n
    if not m.ground:
        step = TraceStep(t, n, -1, True, 0, 0, 0, "empty", n, 0, 0)
        return ChiWitness(n, Subspace.full(n), 0, [step], "chi = 0")
    if t <= 1:
        raise InternalConsistencyError("nonempty ground set reached t = 1")

    budget = config.node_budget
    emb = max_tripod_order(m, config.k_cap, budget)
    extensions = 0
    while True:
        coloring = g2_coloring(m, emb.g1)
        x = extract_x(coloring, m, emb.g1)
        triple = thirdpoint_violation(m, x)
        if triple is None:
            break
        if emb.certified:
            raise InternalConsistencyError(
                "X + X + X meets E although the tripod order is certified maximal"
            )
        emb = extend_tripod(m, emb, triple)
        extensions += 1

    g1 = emb.g1
    g2 = complement_flat(g1)
    x_int = restrict_to(g2, x)
    sums = sumset3_support(x_int)

    lin: Subspace | None = None
    aff = None
    if x_int:
        if config.strategy == "regularity":
            kw = key_lemma_witness(x_int, Fraction(len(x_int), 1 << x_int.n), config.max_codim)
            if not kw.verified:
                raise InternalConsistencyError("key lemma witness not inside X + X + X")
            if kw.flat.is_linear:
                lin = kw.flat.space
            else:
                aff = kw.flat
        else:
            lin = largest_subspace_in(sums, budget)
            aff = largest_affine_in(sums, budget)
            if aff is not None and aff.is_linear:
                aff = None  # a linear best is already covered by lin

    options = []
    if lin is not None:
        flat = embed_subspace(g2, lin)
        options.append(("case2", flat, lin.dim, None))
    if aff is not None and (lin is None or aff.dim > lin.dim):
        hyper = embed_subspace(g2, aff.space)  # F'' in ambient coordinates
        sub = m.restrict(hyper)
        if t - 1 >= 1 and t - 1 <= sub.n and i1t_witness(sub, t - 1, budget) is not None:
            raise InternalConsistencyError("restriction to F'' is not I_(1,t-1)-free")
        inner = _descend(sub, t - 1, config)
        flat = embed_subspace(hyper, inner.flat)
        options.append(("case1", flat, aff.dim, inner))

    if options:
        case, flat, found_dim, inner = min(options, key=lambda o: (n - o[1].dim, o[0] != "case2"))
    else:
        case, flat, found_dim, inner = "degenerate", Subspace.zero(n), 0, None

    if not m.ground.isdisjoint(flat.points()):
        raise InternalConsistencyError(f"{case} flat meets the ground set")
    chi = n - flat.dim
    step = TraceStep(
        t=t,
        n=n,
        k=emb.k,
        k_certified=emb.certified,
        g1_dim=g1.dim,
        x_size=len(x_int),
        sumset_size=len(sums),
        case=case,
        flat_dim=found_dim,
        codim_used=g1.dim + (g2.dim - found_dim),
        chi_bound=chi,
        tripod_extensions=extensions,
        claim10=_claim10(config, g2.dim, len(x_int)),
    )
    trace = [step] + (inner.trace if inner is not None else [])
    form = {
        "case2": "chi <= l + 3k + 1",
        "case1": "chi <= c_{t-1} + 3k + l + 1",
        "degenerate": "chi <= n",
    }[case]
    return ChiWitness(n, flat, chi, trace, form)

