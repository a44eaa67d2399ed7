"""Brute-force reference implementations, independent of the library code."""

from __future__ import annotations

from collections import Counter
from itertools import combinations


def popcount(v: int) -> int:
    return bin(v).count("1")


def all_subspaces(n: int) -> list[frozenset[int]]:
    """Every subspace of F_2^n as a frozenset, found by closing under xor."""
    seen = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for s in frontier:
            for v in range(1 << n):
                if v in s:
                    continue
                t = frozenset(s | {a ^ v for a in s})
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def dim_of(s) -> int:
    return len(s).bit_length() - 1


def gaussian_binomial(n: int, k: int) -> int:
    num = den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


def is_triangle_free(points) -> bool:
    e = set(points)
    return not any((a ^ b) in e for a, b in combinations(sorted(e), 2))


def omega(n: int, points) -> int:
    e = set(points) | {0}
    return max(dim_of(s) for s in all_subspaces(n) if s <= e)


def critical_number(n: int, points) -> int:
    e = set(points)
    return n - max(dim_of(s) for s in all_subspaces(n) if not (s & e))


def has_i1t(n: int, points, t: int) -> bool:
    e = set(points)
    return any(dim_of(s) == t and len(s & e) == 1 for s in all_subspaces(n))


def largest_affine(n: int, points) -> int:
    """Dimension of the largest coset inside the set, -1 if empty."""
    e = set(points)
    best = -1
    for s in all_subspaces(n):
        for a in range(1 << n):
            if all((a ^ h) in e for h in s):
                best = max(best, dim_of(s))
                break
    return best


def wht(n: int, points) -> list[int]:
    return [sum(-1 if popcount(a & x) & 1 else 1 for x in points) for a in range(1 << n)]


def triple_counts(n: int, points) -> list[int]:
    """O(|X|^2) pair table, then one pass over the third summand."""
    pts = list(points)
    pairs = Counter(a ^ b for a in pts for b in pts)
    out = [0] * (1 << n)
    for u in range(1 << n):
        out[u] = sum(pairs.get(u ^ c, 0) for c in pts)
    return out


def exists_embedding(n: int, points, pattern_n: int, pattern_points, induced: bool) -> bool:
    """Try every injective linear map by its ordered tuple of basis images."""
    e = set(points)
    pat = set(pattern_points)

    def rec(images):
        i = len(images)
        if i == pattern_n:
            for v in range(1, 1 << pattern_n):
                img = 0
                for j in range(pattern_n):
                    if (v >> j) & 1:
                        img ^= images[j]
                if v in pat and img not in e:
                    return False
                if induced and v not in pat and img in e:
                    return False
            return True
        span = {0}
        for b in images:
            span |= {s ^ b for s in span}
        return any(rec(images + [c]) for c in range(1, 1 << n) if c not in span)

    return rec([])
