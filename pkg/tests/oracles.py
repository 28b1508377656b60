"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive: Prufer enumeration of labeled trees,
exhaustive edge-subset search for covers, and Kronecker interpolation for
irreducibility.  The production code must agree with these on small inputs.
"""

from __future__ import annotations

import heapq
import itertools
import multiprocessing
from fractions import Fraction
from typing import Iterator, Sequence

from matchpoly.exactalg import IntPoly
from matchpoly.graphs import Graph, labeled_tree_code

TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}


def prufer_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prufer sequence over vertices 0..n-1 into tree edges."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [i for i in range(n) if deg[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return edges


def labeled_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """All n^(n-2) labeled trees on 0..n-1."""
    if n == 1:
        yield []
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_edges(seq, n)


def _codes_for_prefix(args: tuple[int, int]) -> set[bytes]:
    n, first = args
    codes = set()
    for rest in itertools.product(range(n), repeat=n - 3):
        seq = (first,) + rest
        codes.add(labeled_tree_code(n, prufer_edges(seq, n)))
    return codes


def prufer_class_codes(n: int, jobs: int = 1) -> set[bytes]:
    """Canonical codes of every labeled tree on n vertices."""
    if n == 1:
        return {labeled_tree_code(1, [])}
    if n == 2:
        return {labeled_tree_code(2, [(0, 1)])}
    if jobs > 1 and n >= 7:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            parts = pool.map(_codes_for_prefix, [(n, first) for first in range(n)])
        return set().union(*parts)
    codes = set()
    for edges in labeled_trees(n):
        codes.add(labeled_tree_code(n, edges))
    return codes


# -- covers --------------------------------------------------------------------


def brute_max_deg2_acyclic(G: Graph) -> int:
    """Maximum size of an acyclic degree-<=2 edge subset, by full enumeration."""
    best = 0
    m = G.m
    for mask in range(1 << m):
        subset = [G.edges[i] for i in range(m) if mask >> i & 1]
        if len(subset) <= best:
            continue
        deg = [0] * G.n
        parent = list(range(G.n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        ok = True
        for u, v in subset:
            deg[u] += 1
            deg[v] += 1
            if deg[u] > 2 or deg[v] > 2:
                ok = False
                break
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            best = len(subset)
    return best


def brute_min_cover_size(G: Graph) -> int:
    return G.n - brute_max_deg2_acyclic(G)


def brute_count_covers(G: Graph, m: int) -> int:
    """Number of covers with exactly m paths, by full subset enumeration."""
    target = G.n - m
    count = 0
    for mask in range(1 << G.m):
        subset = [G.edges[i] for i in range(G.m) if mask >> i & 1]
        if len(subset) != target:
            continue
        deg = [0] * G.n
        parent = list(range(G.n))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        ok = True
        for u, v in subset:
            deg[u] += 1
            deg[v] += 1
            if deg[u] > 2 or deg[v] > 2:
                ok = False
                break
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            count += 1
    return count


# -- irreducibility ----------------------------------------------------------------


def _divisors_signed(v: int) -> list[int]:
    out = []
    a = abs(v)
    for d in range(1, a + 1):
        if a % d == 0:
            out.extend((d, -d))
    return out


def kronecker_irreducible(p: IntPoly) -> bool:
    """Kronecker's method: p (primitive, degree >= 2) is reducible iff some
    integer polynomial of degree <= deg(p)/2, interpolated through divisors
    of p's values at small integer points, divides it."""
    d = p.degree
    assert d >= 1
    if d == 1:
        return True
    points: list[int] = []
    k = 0
    while len(points) < d // 2 + 1:
        for cand in (k, -k) if k else (0,):
            if p.evaluate(cand) != 0 and cand not in points:
                points.append(cand)
        k += 1
    for target in range(1, d // 2 + 1):
        pts = points[: target + 1]
        value_divisors = [_divisors_signed(p.evaluate(x)) for x in pts]
        for combo in itertools.product(*value_divisors):
            cand = _interpolate(pts, combo)
            if cand is None or cand.degree < 1:
                continue
            if p.exact_div(cand) is not None:
                return False
    return True


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> IntPoly | None:
    """Lagrange interpolation; None unless the result has integer coefficients."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] += c * (-xs[j])
                new[k + 1] += c
            basis = new
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    if any(c.denominator != 1 for c in coeffs):
        return None
    return IntPoly([int(c) for c in coeffs])
