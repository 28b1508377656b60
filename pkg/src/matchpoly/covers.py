"""Path covers: minimum covers, exhaustive enumeration, extremality
certificates, and the main biconditional verdict.

A cover is canonically an acyclic edge subset S with maximum degree 2; the
paths are its components, and |paths| = |V| - |S|.  Minimizing the number of
paths is maximizing |S|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import InvalidCover, TooLarge
from .exactalg import AlgebraicRootClass, IntPoly, root_multiplicity
from .graphs import Graph
from .matchcore import matching_polynomial
from .thetaclass import Sign, root_classes

_GENERAL_COVER_LIMIT = 16


@dataclass(frozen=True)
class PathCover:
    """Vertex-disjoint paths covering all vertices of a graph."""

    paths: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.paths)

    def edge_subset(self) -> tuple[tuple[int, int], ...]:
        out = []
        for p in self.paths:
            for a, b in zip(p, p[1:]):
                out.append((a, b) if a < b else (b, a))
        return tuple(sorted(out))

    def validate(self, G: Graph) -> None:
        seen: set[int] = set()
        for p in self.paths:
            if not p:
                raise InvalidCover("empty path in cover")
            for v in p:
                if not (0 <= v < G.n):
                    raise InvalidCover(f"vertex {v} out of range")
                if v in seen:
                    raise InvalidCover(f"vertex {v} appears twice")
                seen.add(v)
            for a, b in zip(p, p[1:]):
                if not G.has_edge(a, b):
                    raise InvalidCover(f"({a},{b}) is not an edge of the graph")
        if len(seen) != G.n:
            raise InvalidCover("cover does not reach every vertex")

    @staticmethod
    def from_edge_subset(G: Graph, subset: Sequence[tuple[int, int]]) -> "PathCover":
        adj: dict[int, list[int]] = {v: [] for v in range(G.n)}
        for u, v in subset:
            adj[u].append(v)
            adj[v].append(u)
        paths = []
        visited: set[int] = set()
        for start in range(G.n):
            if start in visited:
                continue
            # Walk to an endpoint of this component, then along it.
            end = start
            prev = -1
            while True:
                nxt = [w for w in adj[end] if w != prev]
                if len(adj[end]) <= 1 and end != start:
                    break
                if end == start and len(adj[end]) <= 1:
                    break
                prev, end = end, nxt[0]
            seq = [end]
            visited.add(end)
            prev = -1
            cur = end
            while True:
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                seq.append(cur)
                visited.add(cur)
            if seq[0] > seq[-1]:
                seq.reverse()
            paths.append(tuple(seq))
        paths.sort(key=lambda p: (min(p), p))
        return PathCover(paths=tuple(paths))

    def to_json(self) -> dict:
        return {"paths": [list(p) for p in self.paths]}


# -- minimum cover -------------------------------------------------------------


def min_path_cover(G: Graph) -> PathCover:
    """A cover by the minimum number of vertex-disjoint paths.

    Forests use an exact leaf-up DP with ties broken toward the
    lexicographically smallest edge subset; other graphs up to 16 vertices
    use branch-and-bound over acyclic degree-<=2 edge subsets.
    """
    if G.is_forest:
        subset = _forest_lexmin_subset(G)
    elif G.n <= _GENERAL_COVER_LIMIT:
        subset = _bnb_max_subset(G)
    else:
        raise TooLarge(
            f"minimum path cover on non-forests handles n <= {_GENERAL_COVER_LIMIT}"
        )
    return PathCover.from_edge_subset(G, subset)


def _forest_best_size(
    G: Graph,
    forced_in: frozenset[tuple[int, int]] = frozenset(),
    forced_out: frozenset[tuple[int, int]] = frozenset(),
) -> int:
    """Maximum size of a degree-<=2 subset of forest edges honoring the
    forced edges; -1 when infeasible."""
    NEG = -(10**9)
    total = 0
    for comp in G.component_vertex_sets():
        root = comp[0]
        parent = {root: -1}
        order = [root]
        for v in order:
            for w in G.adjacency[v]:
                if w not in parent:
                    parent[w] = v
                    order.append(w)
        # val[v] = (best with <=0 child edges kept, <=1, <=2)
        val: dict[int, tuple[int, int, int]] = {}
        for v in reversed(order):
            kids = [w for w in G.adjacency[v] if parent.get(w) == v]
            base = 0
            forced_here = 0
            deltas = []
            for c in kids:
                edge = (v, c) if v < c else (c, v)
                open1 = max(val[c][0], val[c][1])
                any2 = val[c][2]
                if edge in forced_in:
                    forced_here += 1
                    base += open1 + 1
                elif edge in forced_out:
                    base += any2
                else:
                    base += any2
                    deltas.append(open1 + 1 - any2)
            if forced_here > 2:
                val[v] = (NEG, NEG, NEG)
                continue
            deltas.sort(reverse=True)
            best = [NEG, NEG, NEG]
            for budget in range(3):
                if budget < forced_here:
                    continue
                extra = 0
                for d in deltas[: budget - forced_here]:
                    if d > 0:
                        extra += d
                best[budget] = base + extra
            val[v] = (best[0], best[1], best[2])
        comp_best = max(val[root])
        if comp_best < 0:
            return -1
        total += comp_best
    return total


def _forest_lexmin_subset(G: Graph) -> tuple[tuple[int, int], ...]:
    """Lexicographically smallest maximum degree-<=2 edge subset of a forest."""
    target = _forest_best_size(G)
    chosen: list[tuple[int, int]] = []
    excluded: set[tuple[int, int]] = set()
    for e in G.edges:
        trial = frozenset(chosen + [e])
        if _forest_best_size(G, trial, frozenset(excluded)) == target:
            chosen.append(e)
        else:
            excluded.add(e)
    assert len(chosen) == target
    return tuple(chosen)


def _bnb_max_subset(G: Graph) -> tuple[tuple[int, int], ...]:
    """Branch and bound over acyclic degree-<=2 edge subsets, edges taken in
    ascending order with the include branch first."""
    edges = G.edges
    m = len(edges)
    n = G.n
    deg = [0] * n
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    best: list[tuple[tuple[int, int], ...]] = [()]
    chosen: list[tuple[int, int]] = []

    def rec(i: int) -> None:
        if len(chosen) + (m - i) <= len(best[0]) or len(chosen) >= n - 1 and i < m:
            if len(chosen) > len(best[0]):
                best[0] = tuple(chosen)
            return
        if i == m:
            if len(chosen) > len(best[0]):
                best[0] = tuple(chosen)
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if deg[u] < 2 and deg[v] < 2 and ru != rv:
            saved = (parent[:], deg[u], deg[v])
            parent[ru] = rv
            deg[u] += 1
            deg[v] += 1
            chosen.append(edges[i])
            rec(i + 1)
            chosen.pop()
            parent[:] = saved[0]
            deg[u], deg[v] = saved[1], saved[2]
        rec(i + 1)

    rec(0)
    return best[0]


# -- cover enumeration ------------------------------------------------------------


def enumerate_covers(G: Graph, m: int) -> Iterator[PathCover]:
    """All covers with exactly m paths, in lexicographic edge-subset order."""
    is_forest = G.is_forest
    if not is_forest and G.n > _GENERAL_COVER_LIMIT:
        raise TooLarge(
            f"cover enumeration on non-forests handles n <= {_GENERAL_COVER_LIMIT}"
        )
    target = G.n - m
    if target < 0 or m < 1 and G.n > 0:
        return
    edges = G.edges
    me = len(edges)
    deg = [0] * G.n
    parent = list(range(G.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    chosen: list[tuple[int, int]] = []

    def rec(i: int) -> Iterator[PathCover]:
        if len(chosen) == target:
            yield PathCover.from_edge_subset(G, tuple(chosen))
            return
        if i == me or len(chosen) + (me - i) < target:
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if deg[u] < 2 and deg[v] < 2 and ru != rv:
            saved_parent = parent[:]
            parent[ru] = rv
            deg[u] += 1
            deg[v] += 1
            chosen.append(edges[i])
            yield from rec(i + 1)
            chosen.pop()
            parent[:] = saved_parent
            deg[u] -= 1
            deg[v] -= 1
        yield from rec(i + 1)

    yield from rec(0)


# -- extremality ------------------------------------------------------------------


_path_poly_cache: dict[int, IntPoly] = {}
_path_mult_cache: dict[tuple[int, tuple[int, ...]], int] = {}


def path_polynomial(k: int) -> IntPoly:
    """Matching polynomial of the path on k vertices (k = 0 gives 1)."""
    if k in _path_poly_cache:
        return _path_poly_cache[k]
    if k == 0:
        poly = IntPoly.one()
    elif k == 1:
        poly = IntPoly.x()
    else:
        poly = IntPoly.x() * path_polynomial(k - 1) - path_polynomial(k - 2)
    _path_poly_cache[k] = poly
    return poly


def path_mult(k: int, theta: AlgebraicRootClass) -> int:
    key = (k, theta.minpoly.coeffs)
    if key not in _path_mult_cache:
        if k == 0:
            _path_mult_cache[key] = 0
        else:
            _path_mult_cache[key] = root_multiplicity(path_polynomial(k), theta.minpoly)
    return _path_mult_cache[key]


def _path_position_sign(k: int, j: int, theta: AlgebraicRootClass) -> Sign:
    """Sign of position j (0-based) within the path on k vertices: deleting
    it leaves the disjoint union of two shorter paths."""
    delta = path_mult(j, theta) + path_mult(k - 1 - j, theta) - path_mult(k, theta)
    return {-1: Sign.ESSENTIAL, 0: Sign.NEUTRAL, 1: Sign.POSITIVE}[delta]


def _special_in_path(k: int, j: int, theta: AlgebraicRootClass) -> bool:
    if _path_position_sign(k, j, theta) == Sign.ESSENTIAL:
        return False
    if j > 0 and _path_position_sign(k, j - 1, theta) == Sign.ESSENTIAL:
        return True
    if j < k - 1 and _path_position_sign(k, j + 1, theta) == Sign.ESSENTIAL:
        return True
    return False


@dataclass(frozen=True)
class CrossEdge:
    edge: tuple[int, int]
    u_path: int
    v_path: int
    u_special: bool
    v_special: bool

    @property
    def witnessed(self) -> bool:
        return self.u_special or self.v_special


@dataclass(frozen=True)
class ExtremalReport:
    rootclass: AlgebraicRootClass
    cover: PathCover
    condition_a: tuple[bool, ...]
    cross_edges: tuple[CrossEdge, ...]

    @property
    def verdict(self) -> bool:
        return all(self.condition_a) and all(c.witnessed for c in self.cross_edges)

    def to_json(self, G: Graph) -> dict:
        return {
            "rootclass": self.rootclass.to_json(),
            "cover": self.cover.to_json(),
            "condition_a": list(self.condition_a),
            "cross_edges": [
                {
                    "edge": [G.label(c.edge[0]), G.label(c.edge[1])],
                    "u_special_in_path": c.u_special,
                    "v_special_in_path": c.v_special,
                    "witnessed": c.witnessed,
                }
                for c in self.cross_edges
            ],
            "extremal": self.verdict,
        }


def is_extremal(G: Graph, theta: AlgebraicRootClass, Q: PathCover) -> ExtremalReport:
    """Certificate for the two extremality conditions: the root class divides
    every path's matching polynomial, and every cross edge has an endpoint
    that is special within its own path."""
    Q.validate(G)
    cond_a = tuple(path_mult(len(p), theta) >= 1 for p in Q.paths)
    where: dict[int, tuple[int, int]] = {}
    for pi, p in enumerate(Q.paths):
        for j, v in enumerate(p):
            where[v] = (pi, j)
    cross = []
    for u, v in G.edges:
        pu, ju = where[u]
        pv, jv = where[v]
        if pu == pv:
            continue
        cross.append(
            CrossEdge(
                edge=(u, v),
                u_path=pu,
                v_path=pv,
                u_special=_special_in_path(len(Q.paths[pu]), ju, theta),
                v_special=_special_in_path(len(Q.paths[pv]), jv, theta),
            )
        )
    return ExtremalReport(
        rootclass=theta, cover=Q, condition_a=cond_a, cross_edges=tuple(cross)
    )


# -- main theorem verdict ------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    cover: PathCover
    rootclass: AlgebraicRootClass
    reason: str


@dataclass(frozen=True)
class MainVerdict:
    min_cover_size: int
    max_mult: int
    witnesses: tuple[AlgebraicRootClass, ...]
    mult_le_cover: bool
    biconditional_ok: bool
    counterexample: Optional[Counterexample]
    covers_checked: int
    violations: int
    forest_mode: bool

    def to_json(self, G: Graph) -> dict:
        out = {
            "min_cover_size": self.min_cover_size,
            "max_mult": self.max_mult,
            "witnesses": [rc.to_json() for rc in self.witnesses],
            "mult_le_cover": self.mult_le_cover,
            "biconditional_ok": self.biconditional_ok,
            "covers_checked": self.covers_checked,
            "violations": self.violations,
            "forest_mode": self.forest_mode,
        }
        if self.counterexample is not None:
            out["counterexample"] = {
                "cover": self.counterexample.cover.to_json(),
                "rootclass": self.counterexample.rootclass.to_json(),
                "reason": self.counterexample.reason,
            }
        return out


def certify_main(G: Graph, converse_cap: int = 4) -> MainVerdict:
    """Check the cover/multiplicity biconditional on one graph.

    Computes the minimum cover size c and maximum root multiplicity M,
    records M <= c, then tests every cover of size c against every root
    class: multiplicity equal to c must coincide with extremality.  Covers of
    sizes up to ``converse_cap`` are additionally tested in the converse
    direction (an extremal cover of size m forces multiplicity m, attained as
    the maximum).  On non-forests the verdict simply reports the outcome; the
    biconditional is expected to fail there.
    """
    classes = root_classes(G)
    cover = min_path_cover(G)
    c = cover.size
    max_mult = max((m for _, m in classes), default=0)
    witnesses = tuple(rc for rc, m in classes if m == max_mult)
    violations = 0
    counterexample: Optional[Counterexample] = None
    checked = 0
    top = max(c, min(converse_cap, G.n))
    for msize in range(c, top + 1):
        for Q in enumerate_covers(G, msize):
            for rc, mult in classes:
                report = is_extremal(G, rc, Q)
                checked += 1
                ext = report.verdict
                reason = None
                if msize == c and mult == c and not ext:
                    reason = (
                        f"multiplicity of {rc.minpoly} is {mult} = min cover size, "
                        "but the cover is not extremal"
                    )
                elif ext and mult != msize:
                    reason = (
                        f"{msize}-path cover is extremal for {rc.minpoly}, "
                        f"but the multiplicity is {mult}"
                    )
                elif ext and msize != max_mult:
                    reason = (
                        f"extremal {msize}-path cover for {rc.minpoly}, but the "
                        f"maximum multiplicity is {max_mult}"
                    )
                if reason is not None:
                    violations += 1
                    if counterexample is None:
                        counterexample = Counterexample(Q, rc, reason)
    return MainVerdict(
        min_cover_size=c,
        max_mult=max_mult,
        witnesses=witnesses,
        mult_le_cover=max_mult <= c,
        biconditional_ok=violations == 0 and max_mult <= c,
        counterexample=counterexample,
        covers_checked=checked,
        violations=violations,
        forest_mode=G.is_forest,
    )
