"""Root classes of the matching polynomial, vertex sign classification,
theta-partitions, the stability check, and exact eigenvector construction.

A root is always handled through its minimal polynomial: the multiplicity of
the root class in a graph is the number of times the minimal polynomial
divides the matching polynomial, and vertex signs come from how that
multiplicity moves under vertex deletion (it changes by at most one).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BadVertex, NotARoot, NotATree, NotSpecial
from .exactalg import (
    AlgebraicRootClass,
    IntPoly,
    NumberFieldElem,
    factor_irreducible,
    kernel_basis,
    largest_real_root_interval,
    root_multiplicity,
)
from .graphs import Graph
from .matchcore import matching_polynomial


class Sign(enum.Enum):
    """Deletion moves the root multiplicity by -1, 0, or +1."""

    ESSENTIAL = "essential"
    NEUTRAL = "neutral"
    POSITIVE = "positive"

    @property
    def symbol(self) -> str:
        return {"essential": "-", "neutral": "*", "positive": "+"}[self.value]


@dataclass(frozen=True)
class VertexSign:
    sign: Sign
    special: bool

    def __post_init__(self):
        if self.special and self.sign == Sign.ESSENTIAL:
            raise ValueError("a special vertex is by definition not essential")


@dataclass(frozen=True)
class ThetaPartition:
    """D = essential, A = special, C = everything else."""

    rootclass: AlgebraicRootClass
    mult: int
    signs: tuple[Sign, ...]
    special: tuple[bool, ...]

    @property
    def D(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.signs) if s == Sign.ESSENTIAL)

    @property
    def A(self) -> frozenset[int]:
        return frozenset(v for v, sp in enumerate(self.special) if sp)

    @property
    def C(self) -> frozenset[int]:
        return frozenset(
            v
            for v, s in enumerate(self.signs)
            if s != Sign.ESSENTIAL and not self.special[v]
        )

    def vertex_class(self, v: int) -> str:
        if self.signs[v] == Sign.ESSENTIAL:
            return "D"
        return "A" if self.special[v] else "C"

    def to_json(self, G: Graph) -> dict:
        return {
            "rootclass": self.rootclass.to_json(),
            "mult": self.mult,
            "signs": {G.label(v): s.value for v, s in enumerate(self.signs)},
            "special": [G.label(v) for v in sorted(self.A)],
            "D": [G.label(v) for v in sorted(self.D)],
            "A": [G.label(v) for v in sorted(self.A)],
            "C": [G.label(v) for v in sorted(self.C)],
        }


def mult_of(G: Graph, theta: AlgebraicRootClass) -> int:
    """Multiplicity of the root class in the matching polynomial of G."""
    if G.n == 0:
        return 0
    return root_multiplicity(matching_polynomial(G), theta.minpoly)


def root_classes(G: Graph) -> list[tuple[AlgebraicRootClass, int]]:
    """Irreducible root classes of the matching polynomial, with
    multiplicities, in deterministic (degree, coefficients) order."""
    mu = matching_polynomial(G)
    if mu.degree < 1:
        return []
    out = []
    for f, e in factor_irreducible(mu).factors:
        out.append((AlgebraicRootClass(f, largest_real_root_interval(f)), e))
    return out


def _signed(delta: int) -> Sign:
    if delta == -1:
        return Sign.ESSENTIAL
    if delta == 0:
        return Sign.NEUTRAL
    if delta == 1:
        return Sign.POSITIVE
    raise AssertionError(f"interlacing violated: multiplicity moved by {delta}")


def classify_vertex(
    G: Graph, theta: AlgebraicRootClass, u: int, allow_nonroot: bool = False
) -> VertexSign:
    """Sign of one vertex, with its special flag.

    Requires the root class to actually divide the matching polynomial unless
    ``allow_nonroot`` is set (at multiplicity 0 only neutral and positive make
    sense, and no vertex can be special).
    """
    if not (0 <= u < G.n):
        raise BadVertex(f"vertex {u} out of range for n={G.n}")
    m = mult_of(G, theta)
    if m == 0 and not allow_nonroot:
        raise NotARoot(f"{theta.minpoly} does not divide the matching polynomial")
    sign = _delta_sign(G, theta, u, m)
    special = False
    if sign != Sign.ESSENTIAL and m > 0:
        special = any(
            _delta_sign(G, theta, w, m) == Sign.ESSENTIAL for w in G.neighbors(u)
        )
    return VertexSign(sign, special)


def _delta_sign(G: Graph, theta: AlgebraicRootClass, u: int, m: int) -> Sign:
    sub, _ = G.delete_vertices([u])
    return _signed(mult_of(sub, theta) - m)


def theta_partition(
    G: Graph, theta: AlgebraicRootClass, allow_nonroot: bool = False
) -> ThetaPartition:
    """Classify every vertex and split them into the D/A/C classes."""
    m = mult_of(G, theta)
    if m == 0 and not allow_nonroot:
        raise NotARoot(f"{theta.minpoly} does not divide the matching polynomial")
    signs = tuple(_delta_sign(G, theta, u, m) for u in range(G.n))
    special = tuple(
        signs[u] != Sign.ESSENTIAL
        and any(signs[w] == Sign.ESSENTIAL for w in G.neighbors(u))
        for u in range(G.n)
    )
    return ThetaPartition(rootclass=theta, mult=m, signs=signs, special=special)


# -- stability ----------------------------------------------------------------


@dataclass(frozen=True)
class VertexStability:
    vertex: int
    before_sign: Sign
    after_sign: Sign
    before_class: str
    after_class: str

    @property
    def preserved(self) -> bool:
        return self.before_class == self.after_class


@dataclass(frozen=True)
class StabilityReport:
    rootclass: AlgebraicRootClass
    deleted: int
    stable: bool
    records: tuple[VertexStability, ...]

    def after_signs(self) -> dict[int, Sign]:
        return {r.vertex: r.after_sign for r in self.records}

    def to_json(self, G: Graph) -> dict:
        return {
            "rootclass": self.rootclass.to_json(),
            "deleted": G.label(self.deleted),
            "stable": self.stable,
            "vertices": [
                {
                    "vertex": G.label(r.vertex),
                    "before": {"sign": r.before_sign.value, "class": r.before_class},
                    "after": {"sign": r.after_sign.value, "class": r.after_class},
                    "preserved": r.preserved,
                }
                for r in self.records
            ],
        }


def check_stability(T: Graph, theta: AlgebraicRootClass, u: int) -> StabilityReport:
    """Delete a special vertex and report, per remaining vertex, whether its
    D/A/C class is preserved; the verdict is "stable" iff all are."""
    if not T.is_tree:
        raise NotATree("stability check requires a tree")
    if not (0 <= u < T.n):
        raise BadVertex(f"vertex {u} out of range for n={T.n}")
    before = theta_partition(T, theta)
    if u not in before.A:
        raise NotSpecial(
            f"vertex {T.label(u)} is not special "
            f"(sign {before.signs[u].value}); stability is only promised for special vertices"
        )
    sub, kept = T.delete_vertices([u])
    after = theta_partition(sub, theta)
    records = []
    for new, old in enumerate(kept):
        records.append(
            VertexStability(
                vertex=old,
                before_sign=before.signs[old],
                after_sign=after.signs[new],
                before_class=before.vertex_class(old),
                after_class=after.vertex_class(new),
            )
        )
    return StabilityReport(
        rootclass=theta,
        deleted=u,
        stable=all(r.preserved for r in records),
        records=tuple(records),
    )


# -- eigenvector construction ----------------------------------------------------


@dataclass(frozen=True)
class EigvecResult:
    rootclass: AlgebraicRootClass
    values: tuple[NumberFieldElem, ...]

    def support(self) -> frozenset[int]:
        return frozenset(v for v, e in enumerate(self.values) if not e.is_zero)

    def to_json(self, G: Graph) -> dict:
        return {
            "rootclass": self.rootclass.to_json(),
            "values": {G.label(v): str(e) for v, e in enumerate(self.values)},
            "support": [G.label(v) for v in sorted(self.support())],
        }


def construct_eigenvector(T: Graph, theta: AlgebraicRootClass) -> EigvecResult:
    """Build an exact eigenvector of the tree for the root class, nonzero on
    every essential vertex.

    If every vertex is essential the kernel of (adjacency - theta*I) is
    one-dimensional and any kernel vector works.  Otherwise the first special
    vertex u is removed; components of T-u whose contact vertex is essential
    get recursively built vectors rescaled so the contact values are nonzero
    and sum to zero, components where the root class still divides keep their
    vectors unscaled (their contact value is zero), and all other components
    get the zero vector, as does u itself.
    """
    if not T.is_tree:
        raise NotATree("eigenvector construction requires a tree")
    if mult_of(T, theta) == 0:
        raise NotARoot(f"{theta.minpoly} is not a root class of this tree")
    values = _construct(T, theta)
    return EigvecResult(rootclass=theta, values=tuple(values))


def _construct(T: Graph, theta: AlgebraicRootClass) -> list[NumberFieldElem]:
    part = theta_partition(T, theta)
    if len(part.D) == T.n:
        gen = theta.generator()
        one = theta.one()
        zero = theta.zero()
        matrix = [
            [one if T.has_edge(i, j) else (-gen if i == j else zero) for j in range(T.n)]
            for i in range(T.n)
        ]
        basis = kernel_basis(matrix)
        assert len(basis) == 1, "all-essential tree must have a 1-dim kernel"
        return basis[0]

    u = min(part.A)
    forest, kept_forest = T.delete_vertices([u])
    values: list[NumberFieldElem] = [theta.zero() for _ in range(T.n)]
    contact_groups: list[tuple[Graph, list[int], int, int]] = []
    for comp, kept_comp in forest.components():
        orig = [kept_forest[i] for i in kept_comp]
        contact = next(w for w in T.neighbors(u) if w in orig)
        contact_groups.append((comp, orig, contact, mult_of(comp, theta)))

    essential_contacts = []
    for idx, (comp, orig, contact, m_comp) in enumerate(contact_groups):
        if m_comp == 0:
            continue
        local = orig.index(contact)
        sub, _ = comp.delete_vertices([local])
        if mult_of(sub, theta) == m_comp - 1:
            essential_contacts.append(idx)

    k = len(essential_contacts)
    assert k >= 2, "a special vertex must touch >= 2 essential contacts"
    alphas = [1] * (k - 1) + [-(k - 1)]
    for alpha, idx in zip(alphas, essential_contacts):
        comp, orig, contact, _ = contact_groups[idx]
        vec = _construct(comp, theta)
        local = orig.index(contact)
        scale = theta.from_int(alpha) / vec[local]
        for i, v in enumerate(orig):
            values[v] = vec[i] * scale
    for idx, (comp, orig, contact, m_comp) in enumerate(contact_groups):
        if m_comp == 0 or idx in essential_contacts:
            continue
        vec = _construct(comp, theta)
        assert vec[orig.index(contact)].is_zero
        for i, v in enumerate(orig):
            values[v] = vec[i]
    return values


def verify_eigenvector(
    G: Graph, theta: AlgebraicRootClass, values: Sequence[NumberFieldElem]
) -> bool:
    """Exact check of the eigenvalue condition at every vertex."""
    gen = theta.generator()
    for v in range(G.n):
        acc = theta.zero()
        for w in G.neighbors(v):
            acc = acc + values[w]
        if gen * values[v] != acc:
            return False
    return True
