"""Real root isolation with Sturm sequences and exact rational endpoints.

Intervals are for display only downstream (e.g. showing that a root class is
"the root near 1.732"); all actual decisions in the package are made through
divisibility, never through these numeric brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import ZeroPolynomial
from .intpoly import IntPoly, squarefree_decompose

_DEFAULT_WIDTH = Fraction(1, 64)


@dataclass(frozen=True)
class RealRootInterval:
    """A closed rational interval containing exactly one distinct real root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_json(self) -> dict:
        return {
            "lo": [self.lo.numerator, self.lo.denominator],
            "hi": [self.hi.numerator, self.hi.denominator],
            "approx": float(self.midpoint()),
            "multiplicity": self.multiplicity,
        }


def sturm_chain(f: IntPoly) -> list[tuple[Fraction, ...]]:
    """Sturm sequence of a square-free polynomial, over the rationals."""
    f0 = tuple(Fraction(c) for c in f.coeffs)
    f1 = tuple(Fraction(c) for c in f.derivative().coeffs)
    chain = [f0]
    while f1:
        chain.append(f1)
        f0, f1 = f1, _qneg(_qrem(f0, f1))
    return chain


def _qrem(a: Sequence[Fraction], d: Sequence[Fraction]) -> tuple[Fraction, ...]:
    rem = list(a)
    dn = len(d)
    inv = 1 / d[-1]
    for i in range(len(rem) - dn, -1, -1):
        t = rem[i + dn - 1] * inv
        if t:
            for j in range(dn):
                rem[i + j] -= t * d[j]
    rem = rem[: dn - 1]
    while rem and not rem[-1]:
        rem.pop()
    return tuple(rem)


def _qneg(a: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    return tuple(-c for c in a)


def _eval(cs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def variations(chain: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = []
    for cs in chain:
        v = _eval(cs, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: Sequence[Sequence[Fraction]], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the open interval (a, b); endpoints
    must not be roots of the chain's polynomial."""
    return variations(chain, a) - variations(chain, b)


class _Bracket:
    """Mutable bracket around one root of one square-free part."""

    __slots__ = ("lo", "hi", "part", "chain", "multiplicity")

    def __init__(self, lo, hi, part, chain, multiplicity):
        self.lo = lo
        self.hi = hi
        self.part = part
        self.chain = chain
        self.multiplicity = multiplicity

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def bisect(self) -> None:
        """Halve the bracket, keeping the side holding the root."""
        if self.exact:
            return
        mid = (self.lo + self.hi) / 2
        if self.part.evaluate(mid) == 0:
            self.lo = self.hi = mid
        elif count_roots(self.chain, self.lo, mid) == 1:
            self.hi = mid
        else:
            self.lo = mid


def _cauchy_bound(p: IntPoly) -> Fraction:
    lc = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + Fraction(m, lc)


def _isolate_squarefree(part: IntPoly, multiplicity: int) -> list[_Bracket]:
    chain = sturm_chain(part)
    bound = _cauchy_bound(part)
    out: list[_Bracket] = []
    stack = [(-bound, bound, count_roots(chain, -bound, bound))]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append(_Bracket(lo, hi, part, chain, multiplicity))
            continue
        mid = (lo + hi) / 2
        if part.evaluate(mid) == 0:
            delta = (hi - lo) / 4
            while (
                part.evaluate(mid - delta) == 0
                or part.evaluate(mid + delta) == 0
                or count_roots(chain, mid - delta, mid + delta) > 1
            ):
                delta /= 2
            out.append(_Bracket(mid, mid, part, chain, multiplicity))
            stack.append((lo, mid - delta, count_roots(chain, lo, mid - delta)))
            stack.append((mid + delta, hi, count_roots(chain, mid + delta, hi)))
        else:
            stack.append((lo, mid, count_roots(chain, lo, mid)))
            stack.append((mid, hi, count_roots(chain, mid, hi)))
    return out


def isolate_real_roots(
    p: IntPoly, max_width: Fraction = _DEFAULT_WIDTH
) -> list[RealRootInterval]:
    """Disjoint, sorted intervals bracketing every distinct real root of p,
    with multiplicities from the square-free decomposition."""
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    brackets: list[_Bracket] = []
    for part, mult in squarefree_decompose(p):
        brackets.extend(_isolate_squarefree(part, mult))
    for b in brackets:
        while not b.exact and b.hi - b.lo > max_width:
            b.bisect()
    # Shrink until brackets are pairwise disjoint as closed sets; the roots
    # are distinct, so this terminates.
    changed = True
    while changed:
        changed = False
        for i in range(len(brackets)):
            for j in range(i + 1, len(brackets)):
                a, b = brackets[i], brackets[j]
                if a.hi >= b.lo and b.hi >= a.lo:
                    a.bisect()
                    b.bisect()
                    changed = True
    brackets.sort(key=lambda br: (br.lo, br.hi))
    return [RealRootInterval(b.lo, b.hi, b.multiplicity) for b in brackets]


def largest_real_root_interval(p: IntPoly) -> tuple[Fraction, Fraction] | None:
    """Bracket for the largest real root of p, or None if p has no real root."""
    intervals = isolate_real_roots(p)
    if not intervals:
        return None
    last = intervals[-1]
    return (last.lo, last.hi)
