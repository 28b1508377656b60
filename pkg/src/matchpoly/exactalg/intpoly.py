"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored constant-term first: ``coeffs[i]`` is the coefficient
of x^i.  The zero polynomial is the empty tuple and has degree -1.  All values
are immutable; every operation returns a new polynomial.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Optional, Sequence

from ..errors import ZeroPolynomial


class IntPoly:
    """An integer polynomial, e.g. ``IntPoly([-4, 0, 10, 0, -6, 0, 1])``."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> IntPoly:
        return IntPoly()

    @staticmethod
    def one() -> IntPoly:
        return IntPoly((1,))

    @staticmethod
    def x() -> IntPoly:
        return IntPoly((0, 1))

    @staticmethod
    def const(c: int) -> IntPoly:
        return IntPoly((c,))

    @staticmethod
    def monomial(c: int, k: int) -> IntPoly:
        """c * x^k"""
        return IntPoly((0,) * k + (c,))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def sort_key(self) -> tuple:
        """Deterministic ordering key: degree first, then coefficients."""
        return (self.degree, self.coeffs)

    # -- ring arithmetic ----------------------------------------------------

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: IntPoly) -> IntPoly:
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly(out)

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by x^k."""
        if self.is_zero or k == 0:
            return self if k >= 0 else IntPoly(self.coeffs[-k:])
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> IntPoly:
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def evaluate(self, point):
        """Horner evaluation; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    # -- division ----------------------------------------------------------

    def exact_div(self, d: IntPoly) -> Optional[IntPoly]:
        """Return q with self = q*d exactly over the integers, else None."""
        if d.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        if self.is_zero:
            return IntPoly()
        if self.degree < d.degree:
            return None
        rem = list(self.coeffs)
        dc = d.coeffs
        dlc = dc[-1]
        dn = len(dc)
        q = [0] * (len(rem) - dn + 1)
        for i in range(len(rem) - dn, -1, -1):
            lead = rem[i + dn - 1]
            if lead == 0:
                continue
            t, r = divmod(lead, dlc)
            if r != 0:
                return None
            q[i] = t
            for j, c in enumerate(dc):
                rem[i + j] -= t * c
        if any(rem):
            return None
        return IntPoly(q)

    def divmod_monic(self, d: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder for a monic divisor (stays in Z[x])."""
        if not d.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dc = d.coeffs
        dn = len(dc)
        if len(rem) < dn:
            return IntPoly(), self
        q = [0] * (len(rem) - dn + 1)
        for i in range(len(rem) - dn, -1, -1):
            t = rem[i + dn - 1]
            if t == 0:
                continue
            q[i] = t
            for j, c in enumerate(dc):
                rem[i + j] -= t * c
        return IntPoly(q), IntPoly(rem[: dn - 1])

    # -- content / gcd -----------------------------------------------------

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def primitive_part(self) -> IntPoly:
        """self / content, keeping the sign of the leading coefficient."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly(tuple(c // g for c in self.coeffs))

    def gcd(self, other: IntPoly) -> IntPoly:
        """Polynomial gcd over Z, normalized to positive leading coefficient.

        Subresultant PRS on the primitive parts keeps intermediate
        coefficients from exploding; the coefficient-content gcd is folded
        back in at the end.
        """
        a, b = self, other
        if a.is_zero and b.is_zero:
            return IntPoly()
        if a.is_zero or b.is_zero:
            p = b if a.is_zero else a
            return p if p.leading > 0 else -p
        cont = math.gcd(a.content(), b.content())
        a = a.primitive_part()
        b = b.primitive_part()
        if a.degree < b.degree:
            a, b = b, a
        g, h = 1, 1
        while b.degree > 0:
            delta = a.degree - b.degree
            r = _pseudo_rem(a, b)
            if r.is_zero:
                break
            scale = g * h**delta
            nb = IntPoly(tuple(c // scale for c in r.coeffs))
            assert nb * scale == r
            a, b = b, nb
            g = a.leading
            if delta >= 1:
                h = g**delta // h ** (delta - 1)
        if b.degree == 0:
            b = IntPoly((1,))
        p = b.primitive_part()
        if p.leading < 0:
            p = -p
        return p * cont if cont > 1 else p

    def squarefree_part(self) -> IntPoly:
        """Primitive part divided by gcd with its derivative; positive lc."""
        if self.is_zero:
            raise ZeroPolynomial("square-free part of the zero polynomial")
        pp = self.primitive_part()
        if pp.leading < 0:
            pp = -pp
        g = pp.gcd(pp.derivative())
        if g.degree <= 0:
            return pp
        p = pp.exact_div(g)
        assert p is not None
        return p

    # -- text / JSON forms ---------------------------------------------------

    def to_json(self) -> list[int]:
        """Dense JSON array [c_0, ..., c_k]."""
        return list(self.coeffs)

    @staticmethod
    def from_json(data: Sequence[int]) -> IntPoly:
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in data):
            raise ValueError("polynomial JSON array must hold integers")
        return IntPoly(data)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({self})"

    _TERM_RE = re.compile(
        r"""\s*(?P<sign>[+-]?)\s*
            (?:
              (?P<coeff>\d+)\s*(?:\*\s*)?(?P<var1>x(?:\^(?P<exp1>\d+))?)?
              |
              (?P<var2>x(?:\^(?P<exp2>\d+))?)
            )\s*""",
        re.VERBOSE,
    )

    @staticmethod
    def parse(text: str) -> IntPoly:
        """Parse the text form ``c_k*x^k + ... + c_0`` (also accepts ``x^2 - 3``)."""
        coeffs: dict[int, int] = {}
        pos = 0
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        first = True
        while pos < len(s):
            m = IntPoly._TERM_RE.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
            if not first and m.group("sign") == "":
                raise ValueError(f"missing +/- before {s[pos:]!r}")
            sign = -1 if m.group("sign") == "-" else 1
            if m.group("coeff") is not None:
                c = int(m.group("coeff"))
                var = m.group("var1")
                exp = m.group("exp1")
            else:
                c = 1
                var = m.group("var2")
                exp = m.group("exp2")
            k = 0
            if var is not None:
                k = int(exp) if exp is not None else 1
            coeffs[k] = coeffs.get(k, 0) + sign * c
            pos = m.end()
            first = False
        out = [0] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return IntPoly(out)


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    d = a.degree - b.degree
    if d < 0:
        return a
    lc = b.leading
    rem = list((a * lc ** (d + 1)).coeffs)
    bc = b.coeffs
    bn = len(bc)
    for i in range(len(rem) - bn, -1, -1):
        lead = rem[i + bn - 1]
        if lead == 0:
            continue
        t = lead // lc
        assert t * lc == lead
        for j, c in enumerate(bc):
            rem[i + j] -= t * c
    return IntPoly(rem[: bn - 1])


def squarefree_decompose(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun decomposition: p = unit * prod(part_i ^ mult_i) with square-free,
    pairwise-coprime, primitive parts of positive leading coefficient.

    Constant polynomials decompose into an empty list.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    if p.degree == 0:
        return []
    pp = p.primitive_part()
    if pp.leading < 0:
        pp = -pp
    dp = pp.derivative()
    g = pp.gcd(dp)
    out: list[tuple[IntPoly, int]] = []
    if g.degree == 0:
        return [(pp, 1)]
    c = pp.exact_div(g)
    assert c is not None
    d = dp.exact_div(g)
    assert d is not None
    d = d - c.derivative()
    i = 1
    while c.degree > 0:
        part = c.gcd(d)
        if part.degree > 0:
            out.append((part, i))
            nc = c.exact_div(part)
            assert nc is not None
            c = nc
            nd = d.exact_div(part)
            assert nd is not None
            d = nd
        d = d - c.derivative()
        i += 1
    out.sort(key=lambda pm: pm[0].sort_key())
    return out


def root_multiplicity(p: IntPoly, f: IntPoly) -> int:
    """Largest k with f^k dividing p exactly over the integers."""
    if p.is_zero:
        raise ZeroPolynomial("multiplicity in the zero polynomial")
    if not f.is_monic or f.degree < 1:
        from ..errors import InvalidFactor

        raise InvalidFactor(f"divisor must be monic of degree >= 1, got {f}")
    k = 0
    cur = p
    while True:
        q = cur.exact_div(f)
        if q is None:
            return k
        cur = q
        k += 1


