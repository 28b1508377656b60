import random
from fractions import Fraction

import pytest

from matchpoly.errors import ZeroPolynomial
from matchpoly.exactalg import (
    IntPoly,
    isolate_real_roots,
    largest_real_root_interval,
    squarefree_decompose,
)


def parse(s):
    return IntPoly.parse(s)


class TestExamples:
    def test_exact_rational_root(self):
        got = isolate_real_roots(parse("x"))
        assert len(got) == 1
        assert (got[0].lo, got[0].hi, got[0].multiplicity) == (0, 0, 1)

    def test_sqrt2_brackets(self):
        got = isolate_real_roots(parse("x^2 - 2"))
        assert len(got) == 2
        neg, pos = got
        assert Fraction(-2) < neg.lo <= neg.hi < Fraction(-1)
        assert Fraction(1) < pos.lo <= pos.hi < Fraction(2)

    def test_no_real_roots(self):
        assert isolate_real_roots(parse("x^2 + 1")) == []

    def test_multiplicities(self):
        got = isolate_real_roots(parse("x^4 - 3*x^2"))
        mids = [float(i.midpoint()) for i in got]
        assert [i.multiplicity for i in got] == [1, 2, 1]
        assert abs(mids[0] + 3**0.5) < 0.05
        assert got[1].lo == got[1].hi == 0
        assert abs(mids[2] - 3**0.5) < 0.05

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            isolate_real_roots(IntPoly())

    def test_largest_real_root_interval(self):
        lo, hi = largest_real_root_interval(parse("x^2 - 3"))
        assert Fraction(17, 10) < lo <= hi < Fraction(9, 5)
        assert largest_real_root_interval(parse("x^2 + 4")) is None


class TestProperties:
    def _assert_valid(self, p, intervals):
        # disjoint and sorted
        for a, b in zip(intervals, intervals[1:]):
            assert a.hi < b.lo
        parts = squarefree_decompose(p)
        # multiplicity sum bounded by degree
        assert sum(i.multiplicity for i in intervals) <= p.degree
        for iv in intervals:
            if iv.lo == iv.hi:
                assert p.evaluate(iv.lo) == 0
                continue
            # exactly one squarefree part changes sign in the bracket
            changing = [
                part
                for part, _ in parts
                if part.evaluate(iv.lo) * part.evaluate(iv.hi) < 0
            ]
            assert len(changing) == 1

    def test_random_polynomials(self):
        rng = random.Random(11)
        for _ in range(120):
            deg = rng.randint(1, 7)
            coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
            p = IntPoly(coeffs)
            if p.degree < 1:
                continue
            self._assert_valid(p, isolate_real_roots(p))

    def test_known_root_counts(self):
        # (x-1)(x-2)(x-3) has exactly three isolated roots
        p = parse("x - 1") * parse("x - 2") * parse("x - 3")
        got = isolate_real_roots(p)
        assert len(got) == 3
        for iv, want in zip(got, (1, 2, 3)):
            assert iv.lo <= want <= iv.hi

    def test_tight_cluster_separated(self):
        # roots at 0 and 1/64 force refinement below the default width
        p = parse("x") * (IntPoly((-1, 64)))
        got = isolate_real_roots(p)
        assert len(got) == 2
        assert got[0].hi < got[1].lo

    def test_json_shape(self):
        iv = isolate_real_roots(parse("x^2 - 2"))[1]
        data = iv.to_json()
        assert set(data) == {"lo", "hi", "approx", "multiplicity"}
        assert abs(data["approx"] - 2**0.5) < 0.02
