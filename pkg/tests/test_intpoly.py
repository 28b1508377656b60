import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchpoly.errors import InvalidFactor, ZeroPolynomial
from matchpoly.exactalg import IntPoly, root_multiplicity, squarefree_decompose

X = IntPoly.x()


def poly(*coeffs):
    return IntPoly(coeffs)


small_polys = st.builds(IntPoly, st.lists(st.integers(-9, 9), max_size=8))


class TestBasics:
    def test_zero_degree_sentinel(self):
        assert IntPoly().degree == -1
        assert IntPoly((0, 0, 0)).degree == -1
        assert IntPoly().is_zero

    def test_trailing_zeros_stripped(self):
        assert poly(1, 2, 0, 0).coeffs == (1, 2)

    def test_str_and_parse_roundtrip(self):
        p = poly(-4, 0, 10, 0, -6, 0, 1)
        assert str(p) == "x^6 - 6*x^4 + 10*x^2 - 4"
        assert IntPoly.parse(str(p)) == p

    def test_parse_variants(self):
        assert IntPoly.parse("x^2 - 3") == poly(-3, 0, 1)
        assert IntPoly.parse("2*x + 1") == poly(1, 2)
        assert IntPoly.parse("-x") == poly(0, -1)
        assert IntPoly.parse("7") == poly(7)
        assert IntPoly.parse("3x^2 + x") == poly(0, 1, 3)

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            IntPoly.parse("x^2 ++ 1")
        with pytest.raises(ValueError):
            IntPoly.parse("2y + 1")
        with pytest.raises(ValueError):
            IntPoly.parse("")

    def test_json_roundtrip(self):
        p = poly(-4, 0, 10)
        assert IntPoly.from_json(p.to_json()) == p
        with pytest.raises(ValueError):
            IntPoly.from_json([1, 2.5])

    @given(small_polys, small_polys)
    def test_mul_degree_and_commutativity(self, a, b):
        assert a * b == b * a
        if not a.is_zero and not b.is_zero:
            assert (a * b).degree == a.degree + b.degree

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=60)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    def test_pow(self):
        assert (X + IntPoly.one()) ** 2 == poly(1, 2, 1)
        assert X**0 == IntPoly.one()

    def test_evaluate(self):
        p = IntPoly.parse("x^7 - 6*x^5 + 10*x^3 - 4*x")
        assert p.evaluate(1) == 1
        assert p.evaluate(0) == 0
        assert p.evaluate(-2) == -(2**7) + 6 * 2**5 - 10 * 8 + 8

    def test_derivative(self):
        assert poly(5, 3, 0, 2).derivative() == poly(3, 0, 6)


class TestDivision:
    def test_exact_div(self):
        num = poly(-1, 0, 1)  # x^2 - 1
        assert num.exact_div(poly(-1, 1)) == poly(1, 1)
        assert num.exact_div(poly(1, 1)) == poly(-1, 1)
        assert num.exact_div(poly(1, 1, 1)) is None
        assert poly(0, 2).exact_div(poly(0, 4)) is None

    def test_exact_div_zero_divisor(self):
        with pytest.raises(ZeroPolynomial):
            poly(1).exact_div(IntPoly())

    @given(small_polys, small_polys)
    @settings(max_examples=80)
    def test_exact_div_recovers_factor(self, a, b):
        if a.is_zero or b.is_zero:
            return
        assert (a * b).exact_div(b) == a

    def test_divmod_monic(self):
        q, r = poly(1, 2, 3, 4).divmod_monic(poly(1, 1))
        assert poly(1, 1) * q + r == poly(1, 2, 3, 4)
        assert r.degree < 1


class TestGcd:
    def test_simple(self):
        a = poly(-1, 0, 1)  # (x-1)(x+1)
        b = poly(1, 2, 1)  # (x+1)^2
        assert a.gcd(b) == poly(1, 1)

    def test_coprime(self):
        assert poly(-2, 0, 1).gcd(poly(-3, 0, 1)).degree == 0

    def test_content_folded_in(self):
        a = poly(0, 2)  # 2x
        b = poly(0, 0, 4)  # 4x^2
        assert a.gcd(b) == poly(0, 2)

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=40)
    def test_common_factor_detected(self, a, b, g):
        if g.degree < 1:
            return
        d = (a * g).gcd(b * g)
        assert d.exact_div(g.primitive_part()) is not None or (a * g).is_zero


class TestSquarefree:
    def test_already_squarefree(self):
        assert squarefree_decompose(poly(-1, 0, 1)) == [(poly(-1, 0, 1), 1)]

    def test_pure_power(self):
        assert squarefree_decompose(poly(0, 0, 0, 1)) == [(poly(0, 1), 3)]

    def test_mixed(self):
        # x^4 - 3x^2 = x^2 (x^2 - 3)
        got = squarefree_decompose(poly(0, 0, -3, 0, 1))
        assert got == [(poly(0, 1), 2), (poly(-3, 0, 1), 1)]

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            squarefree_decompose(IntPoly())

    def test_random_reconstruction(self):
        rng = random.Random(7)
        for _ in range(150):
            parts = []
            prod = IntPoly.one()
            for mult in range(1, rng.randint(2, 4)):
                f = IntPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 3))] + [1])
                if f.degree < 1:
                    continue
                parts.append((f, mult))
                prod = prod * f**mult
            if prod.degree < 1:
                continue
            got = squarefree_decompose(prod)
            rebuilt = IntPoly.one()
            for part, mult in got:
                rebuilt = rebuilt * part**mult
                assert part.gcd(part.derivative()).degree == 0
            for (p1, _), (p2, _) in zip(got, got[1:]):
                assert p1.gcd(p2).degree == 0
            cont = prod.content() * (1 if prod.leading > 0 else -1)
            assert rebuilt * cont == prod


class TestRootMultiplicity:
    def test_spec_examples(self):
        mu_t9 = IntPoly.parse("x^9 - 8*x^7 + 20*x^5 - 18*x^3 + 5*x")
        assert root_multiplicity(mu_t9, IntPoly.parse("x - 1")) == 1
        mu_p7 = IntPoly.parse("x^7 - 6*x^5 + 10*x^3 - 4*x")
        assert root_multiplicity(mu_p7, IntPoly.parse("x^2 - 3")) == 0

    def test_exact_powers(self):
        f = poly(-2, 0, 1)
        p = f**3 * poly(1, 1)
        k = root_multiplicity(p, f)
        assert k == 3
        assert p.exact_div(f**3) is not None
        assert p.exact_div(f**4) is None

    def test_rejects_bad_divisors(self):
        with pytest.raises(InvalidFactor):
            root_multiplicity(poly(0, 1), poly(0, 2))
        with pytest.raises(InvalidFactor):
            root_multiplicity(poly(0, 1), poly(5))
        with pytest.raises(ZeroPolynomial):
            root_multiplicity(IntPoly(), poly(0, 1))
