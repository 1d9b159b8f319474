import pytest
from hypothesis import given, strategies as st

from qshuffle.scalars import (LaurentPoly, NonInvertibleError, ScalarError,
                              ScalarFraction, ScalarRing, exact_div,
                              fraction_reduce, qnum)

R = ScalarRing(rank=2, punctures=1)
V = R.v()


def rand_poly(draw_terms):
    out = R.zero()
    for coef, ev, es in draw_terms:
        out = out + R.monomial(coef, (ev, es, 0))
    return out


poly_strategy = st.builds(
    rand_poly,
    st.lists(st.tuples(st.integers(-4, 4), st.integers(-3, 3), st.integers(-2, 2)),
             max_size=4),
)

nonzero_poly = poly_strategy.filter(lambda p: not p.is_zero())


class TestRingOps:
    def test_difference_of_squares(self):
        assert (R.one() + V) * (R.one() - V) == R.one() - R.v(2)

    def test_q_alpha_is_v_power(self):
        # q_alpha with d_alpha = 2 is q^2 = v^4
        assert R.q(1) ** 2 == R.v(4)

    def test_symbol_unit_cancels(self):
        assert R.s(1, 1) * R.s(1, 1, -1) == R.one()

    def test_monomial_unit_inverse(self):
        m = R.monomial(-1, (3, -1, 2))
        assert m * m.inv() == R.one()

    def test_non_unit_inversion_rejected(self):
        with pytest.raises(NonInvertibleError):
            (R.one() + V).inv()
        with pytest.raises(NonInvertibleError):
            R.monomial(2).inv()

    def test_mixed_rings_rejected(self):
        other = ScalarRing(rank=1, punctures=0)
        with pytest.raises(ScalarError):
            R.one() + other.one()

    @given(poly_strategy, poly_strategy, poly_strategy)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    @given(poly_strategy)
    def test_json_round_trip(self, a):
        assert LaurentPoly.from_json(R, a.to_json()) == a


class TestFractions:
    def test_telescoping_factor(self):
        f = fraction_reduce(R.one() - R.q(2), R.one() - R.q(1))
        assert f.is_polynomial()
        assert f.num == R.one() + R.q(1)

    def test_pairing_base_normal_form(self):
        f = fraction_reduce(R.one(), R.one() - R.q(-1))
        assert f.num == R.v(2)
        assert f.den == R.v(2) - R.one()

    def test_zero_normal_form(self):
        f = fraction_reduce(R.zero(), R.one() + V)
        assert f.num.is_zero() and f.den.is_one()

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            fraction_reduce(R.one(), R.zero())

    def test_reduce_cancels_common_factor(self):
        # reduce(x*d, d) = reduce(x, 1) for any nonzero d
        x = R.one() + V + R.v(3)
        for d in (V, R.one() - V, R.one() + R.s(1, 2), R.monomial(3)):
            assert fraction_reduce(x * d, d) == ScalarFraction(x)

    def test_sign_convention(self):
        f = fraction_reduce(R.one(), -(R.one() - V))
        assert f.den.leading()[1] > 0

    @given(nonzero_poly, nonzero_poly, nonzero_poly)
    def test_reduce_idempotent_and_cross_multiplicative(self, x, d, e):
        f = fraction_reduce(x, d)
        again = fraction_reduce(f.num, f.den)
        assert f.num == again.num and f.den == again.den
        # x/d == (x*e)/(d*e) as cross-multiplied representatives
        assert f == fraction_reduce(x * e, d * e)

    @given(poly_strategy, nonzero_poly, poly_strategy, nonzero_poly)
    def test_field_ops(self, a, b, c, d):
        x = ScalarFraction(a, b)
        y = ScalarFraction(c, d)
        assert (x + y) - y == x
        if not c.is_zero():
            assert (x / y) * y == x

    def test_json_round_trip(self):
        f = fraction_reduce(R.one() + R.s(1, 2), R.one() - R.q(1))
        assert ScalarFraction.from_json(R, f.to_json()) == f


class TestExactDivision:
    def test_exact(self):
        a = R.one() + V
        b = R.one() - V + R.v(2)
        assert exact_div(a * b, a) == b

    def test_inexact_returns_none(self):
        assert exact_div(R.one() + V, R.one() - V) is None

    def test_laurent_shift(self):
        a = R.v(-3) * (R.one() + V)
        assert exact_div(a, R.v(2)) == R.v(-5) * (R.one() + V)


class TestQuantumNumbers:
    def test_asym(self):
        assert qnum("asym", 3, var=V) == R.one() + V + R.v(2)

    def test_sym(self):
        assert qnum("sym", 2, var=V) == V + R.v(-1)

    def test_brace(self):
        assert qnum("brace", 2, var=V) == R.v(2) - R.v(-2)

    def test_asym_vs_sym_number(self):
        # (k)_{v^{-2}} = v^{1-k} [k]_v, spot k = 3
        assert qnum("asym", 3, var=R.v(-2)) == R.v(-2) * qnum("sym", 3, var=V)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_asym_vs_sym_factorial(self, k):
        lhs = qnum("asym_fact", k, var=R.v(-2))
        rhs = R.v(-k * (k - 1) // 2) * qnum("sym_fact", k, var=V)
        assert lhs == rhs

    @pytest.mark.parametrize("k,l", [(k, l) for k in range(0, 9)
                                     for l in range(0, 9 - k)])
    def test_asym_vs_sym_binomial(self, k, l):
        lhs = qnum("asym_binom", k + l, l, var=R.v(-2))
        rhs = R.v(-k * l) * qnum("sym_binom", k + l, l, var=V)
        assert lhs == rhs

    def test_binomial_in_scaled_unit(self):
        u = R.v(3)
        assert qnum("sym_binom", 4, 2, var=u) == \
            exact_div(qnum("sym_fact", 4, var=u),
                      qnum("sym_fact", 2, var=u) * qnum("sym_fact", 2, var=u))

    def test_bad_arguments(self):
        with pytest.raises(ScalarError):
            qnum("sym_binom", 2, 3, var=V)
        with pytest.raises(ScalarError):
            qnum("asym", 3, var=R.one() + V)
        with pytest.raises(ScalarError):
            qnum("nope", 1, var=V)
