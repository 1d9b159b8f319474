import itertools

import pytest

from qshuffle.freealg import (GradedVector, TensorVector, concat_mul, coproduct_r,
                              divided_power_word, serre_element, tensor_mul, unit,
                              word_vector)
from qshuffle.scalars import qnum


def all_words(rank, length):
    return [tuple(w) for w in itertools.product(range(1, rank + 1), repeat=length)]


class TestConcat:
    def test_single_letters(self, ctx_a2):
        x = concat_mul(word_vector(ctx_a2, (1,)), word_vector(ctx_a2, (2,)))
        assert x == word_vector(ctx_a2, (1, 2))

    def test_bilinearity(self, ctx_a2):
        x = word_vector(ctx_a2, (1,)) + word_vector(ctx_a2, (2,))
        y = concat_mul(x, word_vector(ctx_a2, (1,)))
        assert y == word_vector(ctx_a2, (1, 1)) + word_vector(ctx_a2, (2, 1))

    def test_unit(self, ctx_a2):
        x = word_vector(ctx_a2, (1, 2), ctx_a2.v_pow(3))
        assert concat_mul(unit(ctx_a2), x) == x
        assert concat_mul(x, unit(ctx_a2)) == x


class TestCoproduct:
    def test_single_letter_primitive(self, ctx_a2):
        r = coproduct_r(word_vector(ctx_a2, (1,)))
        expected = TensorVector(ctx_a2, {((1,), ()): ctx_a2.one_frac(),
                                         ((), (1,)): ctx_a2.one_frac()})
        assert r == expected

    def test_unit_grouplike(self, ctx_a2):
        assert coproduct_r(unit(ctx_a2)) == TensorVector(
            ctx_a2, {((), ()): ctx_a2.one_frac()})

    def test_worked_two_letter_example(self, ctx_a2):
        # r(w[1,2]) = w[1,2] (x) 1 + v^{-1} w[2] (x) w[1] + w[1] (x) w[2] + 1 (x) w[1,2]
        r = coproduct_r(word_vector(ctx_a2, (1, 2)))
        expected = TensorVector(ctx_a2, {
            ((1, 2), ()): ctx_a2.one_frac(),
            ((2,), (1,)): ctx_a2.v_pow(-1),
            ((1,), (2,)): ctx_a2.one_frac(),
            ((), (1, 2)): ctx_a2.one_frac(),
        })
        assert r == expected

    @pytest.mark.parametrize("la,lb", [(a, b) for a in range(3) for b in range(3)
                                       if 0 < a + b <= 5])
    def test_multiplicative_exhaustive(self, ctx_a2, la, lb):
        for wa in all_words(2, la):
            for wb in all_words(2, lb):
                x, y = word_vector(ctx_a2, wa), word_vector(ctx_a2, wb)
                lhs = coproduct_r(concat_mul(x, y))
                rhs = tensor_mul(coproduct_r(x), coproduct_r(y))
                assert lhs == rhs

    @pytest.mark.parametrize("length", range(1, 6))
    def test_coassociative(self, ctx_a2, length):
        ctx = ctx_a2
        for w in all_words(2, length):
            r = coproduct_r(word_vector(ctx, w))
            left = {}
            right = {}
            for (w1, w2), coeff in r.coeffs.items():
                for (u1, u2), c2 in coproduct_r(word_vector(ctx, w1)).coeffs.items():
                    key = (u1, u2, w2)
                    left[key] = left.get(key, ctx.zero_frac()) + coeff * c2
                for (u1, u2), c2 in coproduct_r(word_vector(ctx, w2)).coeffs.items():
                    key = (w1, u1, u2)
                    right[key] = right.get(key, ctx.zero_frac()) + coeff * c2
            left = {k: v for k, v in left.items() if not v.is_zero()}
            right = {k: v for k, v in right.items() if not v.is_zero()}
            assert left.keys() == right.keys()
            assert all(left[k] == right[k] for k in left)

    def test_grading(self, ctx_g2):
        from qshuffle.cartan import add_colorings, coloring_of_word
        w = (1, 2, 1)
        for (w1, w2) in coproduct_r(word_vector(ctx_g2, w)).coeffs:
            combined = add_colorings(coloring_of_word(w1, 2),
                                     coloring_of_word(w2, 2))
            assert combined == coloring_of_word(w, 2)

    @pytest.mark.parametrize("length", range(1, 5))
    def test_counit(self, ctx_a2, length):
        for w in all_words(2, length):
            r = coproduct_r(word_vector(ctx_a2, w))
            assert r.coeffs[(w, ())] == ctx_a2.one_frac()
            assert r.coeffs[((), w)] == ctx_a2.one_frac()


class TestDividedPowers:
    def test_degree_one(self, ctx_a2):
        assert divided_power_word(ctx_a2, 1, 1) == word_vector(ctx_a2, (1,))

    def test_degree_zero(self, ctx_a2):
        assert divided_power_word(ctx_a2, 1, 0) == unit(ctx_a2)

    def test_degree_two(self, ctx_a2):
        dp = divided_power_word(ctx_a2, 1, 2)
        two = ctx_a2.frac(qnum("sym", 2, var=ctx_a2.ring.v(1)))
        assert dp.scaled(two) == word_vector(ctx_a2, (1, 1))

    @pytest.mark.parametrize("k", range(6))
    def test_power_identity(self, ctx_g2, k):
        # w[i]^k = [k]! DP(i,k) with the long root's quantum factorial
        ctx = ctx_g2
        power = unit(ctx)
        for _ in range(k):
            power = concat_mul(power, word_vector(ctx, (2,)))
        fact = ctx.frac(qnum("sym_fact", k, var=ctx.ring.v(ctx.datum.d[1])))
        assert power == divided_power_word(ctx, 2, k).scaled(fact)


class TestSerreElements:
    def test_commuting_case(self, ctx_d2):
        # a_ij = 0, k = 1: the l = 0 term is +w[j]w[i], so the commutator
        # comes out as w[2,1] - w[1,2]
        s = serre_element(ctx_d2, 1, 2)
        assert s == word_vector(ctx_d2, (2, 1)) - word_vector(ctx_d2, (1, 2))

    def test_a2_expansion(self, ctx_a2):
        ctx = ctx_a2
        s = serre_element(ctx, 1, 2)
        dp2 = divided_power_word(ctx, 1, 2)
        w2 = word_vector(ctx, (2,))
        w121 = concat_mul(concat_mul(word_vector(ctx, (1,)), w2),
                          word_vector(ctx, (1,)))
        expected = concat_mul(dp2, w2) - w121 + concat_mul(w2, dp2)
        assert s == expected

    def test_nonzero_in_free_algebra(self, ctx_g2):
        assert not serre_element(ctx_g2, 1, 2).is_zero()
        assert not serre_element(ctx_g2, 2, 1).is_zero()

    def test_same_root_rejected(self, ctx_a2):
        with pytest.raises(ValueError):
            serre_element(ctx_a2, 1, 1)
