import itertools

import pytest
from hypothesis import given, strategies as st

from qshuffle.freealg import (concat_mul, divided_power_word, serre_element,
                              word_vector)
from qshuffle.scalars import qnum
from qshuffle.shuffle import BMElement, bm_unit, iota, is_in_radical, shuffle_mul


def all_words(rank, length):
    return [tuple(w) for w in itertools.product(range(1, rank + 1), repeat=length)]


class TestIota:
    def test_single_letter_plain(self, ctx_a2):
        ctx = ctx_a2
        img = iota(ctx, word_vector(ctx, (1,)))
        assert img.coeffs == {(1,): ctx.base_value(1)}

    def test_single_letter_normalized(self, ctx_a2):
        ctx = ctx_a2
        img = iota(ctx, word_vector(ctx, (1,)), normalized=True)
        assert img == BMElement(ctx, {(1,): ctx.one_frac()})

    def test_grading_zero(self, ctx_a2):
        img = iota(ctx_a2, word_vector(ctx_a2, (1,)))
        assert img[(2,)].is_zero()

    @pytest.mark.parametrize("la,lb", [(a, b) for a in range(4) for b in range(4)
                                       if 0 < a + b <= 5])
    def test_homomorphism(self, ctx_a2, la, lb):
        ctx = ctx_a2
        for wa in all_words(2, la):
            for wb in all_words(2, lb):
                x, y = word_vector(ctx, wa), word_vector(ctx, wb)
                lhs = iota(ctx, concat_mul(x, y))
                rhs = shuffle_mul(iota(ctx, x), iota(ctx, y))
                assert lhs == rhs

    def test_normalized_homomorphism(self, ctx_b2):
        ctx = ctx_b2
        x, y = word_vector(ctx, (1, 2)), word_vector(ctx, (2,))
        lhs = iota(ctx, concat_mul(x, y), normalized=True)
        rhs = shuffle_mul(iota(ctx, x, normalized=True),
                          iota(ctx, y, normalized=True))
        assert lhs == rhs


class TestShuffleProduct:
    def test_unit(self, ctx_a2):
        ctx = ctx_a2
        a = BMElement(ctx, {(1, 2): ctx.v_pow(2), (2, 1): ctx.one_frac()})
        assert shuffle_mul(bm_unit(ctx), a) == a
        assert shuffle_mul(a, bm_unit(ctx)) == a

    def test_image_of_generators(self, ctx_a2):
        ctx = ctx_a2
        lhs = shuffle_mul(iota(ctx, word_vector(ctx, (1,))),
                          iota(ctx, word_vector(ctx, (2,))))
        assert lhs == iota(ctx, word_vector(ctx, (1, 2)))

    @given(st.lists(st.sampled_from([(1,), (2,), (1, 2), (2, 1), (1, 1)]),
                    min_size=3, max_size=3))
    def test_associative(self, ctx_b2, words):
        ctx = ctx_b2
        a, b, c = (iota(ctx, word_vector(ctx, w)) for w in words)
        assert shuffle_mul(shuffle_mul(a, b), c) == shuffle_mul(a, shuffle_mul(b, c))

    @pytest.mark.parametrize("datum_name,k_values", [
        ("ctx_a2", range(6)), ("ctx_b2", range(5)), ("ctx_g2", range(4))])
    def test_divided_power_property(self, datum_name, k_values, request):
        # iota(w[alpha])^k = [k]! iota(DP(alpha,k))
        ctx = request.getfixturevalue(datum_name)
        for alpha in (1, 2):
            gen = iota(ctx, word_vector(ctx, (alpha,)))
            power = bm_unit(ctx)
            for k in k_values:
                fact = ctx.frac(qnum("sym_fact", k,
                                     var=ctx.ring.v(ctx.datum.d[alpha - 1])))
                dp = iota(ctx, divided_power_word(ctx, alpha, k))
                assert power == dp.scaled(fact)
                power = shuffle_mul(power, gen)


class TestQuantumSerre:
    @pytest.mark.parametrize("datum_name", ["ctx_a2", "ctx_b2", "ctx_g2"])
    def test_serre_vanishes(self, datum_name, request):
        ctx = request.getfixturevalue(datum_name)
        for i, j in ((1, 2), (2, 1)):
            assert iota(ctx, serre_element(ctx, i, j)).is_zero()

    @pytest.mark.parametrize("datum_name", ["ctx_a2", "ctx_b2", "ctx_g2"])
    def test_below_serre_order_does_not_vanish(self, datum_name, request):
        # the alternating sum at k < 1 - a_ij is a nonzero multiple of the
        # squashed class, so it must not map to zero
        ctx = request.getfixturevalue(datum_name)
        for i, j in ((1, 2), (2, 1)):
            top = 1 - ctx.datum.a[i - 1][j - 1]
            wj = word_vector(ctx, (j,))
            for k in range(top):
                acc = None
                for l in range(k + 1):
                    term = concat_mul(concat_mul(divided_power_word(ctx, i, l), wj),
                                      divided_power_word(ctx, i, k - l))
                    if (k - l) % 2:
                        term = -term
                    acc = term if acc is None else acc + term
                assert not iota(ctx, acc).is_zero(), (i, j, k)


class TestRadicalMembership:
    def test_generator_not_in_radical(self, ctx_a2):
        assert not is_in_radical(ctx_a2, word_vector(ctx_a2, (1,)))

    def test_serre_in_radical(self, ctx_b2):
        assert is_in_radical(ctx_b2, serre_element(ctx_b2, 2, 1))

    def test_ideal_property(self, ctx_a2):
        ctx = ctx_a2
        s = serre_element(ctx, 1, 2)
        for u in [(), (2,), (1,)]:
            for v in [(), (1,), (2, 1)]:
                elt = concat_mul(concat_mul(word_vector(ctx, u), s),
                                 word_vector(ctx, v))
                assert is_in_radical(ctx, elt)
