import pytest

from qshuffle.cartan import (CartanError, SizeError, coloring_of_word,
                             enumerate_words, named_datum, validate_datum,
                             word_count)


class TestValidation:
    def test_a2(self):
        d = validate_datum([[2, -1], [-1, 2]], [1, 1])
        assert d.rank == 2

    def test_g2_symmetrizable(self):
        d = validate_datum([[2, -3], [-1, 2]], [1, 3])
        assert d.inner(1, 2) == d.inner(2, 1) == -3

    def test_positive_off_diagonal_rejected(self):
        with pytest.raises(CartanError) as err:
            validate_datum([[2, 1], [1, 2]])
        assert any("off-diagonal" in v for v in err.value.violations)

    def test_bad_diagonal_rejected(self):
        with pytest.raises(CartanError) as err:
            validate_datum([[1, -1], [-1, 2]], [1, 1])
        assert any("diagonal" in v for v in err.value.violations)

    def test_non_symmetrizable_rejected(self):
        with pytest.raises(CartanError):
            validate_datum([[2, -2], [-1, 2]], [1, 1])

    def test_symmetrizers_found_automatically(self):
        d = validate_datum([[2, -3], [-1, 2]])
        assert d.d == (1, 3)


class TestPresets:
    @pytest.mark.parametrize("name", ["A1", "A3", "B2", "B3", "C2", "C3",
                                      "D2", "D4", "E6", "E7", "E8", "F4", "G2"])
    def test_named_data_valid(self, name):
        d = named_datum(name)
        for i in range(1, d.rank + 1):
            for j in range(1, d.rank + 1):
                assert d.inner(i, j) == d.inner(j, i)

    def test_g2_convention(self):
        d = named_datum("G2")
        assert d.a == ((2, -3), (-1, 2))
        assert d.d == (1, 3)

    def test_d2_is_a1_x_a1(self):
        d = named_datum("D2")
        assert d.a == ((2, 0), (0, 2))

    def test_serre_orders(self):
        # 1 - a_ij values driving the Serre sums
        b2 = named_datum("B2")
        assert sorted(1 - b2.a[i][j] for i in range(2) for j in range(2)
                      if i != j) == [2, 3]
        g2 = named_datum("G2")
        assert sorted(1 - g2.a[i][j] for i in range(2) for j in range(2)
                      if i != j) == [2, 4]

    def test_unknown_name(self):
        with pytest.raises(CartanError):
            named_datum("H3")


class TestInner:
    def test_a2_values(self):
        d = named_datum("A2")
        assert d.inner(1, 1) == 2
        assert d.inner(1, 2) == -1

    def test_g2_values(self):
        d = named_datum("G2")
        assert d.inner(1, 2) == -3
        assert d.inner(2, 2) == 6

    def test_bilinear_extension(self):
        d = named_datum("A2")
        assert d.inner_coloring((1, 1), (1, 0)) == 1   # 2 + (-1)

    def test_out_of_range(self):
        d = named_datum("A2")
        with pytest.raises(IndexError):
            d.inner(0, 1)
        with pytest.raises(IndexError):
            d.inner(1, 3)


class TestWords:
    def test_mixed_content(self):
        assert enumerate_words((1, 1)) == [(1, 2), (2, 1)]

    def test_single_color(self):
        assert enumerate_words((2, 0)) == [(1, 1)]

    def test_count_examples(self):
        assert word_count((2, 1)) == 3

    @pytest.mark.parametrize("c", [(a, b) for a in range(5) for b in range(5)
                                   if 0 < a + b <= 8])
    def test_counts_match_multinomial(self, c):
        words = enumerate_words(c)
        assert len(words) == word_count(c)
        assert words == sorted(words)
        assert all(coloring_of_word(w, 2) == c for w in words)

    def test_rank3_lex_order(self):
        words = enumerate_words((1, 1, 1))
        assert len(words) == 6
        assert words[0] == (1, 2, 3) and words[-1] == (3, 2, 1)

    def test_bound_reports_count(self):
        with pytest.raises(SizeError) as err:
            enumerate_words((6, 6), bound=8)
        assert err.value.count == word_count((6, 6))
