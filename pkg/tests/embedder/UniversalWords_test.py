import pytest

from tg_embeddings import errors as err
from tg_embeddings.embedder import UniversalWords as uw
from tg_embeddings.library import AffineLib, SchemaWordLib, WordLib
from tg_embeddings.library.WordFormat import format_word


class TestWords:
    def test_a_word(self):
        assert format_word(uw.a_word()) == "x^-1 y x"

    def test_z_word(self):
        assert format_word(uw.z_word()) == "x y x^-1"

    def test_conjugator(self):
        assert format_word(uw.conjugator(2)) == "x y^2 x y^2 x^-1"

    def test_universal_word_tf_first(self):
        assert format_word(uw.universal_word_tf(1)) == "x y^-1 x^-1 y^-1 x^-1 y x y x y x^-1"
        assert len(uw.universal_word_tf(1)) == 11

    def test_universal_word_first(self):
        assert format_word(uw.universal_word(1)) == "x y^-1 x^-1 y^-1 x^-1 y x y x y x^-2 y^-1 x"
        assert len(uw.universal_word(1)) == 14

    def test_passage_word(self):
        assert format_word(uw.passage_word(2)) == "y^2 x y^2 x^-1"

    def test_passage_word_yz(self):
        assert format_word(uw.passage_word_yz(3)) == "y^3 z^3"

    def test_hnn_word(self):
        assert format_word(uw.hnn_word(1)) == "a^-1 b^-1 a b^-1 a b^-1 a^-1 b a^-1 b a b^-1 a b a^-1 b"

    @pytest.mark.parametrize(
        "word", [uw.universal_word, uw.universal_word_tf, uw.passage_word, uw.passage_word_yz, uw.hnn_word, uw.conjugator]
    )
    def test_index_below_one(self, word):
        with pytest.raises(err.WordError, match=err.UNIVERSAL_INDEX_INVALID):
            word(0)


class TestLengthLaws:
    def test_lengths(self):
        for i in range(1, 201):
            assert len(uw.universal_word(i)) == 4 * i + 10
            assert len(uw.universal_word_tf(i)) == 4 * i + 7
            assert len(uw.passage_word(i)) == 2 * i + 2
            assert len(uw.hnn_word(i)) == 4 * i + 12

    def test_expansions_agree(self):
        for i in range(1, 201):
            assert uw.universal_word(i) == uw.universal_word_expanded(i)
            assert uw.universal_word_tf(i) == uw.universal_word_tf_expanded(i)

    def test_general_is_tf_times_inverse_a(self):
        for i in range(1, 50):
            assert uw.universal_word_tf(i) == WordLib.mul(uw.universal_word(i), uw.a_word())


class TestSchemaImages:
    def test_universal_word_schema(self):
        s = AffineLib.param("s")
        for i in range(1, 12):
            assert SchemaWordLib.instantiate(uw.universal_word_schema(s), {"s": i}) == uw.universal_word(i)
            assert SchemaWordLib.instantiate(uw.universal_word_tf_schema(s), {"s": i}) == uw.universal_word_tf(i)

    def test_shifted_index(self):
        index = AffineLib.add(AffineLib.param("s"), AffineLib.constant(1))
        assert SchemaWordLib.instantiate(uw.universal_word_schema(index), {"s": 3}) == uw.universal_word(4)

    def test_tf_power(self):
        s = AffineLib.param("s")
        for i in range(1, 12):
            expected = WordLib.pow(uw.universal_word_tf(i), i)
            assert SchemaWordLib.instantiate(uw.universal_word_tf_schema(s, s), {"s": i}) == expected

    def test_tf_schema_text(self):
        s = AffineLib.param("s")
        assert SchemaWordLib.format_schema_word(uw.universal_word_tf_schema(s, s)) == (
            "x y^-s x^-1 y^-s x^-1 y^s x y^s x y^s x^-1"
        )
