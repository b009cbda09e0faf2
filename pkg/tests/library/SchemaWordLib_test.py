import random

import pytest

from tg_embeddings import errors as err
from tg_embeddings.library import AffineLib, SchemaWordLib, WordLib

s = AffineLib.param("s")
a_s = SchemaWordLib.syllable("a", s)
a_s_minus_1 = SchemaWordLib.syllable("a", AffineLib.subtract(s, AffineLib.constant(1)))
x = SchemaWordLib.syllable("x")
y_s = SchemaWordLib.syllable("y", None, s)


class TestSchemaWord:
    def test_format(self):
        template = SchemaWordLib.concat(SchemaWordLib.power(a_s, s), SchemaWordLib.inverse(a_s_minus_1))
        assert SchemaWordLib.format_schema_word(template) == "a[s]^s a[s-1]^-1"

    def test_format_empty(self):
        assert SchemaWordLib.format_schema_word(SchemaWordLib.EMPTY) == "1"

    def test_reduce_merges_neighbours(self):
        merged = SchemaWordLib.concat(y_s, SchemaWordLib.syllable("y", None, 2))
        assert SchemaWordLib.format_schema_word(merged) == "y^(s+2)"

    def test_reduce_drops_cancelling_syllables(self):
        assert SchemaWordLib.concat(y_s, SchemaWordLib.inverse(y_s)) == SchemaWordLib.EMPTY

    def test_parametric_power_of_syllable(self):
        assert SchemaWordLib.power(SchemaWordLib.syllable("y", None, 2), s) == SchemaWordLib.syllable(
            "y", None, AffineLib.scale(s, 2)
        )

    def test_parametric_power_of_compound(self):
        with pytest.raises(err.PresentationError, match=err.PARAMETRIC_POWER_OF_COMPOUND):
            SchemaWordLib.power(SchemaWordLib.concat(x, y_s), s)

    def test_params(self):
        assert SchemaWordLib.params(SchemaWordLib.concat(a_s, x)) == frozenset({"s"})
        assert SchemaWordLib.is_concrete(x)

    def test_substitute_constants(self):
        template = SchemaWordLib.syllable("a", AffineLib.param("p"), AffineLib.param("p"))
        assert SchemaWordLib.substitute_constants(template, {"p": 3}) == SchemaWordLib.syllable(
            "a", AffineLib.constant(3), 3
        )


class TestInstantiate:
    def test_instantiate(self):
        template = SchemaWordLib.concat(SchemaWordLib.power(a_s, s), SchemaWordLib.inverse(a_s_minus_1))
        expected = WordLib.mul(WordLib.pow(WordLib.gen("a", 3), 3), WordLib.inv(WordLib.gen("a", 2)))
        assert SchemaWordLib.instantiate(template, {"s": 3}) == expected

    def test_vanishing_exponent_reduces_on_instantiation(self):
        template = SchemaWordLib.concat(x, SchemaWordLib.syllable("y", None, AffineLib.subtract(s, AffineLib.constant(2))), x)
        assert SchemaWordLib.instantiate(template, {"s": 2}) == WordLib.pow(WordLib.gen("x"), 2)

    def test_operations_commute_with_instantiation(self):
        rng = random.Random(3)
        words = [x, y_s, SchemaWordLib.syllable("y", None, AffineLib.negate(s)), a_s, a_s_minus_1]
        for _ in range(1000):
            u = SchemaWordLib.concat(*(rng.choice(words) for _ in range(rng.randint(0, 4))))
            v = SchemaWordLib.concat(*(rng.choice(words) for _ in range(rng.randint(0, 4))))
            env = {"s": rng.randint(1, 5)}
            u_word, v_word = SchemaWordLib.instantiate(u, env), SchemaWordLib.instantiate(v, env)
            assert SchemaWordLib.instantiate(SchemaWordLib.conj(u, v), env) == WordLib.conj(u_word, v_word)
            assert SchemaWordLib.instantiate(SchemaWordLib.comm(u, v), env) == WordLib.comm(u_word, v_word)
            assert SchemaWordLib.instantiate(SchemaWordLib.inverse(u), env) == WordLib.inv(u_word)

    def test_from_word(self):
        w = WordLib.mul(WordLib.gen("x"), WordLib.pow(WordLib.gen("a", 2), -3))
        assert SchemaWordLib.instantiate(SchemaWordLib.from_word(w), {}) == w
