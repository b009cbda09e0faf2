import pytest

from tg_embeddings import errors as err
from tg_embeddings.library import AffineLib, WordLib
from tg_embeddings.presentation import Examples
from tg_embeddings.presentation.PresentationParser import parse, parse_word
from tg_embeddings.types import GeneratorFamily, ParamBound, ParamRange

x = WordLib.gen("x")
y = WordLib.gen("y")
XY = parse("gens x, y;")


def a(i: int):
    return WordLib.gen("a", i)


class TestStatements:
    def test_plain_generators(self):
        p = parse("gens x, y; rels x^2; rels [x, y];")
        assert p.generators == ("x", "y")
        assert p.relators == (WordLib.pow(x, 2), WordLib.comm(x, y))
        assert p.is_instantiated()

    def test_family(self):
        p = parse("gens a[i] for i in 1..3;")
        assert p.families == (GeneratorFamily("a", "i", 1, 3),)

    def test_unbounded_family(self):
        p = parse(Examples.ZINF_SOURCE)
        assert p.families == (GeneratorFamily("a", "i", 1, None),)
        assert p.torsion_free_asserted

    def test_several_relators_per_statement(self):
        p = parse("gens x, y; rels x^2; y^3; x y = y x;")
        assert len(p.relators) == 3

    def test_statements_without_semicolons(self):
        assert parse("gens x rels x^2").relators == (WordLib.pow(x, 2),)

    def test_comments(self):
        p = parse("# cyclic\ngens x; # one generator\nrels x^5;\n")
        assert p.relators == (WordLib.pow(x, 5),)

    def test_empty_source(self):
        p = parse("")
        assert p.generators == () and p.relators == ()


class TestWords:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("x y^-1", WordLib.mul(x, WordLib.inv(y))),
            ("x * y", WordLib.mul(x, y)),
            ("y^x", WordLib.conj(y, x)),
            ("y^(x)", WordLib.conj(y, x)),
            ("y^-x", WordLib.conj(WordLib.inv(y), x)),
            ("y^{x y}", WordLib.conj(y, WordLib.mul(x, y))),
            ("y^-{x y}", WordLib.conj(WordLib.inv(y), WordLib.mul(x, y))),
            ("(x y)^2", WordLib.pow(WordLib.mul(x, y), 2)),
            ("[x, y]", WordLib.comm(x, y)),
            ("-x y", WordLib.mul(WordLib.inv(x), y)),
            ("1", WordLib.IDENTITY),
            ("", WordLib.IDENTITY),
        ],
    )
    def test_parse_word(self, text, expected):
        assert parse_word(text, XY) == expected

    def test_universal_word_source(self):
        w = parse_word("y^{(x y)^2 x^-1} y^-x", XY)
        assert len(w) == 14

    def test_equation(self):
        assert parse("gens x, y; rels x y = y x;").relators == (WordLib.mul(x, y, WordLib.inv(x), WordLib.inv(y)),)

    def test_trivial_relator_dropped(self):
        p = parse("gens x; rels x = x; rels x x^-1;")
        assert p.relators == ()
        assert p.dropped == 2


class TestConstants:
    def test_let(self):
        assert parse("let n = 3; gens x; rels x^n;").relators == (WordLib.pow(x, 3),)

    def test_override(self):
        assert parse("let n = 3; gens x; rels x^n;", {"n": 5}).relators == (WordLib.pow(x, 5),)

    def test_constant_index(self):
        assert parse("let p = 2; gens a[i] for i >= 1; rels a[p]^p;").relators == (WordLib.pow(a(2), 2),)

    def test_prufer_prime(self):
        assert Examples.example("prufer", 3).relators == (WordLib.pow(a(1), 3),)


class TestSchemas:
    def test_rationals(self):
        p = parse(Examples.Q_SOURCE)
        schema, = p.schemas
        assert schema.param_range == ParamRange((ParamBound("s", 2),))
        s = AffineLib.param("s")
        assert schema.template[0].exponent == s
        assert schema.template[1].index == AffineLib.subtract(s, AffineLib.constant(1))

    def test_two_parameters(self):
        schema, = parse(Examples.ZINF_SOURCE).schemas
        assert schema.param_range.params == ("k", "l")

    def test_bounded_range(self):
        schema, = parse("gens a[i] for i >= 1; rels a[s]^2 for s in 2..5;").schemas
        assert schema.param_range == ParamRange((ParamBound("s", 2, 5),))

    def test_parametric_exponent_times_constant(self):
        schema, = parse("let p = 3; gens a[i] for i >= 1; rels (a[s]^s)^p for s >= 1;").schemas
        assert schema.template[0].exponent == AffineLib.param("s", 3)


class TestErrors:
    def test_syntax_error_location(self):
        with pytest.raises(err.DslSyntaxError) as raised:
            parse("gens x;\nrels x^;")
        assert raised.value.line == 2
        assert "line 2" in str(raised.value)

    def test_undeclared_generator(self):
        with pytest.raises(err.UndeclaredGeneratorError, match="line 1"):
            parse("gens x; rels x y;")

    def test_undeclared_in_word(self):
        with pytest.raises(err.UndeclaredGeneratorError):
            parse_word("x z", XY)

    def test_index_out_of_range(self):
        with pytest.raises(err.IndexRangeError):
            parse("gens a[i] for i in 1..3; rels a[4];")

    def test_family_from_zero(self):
        with pytest.raises(err.DslSyntaxError, match=err.FAMILY_LOWER_BELOW_ONE) as raised:
            parse("gens a[i] for i >= 0; rels a[0];")
        assert raised.value.line == 1

    def test_schema_index_out_of_range(self):
        with pytest.raises(err.IndexRangeError):
            parse("gens a[i] for i >= 1; rels a[s-1] for s >= 1;")

    @pytest.mark.parametrize(
        "text",
        [
            "gens x, x;",
            "gens a[i] for j >= 1;",
            "gens x; attrs abelian;",
            "let p = 2; gens a[i] for i >= 1; rels a[p] for p >= 1;",
            "gens a[i] for i >= 1; rels (a[s] a[1])^s for s >= 1;",
            "gens a[i] for i >= 1; rels a;",
            "gens x; rels x[1];",
            "gens a[i] for i >= 1; rels a[t];",
            "gens x; rels x^;",
            "gens a[i] for i >= 1; rels (a[s]^s)^k for s,k >= 1;",
        ],
    )
    def test_rejected(self, text):
        with pytest.raises(err.DslSyntaxError):
            parse(text)
